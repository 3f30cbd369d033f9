//! Exit-gate suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every comparison is exact.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use lescop::corpus::{self, figure_eight, trefoil, EntryKind};
use lescop::document::{parse, serialize};
use lescop::floer::{chi_closed_form, chi_to_lescop, chi_via_triangle, lescop_to_chi, lescop_to_chi_exact, reduced_knot_chi, BundleSpec};
use lescop::invariants::{alexander, delta2, lescop, sato_levine, Normalization};
use lescop::lens::rep_classes;
use lescop::presentation::build_ribbon_pair;
use lescop::ring::{int, HalfLaurent};
use lescop::sample::Sampler;
use lescop::{Rational, Sign, SurgeryPresentation};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn crit_alexander() -> Outcome {
    let tre = SurgeryPresentation::knot(1, "k", trefoil());
    let fig = SurgeryPresentation::knot(1, "k", figure_eight());
    let want_tre = HalfLaurent::from_int_terms(&[(2, 1), (0, -1), (-2, 1)]);
    let want_fig = HalfLaurent::from_int_terms(&[(2, -1), (0, 3), (-2, -1)]);
    let a = alexander(&tre, "k").map_err(|e| e.to_string())?;
    let b = alexander(&fig, "k").map_err(|e| e.to_string())?;
    ensure(a == want_tre, || format!("trefoil gave {a}"))?;
    ensure(b == want_fig, || format!("figure-eight gave {b}"))?;
    ensure(a.to_string() == "t - 1 + t^-1", || format!("trefoil renders as {a}"))?;
    let (da, db) = (delta2(&tre, "k").unwrap(), delta2(&fig, "k").unwrap());
    ensure(da == int(2) && db == int(-2), || format!("Delta'' = {da}, {db}"))?;
    Ok(format!("trefoil {a}, figure-eight {b}, Delta''(1) = {da}, {db}"))
}

fn crit_symmetry() -> Outcome {
    let hs = [1u64, 2, 3, 5];
    let mut s = Sampler::new(0x5eed_0002);
    let mut checked = 0;
    for i in 0..500 {
        let h = hs[i % hs.len()];
        let n = s.rng().gen_range(1..=3);
        let p = s.presentation(n, 3, 3, h);
        ensure(p.validate().is_empty(), || format!("sample {i} invalid"))?;
        for c in &p.components {
            let a = alexander(&p, &c.name).map_err(|e| e.to_string())?;
            ensure(a.involution() == a, || format!("sample {i} ({}) not symmetric: {a}", c.name))?;
            ensure(a.eval_at_one() == int(h as i64), || format!("sample {i} ({}): Delta(1) = {}", c.name, a.eval_at_one()))?;
            checked += 1;
        }
    }
    Ok(format!("500 presentations, {checked} Alexander polynomials, h in {{1,2,3,5}}"))
}

fn crit_z_cubed() -> Outcome {
    let hs = [1u64, 2, 3, 5];
    let mut s = Sampler::new(0x5eed_0003);
    for i in 0..200 {
        let spec = s.ribbon_spec(-5..=5, 2, hs[i % hs.len()]);
        let p = build_ribbon_pair(&spec).map_err(|e| e.to_string())?;
        let before = alexander(&p, "l1").unwrap();
        let after = alexander(&p.blow_down("l2", Sign::Minus).unwrap(), "l1").unwrap();
        let lift = &HalfLaurent::one() + &HalfLaurent::z().pow(2).scale(&int(spec.s));
        let rest = &after - &(&lift * &before);
        ensure(rest.divides_z_power(3), || format!("pair {i} (s = {}): remainder {rest} not divisible by z^3", spec.s))?;
    }
    Ok("200 ribbon pairs, remainder divisible by z^3".into())
}

fn crit_sato_levine() -> Outcome {
    let mut s = Sampler::new(0x5eed_0004);
    for target in -5..=5 {
        for i in 0..100 {
            let spec = s.ribbon_spec(target..=target, 3, 1);
            let p = build_ribbon_pair(&spec).map_err(|e| e.to_string())?;
            for mode in [Normalization::Derived, Normalization::Literal] {
                let got = sato_levine(&p, mode).map_err(|e| e.to_string())?;
                ensure(got == int(target), || format!("s = {target}, spec {i}, {mode}: got {got}"))?;
            }
        }
    }
    Ok("s in [-5, 5] x 100 specs, both normalizations".into())
}

fn crit_routes() -> Outcome {
    let start = Instant::now();
    let mut s = Sampler::new(0x5eed_0005);
    let mut cases = 0;
    let mut zeros = 0;
    for n in 1..=5 {
        for i in 0..50 {
            let p = s.split_family(n, 2, 1);
            let b = BundleSpec::all_ones(n);
            let closed = chi_closed_form(&p, &b).map_err(|e| format!("n = {n}, case {i}: {e}"))?.chi;
            let tri = chi_via_triangle(&p, &b).map_err(|e| format!("n = {n}, case {i}: {e}"))?.chi;
            ensure(closed == tri, || format!("n = {n}, case {i}: closed {closed}, triangle {tri}"))?;
            if n >= 4 {
                ensure(tri == 0.into(), || format!("n = {n}, case {i}: chi = {tri}"))?;
                zeros += 1;
            }
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{cases} cases, {zeros} vanishing with n >= 4, {} ms", elapsed.as_millis()))
}

fn crit_point_values() -> Outcome {
    for name in ["km-unknot", "km-trefoil", "km-figure-eight"] {
        let e = corpus::lookup(name).ok_or(format!("missing {name}"))?;
        ensure(e.kind == EntryKind::KnotBorromeanSum, || format!("{name} has kind {:?}", e.kind))?;
        let p = &e.document.presentation;
        let chi = chi_closed_form(p, &BundleSpec::all_ones(3)).map_err(|e| e.to_string())?.chi;
        let tri = chi_via_triangle(p, &BundleSpec::all_ones(3)).map_err(|e| e.to_string())?.chi;
        ensure(chi == (-2).into() && tri == chi, || format!("{name}: chi = {chi} / {tri}"))?;
        ensure(reduced_knot_chi(&chi) == int(-1), || format!("{name}: reduced chi {}", reduced_knot_chi(&chi)))?;
    }
    let hs = [1u64, 2, 3, 5];
    let mut s = Sampler::new(0x5eed_0006);
    for i in 0..100 {
        let h = hs[i % hs.len()];
        let spec = s.ribbon_spec(-5..=5, 2, h);
        let p = build_ribbon_pair(&spec).map_err(|e| e.to_string())?;
        let l = lescop(&p, Normalization::Derived).map_err(|e| e.to_string())?;
        ensure(l == int(-(h as i64) * spec.s), || format!("pair {i}: lescop {l}, h = {h}, s = {}", spec.s))?;
    }
    let s1s2 = corpus::lookup("s1xs2").ok_or("missing s1xs2")?;
    let l = lescop(&s1s2.document.presentation, Normalization::Derived).map_err(|e| e.to_string())?;
    ensure(l == Rational::new((-1).into(), 12.into()), || format!("S1 x S2 lescop {l}"))?;
    Ok("chi = -2 and reduced chi = -1 for 3 knots; lescop = -h*s on 100 pairs; S1 x S2 gives -1/12".into())
}

fn crit_conversions() -> Outcome {
    let mut count = 0;
    for e in corpus::corpus().into_iter().filter(|e| e.document.presentation.base_order == 1) {
        let p = &e.document.presentation;
        let n = p.len();
        let l = lescop(p, Normalization::Derived).map_err(|err| format!("{}: {err}", e.name))?;
        let via = lescop_to_chi(&l, n as u32, 1).map_err(|err| format!("{}: {err}", e.name))?;
        let direct = chi_closed_form(p, &BundleSpec::all_ones(n)).map_err(|err| format!("{}: {err}", e.name))?.chi;
        ensure(via == direct, || format!("{}: from lescop {via}, closed form {direct}", e.name))?;
        count += 1;
    }
    let mut s = Sampler::new(0x5eed_0007);
    for b1 in 1..=6u32 {
        for h in 1..=10u64 {
            for _ in 0..100 {
                let x = Rational::new(s.rng().gen_range(-1000..=1000).into(), s.rng().gen_range(1..=60).into());
                let chi = lescop_to_chi_exact(&x, b1, h).map_err(|e| e.to_string())?;
                let back = chi_to_lescop(&chi, b1, h).map_err(|e| e.to_string())?;
                ensure(back == x, || format!("b1 = {b1}, h = {h}: {x} -> {chi} -> {back}"))?;
            }
        }
    }
    Ok(format!("{count} corpus entries with h = 1; 6000 round trips"))
}

fn crit_lens() -> Outcome {
    for p in 1..=256i64 {
        let b = rep_classes(p).map_err(|e| e.to_string())?;
        ensure(b.euler_factor == p as u64, || format!("p = {p}: factor {}", b.euler_factor))?;
        let want = if p % 2 == 1 { (1, (p as u64 - 1) / 2) } else { (2, (p as u64 - 2) / 2) };
        ensure((b.central_classes, b.sphere_classes) == want, || {
            format!("p = {p}: ({}, {}) expected {want:?}", b.central_classes, b.sphere_classes)
        })?;
    }
    Ok("1 <= p <= 256".into())
}

fn crit_bundles() -> Outcome {
    let mut entries = 0;
    let mut bundles = 0;
    for e in corpus::corpus().into_iter().filter(|e| e.document.presentation.len() <= 3) {
        let p = &e.document.presentation;
        let n = p.len();
        let reference = chi_closed_form(p, &BundleSpec::all_ones(n)).map_err(|err| format!("{}: {err}", e.name))?.chi;
        for b in BundleSpec::admissible(n) {
            let chi = chi_closed_form(p, &b).map_err(|err| format!("{}: {err}", e.name))?.chi;
            ensure(chi == reference, || format!("{}: w2 = {:?} gives {chi}, expected {reference}", e.name, b.w2))?;
            bundles += 1;
        }
        entries += 1;
    }
    Ok(format!("{entries} entries, {bundles} admissible bundles"))
}

fn crit_parser() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let entries = corpus::corpus();
    for e in &entries {
        let text = serialize(&e.document);
        let back = parse(&text).map_err(|err| format!("{}: {err}", e.name))?;
        ensure(back == e.document, || format!("{}: parse(serialize) differs", e.name))?;
        ensure(serialize(&back) == text, || format!("{}: serialization not stable", e.name))?;
        let path = root.join("corpus").join(format!("{}.json", e.name));
        let on_disk = std::fs::read_to_string(&path).map_err(|err| format!("{}: {err}", path.display()))?;
        ensure(on_disk == text, || format!("{} differs from serialized corpus", path.display()))?;
    }

    let dir = root.join("tests/fixtures/malformed");
    let mut fixtures: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|d| d.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    fixtures.sort();
    ensure(fixtures.len() == 20, || format!("{} malformed fixtures, expected 20", fixtures.len()))?;
    for f in &fixtures {
        let stem = f.file_stem().unwrap().to_string_lossy().into_owned();
        let class = stem.split('-').next().unwrap();
        let text = std::fs::read_to_string(f).map_err(|e| e.to_string())?;
        let err = match parse(&text) {
            Ok(_) => return Err(format!("{stem}: accepted")),
            Err(e) => e,
        };
        let matches_class = match class {
            "syntax" => matches!(err, lescop::Error::Syntax { .. }),
            "schema" => matches!(err, lescop::Error::Schema(_)),
            "value" => matches!(err, lescop::Error::Value(_)),
            _ => false,
        };
        ensure(matches_class, || format!("{stem}: got {err}"))?;
        let out = Command::new(env!("CARGO_BIN_EXE_lescop"))
            .arg("lescop")
            .arg(f)
            .output()
            .map_err(|e| e.to_string())?;
        let stderr = String::from_utf8_lossy(&out.stderr);
        ensure(out.status.code() == Some(2), || format!("{stem}: exit status {:?}", out.status))?;
        ensure(stderr.contains(&format!("{class} error")), || format!("{stem}: stderr {stderr}"))?;
    }
    Ok(format!("{} corpus files byte-stable; {} malformed fixtures rejected", entries.len(), fixtures.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Alexander exactness", crit_alexander),
        ("symmetry and normalization", crit_symmetry),
        ("z^3 structure", crit_z_cubed),
        ("Sato-Levine round trip", crit_sato_levine),
        ("triangle vs closed form", crit_routes),
        ("point values", crit_point_values),
        ("Lescop/chi conversions", crit_conversions),
        ("lens factor", crit_lens),
        ("bundle independence", crit_bundles),
        ("parser", crit_parser),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
