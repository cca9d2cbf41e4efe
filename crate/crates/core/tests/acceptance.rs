//! The nine acceptance criteria, one line of output each.

mod common;

use common::*;
use cqg_core::constructions::*;
use cqg_core::groups::*;
use cqg_core::hopf::examples::{function_algebra, group_algebra, monoid_bialgebra, sweedler};
use cqg_core::hopf::{check_semisimple_identities, compute_integral, solve_antipode};
use cqg_core::numeric::{sparse, DenseMatrix, Scalar};
use cqg_core::star::{gram_form, is_cqg, verify_all, verify_star_hopf, StarHopfAlgebra, StarStructure};
use cqg_core::Error;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(what()) }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn gram_matrix_of(h: &StarHopfAlgebra) -> Result<DenseMatrix, String> {
    let i = compute_integral(h).map_err(|e| e.to_string())?;
    Ok(gram_form(h, &i).map_err(|e| e.to_string())?.matrix)
}

fn criterion_1() -> Outcome {
    let ((h, report, cqg), dt) = timed(|| {
        let (p, c) = ex615(2);
        let h = build_group_bismash(&p, &c, TOL).unwrap().algebra;
        let r = verify_all(&h, TOL);
        let v = is_cqg(&h, TOL).unwrap();
        (h, r, v)
    });
    ensure(h.dim == 8, || format!("dim {}", h.dim))?;
    ensure(report.overall(), || format!("suite fails: {:?}", report.failures()))?;
    let g = gram_matrix_of(&h)?;
    let dev = g.max_abs_diff(&DenseMatrix::identity(8).scale(Scalar::new(0.25, 0.0)));
    ensure(dev < 1e-9, || format!("Gram deviates from I/4 by {dev:e}"))?;
    ensure(cqg.cqg && (cqg.min_eigenvalue - 0.25).abs() < 1e-9, || format!("min eigenvalue {}", cqg.min_eigenvalue))?;
    ensure(dt < Duration::from_secs(1), || format!("took {dt:?}"))?;
    Ok(format!("dim 8, {} checks pass, Gram = I/4 (dev {dev:.1e}), min eigenvalue {:.3}, {dt:.2?}", report.checks.len(), cqg.min_eigenvalue))
}

fn criterion_2() -> Outcome {
    let n = 3;
    let ((p, h), dt) = timed(|| {
        let (p, c) = ex616(n);
        let h = build_group_bismash(&p, &c, TOL).unwrap().algebra;
        (p, h)
    });
    ensure(h.dim == 18, || format!("dim {}", h.dim))?;
    ensure(is_cqg(&h, TOL).map(|v| v.cqg) == Ok(true), || "not a CQG".into())?;
    let star = &h.star.as_ref().ok_or("no star")?.matrix;
    // ζ/η = e^{2πi(1-2)/3}
    let ratio = Scalar::from_polar(1.0, -2.0 * std::f64::consts::PI / 3.0);
    let (nf, x) = (p.nf(), 1 - p.g.identity());
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let col = x * nf + i * n + j;
            let row = x * nf + ((n - i) % n) * n + (n - j) % n;
            for r in 0..18 {
                let want = if r == row { ratio.powu((i * j) as u32) } else { Scalar::new(0.0, 0.0) };
                dev = dev.max((star[(r, col)] - want).norm());
            }
        }
    }
    ensure(dev < 1e-9, || format!("star table deviates by {dev:e}"))?;
    ensure(dt < Duration::from_secs(2), || format!("took {dt:?}"))?;
    Ok(format!("dim 18 CQG, star (ζ/η)^(ij) table dev {dev:.1e}, {dt:.2?}"))
}

/// `⟨x⇀φ, y⇀φ⟩_t` through the product and star of `dual(H)`, against
/// `(1/n)⟨x, y⟩_φ` from `H`.
fn scaling_residual(h: &StarHopfAlgebra) -> Result<f64, String> {
    let n = h.dim;
    let i = compute_integral(h).map_err(|e| e.to_string())?;
    let t = i.t.clone().ok_or("no t")?;
    let d = dual(h);
    let g = gram_form(h, &i).map_err(|e| e.to_string())?.matrix;
    let harpoon = |x: usize| -> Vec<(usize, Scalar)> {
        sparse::from_dense(&(0..n).map(|k| i.phi_of(h.mul_basis(k, x))).collect::<Vec<_>>())
    };
    let mut worst: f64 = 0.0;
    for x in 0..n {
        let ax = harpoon(x);
        for y in 0..n {
            let ay = d.st(&harpoon(y));
            let prod = d.mul(&ay, &ax);
            let lhs: Scalar = prod.iter().map(|&(k, c)| c * t[k]).sum();
            worst = worst.max((lhs - g[(x, y)] / n as f64).norm());
        }
    }
    Ok(worst)
}

fn criterion_3() -> Outcome {
    let (p, c) = ex615(2);
    let battery = [
        ("CC2", group_algebra(&cqg_core::groups::FiniteGroup::cyclic(2))),
        ("CS3", group_algebra(&FiniteGroup::symmetric3())),
        ("C^C4", function_algebra(&FiniteGroup::cyclic(4))),
        ("6.15", build_group_bismash(&p, &c, TOL).unwrap().algebra),
    ];
    let mut out = Vec::new();
    for (name, h) in &battery {
        let a = is_cqg(h, TOL).map_err(|e| e.to_string())?.cqg;
        let b = is_cqg(&dual(h), TOL).map_err(|e| e.to_string())?.cqg;
        ensure(a == b, || format!("{name}: is_cqg {a} vs dual {b}"))?;
        let r = scaling_residual(h)?;
        ensure(r < 1e-8 * h.dim as f64, || format!("{name}: scaling residual {r:e}"))?;
        out.push(format!("{name} {r:.0e}"));
    }
    Ok(format!("verdicts agree; scaling residuals {}", out.join(", ")))
}

fn criterion_4() -> Outcome {
    let mut out = Vec::new();
    for (name, g, dim) in [("D(CC2)", FiniteGroup::cyclic(2), 4), ("D(CS3)", FiniteGroup::symmetric3(), 36)] {
        let h = group_algebra(&g);
        let ((built, direct), dt) = timed(|| (drinfeld_double(&h, TOL), double_direct(&h, TOL)));
        let built = built.map_err(|e| e.to_string())?.algebra;
        let direct = direct.map_err(|e| e.to_string())?.algebra;
        ensure(built.dim == dim, || format!("{name}: dim {}", built.dim))?;
        ensure(verify_star_hopf(&built, TOL).overall(), || format!("{name}: star axioms fail"))?;
        ensure(is_cqg(&built, TOL).map(|v| v.cqg) == Ok(true), || format!("{name}: not a CQG"))?;
        let diff = structure_difference(&built, &direct);
        ensure(diff < 1e-10, || format!("{name}: paths differ by {diff:e}"))?;
        ensure(dt < Duration::from_secs(10), || format!("{name}: took {dt:?}"))?;
        out.push(format!("{name} paths {diff:.0e} {dt:.2?}"));
    }
    Ok(out.join(", "))
}

fn criterion_5() -> Outcome {
    let g = FiniteGroup::cyclic_square(2);
    let h = function_algebra(&g);
    let t = build_twist(&h, &trivial_cocycle(&h.bialgebra), TOL).map_err(|e| e.to_string())?;
    let same = structure_difference(&twist_product(&h, &t, TOL).map_err(|e| e.to_string())?.algebra, &h);
    let phi_dev = t.phi_map.max_abs_diff(&DenseMatrix::identity(4));
    ensure(same < 1e-12 && phi_dev < 1e-12, || format!("trivial twist: H_χ dev {same:e}, Φ dev {phi_dev:e}"))?;

    let sgn = |e: usize| Scalar::new(if e % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
    let chi = bicharacter_cocycle(4, &[0, 1, 2, 3], 2, |p, q| sgn((p / 2) * (q / 2) + (p % 2) * (q % 2)));
    let t = build_twist(&h, &chi, TOL).map_err(|e| e.to_string())?;
    let i = compute_integral(&h).map_err(|e| e.to_string())?;
    let pos = twist_positivity(&h, &t, &i, TOL).map_err(|e| e.to_string())?;
    ensure(pos.selfadjoint_residual < 1e-9, || format!("self-adjointness {:e}", pos.selfadjoint_residual))?;
    let via_phi = pos.min_eigenvalue > TOL;
    let hc = twist_product(&h, &t, TOL).map_err(|e| e.to_string())?.algebra;
    let direct = is_cqg(&hc, TOL).map_err(|e| e.to_string())?.cqg;
    ensure(via_phi == direct, || format!("Φ verdict {via_phi} vs is_cqg {direct}"))?;
    Ok(format!(
        "trivial twist exact; bicharacter twist self-adjoint ({:.0e}), Φ min eigenvalue {:.3} ⇒ {via_phi} = is_cqg {direct}",
        pos.selfadjoint_residual, pos.min_eigenvalue
    ))
}

fn criterion_6() -> Outcome {
    let mut out = Vec::new();
    for (name, (p, c), seed) in [("6.15", ex615(2), 615), ("6.16", ex616(3), 616)] {
        let t = run_mutations(&p, &c, 25, seed);
        for (k, x) in t.iter().enumerate() {
            ensure(x.disagreements.is_empty(), || format!("{name} ({}) : {:?}", k + 1, x.disagreements))?;
        }
        out.push(format!("{name}: {}/{}/{} comparisons", t[0].mutants, t[1].mutants, t[2].mutants));
    }
    Ok(format!("25 phase mutants per table (σ, τ, α, ψ), zero disagreements; {}", out.join(", ")))
}

fn criterion_7() -> Outcome {
    let star = StarStructure::new(DenseMatrix::identity(4)).map_err(|e| e.to_string())?;
    let sw = StarHopfAlgebra::new(sweedler(), Some(star)).map_err(|e| e.to_string())?;
    let r = is_cqg(&sw, TOL).map(|v| v.cqg);
    ensure(r == Err(Error::NotCosemisimple), || format!("Sweedler gave {r:?}"))?;
    let m = solve_antipode(&monoid_bialgebra());
    ensure(m.is_err(), || "monoid bialgebra got an antipode".into())?;
    Ok(format!("Sweedler: NotCosemisimple; monoid {{1,p}}: {}", m.unwrap_err()))
}

fn criterion_8() -> Outcome {
    let t = yd::trials(8, 10);
    ensure(t.modules_ok, || "a datum is not a D(H)-module".into())?;
    ensure(t.disagreements.is_empty(), || format!("{:?}", t.disagreements))?;
    ensure(t.forms >= 5 && t.invariant > 0 && t.invariant < t.forms, || format!("{t:?}"))?;
    Ok(format!("{} Hermitian forms on 3 YD data over D(CC2), {} invariant, iff holds on all", t.forms, t.invariant))
}

fn criterion_9() -> Outcome {
    let (p5, c5) = ex615(2);
    let (p6, c6) = ex616(3);
    let k4 = function_algebra(&FiniteGroup::cyclic_square(2));
    let sgn = |e: usize| Scalar::new(if e % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
    let chi = bicharacter_cocycle(4, &[0, 1, 2, 3], 2, |p, q| sgn((p / 2) * (q / 2) + (p % 2) * (q % 2)));
    let twisted = twist_product(&k4, &build_twist(&k4, &chi, TOL).unwrap(), TOL).unwrap().algebra;
    let lp = CocycleLinkedPairData::from_matched_pair(&double_pair(&group_algebra(&FiniteGroup::cyclic(3)))).unwrap();
    let mut instances = vec![
        ("CC2", group_algebra(&FiniteGroup::cyclic(2))),
        ("CS3", group_algebra(&FiniteGroup::symmetric3())),
        ("C^C4", function_algebra(&FiniteGroup::cyclic(4))),
        ("C^S3", function_algebra(&FiniteGroup::symmetric3())),
        ("6.15", build_group_bismash(&p5, &c5, TOL).unwrap().algebra),
        ("6.16", build_group_bismash(&p6, &c6, TOL).unwrap().algebra),
        ("D(CC2)", drinfeld_double(&group_algebra(&FiniteGroup::cyclic(2)), TOL).unwrap().algebra),
        ("D(CS3)", drinfeld_double(&group_algebra(&FiniteGroup::symmetric3()), TOL).unwrap().algebra),
        ("twist", twisted),
        ("bismash(D(CC3) pair)", cocycle_bismash(&lp, TOL).unwrap().algebra),
        ("CC2⊗C^C3", tensor_product(&group_algebra(&FiniteGroup::cyclic(2)), &function_algebra(&FiniteGroup::cyclic(3)))),
    ];
    let duals: Vec<_> = instances.iter().map(|(n, h)| (*n, dual(h))).collect();
    instances.extend(duals);
    let mut worst: f64 = 0.0;
    for (name, h) in &instances {
        let i = compute_integral(h).map_err(|e| format!("{name}: {e}"))?;
        ensure(i.integral_space_dim == 1, || format!("{name}: integral space dimension {}", i.integral_space_dim))?;
        let r = check_semisimple_identities(h, &i, TOL);
        ensure(r.overall(), || format!("{name}: {:?}", r.failures()))?;
        worst = worst.max(r.max_residual());
    }
    Ok(format!("{} instances and their duals' identities hold (max residual {worst:.1e}), integral space 1-dimensional", instances.len() / 2))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("example 6.15 reproduction", criterion_1),
        ("example 6.16 reproduction", criterion_2),
        ("duality battery", criterion_3),
        ("double battery", criterion_4),
        ("twist battery", criterion_5),
        ("checker equivalences under mutation", criterion_6),
        ("negative controls", criterion_7),
        ("Yetter-Drinfeld equivalence", criterion_8),
        ("integral identity suite", criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let r = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match r {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg}", k + 1),
            Err(msg) => {
                println!("criterion {}: FAIL  {name}: {msg}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria {failed:?}");
        std::process::exit(1);
    }
}
