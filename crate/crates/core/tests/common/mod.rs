//! Mutation harness shared by the group tests and the acceptance run.
#![allow(dead_code)]

use cqg_core::constructions::{
    andruskiewitsch_conditions, check_star_lift, verify_singer_conditions, CocycleLinkedPairData, StarLiftData,
};
use cqg_core::groups::*;
use cqg_core::hopf::{solve_antipode, verify_bialgebra};
use cqg_core::numeric::{RootOfUnity, Scalar, ScalarEntry, SparseMap};
use cqg_core::star::{is_cqg, verify_star_hopf, StarHopfAlgebra};
use cqg_core::Status;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;

pub fn root(s: &str) -> RootOfUnity {
    s.parse().unwrap()
}

/// Example 6.15 with `ζ = η = e^{2πi/n}`.
pub fn ex615(n: usize) -> (MatchedPairGroups, GroupCocycleData) {
    let z = root(&format!("1/{n}"));
    generate_example(ExampleKind::TauFamily, n, z, z).unwrap()
}

/// Example 6.16 with `ζ = e^{2πi/n}`, `η = ζ²`.
pub fn ex616(n: usize) -> (MatchedPairGroups, GroupCocycleData) {
    generate_example(ExampleKind::SigmaFamily, n, root(&format!("1/{n}")), root(&format!("2/{n}"))).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    Sigma,
    Tau,
    Alpha,
    Psi,
}

#[derive(Debug, Default)]
pub struct Tally {
    pub mutants: usize,
    /// mutants on which each side of the equivalence held
    pub positive: usize,
    pub disagreements: Vec<String>,
}

impl Tally {
    fn record(&mut self, left: bool, right: bool, what: String) {
        self.mutants += 1;
        self.positive += left as usize;
        if left != right {
            self.disagreements.push(what);
        }
    }
}

const PHASES: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 3.0];

fn phase(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_polar(1.0, PHASES[rng.gen_range(0..PHASES.len())])
}

fn mutate_entry(t: &mut [ScalarEntry], k: usize, z: Scalar) {
    t[k] = ScalarEntry::Value(t[k].value() * z);
}

/// One mutant per call: a single entry of the chosen table times a phase.
pub fn mutant(c: &GroupCocycleData, which: Table, rng: &mut ChaCha8Rng) -> (GroupCocycleData, String) {
    let mut m = c.clone();
    let z = phase(rng);
    let tab: &mut Vec<ScalarEntry> = match which {
        Table::Sigma => &mut m.sigma,
        Table::Tau => &mut m.tau,
        Table::Alpha => m.alpha.as_mut().expect("alpha present"),
        Table::Psi => unreachable!("ψ is mutated on the linked pair"),
    };
    let k = rng.gen_range(0..tab.len());
    mutate_entry(tab, k, z);
    (m, format!("{which:?}[{k}]·e^{{{}i}}", z.arg()))
}

/// (i): bialgebra axioms of the direct construction vs `verify_sigma_tau`.
pub fn verdict_i(p: &MatchedPairGroups, c: &GroupCocycleData) -> (bool, bool) {
    let b = group_bismash_bialgebra(p, c).unwrap();
    (verify_bialgebra(&b, TOL).overall(), verify_sigma_tau(p, c, TOL).overall())
}

/// (ii): star and CQG verdicts of the algebra vs those of `verify_alpha`;
/// `None` when σ, τ do not give a Hopf algebra.
pub fn verdict_ii(p: &MatchedPairGroups, c: &GroupCocycleData) -> Option<((bool, bool), (bool, bool))> {
    if !verify_sigma_tau(p, c, TOL).overall() {
        return None;
    }
    let hopf = solve_antipode(&group_bismash_bialgebra(p, c).unwrap()).unwrap();
    let star = group_bismash_star(p, c).unwrap();
    let h = StarHopfAlgebra::new(hopf, Some(star)).unwrap();
    let star_ok = verify_star_hopf(&h, TOL).overall();
    let cqg = star_ok && is_cqg(&h, TOL).map(|v| v.cqg).unwrap_or(false);
    Some(((star_ok, cqg), alpha_verdicts(&verify_alpha(p, c, TOL))))
}

const AND: [&str; 4] = ["and1", "and2", "and3", "and4"];

/// (iii): on a cocycle Singer pair, `cero`–`cuatro` for the canonical γ vs
/// `and1`–`and4`. Both sides include the Singer-pair axioms.
pub fn verdict_iii(d: &CocycleLinkedPairData) -> (bool, bool) {
    let Ok(s) = verify_singer_conditions(d, TOL) else {
        return (false, false);
    };
    let core = s.checks.iter().filter(|c| !AND.contains(&c.check_id.as_str())).all(|c| c.status != Status::Fail);
    let lift = StarLiftData::chi_canonical(d, TOL).map(|l| check_star_lift(d, &l, TOL).overall()).unwrap_or(false);
    let and = andruskiewitsch_conditions(d, TOL).map(|r| r.overall()).unwrap_or(false);
    (core && lift, core && and)
}

pub fn psi_mutant(d: &CocycleLinkedPairData, rng: &mut ChaCha8Rng) -> Option<(CocycleLinkedPairData, String)> {
    let mut psi: SparseMap = d.psi.clone();
    let x = rng.gen_range(0..psi.cols.len());
    if psi.cols[x].is_empty() {
        return None;
    }
    let k = rng.gen_range(0..psi.cols[x].len());
    let z = phase(rng);
    psi.cols[x][k].1 *= z;
    let m = d.with_maps(d.action.clone(), d.coaction.clone(), d.chi.clone(), psi).ok()?;
    Some((m, format!("psi[{x}][{k}]·e^{{{}i}}", z.arg())))
}

/// Runs `per_table` mutants of each table on the given data and tallies
/// the three equivalences.
pub fn run_mutations(
    p: &MatchedPairGroups,
    c: &GroupCocycleData,
    per_table: usize,
    seed: u64,
) -> [Tally; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t: [Tally; 3] = Default::default();
    let mut whole = vec![(c.clone(), "unmutated".to_string())];
    for (name, z) in [("-1", Scalar::new(-1.0, 0.0)), ("i", Scalar::new(0.0, 1.0))] {
        let mut m = c.clone();
        let ng = p.ng();
        for (k, e) in m.alpha.as_mut().expect("alpha present").iter_mut().enumerate() {
            if k / ng != p.f.identity() && k % ng != p.g.identity() {
                *e = ScalarEntry::Value(e.value() * z);
            }
        }
        whole.push((m, format!("alpha rows f≠1, g≠1 times {name}")));
    }
    for (m, what) in whole {
        let (l, r) = verdict_i(p, &m);
        t[0].record(l, r, format!("(i) {what}"));
        if let Some(((s1, q1), (s2, q2))) = verdict_ii(p, &m) {
            t[1].record(s1, s2, format!("(ii) star {what}"));
            t[1].record(q1, q2, format!("(ii) cqg {what}"));
        }
        let (l, r) = verdict_iii(&encode_as_linked_pair(p, &m).unwrap());
        t[2].record(l, r, format!("(iii) {what}"));
    }
    for which in [Table::Sigma, Table::Tau, Table::Alpha] {
        for _ in 0..per_table {
            let (m, what) = mutant(c, which, &mut rng);
            let (l, r) = verdict_i(p, &m);
            t[0].record(l, r, format!("(i) {what}"));
            if let Some(((s1, q1), (s2, q2))) = verdict_ii(p, &m) {
                t[1].record(s1, s2, format!("(ii) star {what}"));
                t[1].record(q1, q2, format!("(ii) cqg {what}"));
            }
            if which != Table::Alpha {
                let d = encode_as_linked_pair(p, &m).unwrap();
                let (l, r) = verdict_iii(&d);
                t[2].record(l, r, format!("(iii) {what}"));
            }
        }
    }
    let base = encode_as_linked_pair(p, c).unwrap();
    let mut done = 0;
    while done < per_table {
        if let Some((d, what)) = psi_mutant(&base, &mut rng) {
            let (l, r) = verdict_iii(&d);
            t[2].record(l, r, format!("(iii) {what}"));
            done += 1;
        }
    }
    t
}

pub mod yd {
    use cqg_core::constructions::{drinfeld_double, yetter_drinfeld_module};
    use cqg_core::groups::FiniteGroup;
    use cqg_core::hopf::examples::group_algebra;
    use cqg_core::numeric::{DenseMatrix, Scalar};
    use cqg_core::star::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::TOL;

    fn c(x: f64) -> Scalar {
        Scalar::new(x, 0.0)
    }

    /// `(action of x, degree of each basis vector)` over `ℂC₂`, `0 = 1`, `1 = x`.
    fn data() -> Vec<(DenseMatrix, [usize; 2])> {
        let swap = DenseMatrix::from_vec(2, 2, vec![c(0.0), c(1.0), c(1.0), c(0.0)]).unwrap();
        vec![
            (swap, [1, 1]),
            (DenseMatrix::identity(2), [0, 1]),
            (DenseMatrix::diagonal(&[c(1.0), c(-1.0)]), [0, 1]),
        ]
    }

    /// Cycles through forms invariant for the first datum, diagonal forms
    /// and unconstrained Hermitian forms.
    fn random_form(rng: &mut ChaCha8Rng, kind: usize) -> DenseMatrix {
        let a = rng.gen_range(1.0..3.0);
        let d = rng.gen_range(1.0..3.0);
        let b = Scalar::new(rng.gen_range(-0.9..0.9), rng.gen_range(-0.9..0.9));
        match kind % 3 {
            0 => DenseMatrix::from_vec(2, 2, vec![c(a), c(b.re), c(b.re), c(a)]).unwrap(),
            1 => DenseMatrix::diagonal(&[c(a), c(d)]),
            _ => DenseMatrix::from_vec(2, 2, vec![c(a), b, b.conj(), c(d)]).unwrap(),
        }
    }

    #[derive(Debug, Default)]
    pub struct YdTally {
        pub forms: usize,
        pub invariant: usize,
        pub disagreements: Vec<String>,
        /// every assembled datum is a `D(H)`-module
        pub modules_ok: bool,
    }

    /// On `D(ℂC₂)`: the `D(H)`-invariance residual is below `TOL` iff both
    /// the action and the coaction residuals are.
    pub fn trials(seed: u64, per_datum: usize) -> YdTally {
        let h = group_algebra(&FiniteGroup::cyclic(2));
        let d = drinfeld_double(&h, TOL).unwrap().algebra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut t = YdTally { modules_ok: true, ..Default::default() };
        for (k, (x, deg)) in data().into_iter().enumerate() {
            let module = ModuleData::new(2, Side::Left, vec![DenseMatrix::identity(2), x]).unwrap();
            let comod = ComoduleData::from_terms(2, Side::Left, 2, (0..2).map(|v| (v, v, deg[v], c(1.0)))).unwrap();
            let yd = yetter_drinfeld_module(&h.hopf, &module, &comod).unwrap();
            t.modules_ok &= verify_module(&module, &h.bialgebra, TOL).overall()
                && verify_comodule(&comod, &h.bialgebra, TOL).overall()
                && verify_module(&yd, &d.bialgebra, TOL).overall();
            for i in 0..per_datum {
                let f = random_form(&mut rng, i);
                let ra = check_star_representation(&module, &h, &f, TOL).unwrap();
                let rc = check_comodule_invariance(&comod, &h, &f, TOL).unwrap();
                let rd = check_star_representation(&yd, &d, &f, TOL).unwrap();
                let both = ra < TOL && rc < TOL;
                t.forms += 1;
                t.invariant += both as usize;
                if (rd < TOL) != both {
                    t.disagreements.push(format!("datum {k} form {i}: action {ra:e} coaction {rc:e} double {rd:e}"));
                }
            }
        }
        t
    }
}
