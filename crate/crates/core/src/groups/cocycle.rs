use super::MatchedPairGroups;
use crate::error::Error;
use crate::numeric::{Scalar, ScalarEntry, ONE};
use crate::report::{Check, Status, VerificationReport};

/// Tables `σ(g; f, f')` at `(g·|F| + f)·|F| + f'`, `τ(g, g'; f)` at
/// `(g·|G| + g')·|F| + f` and optionally `α(f, g)` at `f·|G| + g`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupCocycleData {
    pub sigma: Vec<ScalarEntry>,
    pub tau: Vec<ScalarEntry>,
    pub alpha: Option<Vec<ScalarEntry>>,
    nf: usize,
    ng: usize,
}

impl GroupCocycleData {
    /// # Errors
    ///
    /// [`Error::InvalidInput`] on a table of the wrong length, a zero entry
    /// in `σ` or `τ`, or a non-finite value.
    pub fn new(
        p: &MatchedPairGroups,
        sigma: Vec<ScalarEntry>,
        tau: Vec<ScalarEntry>,
        alpha: Option<Vec<ScalarEntry>>,
    ) -> Result<Self, Error> {
        let (nf, ng) = (p.nf(), p.ng());
        let lens = [("σ", sigma.len(), ng * nf * nf), ("τ", tau.len(), ng * ng * nf)];
        for (name, got, want) in lens {
            if got != want {
                return Err(Error::InvalidInput(format!("{name} table has {got} entries, expected {want}")));
            }
        }
        if let Some(a) = &alpha {
            if a.len() != nf * ng {
                return Err(Error::InvalidInput(format!("α table has {} entries, expected {}", a.len(), nf * ng)));
            }
        }
        let all = sigma.iter().chain(&tau).chain(alpha.iter().flatten());
        if all.map(ScalarEntry::value).any(|z| !crate::numeric::is_finite(z)) {
            return Err(Error::InvalidInput("non-finite cocycle entry".into()));
        }
        if sigma.iter().chain(&tau).any(|e| e.value().norm() == 0.0) {
            return Err(Error::InvalidInput("σ and τ must take non-zero values".into()));
        }
        Ok(GroupCocycleData { sigma, tau, alpha, nf, ng })
    }

    /// `σ ≡ 1`, `τ ≡ 1`, `α ≡ 1`.
    pub fn trivial(p: &MatchedPairGroups) -> Self {
        let (nf, ng) = (p.nf(), p.ng());
        let one = || ScalarEntry::Value(ONE);
        GroupCocycleData {
            sigma: (0..ng * nf * nf).map(|_| one()).collect(),
            tau: (0..ng * ng * nf).map(|_| one()).collect(),
            alpha: Some((0..nf * ng).map(|_| one()).collect()),
            nf,
            ng,
        }
    }

    pub fn sigma_index(&self, g: usize, f: usize, f2: usize) -> usize {
        (g * self.nf + f) * self.nf + f2
    }

    pub fn tau_index(&self, g: usize, g2: usize, f: usize) -> usize {
        (g * self.ng + g2) * self.nf + f
    }

    pub fn alpha_index(&self, f: usize, g: usize) -> usize {
        f * self.ng + g
    }

    /// `σ(g; f, f')`
    pub fn s(&self, g: usize, f: usize, f2: usize) -> Scalar {
        self.sigma[self.sigma_index(g, f, f2)].value()
    }

    /// `τ(g, g'; f)`
    pub fn t(&self, g: usize, g2: usize, f: usize) -> Scalar {
        self.tau[self.tau_index(g, g2, f)].value()
    }

    /// `α(f, g)`, `None` without an α table.
    pub fn a(&self, f: usize, g: usize) -> Option<Scalar> {
        self.alpha.as_ref().map(|t| t[self.alpha_index(f, g)].value())
    }

    pub fn with_alpha(mut self, alpha: Option<Vec<ScalarEntry>>) -> Result<Self, Error> {
        if let Some(a) = &alpha {
            if a.len() != self.nf * self.ng {
                return Err(Error::InvalidInput(format!("α table has {} entries, expected {}", a.len(), self.nf * self.ng)));
            }
        }
        self.alpha = alpha;
        Ok(self)
    }
}

/// Residuals `sigma-1`, `sigma-2`, `tau-1`, `tau-2`, `compat-sigma-tau`,
/// each the maximum over all index tuples.
pub fn verify_sigma_tau(p: &MatchedPairGroups, c: &GroupCocycleData, tol: f64) -> VerificationReport {
    let (fg, gg) = (&p.f, &p.g);
    let (nf, ng) = (p.nf(), p.ng());
    let (f1, g1) = (fg.identity(), gg.identity());
    let fm = |a, b| fg.mul(a, b);
    let gm = |a, b| gg.mul(a, b);
    let mut r = VerificationReport::new("sigma-tau", tol);

    let mut s1: f64 = 0.0;
    for g in 0..ng {
        for f in 0..nf {
            for f2 in 0..nf {
                for f3 in 0..nf {
                    let l = c.s(p.rt(g, f), f2, f3) * c.s(g, f, fm(f2, f3));
                    let rr = c.s(g, f, f2) * c.s(g, fm(f, f2), f3);
                    s1 = s1.max((l - rr).norm());
                }
            }
        }
    }
    let mut s2: f64 = 0.0;
    for f in 0..nf {
        for f2 in 0..nf {
            s2 = s2.max((c.s(g1, f, f2) - ONE).norm());
        }
    }
    for g in 0..ng {
        for f in 0..nf {
            s2 = s2.max((c.s(g, f1, f) - ONE).norm()).max((c.s(g, f, f1) - ONE).norm());
        }
    }
    let mut t1: f64 = 0.0;
    for g in 0..ng {
        for g2 in 0..ng {
            for g3 in 0..ng {
                for f in 0..nf {
                    let l = c.t(gm(g, g2), g3, f) * c.t(g, g2, p.lt(g3, f));
                    let rr = c.t(g2, g3, f) * c.t(g, gm(g2, g3), f);
                    t1 = t1.max((l - rr).norm());
                }
            }
        }
    }
    let mut t2: f64 = 0.0;
    for g in 0..ng {
        for f in 0..nf {
            t2 = t2.max((c.t(g1, g, f) - ONE).norm()).max((c.t(g, g1, f) - ONE).norm());
        }
        for g2 in 0..ng {
            t2 = t2.max((c.t(g, g2, f1) - ONE).norm());
        }
    }
    let mut cst: f64 = 0.0;
    for g in 0..ng {
        for g2 in 0..ng {
            for f in 0..nf {
                for f2 in 0..nf {
                    let l = c.s(gm(g, g2), f, f2) * c.t(g, g2, fm(f, f2));
                    let rr = c.s(g, p.lt(g2, f), p.lt(p.rt(g2, f), f2))
                        * c.s(g2, f, f2)
                        * c.t(g, g2, f)
                        * c.t(p.rt(g, p.lt(g2, f)), p.rt(g2, f), f2);
                    cst = cst.max((l - rr).norm());
                }
            }
        }
    }
    r.residual("sigma-1", s1)
        .residual("sigma-2", s2)
        .residual("tau-1", t1)
        .residual("tau-2", t2)
        .residual("compat-sigma-tau", cst);
    r
}

/// Star conditions `cond-0` … `cond-3` on `α` and the positivity of
/// `α(f⁻¹, g◁f)σ(g; f, f⁻¹)`.
///
/// The `positivity` entry carries the minimum real part as its residual
/// and passes when that margin exceeds `tol`; `positivity-imaginary` is the
/// largest imaginary part.
pub fn verify_alpha(p: &MatchedPairGroups, c: &GroupCocycleData, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("alpha", tol);
    if c.alpha.is_none() {
        r.flag("alpha-present", false, "no α table");
        return r;
    }
    let (fg, gg) = (&p.f, &p.g);
    let (nf, ng) = (p.nf(), p.ng());
    let (f1, g1) = (fg.identity(), gg.identity());
    let a = |f, g| c.a(f, g).expect("alpha present");
    let finv = |f| fg.inv(f);

    let mut c0: f64 = 0.0;
    for g in 0..ng {
        c0 = c0.max((a(f1, g) - ONE).norm());
    }
    for f in 0..nf {
        c0 = c0.max((a(f, g1) - ONE).norm());
    }
    let mut c1: f64 = 0.0;
    for f in 0..nf {
        for g in 0..ng {
            c1 = c1.max((a(f, g) * a(finv(f), p.rt(g, f)).conj() - ONE).norm());
        }
    }
    let mut c2: f64 = 0.0;
    for g in 0..ng {
        for fa in 0..nf {
            for fb in 0..nf {
                let ff = fg.mul(fa, fb);
                let l = a(fa, g) * a(fb, p.rt(g, fa)) * c.s(g, fa, fb);
                let rr = a(ff, g) * c.s(p.rt(g, ff), finv(fb), finv(fa)).conj();
                c2 = c2.max((l - rr).norm());
            }
        }
    }
    let mut c3: f64 = 0.0;
    for f in 0..nf {
        for ga in 0..ng {
            for gb in 0..ng {
                let l = a(f, gg.mul(ga, gb)) * c.t(ga, gb, f);
                let rr = a(p.lt(gb, f), ga)
                    * a(f, gb)
                    * c.t(p.rt(ga, p.lt(gb, f)), p.rt(gb, f), finv(f)).conj();
                c3 = c3.max((l - rr).norm());
            }
        }
    }
    let mut margin = f64::INFINITY;
    let mut imag: f64 = 0.0;
    for g in 0..ng {
        for f in 0..nf {
            let v = a(finv(f), p.rt(g, f)) * c.s(g, f, finv(f));
            margin = margin.min(v.re);
            imag = imag.max(v.im.abs());
        }
    }
    r.residual("cond-0", c0).residual("cond-1", c1).residual("cond-2", c2).residual("cond-3", c3);
    r.push(Check {
        check_id: "positivity".into(),
        status: if margin > tol { Status::Pass } else { Status::Fail },
        residual: margin,
        detail: "min Re α(f⁻¹,g◁f)σ(g;f,f⁻¹)".into(),
    });
    r.residual("positivity-imaginary", imag);
    r
}

/// `(star, cqg)` read off a [`verify_alpha`] report: the star needs
/// `cond-0` … `cond-3`, compactness also needs both positivity entries.
pub fn alpha_verdicts(r: &VerificationReport) -> (bool, bool) {
    let ok = |id: &str| r.checks.iter().any(|c| c.check_id == id && c.status == Status::Pass);
    let star = ["cond-0", "cond-1", "cond-2", "cond-3"].iter().all(|id| ok(id));
    (star, star && ok("positivity") && ok("positivity-imaginary"))
}

/// `α(f, g) = σ(g; f, f⁻¹)⁻¹`, exact when the σ entry is a root of unity.
pub fn alpha_from_sigma(p: &MatchedPairGroups, c: &GroupCocycleData) -> Vec<ScalarEntry> {
    let (nf, ng) = (p.nf(), p.ng());
    let mut out = Vec::with_capacity(nf * ng);
    for f in 0..nf {
        for g in 0..ng {
            let e = &c.sigma[c.sigma_index(g, f, p.f.inv(f))];
            out.push(match e {
                ScalarEntry::Root(z) => ScalarEntry::Root(z.inv()),
                ScalarEntry::Value(v) => ScalarEntry::Value(v.inv()),
            });
        }
    }
    out
}

/// `max ||σ| − 1|` and `max ||τ| − 1|` as `sigma-unimodular` and
/// `tau-unimodular`.
pub fn unimodularity(c: &GroupCocycleData, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("unimodularity", tol);
    let dev = |t: &[ScalarEntry]| t.iter().map(|e| (e.value().norm() - 1.0).abs()).fold(0.0, f64::max);
    r.residual("sigma-unimodular", dev(&c.sigma)).residual("tau-unimodular", dev(&c.tau));
    r
}

/// The conditions equivalent to the star and compactness conditions when
/// `α ≡ 1`: `σ(g◁ff'; f'⁻¹, f⁻¹) = conj σ(g; f, f')`,
/// `τ(g◁(g'▷f), g'◁f; f⁻¹) = conj τ(g, g'; f)` and `σ(g; f, f⁻¹) > 0`.
pub fn trivial_alpha_conditions(p: &MatchedPairGroups, c: &GroupCocycleData, tol: f64) -> VerificationReport {
    let fg = &p.f;
    let (nf, ng) = (p.nf(), p.ng());
    let mut r = VerificationReport::new("trivial-alpha", tol);
    let mut cs: f64 = 0.0;
    for g in 0..ng {
        for f in 0..nf {
            for f2 in 0..nf {
                let l = c.s(p.rt(g, fg.mul(f, f2)), fg.inv(f2), fg.inv(f));
                cs = cs.max((l - c.s(g, f, f2).conj()).norm());
            }
        }
    }
    let mut ct: f64 = 0.0;
    for g in 0..ng {
        for g2 in 0..ng {
            for f in 0..nf {
                let l = c.t(p.rt(g, p.lt(g2, f)), p.rt(g2, f), fg.inv(f));
                ct = ct.max((l - c.t(g, g2, f).conj()).norm());
            }
        }
    }
    let mut margin = f64::INFINITY;
    let mut imag: f64 = 0.0;
    for g in 0..ng {
        for f in 0..nf {
            let v = c.s(g, f, fg.inv(f));
            margin = margin.min(v.re);
            imag = imag.max(v.im.abs());
        }
    }
    r.residual("conj-sigma", cs).residual("conj-tau", ct);
    r.push(Check {
        check_id: "sigma-positive".into(),
        status: if margin > tol && imag <= tol { Status::Pass } else { Status::Fail },
        residual: margin,
        detail: format!("min Re σ(g;f,f⁻¹), max |Im| {imag:e}"),
    });
    r
}
