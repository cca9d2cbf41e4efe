use super::FiniteGroup;
use crate::error::Error;
use crate::report::VerificationReport;

/// `(F, G, ◁, ▷)` with `◁ : G×F → G` and `▷ : G×F → F`, both tabulated on
/// `g·|F| + f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairGroups {
    pub f: FiniteGroup,
    pub g: FiniteGroup,
    /// `g ▷ f`
    pub left: Vec<usize>,
    /// `g ◁ f`
    pub right: Vec<usize>,
}

impl MatchedPairGroups {
    /// # Errors
    ///
    /// [`Error::InvalidInput`] when a table has the wrong length or an
    /// entry out of range. The matched-pair axioms are not checked here.
    pub fn new(f: FiniteGroup, g: FiniteGroup, left: Vec<usize>, right: Vec<usize>) -> Result<Self, Error> {
        let (nf, ng) = (f.order(), g.order());
        if left.len() != ng * nf || left.iter().any(|&x| x >= nf) {
            return Err(Error::InvalidInput(format!("▷ table must have {} entries below {nf}", ng * nf)));
        }
        if right.len() != ng * nf || right.iter().any(|&x| x >= ng) {
            return Err(Error::InvalidInput(format!("◁ table must have {} entries below {ng}", ng * nf)));
        }
        Ok(MatchedPairGroups { f, g, left, right })
    }

    /// Both actions trivial.
    pub fn trivial(f: FiniteGroup, g: FiniteGroup) -> Self {
        let (nf, ng) = (f.order(), g.order());
        let left = (0..ng * nf).map(|k| k % nf).collect();
        let right = (0..ng * nf).map(|k| k / nf).collect();
        MatchedPairGroups { f, g, left, right }
    }

    pub fn nf(&self) -> usize {
        self.f.order()
    }

    pub fn ng(&self) -> usize {
        self.g.order()
    }

    /// `g ▷ f`
    pub fn lt(&self, g: usize, f: usize) -> usize {
        self.left[g * self.nf() + f]
    }

    /// `g ◁ f`
    pub fn rt(&self, g: usize, f: usize) -> usize {
        self.right[g * self.nf() + f]
    }
}

fn exact(r: &mut VerificationReport, id: &str, bad: Option<String>, count: usize) {
    match bad {
        None => r.flag(id, true, ""),
        Some(w) => r.flag(id, false, format!("{count} violations, first at {w}")),
    };
}

/// Exact table checks: both actions, `1◁f = 1`, `g▷1 = 1`,
/// `g▷ff' = (g▷f)((g◁f)▷f')` and `gg'◁f = (g◁(g'▷f))(g'◁f)`.
pub fn verify_matched_pair_groups(p: &MatchedPairGroups) -> VerificationReport {
    let (fg, gg) = (&p.f, &p.g);
    let (nf, ng) = (p.nf(), p.ng());
    let (f1, g1) = (fg.identity(), gg.identity());
    let mut r = VerificationReport::new("matched-pair-groups", 0.0);

    let mut bad = None;
    let mut count = 0;
    let mut note = |ok: bool, w: String| {
        if !ok {
            count += 1;
            bad.get_or_insert(w);
        }
    };
    for g in 0..ng {
        note(p.rt(g, f1) == g, format!("{}◁1", gg.label(g)));
        for f in 0..nf {
            for f2 in 0..nf {
                note(
                    p.rt(p.rt(g, f), f2) == p.rt(g, fg.mul(f, f2)),
                    format!("({}◁{})◁{}", gg.label(g), fg.label(f), fg.label(f2)),
                );
            }
        }
    }
    exact(&mut r, "right-action", bad, count);

    let mut bad = None;
    let mut count = 0;
    let mut note = |ok: bool, w: String| {
        if !ok {
            count += 1;
            bad.get_or_insert(w);
        }
    };
    for f in 0..nf {
        note(p.lt(g1, f) == f, format!("1▷{}", fg.label(f)));
        for g in 0..ng {
            for g2 in 0..ng {
                note(
                    p.lt(g, p.lt(g2, f)) == p.lt(gg.mul(g, g2), f),
                    format!("{}▷({}▷{})", gg.label(g), gg.label(g2), fg.label(f)),
                );
            }
        }
    }
    exact(&mut r, "left-action", bad, count);

    let mut bad = None;
    let mut count = 0;
    for f in 0..nf {
        if p.rt(g1, f) != g1 {
            count += 1;
            bad.get_or_insert(format!("1◁{}", fg.label(f)));
        }
    }
    for g in 0..ng {
        if p.lt(g, f1) != f1 {
            count += 1;
            bad.get_or_insert(format!("{}▷1", gg.label(g)));
        }
    }
    exact(&mut r, "units-fixed", bad, count);

    let mut bad = None;
    let mut count = 0;
    for g in 0..ng {
        for f in 0..nf {
            for f2 in 0..nf {
                let l = p.lt(g, fg.mul(f, f2));
                let rr = fg.mul(p.lt(g, f), p.lt(p.rt(g, f), f2));
                if l != rr {
                    count += 1;
                    bad.get_or_insert(format!("g={} f={} f'={}", gg.label(g), fg.label(f), fg.label(f2)));
                }
            }
        }
    }
    exact(&mut r, "compat-left", bad, count);

    let mut bad = None;
    let mut count = 0;
    for g in 0..ng {
        for g2 in 0..ng {
            for f in 0..nf {
                let l = p.rt(gg.mul(g, g2), f);
                let rr = gg.mul(p.rt(g, p.lt(g2, f)), p.rt(g2, f));
                if l != rr {
                    count += 1;
                    bad.get_or_insert(format!("g={} g'={} f={}", gg.label(g), gg.label(g2), fg.label(f)));
                }
            }
        }
    }
    exact(&mut r, "compat-right", bad, count);
    r
}
