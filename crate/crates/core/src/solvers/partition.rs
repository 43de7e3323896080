use crate::decision_set::{DecisionSet, Split};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::mass::Mass;
use crate::outcome::OutcomeSet;

/// Largest candidate set the unconstrained partition search accepts.
pub const UNCONSTRAINED_PARTITION_MAX: usize = 24;

/// The realizable split of `c` with the smallest `|p(A) - p(B)|`.
///
/// `A` always holds the smallest member of `c`. Among equally balanced
/// splits the lexicographically smallest `A` wins.
pub fn optimal_partition<M: Mass>(c: &OutcomeSet, d: &Distribution<M>, family: &DecisionSet) -> Result<Split> {
    if c.len() < 2 {
        return Err(Error::Stuck(c.as_slice().to_vec()));
    }
    if let DecisionSet::Unconstrained = family {
        return balanced_subset(c, d);
    }
    let total = d.mass(c);
    let mut best: Option<(M, Split)> = None;
    for split in family.splits(c)? {
        let diff = (total - d.mass(&split.left) - d.mass(&split.left)).abs();
        if best.as_ref().is_none_or(|(b, _)| diff.approx_lt(*b)) {
            best = Some((diff, split));
        }
    }
    best.map(|(_, s)| s).ok_or_else(|| Error::Stuck(c.as_slice().to_vec()))
}

/// Branch-and-bound over subsets containing `c`'s smallest member, visited in
/// lexicographic order so the first optimum found is the tie-break winner.
fn balanced_subset<M: Mass>(c: &OutcomeSet, d: &Distribution<M>) -> Result<Split> {
    let m = c.len();
    if m > UNCONSTRAINED_PARTITION_MAX {
        return Err(Error::TooLarge { n: m, max: UNCONSTRAINED_PARTITION_MAX });
    }
    let members = c.as_slice();
    let masses: Vec<M> = members.iter().map(|&x| d.p(x)).collect();
    // suffix[i] = Σ masses[i..]
    let mut suffix = vec![M::zero(); m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] + masses[i];
    }
    let mut bb = Bnb { masses: &masses, suffix: &suffix, total: suffix[0], best: None, chosen: vec![0] };
    bb.visit(masses[0]);
    let (_, picked) = bb.best.expect("a two-element set always has a split");
    let left: OutcomeSet = picked.iter().map(|&i| members[i]).collect();
    let right = c.difference(&left);
    Ok(Split { left, right })
}

struct Bnb<'a, M> {
    masses: &'a [M],
    suffix: &'a [M],
    total: M,
    best: Option<(M, Vec<usize>)>,
    chosen: Vec<usize>,
}

impl<M: Mass> Bnb<'_, M> {
    fn diff(&self, left: M) -> M {
        (self.total - left - left).abs()
    }

    fn visit(&mut self, mass: M) {
        let m = self.masses.len();
        if self.chosen.len() < m {
            let diff = self.diff(mass);
            if self.best.as_ref().is_none_or(|(b, _)| diff.approx_lt(*b)) {
                self.best = Some((diff, self.chosen.clone()));
            }
        }
        let last = *self.chosen.last().expect("chosen starts nonempty");
        for e in last + 1..m {
            let lo = mass + self.masses[e];
            let hi = lo + self.suffix[e + 1];
            // smallest |2L - total| reachable with L in [lo, hi]
            let two_lo = lo + lo;
            let two_hi = hi + hi;
            let bound = if two_lo > self.total {
                two_lo - self.total
            } else if two_hi < self.total {
                self.total - two_hi
            } else {
                M::zero()
            };
            if let Some((b, _)) = &self.best {
                if !bound.approx_lt(*b) {
                    continue;
                }
            }
            self.chosen.push(e);
            self.visit(lo);
            self.chosen.pop();
        }
    }
}
