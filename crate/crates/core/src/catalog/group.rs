//! Finite group presentations with commutator relators.

use super::{Family, GroupId};
use crate::error::{Error, Result};

/// A word in the free group: `+k` is `x_k`, `−k` is `x_k^{-1}` (1-based).
pub type GroupWord = Vec<i32>;

#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<GroupWord>,
    pub commutator_relators: bool,
}

impl GroupPresentation {
    /// Checks that relators are freely reduced and use known generators,
    /// and that commutator relators abelianize to zero.
    pub fn validate(&self) -> Result<()> {
        let n = self.generators.len() as i32;
        for r in &self.relators {
            if r.iter().any(|&l| l == 0 || l.abs() > n) {
                return Err(Error::InvalidArgument(format!(
                    "relator {r:?} uses an unknown generator"
                )));
            }
            if r.windows(2).any(|w| w[0] == -w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "relator {r:?} is not freely reduced"
                )));
            }
            if self.commutator_relators && abelianize(r, n as usize).iter().any(|&e| e != 0) {
                return Err(Error::InvalidArgument(format!(
                    "relator {r:?} is not in the commutator subgroup"
                )));
            }
        }
        Ok(())
    }
}

/// Exponent-sum vector of a word.
pub fn abelianize(w: &[i32], n: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    for &l in w {
        v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
    }
    v
}

/// Free reduction of a word.
pub fn free_reduce(w: &[i32]) -> GroupWord {
    let mut out: GroupWord = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn inverse(w: &[i32]) -> GroupWord {
    w.iter().rev().map(|l| -l).collect()
}

fn commutator(a: i32, b: i32) -> GroupWord {
    vec![a, b, -a, -b]
}

/// Presentation by generators and relators; `P_n` and `Π_n` carry none.
pub fn group_presentation(g: &GroupId) -> Result<GroupPresentation> {
    let n = g.n;
    let gen = |i: usize, j: usize| g.index_of(i, j).map(|p| p as i32 + 1);
    let mut relators = Vec::new();
    match g.family {
        Family::Free => {}
        Family::PureBraid | Family::ProductOfFree => {
            return Err(Error::Unsupported(format!(
                "no group presentation is catalogued for {}",
                g.name()
            )));
        }
        Family::WeldedPure
        | Family::WeldedPurePlus
        | Family::VirtualPure
        | Family::VirtualPurePlus => {
            // x_ij x_ik x_jk = x_jk x_ik x_ij
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        let (Some(a), Some(b), Some(c)) = (gen(i, j), gen(i, k), gen(j, k)) else {
                            continue;
                        };
                        let lhs = [a, b, c];
                        let rhs = [c, b, a];
                        relators.push(free_reduce(&[&lhs[..], &inverse(&rhs)].concat()));
                    }
                }
            }
            // [x_ij, x_st] = 1 for disjoint pairs
            let gens = g.generator_indices();
            for (p, &(i, j)) in gens.iter().enumerate() {
                for (q, &(s, t)) in gens.iter().enumerate().skip(p + 1) {
                    if i != s && i != t && j != s && j != t {
                        relators.push(commutator(p as i32 + 1, q as i32 + 1));
                    }
                }
            }
            // [x_ik, x_jk] = 1 for distinct i, j, k
            if matches!(g.family, Family::WeldedPure | Family::WeldedPurePlus) {
                for k in 1..=n {
                    for i in 1..=n {
                        for j in i + 1..=n {
                            if i == k || j == k {
                                continue;
                            }
                            if let (Some(a), Some(b)) = (gen(i, k), gen(j, k)) {
                                relators.push(commutator(a, b));
                            }
                        }
                    }
                }
            }
        }
    }
    let p = GroupPresentation {
        generators: g.labels("x"),
        relators,
        commutator_relators: true,
    };
    p.validate()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_has_no_relators() {
        let p = group_presentation(&GroupId::free(2)).unwrap();
        assert_eq!(p.generators.len(), 2);
        assert!(p.relators.is_empty());
    }

    #[test]
    fn virtual_plus_three() {
        let p = group_presentation(&GroupId::virtual_plus(3)).unwrap();
        assert_eq!(p.generators, ["x12", "x13", "x23"]);
        assert_eq!(p.relators, vec![vec![1, 2, 3, -1, -2, -3]]);
    }

    #[test]
    fn welded_three() {
        let p = group_presentation(&GroupId::welded(3)).unwrap();
        assert_eq!(p.generators.len(), 6);
        // six ordered triples plus three commutators [x_ik, x_jk]
        assert_eq!(p.relators.len(), 9);
        for r in &p.relators {
            assert!(abelianize(r, 6).iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn pure_braid_is_unsupported() {
        assert!(group_presentation(&GroupId::pure_braid(3)).is_err());
    }

    #[test]
    fn rejects_bad_relators() {
        let p = GroupPresentation {
            generators: vec!["a".into()],
            relators: vec![vec![1, 1]],
            commutator_relators: true,
        };
        assert!(p.validate().is_err());
        let p = GroupPresentation {
            generators: vec!["a".into()],
            relators: vec![vec![1, -1]],
            commutator_relators: false,
        };
        assert!(p.validate().is_err());
    }
}
