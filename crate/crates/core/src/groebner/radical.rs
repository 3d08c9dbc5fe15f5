//! Radical membership by the Rabinowitsch trick.

use serde::Serialize;

use crate::algebra::{MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::module::{buchberger_module, ModulePresentation};
use crate::scalar::Scalar;

pub const DEFAULT_DEGREE_CAP: u32 = 20;

/// Outcome of a capped radical-membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    True,
    False,
    /// The capped computation neither produced `1` nor finished.
    Inconclusive,
}

/// Decides `f ∈ √⟨gens⟩` by checking whether `⟨gens, 1 − w·f⟩` is the unit
/// ideal in one extra variable `w`.
pub fn radical_membership<S: Scalar>(
    f: &Polynomial<S>,
    gens: &[Polynomial<S>],
    degree_cap: u32,
) -> Result<Membership> {
    let n = f.nvars();
    if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::Dimension(format!(
            "generator in {} variables, f in {n}",
            g.nvars()
        )));
    }
    let order = MonomialOrder::DegRevLex;
    let w = Polynomial::var(n + 1, order, n);
    let one = Polynomial::constant(n + 1, order, S::one());
    let mut ext: Vec<Polynomial<S>> = gens
        .iter()
        .map(|g| g.extended(1).with_order(order))
        .collect();
    ext.push(one.sub(&w.mul(&f.extended(1).with_order(order))));
    let gb = buchberger_module(&ModulePresentation::ideal(n + 1, order, ext)?, degree_cap);
    Ok(if gb.is_unit_ideal() {
        Membership::True
    } else if gb.is_complete() {
        Membership::False
    } else {
        Membership::Inconclusive
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn var(n: usize, i: usize) -> Polynomial<Q> {
        Polynomial::var(n, MonomialOrder::DegRevLex, i)
    }

    #[test]
    fn square_root_of_a_square() {
        let x = var(2, 0);
        let m = radical_membership(&x, &[x.mul(&x)], DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(m, Membership::True);
    }

    #[test]
    fn unrelated_variable() {
        let (x, y) = (var(2, 0), var(2, 1));
        assert_eq!(
            radical_membership(&y, &[x.mul(&x)], DEFAULT_DEGREE_CAP).unwrap(),
            Membership::False
        );
    }

    #[test]
    fn sum_of_nilpotents() {
        let (x, y) = (var(2, 0), var(2, 1));
        let m =
            radical_membership(&x.add(&y), &[x.mul(&x), y.mul(&y)], DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(m, Membership::True);
    }

    #[test]
    fn tiny_cap_is_inconclusive() {
        let (x, y) = (var(2, 0), var(2, 1));
        let m = radical_membership(&x.add(&y), &[x.pow(3), y.pow(3)], 2).unwrap();
        assert_eq!(m, Membership::Inconclusive);
    }
}
