//! Group-like and skew-primitive elements.

use std::collections::BTreeMap;

use super::{tensor_of, FinHopf, HopfElement};
use crate::error::{Error, Result};
use crate::linalg::{kernel, SparseVec};

/// True iff `g` is nonzero, `Δg = g ⊗ g` and `ε(g) = 1`.
pub fn is_group_like(h: &FinHopf, g: &HopfElement) -> bool {
    !g.is_zero() && h.counit(g).is_one() && h.comultiply(g) == tensor_of(g, g)
}

/// All group-like elements, in a deterministic order with the unit first.
///
/// Scaled basis vectors are tested directly, then the set is closed under
/// multiplication. Every element returned has been checked exactly. This
/// finds all group-likes whenever they are spanned by basis vectors (group
/// algebras, Taft algebras and their bicrossed products).
pub fn group_likes(h: &FinHopf) -> Vec<HopfElement> {
    let mut found: Vec<HopfElement> = Vec::new();
    let one = h.one();
    if is_group_like(h, &one) {
        found.push(one);
    }
    for i in 0..h.dim() {
        let eps = h.counit_basis(i);
        let Ok(inv) = eps.inv() else { continue };
        let g = h.basis(i).scale(&inv);
        if !found.contains(&g) && is_group_like(h, &g) {
            found.push(g);
        }
    }
    let mut frontier = 0;
    while frontier < found.len() {
        let end = found.len();
        for a in 0..end {
            for b in 0..end {
                if a < frontier && b < frontier {
                    continue;
                }
                let p = h.multiply(&found[a], &found[b]);
                if !found.contains(&p) && is_group_like(h, &p) {
                    found.push(p);
                }
            }
        }
        frontier = end;
    }
    let unit = found.first().cloned();
    let mut rest: Vec<HopfElement> = found.into_iter().skip(1).collect();
    rest.sort();
    unit.into_iter().chain(rest).collect()
}

/// Basis of `{y : Δy = y ⊗ g + h ⊗ y}` for group-likes `g`, `h`.
pub fn skew_primitives(hopf: &FinHopf, g: &HopfElement, h: &HopfElement) -> Result<Vec<HopfElement>> {
    if !is_group_like(hopf, g) || !is_group_like(hopf, h) {
        return Err(Error::InvalidArgument("skew primitives need group-like arguments".into()));
    }
    // Column i of the linear map y -> Δy - y⊗g - h⊗y, stored as rows keyed by (a, b).
    let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for i in 0..hopf.dim() {
        let e = hopf.basis(i);
        let mut image = hopf.comultiply(&e);
        for (k, c) in tensor_of(&e, g) {
            super::add_tensor_term(&mut image, k, &-c);
        }
        for (k, c) in tensor_of(h, &e) {
            super::add_tensor_term(&mut image, k, &-c);
        }
        for (key, c) in image {
            rows.entry(key).or_default().insert(i, c);
        }
    }
    let basis = kernel(rows.into_values(), hopf.dim(), hopf.field());
    Ok(basis.into_iter().map(HopfElement::from_sparse).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::tests::c2_group_algebra;

    #[test]
    fn group_algebra_group_likes_are_basis() {
        let h = c2_group_algebra();
        assert_eq!(group_likes(&h), vec![h.basis(0), h.basis(1)]);
    }

    #[test]
    fn skew_primitives_in_group_algebra() {
        let h = c2_group_algebra();
        let one = h.basis(0);
        let g = h.basis(1);
        // P_{g,1} is spanned by 1 - g, P_{1,1} is zero.
        let p = skew_primitives(&h, &g, &one).unwrap();
        assert_eq!(p.len(), 1);
        assert!(skew_primitives(&h, &one, &one).unwrap().is_empty());
        assert!(skew_primitives(&h, &one.add(&g), &one).is_err());
    }
}
