//! Quotients and direct products.

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::hom::{hom_from_generator_images, Homomorphism};
use crate::perm::Perm;
use crate::subgroup::{subgroup_generated, Subgroup};

/// Labels every element with the index of its left coset `xS`, numbering
/// cosets by their least element.
pub(crate) fn left_coset_labels(group: &FiniteGroup, sub: &Subgroup) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; group.order()];
    let mut count = 0;
    for x in 0..group.order() {
        if label[x] != usize::MAX {
            continue;
        }
        for &s in sub.elements() {
            label[group.mul(x, s)] = count;
        }
        count += 1;
    }
    (label, count)
}

/// Permutation of the left cosets induced by left multiplication with `g`.
pub(crate) fn coset_permutation(
    group: &FiniteGroup,
    labels: &[usize],
    reps: &[usize],
    g: usize,
) -> Perm {
    Perm::from_images_unchecked(reps.iter().map(|&r| labels[group.mul(g, r)]).collect())
}

pub(crate) fn coset_representatives(labels: &[usize], count: usize) -> Vec<usize> {
    let mut reps = vec![usize::MAX; count];
    for (x, &c) in labels.iter().enumerate() {
        if reps[c] == usize::MAX {
            reps[c] = x;
        }
    }
    reps
}

/// `G/N` realised as the image of the action on the left cosets of `N`,
/// together with the canonical projection.
pub fn quotient(group: &FiniteGroup, normal: &Subgroup) -> Result<(FiniteGroup, Homomorphism)> {
    normal.check_parent(group)?;
    if !normal.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let (labels, count) = left_coset_labels(group, normal);
    let reps = coset_representatives(&labels, count);
    let gens: Vec<Perm> = group
        .generator_indices()
        .iter()
        .map(|&g| coset_permutation(group, &labels, &reps, g))
        .collect();
    let q = FiniteGroup::generate(count, &gens)?;
    let images: Vec<usize> = gens
        .iter()
        .map(|p| q.index_of(p).expect("generator in closure"))
        .collect();
    let projection = hom_from_generator_images(group, &q, &images)?;
    debug_assert_eq!(projection.kernel(), *normal);
    Ok((q, projection))
}

/// `A × B` acting on the disjoint union of the two point sets.
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub left: Subgroup,
    pub right: Subgroup,
    pub left_embedding: Homomorphism,
    pub right_embedding: Homomorphism,
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<DirectProduct> {
    let degree = a.degree() + b.degree();
    let left_gens: Vec<Perm> = a.generators().iter().map(|p| p.extend_to(degree)).collect();
    let right_gens: Vec<Perm> = b
        .generators()
        .iter()
        .map(|p| p.shift(a.degree(), degree))
        .collect();
    let all: Vec<Perm> = left_gens.iter().chain(&right_gens).cloned().collect();
    let limit = crate::limits::Limits::current().max_order;
    if a.order().saturating_mul(b.order()) > limit {
        return Err(GroupError::order_bound(
            format!("direct product of orders {} and {}", a.order(), b.order()),
            limit,
        ));
    }
    let group = FiniteGroup::generate(degree, &all)?;

    let locate = |perms: &[Perm]| -> Vec<usize> {
        perms
            .iter()
            .map(|p| group.index_of(p).expect("generator in closure"))
            .collect()
    };
    let left_images = locate(&left_gens);
    let right_images = locate(&right_gens);
    let left_embedding = hom_from_generator_images(a, &group, &left_images)?;
    let right_embedding = hom_from_generator_images(b, &group, &right_images)?;
    let left = subgroup_generated(&group, left_images.iter().copied());
    let right = subgroup_generated(&group, right_images.iter().copied());

    debug_assert!(left.is_normal() && right.is_normal());
    debug_assert!(left.intersection(&right).is_trivial());
    debug_assert_eq!(left.order() * right.order(), group.order());

    Ok(DirectProduct {
        group,
        left,
        right,
        left_embedding,
        right_embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;
    use crate::named::{make_named, NamedGroup};
    use crate::subgroup::normal_closure;

    #[test]
    fn s4_mod_v4_is_s3() {
        let s4 = make_named(NamedGroup::Symmetric(4)).unwrap();
        let d = s4
            .index_of(&Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap())
            .unwrap();
        let v4 = normal_closure(&s4, [d]);
        let (q, pi) = quotient(&s4, &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        assert_eq!(pi.kernel(), v4);
        let s3 = make_named(NamedGroup::Symmetric(3)).unwrap();
        assert!(is_isomorphic(&q, &s3).unwrap().is_some());
    }

    #[test]
    fn trivial_and_full_quotients() {
        let d10 = make_named(NamedGroup::Dihedral(10)).unwrap();
        let (q, pi) = quotient(&d10, &Subgroup::trivial(&d10)).unwrap();
        assert_eq!(q.order(), 10);
        assert!(pi.is_iso());
        let (q, _) = quotient(&d10, &Subgroup::whole(&d10)).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_by_non_normal_fails() {
        let s3 = make_named(NamedGroup::Symmetric(3)).unwrap();
        let t = subgroup_generated(&s3, [s3.generator_indices()[0]]);
        assert!(matches!(quotient(&s3, &t), Err(GroupError::NotNormal)));
    }

    #[test]
    fn products() {
        let c2 = make_named(NamedGroup::Cyclic(2)).unwrap();
        let c3 = make_named(NamedGroup::Cyclic(3)).unwrap();
        let p = direct_product(&c2, &c3).unwrap();
        assert_eq!(p.group.order(), 6);
        assert!(p.group.is_abelian());

        let s3 = make_named(NamedGroup::Symmetric(3)).unwrap();
        let p = direct_product(&s3, &s3).unwrap();
        assert_eq!(p.group.order(), 36);
        assert!(p.left.intersection(&p.right).is_trivial());
        assert!(p.left.join(&p.right).is_whole());
        assert!(p.left_embedding.is_mono() && p.right_embedding.is_mono());

        let t = FiniteGroup::trivial(1);
        let p = direct_product(&s3, &t).unwrap();
        assert!(is_isomorphic(&p.group, &s3).unwrap().is_some());
    }
}
