//! Automorphism groups, completeness, holomorphs and semidirect products.
//!
//! An automorphism of `G` is stored as a permutation of `G`'s element
//! indices, so `Aut(G)` and `Hol(G)` are permutation groups on `|G|` points.

use crate::error::{GroupError, Result};
use crate::group::{close, FiniteGroup};
use crate::hom::{hom_from_generator_images, Homomorphism};
use crate::iso::enumerate_automorphisms;
use crate::lattice::class_sizes;
use crate::limits::Limits;
use crate::named::{make_named, NamedGroup};
use crate::perm::{gcd, Perm};
use crate::subgroup::{center, subgroup_generated, Subgroup};

#[derive(Clone, Debug)]
pub struct AutGroup {
    pub base: FiniteGroup,
    /// Every automorphism as a permutation of `base`'s element indices.
    pub as_perm_group: FiniteGroup,
    /// Conjugations by elements of `base`.
    pub inner: Subgroup,
    pub out_order: usize,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.as_perm_group.order()
    }

    /// Image of base element `x` under automorphism `aut`.
    pub fn apply(&self, aut: usize, x: usize) -> usize {
        self.as_perm_group.element(aut).apply(x)
    }
}

fn check_aut_cap(group: &FiniteGroup) -> Result<()> {
    let cap = Limits::current().aut_cap;
    if group.order() > cap {
        return Err(GroupError::order_bound(
            format!("automorphism search on order {}", group.order()),
            cap,
        ));
    }
    Ok(())
}

/// Conjugation `x ↦ g x g⁻¹` as a permutation of element indices.
fn conjugation_perm(group: &FiniteGroup, g: usize) -> Perm {
    Perm::from_images_unchecked((0..group.order()).map(|x| group.conjugate(g, x)).collect())
}

/// Left translation `x ↦ g x` as a permutation of element indices.
fn translation_perm(group: &FiniteGroup, g: usize) -> Perm {
    Perm::from_images_unchecked((0..group.order()).map(|x| group.mul(g, x)).collect())
}

/// Checks that `perm` is an automorphism of `group` written on indices.
fn respects_table(group: &FiniteGroup, perm: &Perm) -> bool {
    let n = group.order();
    perm.degree() == n
        && perm.apply(0) == 0
        && (0..n).all(|a| {
            (0..n).all(|b| perm.apply(group.mul(a, b)) == group.mul(perm.apply(a), perm.apply(b)))
        })
}

pub fn automorphism_group(group: &FiniteGroup) -> Result<AutGroup> {
    check_aut_cap(group)?;
    let limits = Limits::current();
    let maps = enumerate_automorphisms(group, limits.max_order)?;
    if cfg!(debug_assertions) {
        let sizes = class_sizes(group);
        for map in &maps {
            debug_assert!((0..group.order()).all(|x| {
                group.element_order(map[x]) == group.element_order(x) && sizes[map[x]] == sizes[x]
            }));
        }
    }

    let n = group.order();
    let mut gens: Vec<Perm> = Vec::new();
    let mut aut = FiniteGroup::trivial(n);
    for map in maps.iter().skip(1) {
        let p = Perm::from_images_unchecked(map.clone());
        if aut.index_of(&p).is_none() {
            gens.push(p);
            aut = close(n, &gens, limits.max_order)?;
        }
    }
    debug_assert_eq!(aut.order(), maps.len());

    let inner_gens: Vec<usize> = group
        .generator_indices()
        .iter()
        .map(|&g| {
            aut.index_of(&conjugation_perm(group, g))
                .expect("inner automorphism found by search")
        })
        .collect();
    let inner = subgroup_generated(&aut, inner_gens);
    let out_order = aut.order() / inner.order();
    Ok(AutGroup {
        base: group.clone(),
        as_perm_group: aut,
        inner,
        out_order,
    })
}

/// Trivial center and every automorphism inner.
pub fn is_complete(group: &FiniteGroup) -> Result<bool> {
    check_aut_cap(group)?;
    if !center(group).is_trivial() {
        return Ok(false);
    }
    // With trivial center Inn(G) ≅ G, so G is complete exactly when the
    // search finds no more than |G| automorphisms.
    match enumerate_automorphisms(group, group.order()) {
        Ok(maps) => Ok(maps.len() == group.order()),
        Err(GroupError::OrderBoundExceeded { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug)]
pub struct Holomorph {
    /// `G ⋊ Aut(G)` acting on the element indices of `G`.
    pub group: FiniteGroup,
    pub aut: AutGroup,
    /// `g ↦` left translation by `g`.
    pub base_embedding: Homomorphism,
    /// Inclusion of `Aut(G)`; its image is the stabilizer of point 0.
    pub aut_embedding: Homomorphism,
}

impl Holomorph {
    pub fn base_image(&self) -> Subgroup {
        self.base_embedding.image()
    }

    pub fn aut_image(&self) -> Subgroup {
        self.aut_embedding.image()
    }
}

pub fn holomorph(group: &FiniteGroup) -> Result<Holomorph> {
    let aut = automorphism_group(group)?;
    let limit = Limits::current().max_order;
    let order = group.order() * aut.order();
    if order > limit {
        return Err(GroupError::order_bound(
            format!("holomorph of order {order}"),
            limit,
        ));
    }
    let n = group.order();
    let mut gens: Vec<Perm> = group
        .generator_indices()
        .iter()
        .map(|&g| translation_perm(group, g))
        .collect();
    gens.extend(aut.as_perm_group.generators().iter().cloned());
    let hol = close(n, &gens, limit)?;
    debug_assert_eq!(hol.order(), order);

    let locate = |p: &Perm| hol.index_of(p).expect("generated by these permutations");
    let base_map = (0..n)
        .map(|g| locate(&translation_perm(group, g)))
        .collect();
    let base_embedding = Homomorphism::from_map(group, &hol, base_map)?;
    let aut_map = aut.as_perm_group.elements().iter().map(locate).collect();
    let aut_embedding = Homomorphism::from_map(&aut.as_perm_group, &hol, aut_map)?;
    Ok(Holomorph {
        group: hol,
        aut,
        base_embedding,
        aut_embedding,
    })
}

#[derive(Clone, Debug)]
pub struct Semidirect {
    pub group: FiniteGroup,
    pub n_embedding: Homomorphism,
    pub h_embedding: Homomorphism,
}

/// `N ⋊_α H` with `(n₁,h₁)(n₂,h₂) = (n₁·α(h₁)(n₂), h₁h₂)`, realized by the
/// left regular representation on the pairs.
///
/// `alpha` maps `H` into a permutation group of degree `|N|` whose elements
/// are automorphisms of `N` on element indices, such as
/// `automorphism_group(N).as_perm_group`.
pub fn semidirect(n: &FiniteGroup, h: &FiniteGroup, alpha: &Homomorphism) -> Result<Semidirect> {
    if !alpha.domain().same_as(h) {
        return Err(GroupError::InvalidAction(
            "alpha is not defined on H".into(),
        ));
    }
    let target = alpha.codomain();
    if target.degree() != n.order() {
        return Err(GroupError::InvalidAction(format!(
            "alpha acts on {} points but |N| = {}",
            target.degree(),
            n.order()
        )));
    }
    for &s in h.generator_indices() {
        if !respects_table(n, target.element(alpha.apply(s))) {
            return Err(GroupError::InvalidAction(format!(
                "alpha({s}) is not an automorphism of N"
            )));
        }
    }
    let limit = Limits::current().max_order;
    let (nn, nh) = (n.order(), h.order());
    if nn * nh > limit {
        return Err(GroupError::order_bound(
            format!("semidirect product of order {}", nn * nh),
            limit,
        ));
    }

    let act = |hh: usize, x: usize| target.element(alpha.apply(hh)).apply(x);
    let pair_mul = |a: usize, b: usize| {
        let (n1, h1) = (a % nn, a / nn);
        let (n2, h2) = (b % nn, b / nn);
        n.mul(n1, act(h1, n2)) + nn * h.mul(h1, h2)
    };
    let total = nn * nh;
    let translate =
        |a: usize| Perm::from_images_unchecked((0..total).map(|y| pair_mul(a, y)).collect());

    let mut gens: Vec<Perm> = n
        .generator_indices()
        .iter()
        .map(|&x| translate(x))
        .collect();
    gens.extend(h.generator_indices().iter().map(|&y| translate(nn * y)));
    let group = close(total, &gens, limit)?;
    debug_assert_eq!(group.order(), total);

    let locate = |p: &Perm| {
        group
            .index_of(p)
            .expect("pair translations lie in the group")
    };
    let n_map = (0..nn).map(|x| locate(&translate(x))).collect();
    let h_map = (0..nh).map(|y| locate(&translate(nn * y))).collect();
    Ok(Semidirect {
        n_embedding: Homomorphism::from_map(n, &group, n_map)?,
        h_embedding: Homomorphism::from_map(h, &group, h_map)?,
        group,
    })
}

/// `C_n ⋊ C_m` where the generator of `C_m` raises elements of `C_n` to the
/// power `e`. Needs `gcd(e, n) = 1` and `e^m ≡ 1 (mod n)`.
pub fn sdp(n: usize, m: usize, e: usize) -> Result<Semidirect> {
    if n == 0 || m == 0 {
        return Err(GroupError::InvalidParameter(
            "sdp orders must be positive".into(),
        ));
    }
    if n > 1 && gcd(e % n, n) != 1 {
        return Err(GroupError::InvalidParameter(format!(
            "exponent {e} is not a unit mod {n}"
        )));
    }
    if n > 1 && (0..m).fold(1usize, |acc, _| acc * e % n) != 1 % n {
        return Err(GroupError::InvalidParameter(format!(
            "{e}^{m} is not 1 mod {n}"
        )));
    }
    let cn = make_named(NamedGroup::Cyclic(n))?;
    let cm = make_named(NamedGroup::Cyclic(m))?;
    let power = Perm::from_images_unchecked((0..n).map(|x| cn.pow(x, e)).collect());
    let maps = FiniteGroup::generate(n, std::slice::from_ref(&power))?;
    let image = maps.index_of(&power).expect("generator of its own closure");
    let images = vec![image; cm.generator_indices().len()];
    let alpha = hom_from_generator_images(&cm, &maps, &images)?;
    semidirect(&cn, &cm, &alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::direct_product;
    use crate::iso::is_isomorphic;
    use crate::lattice::normal_subgroups;

    fn named(kind: NamedGroup) -> FiniteGroup {
        make_named(kind).unwrap()
    }

    #[test]
    fn small_automorphism_groups() {
        let a5 = automorphism_group(&named(NamedGroup::Cyclic(5))).unwrap();
        assert_eq!(a5.order(), 4);
        assert!(a5.as_perm_group.is_abelian());
        assert_eq!(a5.as_perm_group.order_profile().iter().max(), Some(&4));

        let v = automorphism_group(&named(NamedGroup::ElementaryAbelian { p: 2, k: 2 })).unwrap();
        assert_eq!(v.order(), 6);
        assert!(
            is_isomorphic(&v.as_perm_group, &named(NamedGroup::Symmetric(3)))
                .unwrap()
                .is_some()
        );

        let s3 = automorphism_group(&named(NamedGroup::Symmetric(3))).unwrap();
        assert_eq!((s3.order(), s3.inner.order(), s3.out_order), (6, 6, 1));

        let q8 = automorphism_group(&named(NamedGroup::Quaternion8)).unwrap();
        assert_eq!((q8.order(), q8.inner.order()), (24, 4));
    }

    #[test]
    fn automorphisms_respect_the_table() {
        let g = named(NamedGroup::Dihedral(8));
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order(), 8);
        for p in aut.as_perm_group.elements() {
            assert!(respects_table(&g, p));
        }
        assert_eq!(aut.inner.order(), g.order() / center(&g).order());
    }

    #[test]
    fn completeness() {
        for n in [3, 4, 5] {
            assert!(
                is_complete(&named(NamedGroup::Symmetric(n))).unwrap(),
                "S{n}"
            );
        }
        assert!(!is_complete(&named(NamedGroup::Cyclic(3))).unwrap());
        assert!(!is_complete(&named(NamedGroup::Quaternion8)).unwrap());
        assert!(!is_complete(&named(NamedGroup::Alternating(4))).unwrap());
        assert!(!is_complete(&named(NamedGroup::Alternating(5))).unwrap());
        assert!(is_complete(&FiniteGroup::trivial(1)).unwrap());
        assert!(matches!(
            is_complete(&named(NamedGroup::Symmetric(6))),
            Err(GroupError::OrderBoundExceeded { .. })
        ));
    }

    #[test]
    fn holomorphs_of_cyclic_groups() {
        let h2 = holomorph(&named(NamedGroup::Cyclic(2))).unwrap();
        assert_eq!(h2.group.order(), 2);

        let h3 = holomorph(&named(NamedGroup::Cyclic(3))).unwrap();
        assert!(is_isomorphic(&h3.group, &named(NamedGroup::Symmetric(3)))
            .unwrap()
            .is_some());

        let h5 = holomorph(&named(NamedGroup::Cyclic(5))).unwrap();
        assert_eq!(h5.group.order(), 20);
        assert!(is_complete(&h5.group).unwrap());
    }

    #[test]
    fn holomorph_structure() {
        for kind in [
            NamedGroup::Cyclic(6),
            NamedGroup::Symmetric(3),
            NamedGroup::ElementaryAbelian { p: 2, k: 2 },
        ] {
            let g = named(kind);
            let hol = holomorph(&g).unwrap();
            let base = hol.base_image();
            let aut = hol.aut_image();
            assert!(hol.base_embedding.is_mono() && hol.aut_embedding.is_mono());
            assert!(base.is_normal());
            assert!(base.intersection(&aut).is_trivial());
            let stab = (0..hol.group.order())
                .filter(|&x| hol.group.element(x).apply(0) == 0)
                .count();
            assert_eq!(stab, aut.order());
        }
    }

    #[test]
    fn frobenius_twenty() {
        let s = sdp(5, 4, 2).unwrap();
        assert_eq!(s.group.order(), 20);
        assert!(center(&s.group).is_trivial());
        assert!(s.n_embedding.image().is_normal());
        let hol = holomorph(&named(NamedGroup::Cyclic(5))).unwrap();
        assert!(is_isomorphic(&s.group, &hol.group).unwrap().is_some());
    }

    #[test]
    fn inversion_gives_dihedral_groups() {
        for n in 3..=10 {
            let s = sdp(n, 2, n - 1).unwrap();
            let d = named(NamedGroup::Dihedral(2 * n));
            assert!(is_isomorphic(&s.group, &d).unwrap().is_some(), "n = {n}");
        }
    }

    #[test]
    fn trivial_action_is_direct() {
        let s = sdp(3, 4, 1).unwrap();
        let p =
            direct_product(&named(NamedGroup::Cyclic(3)), &named(NamedGroup::Cyclic(4))).unwrap();
        assert!(is_isomorphic(&s.group, &p.group).unwrap().is_some());
        let h = s.h_embedding.image();
        assert!(h.intersection(&s.n_embedding.image()).is_trivial());
        assert!(normal_subgroups(&s.group).unwrap().contains(&h));
    }

    #[test]
    fn invalid_actions() {
        assert!(matches!(sdp(5, 3, 2), Err(GroupError::InvalidParameter(_))));
        assert!(matches!(sdp(6, 2, 2), Err(GroupError::InvalidParameter(_))));
        let c3 = named(NamedGroup::Cyclic(3));
        let c2 = named(NamedGroup::Cyclic(2));
        let moves_identity = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let target = FiniteGroup::generate(3, std::slice::from_ref(&moves_identity)).unwrap();
        let alpha =
            hom_from_generator_images(&c2, &target, &[target.index_of(&moves_identity).unwrap()])
                .unwrap();
        assert!(matches!(
            semidirect(&c3, &c2, &alpha),
            Err(GroupError::InvalidAction(_))
        ));
    }
}
