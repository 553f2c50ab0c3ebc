//! Essential subgroups, `e(G)`, the socle, and essentialization of normal
//! embeddings.
//!
//! A normal subgroup `E` of `G` is essential when every nontrivial normal
//! subgroup of `G` meets `E` nontrivially. In a finite group every nontrivial
//! normal subgroup contains a minimal normal one, so it suffices to test `E`
//! against the minimal normal subgroups.

use serde::Serialize;

use crate::construct::{direct_product, quotient};
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::hom::Homomorphism;
use crate::lattice::{complement_in, maximal_trivial_intersector, normal_subgroups, NormalLattice};
use crate::named::{make_named, NamedGroup};
use crate::subgroup::Subgroup;

#[derive(Clone, Debug)]
pub enum Verdict {
    /// One `(M, x)` pair per minimal normal subgroup `M`, with `1 ≠ x ∈ E ∩ M`.
    Essential { witnesses: Vec<(Subgroup, usize)> },
    /// A nontrivial normal subgroup meeting the subject trivially.
    NotEssential { witness: Subgroup },
}

#[derive(Clone, Debug)]
pub struct EssentialCertificate {
    pub subject: Subgroup,
    pub verdict: Verdict,
}

impl EssentialCertificate {
    pub fn is_essential(&self) -> bool {
        matches!(self.verdict, Verdict::Essential { .. })
    }

    /// Re-validates the witness data from scratch against `lattice`.
    pub fn recheck(&self, lattice: &NormalLattice) -> bool {
        let e = &self.subject;
        match &self.verdict {
            Verdict::NotEssential { witness } => {
                !witness.is_trivial() && witness.is_normal() && witness.intersection(e).is_trivial()
            }
            Verdict::Essential { witnesses } => {
                let minimal = lattice.minimal();
                minimal.len() == witnesses.len()
                    && minimal.iter().all(|m| {
                        witnesses
                            .iter()
                            .any(|(w, x)| w == m && *x != 0 && m.contains(*x) && e.contains(*x))
                    })
            }
        }
    }
}

/// Decides essentiality of a normal subgroup via the minimal normal subgroups.
pub fn is_essential(group: &FiniteGroup, sub: &Subgroup) -> Result<EssentialCertificate> {
    sub.check_parent(group)?;
    if !sub.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let lattice = normal_subgroups(group)?;
    Ok(certify(&lattice, sub))
}

pub(crate) fn certify(lattice: &NormalLattice, sub: &Subgroup) -> EssentialCertificate {
    let mut witnesses = Vec::new();
    for m in lattice.minimal() {
        match m.elements().iter().skip(1).find(|&&x| sub.contains(x)) {
            Some(&x) => witnesses.push((m, x)),
            None => {
                return EssentialCertificate {
                    subject: sub.clone(),
                    verdict: Verdict::NotEssential { witness: m },
                }
            }
        }
    }
    EssentialCertificate {
        subject: sub.clone(),
        verdict: Verdict::Essential { witnesses },
    }
}

/// The definitional test: `sub` meets every nontrivial member of `normals`
/// nontrivially. `normals` must list every normal subgroup of the parent.
pub fn is_essential_by_definition(sub: &Subgroup, normals: &[Subgroup]) -> bool {
    normals
        .iter()
        .filter(|n| !n.is_trivial())
        .all(|n| n.elements().iter().skip(1).any(|&x| sub.contains(x)))
}

/// Every essential subgroup, in lattice order.
pub fn essential_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let lattice = normal_subgroups(group)?;
    Ok(essentials_in(&lattice))
}

fn essentials_in(lattice: &NormalLattice) -> Vec<Subgroup> {
    lattice
        .normals()
        .iter()
        .filter(|e| certify(lattice, e).is_essential())
        .cloned()
        .collect()
}

/// Intersection of all essential subgroups; trivial for the trivial group.
pub fn e_of(group: &FiniteGroup) -> Result<Subgroup> {
    let lattice = normal_subgroups(group)?;
    Ok(e_in(&lattice))
}

fn e_in(lattice: &NormalLattice) -> Subgroup {
    essentials_in(lattice)
        .iter()
        .fold(lattice.whole().clone(), |acc, e| acc.intersection(e))
        .with_normal_flag(true)
}

/// Subgroup generated by the minimal normal subgroups.
pub fn socle(group: &FiniteGroup) -> Result<Subgroup> {
    let lattice = normal_subgroups(group)?;
    Ok(socle_in(&lattice))
}

pub(crate) fn socle_in(lattice: &NormalLattice) -> Subgroup {
    lattice
        .minimal()
        .iter()
        .fold(lattice.trivial().clone(), |acc, m| acc.join(m))
}

pub fn has_proper_essential(group: &FiniteGroup) -> Result<bool> {
    let lattice = normal_subgroups(group)?;
    Ok(has_proper_in(&lattice))
}

fn has_proper_in(lattice: &NormalLattice) -> bool {
    lattice
        .normals()
        .iter()
        .any(|e| !e.is_whole() && certify(lattice, e).is_essential())
}

/// The conditions characterising groups without proper essential subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KkConditions {
    /// No proper essential subgroup.
    pub a: bool,
    /// Every normal subgroup has a normal complement.
    pub b: bool,
    /// No nontrivial normal subgroup, as a group, has a proper essential subgroup.
    pub c: bool,
    /// Some overgroup containing `G` as a normal subgroup has no proper
    /// essential subgroup, searched over `G`, `G × C2` and `G × C3`.
    pub d: bool,
    /// For proper normal `N ⊆ A` normal, some normal `B ⊇ N` has `AB = G`, `A ∩ B = N`.
    pub e: bool,
    pub soc_eq_g: bool,
}

impl KkConditions {
    pub fn all_agree(&self) -> bool {
        let v = [self.a, self.b, self.c, self.d, self.e, self.soc_eq_g];
        v.iter().all(|&x| x == v[0])
    }
}

pub fn kk_conditions(group: &FiniteGroup) -> Result<KkConditions> {
    let lattice = normal_subgroups(group)?;
    let normals = lattice.normals();
    let g_order = group.order();

    let a = !has_proper_in(&lattice);
    let b = normals.iter().all(|n| complement_in(&lattice, n).is_some());

    let mut c = true;
    for n in normals.iter().filter(|n| !n.is_trivial()) {
        let standalone = n.as_group()?;
        if has_proper_essential(&standalone)? {
            c = false;
            break;
        }
    }

    let mut d = a;
    for k in [2, 3] {
        if d {
            break;
        }
        let over = direct_product(group, &make_named(NamedGroup::Cyclic(k))?)?;
        d = !has_proper_essential(&over.group)?;
    }

    let e = normals.iter().filter(|n| !n.is_whole()).all(|n| {
        let above: Vec<&Subgroup> = normals.iter().filter(|x| n.is_subgroup_of(x)).collect();
        above.iter().all(|a| {
            above.iter().any(|b| {
                let meet = a.intersection(b);
                meet == *n && a.order() * b.order() / meet.order() == g_order
            })
        })
    });

    let soc_eq_g = socle_in(&lattice).is_whole();
    Ok(KkConditions {
        a,
        b,
        c,
        d,
        e,
        soc_eq_g,
    })
}

/// Result of pushing a normal embedding down to an essential one.
#[derive(Clone, Debug)]
pub struct Essentialization {
    /// Maximal normal subgroup of the codomain meeting the image trivially.
    pub kernel: Subgroup,
    pub quotient: FiniteGroup,
    pub projection: Homomorphism,
    /// The embedding composed with the projection.
    pub embedding: Homomorphism,
    pub certificate: EssentialCertificate,
}

impl Essentialization {
    /// The image is a proper subgroup of the quotient.
    pub fn is_proper(&self) -> bool {
        !self.certificate.subject.is_whole()
    }
}

/// Factors a normal monomorphism `φ: G → H` through `H/T`, where `T` is a
/// maximal normal subgroup meeting `φ(G)` trivially; the image of `G` in
/// `H/T` is then essential.
pub fn essentialize(phi: &Homomorphism) -> Result<Essentialization> {
    if !phi.is_mono() {
        return Err(GroupError::NotMonomorphism);
    }
    let codomain = phi.codomain();
    let image = phi.image();
    if !image.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let kernel = maximal_trivial_intersector(codomain, &image)?;
    let (q, projection) = quotient(codomain, &kernel)?;
    let embedding = phi.then(&projection)?;
    if !embedding.is_mono() {
        return Err(GroupError::Counterexample(
            "composite with the projection is not injective".into(),
        ));
    }
    let certificate = is_essential(&q, &embedding.image())?;
    if !certificate.is_essential() {
        return Err(GroupError::Counterexample(
            "image is not essential in the quotient by a maximal trivially-meeting normal subgroup"
                .into(),
        ));
    }
    Ok(Essentialization {
        kernel,
        quotient: q,
        projection,
        embedding,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::hom_from_generator_images;
    use crate::perm::Perm;
    use crate::subgroup::{center, normal_closure};

    fn named(kind: NamedGroup) -> FiniteGroup {
        make_named(kind).unwrap()
    }

    fn orders(subs: &[Subgroup]) -> Vec<usize> {
        subs.iter().map(Subgroup::order).collect()
    }

    #[test]
    fn q8_center_is_essential() {
        let q8 = named(NamedGroup::Quaternion8);
        let z = center(&q8);
        let cert = is_essential(&q8, &z).unwrap();
        assert!(cert.is_essential());
        assert!(cert.recheck(&normal_subgroups(&q8).unwrap()));
    }

    #[test]
    fn s4_normals_are_essential() {
        let s4 = named(NamedGroup::Symmetric(4));
        let lat = normal_subgroups(&s4).unwrap();
        for n in &lat.normals()[1..] {
            assert!(is_essential(&s4, n).unwrap().is_essential());
        }
        assert_eq!(orders(&essential_subgroups(&s4).unwrap()), vec![4, 12, 24]);
        assert_eq!(e_of(&s4).unwrap().order(), 4);
        assert_eq!(socle(&s4).unwrap().order(), 4);
    }

    #[test]
    fn klein_factor_is_not_essential() {
        let c2 = named(NamedGroup::Cyclic(2));
        let p = direct_product(&c2, &c2).unwrap();
        let cert = is_essential(&p.group, &p.left).unwrap();
        match &cert.verdict {
            Verdict::NotEssential { witness } => {
                assert_eq!(witness.order(), 2);
                assert!(witness.intersection(&p.left).is_trivial());
            }
            Verdict::Essential { .. } => panic!("factor reported essential"),
        }
        assert!(cert.recheck(&normal_subgroups(&p.group).unwrap()));
        assert_eq!(orders(&essential_subgroups(&p.group).unwrap()), vec![4]);
        assert!(e_of(&p.group).unwrap().is_whole());
        assert!(socle(&p.group).unwrap().is_whole());
    }

    #[test]
    fn non_normal_subject_is_rejected() {
        let s3 = named(NamedGroup::Symmetric(3));
        let t = crate::subgroup::subgroup_generated(&s3, [s3.generator_indices()[0]]);
        assert!(matches!(is_essential(&s3, &t), Err(GroupError::NotNormal)));
    }

    #[test]
    fn trivial_group_conventions() {
        let t = FiniteGroup::trivial(1);
        assert!(is_essential(&t, &Subgroup::trivial(&t))
            .unwrap()
            .is_essential());
        assert!(e_of(&t).unwrap().is_trivial());
        assert!(!has_proper_essential(&t).unwrap());
        let c3 = named(NamedGroup::Cyclic(3));
        assert!(!is_essential(&c3, &Subgroup::trivial(&c3))
            .unwrap()
            .is_essential());
    }

    #[test]
    fn cyclic_examples() {
        let c4 = named(NamedGroup::Cyclic(4));
        assert_eq!(orders(&essential_subgroups(&c4).unwrap()), vec![2, 4]);
        assert_eq!(e_of(&c4).unwrap().order(), 2);
        assert!(has_proper_essential(&c4).unwrap());
        assert_eq!(socle(&named(NamedGroup::Cyclic(8))).unwrap().order(), 2);
        let a5 = named(NamedGroup::Alternating(5));
        assert_eq!(orders(&essential_subgroups(&a5).unwrap()), vec![60]);
        assert!(!has_proper_essential(&a5).unwrap());
        assert!(has_proper_essential(&named(NamedGroup::Dihedral(10))).unwrap());
    }

    #[test]
    fn kk_examples() {
        let all_true = KkConditions {
            a: true,
            b: true,
            c: true,
            d: true,
            e: true,
            soc_eq_g: true,
        };
        let c2 = named(NamedGroup::Cyclic(2));
        let v4 = direct_product(&c2, &c2).unwrap().group;
        assert_eq!(kk_conditions(&v4).unwrap(), all_true);
        assert_eq!(
            kk_conditions(&named(NamedGroup::Alternating(5))).unwrap(),
            all_true
        );
        let c4 = kk_conditions(&named(NamedGroup::Cyclic(4))).unwrap();
        assert_eq!(
            c4,
            KkConditions {
                a: false,
                b: false,
                c: false,
                d: false,
                e: false,
                soc_eq_g: false
            }
        );
    }

    #[test]
    fn essentialize_c6_into_c30() {
        let c6 = named(NamedGroup::Cyclic(6));
        let c5 = named(NamedGroup::Cyclic(5));
        let p = direct_product(&c6, &c5).unwrap();
        let out = essentialize(&p.left_embedding).unwrap();
        assert_eq!(out.kernel.order(), 5);
        assert_eq!(out.quotient.order(), 6);
        assert!(!out.is_proper());
        assert!(out.embedding.is_mono());
    }

    #[test]
    fn essentialize_v4_into_s4() {
        let s4 = named(NamedGroup::Symmetric(4));
        let d = s4
            .index_of(&Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap())
            .unwrap();
        let v4 = normal_closure(&s4, [d]);
        let abstract_v4 = v4.as_group().unwrap();
        let images: Vec<usize> = abstract_v4
            .generators()
            .iter()
            .map(|p| s4.index_of(p).unwrap())
            .collect();
        let phi = hom_from_generator_images(&abstract_v4, &s4, &images).unwrap();
        let out = essentialize(&phi).unwrap();
        assert!(out.kernel.is_trivial());
        assert_eq!(out.quotient.order(), 24);
        assert!(out.is_proper());
        assert!(out.certificate.is_essential());
    }

    #[test]
    fn essentialize_rejects_non_mono() {
        let c4 = named(NamedGroup::Cyclic(4));
        let c2 = named(NamedGroup::Cyclic(2));
        let h = hom_from_generator_images(&c4, &c2, &[c2.generator_indices()[0]]).unwrap();
        assert!(matches!(essentialize(&h), Err(GroupError::NotMonomorphism)));
    }
}
