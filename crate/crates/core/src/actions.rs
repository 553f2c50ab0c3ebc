//! Finite group actions, and the essential subgroups they certify.
//!
//! If the point stabilizers `H_x` of a subgroup `H` form an antichain
//! (`H_x ⊄ H_y` whenever `x ≠ y`), then `ncl(H)·Ker(f)` is essential. Self
//! normalizing and malnormal subgroups give such antichains on their coset
//! spaces.

use fixedbitset::FixedBitSet;

use crate::construct::{coset_permutation, coset_representatives, left_coset_labels};
use crate::error::{GroupError, Result};
use crate::essential::{is_essential, EssentialCertificate};
use crate::group::FiniteGroup;
use crate::hom::Homomorphism;
use crate::limits::Limits;
use crate::subgroup::{normal_closure, normalizer, Subgroup};

/// A validated action of `group` on `{0, .., set_size - 1}`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: FiniteGroup,
    set_size: usize,
    // table[g * set_size + x] = g·x
    table: Vec<usize>,
}

impl GroupAction {
    /// Checks `1·x = x` and `(g s)·x = g·(s·x)` for every element `g`,
    /// generator `s` and point `x`; that determines the whole action law.
    pub fn from_table(
        group: &FiniteGroup,
        set_size: usize,
        table: Vec<usize>,
    ) -> Result<GroupAction> {
        if set_size == 0 || table.len() != group.order() * set_size {
            return Err(GroupError::InvalidAction(
                "table has the wrong shape".into(),
            ));
        }
        if table.iter().any(|&y| y >= set_size) {
            return Err(GroupError::InvalidAction(
                "image outside the point set".into(),
            ));
        }
        let act = |g: usize, x: usize| table[g * set_size + x];
        if (0..set_size).any(|x| act(0, x) != x) {
            return Err(GroupError::InvalidAction("identity moves a point".into()));
        }
        for g in 0..group.order() {
            for &s in group.generator_indices() {
                let gs = group.mul(g, s);
                if (0..set_size).any(|x| act(gs, x) != act(g, act(s, x))) {
                    return Err(GroupError::InvalidAction(format!(
                        "law fails at ({g}, {s})"
                    )));
                }
            }
        }
        Ok(GroupAction {
            group: group.clone(),
            set_size,
            table,
        })
    }

    /// The action on the group's own points.
    pub fn natural(group: &FiniteGroup) -> GroupAction {
        let n = group.degree();
        let table = group
            .elements()
            .iter()
            .flat_map(|p| p.images().iter().copied())
            .collect();
        GroupAction {
            group: group.clone(),
            set_size: n,
            table,
        }
    }

    /// The action through a homomorphism into a permutation group.
    pub fn from_hom(hom: &Homomorphism) -> GroupAction {
        let n = hom.codomain().degree();
        let table = (0..hom.domain().order())
            .flat_map(|g| hom.codomain().element(hom.apply(g)).images().to_vec())
            .collect();
        GroupAction {
            group: hom.domain().clone(),
            set_size: n,
            table,
        }
    }

    /// Every element fixes every point.
    pub fn trivial(group: &FiniteGroup, set_size: usize) -> GroupAction {
        let table = (0..group.order()).flat_map(|_| 0..set_size).collect();
        GroupAction {
            group: group.clone(),
            set_size,
            table,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g * self.set_size + x]
    }

    fn filter(&self, keep: impl Fn(usize) -> bool) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            if keep(g) {
                members.insert(g);
            }
        }
        Subgroup::from_members(&self.group, members)
    }

    pub fn kernel(&self) -> Subgroup {
        self.filter(|g| (0..self.set_size).all(|x| self.act(g, x) == x))
            .with_normal_flag(true)
    }

    /// Stabilizer of `x` inside `within`.
    pub fn stabilizer(&self, x: usize, within: &Subgroup) -> Result<Subgroup> {
        within.check_parent(&self.group)?;
        if x >= self.set_size {
            return Err(GroupError::IndexOutOfRange {
                index: x,
                order: self.set_size,
            });
        }
        Ok(self.filter(|g| within.contains(g) && self.act(g, x) == x))
    }

    /// Points fixed by every element of `sub`.
    pub fn fixed_points(&self, sub: &Subgroup) -> Result<Vec<usize>> {
        sub.check_parent(&self.group)?;
        Ok((0..self.set_size)
            .filter(|&x| sub.generators().iter().all(|&g| self.act(g, x) == x))
            .collect())
    }
}

/// Left multiplication on the left cosets of `sub`, with the coset `sub`
/// itself numbered 0.
pub fn coset_action(group: &FiniteGroup, sub: &Subgroup) -> Result<GroupAction> {
    sub.check_parent(group)?;
    let limit = Limits::current().max_order;
    if sub.index() > limit {
        return Err(GroupError::order_bound(
            format!("coset space of size {}", sub.index()),
            limit,
        ));
    }
    let (labels, count) = left_coset_labels(group, sub);
    let reps = coset_representatives(&labels, count);
    let table = (0..group.order())
        .flat_map(|g| {
            coset_permutation(group, &labels, &reps, g)
                .images()
                .to_vec()
        })
        .collect();
    Ok(GroupAction {
        group: group.clone(),
        set_size: count,
        table,
    })
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum StabilizerOutcome {
    /// `ncl(H)·Ker(f)` with its essentiality certificate.
    Certified {
        subgroup: Subgroup,
        certificate: EssentialCertificate,
    },
    /// `H_x ⊆ H_y` for these distinct points.
    ConditionFailed { x: usize, y: usize },
}

/// Checks the stabilizer antichain condition for `sub` under `action` and,
/// when it holds, certifies `ncl(sub)·Ker(action)` as essential.
pub fn khma_certify(
    group: &FiniteGroup,
    sub: &Subgroup,
    action: &GroupAction,
) -> Result<StabilizerOutcome> {
    sub.check_parent(group)?;
    if !action.group().same_as(group) {
        return Err(GroupError::ForeignSubgroup);
    }
    if group.is_trivial() {
        return Err(GroupError::PreconditionFailed(
            "group must be nontrivial".into(),
        ));
    }
    let stabs: Vec<Subgroup> = (0..action.set_size())
        .map(|x| action.stabilizer(x, sub))
        .collect::<Result<_>>()?;
    for x in 0..stabs.len() {
        for y in 0..stabs.len() {
            if x != y && stabs[x].is_subgroup_of(&stabs[y]) {
                return Ok(StabilizerOutcome::ConditionFailed { x, y });
            }
        }
    }
    let k = normal_closure(group, sub.generators().iter().copied()).join(&action.kernel());
    let certificate = is_essential(group, &k)?;
    if !certificate.is_essential() {
        return Err(GroupError::Counterexample(
            "stabilizer antichain holds but ncl(H)Ker(f) is not essential".into(),
        ));
    }
    Ok(StabilizerOutcome::Certified {
        subgroup: k,
        certificate,
    })
}

pub fn is_self_normalizing(group: &FiniteGroup, sub: &Subgroup) -> bool {
    normalizer(group, sub) == *sub
}

/// `g S g⁻¹ ∩ S = 1` for every `g ∉ S`.
pub fn is_malnormal(group: &FiniteGroup, sub: &Subgroup) -> bool {
    (0..group.order()).filter(|&g| !sub.contains(g)).all(|g| {
        sub.elements()
            .iter()
            .skip(1)
            .all(|&s| !sub.contains(group.conjugate(g, s)))
    })
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum ClosureOutcome {
    /// The normal closure is the whole group.
    WholeGroup,
    /// The normal closure is a proper essential subgroup.
    ProperEssential {
        closure: Subgroup,
        certificate: EssentialCertificate,
    },
}

fn closure_dichotomy(group: &FiniteGroup, sub: &Subgroup) -> Result<ClosureOutcome> {
    let closure = normal_closure(group, sub.generators().iter().copied());
    if closure.is_whole() {
        return Ok(ClosureOutcome::WholeGroup);
    }
    let certificate = is_essential(group, &closure)?;
    if !certificate.is_essential() {
        return Err(GroupError::Counterexample(
            "proper normal closure is not essential".into(),
        ));
    }
    Ok(ClosureOutcome::ProperEssential {
        closure,
        certificate,
    })
}

/// For self-normalizing `sub`: `ncl(sub)` is everything or proper essential.
pub fn babcho_certify(group: &FiniteGroup, sub: &Subgroup) -> Result<ClosureOutcome> {
    sub.check_parent(group)?;
    if group.is_trivial() {
        return Err(GroupError::PreconditionFailed(
            "group must be nontrivial".into(),
        ));
    }
    if !is_self_normalizing(group, sub) {
        return Err(GroupError::PreconditionFailed(
            "subgroup is not self-normalizing".into(),
        ));
    }
    closure_dichotomy(group, sub)
}

/// For nontrivial malnormal `sub`: `ncl(sub)` is everything or proper essential.
pub fn malnormal_certify(group: &FiniteGroup, sub: &Subgroup) -> Result<ClosureOutcome> {
    sub.check_parent(group)?;
    if sub.is_trivial() || !is_malnormal(group, sub) {
        return Err(GroupError::PreconditionFailed(
            "subgroup is trivial or not malnormal".into(),
        ));
    }
    closure_dichotomy(group, sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::direct_product;
    use crate::lattice::normal_subgroups;
    use crate::named::{make_named, NamedGroup};
    use crate::perm::Perm;
    use crate::subgroup::subgroup_generated;

    fn named(kind: NamedGroup) -> FiniteGroup {
        make_named(kind).unwrap()
    }

    fn idx(g: &FiniteGroup, cycles: &[&[usize]]) -> usize {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        g.index_of(&Perm::from_cycles(g.degree(), &cycles).unwrap())
            .unwrap()
    }

    fn sylow2_s4(s4: &FiniteGroup) -> Subgroup {
        subgroup_generated(s4, [idx(s4, &[&[0, 1, 2, 3]]), idx(s4, &[&[0, 2]])])
    }

    #[test]
    fn natural_action_queries() {
        let s4 = named(NamedGroup::Symmetric(4));
        let f = GroupAction::natural(&s4);
        assert_eq!(f.stabilizer(0, &Subgroup::whole(&s4)).unwrap().order(), 6);
        assert!(f.kernel().is_trivial());
        let t = subgroup_generated(&s4, [idx(&s4, &[&[0, 1]])]);
        assert_eq!(f.fixed_points(&t).unwrap(), vec![2, 3]);
    }

    #[test]
    fn coset_actions() {
        let s4 = named(NamedGroup::Symmetric(4));
        let p = sylow2_s4(&s4);
        let f = coset_action(&s4, &p).unwrap();
        assert_eq!(f.set_size(), 3);
        assert_eq!(f.stabilizer(0, &Subgroup::whole(&s4)).unwrap(), p);

        let whole = coset_action(&s4, &Subgroup::whole(&s4)).unwrap();
        assert_eq!(whole.set_size(), 1);
        assert!(whole.kernel().is_whole());

        let regular = coset_action(&s4, &Subgroup::trivial(&s4)).unwrap();
        assert_eq!(regular.set_size(), 24);
        assert!(regular.kernel().is_trivial());
    }

    #[test]
    fn table_validation() {
        let c2 = named(NamedGroup::Cyclic(2));
        assert!(GroupAction::from_table(&c2, 2, vec![0, 1, 1, 0]).is_ok());
        assert!(GroupAction::from_table(&c2, 2, vec![1, 0, 1, 0]).is_err());
        let c3 = named(NamedGroup::Cyclic(3));
        // The generator acting as a transposition is not an action of C3.
        let bad = vec![0, 1, 1, 0, 1, 0];
        assert!(GroupAction::from_table(&c3, 2, bad).is_err());
    }

    #[test]
    fn khma_on_symmetric_groups() {
        for n in [4, 5] {
            let sn = named(NamedGroup::Symmetric(n));
            let lat = normal_subgroups(&sn).unwrap();
            let an = lat.normals()[lat.len() - 2].clone();
            assert_eq!(an.index(), 2);
            match khma_certify(&sn, &an, &GroupAction::natural(&sn)).unwrap() {
                StabilizerOutcome::Certified {
                    subgroup,
                    certificate,
                } => {
                    assert_eq!(subgroup, an);
                    assert!(certificate.is_essential());
                }
                other => panic!("S{n}: {other:?}"),
            }
        }
    }

    #[test]
    fn khma_condition_fails_for_trivial_action() {
        let c2 = named(NamedGroup::Cyclic(2));
        let v = direct_product(&c2, &c2).unwrap().group;
        let f = GroupAction::trivial(&v, 2);
        let out = khma_certify(&v, &Subgroup::whole(&v), &f).unwrap();
        assert!(matches!(
            out,
            StabilizerOutcome::ConditionFailed { x: 0, y: 1 }
        ));
    }

    #[test]
    fn self_normalizing_and_malnormal() {
        let s4 = named(NamedGroup::Symmetric(4));
        let p = sylow2_s4(&s4);
        assert!(is_self_normalizing(&s4, &p));
        assert!(matches!(
            babcho_certify(&s4, &p).unwrap(),
            ClosureOutcome::WholeGroup
        ));

        let d10 = named(NamedGroup::Dihedral(10));
        let r = subgroup_generated(&d10, [d10.generator_indices()[1]]);
        assert_eq!(r.order(), 2);
        assert!(is_malnormal(&d10, &r));
        assert!(is_self_normalizing(&d10, &r));
        assert!(matches!(
            malnormal_certify(&d10, &r).unwrap(),
            ClosureOutcome::WholeGroup
        ));

        let c4 = named(NamedGroup::Cyclic(4));
        let c2 = subgroup_generated(&c4, [2]);
        assert!(!is_self_normalizing(&c4, &c2));
        assert!(matches!(
            babcho_certify(&c4, &c2),
            Err(GroupError::PreconditionFailed(_))
        ));
        assert!(matches!(
            malnormal_certify(&c4, &Subgroup::trivial(&c4)),
            Err(GroupError::PreconditionFailed(_))
        ));
    }
}
