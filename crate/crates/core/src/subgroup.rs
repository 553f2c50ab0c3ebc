//! Subgroups of a [`FiniteGroup`] given as sets of element indices.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// A subgroup of `parent`, stored as a membership bitset plus the sorted
/// member list and a (not necessarily minimal) generating list.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: FixedBitSet,
    elements: Vec<usize>,
    gens: Vec<usize>,
    normal: OnceLock<bool>,
    abelian: OnceLock<bool>,
}

/// Closes `gens` inside `group` by breadth-first right multiplication.
pub(crate) fn close_indices(group: &FiniteGroup, gens: &[usize]) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(group.order());
    set.insert(0);
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for &g in gens {
            let y = group.mul(x, g);
            if !set.contains(y) {
                set.insert(y);
                queue.push(y);
            }
        }
        k += 1;
    }
    set
}

/// Keeps only the generators that enlarge the closure of their predecessors.
fn prune_generators(
    group: &FiniteGroup,
    candidates: impl IntoIterator<Item = usize>,
) -> (FixedBitSet, Vec<usize>) {
    let mut set = close_indices(group, &[]);
    let mut kept = Vec::new();
    for g in candidates {
        if !set.contains(g) {
            kept.push(g);
            set = close_indices(group, &kept);
        }
    }
    (set, kept)
}

impl Subgroup {
    pub(crate) fn from_parts(
        parent: &FiniteGroup,
        members: FixedBitSet,
        gens: Vec<usize>,
    ) -> Subgroup {
        let elements = members.ones().collect();
        Subgroup {
            parent: parent.clone(),
            members,
            elements,
            gens,
            normal: OnceLock::new(),
            abelian: OnceLock::new(),
        }
    }

    /// Wraps a member set that is already known to be a subgroup.
    pub(crate) fn from_members(parent: &FiniteGroup, members: FixedBitSet) -> Subgroup {
        let (closed, gens) = prune_generators(parent, members.ones().collect::<Vec<_>>());
        debug_assert_eq!(closed, members, "member set is not closed");
        Subgroup::from_parts(parent, closed, gens)
    }

    pub(crate) fn with_normal_flag(self, normal: bool) -> Subgroup {
        let _ = self.normal.set(normal);
        self
    }

    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        Subgroup::from_parts(parent, close_indices(parent, &[]), Vec::new()).with_normal_flag(true)
    }

    pub fn whole(parent: &FiniteGroup) -> Subgroup {
        let gens = parent.generator_indices().to_vec();
        let mut members = FixedBitSet::with_capacity(parent.order());
        members.insert_range(..);
        Subgroup::from_parts(parent, members, gens).with_normal_flag(true)
    }

    /// Validates an arbitrary index set as a subgroup.
    pub fn from_indices(parent: &FiniteGroup, indices: &[usize]) -> Result<Subgroup> {
        let mut members = FixedBitSet::with_capacity(parent.order());
        for &i in indices {
            parent.check_index(i)?;
            members.insert(i);
        }
        if !members.contains(0) {
            return Err(GroupError::InvalidParameter(
                "subset lacks the identity".into(),
            ));
        }
        for a in members.ones() {
            for b in members.ones() {
                if !members.contains(parent.mul(a, b)) {
                    return Err(GroupError::InvalidParameter("subset is not closed".into()));
                }
            }
        }
        Ok(Subgroup::from_members(parent, members))
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// Member indices in increasing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(index)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_normal(&self) -> bool {
        *self.normal.get_or_init(|| {
            let g = &self.parent;
            g.generator_indices()
                .iter()
                .all(|&t| self.gens.iter().all(|&s| self.contains(g.conjugate(t, s))))
        })
    }

    pub fn is_abelian(&self) -> bool {
        *self.abelian.get_or_init(|| {
            self.gens.iter().enumerate().all(|(i, &a)| {
                self.gens[i + 1..]
                    .iter()
                    .all(|&b| self.parent.commute(a, b))
            })
        })
    }

    pub(crate) fn check_parent(&self, group: &FiniteGroup) -> Result<()> {
        if self.parent.same_as(group) {
            Ok(())
        } else {
            Err(GroupError::ForeignSubgroup)
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Subgroup::from_members(&self.parent, members)
    }

    /// Subgroup generated by both operands.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        let sub = subgroup_generated(&self.parent, self.gens.iter().chain(&other.gens).copied());
        if self.normal.get() == Some(&true) && other.normal.get() == Some(&true) {
            sub.with_normal_flag(true)
        } else {
            sub
        }
    }

    /// The member permutations re-closed as a group in their own right.
    pub fn as_group(&self) -> Result<FiniteGroup> {
        let gens: Vec<Perm> = self
            .gens
            .iter()
            .map(|&i| self.parent.element(i).clone())
            .collect();
        let g = FiniteGroup::generate(self.parent.degree(), &gens)?;
        debug_assert_eq!(g.order(), self.order());
        Ok(g)
    }

    /// Maps each member's index in [`Subgroup::as_group`] back to the parent.
    pub fn embedding_indices(&self, abstract_group: &FiniteGroup) -> Vec<usize> {
        abstract_group
            .elements()
            .iter()
            .map(|p| self.parent.index_of(p).expect("member of the parent"))
            .collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_as(&other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lattice order used for every sorted result: by order, then member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("elements", &self.elements)
            .finish()
    }
}

/// Least subgroup containing `gens`.
pub fn subgroup_generated(group: &FiniteGroup, gens: impl IntoIterator<Item = usize>) -> Subgroup {
    let (members, kept) = prune_generators(group, gens);
    Subgroup::from_parts(group, members, kept)
}

/// Least normal subgroup containing `seed`.
pub fn normal_closure(group: &FiniteGroup, seed: impl IntoIterator<Item = usize>) -> Subgroup {
    let (mut members, mut gens) = prune_generators(group, seed);
    let mut k = 0;
    while k < gens.len() {
        let s = gens[k];
        for &t in group.generator_indices() {
            let c = group.conjugate(t, s);
            if !members.contains(c) {
                gens.push(c);
                members = close_indices(group, &gens);
            }
        }
        k += 1;
    }
    Subgroup::from_parts(group, members, gens).with_normal_flag(true)
}

fn filter_subgroup(group: &FiniteGroup, keep: impl Fn(usize) -> bool) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(group.order());
    for x in 0..group.order() {
        if keep(x) {
            members.insert(x);
        }
    }
    Subgroup::from_members(group, members)
}

/// Elements commuting with every element of `s`.
pub fn centralizer(group: &FiniteGroup, s: &Subgroup) -> Subgroup {
    filter_subgroup(group, |x| {
        s.generators().iter().all(|&y| group.commute(x, y))
    })
}

/// Elements `g` with `g s g⁻¹ = s`.
pub fn normalizer(group: &FiniteGroup, s: &Subgroup) -> Subgroup {
    filter_subgroup(group, |x| {
        s.generators()
            .iter()
            .all(|&y| s.contains(group.conjugate(x, y)))
    })
}

pub fn center(group: &FiniteGroup) -> Subgroup {
    let (members, gens) = group
        .cache()
        .center
        .get_or_init(|| {
            let c = centralizer(group, &Subgroup::whole(group));
            (c.members().clone(), c.generators().to_vec())
        })
        .clone();
    Subgroup::from_parts(group, members, gens).with_normal_flag(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{make_named, NamedGroup};
    use crate::perm::Perm;

    fn idx(g: &FiniteGroup, degree: usize, cycles: &[&[usize]]) -> usize {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        g.index_of(&Perm::from_cycles(degree, &cycles).unwrap())
            .unwrap()
    }

    #[test]
    fn generated_subgroups_in_s4() {
        let s4 = make_named(NamedGroup::Symmetric(4)).unwrap();
        let t = idx(&s4, 4, &[&[0, 1]]);
        let c = idx(&s4, 4, &[&[0, 1, 2, 3]]);
        assert_eq!(subgroup_generated(&s4, [t]).order(), 2);
        assert!(subgroup_generated(&s4, [t, c]).is_whole());
        assert!(subgroup_generated(&s4, []).is_trivial());
    }

    #[test]
    fn normal_closures_in_s4() {
        let s4 = make_named(NamedGroup::Symmetric(4)).unwrap();
        let t = idx(&s4, 4, &[&[0, 1]]);
        let d = idx(&s4, 4, &[&[0, 1], &[2, 3]]);
        assert!(normal_closure(&s4, [t]).is_whole());
        let v4 = normal_closure(&s4, [d]);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal() && v4.is_abelian());
    }

    #[test]
    fn normal_closure_in_abelian_group_is_the_subgroup() {
        let c12 = make_named(NamedGroup::Cyclic(12)).unwrap();
        for x in 0..12 {
            assert_eq!(normal_closure(&c12, [x]), subgroup_generated(&c12, [x]));
        }
    }

    #[test]
    fn centers() {
        let q8 = make_named(NamedGroup::Quaternion8).unwrap();
        assert_eq!(center(&q8).order(), 2);
        let s3 = make_named(NamedGroup::Symmetric(3)).unwrap();
        assert!(center(&s3).is_trivial());
    }

    #[test]
    fn sylow_two_of_s4_is_self_normalizing() {
        let s4 = make_named(NamedGroup::Symmetric(4)).unwrap();
        let p = subgroup_generated(
            &s4,
            [idx(&s4, 4, &[&[0, 1, 2, 3]]), idx(&s4, 4, &[&[0, 2]])],
        );
        assert_eq!(p.order(), 8);
        assert_eq!(normalizer(&s4, &p), p);
        assert!(!p.is_normal());
    }

    #[test]
    fn from_indices_validates() {
        let c4 = make_named(NamedGroup::Cyclic(4)).unwrap();
        let g = c4.generator_indices()[0];
        assert!(Subgroup::from_indices(&c4, &[0, g]).is_err());
        assert!(Subgroup::from_indices(&c4, &[g]).is_err());
        let sq = c4.mul(g, g);
        assert_eq!(Subgroup::from_indices(&c4, &[0, sq]).unwrap().order(), 2);
    }
}
