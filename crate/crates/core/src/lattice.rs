//! Conjugacy classes and the lattice of normal subgroups.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::subgroup::{normal_closure, subgroup_generated, Subgroup};

/// Conjugacy classes, each sorted, ordered by least representative.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<Vec<usize>> {
    group
        .cache()
        .classes
        .get_or_init(|| {
            let n = group.order();
            let mut seen = FixedBitSet::with_capacity(n);
            let mut classes = Vec::new();
            for x in 0..n {
                if seen.contains(x) {
                    continue;
                }
                let mut class = vec![x];
                seen.insert(x);
                let mut k = 0;
                while k < class.len() {
                    let y = class[k];
                    for &g in group.generator_indices() {
                        let z = group.conjugate(g, y);
                        if !seen.contains(z) {
                            seen.insert(z);
                            class.push(z);
                        }
                    }
                    k += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            classes
        })
        .clone()
}

/// Size of the conjugacy class of every element.
pub fn class_sizes(group: &FiniteGroup) -> Vec<usize> {
    let mut sizes = vec![0; group.order()];
    for class in conjugacy_classes(group) {
        for &x in &class {
            sizes[x] = class.len();
        }
    }
    sizes
}

/// All normal subgroups of a group, sorted by order then member list.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    parent: FiniteGroup,
    normals: Vec<Subgroup>,
    minimal: Vec<usize>,
}

impl NormalLattice {
    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn normals(&self) -> &[Subgroup] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn minimal(&self) -> Vec<Subgroup> {
        self.minimal
            .iter()
            .map(|&i| self.normals[i].clone())
            .collect()
    }

    pub fn position(&self, sub: &Subgroup) -> Option<usize> {
        self.normals.binary_search(sub).ok()
    }

    pub fn contains(&self, sub: &Subgroup) -> bool {
        self.position(sub).is_some()
    }

    pub fn trivial(&self) -> &Subgroup {
        &self.normals[0]
    }

    pub fn whole(&self) -> &Subgroup {
        self.normals
            .last()
            .expect("lattice contains the whole group")
    }
}

fn compute_normals(group: &FiniteGroup) -> Vec<(FixedBitSet, Vec<usize>)> {
    let classes = conjugacy_classes(group);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut seeds: Vec<Subgroup> = Vec::new();
    for class in classes.iter().skip(1) {
        let ncl = normal_closure(group, [class[0]]);
        if seen.insert(ncl.members().clone()) {
            seeds.push(ncl);
        }
    }

    // Every normal subgroup is the join of the normal closures of its
    // elements, so joining seeds onto known members reaches all of them.
    let mut found: Vec<Subgroup> = seeds.clone();
    let mut k = 0;
    while k < found.len() {
        let current = found[k].clone();
        for seed in &seeds {
            if seed.is_subgroup_of(&current) {
                continue;
            }
            let join = current.join(seed);
            if seen.insert(join.members().clone()) {
                found.push(join);
            }
        }
        k += 1;
    }
    let trivial = Subgroup::trivial(group);
    if seen.insert(trivial.members().clone()) {
        found.push(trivial);
    }
    found.sort();
    found
        .into_iter()
        .map(|s| (s.members().clone(), s.generators().to_vec()))
        .collect()
}

/// Every normal subgroup of `group`.
pub fn normal_subgroups(group: &FiniteGroup) -> Result<NormalLattice> {
    let limit = Limits::current().max_order;
    if group.order() > limit {
        return Err(GroupError::order_bound(
            format!("normal lattice of order {}", group.order()),
            limit,
        ));
    }
    let raw = group.cache().normals.get_or_init(|| compute_normals(group));
    let normals: Vec<Subgroup> = raw
        .iter()
        .map(|(m, g)| Subgroup::from_parts(group, m.clone(), g.clone()).with_normal_flag(true))
        .collect();
    let minimal = (1..normals.len())
        .filter(|&i| !(1..i).any(|j| normals[j].is_subgroup_of(&normals[i])))
        .collect();
    Ok(NormalLattice {
        parent: group.clone(),
        normals,
        minimal,
    })
}

/// Every subgroup of a small group, by fixpoint iteration from the cyclic
/// subgroups. Used as an independent oracle.
pub fn all_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let cap = Limits::current().oracle_cap;
    if group.order() > cap {
        return Err(GroupError::order_bound(
            format!("subgroup oracle on order {}", group.order()),
            cap,
        ));
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut found: Vec<Subgroup> = Vec::new();
    for x in 0..group.order() {
        let c = subgroup_generated(group, [x]);
        if seen.insert(c.members().clone()) {
            found.push(c);
        }
    }
    let mut k = 0;
    while k < found.len() {
        let current = found[k].clone();
        for x in 0..group.order() {
            if current.contains(x) {
                continue;
            }
            let ext = subgroup_generated(group, current.generators().iter().copied().chain([x]));
            if seen.insert(ext.members().clone()) {
                found.push(ext);
            }
        }
        k += 1;
    }
    found.sort();
    Ok(found)
}

pub fn minimal_normal_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    Ok(normal_subgroups(group)?.minimal())
}

/// Least normal `T` (lattice order) with `N ∩ T = 1` and `|N||T| = |G|`.
pub fn normal_complement(group: &FiniteGroup, normal: &Subgroup) -> Result<Option<Subgroup>> {
    normal.check_parent(group)?;
    if !normal.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let lattice = normal_subgroups(group)?;
    Ok(complement_in(&lattice, normal))
}

pub(crate) fn complement_in(lattice: &NormalLattice, normal: &Subgroup) -> Option<Subgroup> {
    let target = lattice.parent().order() / normal.order();
    lattice
        .normals()
        .iter()
        .filter(|t| t.order() == target)
        .find(|t| t.intersection(normal).is_trivial())
        .cloned()
}

/// A normal subgroup meeting `k` trivially that is maximal among such:
/// largest order, then least member list.
pub fn maximal_trivial_intersector(group: &FiniteGroup, k: &Subgroup) -> Result<Subgroup> {
    k.check_parent(group)?;
    if !k.is_normal() {
        return Err(GroupError::NotNormal);
    }
    let lattice = normal_subgroups(group)?;
    let mut best: Option<&Subgroup> = None;
    for t in lattice.normals() {
        if t.intersection(k).is_trivial() && best.is_none_or(|b| t.order() > b.order()) {
            best = Some(t);
        }
    }
    Ok(best.expect("trivial subgroup qualifies").clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::direct_product;
    use crate::named::{make_named, NamedGroup};

    fn named(kind: NamedGroup) -> FiniteGroup {
        make_named(kind).unwrap()
    }

    fn orders(subs: &[Subgroup]) -> Vec<usize> {
        subs.iter().map(Subgroup::order).collect()
    }

    fn class_size_multiset(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = conjugacy_classes(g).iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn class_counts() {
        assert_eq!(
            class_size_multiset(&named(NamedGroup::Symmetric(3))),
            vec![1, 2, 3]
        );
        assert_eq!(
            class_size_multiset(&named(NamedGroup::Symmetric(4))),
            vec![1, 3, 6, 6, 8]
        );
        assert_eq!(conjugacy_classes(&named(NamedGroup::Cyclic(9))).len(), 9);
    }

    #[test]
    fn normal_lattices() {
        let s4 = normal_subgroups(&named(NamedGroup::Symmetric(4))).unwrap();
        assert_eq!(orders(s4.normals()), vec![1, 4, 12, 24]);
        let a5 = normal_subgroups(&named(NamedGroup::Alternating(5))).unwrap();
        assert_eq!(orders(a5.normals()), vec![1, 60]);
        let c6 = normal_subgroups(&named(NamedGroup::Cyclic(6))).unwrap();
        assert_eq!(orders(c6.normals()), vec![1, 2, 3, 6]);
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(
            all_subgroups(&named(NamedGroup::Symmetric(3)))
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            all_subgroups(&named(NamedGroup::Cyclic(4))).unwrap().len(),
            3
        );
        assert_eq!(all_subgroups(&FiniteGroup::trivial(1)).unwrap().len(), 1);
        assert_eq!(
            all_subgroups(&named(NamedGroup::Symmetric(4)))
                .unwrap()
                .len(),
            30
        );
    }

    #[test]
    fn lattice_matches_oracle_on_s4() {
        let g = named(NamedGroup::Symmetric(4));
        let oracle: Vec<Subgroup> = all_subgroups(&g)
            .unwrap()
            .into_iter()
            .filter(|h| h.is_normal())
            .collect();
        assert_eq!(normal_subgroups(&g).unwrap().normals(), &oracle[..]);
    }

    #[test]
    fn minimal_normals() {
        assert_eq!(
            orders(&minimal_normal_subgroups(&named(NamedGroup::Symmetric(4))).unwrap()),
            vec![4]
        );
        let v = named(NamedGroup::ElementaryAbelian { p: 2, k: 2 });
        assert_eq!(
            orders(&minimal_normal_subgroups(&v).unwrap()),
            vec![2, 2, 2]
        );
        let a5 = named(NamedGroup::Alternating(5));
        assert_eq!(orders(&minimal_normal_subgroups(&a5).unwrap()), vec![60]);
    }

    #[test]
    fn complements() {
        let c6 = named(NamedGroup::Cyclic(6));
        let lat = normal_subgroups(&c6).unwrap();
        let c2 = &lat.normals()[1];
        assert_eq!(normal_complement(&c6, c2).unwrap().unwrap().order(), 3);
        let c4 = named(NamedGroup::Cyclic(4));
        let lat = normal_subgroups(&c4).unwrap();
        assert!(normal_complement(&c4, &lat.normals()[1]).unwrap().is_none());
        let triv = Subgroup::trivial(&c4);
        assert!(normal_complement(&c4, &triv).unwrap().unwrap().is_whole());
    }

    #[test]
    fn maximal_intersectors() {
        let c6 = named(NamedGroup::Cyclic(6));
        let lat = normal_subgroups(&c6).unwrap();
        assert_eq!(
            maximal_trivial_intersector(&c6, &lat.normals()[1])
                .unwrap()
                .order(),
            3
        );
        let s4 = named(NamedGroup::Symmetric(4));
        let lat = normal_subgroups(&s4).unwrap();
        assert!(maximal_trivial_intersector(&s4, &lat.normals()[1])
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn join_and_meet_closed() {
        let p = direct_product(
            &named(NamedGroup::Symmetric(3)),
            &named(NamedGroup::Cyclic(6)),
        )
        .unwrap();
        let lat = normal_subgroups(&p.group).unwrap();
        for a in lat.normals() {
            for b in lat.normals() {
                assert!(lat.contains(&a.join(b)));
                assert!(lat.contains(&a.intersection(b)));
            }
        }
    }
}
