//! Fully enumerated permutation groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::limits::Limits;
use crate::perm::Perm;

/// A finite permutation group with its complete element table.
///
/// Elements are numbered breadth-first from the identity (index 0), expanding
/// each element by right multiplication with the generators in list order.
/// The handle is cheap to clone; clones share the same tables and caches.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

struct GroupData {
    degree: usize,
    generators: Vec<Perm>,
    generator_indices: Vec<usize>,
    elements: Vec<Perm>,
    lookup: HashMap<Perm, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<usize>,
    // (parent, generator position) in the breadth-first spanning tree.
    tree: Vec<(usize, usize)>,
    cache: GroupCache,
}

#[derive(Default)]
pub(crate) struct GroupCache {
    pub(crate) classes: OnceLock<Vec<Vec<usize>>>,
    pub(crate) normals: OnceLock<Vec<(FixedBitSet, Vec<usize>)>>,
    pub(crate) center: OnceLock<(FixedBitSet, Vec<usize>)>,
}

/// Enumerates the group generated by `generators`, failing once more than
/// `max_order` elements have been found.
pub fn close(degree: usize, generators: &[Perm], max_order: usize) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(GroupError::InvalidParameter(
            "degree must be positive".into(),
        ));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }

    let ngens = generators.len();
    let mut elements = vec![Perm::identity(degree)];
    let mut lookup = HashMap::new();
    lookup.insert(elements[0].clone(), 0usize);
    let mut tree = vec![(0usize, usize::MAX)];
    let mut right: Vec<usize> = Vec::new();

    let mut k = 0;
    while k < elements.len() {
        for (s, gen) in generators.iter().enumerate() {
            let product = elements[k].compose_unchecked(gen);
            let idx = match lookup.get(&product) {
                Some(&idx) => idx,
                None => {
                    let idx = elements.len();
                    if idx >= max_order {
                        return Err(GroupError::order_bound(
                            format!("closure of {ngens} generators on {degree} points"),
                            max_order,
                        ));
                    }
                    lookup.insert(product.clone(), idx);
                    elements.push(product);
                    tree.push((k, s));
                    idx
                }
            };
            right.push(idx);
        }
        k += 1;
    }

    let n = elements.len();
    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        let row = i * n;
        mul[row] = i as u32;
        for j in 1..n {
            let (parent, s) = tree[j];
            let left = mul[row + parent] as usize;
            mul[row + j] = right[left * ngens + s] as u32;
        }
    }

    let mut inv = vec![0u32; n];
    for i in 0..n {
        let row = &mul[i * n..(i + 1) * n];
        inv[i] = row
            .iter()
            .position(|&x| x == 0)
            .expect("group element has an inverse") as u32;
    }

    let mut orders = vec![1usize; n];
    for i in 1..n {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = mul[x * n + i] as usize;
            k += 1;
        }
        orders[i] = k;
    }

    let generator_indices = (0..ngens).map(|s| right[s]).collect();

    Ok(FiniteGroup(Arc::new(GroupData {
        degree,
        generators: generators.to_vec(),
        generator_indices,
        elements,
        lookup,
        mul,
        inv,
        orders,
        tree,
        cache: GroupCache::default(),
    })))
}

impl FiniteGroup {
    /// Closes `generators` under the process-wide order bound.
    pub fn generate(degree: usize, generators: &[Perm]) -> Result<FiniteGroup> {
        close(degree, generators, Limits::current().max_order)
    }

    pub fn trivial(degree: usize) -> FiniteGroup {
        close(degree.max(1), &[], 1).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.generators
    }

    /// Element index of each generator, in generator order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.0.generator_indices
    }

    pub fn elements(&self) -> &[Perm] {
        &self.0.elements
    }

    pub fn element(&self, index: usize) -> &Perm {
        &self.0.elements[index]
    }

    pub fn index_of(&self, perm: &Perm) -> Option<usize> {
        self.0.lookup.get(perm).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, mut k: usize) -> usize {
        k %= self.element_order(a);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.0.orders[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.0.orders
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Breadth-first spanning tree: element `j > 0` equals
    /// `element(parent) · generator(position)`.
    pub(crate) fn tree(&self) -> &[(usize, usize)] {
        &self.0.tree
    }

    pub(crate) fn cache(&self) -> &GroupCache {
        &self.0.cache
    }

    /// True when both handles point at the same enumerated group.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.order() {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index,
                order: self.order(),
            })
        }
    }

    /// Multiset of element orders, sorted.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v = self.0.orders.clone();
        v.sort_unstable();
        v
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field(
                "generators",
                &self
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn closes_s3() {
        let g = close(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 2000).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_and_cyclic() {
        let t = close(1, &[], 2000).unwrap();
        assert_eq!(t.order(), 1);
        let c4 = close(4, &[cyc(4, &[&[0, 1, 2, 3]])], 2000).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        assert_eq!(c4.element_order(c4.generator_indices()[0]), 4);
    }

    #[test]
    fn order_bound_is_enforced() {
        let gens = [cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])];
        assert!(matches!(
            close(5, &gens, 100),
            Err(GroupError::OrderBoundExceeded { limit: 100, .. })
        ));
        assert_eq!(close(5, &gens, 120).unwrap().order(), 120);
    }

    #[test]
    fn tables_agree_with_composition() {
        let g = close(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])], 2000).unwrap();
        for a in 0..g.order() {
            assert!(g
                .element(g.inv(a))
                .compose(g.element(a))
                .unwrap()
                .is_identity());
            for b in 0..g.order() {
                let p = g.element(a).compose(g.element(b)).unwrap();
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
            assert_eq!(g.element_order(a), g.element(a).order());
        }
    }

    #[test]
    fn closure_is_deterministic() {
        let gens = [cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])];
        let a = close(4, &gens, 2000).unwrap();
        let b = close(4, &gens, 2000).unwrap();
        assert_eq!(a.elements(), b.elements());
    }
}
