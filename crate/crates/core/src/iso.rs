//! Backtracking search over generator images, shared by the isomorphism test
//! and the automorphism-group computation.

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::hom::Homomorphism;
use crate::lattice::class_sizes;
use crate::limits::Limits;
use crate::subgroup::{center, close_indices};

/// A generating sequence `a_0, a_1, ..` of the source group together with a
/// breadth-first spanning tree of every prefix subgroup `<a_0..a_i>`.
struct SearchPlan {
    gens: Vec<usize>,
    // layers[i]: (element, parent, generator position), root first.
    layers: Vec<Vec<(usize, usize, usize)>>,
}

/// Greedy generating sequence: highest element order first (least index on
/// ties), then keep adding elements in the same ranking that enlarge the
/// generated subgroup until it is everything.
pub(crate) fn greedy_generating_sequence(group: &FiniteGroup) -> Vec<usize> {
    let mut ranked: Vec<usize> = (1..group.order()).collect();
    ranked.sort_by_key(|&x| (std::cmp::Reverse(group.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = close_indices(group, &gens);
    for x in ranked {
        if span.count_ones(..) == group.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = close_indices(group, &gens);
        }
    }
    gens
}

impl SearchPlan {
    fn new(group: &FiniteGroup) -> SearchPlan {
        let gens = greedy_generating_sequence(group);
        let layers = (0..gens.len())
            .map(|depth| {
                let prefix = &gens[..=depth];
                let mut seen = FixedBitSet::with_capacity(group.order());
                seen.insert(0);
                let mut layer = vec![(0, 0, usize::MAX)];
                let mut k = 0;
                while k < layer.len() {
                    let x = layer[k].0;
                    for (pos, &g) in prefix.iter().enumerate() {
                        let y = group.mul(x, g);
                        if !seen.contains(y) {
                            seen.insert(y);
                            layer.push((y, x, pos));
                        }
                    }
                    k += 1;
                }
                layer
            })
            .collect();
        SearchPlan { gens, layers }
    }
}

struct Search<'a> {
    source: &'a FiniteGroup,
    target: &'a FiniteGroup,
    plan: SearchPlan,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    map: Vec<usize>,
    stamp: Vec<usize>,
    epoch: usize,
}

impl<'a> Search<'a> {
    fn new(source: &'a FiniteGroup, target: &'a FiniteGroup) -> Search<'a> {
        let plan = SearchPlan::new(source);
        let src_classes = class_sizes(source);
        let dst_classes = class_sizes(target);
        let candidates = plan
            .gens
            .iter()
            .map(|&a| {
                (0..target.order())
                    .filter(|&b| {
                        target.element_order(b) == source.element_order(a)
                            && dst_classes[b] == src_classes[a]
                    })
                    .collect()
            })
            .collect();
        Search {
            source,
            target,
            candidates,
            images: vec![0; plan.gens.len()],
            plan,
            map: vec![0; source.order()],
            stamp: vec![0; target.order()],
            epoch: 0,
        }
    }

    /// Extends the current assignment over the prefix subgroup of `depth`
    /// and checks it is an injective homomorphism there.
    fn consistent(&mut self, depth: usize) -> bool {
        self.epoch += 1;
        let layer = &self.plan.layers[depth];
        for &(x, parent, pos) in layer {
            let y = if pos == usize::MAX {
                0
            } else {
                self.target.mul(self.map[parent], self.images[pos])
            };
            if self.stamp[y] == self.epoch {
                return false;
            }
            self.stamp[y] = self.epoch;
            self.map[x] = y;
        }
        for &(x, _, _) in layer {
            for pos in 0..=depth {
                let xa = self.source.mul(x, self.plan.gens[pos]);
                if self.map[xa] != self.target.mul(self.map[x], self.images[pos]) {
                    return false;
                }
            }
        }
        true
    }

    /// Depth-first enumeration; `visit` returns false to stop the search.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.plan.gens.len() {
            return visit(&self.map);
        }
        for k in 0..self.candidates[depth].len() {
            self.images[depth] = self.candidates[depth][k];
            if self.consistent(depth) && !self.run(depth + 1, visit) {
                return false;
            }
        }
        true
    }
}

fn invariant_profile(g: &FiniteGroup) -> (Vec<(usize, usize)>, usize, bool) {
    let sizes = class_sizes(g);
    let mut profile: Vec<(usize, usize)> = (0..g.order())
        .map(|x| (g.element_order(x), sizes[x]))
        .collect();
    profile.sort_unstable();
    (profile, center(g).order(), g.is_abelian())
}

/// Searches for an isomorphism `a → b`.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<Homomorphism>> {
    let cap = Limits::current().aut_cap;
    if a.order() > cap {
        return Err(GroupError::order_bound(
            format!("isomorphism search on order {}", a.order()),
            cap,
        ));
    }
    if a.order() != b.order() || invariant_profile(a) != invariant_profile(b) {
        return Ok(None);
    }
    let mut search = Search::new(a, b);
    let mut found = None;
    search.run(0, &mut |map| {
        found = Some(map.to_vec());
        false
    });
    match found {
        Some(map) => {
            let iso = Homomorphism::from_map(a, b, map)?;
            debug_assert!(iso.is_iso());
            Ok(Some(iso))
        }
        None => Ok(None),
    }
}

/// Every automorphism of `group` as an index map, in search order.
pub(crate) fn enumerate_automorphisms(
    group: &FiniteGroup,
    limit: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut search = Search::new(group, group);
    let mut out = Vec::new();
    let mut overflow = false;
    search.run(0, &mut |map| {
        if out.len() == limit {
            overflow = true;
            return false;
        }
        out.push(map.to_vec());
        true
    });
    if overflow {
        return Err(GroupError::order_bound(
            format!("automorphism group of a group of order {}", group.order()),
            limit,
        ));
    }
    Ok(out)
}
