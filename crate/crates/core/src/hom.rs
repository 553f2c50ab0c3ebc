//! Homomorphisms between enumerated groups.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{subgroup_generated, Subgroup};

/// A validated homomorphism, stored as a total map on element indices.
#[derive(Clone)]
pub struct Homomorphism {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    images: Vec<usize>,
    mono: bool,
    epi: bool,
}

/// Pair-law audit size: every constructed map with a domain at most this
/// large is rechecked on all pairs in debug builds.
const EXHAUSTIVE_AUDIT: usize = 200;

impl Homomorphism {
    /// Wraps a total index map after checking it against the generators.
    ///
    /// `φ(x·s) = φ(x)·φ(s)` for every element `x` and generator `s`, together
    /// with `φ(1) = 1`, implies the full homomorphism law by induction on
    /// word length.
    pub fn from_map(
        domain: &FiniteGroup,
        codomain: &FiniteGroup,
        images: Vec<usize>,
    ) -> Result<Homomorphism> {
        if images.len() != domain.order() {
            return Err(GroupError::NotAHomomorphism("map is not total".into()));
        }
        for &y in &images {
            codomain.check_index(y)?;
        }
        if images[0] != 0 {
            return Err(GroupError::NotAHomomorphism(
                "identity is not preserved".into(),
            ));
        }
        for x in 0..domain.order() {
            for &s in domain.generator_indices() {
                if images[domain.mul(x, s)] != codomain.mul(images[x], images[s]) {
                    return Err(GroupError::NotAHomomorphism(format!(
                        "law fails at element {x} and generator {s}"
                    )));
                }
            }
        }
        let hom = Homomorphism::assemble(domain, codomain, images);
        #[cfg(debug_assertions)]
        if domain.order() <= EXHAUSTIVE_AUDIT {
            debug_assert!(hom.satisfies_pair_law());
        }
        Ok(hom)
    }

    fn assemble(domain: &FiniteGroup, codomain: &FiniteGroup, images: Vec<usize>) -> Homomorphism {
        let mono = images.iter().skip(1).all(|&y| y != 0);
        let mut hit = FixedBitSet::with_capacity(codomain.order());
        for &y in &images {
            hit.insert(y);
        }
        let epi = hit.count_ones(..) == codomain.order();
        Homomorphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images,
            mono,
            epi,
        }
    }

    /// Exhaustive check of `φ(xy) = φ(x)φ(y)` over all pairs.
    pub fn satisfies_pair_law(&self) -> bool {
        let (d, c) = (&self.domain, &self.codomain);
        (0..d.order()).all(|x| {
            (0..d.order())
                .all(|y| self.images[d.mul(x, y)] == c.mul(self.images[x], self.images[y]))
        })
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_mono(&self) -> bool {
        self.mono
    }

    pub fn is_epi(&self) -> bool {
        self.epi
    }

    pub fn is_iso(&self) -> bool {
        self.mono && self.epi
    }

    pub fn kernel(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.domain.order());
        for (x, &y) in self.images.iter().enumerate() {
            if y == 0 {
                members.insert(x);
            }
        }
        Subgroup::from_members(&self.domain, members).with_normal_flag(true)
    }

    pub fn image(&self) -> Subgroup {
        self.map_subgroup(&Subgroup::whole(&self.domain))
    }

    /// Image of a subgroup of the domain.
    pub fn map_subgroup(&self, sub: &Subgroup) -> Subgroup {
        subgroup_generated(
            &self.codomain,
            sub.generators().iter().map(|&x| self.images[x]),
        )
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &Homomorphism) -> Result<Homomorphism> {
        if !self.codomain.same_as(&after.domain) {
            return Err(GroupError::NotAHomomorphism(
                "composition across different groups".into(),
            ));
        }
        let images = self.images.iter().map(|&y| after.images[y]).collect();
        Ok(Homomorphism::assemble(
            &self.domain,
            &after.codomain,
            images,
        ))
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<Homomorphism> {
        if !self.is_iso() {
            return Err(GroupError::NotMonomorphism);
        }
        let mut images = vec![0; self.codomain.order()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Ok(Homomorphism::assemble(&self.codomain, &self.domain, images))
    }

    pub fn identity(group: &FiniteGroup) -> Homomorphism {
        Homomorphism::assemble(group, group, (0..group.order()).collect())
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Homomorphism")
            .field("domain_order", &self.domain.order())
            .field("codomain_order", &self.codomain.order())
            .field("mono", &self.mono)
            .field("epi", &self.epi)
            .finish()
    }
}

/// Extends a generator assignment along the domain's breadth-first words.
///
/// `images[s]` is the codomain index assigned to the domain's `s`-th
/// generator.
pub fn hom_from_generator_images(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    images: &[usize],
) -> Result<Homomorphism> {
    let gens = domain.generator_indices();
    if images.len() != gens.len() {
        return Err(GroupError::NotAHomomorphism(format!(
            "{} generator images for {} generators",
            images.len(),
            gens.len()
        )));
    }
    for &y in images {
        codomain.check_index(y)?;
    }
    let mut map = vec![0usize; domain.order()];
    for (j, &(parent, s)) in domain.tree().iter().enumerate().skip(1) {
        map[j] = codomain.mul(map[parent], images[s]);
    }
    for (s, &g) in gens.iter().enumerate() {
        if map[g] != images[s] {
            return Err(GroupError::NotAHomomorphism(format!(
                "generator {s} reaches two different images"
            )));
        }
    }
    Homomorphism::from_map(domain, codomain, map)
}
