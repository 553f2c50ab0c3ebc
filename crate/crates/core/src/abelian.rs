//! Primary decomposition of finite abelian groups and the exponent-lift
//! essential extension.

use crate::construct::direct_product;
use crate::error::{GroupError, Result};
use crate::essential::{is_essential, EssentialCertificate};
use crate::group::FiniteGroup;
use crate::hom::{hom_from_generator_images, Homomorphism};
use crate::named::{make_named, NamedGroup};
use crate::perm::factorize;
use crate::subgroup::close_indices;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimaryFactor {
    pub p: usize,
    pub k: u32,
    /// Element of order `p^k` generating this cyclic factor.
    pub generator: usize,
}

impl PrimaryFactor {
    pub fn order(&self) -> usize {
        self.p.pow(self.k)
    }
}

#[derive(Clone, Debug)]
pub struct PrimaryDecomposition {
    /// Sorted by prime, then exponent.
    pub factors: Vec<PrimaryFactor>,
    /// `C_{p1^k1} × C_{p2^k2} × ..`, one generator per factor in order.
    pub cyclic_product: FiniteGroup,
    /// Isomorphism from `cyclic_product` onto the decomposed group.
    pub iso: Homomorphism,
}

/// Builds `C_{n1} × C_{n2} × ..` whose generator list is one cycle per factor.
pub(crate) fn cyclic_product(orders: &[usize]) -> Result<FiniteGroup> {
    let mut group = FiniteGroup::trivial(1);
    let mut first = true;
    for &n in orders {
        let c = make_named(NamedGroup::Cyclic(n))?;
        group = if first {
            c
        } else {
            direct_product(&group, &c)?.group
        };
        first = false;
    }
    Ok(group)
}

/// Exponents of the cyclic factors of an abelian `p`-group, largest first,
/// read off from the counts `|{x : x^(p^j) = 1}|`.
fn p_group_type(group: &FiniteGroup, p: usize) -> Vec<u32> {
    let is_p_power = |o: usize| factorize(o).iter().all(|&(q, _)| q == p);
    let orders: Vec<usize> = group
        .element_orders()
        .iter()
        .copied()
        .filter(|&o| is_p_power(o))
        .collect();
    let max_exp = orders.iter().map(|&o| p_exponent(o, p)).max().unwrap_or(0);
    let omega = |j: u32| orders.iter().filter(|&&o| p_exponent(o, p) <= j).count();
    // at_least[j] = number of factors of order at least p^j.
    let at_least: Vec<u32> = (0..=max_exp + 1)
        .map(|j| {
            if j == 0 {
                0
            } else {
                p_exponent(omega(j) / omega(j - 1), p)
            }
        })
        .collect();
    let mut exps = Vec::new();
    for j in (1..=max_exp).rev() {
        let exactly = at_least[j as usize] - at_least.get(j as usize + 1).copied().unwrap_or(0);
        exps.extend(std::iter::repeat_n(j, exactly as usize));
    }
    exps
}

/// `j` with `n = p^j`, for `n` a power of `p`.
fn p_exponent(mut n: usize, p: usize) -> u32 {
    let mut j = 0;
    while n > 1 {
        n /= p;
        j += 1;
    }
    j
}

/// Picks elements of the required orders whose cyclic subgroups form an
/// internal direct product.
fn choose_basis(group: &FiniteGroup, orders: &[usize], chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == orders.len() {
        return true;
    }
    let span = close_indices(group, chosen).count_ones(..);
    let want = orders[chosen.len()];
    for x in 0..group.order() {
        if group.element_order(x) != want {
            continue;
        }
        chosen.push(x);
        if close_indices(group, chosen).count_ones(..) == span * want
            && choose_basis(group, orders, chosen)
        {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn abelian_primary_decomposition(group: &FiniteGroup) -> Result<PrimaryDecomposition> {
    if !group.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let mut factors = Vec::new();
    for (p, _) in factorize(group.order()) {
        let exps = p_group_type(group, p);
        let orders: Vec<usize> = exps.iter().map(|&k| p.pow(k)).collect();
        let mut basis = Vec::new();
        if !choose_basis(group, &orders, &mut basis) {
            return Err(GroupError::Counterexample(format!(
                "no {p}-primary basis of type {orders:?}"
            )));
        }
        let mut part: Vec<PrimaryFactor> = exps
            .iter()
            .zip(basis)
            .map(|(&k, generator)| PrimaryFactor { p, k, generator })
            .collect();
        part.sort_by_key(|f| (f.k, f.generator));
        factors.extend(part);
    }
    let product = cyclic_product(&factors.iter().map(PrimaryFactor::order).collect::<Vec<_>>())?;
    let images: Vec<usize> = factors.iter().map(|f| f.generator).collect();
    let iso = hom_from_generator_images(&product, group, &images)?;
    if !iso.is_iso() {
        return Err(GroupError::Counterexample(
            "primary factors do not form a direct product".into(),
        ));
    }
    Ok(PrimaryDecomposition {
        factors,
        cyclic_product: product,
        iso,
    })
}

#[derive(Clone, Debug)]
pub struct AbelianExtension {
    pub decomposition: PrimaryDecomposition,
    /// `C_{p1^(k1+1)} × C_{p2^(k2+1)} × ..`
    pub extension: FiniteGroup,
    pub embedding: Homomorphism,
    pub certificate: EssentialCertificate,
}

impl AbelianExtension {
    /// Spec string of the extension group, e.g. `C4 x C9`.
    pub fn extension_spec(&self) -> String {
        self.decomposition
            .factors
            .iter()
            .map(|f| format!("C{}", f.order() * f.p))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

/// Proper essential extension of a nontrivial abelian group, obtained by
/// raising every primary cyclic factor `C_{p^k}` to `C_{p^(k+1)}` and
/// embedding each generator as the `p`-th power of its lift.
pub fn abelian_essential_extension(group: &FiniteGroup) -> Result<AbelianExtension> {
    if !group.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    if group.is_trivial() {
        return Err(GroupError::TrivialGroup);
    }
    let decomposition = abelian_primary_decomposition(group)?;
    let lifted: Vec<usize> = decomposition
        .factors
        .iter()
        .map(|f| f.order() * f.p)
        .collect();
    let extension = cyclic_product(&lifted)?;
    let images: Vec<usize> = decomposition
        .factors
        .iter()
        .zip(extension.generator_indices())
        .map(|(f, &g)| extension.pow(g, f.p))
        .collect();
    let from_product =
        hom_from_generator_images(&decomposition.cyclic_product, &extension, &images)?;
    let embedding = decomposition.iso.inverse()?.then(&from_product)?;
    if !embedding.is_mono() {
        return Err(GroupError::Counterexample(
            "exponent lift is not injective".into(),
        ));
    }
    let image = embedding.image();
    let certificate = is_essential(&extension, &image)?;
    if image.is_whole() || !certificate.is_essential() {
        return Err(GroupError::Counterexample(
            "exponent lift is not a proper essential extension".into(),
        ));
    }
    Ok(AbelianExtension {
        decomposition,
        extension,
        embedding,
        certificate,
    })
}
