//! Standard permutation representations of the common small groups.

use std::fmt;

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::perm::{is_prime, Perm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    Cyclic(usize),
    /// Dihedral group of the given *order* (even, at least 4).
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    ElementaryAbelian {
        p: usize,
        k: usize,
    },
}

impl NamedGroup {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(GroupError::InvalidParameter(msg));
        match *self {
            NamedGroup::Cyclic(0) => bad("cyclic order must be positive".into()),
            NamedGroup::Dihedral(n) if n < 4 || n % 2 != 0 => {
                bad(format!("dihedral order {n} must be even and at least 4"))
            }
            NamedGroup::Symmetric(0) | NamedGroup::Alternating(0) => {
                bad("symmetric/alternating degree must be positive".into())
            }
            NamedGroup::ElementaryAbelian { p, .. } if !is_prime(p) => {
                bad(format!("elementary abelian base {p} is not prime"))
            }
            NamedGroup::ElementaryAbelian { k: 0, .. } => {
                bad("elementary abelian rank must be positive".into())
            }
            _ => Ok(()),
        }
    }

    /// Group order, computed from the parameters alone.
    pub fn order(&self) -> usize {
        match *self {
            NamedGroup::Cyclic(n) | NamedGroup::Dihedral(n) => n,
            NamedGroup::Symmetric(n) => factorial(n),
            NamedGroup::Alternating(n) => (factorial(n) / 2).max(1),
            NamedGroup::Quaternion8 => 8,
            NamedGroup::ElementaryAbelian { p, k } => {
                p.saturating_pow(k.min(u32::MAX as usize) as u32)
            }
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGroup::Cyclic(n) => write!(f, "C{n}"),
            NamedGroup::Dihedral(n) => write!(f, "D{n}"),
            NamedGroup::Symmetric(n) => write!(f, "S{n}"),
            NamedGroup::Alternating(n) => write!(f, "A{n}"),
            NamedGroup::Quaternion8 => write!(f, "Q8"),
            NamedGroup::ElementaryAbelian { p, k } => write!(f, "E{p}^{k}"),
        }
    }
}

/// Saturates instead of overflowing; only compared against order bounds.
fn factorial(n: usize) -> usize {
    (1..=n).fold(1usize, |acc, k| acc.saturating_mul(k))
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    Perm::from_cycles(degree, &[points.into_iter().collect()]).expect("valid cycle")
}

fn generators(kind: NamedGroup) -> (usize, Vec<Perm>) {
    match kind {
        NamedGroup::Cyclic(n) => (n, if n > 1 { vec![cycle(n, 0..n)] } else { vec![] }),
        NamedGroup::Dihedral(4) => (
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
        ),
        NamedGroup::Dihedral(n) => {
            let m = n / 2;
            let reflection = Perm::from_images((0..m).map(|i| (m - i) % m).collect()).unwrap();
            (m, vec![cycle(m, 0..m), reflection])
        }
        NamedGroup::Symmetric(n) => match n {
            1 => (1, vec![]),
            2 => (2, vec![cycle(2, 0..2)]),
            _ => (n, vec![cycle(n, [0, 1]), cycle(n, 0..n)]),
        },
        NamedGroup::Alternating(n) => match n {
            1 | 2 => (n, vec![]),
            3 => (3, vec![cycle(3, 0..3)]),
            _ if n % 2 == 1 => (n, vec![cycle(n, 0..3), cycle(n, 0..n)]),
            _ => (n, vec![cycle(n, 0..3), cycle(n, 1..n)]),
        },
        NamedGroup::Quaternion8 => (8, quaternion_generators()),
        NamedGroup::ElementaryAbelian { p, k } => {
            let degree = p * k;
            let gens = (0..k).map(|i| cycle(degree, i * p..(i + 1) * p)).collect();
            (degree, gens)
        }
    }
}

/// Left multiplication by `i` and `j` on the eight unit quaternions.
fn quaternion_generators() -> Vec<Perm> {
    // Element (sign, unit): unit 0..4 = 1, i, j, k; index = 4 * sign + unit.
    // Unit products u * v = sign * w.
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |unit: usize| {
        let images = (0..8)
            .map(|x| {
                let (sx, ux) = (x / 4, x % 4);
                let (s, w) = TABLE[unit][ux];
                4 * ((s + sx) % 2) + w
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    vec![left(1), left(2)]
}

/// Standard faithful permutation representation of `kind`.
pub fn make_named(kind: NamedGroup) -> Result<FiniteGroup> {
    kind.validate()?;
    let limit = Limits::current().max_order;
    if kind.order() > limit {
        return Err(GroupError::order_bound(
            format!("{kind} of order {}", kind.order()),
            limit,
        ));
    }
    let (degree, gens) = generators(kind);
    let group = FiniteGroup::generate(degree, &gens)?;
    debug_assert_eq!(group.order(), kind.order(), "{kind}");
    Ok(group)
}
