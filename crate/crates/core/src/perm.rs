//! Permutations of `{0, .., degree - 1}`.

use std::fmt;

use crate::error::{GroupError, Result};

/// A permutation stored as its image list: `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        if n == 0 {
            return Err(GroupError::NotAPermutation(
                "degree must be positive".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 1], [2, 3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        if degree == 0 {
            return Err(GroupError::NotAPermutation(
                "degree must be positive".into(),
            ));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (pos, &point) in cycle.iter().enumerate() {
                if point >= degree {
                    return Err(GroupError::NotAPermutation(format!(
                        "point {point} outside degree {degree}"
                    )));
                }
                if touched[point] {
                    return Err(GroupError::NotAPermutation(format!(
                        "point {point} appears twice"
                    )));
                }
                touched[point] = true;
                images[point] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    /// Extends the permutation to a larger degree, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Perm { images }
    }

    /// Moves the permutation onto the points `offset..offset + degree` of a
    /// domain of size `total`.
    pub fn shift(&self, offset: usize, total: usize) -> Perm {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<usize> = (0..total).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset + x;
        }
        Perm { images }
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Prime factorisation as `(p, k)` pairs in increasing `p`.
pub(crate) fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // Hand evaluation of (0 1)∘(1 2): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0.
        // The opposite convention would give [2, 0, 1].
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        assert_eq!(a.compose(&b).unwrap().images(), &[1, 2, 0]);
        assert_eq!(b.compose(&a).unwrap().images(), &[2, 0, 1]);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert_eq!(
            a.compose(&b),
            Err(GroupError::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
        assert!(Perm::from_images(vec![]).is_err());
        assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn display_and_order() {
        let p = cyc(6, &[&[0, 1, 2], &[4, 5]]);
        assert_eq!(p.to_string(), "(0 1 2)(4 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::identity(4).to_string(), "()");
        assert_eq!(Perm::identity(4).order(), 1);
    }

    #[test]
    fn number_theory_helpers() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(9));
        assert_eq!(lcm(4, 6), 12);
    }

    fn arb_perm() -> impl Strategy<Value = Perm> {
        (1usize..9)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_law(p in arb_perm()) {
            let n = p.degree();
            prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Perm::identity(n));
            prop_assert_eq!(p.inverse().compose(&p).unwrap(), Perm::identity(n));
            prop_assert_eq!(p.compose(&Perm::identity(n)).unwrap(), p.clone());
        }

        #[test]
        fn cycles_round_trip(p in arb_perm()) {
            let q = Perm::from_cycles(p.degree(), &p.cycles()).unwrap();
            prop_assert_eq!(q, p);
        }
    }
}
