//! Permutations stored as image arrays.
//!
//! Points are 0-based internally and 1-based at every text boundary
//! (cycle notation, `.pgr` files). Products act on the right:
//! `a.mul(&b)` applies `a` first, then `b`, so `x^(ab) = (x^a)^b`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 0-based image array, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotBijective { degree: n });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from a 1-based image array.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut v = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n {
                return Err(Error::NotBijective { degree: n });
            }
            v.push((i - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Builds a permutation of the given degree from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = alloc::vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > degree || touched[a - 1] {
                    return Err(Error::NotBijective { degree });
                }
                touched[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                if b == 0 || b > degree {
                    return Err(Error::NotBijective { degree });
                }
                images[a - 1] = (b - 1) as u32;
            }
        }
        Self::from_images(images)
    }

    /// Unchecked constructor for arrays already known to be bijective.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image array, the `.pgr` line form.
    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Permutation) -> Permutation {
        let mut out = alloc::vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            out[by.images[i] as usize] = by.images[j as usize];
        }
        Permutation { images: out }
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| other.images[j as usize] == self.images[other.images[i] as usize])
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = crate::arith::lcm(ord, len);
        }
        ord
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i as u32 != j)
            .map(|(i, _)| i)
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_based(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_based(&[1, 4, 2]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn right_action_convention() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).image(0), 2);
        assert_eq!(a.mul(&b).to_string(), "(1 3 2)");
        assert_eq!(a.conjugate(&b), b.inverse().mul(&a).mul(&b));
    }

    #[test]
    fn order_and_cycles() {
        let p = Permutation::from_cycles(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]]).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.to_string(), "(3 7 11 8)(4 10 5 6)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_and_pow_laws(p in arb_perm(9), q in arb_perm(9), k in -20i64..20) {
            prop_assert!(p.mul(&p.inverse()).is_identity());
            prop_assert!(p.pow(p.order() as i64).is_identity());
            prop_assert_eq!(p.pow(k).mul(&p.pow(-k)), Permutation::identity(9));
            prop_assert_eq!(p.mul(&q).inverse(), q.inverse().mul(&p.inverse()));
            prop_assert_eq!(p.commutes_with(&q), p.mul(&q) == q.mul(&p));
            prop_assert_eq!(Permutation::commutator(&p, &q).is_identity(), p.commutes_with(&q));
        }

        #[test]
        fn cycles_round_trip(p in arb_perm(8)) {
            let cycles: Vec<Vec<usize>> = p.cycles().into_iter()
                .map(|c| c.into_iter().map(|x| x + 1).collect()).collect();
            let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            prop_assert_eq!(Permutation::from_cycles(8, &refs).unwrap(), p);
        }
    }

    #[test]
    fn one_based_round_trip() {
        let p = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(p.one_based(), vec![2, 3, 1]);
    }
}
