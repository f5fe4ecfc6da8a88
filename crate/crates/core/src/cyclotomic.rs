//! Exact arithmetic in `Z[zeta_e]` on multiplicity vectors.
//!
//! An element is a coefficient vector `v` of length `e` standing for
//! `sum_k v[k] zeta_e^k`. Such vectors are not unique; equality is decided
//! by reducing modulo the cyclotomic polynomial `Phi_e`.

use alloc::vec::Vec;

/// `Phi_n` with integer coefficients, constant term first.
///
/// Uses `Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)`: multiply by the positive
/// factors first, then divide out the negative ones.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i128> {
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut poly = alloc::vec![1i128];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            let mut next = alloc::vec![0i128; poly.len() + d as usize];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d as usize] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            // exact division by x^d - 1: q[i] = q[i - d] - p[i]
            let d = d as usize;
            let len = poly.len() - d;
            let mut q = alloc::vec![0i128; len];
            for i in 0..len {
                q[i] = -poly[i] + if i >= d { q[i - d] } else { 0 };
            }
            poly = q;
        }
    }
    poly
}

fn mobius(n: u64) -> i32 {
    let f = crate::arith::factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Reduction modulo `Phi_e` for a fixed `e`.
#[derive(Clone, Debug)]
pub struct Reducer {
    e: usize,
    phi_degree: usize,
    /// Nonzero `(index, coefficient)` pairs of `Phi_e` below the leading term.
    phi_terms: Vec<(usize, i128)>,
}

impl Reducer {
    pub fn new(e: u64) -> Self {
        let phi = cyclotomic_polynomial(e);
        let phi_degree = phi.len() - 1;
        Reducer {
            e: e as usize,
            phi_degree,
            phi_terms: phi[..phi_degree]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect(),
        }
    }

    pub fn exponent(&self) -> usize {
        self.e
    }

    /// Canonical form: the remainder of degree below `phi(e)`.
    pub fn reduce(&self, v: &[i128]) -> Vec<i128> {
        debug_assert_eq!(v.len(), self.e);
        let mut r = v.to_vec();
        for k in (self.phi_degree..r.len()).rev() {
            let c = r[k];
            if c == 0 {
                continue;
            }
            r[k] = 0;
            let shift = k - self.phi_degree;
            for &(i, pc) in &self.phi_terms {
                r[shift + i] -= c * pc;
            }
        }
        r.truncate(self.phi_degree);
        r
    }

    /// `Some(n)` when the element equals the rational integer `n`.
    pub fn as_integer(&self, v: &[i128]) -> Option<i128> {
        let r = self.reduce(v);
        r[1..].iter().all(|&c| c == 0).then_some(r[0])
    }

    pub fn is_zero(&self, v: &[i128]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }
}

/// Adds `w * a * conj(b)` to `acc`, all of length `e`.
pub fn add_product_conj(acc: &mut [i128], a: &[u32], b: &[u32], w: i128) {
    let e = acc.len();
    let support = |v: &[u32]| -> Vec<(usize, i128)> {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, x as i128))
            .collect()
    };
    let sb = support(b);
    for (i, x) in support(a) {
        for &(j, y) in &sb {
            acc[(i + e - j) % e] += w * x * y;
        }
    }
}

/// Adds `w * a` to `acc`.
pub fn add_scaled(acc: &mut [i128], a: &[u32], w: i128) {
    for (s, &x) in acc.iter_mut().zip(a) {
        *s += w * x as i128;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len(), 9);
    }

    #[test]
    fn sums_of_roots() {
        let r = Reducer::new(5);
        // 1 + z + z^2 + z^3 + z^4 = 0
        assert!(r.is_zero(&[1, 1, 1, 1, 1]));
        // z + z^4 + z^2 + z^3 = -1
        assert_eq!(r.as_integer(&[0, 1, 1, 1, 1]), Some(-1));
        assert_eq!(r.as_integer(&[0, 1, 0, 0, 1]), None);
        let r6 = Reducer::new(6);
        // z^2 + z^4 = -1 for z a primitive 6th root
        assert_eq!(r6.as_integer(&[0, 0, 1, 0, 1, 0]), Some(-1));
    }

    #[test]
    fn conj_product() {
        let mut acc = vec![0i128; 4];
        // |i|^2 = 1
        add_product_conj(&mut acc, &[0, 1, 0, 0], &[0, 1, 0, 0], 1);
        assert_eq!(Reducer::new(4).as_integer(&acc), Some(1));
    }
}
