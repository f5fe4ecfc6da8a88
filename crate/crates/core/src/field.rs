//! Finite fields `GF(p^k)` for the matrix-group constructors.
//!
//! Elements are integers `0..q` read as base-`p` coefficient vectors of a
//! polynomial in the generator `t`, reduced modulo a fixed monic irreducible.
//! The irreducible is the `choice`-th monic irreducible of degree `k` in
//! increasing order of its encoding `sum c_i p^i`; `choice = 0` is the default.

use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        Self::with_choice(q, 0)
    }

    pub fn with_choice(q: u64, choice: usize) -> Result<Self> {
        let (p, k) = arith::prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("{q} is not a prime power")))?;
        if q > 1 << 16 {
            return Err(Error::InvalidParameter(alloc::format!("field size {q} too large")));
        }
        let modulus = if k == 1 {
            alloc::vec![0, 1]
        } else {
            nth_irreducible(p, k, choice).ok_or_else(|| {
                Error::InvalidParameter(alloc::format!("no irreducible #{choice} of degree {k} over F_{p}"))
            })?
        };
        let mut field = FiniteField {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let g = (1..q)
            .find(|&g| field.slow_order(g) == q - 1)
            .expect("multiplicative group of a field is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = alloc::vec![0u32; q as usize];
        let mut x = 1u64;
        for i in 0..q - 1 {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = field.slow_mul(x, g);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn size(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        let mut d = alloc::vec![0; self.k as usize];
        for c in d.iter_mut() {
            *c = x % self.p;
            x /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let d: Vec<u64> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.undigits(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
        self.exp[e as usize] as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        let n = self.q - 1;
        self.exp[((n - self.log[a as usize] as u64) % n) as usize] as u64
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        let l = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[l as usize] as u64
    }

    /// The generator of the multiplicative group fixed by the log tables.
    pub fn primitive_element(&self) -> u64 {
        self.exp[1 % self.exp.len()] as u64
    }

    /// `1, t, ..., t^(k-1)`: an additive basis over the prime field.
    pub fn prime_field_basis(&self) -> Vec<u64> {
        (0..self.k).map(|i| self.p.pow(i)).collect()
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let da = self.digits(a);
        let db = self.digits(b);
        let k = self.k as usize;
        let mut prod = alloc::vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        for i in (k..2 * k).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..=k {
                let sub = c * self.modulus[j] % self.p;
                prod[i - k + j] = (prod[i - k + j] + self.p - sub) % self.p;
            }
        }
        self.undigits(&prod[..k])
    }

    fn slow_order(&self, g: u64) -> u64 {
        let mut x = g;
        let mut o = 1;
        while x != 1 {
            x = self.slow_mul(x, g);
            o += 1;
            if o > self.q {
                return 0;
            }
        }
        o
    }
}

/// Polynomial remainder over `F_p`, coefficients constant-first.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = arith::inv_mod(b[db], p);
    while r.len() > db {
        let c = *r.last().unwrap() * lead_inv % p;
        let shift = r.len() - 1 - db;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * bj % p) % p;
        }
        r.pop();
        while r.len() > 1 && *r.last().unwrap() == 0 && r.len() > db {
            r.pop();
        }
    }
    r
}

fn monic_of_degree(p: u64, d: u32, code: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(d as usize + 1);
    let mut c = code;
    for _ in 0..d {
        v.push(c % p);
        c /= p;
    }
    v.push(1);
    v
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = (f.len() - 1) as u32;
    for d in 1..=n / 2 {
        for code in 0..p.pow(d) {
            let g = monic_of_degree(p, d, code);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn nth_irreducible(p: u64, k: u32, n: usize) -> Option<Vec<u64>> {
    (0..p.pow(k))
        .map(|code| monic_of_degree(p, k, code))
        .filter(|f| is_irreducible(f, p))
        .nth(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_polynomials() {
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::with_choice(8, 1).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert!(FiniteField::new(12).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 8, 9, 16, 27] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                    assert_eq!(f.pow(a, q - 1), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                    for c in [0, 1, q - 1] {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
