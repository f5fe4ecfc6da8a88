//! Exact character tables by the Dixon-Schneider method.
//!
//! The class matrices `M_i[j][k] = a_ijk` are simultaneously diagonalized
//! over `F_l`, where `l` is the least prime above `|G|` with `l = 1 (mod e)`.
//! Each common eigenvector, scaled to 1 at the identity class, is a central
//! character `omega`. Degrees come from `|G| / chi(1)^2 = sum_c omega(c) omega(c*) / |c|`
//! and values from `chi(g_c) = omega(c) chi(1) / |c|`. Values are lifted to
//! `Z[zeta_e]` by a discrete Fourier transform over the powers of each class
//! representative, which recovers eigenvalue multiplicities in `0..=chi(1)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::arith::{self, inv_mod, mul_mod, pow_mod};
use crate::classes::ClassData;
use crate::cyclotomic::{self, Reducer};
use crate::error::{Error, Result};
use crate::modular;

/// How many candidates `1 + k e` are tried when searching for the lifting prime.
pub const LIFTING_PRIME_SEARCH: u64 = 1_000_000;

/// Structure constants `a_ijk = #{(x, y) : x in C_i, y in C_j, xy = g_k}`, flattened as `[(i r + j) r + k]`.
pub fn structure_constants(classes: &ClassData) -> Result<Vec<u64>> {
    let g = classes.group();
    g.check_cap()?;
    let r = classes.len();
    let mut a = alloc::vec![0u64; r * r * r];
    let elements = g.elements()?;
    let class_by_rank: Vec<usize> = (0..g.order()).map(|x| classes.class_of_rank(x)).collect();
    for (k, z) in classes.reps().iter().enumerate() {
        for (x_rank, x) in elements.iter().enumerate() {
            let y = x.inverse().mul(z);
            let cy = classes.class_of(&y).expect("product lies in G");
            a[(class_by_rank[x_rank] * r + cy) * r + k] += 1;
        }
    }
    Ok(a)
}

/// The `i`-th class matrix, rows `j`, columns `k`.
pub fn class_matrix(classes: &ClassData, i: usize) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    if i >= r {
        return Err(Error::InvalidParameter(alloc::format!("class index {i} out of range")));
    }
    let a = structure_constants(classes)?;
    Ok((0..r).map(|j| (0..r).map(|k| a[(i * r + j) * r + k]).collect()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    group_order: u64,
    exponent: u64,
    lifting_prime: u64,
    class_sizes: Vec<u64>,
    class_orders: Vec<u64>,
    degrees: Vec<u64>,
    /// `values[chi][c][k]` is the multiplicity of `zeta_e^k` in `chi(g_c)`.
    values: Vec<Vec<Vec<u32>>>,
    kernels: Vec<Vec<usize>>,
    codegrees: Vec<u64>,
}

impl CharacterTable {
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn lifting_prime(&self) -> u64 {
        self.lifting_prime
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn value(&self, chi: usize, class: usize) -> &[u32] {
        &self.values[chi][class]
    }

    pub fn kernels(&self) -> &[Vec<usize>] {
        &self.kernels
    }

    pub fn codegrees(&self) -> &[u64] {
        &self.codegrees
    }

    pub fn kernel_order(&self, chi: usize) -> u64 {
        self.kernels[chi].iter().map(|&c| self.class_sizes[c]).sum()
    }

    /// Tab-separated dump, one character per line: degree, codegree,
    /// comma-separated kernel classes, then one comma-separated `e`-vector per class.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for chi in 0..self.len() {
            let kernel: Vec<String> = self.kernels[chi].iter().map(|c| alloc::format!("{c}")).collect();
            write!(s, "{}\t{}\t{}", self.degrees[chi], self.codegrees[chi], kernel.join(",")).unwrap();
            for v in &self.values[chi] {
                s.push('\t');
                for (k, m) in v.iter().enumerate() {
                    if k > 0 {
                        s.push(',');
                    }
                    write!(s, "{m}").unwrap();
                }
            }
            s.push('\n');
        }
        s
    }

    /// Exact checks: row orthogonality, column orthogonality against the
    /// degree column, and the sum of squared degrees.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let n = self.group_order as i128;
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != self.group_order {
            return Err(Error::InvariantViolation(alloc::format!(
                "sum of squared degrees {sum_sq} != |G| = {}",
                self.group_order
            )));
        }
        let reducer = Reducer::new(self.exponent);
        let e = self.exponent as usize;
        let r = self.len();
        for i in 0..r {
            for j in i..r {
                let mut acc = alloc::vec![0i128; e];
                for c in 0..r {
                    cyclotomic::add_product_conj(&mut acc, &self.values[i][c], &self.values[j][c], self.class_sizes[c] as i128);
                }
                let expected = if i == j { n } else { 0 };
                if reducer.as_integer(&acc) != Some(expected) {
                    return Err(Error::InvariantViolation(alloc::format!(
                        "characters {i} and {j} are not orthonormal"
                    )));
                }
            }
        }
        for c in 1..r {
            let mut acc = alloc::vec![0i128; e];
            for chi in 0..r {
                cyclotomic::add_scaled(&mut acc, &self.values[chi][c], self.degrees[chi] as i128);
            }
            if !reducer.is_zero(&acc) {
                return Err(Error::InvariantViolation(alloc::format!(
                    "column {c} is not orthogonal to the degree column"
                )));
            }
        }
        Ok(())
    }
}

/// Common eigenspaces of the class matrices, each returned as a single vector.
fn central_characters(classes: &ClassData, a: &[u64], l: u64) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = alloc::vec![identity];
    for i in 1..r {
        if spaces.iter().all(|w| w.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for w in spaces {
            if w.len() == 1 {
                next.push(w);
                continue;
            }
            let d = w.len();
            let pivots: Vec<usize> = w
                .iter()
                .map(|row| row.iter().position(|&x| x != 0).unwrap())
                .collect();
            // image of each basis vector under M_i, in basis coordinates (read at pivots)
            let mut c = alloc::vec![alloc::vec![0u64; d]; d];
            for (k, v) in w.iter().enumerate() {
                for (k2, &j) in pivots.iter().enumerate() {
                    let mut s = 0u64;
                    for (m, &vm) in v.iter().enumerate() {
                        let coef = a[(i * r + j) * r + m];
                        if coef != 0 && vm != 0 {
                            s = (s + mul_mod(coef % l, vm, l)) % l;
                        }
                    }
                    c[k2][k] = s;
                }
            }
            let poly = modular::char_poly(&c, l);
            let mut total = 0;
            for lambda in modular::roots(&poly, l) {
                let mut shifted = c.clone();
                for (k, row) in shifted.iter_mut().enumerate() {
                    row[k] = (row[k] + l - lambda) % l;
                }
                let mut vecs: Vec<Vec<u64>> = modular::kernel(&shifted, l)
                    .into_iter()
                    .map(|y| {
                        let mut v = alloc::vec![0u64; r];
                        for (k, &yk) in y.iter().enumerate() {
                            if yk == 0 {
                                continue;
                            }
                            for (m, &wm) in w[k].iter().enumerate() {
                                v[m] = (v[m] + mul_mod(yk, wm, l)) % l;
                            }
                        }
                        v
                    })
                    .collect();
                modular::rref(&mut vecs, l);
                total += vecs.len();
                next.push(vecs);
            }
            if total != d {
                return Err(Error::SplittingFailed(alloc::format!(
                    "class matrix {i} is not diagonalizable on a space of dimension {d}"
                )));
            }
        }
        spaces = next;
    }
    if let Some(w) = spaces.iter().find(|w| w.len() != 1) {
        return Err(Error::SplittingFailed(alloc::format!(
            "a common eigenspace of dimension {} remains",
            w.len()
        )));
    }
    spaces
        .into_iter()
        .map(|mut w| {
            let mut v = w.pop().unwrap();
            if v[0] == 0 {
                return Err(Error::SplittingFailed("eigenvector vanishes at the identity class".into()));
            }
            let s = inv_mod(v[0], l);
            for x in v.iter_mut() {
                *x = mul_mod(*x, s, l);
            }
            Ok(v)
        })
        .collect()
}

pub fn dixon_schneider(classes: &ClassData) -> Result<CharacterTable> {
    let n = classes.group_order();
    let e = classes.exponent();
    let r = classes.len();
    let l = modular::lifting_prime(e, n, LIFTING_PRIME_SEARCH).ok_or(Error::NoLiftingPrime { exponent: e, floor: n })?;
    let a = structure_constants(classes)?;
    let sizes = classes.sizes().to_vec();
    let orders = classes.rep_orders().to_vec();
    let inverse: Vec<usize> = (0..r).map(|c| classes.inverse_class(c)).collect();
    let theta = modular::root_of_unity(e, l);

    let mut rows: Vec<(u64, Vec<Vec<u32>>)> = Vec::with_capacity(r);
    for omega in central_characters(classes, &a, l)? {
        let mut s = 0u64;
        for c in 0..r {
            let term = mul_mod(mul_mod(omega[c], omega[inverse[c]], l), inv_mod(sizes[c] % l, l), l);
            s = (s + term) % l;
        }
        if s == 0 {
            return Err(Error::DegreeLift("vanishing degree sum".into()));
        }
        let t = mul_mod(n % l, inv_mod(s, l), l);
        let d = arith::exact_sqrt(t)
            .filter(|&d| d > 0 && d * d <= n && n % d == 0)
            .ok_or_else(|| Error::DegreeLift(alloc::format!("{t} is not the square of a divisor of {n}")))?;
        let residues: Vec<u64> = (0..r)
            .map(|c| mul_mod(mul_mod(omega[c], d, l), inv_mod(sizes[c] % l, l), l))
            .collect();
        let mut values = Vec::with_capacity(r);
        for c in 0..r {
            let o = orders[c];
            let step = (e / o) as usize;
            let theta_o = pow_mod(theta, e / o, l);
            let o_inv = inv_mod(o % l, l);
            let mut v = alloc::vec![0u32; e as usize];
            let mut total = 0u64;
            for k in 0..o {
                let mut acc = 0u64;
                for j in 0..o {
                    let x = residues[classes.power(c, j as i64)];
                    // theta_o^(-jk)
                    let w = pow_mod(theta_o, (o - (j * k) % o) % o, l);
                    acc = (acc + mul_mod(x, w, l)) % l;
                }
                let m = mul_mod(acc, o_inv, l);
                if m > d {
                    return Err(Error::DegreeLift(alloc::format!(
                        "eigenvalue multiplicity {m} exceeds degree {d} at class {c}"
                    )));
                }
                total += m;
                v[k as usize * step] = m as u32;
            }
            if total != d {
                return Err(Error::DegreeLift(alloc::format!("multiplicities at class {c} sum to {total}, not {d}")));
            }
            values.push(v);
        }
        rows.push((d, values));
    }

    let is_trivial = |row: &(u64, Vec<Vec<u32>>)| row.0 == 1 && row.1.iter().all(|v| v[0] == 1);
    rows.sort_by(|x, y| {
        is_trivial(y)
            .cmp(&is_trivial(x))
            .then_with(|| x.0.cmp(&y.0))
            .then_with(|| x.1.cmp(&y.1))
    });
    if !is_trivial(&rows[0]) {
        return Err(Error::InvariantViolation("no trivial character".into()));
    }

    let mut kernels = Vec::with_capacity(r);
    let mut codegrees = Vec::with_capacity(r);
    for (index, (d, values)) in rows.iter().enumerate() {
        let kernel: Vec<usize> = (0..r)
            .filter(|&c| values[c][0] as u64 == *d && values[c][1..].iter().all(|&m| m == 0))
            .collect();
        // the kernel is a union of classes closed under multiplication
        for &i in &kernel {
            for &j in &kernel {
                if (0..r).any(|k| a[(i * r + j) * r + k] != 0 && kernel.binary_search(&k).is_err()) {
                    return Err(Error::InvariantViolation(alloc::format!("kernel of character {index} is not closed")));
                }
            }
        }
        let order: u64 = kernel.iter().map(|&c| sizes[c]).sum();
        if n % order != 0 || (n / order) % d != 0 {
            return Err(Error::NonIntegralCodegree { index });
        }
        codegrees.push(n / order / d);
        kernels.push(kernel);
    }

    let (degrees, values) = rows.into_iter().unzip();
    let table = CharacterTable {
        group_order: n,
        exponent: e,
        lifting_prime: l,
        class_sizes: sizes,
        class_orders: orders,
        degrees,
        values,
        kernels,
        codegrees,
    };
    table.verify_orthogonality()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors as c;
    use alloc::vec;

    fn table(g: &crate::PermGroup) -> CharacterTable {
        dixon_schneider(&ClassData::new(g).unwrap()).unwrap()
    }

    fn sorted(v: &[u64]) -> Vec<u64> {
        let mut v = v.to_vec();
        v.sort();
        v
    }

    #[test]
    fn class_matrices() {
        let s3 = c::symmetric(3).unwrap();
        let cd = ClassData::new(&s3).unwrap();
        let trans = (0..cd.len()).find(|&i| cd.rep_orders()[i] == 2).unwrap();
        let m = class_matrix(&cd, trans).unwrap();
        // x, y transpositions with xy = 1: three pairs
        assert_eq!(m[trans][0], 3);
        let id = class_matrix(&cd, 0).unwrap();
        for j in 0..cd.len() {
            for k in 0..cd.len() {
                assert_eq!(id[j][k], u64::from(j == k));
            }
        }
    }

    #[test]
    fn small_tables() {
        let t = table(&c::symmetric(4).unwrap());
        assert_eq!(t.degrees(), &[1, 1, 2, 3, 3]);
        let two = t.degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(t.kernel_order(two), 4);
        assert_eq!(t.codegrees()[two], 3);
        assert_eq!(t.codegrees()[0], 1);
        let q8 = table(&c::quaternion8().unwrap());
        let two = q8.degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(q8.kernel_order(two), 1);
        assert_eq!(q8.codegrees()[two], 4);
        let c5 = table(&c::cyclic(5).unwrap());
        assert_eq!(c5.degrees(), &[1; 5]);
        for chi in 0..5 {
            for cl in 0..5 {
                assert_eq!(c5.value(chi, cl).iter().sum::<u32>(), 1);
            }
        }
        assert_eq!(table(&c::trivial()).degrees(), &[1]);
    }

    #[test]
    fn mathieu_degrees() {
        let t = table(&c::mathieu11().unwrap());
        assert_eq!(sorted(t.degrees()), vec![1, 10, 10, 10, 11, 16, 16, 44, 45, 55]);
    }

    #[test]
    fn deterministic_dump() {
        let g = c::symmetric(4).unwrap();
        let a = table(&g).dump();
        let b = table(&g).dump();
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 5);
        assert!(a.starts_with("1\t1\t0,1,2,3,4\t"));
    }
}
