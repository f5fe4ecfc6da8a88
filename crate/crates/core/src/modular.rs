//! Linear algebra and polynomial root finding over a prime field `F_l`.
//!
//! Polynomials are coefficient vectors, constant term first, with no
//! trailing zeros (the zero polynomial is empty).

use alloc::vec::Vec;

use crate::arith::{inv_mod, mul_mod, pow_mod};

#[inline]
fn add(a: u64, b: u64, l: u64) -> u64 {
    let s = a + b;
    if s >= l {
        s - l
    } else {
        s
    }
}

#[inline]
fn sub(a: u64, b: u64, l: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + l - b
    }
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn make_monic(a: Vec<u64>, l: u64) -> Vec<u64> {
    let a = trim(a);
    match a.last() {
        None => a,
        Some(&lead) => {
            let s = inv_mod(lead, l);
            a.into_iter().map(|c| mul_mod(c, s, l)).collect()
        }
    }
}

fn poly_sub(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), l))
            .collect(),
    )
}

fn poly_mul(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = alloc::vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = add(c[i + j], mul_mod(x, y, l), l);
        }
    }
    trim(c)
}

/// Quotient and remainder by a nonzero polynomial.
fn poly_divmod(a: &[u64], b: &[u64], l: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv = inv_mod(b[db], l);
    let mut q = alloc::vec![0u64; r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = mul_mod(*r.last().unwrap(), inv, l);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = sub(r[shift + j], mul_mod(c, bj, l), l);
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_gcd(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = poly_divmod(&x, &y, l);
        x = y;
        y = r;
    }
    make_monic(x, l)
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], l: u64) -> Vec<u64> {
    let mut acc = alloc::vec![1u64];
    let mut b = poly_divmod(base, f, l).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_divmod(&poly_mul(&acc, &b, l), f, l).1;
        }
        b = poly_divmod(&poly_mul(&b, &b, l), f, l).1;
        e >>= 1;
    }
    acc
}

/// Distinct roots in `F_l`, ascending.
///
/// Isolates the split part `gcd(f, x^l - x)`, then splits it with
/// `gcd(g, (x + a)^((l-1)/2) - 1)` for `a = 0, 1, 2, ...`.
pub fn roots(f: &[u64], l: u64) -> Vec<u64> {
    let f = make_monic(f.to_vec(), l);
    if f.len() <= 1 {
        return Vec::new();
    }
    let xl = poly_powmod(&[0, 1], l, &f, l);
    let g = poly_gcd(&f, &poly_sub(&xl, &[0, 1], l), l);
    let mut out = Vec::new();
    split(g, l, &mut out);
    out.sort_unstable();
    out
}

fn split(g: Vec<u64>, l: u64, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => return,
        2 => {
            out.push(sub(0, g[0], l));
            return;
        }
        _ => {}
    }
    if l == 2 {
        // x(x+1) is the only squarefree split polynomial of degree 2
        out.extend([0, 1]);
        return;
    }
    for a in 0..l {
        let t = poly_powmod(&[a, 1], (l - 1) / 2, &g, l);
        let d = poly_gcd(&g, &poly_sub(&t, &[1], l), l);
        if d.len() > 1 && d.len() < g.len() {
            let (h, _) = poly_divmod(&g, &d, l);
            split(d, l, out);
            split(make_monic(h, l), l, out);
            return;
        }
    }
    unreachable!("a squarefree split polynomial always splits for some shift");
}

/// Characteristic polynomial `det(xI - A)` by Faddeev-LeVerrier (requires `n < l`).
pub fn char_poly(a: &[Vec<u64>], l: u64) -> Vec<u64> {
    let n = a.len();
    let mut c = alloc::vec![0u64; n + 1];
    c[n] = 1;
    let mut m = alloc::vec![alloc::vec![0u64; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m, l);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = add(row[i], c[n - k + 1], l);
        }
        m = next;
        let am = mat_mul(a, &m, l);
        let tr = (0..n).fold(0, |t, i| add(t, am[i][i], l));
        c[n - k] = sub(0, mul_mod(tr, inv_mod(k as u64 % l, l), l), l);
    }
    c
}

pub fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut c = alloc::vec![alloc::vec![0u64; m]; n];
    for i in 0..n {
        for (k, &x) in a[i].iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..m {
                c[i][j] = add(c[i][j], mul_mod(x, b[k][j], l), l);
            }
        }
    }
    c
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let s = inv_mod(rows[r][col], l);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, s, l);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for j in 0..ncols {
                    let v = mul_mod(f, rows[r][j], l);
                    rows[i][j] = sub(rows[i][j], v, l);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A basis of the right null space `{y : A y = 0}`.
pub fn kernel(a: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows, l);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut y = alloc::vec![0u64; ncols];
        y[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            y[pc] = sub(0, row[free], l);
        }
        out.push(y);
    }
    out
}

/// Smallest prime `l > floor` with `l = 1 (mod e)`, scanning at most `bound` candidates.
pub fn lifting_prime(e: u64, floor: u64, bound: u64) -> Option<u64> {
    let mut l = floor / e * e + 1;
    while l <= floor {
        l += e;
    }
    for _ in 0..bound {
        if crate::arith::is_prime(l) {
            return Some(l);
        }
        l = l.checked_add(e)?;
    }
    None
}

/// A primitive `e`-th root of unity: `g^((l-1)/e)` for the least primitive root `g`.
pub fn root_of_unity(e: u64, l: u64) -> u64 {
    debug_assert_eq!((l - 1) % e, 0);
    pow_mod(crate::arith::primitive_root(l), (l - 1) / e, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn roots_of_products() {
        let l = 101;
        // (x-3)(x-7)(x-50)(x^2+1) has roots 3, 7, 50, 10, 91 (10^2 = 100 = -1)
        let mut f = vec![1u64];
        for r in [3u64, 7, 50] {
            f = poly_mul(&f, &[l - r, 1], l);
        }
        f = poly_mul(&f, &[1, 0, 1], l);
        assert_eq!(roots(&f, l), vec![3, 7, 10, 50, 91]);
        assert_eq!(roots(&[1, 0, 1], 103), Vec::<u64>::new());
        assert_eq!(roots(&poly_mul(&[0, 1], &[0, 1], 7), 7), vec![0]);
    }

    #[test]
    fn char_poly_and_kernel() {
        let l = 97;
        let a = vec![vec![2, 1], vec![0, 3]];
        assert_eq!(char_poly(&a, l), vec![6, l - 5, 1]);
        let k = kernel(&[vec![0, 1], vec![0, 1]], l);
        assert_eq!(k, vec![vec![1, 0]]);
    }

    #[test]
    fn primes() {
        assert_eq!(lifting_prime(4, 24, 100), Some(29));
        assert_eq!(lifting_prime(1, 1, 100), Some(2));
        let z = root_of_unity(4, 29);
        assert_eq!(pow_mod(z, 4, 29), 1);
        assert_ne!(pow_mod(z, 2, 29), 1);
    }
}
