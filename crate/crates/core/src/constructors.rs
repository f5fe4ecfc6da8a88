//! Builtin permutation groups.
//!
//! Every constructor checks its output against a closed order formula (and,
//! for the sporadic and exceptional cases, simplicity and element orders)
//! before returning it. A mismatch is a [`Error::ValidationFailed`].

use alloc::format;
use alloc::vec::Vec;

use crate::arith;
use crate::classes::ClassData;
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure;

/// A 2x2 matrix over a finite field, row-major.
pub type Mat2 = [[u64; 2]; 2];

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidParameter(msg)
}

fn expect_order(name: &str, g: &PermGroup, order: u64) -> Result<()> {
    if g.order() != order {
        return Err(Error::ValidationFailed(format!(
            "{name}: order {} but the formula gives {order}",
            g.order()
        )));
    }
    Ok(())
}

/// Builds the group, keeping only generators that enlarge it.
fn build_reduced(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
    let mut g = PermGroup::trivial(degree);
    for x in &gens {
        if x.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: x.degree(),
            });
        }
        g.extend(x)?;
    }
    Ok(g)
}

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (k, &a) in points.iter().enumerate() {
        images[a] = points[(k + 1) % points.len()] as u32;
    }
    Permutation::from_images_unchecked(images)
}

pub fn trivial() -> PermGroup {
    PermGroup::trivial(1)
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("symmetric group needs n >= 1".into()));
    }
    let gens = if n == 1 {
        Vec::new()
    } else {
        alloc::vec![cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())]
    };
    let g = build_reduced(n, gens)?;
    expect_order("symmetric", &g, (1..=n as u64).product())?;
    Ok(g)
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("alternating group needs n >= 1".into()));
    }
    let gens: Vec<Permutation> = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
    let g = build_reduced(n, gens)?;
    let order: u64 = (1..=n as u64).product::<u64>() / if n >= 2 { 2 } else { 1 };
    expect_order("alternating", &g, order)?;
    Ok(g)
}

/// Regular cyclic group of order `n`.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(invalid("cyclic group needs n >= 1".into()));
    }
    let g = build_reduced(n, alloc::vec![cycle(n, &(0..n).collect::<Vec<_>>())])?;
    expect_order("cyclic", &g, n as u64)?;
    Ok(g)
}

/// Dihedral group of the given order `2n` acting on the `n` vertices of a polygon (`n >= 3`).
pub fn dihedral(order: usize) -> Result<PermGroup> {
    if order % 2 != 0 || order < 6 {
        return Err(invalid(format!("dihedral order {order} must be even and at least 6")));
    }
    let n = order / 2;
    let rot = cycle(n, &(0..n).collect::<Vec<_>>());
    let refl = Permutation::from_images_unchecked((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
    let g = build_reduced(n, alloc::vec![rot, refl])?;
    expect_order("dihedral", &g, order as u64)?;
    Ok(g)
}

/// The quaternion group in its regular representation on 8 points.
pub fn quaternion8() -> Result<PermGroup> {
    let i = Permutation::from_one_based(&[2, 5, 8, 3, 6, 1, 4, 7])?;
    let j = Permutation::from_one_based(&[3, 4, 5, 6, 7, 8, 1, 2])?;
    let g = build_reduced(8, alloc::vec![i, j])?;
    expect_order("quaternion8", &g, 8)?;
    Ok(g)
}

/// `C_n wr C_n` on `n^2` points: a cycle on the first block plus the block shift.
pub fn cyclic_wreath(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(invalid("wreath product needs n >= 2".into()));
    }
    let d = n * n;
    let base = cycle(d, &(0..n).collect::<Vec<_>>());
    let top = Permutation::from_images_unchecked((0..d).map(|x| ((x + n) % d) as u32).collect());
    let g = build_reduced(d, alloc::vec![base, top])?;
    let order = (n as u64).checked_pow(n as u32 + 1).ok_or(Error::OrderOverflow)?;
    expect_order("cyclic_wreath", &g, order)?;
    Ok(g)
}

pub fn mathieu11() -> Result<PermGroup> {
    let a = Permutation::from_cycles(11, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]])?;
    let b = Permutation::from_cycles(11, &[&[3, 7, 11, 8], &[4, 10, 5, 6]])?;
    let g = PermGroup::new(11, alloc::vec![a, b])?;
    expect_order("mathieu11", &g, 7920)?;
    if !structure::is_simple(&g)? {
        return Err(Error::ValidationFailed("mathieu11: not simple".into()));
    }
    Ok(g)
}

fn field_for(q: u64) -> Result<FiniteField> {
    if arith::prime_power(q).is_none() {
        return Err(invalid(format!("{q} is not a prime power")));
    }
    FiniteField::new(q)
}

pub fn mat_mul(f: &FiniteField, a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0u64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
        }
    }
    c
}

pub fn det(f: &FiniteField, a: &Mat2) -> u64 {
    f.sub(f.mul(a[0][0], a[1][1]), f.mul(a[0][1], a[1][0]))
}

/// Row vector times matrix.
fn vec_mul(f: &FiniteField, v: [u64; 2], m: &Mat2) -> [u64; 2] {
    [
        f.add(f.mul(v[0], m[0][0]), f.mul(v[1], m[1][0])),
        f.add(f.mul(v[0], m[0][1]), f.mul(v[1], m[1][1])),
    ]
}

fn vec_index(q: u64, v: [u64; 2]) -> usize {
    (v[0] + q * v[1]) as usize
}

fn vec_at(q: u64, i: usize) -> [u64; 2] {
    [i as u64 % q, i as u64 / q]
}

/// Elementary transvections `[[1,b],[0,1]]` and `[[1,0],[b,1]]` over an additive basis of the prime field.
pub fn sl2_generators(f: &FiniteField) -> Vec<Mat2> {
    let mut out = Vec::new();
    for b in f.prime_field_basis() {
        out.push([[1, b], [0, 1]]);
        out.push([[1, 0], [b, 1]]);
    }
    out
}

/// Action of a matrix on the `q^2 - 1` nonzero row vectors (vector `i+1` is point `i`).
pub fn linear_on_nonzero(f: &FiniteField, m: &Mat2) -> Permutation {
    let q = f.size();
    let n = (q * q) as usize;
    Permutation::from_images_unchecked(
        (1..n)
            .map(|i| (vec_index(q, vec_mul(f, vec_at(q, i), m)) - 1) as u32)
            .collect(),
    )
}

/// Reads the matrix back from its action on nonzero vectors.
pub fn matrix_of_nonzero_action(f: &FiniteField, x: &Permutation) -> Mat2 {
    let q = f.size();
    let r0 = vec_at(q, x.image(vec_index(q, [1, 0]) - 1) + 1);
    let r1 = vec_at(q, x.image(vec_index(q, [0, 1]) - 1) + 1);
    [r0, r1]
}

fn projective_index(f: &FiniteField, v: [u64; 2]) -> usize {
    let q = f.size();
    if v[0] != 0 {
        f.mul(v[1], f.inv(v[0])) as usize
    } else {
        q as usize
    }
}

fn projective_at(q: u64, i: usize) -> [u64; 2] {
    if (i as u64) < q {
        [1, i as u64]
    } else {
        [0, 1]
    }
}

/// Action on the `q + 1` points of the projective line: `(1:x)` is point `x`, `(0:1)` is point `q`.
pub fn projective_action(f: &FiniteField, m: &Mat2) -> Permutation {
    let q = f.size();
    Permutation::from_images_unchecked(
        (0..=q as usize)
            .map(|i| projective_index(f, vec_mul(f, projective_at(q, i), m)) as u32)
            .collect(),
    )
}

fn sl2_order(q: u64) -> u64 {
    q * (q * q - 1)
}

pub fn sl2_with(f: &FiniteField) -> Result<PermGroup> {
    let q = f.size();
    let gens = sl2_generators(f).iter().map(|m| linear_on_nonzero(f, m)).collect();
    let g = build_reduced((q * q - 1) as usize, gens)?;
    expect_order("sl2", &g, sl2_order(q))?;
    Ok(g)
}

/// `SL_2(q)` on the nonzero vectors of its natural module.
pub fn sl2(q: u64) -> Result<PermGroup> {
    sl2_with(&field_for(q)?)
}

pub fn psl2_with(f: &FiniteField) -> Result<PermGroup> {
    let q = f.size();
    let gens = sl2_generators(f).iter().map(|m| projective_action(f, m)).collect();
    let g = build_reduced(q as usize + 1, gens)?;
    expect_order("psl2", &g, sl2_order(q) / arith::gcd(2, q - 1))?;
    Ok(g)
}

/// `PSL_2(q)` on the projective line.
pub fn psl2(q: u64) -> Result<PermGroup> {
    psl2_with(&field_for(q)?)
}

/// `PSL_2(q)` extended by the Frobenius map `x -> x^p` on the projective line.
pub fn psigmal2(q: u64) -> Result<PermGroup> {
    let f = field_for(q)?;
    let (p, e) = arith::prime_power(q).unwrap();
    let mut gens: Vec<Permutation> = sl2_generators(&f).iter().map(|m| projective_action(&f, m)).collect();
    let frob = (0..=q).map(|x| if x < q { f.pow(x, p) as u32 } else { q as u32 }).collect();
    gens.push(Permutation::from_images_unchecked(frob));
    let g = build_reduced(q as usize + 1, gens)?;
    expect_order("psigmal2", &g, sl2_order(q) / arith::gcd(2, q - 1) * e as u64)?;
    Ok(g)
}

/// `GL_2(3)` on the 8 nonzero vectors of `F_3^2`.
pub fn gl2_3() -> Result<PermGroup> {
    let f = FiniteField::new(3)?;
    let mut mats = sl2_generators(&f);
    mats.push([[2, 0], [0, 1]]);
    let gens = mats.iter().map(|m| linear_on_nonzero(&f, m)).collect();
    let g = build_reduced(8, gens)?;
    expect_order("gl2_3", &g, 48)?;
    Ok(g)
}

/// The affine group `V : <mats>` on the `q^2` vectors of `F_q^2` (vector `i` is point `i`).
///
/// Translations by an additive basis of `V` over the prime field are included,
/// so the translation subgroup is all of `V`.
pub fn affine_group(f: &FiniteField, mats: &[Mat2]) -> Result<PermGroup> {
    let q = f.size();
    let n = (q * q) as usize;
    let mut gens: Vec<Permutation> = mats
        .iter()
        .map(|m| {
            Permutation::from_images_unchecked(
                (0..n).map(|i| vec_index(q, vec_mul(f, vec_at(q, i), m)) as u32).collect(),
            )
        })
        .collect();
    for b in f.prime_field_basis() {
        for t in [[b, 0], [0, b]] {
            gens.push(Permutation::from_images_unchecked(
                (0..n)
                    .map(|i| {
                        let v = vec_at(q, i);
                        vec_index(q, [f.add(v[0], t[0]), f.add(v[1], t[1])]) as u32
                    })
                    .collect(),
            ));
        }
    }
    build_reduced(n, gens)
}

/// `ASL_2(q)`: translations together with `SL_2(q)`.
pub fn asl2(q: u64) -> Result<PermGroup> {
    let f = field_for(q)?;
    let g = affine_group(&f, &sl2_generators(&f))?;
    expect_order("asl2", &g, q * q * sl2_order(q))?;
    Ok(g)
}

/// The semilinear group on `F_{p^(pm)}`: translations, multiplication by the
/// subgroup of order `(p^(pm)-1)/(p^m-1)` of the multiplicative group, and `x -> x^(p^m)`.
pub fn gamma_family(p: u64, m: u32) -> Result<PermGroup> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(invalid("gamma_family needs m >= 1".into()));
    }
    let pm = p.checked_pow(m).ok_or(Error::OrderOverflow)?;
    let n = pm.checked_pow(p as u32).ok_or(Error::OrderOverflow)?;
    if n > 1 << 16 {
        return Err(invalid(format!("field of size {n} too large")));
    }
    let f = FiniteField::new(n)?;
    let h = f.pow(f.primitive_element(), pm - 1);
    let mut gens: Vec<Permutation> = f
        .prime_field_basis()
        .into_iter()
        .map(|b| Permutation::from_images_unchecked((0..n).map(|x| f.add(x, b) as u32).collect()))
        .collect();
    gens.push(Permutation::from_images_unchecked((0..n).map(|x| f.mul(h, x) as u32).collect()));
    gens.push(Permutation::from_images_unchecked((0..n).map(|x| f.pow(x, pm) as u32).collect()));
    let g = build_reduced(n as usize, gens)?;
    expect_order("gamma_family", &g, n * ((n - 1) / (pm - 1)) * p)?;
    Ok(g)
}

/// `PSL_3(4)` on the 21 points of the projective plane over `F_4`, generated by
/// elementary transvections `I + b E_ij` with `b` in `{1, t}`.
///
/// This is the derivation behind the shipped `psl3_4` data file.
pub fn psl3_4() -> Result<PermGroup> {
    let f = FiniteField::new(4)?;
    let q = 4u64;
    let encode = |v: [u64; 3]| (v[0] + q * v[1] + q * q * v[2]) as usize;
    let mut points: Vec<[u64; 3]> = Vec::new();
    let mut index = alloc::vec![usize::MAX; 64];
    for code in 1..64u64 {
        let v = [code % q, code / q % q, code / (q * q)];
        let lead = *v.iter().find(|&&c| c != 0).unwrap();
        let s = f.inv(lead);
        let norm = [f.mul(v[0], s), f.mul(v[1], s), f.mul(v[2], s)];
        let e = encode(norm);
        if index[e] == usize::MAX {
            index[e] = points.len();
            points.push(norm);
        }
        index[code as usize] = index[e];
    }
    debug_assert_eq!(points.len(), 21);
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for b in f.prime_field_basis() {
                // v (I + b E_ij) = v + b v_i e_j
                let imgs = points
                    .iter()
                    .map(|v| {
                        let mut w = *v;
                        w[j] = f.add(w[j], f.mul(b, v[i]));
                        index[encode(w)] as u32
                    })
                    .collect();
                gens.push(Permutation::from_images_unchecked(imgs));
            }
        }
    }
    let g = build_reduced(21, gens)?;
    validate_psl3_4(&g)?;
    Ok(g)
}

/// Order 20160, simple, and no element of order 15 (which separates it from `A_8`).
pub fn validate_psl3_4(g: &PermGroup) -> Result<()> {
    expect_order("psl3_4", g, 20160)?;
    let classes = ClassData::new(g)?;
    if !structure::is_simple_with(g, &classes)? {
        return Err(Error::ValidationFailed("psl3_4: not simple".into()));
    }
    if classes.rep_orders().contains(&15) {
        return Err(Error::ValidationFailed("psl3_4: has an element of order 15".into()));
    }
    Ok(())
}

fn mat_order(f: &FiniteField, a: &Mat2) -> u64 {
    let id: Mat2 = [[1, 0], [0, 1]];
    let mut x = *a;
    let mut o = 1;
    while x != id {
        x = mat_mul(f, &x, a);
        o += 1;
    }
    o
}

/// Generators of a subgroup `SL_2(5)` inside `SL_2(9)`.
///
/// Scans the determinant-one matrices over `F_9` in lexicographic order of
/// their entries and returns the first pair `(a, b)` with `a` of order 4,
/// `b` of order 3, generating a perfect group of order 120.
pub fn sl2_5_in_sl2_9() -> Result<(FiniteField, [Mat2; 2])> {
    let f = FiniteField::new(9)?;
    let mut sl: Vec<Mat2> = Vec::new();
    for a in 0..9 {
        for b in 0..9 {
            for c in 0..9 {
                for d in 0..9 {
                    let m = [[a, b], [c, d]];
                    if det(&f, &m) == 1 {
                        sl.push(m);
                    }
                }
            }
        }
    }
    let of_order = |k: u64| -> Vec<Mat2> { sl.iter().copied().filter(|m| mat_order(&f, m) == k).collect() };
    let fours = of_order(4);
    let threes = of_order(3);
    for a in &fours {
        for b in &threes {
            let h = PermGroup::new(80, alloc::vec![linear_on_nonzero(&f, a), linear_on_nonzero(&f, b)])?;
            if h.order() == 120 && structure::is_perfect(&h)? {
                return Ok((f, [*a, *b]));
            }
        }
    }
    Err(Error::ValidationFailed("no SL_2(5) found inside SL_2(9)".into()))
}

/// `F_3^4 : SL_2(5)`, with `F_3^4` realised as `F_9^2` (order 9720).
pub fn sl2_5_on_f3_4() -> Result<PermGroup> {
    let (f, mats) = sl2_5_in_sl2_9()?;
    let g = affine_group(&f, &mats)?;
    expect_order("sl2_5_on_f3_4", &g, 81 * 120)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;

    #[test]
    fn order_formulas() {
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(6).unwrap().order(), 720);
        assert_eq!(alternating(7).unwrap().order(), 2520);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(cyclic_wreath(3).unwrap().order(), 81);
        assert_eq!(sl2(4).unwrap().order(), 60);
        assert_eq!(sl2(9).unwrap().order(), 720);
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(8).unwrap().order(), 504);
        assert_eq!(asl2(3).unwrap().order(), 216);
        assert_eq!(asl2(5).unwrap().order(), 3000);
        assert_eq!(gamma_family(2, 1).unwrap().order(), 24);
        assert_eq!(gamma_family(3, 1).unwrap().order(), 1053);
        assert_eq!(gamma_family(2, 2).unwrap().order(), 16 * 5 * 2);
        assert_eq!(psigmal2(8).unwrap().order(), 1512);
        assert_eq!(gl2_3().unwrap().order(), 48);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(sl2(6), Err(Error::InvalidParameter(_))));
        assert!(matches!(gamma_family(4, 1), Err(Error::NotPrime(4))));
        assert!(dihedral(7).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn gamma_enumeration_cross_check() {
        let g = gamma_family(3, 1).unwrap();
        assert_eq!(g.enumerate_by_closure().unwrap().len(), 1053);
    }

    #[test]
    fn matrix_round_trip() {
        let f = FiniteField::new(9).unwrap();
        for m in sl2_generators(&f) {
            assert_eq!(matrix_of_nonzero_action(&f, &linear_on_nonzero(&f, &m)), m);
        }
    }

    #[test]
    fn psl3_4_is_valid() {
        let g = psl3_4().unwrap();
        assert_eq!(g.degree(), 21);
        assert_eq!(g.order(), 20160);
    }

    #[test]
    fn sl2_5_module() {
        let (f, [a, b]) = sl2_5_in_sl2_9().unwrap();
        assert_eq!(det(&f, &a), 1);
        assert_eq!(det(&f, &b), 1);
        let g = sl2_5_on_f3_4().unwrap();
        let v = structure::p_core(&g, 3).unwrap();
        assert_eq!(v.order(), 81);
        let orbits = structure::acts_transitively_on_nonidentity(&g, &v).unwrap();
        assert_eq!(orbits.sizes_with_identity(), alloc::vec![1, 40, 40]);
        let (q, _) = ops::quotient(&g, &v).unwrap();
        assert_eq!(q.order(), 120);
    }
}
