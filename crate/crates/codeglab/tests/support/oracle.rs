//! Brute-force character tables for small groups.
//!
//! Every irreducible representation sends `g` to a matrix whose eigenvalues
//! are `o(g)`-th roots of unity, and the eigenvalues of `g^k` are the `k`-th
//! powers of those of `g`. The search below picks an eigenvalue multiset for
//! each class (classes of large order first, everything reachable by powers
//! is then forced), keeps the class functions of norm exactly 1, and looks for
//! orthonormal families of size `#classes` with `sum d^2 = |G|` whose
//! pairwise products decompose with nonnegative integer multiplicities.
//!
//! Arithmetic is exact in `Z[zeta_e]`, reduced modulo `Phi_e`, where `Phi_e`
//! is obtained by dividing `x^e - 1` by the lower cyclotomic polynomials.

use std::collections::HashMap;

use codeglab_core::chartab::CharacterTable;
use codeglab_core::{ClassData, PermGroup, Permutation};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact quotient of `a` by the monic `b` (constant term first).
fn divide_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    assert!(r.iter().all(|&x| x == 0), "inexact division");
    q
}

pub fn cyclotomic(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        p = divide_exact(&p, &cyclotomic(d));
    }
    p
}

/// Exact arithmetic on vectors of length `e` (coefficients of `zeta^k`).
pub struct Cyc {
    pub e: usize,
    phi: Vec<i64>,
}

impl Cyc {
    pub fn new(e: usize) -> Self {
        Cyc { e, phi: cyclotomic(e) }
    }

    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let m = self.phi.len() - 1;
        let mut r = v.to_vec();
        for k in (m..r.len()).rev() {
            let c = r[k];
            if c != 0 {
                for (j, &pj) in self.phi.iter().enumerate() {
                    r[k - m + j] -= c * pj;
                }
            }
        }
        r.truncate(m);
        r
    }

    fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut c = vec![0i64; self.e];
        for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, &y)| y != 0) {
                c[(i + j) % self.e] += x * y;
            }
        }
        c
    }

    fn conj(&self, a: &[i64]) -> Vec<i64> {
        (0..self.e).map(|k| a[(self.e - k) % self.e]).collect()
    }

    fn as_integer(&self, v: &[i64]) -> Option<i64> {
        let r = self.reduce(v);
        r[1..].iter().all(|&x| x == 0).then(|| r.first().copied().unwrap_or(0))
    }
}

/// Conjugacy classes by direct conjugation of every element.
pub struct Classes {
    pub elements: Vec<Permutation>,
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub orders: Vec<usize>,
    /// `power[c][k]` is the class of `rep_c^k`.
    pub power: Vec<Vec<usize>>,
    pub exponent: usize,
    index: HashMap<Vec<u32>, usize>,
}

impl Classes {
    pub fn new(g: &PermGroup) -> Self {
        let elements = g.elements().unwrap();
        let index: HashMap<Vec<u32>, usize> =
            elements.iter().enumerate().map(|(i, x)| (x.images().to_vec(), i)).collect();
        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        // identity first
        let id = index[g.identity().images()];
        let order: Vec<usize> = std::iter::once(id).chain((0..n).filter(|&i| i != id)).collect();
        for &i in &order {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut size = 0;
            for y in &elements {
                let k = index[y.inverse().mul(&elements[i]).mul(y).images()];
                if class_of[k] == usize::MAX {
                    class_of[k] = c;
                    size += 1;
                }
            }
            reps.push(i);
            sizes.push(size);
        }
        let orders: Vec<usize> = reps.iter().map(|&r| elements[r].order() as usize).collect();
        let exponent = orders.iter().fold(1, |a, &o| a / gcd(a, o) * o);
        let power = reps
            .iter()
            .map(|&r| {
                (0..exponent)
                    .map(|k| class_of[index[elements[r].pow(k as i64).images()]])
                    .collect()
            })
            .collect();
        Classes {
            elements,
            class_of,
            reps,
            sizes,
            orders,
            power,
            exponent,
            index,
        }
    }

    pub fn class_of_perm(&self, x: &Permutation) -> usize {
        self.class_of[self.index[x.images()]]
    }
}

/// A character as reduced values per class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub degree: u64,
    pub values: Vec<Vec<i64>>,
}

struct Search<'a> {
    cl: &'a Classes,
    d: usize,
    order: Vec<usize>,
    out: Vec<Vec<Vec<i64>>>,
}

impl Search<'_> {
    /// Assigns `m` (sorted exponents mod e) to class `c` and all its powers.
    fn assign(&self, state: &mut [Option<Vec<usize>>], c: usize, m: &[usize]) -> bool {
        let e = self.cl.exponent;
        for k in 0..self.cl.orders[c] {
            let t = self.cl.power[c][k];
            let mut mk: Vec<usize> = m.iter().map(|&a| a * k % e).collect();
            mk.sort_unstable();
            match &state[t] {
                Some(existing) if *existing != mk => return false,
                Some(_) => {}
                None => state[t] = Some(mk),
            }
        }
        true
    }

    fn dfs(&mut self, pos: usize, state: Vec<Option<Vec<usize>>>) {
        let Some(&c) = self.order.get(pos) else {
            let values = state
                .iter()
                .map(|m| {
                    let mut v = vec![0i64; self.cl.exponent];
                    for &a in m.as_ref().unwrap() {
                        v[a] += 1;
                    }
                    v
                })
                .collect();
            self.out.push(values);
            return;
        };
        if state[c].is_some() {
            return self.dfs(pos + 1, state);
        }
        let o = self.cl.orders[c];
        let step = self.cl.exponent / o;
        let mut m = vec![0usize; self.d];
        loop {
            let exps: Vec<usize> = m.iter().map(|&j| j * step).collect();
            let mut next = state.clone();
            if self.assign(&mut next, c, &exps) {
                self.dfs(pos + 1, next);
            }
            // next nondecreasing sequence in 0..o
            let Some(i) = (0..self.d).rev().find(|&i| m[i] + 1 < o) else {
                break;
            };
            m[i] += 1;
            for j in i + 1..self.d {
                m[j] = m[i];
            }
        }
    }
}

fn inner(cl: &Classes, cyc: &Cyc, a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<i64> {
    let mut acc = vec![0i64; cyc.e];
    for c in 0..cl.reps.len() {
        let t = cyc.mul(&a[c], &cyc.conj(&b[c]));
        for (s, x) in acc.iter_mut().zip(t) {
            *s += cl.sizes[c] as i64 * x;
        }
    }
    acc
}

/// Every table the brute-force search can find, each with rows sorted.
/// Class `c` refers to `Classes::new(g)`.
pub fn brute_force_tables(g: &PermGroup) -> (Classes, Vec<Vec<Row>>) {
    let cl = Classes::new(g);
    let cyc = Cyc::new(cl.exponent);
    let n = cl.elements.len();
    let r = cl.reps.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&c| std::cmp::Reverse(cl.orders[c]));

    let mut cands: Vec<(usize, Vec<Vec<i64>>)> = Vec::new();
    for d in (1..=n).filter(|d| n % d == 0 && d * d <= n) {
        let mut s = Search {
            cl: &cl,
            d,
            order: order.clone(),
            out: Vec::new(),
        };
        s.dfs(0, vec![None; r]);
        for v in s.out {
            if cyc.as_integer(&inner(&cl, &cyc, &v, &v)) == Some(n as i64) {
                cands.push((d, v));
            }
        }
    }

    let k = cands.len();
    let orth: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| cyc.as_integer(&inner(&cl, &cyc, &cands[i].1, &cands[j].1)) == Some(0))
                .collect()
        })
        .collect();

    let mut found = Vec::new();
    let mut chosen = Vec::new();
    clique(&cands, &orth, r, n, 0, &mut chosen, &mut found);

    let tables = found
        .into_iter()
        .filter(|set| decomposes(&cl, &cyc, &cands, set))
        .map(|set| {
            let mut rows: Vec<Row> = set
                .iter()
                .map(|&i| Row {
                    degree: cands[i].0 as u64,
                    values: cands[i].1.iter().map(|v| cyc.reduce(v)).collect(),
                })
                .collect();
            rows.sort();
            rows
        })
        .collect();
    (cl, tables)
}

fn clique(
    cands: &[(usize, Vec<Vec<i64>>)],
    orth: &[Vec<bool>],
    r: usize,
    budget: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == r {
        if budget == 0 {
            found.push(chosen.clone());
        }
        return;
    }
    // each remaining row needs degree at least 1
    if budget < r - chosen.len() {
        return;
    }
    for i in start..cands.len() {
        let d2 = cands[i].0 * cands[i].0;
        if d2 <= budget && chosen.iter().all(|&j| orth[i][j]) {
            chosen.push(i);
            clique(cands, orth, r, budget - d2, i + 1, chosen, found);
            chosen.pop();
        }
    }
}

fn decomposes(cl: &Classes, cyc: &Cyc, cands: &[(usize, Vec<Vec<i64>>)], set: &[usize]) -> bool {
    let n = cl.elements.len() as i64;
    for &a in set {
        for &b in set {
            let prod: Vec<Vec<i64>> = (0..cl.reps.len())
                .map(|c| cyc.mul(&cands[a].1[c], &cands[b].1[c]))
                .collect();
            for &k in set {
                match cyc.as_integer(&inner(cl, cyc, &prod, &cands[k].1)) {
                    Some(x) if x >= 0 && x % n == 0 => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// The Dixon-Schneider table re-expressed on the brute-force classes, rows sorted.
pub fn library_rows(cl: &Classes, classes: &ClassData, table: &CharacterTable) -> Vec<Row> {
    let cyc = Cyc::new(cl.exponent);
    assert_eq!(table.exponent() as usize, cl.exponent, "exponent");
    let map: Vec<usize> = classes.reps().iter().map(|x| cl.class_of_perm(x)).collect();
    let r = cl.reps.len();
    assert_eq!(map.len(), r, "class count");
    let mut rows: Vec<Row> = (0..table.len())
        .map(|chi| {
            let mut values = vec![Vec::new(); r];
            for (lib_c, &c) in map.iter().enumerate() {
                let v: Vec<i64> = table.value(chi, lib_c).iter().map(|&x| x as i64).collect();
                values[c] = cyc.reduce(&v);
            }
            Row {
                degree: table.degrees()[chi],
                values,
            }
        })
        .collect();
    rows.sort();
    rows
}

/// Per-class value multisets (columns sorted independently).
pub fn column_multisets(rows: &[Row]) -> Vec<Vec<Vec<i64>>> {
    let r = rows.first().map_or(0, |x| x.values.len());
    (0..r)
        .map(|c| {
            let mut col: Vec<Vec<i64>> = rows.iter().map(|x| x.values[c].clone()).collect();
            col.sort();
            col
        })
        .collect()
}
