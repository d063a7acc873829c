//! Plain `u64` arithmetic modulo a small prime and dense row-major matrices
//! over it. Kept separate from the exact layers on purpose.

pub(crate) type RawMat = Vec<u64>;

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn identity(n: usize) -> RawMat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

pub(crate) fn mul(p: u64, n: usize, a: &[u64], b: &[u64]) -> RawMat {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + aik * b[k * n + j]) % p;
            }
        }
    }
    out
}

pub(crate) fn conjugate(p: u64, n: usize, g: &[u64], g_inv: &[u64], x: &[u64]) -> RawMat {
    mul(p, n, &mul(p, n, g, x), g_inv)
}

pub(crate) fn mul_vec(p: u64, n: usize, a: &[u64], v: &[u64]) -> Vec<u64> {
    (0..n)
        .map(|i| (0..n).fold(0, |acc, k| (acc + a[i * n + k] * v[k]) % p))
        .collect()
}

pub(crate) fn transpose(n: usize, a: &[u64]) -> RawMat {
    (0..n * n).map(|idx| a[(idx % n) * n + idx / n]).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(p: u64, rows: usize, cols: usize, a: &mut [u64]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(r * cols + j, piv * cols + j);
        }
        let s = inv_mod(a[r * cols + c], p);
        for j in 0..cols {
            a[r * cols + j] = a[r * cols + j] * s % p;
        }
        for i in 0..rows {
            let f = a[i * cols + c];
            if i != r && f != 0 {
                for j in 0..cols {
                    a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn is_invertible(p: u64, n: usize, a: &[u64]) -> bool {
    let mut work = a.to_vec();
    rref(p, n, n, &mut work).len() == n
}

pub(crate) fn inverse(p: u64, n: usize, a: &[u64]) -> Option<RawMat> {
    let w = 2 * n;
    let mut aug = vec![0; n * w];
    for i in 0..n {
        aug[i * w..i * w + n].copy_from_slice(&a[i * n..i * n + n]);
        aug[i * w + n + i] = 1;
    }
    let pivots = rref(p, n, w, &mut aug);
    if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some((0..n * n).map(|idx| aug[(idx / n) * w + n + idx % n]).collect())
}

/// Basis of the right kernel of a `rows × cols` matrix.
pub(crate) fn kernel(p: u64, rows: usize, cols: usize, a: &[u64]) -> Vec<Vec<u64>> {
    let mut work = a.to_vec();
    let pivots = rref(p, rows, cols, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - work[r * cols + fc]) % p;
            }
            v
        })
        .collect()
}

/// Least generator of `F_p^×`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime modulus")
}

pub(crate) fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Base-`p` index of a digit string, first digit most significant.
pub(crate) fn encode(p: u64, digits: impl IntoIterator<Item = u64>) -> u64 {
    digits.into_iter().fold(0, |acc, d| acc * p + d)
}

pub(crate) fn decode(p: u64, mut idx: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

/// Disjoint sets whose representative is always the least member.
pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    /// Classes as sorted member lists, ordered by least member.
    pub(crate) fn classes(mut self) -> Vec<Vec<u64>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<u64>> = Vec::new();
        for x in 0..n as u32 {
            let r = self.find(x) as usize;
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(x as u64);
        }
        out
    }
}
