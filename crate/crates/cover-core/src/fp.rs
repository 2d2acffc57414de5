//! Dense linear algebra over prime fields, sized for the small systems the
//! cohomology layer produces.

pub type Vector = Vec<u32>;
pub type Matrix = Vec<Vec<u32>>;

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    (a + b) % p
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    (a + p - b % p) % p
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    (a * b) % p
}

/// Multiplicative inverse mod a prime.
pub fn inv(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p.
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

pub fn vec_add(a: &[u32], b: &[u32], p: u32) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| add(x, y, p)).collect()
}

pub fn vec_sub(a: &[u32], b: &[u32], p: u32) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| sub(x, y, p)).collect()
}

pub fn vec_scale(a: &[u32], s: u32, p: u32) -> Vector {
    a.iter().map(|&x| mul(x, s, p)).collect()
}

pub fn mat_identity(d: usize) -> Matrix {
    (0..d).map(|i| (0..d).map(|j| u32::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![0u32; m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l] == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = (out[i][j] + a[i][l] * b[l][j]) % p;
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[u32], p: u32) -> Vector {
    a.iter()
        .map(|row| row.iter().zip(v).fold(0u32, |acc, (&m, &x)| (acc + m * x) % p))
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix, p: u32) -> Matrix {
    a.iter().zip(b).map(|(r, s)| vec_add(r, s, p)).collect()
}

pub fn mat_scale(a: &Matrix, s: u32, p: u32) -> Matrix {
    a.iter().map(|r| vec_scale(r, s, p)).collect()
}

pub fn mat_eq_zero(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(|&x| x == 0))
}

/// Inverse of a square matrix, or `None` if singular.
pub fn mat_inv(a: &Matrix, p: u32) -> Option<Matrix> {
    let d = a.len();
    let mut m: Vec<Vec<u32>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..d).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| m[r][col] != 0)?;
        m.swap(col, pivot);
        let s = inv(m[col][col], p);
        for j in 0..2 * d {
            m[col][j] = mul(m[col][j], s, p);
        }
        for r in 0..d {
            if r != col && m[r][col] != 0 {
                let f = m[r][col];
                for j in 0..2 * d {
                    m[r][j] = sub(m[r][j], mul(f, m[col][j], p), p);
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[d..].to_vec()).collect())
}

/// Incremental row-echelon accumulator over F_p.
///
/// Rows are kept fully reduced; each pivot column holds a 1 and is zero in
/// every other stored row.
#[derive(Clone)]
pub struct Echelon {
    pub p: u32,
    pub ncols: usize,
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u32, ncols: usize) -> Echelon {
        Echelon { p, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &[u32]) -> Vector {
        let mut v = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if v[piv] != 0 {
                let f = v[piv];
                for j in 0..self.ncols {
                    v[j] = sub(v[j], mul(f, row[j], self.p), self.p);
                }
            }
        }
        v
    }

    /// Inserts a row; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut v = self.reduce(v);
        let piv = match v.iter().position(|&x| x != 0) {
            Some(i) => i,
            None => return false,
        };
        let s = inv(v[piv], self.p);
        for x in v.iter_mut() {
            *x = mul(*x, s, self.p);
        }
        // Back-substitute into existing rows to keep full reduction.
        for row in self.rows.iter_mut() {
            if row[piv] != 0 {
                let f = row[piv];
                for j in 0..self.ncols {
                    row[j] = sub(row[j], mul(f, v[j], self.p), self.p);
                }
            }
        }
        // Keep rows ordered by pivot column.
        let pos = self.pivots.iter().position(|&q| q > piv).unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        self.pivots.insert(pos, piv);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// True when `other`'s row space is contained in this one.
    pub fn contains_space(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_space(&self, other: &Echelon) -> bool {
        self.rank() == other.rank() && self.contains_space(other)
    }
}

/// Basis of the nullspace of a matrix (kernel of x -> A x).
pub fn nullspace(a: &Matrix, ncols: usize, p: u32) -> Vec<Vector> {
    let mut ech = Echelon::new(p, ncols);
    for row in a {
        ech.insert(row);
    }
    let pivot_cols: Vec<usize> = ech.pivots.clone();
    let is_pivot = |c: usize| pivot_cols.binary_search(&c).is_ok();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot(free) {
            continue;
        }
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &piv) in ech.rows.iter().zip(&ech.pivots) {
            v[piv] = sub(0, row[free], p);
        }
        basis.push(v);
    }
    basis
}

/// Solves `sum_i x_i rows[i] = target`; returns coefficients or `None`.
pub fn solve_in_span(rows: &[Vector], target: &[u32], p: u32) -> Option<Vector> {
    let ncols = target.len();
    // Augment each row with a coefficient-tracking tail.
    let k = rows.len();
    let mut ech = Echelon::new(p, ncols + k);
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        v.extend(vec![0u32; k]);
        v[ncols + i] = 1;
        ech.insert(&v);
    }
    let mut t = target.to_vec();
    t.extend(vec![0u32; k]);
    let reduced = ech.reduce(&t);
    if reduced[..ncols].iter().any(|&x| x != 0) {
        return None;
    }
    // target - sum coeff_i row_i reduced to zero: the tail carries -coeffs.
    Some(reduced[ncols..].iter().map(|&x| sub(0, x, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_prime() {
        for p in [2u32, 3, 5, 7] {
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new(3, 3);
        assert!(e.insert(&[1, 2, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[1, 0, 1])); // 1,2,0 - 2*(0,1,1) = 1,0,-2 = 1,0,1 mod 3
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[2, 1, 0]));
        assert!(!e.contains(&[0, 0, 1]));
    }

    #[test]
    fn nullspace_dimension() {
        // x + y + z = 0 over F2 has a 2-dimensional kernel.
        let a = vec![vec![1u32, 1, 1]];
        let ns = nullspace(&a, 3, 2);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!((v[0] + v[1] + v[2]) % 2, 0);
        }
    }

    #[test]
    fn solve_in_span_works() {
        let rows = vec![vec![1u32, 0, 1], vec![0, 1, 1]];
        let coeffs = solve_in_span(&rows, &[1, 1, 0], 2).unwrap();
        assert_eq!(coeffs, vec![1, 1]);
        assert!(solve_in_span(&rows, &[0, 0, 1], 2).is_none());
    }

    #[test]
    fn matrix_inverse() {
        let m = vec![vec![1u32, 1], vec![0, 1]];
        let mi = mat_inv(&m, 2).unwrap();
        assert_eq!(mat_mul(&m, &mi, 2), mat_identity(2));
        let singular = vec![vec![1u32, 1], vec![1, 1]];
        assert!(mat_inv(&singular, 2).is_none());
    }
}
