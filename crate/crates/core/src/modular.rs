//! Square matrices over `Z/m`, acting on row vectors from the right.

use std::fmt;

use crate::perm::gcd;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    modulus: u64,
    dim: usize,
    /// Row-major, each entry reduced into `0..modulus`.
    entries: Vec<u64>,
}

impl Matrix {
    pub fn identity(dim: usize, modulus: u64) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % modulus;
        }
        Matrix {
            modulus,
            dim,
            entries,
        }
    }

    /// Builds a matrix from signed rows, reducing every entry.
    pub fn from_rows(modulus: u64, rows: &[Vec<i64>]) -> Option<Self> {
        let dim = rows.len();
        if modulus < 2 || rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(modulus as i64) as u64)
            .collect();
        Some(Matrix {
            modulus,
            dim,
            entries,
        })
    }

    /// The matrix whose row-major entries are the base-`modulus` digits of
    /// `index`, most significant first.
    pub(crate) fn from_index(dim: usize, modulus: u64, mut index: u64) -> Self {
        let mut entries = vec![0; dim * dim];
        for e in entries.iter_mut().rev() {
            *e = index % modulus;
            index /= modulus;
        }
        Matrix {
            modulus,
            dim,
            entries,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim, self.modulus)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!((self.dim, self.modulus), (other.dim, other.modulus));
        let n = self.dim;
        let m = self.modulus;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = (entries[i * n + j] + a * other.entries[k * n + j]) % m;
                }
            }
        }
        Matrix {
            modulus: m,
            dim: n,
            entries,
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.dim, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn minus_identity(&self) -> Matrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            let e = &mut out.entries[i * self.dim + i];
            *e = (*e + self.modulus - 1) % self.modulus;
        }
        out
    }

    /// Determinant reduced mod the modulus.
    pub fn det(&self) -> u64 {
        let signed: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        integer_det(self.dim, &signed).rem_euclid(self.modulus as i128) as u64
    }

    pub fn is_invertible(&self) -> bool {
        gcd(self.det(), self.modulus) == 1
    }

    /// `v ↦ v·M` on a vector stored as digits.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let n = self.dim;
        (0..n)
            .map(|j| (0..n).fold(0, |acc, i| (acc + v[i] * self.entries[i * n + j]) % self.modulus))
            .collect()
    }

    /// Inverse as the last power before the identity; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_invertible() {
            return None;
        }
        let mut prev = Matrix::identity(self.dim, self.modulus);
        let mut cur = self.clone();
        while !cur.is_identity() {
            prev = cur.clone();
            cur = cur.mul(self);
        }
        Some(prev)
    }

    pub fn diagonal(modulus: u64, diag: &[u64]) -> Matrix {
        let n = diag.len();
        let mut out = Matrix::identity(n, modulus);
        for (i, &d) in diag.iter().enumerate() {
            out.entries[i * n + i] = d % modulus;
        }
        out
    }

    /// `P⁻¹ M P`.
    pub fn conjugate_by(&self, p: &Matrix) -> Matrix {
        p.inverse().expect("invertible").mul(self).mul(p)
    }

    /// Whether `v·M = v` has only the zero solution, by enumerating vectors.
    pub fn fixes_only_zero_by_enumeration(&self) -> bool {
        let n = self.dim;
        let total = (self.modulus as usize).pow(n as u32);
        (1..total).all(|idx| {
            let v = digits(idx, n, self.modulus);
            self.apply(&v) != v
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let n = self.dim + other.dim;
        let mut entries = vec![0; n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * n + j] = self.entry(i, j);
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                entries[(i + self.dim) * n + j + self.dim] = other.entry(i, j);
            }
        }
        Matrix {
            modulus: self.modulus,
            dim: n,
            entries,
        }
    }

    /// Submatrix on the given coordinates.
    pub fn restrict(&self, coords: &[usize]) -> Matrix {
        let k = coords.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in coords {
            for &j in coords {
                entries.push(self.entry(i, j));
            }
        }
        Matrix {
            modulus: self.modulus,
            dim: k,
            entries,
        }
    }

    /// Same entries reduced mod a divisor of the modulus.
    pub fn reduce(&self, modulus: u64) -> Matrix {
        Matrix {
            modulus,
            dim: self.dim,
            entries: self.entries.iter().map(|&x| x % modulus).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.rows(), self.modulus)
    }
}

/// Base-`modulus` digits of `index`, most significant first.
pub(crate) fn digits(mut index: usize, len: usize, modulus: u64) -> Vec<u64> {
    let mut v = vec![0; len];
    for d in v.iter_mut().rev() {
        *d = (index as u64) % modulus;
        index /= modulus as usize;
    }
    v
}

pub(crate) fn from_digits(v: &[u64], modulus: u64) -> usize {
    v.iter().fold(0usize, |acc, &d| acc * modulus as usize + d as usize)
}

/// Fraction-free Gaussian elimination over the integers.
pub fn integer_det(n: usize, entries: &[i128]) -> i128 {
    if n == 0 {
        return 1;
    }
    let mut a = entries.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            match (k + 1..n).find(|&r| a[r * n + k] != 0) {
                Some(r) => {
                    for j in 0..n {
                        a.swap(k * n + j, r * n + j);
                    }
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = a[k * n + k];
    }
    sign * a[n * n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(modulus: u64, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(modulus, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(integer_det(3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]), 6);
        assert_eq!(integer_det(2, &[0, 1, 1, 0]), -1);
        assert_eq!(integer_det(2, &[1, 2, 2, 4]), 0);
        assert_eq!(m(7, &[&[3, 1], &[2, 5]]).det(), 13 % 7);
        assert!(!m(4, &[&[2, 0], &[0, 1]]).is_invertible());
        assert!(m(4, &[&[3, 0], &[1, 1]]).is_invertible());
    }

    #[test]
    fn powers_and_products() {
        let r = m(5, &[&[0, 4], &[1, 0]]);
        assert_eq!(r.pow(2), m(5, &[&[4, 0], &[0, 4]]));
        assert!(r.pow(4).is_identity());
        assert_eq!(r.apply(&[1, 0]), vec![0, 4]);
        assert!(r.fixes_only_zero_by_enumeration());
        assert!(r.minus_identity().is_invertible());
        assert_eq!(r.inverse().unwrap().mul(&r), Matrix::identity(2, 5));
        assert!(m(4, &[&[2, 0], &[0, 1]]).inverse().is_none());
        assert!(!m(5, &[&[1, 1], &[0, 1]]).fixes_only_zero_by_enumeration());
    }

    #[test]
    fn index_roundtrip() {
        for idx in [0u64, 1, 17, 80] {
            let a = Matrix::from_index(2, 3, idx);
            let flat: Vec<u64> = a.rows().concat();
            assert_eq!(from_digits(&flat, 3) as u64, idx);
        }
        assert_eq!(digits(5, 3, 2), vec![1, 0, 1]);
    }
}
