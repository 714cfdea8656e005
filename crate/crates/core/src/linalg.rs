//! Dense exact linear algebra: row reduction, rank, kernels, solving,
//! determinants, and row-space bookkeeping.

use num_traits::Zero;

use crate::field::{Field, Scalar};

pub type Vector = Vec<Scalar>;

/// A dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![vec![field.zero(); cols]; rows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i][j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.data[i]
    }

    pub fn rows(&self) -> &[Vector] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i][j] = v;
    }

    pub fn push_row(&mut self, row: Vector) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols);
        self.data.iter().map(|row| dot(self.field, row, v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j].add_assign_ref(&(a * b));
                    }
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for x in self.data[r][c..].iter_mut() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                axpy(&mut self.data[i][c..], &-&f, &pivot_row[c..]);
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(self.rows);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, each with a 1
    /// in its free coordinate.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m.data[r][free];
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = self.clone();
        for (row, x) in aug.data.iter_mut().zip(b) {
            row.push(x.clone());
        }
        aug.cols += 1;
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.data[r][self.cols].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.clone();
        for (i, row) in aug.data.iter_mut().enumerate() {
            row.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
        }
        aug.cols = 2 * n;
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let data = aug.data.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field, n, data))
    }

    /// Determinant: fraction-free Bareiss over `Q`, plain elimination over `Z/p`.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        match self.field {
            Field::Rational => self.bareiss(),
            Field::Prime(_) => self.gauss_det(),
        }
    }

    fn gauss_det(&self) -> Scalar {
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                a.swap(p, c);
                det = -&det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv().expect("nonzero pivot");
            let pivot_row = a[c].clone();
            for row in a.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] * &inv;
                axpy(&mut row[c..], &-&f, &pivot_row[c..]);
            }
        }
        det
    }

    fn bareiss(&self) -> Scalar {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let n = self.rows;
        if n == 0 {
            return self.field.one();
        }
        // clear denominators row by row so the recurrence stays integral
        let mut scale = BigRational::from_integer(BigInt::from(1));
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in &self.data {
            let mut l = BigInt::from(1);
            for x in row {
                let q = x.as_rational().expect("rational matrix");
                l = num_integer::lcm(l, q.denom().clone());
            }
            scale /= BigRational::from_integer(l.clone());
            a.push(
                row.iter()
                    .map(|x| {
                        let q = x.as_rational().expect("rational matrix");
                        q.numer() * (&l / q.denom())
                    })
                    .collect(),
            );
        }
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return self.field.zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = BigRational::from_integer(a[n - 1][n - 1].clone() * BigInt::from(sign)) * scale;
        Scalar::Q(det)
    }
}

/// `dst += f * src`.
pub fn axpy(dst: &mut [Scalar], f: &Scalar, src: &[Scalar]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            d.add_assign_ref(&(f * s));
        }
    }
}

pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc.add_assign_ref(&(x * y));
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn scale_vec(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A subspace of `K^dim` kept as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, dim: usize) -> Self {
        Subspace {
            field,
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, dim: usize) -> Self {
        Self::span(field, dim, Matrix::identity(field, dim).data)
    }

    pub fn span(field: Field, dim: usize, vectors: Vec<Vector>) -> Self {
        let mut m = Matrix::from_rows(field, dim, vectors);
        let pivots = m.rref();
        let mut basis = m.data;
        basis.truncate(pivots.len());
        Subspace {
            field,
            dim,
            basis,
            pivots,
        }
    }

    /// Coordinate subspace spanned by the given unit vectors.
    pub fn coordinate(field: Field, dim: usize, coords: &[usize]) -> Self {
        let vecs = coords
            .iter()
            .map(|&c| {
                let mut v = vec![field.zero(); dim];
                v[c] = field.one();
                v
            })
            .collect();
        Self::span(field, dim, vecs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot coordinates; zero iff `v` is
    /// in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -&r[p];
                axpy(&mut r, &f, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        let r: Vector = r.iter().map(|x| x * &inv).collect();
        for b in self.basis.iter_mut() {
            if !b[p].is_zero() {
                let f = -&b[p];
                axpy(b, &f, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for b in &other.basis {
            out.insert(b);
        }
        out
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // kernel of [A; -B]^T gives coefficient pairs with a·A = b·B
        let k = self.dim();
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.field, self.dim, &cols);
        let vecs = m
            .kernel()
            .into_iter()
            .map(|coef| {
                let mut v = vec![self.field.zero(); self.dim];
                for (c, b) in coef[..k].iter().zip(&self.basis) {
                    axpy(&mut v, c, b);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.dim, vecs)
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        let cols = rows[0].len();
        Matrix::from_rows(f, cols, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect())
    }

    #[test]
    fn rank_kernel_solve() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(is_zero_vec(&m.mul_vec(&ker[0])));
        let f = Field::Rational;
        let b: Vec<_> = [4, 8, 2].iter().map(|&x| f.from_i64(x)).collect();
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let bad: Vec<_> = [4, 7, 2].iter().map(|&x| f.from_i64(x)).collect();
        assert!(m.solve(&bad).is_none());
    }

    #[test]
    fn determinants_agree_across_methods() {
        let m = q(&[&[2, -1, 0, 3], &[1, 5, 2, 0], &[0, 4, -3, 1], &[7, 0, 1, 1]]);
        let det = m.determinant();
        // cofactor oracle by brute-force permutation expansion
        let perms = permutations(4);
        let f = Field::Rational;
        let mut acc = f.zero();
        for (perm, sign) in perms {
            let mut t = f.from_i64(sign);
            for (i, &j) in perm.iter().enumerate() {
                t = &t * m.get(i, j);
            }
            acc = &acc + &t;
        }
        assert_eq!(det, acc);
        let p = Field::Prime(32003);
        let mp = Matrix::from_rows(
            p,
            4,
            m.rows().iter().map(|r| r.iter().map(|x| p.from_rational(x.as_rational().unwrap()).unwrap()).collect()).collect(),
        );
        assert_eq!(mp.determinant(), p.from_rational(acc.as_rational().unwrap()).unwrap());
    }

    #[test]
    fn bareiss_with_fractions_and_singular() {
        let f = Field::Rational;
        let m = Matrix::from_rows(
            f,
            2,
            vec![
                vec![f.parse_scalar("1/2").unwrap(), f.parse_scalar("1/3").unwrap()],
                vec![f.parse_scalar("3").unwrap(), f.parse_scalar("5/4").unwrap()],
            ],
        );
        assert_eq!(m.determinant(), f.parse_scalar("-3/8").unwrap());
        assert!(q(&[&[0, 1], &[0, 2]]).determinant().is_zero());
        assert_eq!(q(&[&[0, 1], &[1, 0]]).determinant(), f.from_i64(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1], &[5, 3]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Rational, 2));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspaces() {
        let f = Field::Rational;
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let a = Subspace::span(f, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::coordinate(f, 3, &[0, 2]);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[1, 2, 1])));
        assert!(!a.contains(&v(&[1, 0, 0])));
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[1, 0, -1])));
        assert_eq!(a.sum(&b).dim(), 3);
        let mut c = Subspace::zero(f, 3);
        assert!(c.insert(&v(&[0, 2, 0])));
        assert!(!c.insert(&v(&[0, 5, 0])));
        assert!(c.insert(&v(&[1, 1, 0])));
        assert_eq!(c, Subspace::coordinate(f, 3, &[0, 1]));
    }

    fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
        if n == 1 {
            return vec![(vec![0], 1)];
        }
        let mut out = Vec::new();
        for (p, s) in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                let sign = if (n - 1 - pos) % 2 == 0 { s } else { -s };
                out.push((q, sign));
            }
        }
        out
    }
}
