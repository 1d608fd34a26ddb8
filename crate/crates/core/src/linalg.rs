//! Matrices of polynomials and their exact determinant.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{ensure_same_ring, Homomorphism, Polynomial, Ring};

/// Largest matrix the cofactor expansion accepts.
pub const MAX_DETERMINANT_SIZE: usize = 8;

/// A dense row-major matrix whose entries all lie in one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("{rows}x{cols} has an empty dimension")));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            ensure_same_ring(e.ring(), ring)?;
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows of expressions parsed over `ring`.
    ///
    /// ```
    /// use completion_kit::{PolyMatrix, RingSpec};
    ///
    /// let ring = RingSpec::new(["a", "b", "c", "d"]).unwrap();
    /// let m = PolyMatrix::parse(&ring, &[&["a", "b"], &["c", "d"]]).unwrap();
    /// assert_eq!(m.determinant().unwrap().to_string(), "a*d - b*c");
    /// ```
    pub fn parse(ring: &Ring, rows: &[&[&str]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|text| ring.parse(text))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, rows.len(), cols, entries)
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|i| {
                if i / n == i % n {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect();
        PolyMatrix {
            ring: ring.clone(),
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    /// A copy with one entry replaced. The replacement must share the ring.
    pub fn with_entry(&self, row: usize, col: usize, value: Polynomial) -> Result<Self> {
        ensure_same_ring(value.ring(), &self.ring)?;
        if row >= self.rows || col >= self.cols {
            return Err(Error::Shape(format!("no entry ({row}, {col})")));
        }
        let mut m = self.clone();
        m.entries[row * self.cols + col] = value;
        Ok(m)
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Exact determinant by cofactor expansion along the first column.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows > MAX_DETERMINANT_SIZE {
            return Err(Error::TooLarge(self.rows));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor_determinant(&rows, 0))
    }

    /// Determinant of the submatrix on `rows` and columns `col..`.
    fn minor_determinant(&self, rows: &[usize], col: usize) -> Polynomial {
        if rows.len() == 1 {
            return self.get(rows[0], col).clone();
        }
        let mut det = Polynomial::zero(&self.ring);
        let mut rest = Vec::with_capacity(rows.len() - 1);
        for (i, &r) in rows.iter().enumerate() {
            let entry = self.get(r, col);
            if entry.is_zero() {
                continue;
            }
            rest.clear();
            rest.extend(rows.iter().copied().filter(|&x| x != r));
            let term = entry * &self.minor_determinant(&rest, col + 1);
            det = if i % 2 == 0 { &det + &term } else { &det - &term };
        }
        det
    }

    /// Applies `hom` to every entry.
    pub fn apply_hom(&self, hom: &Homomorphism) -> Result<Self> {
        ensure_same_ring(&self.ring, hom.source())?;
        let entries = self
            .entries
            .iter()
            .map(|e| hom.apply(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: hom.target().clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Evaluates every entry at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c).evaluate(point))
                    .collect()
            })
            .collect()
    }
}

/// Determinant of a 3x3 integer matrix by the rule of Sarrus.
pub fn det3(m: &[[BigInt; 3]; 3]) -> BigInt {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
