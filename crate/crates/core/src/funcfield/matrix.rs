use std::fmt;

use serde::Serialize;

use super::RatFunc;
use crate::error::{Result, RingError};

/// Square matrix over F_2(t), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FfMatrix {
    n: usize,
    entries: Vec<RatFunc>,
}

impl FfMatrix {
    pub fn new(n: usize, entries: Vec<RatFunc>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(RingError::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(FfMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(RingError::DimensionMismatch("matrix literal is not square".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn zero(n: usize) -> Self {
        FfMatrix {
            n,
            entries: vec![RatFunc::zero(); n * n],
        }
    }

    pub fn scalar(n: usize, c: &RatFunc) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &RatFunc::one())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    pub fn add(&self, o: &FfMatrix) -> FfMatrix {
        assert_eq!(self.n, o.n);
        FfMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn mul(&self, o: &FfMatrix) -> FfMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = RatFunc::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(o.get(k, j)));
                }
                out.entries[i * n + j] = acc;
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> FfMatrix {
        FfMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// `[a, b] = ab - ba`.
    pub fn bracket(&self, o: &FfMatrix) -> FfMatrix {
        self.mul(o).add(&o.mul(self))
    }

    pub fn trace(&self) -> RatFunc {
        (0..self.n).fold(RatFunc::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> RatFunc {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = RatFunc::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return RatFunc::zero();
            };
            if pivot != col {
                // a row swap flips the sign, which is invisible in characteristic 2
                for k in 0..n {
                    m.swap(pivot * n + k, col * n + k);
                }
            }
            let p = m[col * n + col].clone();
            det = det.mul(&p);
            let p_inv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = m[r * n + col].mul(&p_inv);
                if factor.is_zero() {
                    continue;
                }
                for k in col..n {
                    let v = m[r * n + k].sub(&factor.mul(&m[col * n + k]));
                    m[r * n + k] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<FfMatrix> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or_else(|| RingError::NotAUnit(self.to_string()))?;
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
                inv.swap(pivot * n + k, col * n + k);
            }
            let p_inv = a[col * n + col].inv()?;
            for k in 0..n {
                a[col * n + k] = a[col * n + k].mul(&p_inv);
                inv[col * n + k] = inv[col * n + k].mul(&p_inv);
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for k in 0..n {
                    a[r * n + k] = a[r * n + k].sub(&f.mul(&a[col * n + k]));
                    inv[r * n + k] = inv[r * n + k].sub(&f.mul(&inv[col * n + k]));
                }
            }
        }
        Ok(FfMatrix { n, entries: inv })
    }
}

impl fmt::Display for FfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for FfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FfMatrix({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Translates {
    Yes,
    No,
    Undecided,
}

/// Decides whether `a + beta*I` is invertible for every `beta` in F_2(t).
///
/// `det(a + beta I) = beta^2 + tr(a) beta + det(a)`. When the trace vanishes
/// this has a root iff `det(a)` is a square. A nonzero trace leads to an
/// Artin-Schreier equation, which is reported as undecided.
pub fn translates_invertible(a: &FfMatrix) -> Result<Translates> {
    if a.size() != 2 {
        return Err(RingError::DimensionMismatch(format!(
            "translates_invertible needs a 2x2 matrix, got {0}x{0}",
            a.size()
        )));
    }
    if !a.trace().is_zero() {
        return Ok(Translates::Undecided);
    }
    Ok(if a.det().is_square() {
        Translates::No
    } else {
        Translates::Yes
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::Poly;

    fn m(rows: &[[RatFunc; 2]; 2]) -> FfMatrix {
        FfMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn documented_translate_examples() {
        let (o, t) = (RatFunc::one(), RatFunc::t());
        let z = RatFunc::zero();
        assert_eq!(
            translates_invertible(&m(&[[o.clone(), o.clone()], [t.clone(), o.clone()]])).unwrap(),
            Translates::Yes
        );
        assert_eq!(
            translates_invertible(&m(&[[o.clone(), o.clone()], [o.clone(), o.clone()]])).unwrap(),
            Translates::No
        );
        assert_eq!(
            translates_invertible(&m(&[[o.clone(), z.clone()], [z.clone(), z.clone()]])).unwrap(),
            Translates::Undecided
        );
        assert!(translates_invertible(&FfMatrix::identity(3)).is_err());
    }

    #[test]
    fn det_and_inverse_agree() {
        let t = RatFunc::t();
        let t1 = RatFunc::from_poly(Poly::from_bits(0b11));
        let a = FfMatrix::from_rows(vec![
            vec![t.clone(), RatFunc::one(), RatFunc::zero()],
            vec![RatFunc::zero(), t1.clone(), RatFunc::one()],
            vec![RatFunc::one(), RatFunc::zero(), t.clone()],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), FfMatrix::identity(3));
        // cofactor expansion: t*(t+1)*t + 1*(1*1 - 0) = t^3+t^2+1
        assert_eq!(a.det(), RatFunc::from_poly(Poly::from_bits(0b1101)));
    }
}
