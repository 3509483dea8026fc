//! Polynomials over GF(2), bit-packed: bit `i` is the coefficient of `t^i`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    // no trailing zero words
    words: Vec<u64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::from_bits(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly::monomial(1)
    }

    pub fn monomial(deg: usize) -> Self {
        let mut words = vec![0; deg / 64 + 1];
        words[deg / 64] = 1 << (deg % 64);
        Poly { words }
    }

    pub fn from_bits(bits: u64) -> Self {
        let mut p = Poly { words: vec![bits] };
        p.trim();
        p
    }

    /// From coefficients, lowest degree first; only the parity of each entry matters.
    pub fn from_coeffs(coeffs: &[u8]) -> Self {
        let mut p = Poly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c & 1 == 1 {
                p.flip(i);
            }
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree; `None` stands for the zero polynomial's degree of minus infinity.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    /// Coefficients, lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> Vec<u8> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i) as u8).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.words.len().max(other.words.len());
        let mut words: Vec<u64> = (0..n)
            .map(|i| self.words.get(i).unwrap_or(&0) ^ other.words.get(i).unwrap_or(&0))
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        Poly { words }
    }

    fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let (wshift, bshift) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + wshift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + wshift] ^= w << bshift;
            if bshift > 0 {
                words[i + wshift + 1] ^= w >> (64 - bshift);
            }
        }
        let mut p = Poly { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let Some(d) = self.degree() else {
            return Poly::zero();
        };
        let mut acc = Poly::zero();
        for i in 0..=d {
            if self.coeff(i) {
                acc = acc.add(&other.shl(i));
            }
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let mut q = Poly::zero();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            q.flip(shift);
            r = r.add(&divisor.shl(shift));
        }
        (q, r)
    }

    /// Exact division; callers guarantee divisibility.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative: over GF(2) only odd-degree terms survive, shifted down.
    pub fn derivative(&self) -> Poly {
        let mut d = Poly::zero();
        if let Some(deg) = self.degree() {
            for i in (1..=deg).step_by(2) {
                if self.coeff(i) {
                    d.flip(i - 1);
                }
            }
        }
        d
    }

    /// Square root of a polynomial with only even-degree terms.
    pub fn sqrt_even(&self) -> Option<Poly> {
        let mut r = Poly::zero();
        if let Some(deg) = self.degree() {
            for i in 0..=deg {
                if self.coeff(i) {
                    if i % 2 == 1 {
                        return None;
                    }
                    r.flip(i / 2);
                }
            }
        }
        Some(r)
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Square-free decomposition `f = prod g_i^{m_i}` with each `g_i` square-free.
    ///
    /// Characteristic-2 variant of Yun's algorithm: the part with
    /// multiplicities divisible by 2 is peeled off as a square and handled
    /// recursively.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, u32)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return out;
        }
        let mut c = self.gcd(&self.derivative());
        let mut w = self.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if !fac.is_one() {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if !c.is_one() {
            let root = c
                .sqrt_even()
                .expect("remaining cofactor has even multiplicities");
            out.extend(
                root.squarefree_decomposition()
                    .into_iter()
                    .map(|(g, m)| (g, 2 * m)),
            );
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u64) -> Poly {
        Poly::from_bits(bits)
    }

    #[test]
    fn arithmetic_basics() {
        // (t+1)^2 = t^2+1
        assert_eq!(p(0b11).mul(&p(0b11)), p(0b101));
        assert_eq!(p(0b101).to_string(), "t^2+1");
        let (q, r) = p(0b1011).div_rem(&p(0b11));
        assert_eq!(q.mul(&p(0b11)).add(&r), p(0b1011));
        assert_eq!(p(0b101).gcd(&p(0b110)), p(0b11));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::monomial(70).degree(), Some(70));
    }

    #[test]
    fn wide_shift_roundtrip() {
        let a = Poly::monomial(63).add(&Poly::one());
        let b = a.mul(&a);
        assert_eq!(b, Poly::monomial(126).add(&Poly::one()));
        assert_eq!(b.sqrt_even().unwrap(), a);
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // t^3 (t+1)^2 (t^2+t+1)
        let f = Poly::t()
            .pow(3)
            .mul(&p(0b11).pow(2))
            .mul(&p(0b111));
        let mut dec = f.squarefree_decomposition();
        dec.sort_by_key(|(_, m)| *m);
        let rebuilt = dec
            .iter()
            .fold(Poly::one(), |acc, (g, m)| acc.mul(&g.pow(*m)));
        assert_eq!(rebuilt, f);
        let mults: Vec<u32> = dec.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 2, 3]);
    }
}
