//! Finite fields GF(q) as F_p[x]/(m(x)).
//!
//! An element `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` is stored as the index
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, so index order is lexicographic on
//! the coordinate vector read from the top coefficient down.

use crate::error::{Result, RingError};

/// Fixed defining polynomials, lowest coefficient first, leading 1 included.
///
/// | q | m(x)          |
/// |---|---------------|
/// | 4 | x^2 + x + 1   |
/// | 8 | x^3 + x + 1   |
/// | 9 | x^2 + 1       |
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
];

const MAX_PRIME: u32 = 251;

#[derive(Debug, Clone)]
pub struct GfField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

#[cfg(test)]
fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl GfField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| RingError::MalformedSpec(format!("GF({q}): {q} is not a prime power")))?;
        if k == 1 {
            if p > MAX_PRIME {
                return Err(RingError::Unsupported(format!("GF({q}): prime above {MAX_PRIME}")));
            }
            return Ok(Self::build(p, 1, vec![0, 1]));
        }
        let modulus = MODULI
            .iter()
            .find(|(mp, mk, _)| *mp == p && *mk == k)
            .map(|(_, _, m)| m.to_vec())
            .ok_or_else(|| {
                RingError::Unsupported(format!("GF({q}): no fixed modulus for this prime power"))
            })?;
        Ok(Self::build(p, k, modulus))
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(k);
        let n = q as usize;
        let coords = |i: u32| -> Vec<u32> {
            let mut c = vec![0; k as usize];
            let mut v = i;
            for slot in c.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            c
        };
        let index = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let ca = coords(a);
            for b in 0..q {
                let cb = coords(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = index(&sum);

                // schoolbook product then reduce by the monic modulus
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (k as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    let shift = deg - k as usize;
                    for (i, m) in modulus[..k as usize].iter().enumerate() {
                        prod[shift + i] = (prod[shift + i] + (p - c) * m) % p;
                    }
                }
                mul[(a * q + b) as usize] = index(&prod[..k as usize]);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                (1..q)
                    .find(|&b| mul[(a * q + b) as usize] == 1)
                    .unwrap_or(0)
            })
            .collect();
        GfField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Defining polynomial, lowest coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// Image of an integer under Z -> GF(q).
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Index of the adjoined root `x` (only meaningful for k > 1).
    pub fn generator(&self) -> Option<u32> {
        (self.k > 1).then_some(self.p)
    }

    /// Coordinates `c_0..c_{k-1}` of an element.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let mut v = a;
        (0..self.k)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    /// Renders an element as an expression the element parser accepts.
    pub fn render(&self, a: u32) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let mut terms = Vec::new();
        for (deg, &c) in self.coords(a).iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                d => format!("x^{d}"),
            };
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}
