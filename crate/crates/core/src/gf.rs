//! Arithmetic in GF(p^r).
//!
//! Elements are packed base-p integers in the polynomial basis: the constant
//! term is the least significant digit, so for p = 2 an element is simply the
//! bit pattern of its polynomial (`0b110` is `a^2 + a`). Multiplication goes
//! through exp/log tables built from a primitive element; for q <= 256 a full
//! product table is also kept because the row reduction hot loop is dominated
//! by scalar-times-row updates.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Largest order for which full add/mul tables are materialized.
const TABLE_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeP(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{r} exceeds the supported maximum of 2^16")]
    OrderTooLarge { p: u32, r: u32 },
    #[error("modulus {modulus} is not a monic polynomial of degree {r} over GF({p})")]
    BadModulus { p: u32, r: u32, modulus: u32 },
    #[error("modulus {0} is reducible")]
    ReducibleModulus(u32),
    #[error("no primitive element found for modulus {0}")]
    NoPrimitiveElementFound(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("value {value} is not an element of GF({q})")]
    OutOfRange { value: u32, q: u32 },
    #[error("field order {0} is not a prime power")]
    UnknownFieldOrder(u32),
}

/// A field element, packed in base p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
#[repr(transparent)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Built-in moduli. Binary entries are the usual primitive polynomials
/// (a^2+a+1 and a^3+a+1 for GF(4) and GF(8)); odd entries are the smallest
/// monic irreducible polynomial of each degree.
const DEFAULT_MODULI: &[(u32, u32, u32)] = &[
    (2, 1, 0b10),
    (2, 2, 0b111),
    (2, 3, 0b1011),
    (2, 4, 0b10011),
    (2, 5, 0b100101),
    (2, 6, 0b1000011),
    (2, 7, 0b10001001),
    (2, 8, 0b100011101),
    (3, 1, 3),
    (3, 2, 10),
    (3, 3, 34),
    (3, 4, 86),
    (3, 5, 250),
    (3, 6, 734),
    (3, 7, 2198),
    (3, 8, 6572),
    (5, 1, 5),
    (5, 2, 27),
    (5, 3, 131),
    (5, 4, 627),
    (5, 5, 3146),
    (5, 6, 15632),
    (7, 1, 7),
    (7, 2, 50),
    (7, 3, 345),
    (7, 4, 2409),
    (7, 5, 16817),
];

/// The finite field GF(p^r).
#[derive(Clone)]
pub struct Field {
    p: u32,
    r: u32,
    q: usize,
    modulus: u32,
    exp: Vec<Elem>,
    log: Vec<u32>,
    mul_table: Option<Vec<Elem>>,
    add_table: Option<Vec<Elem>>,
    neg_table: Vec<Elem>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, r)` with `q = p^r`, if it is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

/// Dense polynomial helpers over GF(p), coefficients little-endian.
mod poly {
    pub fn unpack(mut v: u64, p: u32) -> Vec<u32> {
        let mut out = Vec::new();
        while v > 0 {
            out.push((v % p as u64) as u32);
            v /= p as u64;
        }
        out
    }

    pub fn pack(coeffs: &[u32], p: u32) -> u64 {
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * p as u64 + c as u64)
    }

    fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime, so a^(p-2) is the inverse
        let mut result = 1u64;
        let mut base = a as u64 % p as u64;
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

    /// Remainder of `a` modulo `b` (b nonzero).
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        trim(&mut a);
        let mut b = b.to_vec();
        trim(&mut b);
        let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
        while a.len() >= b.len() {
            let top = *a.last().unwrap();
            if top == 0 {
                a.pop();
                continue;
            }
            let c = top * lead_inv % p;
            let shift = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - c * bi % p) % p;
            }
            trim(&mut a);
        }
        a
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let deg = m.len().saturating_sub(1);
        for d in 1..=deg / 2 {
            let lo = (p as u64).pow(d as u32);
            for v in lo..2 * lo {
                if rem(m, &unpack(v, p), p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

fn default_modulus(p: u32, r: u32) -> u32 {
    if let Some(&(_, _, m)) = DEFAULT_MODULI.iter().find(|&&(pp, rr, _)| pp == p && rr == r) {
        return m;
    }
    let lo = p.pow(r);
    (lo..2 * lo)
        .find(|&m| poly::is_irreducible(&poly::unpack(m as u64, p), p))
        .expect("an irreducible polynomial exists in every degree")
}

impl Field {
    /// Builds GF(p^r). Without an explicit modulus the built-in default for
    /// `(p, r)` is used.
    pub fn new(p: u32, r: u32, modulus: Option<u32>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeP(p));
        }
        if r == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(r).filter(|&q| q <= MAX_ORDER as u64);
        let q = q.ok_or(FieldError::OrderTooLarge { p, r })? as usize;

        let modulus = modulus.unwrap_or_else(|| default_modulus(p, r));
        let m = poly::unpack(modulus as u64, p);
        if m.len() != r as usize + 1 || m[r as usize] != 1 {
            return Err(FieldError::BadModulus { p, r, modulus });
        }
        if !poly::is_irreducible(&m, p) {
            return Err(FieldError::ReducibleModulus(modulus));
        }

        let mulmod = |a: u32, b: u32| -> u32 {
            let prod = poly::mul(&poly::unpack(a as u64, p), &poly::unpack(b as u64, p), p);
            poly::pack(&poly::rem(&prod, &m, p), p) as u32
        };

        let (exp, log) = Self::find_primitive(q, &mulmod).ok_or(FieldError::NoPrimitiveElementFound(modulus))?;

        let mut field = Field {
            p,
            r,
            q,
            modulus,
            exp,
            log,
            mul_table: None,
            add_table: None,
            neg_table: Vec::new(),
        };
        field.neg_table = (0..q as u32).map(|v| field.digitwise(v, 0, |a, _| (p - a) % p)).collect();
        if q <= TABLE_ORDER {
            let mut mul = vec![Elem::ZERO; q * q];
            let mut add = vec![Elem::ZERO; q * q];
            for a in 0..q {
                for b in 0..q {
                    mul[a * q + b] = field.mul_log(Elem(a as u16), Elem(b as u16));
                    add[a * q + b] = field.digitwise(a as u32, b as u32, |x, y| (x + y) % p);
                }
            }
            field.mul_table = Some(mul);
            field.add_table = Some(add);
        }
        Ok(field)
    }

    /// Builds the field of order `q` with its default modulus.
    pub fn with_order(q: u32) -> Result<Field, FieldError> {
        let (p, r) = prime_power(q).ok_or(FieldError::UnknownFieldOrder(q))?;
        Field::new(p, r, None)
    }

    fn find_primitive(q: usize, mulmod: &dyn Fn(u32, u32) -> u32) -> Option<(Vec<Elem>, Vec<u32>)> {
        let order = q - 1;
        let candidates: Box<dyn Iterator<Item = u32>> = if q == 2 { Box::new(1..2) } else { Box::new(2..q as u32) };
        for g in candidates {
            let mut exp = Vec::with_capacity(order);
            let mut log = vec![u32::MAX; q];
            let mut x = 1u32;
            let mut ok = true;
            for i in 0..order {
                if log[x as usize] != u32::MAX {
                    ok = false;
                    break;
                }
                log[x as usize] = i as u32;
                exp.push(Elem(x as u16));
                x = mulmod(x, g);
            }
            if ok && x == 1 {
                return Some((exp, log));
            }
        }
        None
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> Elem {
        let p = self.p;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.r {
            out += op(a % p, b % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out as u16)
    }

    #[inline]
    fn mul_log(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        self.exp[s as usize % (self.q - 1)]
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    /// Number of elements q = p^r.
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Powers of the primitive element, `exp_table()[i] = g^i` for `i < q - 1`.
    pub fn exp_table(&self) -> &[Elem] {
        &self.exp
    }

    pub fn primitive(&self) -> Elem {
        if self.q == 2 {
            Elem::ONE
        } else {
            self.exp[1]
        }
    }

    /// Discrete logarithm of a nonzero element.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.0 as usize])
    }

    /// `g^e` for the primitive element g.
    pub fn pow_primitive(&self, e: u64) -> Elem {
        self.exp[(e % (self.q as u64 - 1)) as usize]
    }

    pub fn elem(&self, value: u32) -> Result<Elem, FieldError> {
        if (value as usize) < self.q {
            Ok(Elem(value as u16))
        } else {
            Err(FieldError::OutOfRange { value, q: self.q as u32 })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        (a.0 as usize) < self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q as u32).map(|v| Elem(v as u16))
    }

    #[inline]
    pub fn is_binary_char(&self) -> bool {
        self.p == 2
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        match &self.add_table {
            Some(t) => t[a.0 as usize * self.q + b.0 as usize],
            None => self.digitwise(a.value(), b.value(), |x, y| (x + y) % self.p),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg_table[a.0 as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => t[a.0 as usize * self.q + b.0 as usize],
            None => self.mul_log(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let order = self.q as u32 - 1;
        Ok(self.exp[((order - self.log[a.0 as usize]) % order) as usize])
    }

    /// `dst[i] += c * src[i]` for every i.
    #[inline]
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        debug_assert_eq!(dst.len(), src.len());
        if c.is_zero() {
            return;
        }
        match (&self.mul_table, self.p == 2) {
            (Some(t), true) => {
                let row = &t[c.0 as usize * self.q..(c.0 as usize + 1) * self.q];
                for (d, s) in dst.iter_mut().zip(src) {
                    d.0 ^= row[s.0 as usize].0;
                }
            }
            (Some(t), false) => {
                let row = &t[c.0 as usize * self.q..(c.0 as usize + 1) * self.q];
                let add = self.add_table.as_deref().unwrap();
                for (d, s) in dst.iter_mut().zip(src) {
                    *d = add[d.0 as usize * self.q + row[s.0 as usize].0 as usize];
                }
            }
            _ => {
                for (d, s) in dst.iter_mut().zip(src) {
                    *d = self.add(*d, self.mul_log(c, *s));
                }
            }
        }
    }

    /// `v[i] *= c` for every i.
    #[inline]
    pub fn scale(&self, v: &mut [Elem], c: Elem) {
        for x in v.iter_mut() {
            *x = self.mul(c, *x);
        }
    }
}
