//! Arithmetic in GF(p^m), elements stored as coefficient vectors modulo a
//! monic irreducible polynomial.
//!
//! Fields here are small (orders up to a few hundred), so the modulus is
//! found by exhaustive divisor search and inverses by exponentiation.

use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

// Polynomials over GF(p) are coefficient vectors, low-degree first.
fn trim(mut poly: Vec<u32>) -> Vec<u32> {
    while poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

/// Remainder of `num` divided by the monic polynomial `div` over GF(p).
fn poly_rem(num: &[u32], div: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = div.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in div.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

/// Monic polynomials of degree `deg` in lexicographic order, low-degree
/// coefficient varying slowest.
fn monic_polys(p: u32, deg: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(deg);
    (0..count).map(move |mut idx| {
        let mut coeffs = vec![0; deg as usize + 1];
        for i in (0..deg as usize).rev() {
            coeffs[i] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        coeffs[deg as usize] = 1;
        coeffs
    })
}

/// Irreducibility by trial division against every monic divisor of degree
/// at most `deg / 2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg == 0 {
        return false;
    }
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|div| !poly_rem(poly, &div, p).is_empty()))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    modulus: Vec<u32>,
}

impl FiniteField {
    /// GF(p^m) with the lexicographically smallest monic irreducible modulus.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadDegree);
        }
        let modulus = monic_polys(p, m)
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");
        Ok(FiniteField { p, m, modulus })
    }

    pub fn with_order(q: u32) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        FiniteField::new(p, m)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.m)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.m as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = 1;
        e
    }

    /// Element from its coefficient vector (low-degree first).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        let e = FieldElement {
            coeffs: coeffs.to_vec(),
        };
        self.check(&e)?;
        Ok(e)
    }

    /// The element whose base-p digits (low first) are its coefficients.
    /// Index 0 is zero and index 1 is one.
    pub fn from_index(&self, mut index: usize) -> FieldElement {
        debug_assert!(index < self.order());
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = (index % self.p as usize) as u32;
            index /= self.p as usize;
        }
        e
    }

    pub fn index_of(&self, e: &FieldElement) -> Result<usize> {
        self.check(e)?;
        Ok(e.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p as usize + c as usize))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|i| self.from_index(i))
    }

    fn check(&self, e: &FieldElement) -> Result<()> {
        if e.coeffs.len() == self.m as usize && e.coeffs.iter().all(|&c| c < self.p) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        })
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(FieldElement {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        })
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p;
        let mut prod = vec![0u32; 2 * self.m as usize - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut coeffs = poly_rem(&prod, &self.modulus, p);
        coeffs.resize(self.m as usize, 0);
        Ok(FieldElement { coeffs })
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> Result<FieldElement> {
        self.check(a)?;
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// a^(q-2), the inverse in the multiplicative group of order q-1.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.coeffs.iter().all(|&c| c == 0) {
            return Err(Error::DivisionByZero);
        }
        self.pow(a, self.order() as u64 - 2)
    }

    /// Addition and multiplication tables indexed by [`FiniteField::from_index`].
    pub fn tables(&self) -> FieldTables {
        let q = self.order();
        let elems: Vec<_> = self.elements().collect();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = self.index_of(&self.add(a, b).unwrap()).unwrap();
                mul[i * q + j] = self.index_of(&self.mul(a, b).unwrap()).unwrap();
            }
        }
        FieldTables { q, add, mul }
    }
}

/// Index-level operation tables for tight loops.
#[derive(Debug, Clone)]
pub struct FieldTables {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FieldTables {
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert!(!is_prime(1) && is_prime(2) && !is_prime(9));
    }

    #[test]
    fn make_field_examples() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(FiniteField::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(FiniteField::new(3, 0), Err(Error::BadDegree));
    }

    #[test]
    fn gf4_modulus_matches_exhaustive_oracle() {
        // Monic quadratics over GF(2) with no root in {0,1} are irreducible.
        let irreducible: Vec<_> = (0..4u32)
            .map(|i| [i & 1, (i >> 1) & 1])
            .filter(|&[c0, c1]| (0..2).all(|x| (x * x + c1 * x + c0) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![[1, 1]]);
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let gf2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(gf2.add(&gf2.one(), &gf2.one()).unwrap(), gf2.zero());

        let gf4 = FiniteField::new(2, 2).unwrap();
        let x = gf4.element(&[0, 1]).unwrap();
        assert_eq!(gf4.mul(&x, &x).unwrap().coeffs(), &[1, 1]);

        let gf5 = FiniteField::new(5, 1).unwrap();
        let two = gf5.element(&[2]).unwrap();
        assert_eq!(gf5.inv(&two).unwrap().coeffs(), &[3]);
        assert_eq!(gf5.inv(&gf5.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_elements_rejected() {
        let gf4 = FiniteField::new(2, 2).unwrap();
        let gf5 = FiniteField::new(5, 1).unwrap();
        let a = gf5.element(&[3]).unwrap();
        assert_eq!(gf4.add(&a, &gf4.one()), Err(Error::FieldMismatch));
        assert_eq!(gf4.element(&[2, 0]), Err(Error::FieldMismatch));
    }

    #[test]
    fn moduli_for_small_orders() {
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // x^3+x^2+1 precedes x^3+x+1 when c0 is compared first, then c1.
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn index_round_trip() {
        let f = FiniteField::new(3, 2).unwrap();
        for (i, e) in f.elements().enumerate() {
            assert_eq!(f.index_of(&e).unwrap(), i);
        }
        assert_eq!(f.from_index(1), f.one());
    }
}
