//! Arithmetic in the finite field GF(p^d).
//!
//! Elements are polynomials over GF(p) of degree below `d`, reduced modulo
//! the lexicographically smallest monic irreducible polynomial of degree
//! `d`. Every element has a rank `sum c_i p^i` (constant term least
//! significant) which is also its vertex index in the Paley-type graphs, so
//! GF(9) enumerates as `0, 1, 2, x, x+1, x+2, 2x, 2x+1, 2x+2`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("field order must be at least 2, got {0}")]
    TooSmall(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} is too large for this implementation")]
    TooLarge(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    /// Coefficients over GF(p), constant term first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (deg, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{}x", c),
                (d, 1) => format!("x^{}", d),
                (d, c) => format!("{}x^{}", c, d),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    d: usize,
    q: usize,
    /// monic, constant term first, length d + 1
    modulus: Vec<u32>,
    squares: Vec<bool>,
}

const MAX_ORDER: u64 = 1 << 20;

fn smallest_prime_factor(n: u64) -> u64 {
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return f;
        }
        f += 1;
    }
    n
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * mc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn coeffs_of_rank(mut rank: usize, p: u32, len: usize) -> Vec<u32> {
    let mut c = vec![0u32; len];
    for slot in c.iter_mut() {
        *slot = (rank % p as usize) as u32;
        rank /= p as usize;
    }
    c
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    for deg in 1..=d / 2 {
        let count = (p as usize).pow(deg as u32);
        for rank in 0..count {
            let mut g = coeffs_of_rank(rank, p, deg);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    pub fn new(q: u64) -> Result<Field, FieldError> {
        if q < 2 {
            return Err(FieldError::TooSmall(q));
        }
        if q > MAX_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let p = smallest_prime_factor(q);
        let mut rest = q;
        let mut d = 0usize;
        while rest.is_multiple_of(p) {
            rest /= p;
            d += 1;
        }
        if rest != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        let p = p as u32;
        let modulus = if d == 1 {
            vec![0, 1]
        } else {
            (0..(p as usize).pow(d as u32))
                .map(|rank| {
                    let mut m = coeffs_of_rank(rank, p, d);
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let mut field = Field { p, d, q: q as usize, modulus, squares: Vec::new() };
        let mut squares = vec![false; field.q];
        for rank in 0..field.q {
            let e = field.element(rank);
            squares[field.rank(&field.mul(&e, &e))] = true;
        }
        field.squares = squares;
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Modulus coefficients, constant term first (monic, length `d + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, rank: usize) -> FieldElement {
        assert!(rank < self.q, "rank {} out of range for GF({})", rank, self.q);
        FieldElement { coeffs: coeffs_of_rank(rank, self.p, self.d) }
    }

    pub fn rank(&self, e: &FieldElement) -> usize {
        e.coeffs.iter().rev().fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    /// All elements in rank order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |r| self.element(r))
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element of GF(p) embedded in the field.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let p = self.p as i64;
        let mut coeffs = vec![0; self.d];
        coeffs[0] = v.rem_euclid(p) as u32;
        FieldElement { coeffs }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        let mut coeffs = poly_rem(&prod, &self.modulus, self.p);
        coeffs.resize(self.d, 0);
        FieldElement { coeffs }
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Whether `a = b * b` for some `b` (zero counts as a square).
    pub fn is_square(&self, a: &FieldElement) -> bool {
        self.squares[self.rank(a)]
    }

    pub fn is_square_rank(&self, rank: usize) -> bool {
        self.squares[rank]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field() {
        let f = Field::new(5).unwrap();
        assert_eq!((f.characteristic(), f.degree(), f.order()), (5, 1, 5));
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = Field::new(9).unwrap();
        assert_eq!((f.characteristic(), f.degree()), (3, 2));
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let x = f.element(3);
        assert_eq!(x.to_string(), "x");
        assert_eq!(f.mul(&x, &x), f.from_int(-1));
        assert_eq!(f.rank(&f.mul(&x, &x)), 2);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(Field::new(6).unwrap_err(), FieldError::NotPrimePower(6));
        assert_eq!(Field::new(1).unwrap_err(), FieldError::TooSmall(1));
        assert!(Field::new(12).is_err());
    }

    #[test]
    fn gf9_labels_in_rank_order() {
        let f = Field::new(9).unwrap();
        let labels: Vec<String> = f.elements().map(|e| e.to_string()).collect();
        assert_eq!(labels, ["0", "1", "2", "x", "x+1", "x+2", "2x", "2x+1", "2x+2"]);
    }

    #[test]
    fn squares_mod_5() {
        let f = Field::new(5).unwrap();
        let sq: Vec<usize> = (0..5).filter(|&r| f.is_square_rank(r)).collect();
        assert_eq!(sq, vec![0, 1, 4]);
        assert!(f.is_square(&f.element(4)));
        assert!(!f.is_square(&f.element(2)));
    }

    #[test]
    fn minus_one_is_square_when_q_is_1_mod_4() {
        for q in [5, 9, 13, 17, 25, 29, 37, 41, 49, 53] {
            let f = Field::new(q).unwrap();
            assert!(f.is_square(&f.from_int(-1)), "q = {}", q);
        }
        let f = Field::new(7).unwrap();
        assert!(!f.is_square(&f.from_int(-1)));
    }

    #[test]
    fn field_axioms_on_small_fields() {
        for q in [4, 8, 9, 25, 27] {
            let f = Field::new(q).unwrap();
            let elems: Vec<_> = f.elements().collect();
            for a in &elems {
                assert!(f.sub(a, a).is_zero());
                assert_eq!(&f.mul(a, &f.one()), a);
                if !a.is_zero() {
                    assert_eq!(f.pow(a, q - 1), f.one(), "Fermat in GF({})", q);
                }
                for b in &elems {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(&f.add(a, b), b), *a);
                }
            }
        }
    }

    #[test]
    fn square_set_matches_euler_criterion() {
        for q in [5u64, 9, 13, 25, 49, 53, 81] {
            let f = Field::new(q).unwrap();
            let mut nonzero_squares = 0;
            for a in f.elements() {
                let euler = f.pow(&a, (q - 1) / 2);
                let by_euler = a.is_zero() || euler == f.one();
                assert_eq!(f.is_square(&a), by_euler);
                if !a.is_zero() && f.is_square(&a) {
                    nonzero_squares += 1;
                }
            }
            assert_eq!(nonzero_squares, (q - 1) / 2);
        }
    }

    #[test]
    fn squares_form_a_subgroup() {
        let f = Field::new(25).unwrap();
        let elems: Vec<_> = f.elements().filter(|e| !e.is_zero()).collect();
        for a in &elems {
            for b in &elems {
                let prod = f.is_square(&f.mul(a, b));
                assert_eq!(prod, f.is_square(a) == f.is_square(b));
            }
        }
    }
}
