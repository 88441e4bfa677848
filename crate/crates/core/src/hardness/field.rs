//! Table-driven finite fields `GF(p^e)` of order at most 49.
//!
//! Element `x` stands for the polynomial whose coefficients are the base-`p`
//! digits of `x`; multiplication is modulo the first monic irreducible
//! polynomial of degree `e` in digit order.

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 49;

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    e: usize,
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// Prime powers in `2..=MAX_ORDER`, ascending.
pub fn supported_orders() -> Vec<usize> {
    (2..=MAX_ORDER)
        .filter(|&q| prime_power(q).is_some())
        .collect()
}

fn digits(x: usize, p: usize, e: usize) -> Vec<usize> {
    let mut d = vec![0; e];
    let mut x = x;
    for c in d.iter_mut() {
        *c = x % p;
        x /= p;
    }
    d
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic `f`, coefficients low to high.
fn poly_rem(a: &[usize], f: &[usize], p: usize) -> Vec<usize> {
    let deg = f.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg {
        let lead = r.pop().expect("nonempty");
        let shift = r.len() - deg;
        for (i, &c) in f[..deg].iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - c) * lead) % p;
        }
    }
    r.resize(deg, 0);
    r
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Monic polynomial of degree `e` with no monic factor of degree `1..=e/2`.
fn irreducible(p: usize, e: usize) -> Vec<usize> {
    let monic = |deg: usize, low: usize| {
        let mut f = digits(low, p, deg);
        f.push(1);
        f
    };
    (0..p.pow(e as u32))
        .map(|low| monic(e, low))
        .find(|f| {
            (1..=e / 2).all(|deg| {
                (0..p.pow(deg as u32))
                    .all(|low| poly_rem(f, &monic(deg, low), p).iter().any(|&c| c != 0))
            })
        })
        .expect("irreducible polynomials exist in every degree")
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::precondition(format!("{q} is not a prime power")))?;
        if q > MAX_ORDER {
            return Err(Error::size("field order", q, MAX_ORDER));
        }
        let f = irreducible(p, e);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum, p);
                mul[a * q + b] = undigits(&poly_rem(&poly_mul(&da, &db, p), &f, p), p);
            }
        }
        Ok(FiniteField { p, e, q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers_up_to_49() {
        assert_eq!(
            supported_orders(),
            vec![
                2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49
            ]
        );
        assert!(FiniteField::new(6).is_err());
        assert!(matches!(FiniteField::new(53), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn field_axioms_hold_for_every_supported_order() {
        for q in supported_orders() {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                        assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
