//! Base-field and tower arithmetic. All operations are methods on
//! [`FieldContext`] so that the modulus is never implicit.

use num_bigint::BigUint;

use super::{FieldContext, Fq2Element, FqElement};
use crate::error::{Error, Result};

impl FieldContext {
    /// Validates a raw bit value as an element of GF(q).
    pub fn fq(&self, bits: u64) -> Result<FqElement> {
        if bits < self.q() {
            Ok(FqElement(bits))
        } else {
            Err(Error::InvalidParams(format!(
                "{bits:#x} is not below q = {}",
                self.q()
            )))
        }
    }

    pub fn fq2(&self, c0: u64, c1: u64) -> Result<Fq2Element> {
        Ok(Fq2Element {
            c0: self.fq(c0)?,
            c1: self.fq(c1)?,
        })
    }

    /// Range-checks an element produced outside the context (e.g. parsed).
    pub fn check_fq2(&self, a: Fq2Element) -> Result<Fq2Element> {
        self.fq2(a.c0.0, a.c1.0)
    }

    pub fn fq2_from_index(&self, i: u64) -> Fq2Element {
        debug_assert!(i < self.q2());
        Fq2Element::from_index(i, self.t())
    }

    // ---- GF(q) ----

    pub fn fq_add(&self, a: FqElement, b: FqElement) -> FqElement {
        FqElement(a.0 ^ b.0)
    }

    /// Shift-and-reduce multiplication.
    pub fn fq_mul(&self, a: FqElement, b: FqElement) -> FqElement {
        let top = self.q();
        let (mut a, mut b, mut acc) = (a.0, b.0, 0u64);
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus();
            }
        }
        FqElement(acc)
    }

    pub fn fq_square(&self, a: FqElement) -> FqElement {
        self.fq_mul(a, a)
    }

    pub fn fq_pow(&self, a: FqElement, mut e: u64) -> FqElement {
        let (mut base, mut acc) = (a, FqElement::ONE);
        while e != 0 {
            if e & 1 == 1 {
                acc = self.fq_mul(acc, base);
            }
            base = self.fq_square(base);
            e >>= 1;
        }
        acc
    }

    /// Square-and-multiply over the bits of an arbitrary-size exponent.
    pub fn fq_pow_big(&self, a: FqElement, e: &BigUint) -> FqElement {
        let mut acc = FqElement::ONE;
        for i in (0..e.bits()).rev() {
            acc = self.fq_square(acc);
            if e.bit(i) {
                acc = self.fq_mul(acc, a);
            }
        }
        acc
    }

    /// Inverse via a^(q-2).
    pub fn fq_inv(&self, a: FqElement) -> Result<FqElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.fq_pow(a, self.q() - 2))
    }

    pub fn fq_div(&self, a: FqElement, b: FqElement) -> Result<FqElement> {
        Ok(self.fq_mul(a, self.fq_inv(b)?))
    }

    // ---- GF(q^2) ----

    pub fn fq2_add(&self, a: Fq2Element, b: Fq2Element) -> Fq2Element {
        Fq2Element {
            c0: FqElement(a.c0.0 ^ b.c0.0),
            c1: FqElement(a.c1.0 ^ b.c1.0),
        }
    }

    /// (a0 + a1 b)(b0 + b1 b) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0 + a1 b1) b,
    /// using three base multiplications.
    pub fn fq2_mul(&self, a: Fq2Element, b: Fq2Element) -> Fq2Element {
        let p0 = self.fq_mul(a.c0, b.c0);
        let p1 = self.fq_mul(a.c1, b.c1);
        let p2 = self.fq_mul(self.fq_add(a.c0, a.c1), self.fq_add(b.c0, b.c1));
        Fq2Element {
            c0: self.fq_add(p0, p1),
            c1: self.fq_add(p2, p0),
        }
    }

    pub fn fq2_square(&self, a: Fq2Element) -> Fq2Element {
        // Squaring is additive in characteristic 2: (a0 + a1 b)^2 = a0^2 + a1^2 (b + 1).
        let s0 = self.fq_square(a.c0);
        let s1 = self.fq_square(a.c1);
        Fq2Element {
            c0: self.fq_add(s0, s1),
            c1: s1,
        }
    }

    pub fn fq2_pow(&self, a: Fq2Element, mut e: u64) -> Fq2Element {
        let (mut base, mut acc) = (a, Fq2Element::ONE);
        while e != 0 {
            if e & 1 == 1 {
                acc = self.fq2_mul(acc, base);
            }
            base = self.fq2_square(base);
            e >>= 1;
        }
        acc
    }

    pub fn fq2_pow_big(&self, a: Fq2Element, e: &BigUint) -> Fq2Element {
        let mut acc = Fq2Element::ONE;
        for i in (0..e.bits()).rev() {
            acc = self.fq2_square(acc);
            if e.bit(i) {
                acc = self.fq2_mul(acc, a);
            }
        }
        acc
    }

    /// a^q. Fixes GF(q) and sends b to b + 1, so
    /// (c0 + c1 b)^q = (c0 + c1) + c1 b.
    pub fn frobenius(&self, a: Fq2Element) -> Fq2Element {
        Fq2Element {
            c0: self.fq_add(a.c0, a.c1),
            c1: a.c1,
        }
    }

    /// a^(q+1) = a * a^q, always in GF(q).
    pub fn norm(&self, a: Fq2Element) -> FqElement {
        let n = self.fq2_mul(a, self.frobenius(a));
        debug_assert!(n.is_base());
        n.c0
    }

    pub fn fq2_inv(&self, a: Fq2Element) -> Result<Fq2Element> {
        let n_inv = self.fq_inv(self.norm(a))?;
        let conj = self.frobenius(a);
        Ok(Fq2Element {
            c0: self.fq_mul(conj.c0, n_inv),
            c1: self.fq_mul(conj.c1, n_inv),
        })
    }

    pub fn fq2_div(&self, a: Fq2Element, b: Fq2Element) -> Result<Fq2Element> {
        Ok(self.fq2_mul(a, self.fq2_inv(b)?))
    }

    /// Membership in mu_(q+1) = { x : x^(q+1) = 1 }.
    pub fn is_on_unit_circle(&self, a: Fq2Element) -> bool {
        !a.is_zero() && self.norm(a) == FqElement::ONE
    }

    // ---- enumeration ----

    pub fn fq_elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.q()).map(FqElement)
    }

    /// All of GF(q^2) in ascending `(c1, c0)` order.
    pub fn fq2_elements(&self) -> impl Iterator<Item = Fq2Element> + '_ {
        (0..self.q2()).map(|i| self.fq2_from_index(i))
    }

    pub fn fq2_nonzero(&self) -> impl Iterator<Item = Fq2Element> + '_ {
        (1..self.q2()).map(|i| self.fq2_from_index(i))
    }

    /// The q+1 elements of mu_(q+1), by exhaustive filter over GF(q^2)*.
    pub fn enumerate_mu(&self) -> Vec<Fq2Element> {
        let order = self.mu_order();
        self.fq2_nonzero()
            .filter(|&x| self.fq2_pow(x, order) == Fq2Element::ONE)
            .collect()
    }
}
