//! Arithmetic in F_p and its extensions F_{p^k}.
//!
//! An element is stored as a packed integer: the coefficient vector
//! `(c0, c1, ..., c_{k-1})` read as base-p digits with `c0` least
//! significant. The [`FieldContext`] owns the modulus and, for fields of
//! moderate size, discrete log/antilog tables built from the least
//! primitive element. Contexts are immutable and `Sync`.

mod additive;
pub(crate) mod poly;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use additive::{AdditiveOperator, AdditiveSolver};

/// Fields up to this many elements get log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 22;
/// Hard cap so packed elements fit comfortably in a `u32`.
const MAX_ORDER: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{k} exceeds the supported size")]
    TooLarge { p: u32, k: usize },
    #[error("zero has no inverse")]
    InverseOfZero,
    #[error("element does not belong to this field context")]
    ContextMismatch,
    #[error("malformed element: {0}")]
    InvalidElement(String),
    #[error("characteristic {0} is not supported here")]
    UnsupportedCharacteristic(u32),
    #[error("extension degree {0} is odd, expected F_(q^2) with k = 2h")]
    OddDegree(usize),
    #[error("operation {0:?} expects {1} operand(s)")]
    Arity(ArithOp, usize),
}

/// An element of a finite field, meaningful only together with its context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Packed base-p index of the element.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The checked arithmetic entry points of [`FieldContext::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
    /// Exponent is passed separately.
    Pow(u64),
}

/// Serialized description of a field: `{"p":..,"k":..,"modulus":[..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextDescriptor {
    pub p: u32,
    pub k: usize,
    pub modulus: Vec<u32>,
}

struct LogTables {
    /// exp[i] = g^i for 0 <= i < 2(N-1), doubled to skip a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FieldContext {
    p: u32,
    k: usize,
    /// Monic, constant term first, length k + 1.
    modulus: Vec<u32>,
    order: u32,
    pow_p: Vec<u32>,
    primitive: FieldElement,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds F_{p^k} with the lexicographically least monic irreducible
/// modulus (coefficients compared from the constant term upward).
pub fn make_field(p: u32, k: usize) -> Result<FieldContext, GfError> {
    if !is_prime(p as u64) {
        return Err(GfError::NotPrime(p as u64));
    }
    if k == 0 {
        return Err(GfError::ZeroDegree);
    }
    let order = (p as u64)
        .checked_pow(k as u32)
        .filter(|&o| o <= MAX_ORDER)
        .ok_or(GfError::TooLarge { p, k })?;
    let modulus = least_irreducible(p, k);
    FieldContext::with_modulus(p, k, modulus, order as u32)
}

fn least_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = (p as u64).pow(k as u32);
    for n in 0..count {
        // c0 is the most significant digit of n
        let mut coeffs = vec![0u32; k + 1];
        let mut rest = n;
        for i in (0..k).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[k] = 1;
        if poly::is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FieldContext {
    /// Context over a caller-supplied modulus, checked for irreducibility.
    pub fn from_modulus(p: u32, modulus: Vec<u32>) -> Result<Self, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p as u64));
        }
        if modulus.len() < 2 || modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
            return Err(GfError::InvalidElement(format!("modulus {modulus:?}")));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(GfError::InvalidElement(format!("reducible modulus {modulus:?}")));
        }
        let k = modulus.len() - 1;
        let order = (p as u64)
            .checked_pow(k as u32)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(GfError::TooLarge { p, k })?;
        Self::with_modulus(p, k, modulus, order as u32)
    }

    fn with_modulus(p: u32, k: usize, modulus: Vec<u32>, order: u32) -> Result<Self, GfError> {
        let pow_p = (0..=k).map(|i| (p as u64).pow(i as u32) as u32).collect();
        let mut ctx = FieldContext {
            p,
            k,
            modulus,
            order,
            pow_p,
            primitive: FieldElement::ONE,
            tables: None,
        };
        ctx.primitive = ctx.find_least_primitive();
        if (order as u64) <= TABLE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    fn find_least_primitive(&self) -> FieldElement {
        let group = self.order as u64 - 1;
        if group == 1 {
            return FieldElement::ONE;
        }
        let factors = prime_factors(group);
        self.elements_lex()
            .filter(|e| !e.is_zero())
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, group / r) != FieldElement::ONE))
            .expect("multiplicative group is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let n = self.order as usize - 1;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; self.order as usize];
        let mut cur = FieldElement::ONE;
        for i in 0..n {
            exp[i] = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, self.primitive);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        LogTables { exp, log }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The least primitive element in lexicographic coefficient order.
    pub fn primitive_element(&self) -> FieldElement {
        self.primitive
    }

    pub fn descriptor(&self) -> ContextDescriptor {
        ContextDescriptor {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn contains(&self, e: FieldElement) -> bool {
        e.0 < self.order
    }

    fn check(&self, e: FieldElement) -> Result<FieldElement, GfError> {
        if self.contains(e) {
            Ok(e)
        } else {
            Err(GfError::ContextMismatch)
        }
    }

    /// Element with the given coefficient vector (length k, entries < p).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        if coeffs.len() != self.k {
            return Err(GfError::InvalidElement(format!(
                "expected {} coefficients, got {}",
                self.k,
                coeffs.len()
            )));
        }
        let mut idx = 0u32;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(GfError::InvalidElement(format!("coefficient {c} not below {}", self.p)));
            }
            idx += c * self.pow_p[i];
        }
        Ok(FieldElement(idx))
    }

    pub fn from_index(&self, index: u32) -> Result<FieldElement, GfError> {
        self.check(FieldElement(index))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn coeffs(&self, e: FieldElement) -> Vec<u32> {
        let mut rest = e.0;
        (0..self.k)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    /// Sort key realizing lexicographic order on `(c0, c1, ..)`.
    pub fn lex_key(&self, e: FieldElement) -> u32 {
        let mut rest = e.0;
        let mut key = 0u32;
        for _ in 0..self.k {
            key = key * self.p + rest % self.p;
            rest /= self.p;
        }
        key
    }

    pub fn lex_cmp(&self, a: FieldElement, b: FieldElement) -> Ordering {
        self.lex_key(a).cmp(&self.lex_key(b))
    }

    /// All elements in packed-index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(FieldElement)
    }

    /// All elements in lexicographic coefficient order.
    pub fn elements_lex(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |key| {
            // invert lex_key: the key's base-p digits are (c_{k-1}, .., c0) low first
            let mut rest = key;
            let mut idx = 0u32;
            for i in (0..self.k).rev() {
                idx += (rest % self.p) * self.pow_p[i];
                rest /= self.p;
            }
            FieldElement(idx)
        })
    }

    /// Text form `c0,c1,...,c{k-1}`.
    pub fn format(&self, e: FieldElement) -> String {
        self.coeffs(e).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse(&self, text: &str) -> Result<FieldElement, GfError> {
        let coeffs = text
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| GfError::InvalidElement(text.to_string()))?;
        self.element(&coeffs)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        for i in 0..self.k {
            let s = (x % self.p + y % self.p) % self.p;
            out += s * self.pow_p[i];
            x /= self.p;
            y /= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.k == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let mut x = a.0;
        let mut out = 0u32;
        for i in 0..self.k {
            let c = x % self.p;
            out += ((self.p - c) % self.p) * self.pow_p[i];
            x /= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                FieldElement(t.exp[i])
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Multiplication by an integer (repeated addition in the prime field).
    pub fn scale(&self, a: FieldElement, n: i64) -> FieldElement {
        self.mul(a, self.from_int(n))
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly::mul_mod(&self.coeffs(a), &self.coeffs(b), &self.modulus, self.p);
        let mut idx = 0u32;
        for (i, &c) in prod.iter().enumerate() {
            idx += c * self.pow_p[i];
        }
        FieldElement(idx)
    }

    fn pow_slow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = FieldElement::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }

    /// Square-and-multiply; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = self.order as u64 - 1;
                let l = t.log[a.0 as usize] as u64;
                let idx = (l as u128 * (e % n) as u128 % n as u128) as usize;
                FieldElement(t.exp[idx])
            }
            None => self.pow_slow(a, e),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.is_zero() {
            return Err(GfError::InverseOfZero);
        }
        Ok(self.pow(a, self.order as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut n = self.order as u64 - 1;
        for r in prime_factors(n) {
            while n.is_multiple_of(r) && self.pow(a, n / r) == FieldElement::ONE {
                n /= r;
            }
        }
        Some(n)
    }

    /// Checked arithmetic over explicit operands.
    pub fn arith(&self, op: ArithOp, operands: &[FieldElement]) -> Result<FieldElement, GfError> {
        for &e in operands {
            self.check(e)?;
        }
        let arity = match op {
            ArithOp::Add | ArithOp::Sub | ArithOp::Mul => 2,
            ArithOp::Neg | ArithOp::Inv | ArithOp::Pow(_) => 1,
        };
        if operands.len() != arity {
            return Err(GfError::Arity(op, arity));
        }
        let a = operands[0];
        Ok(match op {
            ArithOp::Add => self.add(a, operands[1]),
            ArithOp::Sub => self.sub(a, operands[1]),
            ArithOp::Mul => self.mul(a, operands[1]),
            ArithOp::Neg => self.neg(a),
            ArithOp::Inv => self.inv(a)?,
            ArithOp::Pow(e) => self.pow(a, e),
        })
    }

    /// `e^(p^i)`.
    pub fn frobenius(&self, e: FieldElement, i: u32) -> FieldElement {
        let i = i as usize % self.k;
        if i == 0 {
            return e;
        }
        self.pow(e, self.pow_p[i] as u64)
    }

    /// `sum_{i=0}^{m-1} e^(p^i)`; with `m = k` this is the absolute trace.
    pub fn trace(&self, e: FieldElement, m: u32) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut term = e;
        for _ in 0..m {
            acc = self.add(acc, term);
            term = self.frobenius(term, 1);
        }
        acc
    }

    /// Absolute trace to the prime field.
    pub fn trace_to_prime(&self, e: FieldElement) -> FieldElement {
        self.trace(e, self.k as u32)
    }

    /// Whether `e` lies in the subfield of order `p^m` (`m | k`).
    pub fn in_subfield(&self, e: FieldElement, m: u32) -> bool {
        self.frobenius(e, m) == e
    }

    /// `omega = g^((q+1)/2)` for the least primitive `g` of F_{q^2}; satisfies
    /// `omega^(q-1) = -1`.
    pub fn find_omega(&self) -> Result<FieldElement, GfError> {
        if self.p == 2 {
            return Err(GfError::UnsupportedCharacteristic(2));
        }
        if !self.k.is_multiple_of(2) {
            return Err(GfError::OddDegree(self.k));
        }
        let q = self.pow_p[self.k / 2] as u64;
        let omega = self.pow(self.primitive, q.div_ceil(2));
        assert_eq!(
            self.pow(omega, q - 1),
            self.neg(FieldElement::ONE),
            "omega^(q-1) must be -1"
        );
        Ok(omega)
    }

    /// All solutions of `L(y) = c`, sorted lexicographically.
    pub fn additive_solve(&self, op: &AdditiveOperator, c: FieldElement) -> Vec<FieldElement> {
        AdditiveSolver::new(self, op).solve(self, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_uses_modulus_x() {
        let f = make_field(7, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 7);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(6, 2).unwrap_err(), GfError::NotPrime(6));
        assert_eq!(make_field(7, 0).unwrap_err(), GfError::ZeroDegree);
        assert!(matches!(make_field(7, 40), Err(GfError::TooLarge { .. })));
    }

    #[test]
    fn inverse_in_f7() {
        let f = make_field(7, 1).unwrap();
        assert_eq!(f.inv(f.from_int(3)).unwrap(), f.from_int(5));
        assert_eq!(f.inv(f.one()).unwrap(), f.one());
        assert_eq!(f.inv(f.zero()), Err(GfError::InverseOfZero));
    }

    #[test]
    fn arith_checks_operands() {
        let f = make_field(5, 2).unwrap();
        let bogus = FieldElement(1000);
        assert_eq!(f.arith(ArithOp::Add, &[f.one(), bogus]), Err(GfError::ContextMismatch));
        assert_eq!(f.arith(ArithOp::Inv, &[f.zero()]), Err(GfError::InverseOfZero));
        assert!(matches!(f.arith(ArithOp::Neg, &[f.one(), f.one()]), Err(GfError::Arity(..))));
        let two = f.from_int(2);
        assert_eq!(f.arith(ArithOp::Pow(3), &[two]).unwrap(), f.from_int(3));
    }

    #[test]
    fn lagrange_in_f49() {
        let f = make_field(7, 2).unwrap();
        for e in f.elements().filter(|e| !e.is_zero()) {
            assert_eq!(f.pow(e, 48), f.one());
        }
    }

    #[test]
    fn text_form_round_trip() {
        let f = make_field(5, 3).unwrap();
        let e = f.element(&[4, 0, 2]).unwrap();
        assert_eq!(f.format(e), "4,0,2");
        assert_eq!(f.parse("4,0,2").unwrap(), e);
        assert!(f.parse("4,0").is_err());
        assert!(f.parse("5,0,0").is_err());
    }

    #[test]
    fn lex_order_compares_constant_term_first() {
        let f = make_field(3, 2).unwrap();
        let a = f.element(&[0, 2]).unwrap();
        let b = f.element(&[1, 0]).unwrap();
        assert_eq!(f.lex_cmp(a, b), Ordering::Less);
        let lex: Vec<_> = f.elements_lex().map(|e| f.coeffs(e)).collect();
        assert_eq!(lex[0], vec![0, 0]);
        assert_eq!(lex[1], vec![0, 1]);
        assert_eq!(lex[3], vec![1, 0]);
    }

    #[test]
    fn trace_zero_kernel_in_f25() {
        let f = make_field(5, 2).unwrap();
        let zeros = f.elements().filter(|&e| f.trace(e, 2).is_zero()).count();
        assert_eq!(zeros, 5);
        for e in f.elements() {
            assert!(f.in_subfield(f.trace_to_prime(e), 1));
            assert_eq!(f.trace(e, 1), e);
        }
        assert!(f.trace_to_prime(f.zero()).is_zero());
    }

    #[test]
    fn omega_conditions() {
        for (p, h) in [(5u32, 1usize), (7, 2), (11, 1), (5, 3)] {
            let f = make_field(p, 2 * h).unwrap();
            let q = (p as u64).pow(h as u32);
            let w = f.find_omega().unwrap();
            assert_eq!(f.pow(w, q - 1), f.neg(f.one()));
            assert_eq!(f.pow(w, 2 * (q - 1)), f.one());
            assert_ne!(f.pow(w, q - 1), f.one());
            assert_eq!(f.find_omega().unwrap(), w);
        }
        assert_eq!(make_field(5, 3).unwrap().find_omega(), Err(GfError::OddDegree(3)));
        assert_eq!(
            make_field(2, 2).unwrap().find_omega(),
            Err(GfError::UnsupportedCharacteristic(2))
        );
    }

    #[test]
    fn table_free_path_agrees_with_tables() {
        let f = make_field(7, 2).unwrap();
        for a in f.elements() {
            for b in f.elements().step_by(5) {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
            }
            assert_eq!(f.pow(a, 10), f.pow_slow(a, 10));
        }
    }

    #[test]
    fn multiplicative_order_of_primitive() {
        let f = make_field(5, 2).unwrap();
        assert_eq!(f.multiplicative_order(f.primitive_element()), Some(24));
        assert_eq!(f.multiplicative_order(f.one()), Some(1));
        assert_eq!(f.multiplicative_order(f.neg(f.one())), Some(2));
    }
}
