use std::sync::Arc;

use serde::Serialize;

use super::{AffinePoint, CurveError};
use crate::gf::{AdditiveOperator, AdditiveSolver, FieldContext, FieldElement};

/// Canonical form of the Hermitian curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Form {
    /// `y^q + y = x^(q+1)`
    Plus,
    /// `y^q - y + omega x^(q+1) = 0`
    Minus,
}

/// Affine-triangular map `(x, y) -> (lambda x + a, a^q lambda c x + lambda^(q+1) y + b)`
/// with `c = 1` (plus form) or `c = omega` (minus form).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub a: FieldElement,
    pub b: FieldElement,
    pub lambda: FieldElement,
    pub form: Form,
}

/// The Hermitian curve in one canonical form, together with the
/// stabilizer of its point at infinity.
#[derive(Clone, Debug)]
pub struct HermitianModel {
    pub field: Arc<FieldContext>,
    pub q: u64,
    pub h: u32,
    pub form: Form,
    /// Only meaningful for the minus form.
    pub omega: FieldElement,
}

impl HermitianModel {
    pub fn plus(field: Arc<FieldContext>, h: u32) -> Self {
        let q = (field.p() as u64).pow(h);
        HermitianModel {
            field,
            q,
            h,
            form: Form::Plus,
            omega: FieldElement::ONE,
        }
    }

    pub fn minus(field: Arc<FieldContext>, h: u32, omega: FieldElement) -> Self {
        let q = (field.p() as u64).pow(h);
        HermitianModel {
            field,
            q,
            h,
            form: Form::Minus,
            omega,
        }
    }

    /// The constant multiplying `a^q lambda x` in the y-component.
    fn twist(&self) -> FieldElement {
        match self.form {
            Form::Plus => FieldElement::ONE,
            Form::Minus => self.omega,
        }
    }

    pub fn equation_eval(&self, pt: AffinePoint) -> FieldElement {
        let f = &*self.field;
        let yq = f.pow(pt.y, self.q);
        let xq1 = f.pow(pt.x, self.q + 1);
        match self.form {
            Form::Plus => f.sub(f.add(yq, pt.y), xq1),
            Form::Minus => f.add(f.sub(yq, pt.y), f.mul(self.omega, xq1)),
        }
    }

    pub fn on_curve(&self, pt: AffinePoint) -> bool {
        self.equation_eval(pt).is_zero()
    }

    /// All affine points, sorted lexicographically. `q^3` of them.
    pub fn points(&self) -> Vec<AffinePoint> {
        use rayon::prelude::*;
        let f = &*self.field;
        let minus_one = f.neg(f.one());
        let (op, sign) = match self.form {
            Form::Plus => (AdditiveOperator::new(vec![(f.one(), self.h), (f.one(), 0)]), f.one()),
            Form::Minus => (
                AdditiveOperator::new(vec![(f.one(), self.h), (minus_one, 0)]),
                f.neg(self.omega),
            ),
        };
        let solver = AdditiveSolver::new(f, &op);
        let xs: Vec<FieldElement> = f.elements_lex().collect();
        xs.par_iter()
            .flat_map_iter(|&x| {
                let c = f.mul(sign, f.pow(x, self.q + 1));
                solver.solve(f, c).into_iter().map(move |y| AffinePoint::new(x, y))
            })
            .collect()
    }

    /// Validated automorphism; checks the norm condition on `(a, b)`.
    pub fn automorphism(&self, a: FieldElement, b: FieldElement, lambda: FieldElement) -> Result<Automorphism, CurveError> {
        let f = &*self.field;
        if lambda.is_zero() {
            return Err(CurveError::InvalidAutomorphism("lambda = 0".into()));
        }
        let bq = f.pow(b, self.q);
        let aq1 = f.pow(a, self.q + 1);
        let ok = match self.form {
            Form::Plus => f.add(bq, b) == aq1,
            Form::Minus => f.sub(bq, b) == f.neg(f.mul(self.omega, aq1)),
        };
        if !ok {
            return Err(CurveError::InvalidAutomorphism(format!(
                "(a, b) = ({}, {}) violates the norm condition",
                f.format(a),
                f.format(b)
            )));
        }
        Ok(Automorphism {
            a,
            b,
            lambda,
            form: self.form,
        })
    }

    pub fn identity(&self) -> Automorphism {
        Automorphism {
            a: FieldElement::ZERO,
            b: FieldElement::ZERO,
            lambda: FieldElement::ONE,
            form: self.form,
        }
    }

    pub(crate) fn apply_unchecked(&self, g: &Automorphism, pt: AffinePoint) -> AffinePoint {
        let f = &*self.field;
        let lx = f.mul(g.lambda, pt.x);
        let x = f.add(lx, g.a);
        let cross = f.mul(f.mul(f.pow(g.a, self.q), self.twist()), lx);
        let y = f.add(f.add(cross, f.mul(f.pow(g.lambda, self.q + 1), pt.y)), g.b);
        AffinePoint::new(x, y)
    }

    pub fn apply(&self, g: &Automorphism, pt: AffinePoint) -> Result<AffinePoint, CurveError> {
        if g.form != self.form {
            return Err(CurveError::FormMismatch);
        }
        if !self.on_curve(pt) {
            return Err(CurveError::NotOnCurve);
        }
        Ok(self.apply_unchecked(g, pt))
    }

    /// `outer ∘ inner` (apply `inner` first).
    pub fn compose(&self, outer: &Automorphism, inner: &Automorphism) -> Result<Automorphism, CurveError> {
        if outer.form != inner.form || outer.form != self.form {
            return Err(CurveError::FormMismatch);
        }
        let f = &*self.field;
        let a = f.add(outer.a, f.mul(outer.lambda, inner.a));
        let cross = f.mul(f.mul(self.twist(), outer.lambda), f.mul(f.pow(outer.a, self.q), inner.a));
        let b = f.add(f.add(outer.b, f.mul(f.pow(outer.lambda, self.q + 1), inner.b)), cross);
        Ok(Automorphism {
            a,
            b,
            lambda: f.mul(outer.lambda, inner.lambda),
            form: self.form,
        })
    }

    pub fn inverse(&self, g: &Automorphism) -> Automorphism {
        let f = &*self.field;
        let lambda = f.inv(g.lambda).expect("lambda is nonzero");
        let a = f.neg(f.mul(g.a, lambda));
        // 0 = b + lambda^(q+1) b' + c lambda a^q a'
        let cross = f.mul(f.mul(self.twist(), g.lambda), f.mul(f.pow(g.a, self.q), a));
        let num = f.neg(f.add(g.b, cross));
        let b = f.mul(num, f.pow(lambda, self.q + 1));
        Automorphism {
            a,
            b,
            lambda,
            form: g.form,
        }
    }

    /// `g^i` by square-and-multiply over [`compose`](Self::compose).
    pub fn power(&self, g: &Automorphism, mut i: u64) -> Result<Automorphism, CurveError> {
        let mut acc = self.identity();
        let mut base = *g;
        while i > 0 {
            if i & 1 == 1 {
                acc = self.compose(&acc, &base)?;
            }
            base = self.compose(&base, &base)?;
            i >>= 1;
        }
        Ok(acc)
    }

    /// Closed form of `g^i` for `lambda = 1`:
    /// `(i a, c a^(q+1) (i^2 - i)/2 + i b, 1)`.
    pub fn closed_form_power(&self, g: &Automorphism, i: u64) -> Result<Automorphism, CurveError> {
        if g.lambda != FieldElement::ONE {
            return Err(CurveError::InvalidAutomorphism("closed form needs lambda = 1".into()));
        }
        let f = &*self.field;
        let p = f.p() as u64;
        let tri = ((i % (2 * p)) * ((i + 2 * p - 1) % (2 * p)) / 2) as i64;
        let a = f.scale(g.a, i as i64);
        let b = f.add(
            f.scale(f.mul(self.twist(), f.pow(g.a, self.q + 1)), tri),
            f.scale(g.b, i as i64),
        );
        Ok(Automorphism {
            a,
            b,
            lambda: FieldElement::ONE,
            form: g.form,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn minus_model(p: u32, h: u32) -> HermitianModel {
        let f = Arc::new(make_field(p, 2 * h as usize).unwrap());
        let w = f.find_omega().unwrap();
        HermitianModel::minus(f, h, w)
    }

    #[test]
    fn hermitian_point_counts() {
        let f = Arc::new(make_field(5, 2).unwrap());
        assert_eq!(HermitianModel::plus(f.clone(), 1).points().len(), 125);
        let m = minus_model(7, 1);
        let pts = m.points();
        assert_eq!(pts.len(), 343);
        assert!(pts.iter().all(|&pt| m.on_curve(pt)));
    }

    #[test]
    fn translation_moves_origin() {
        let m = minus_model(7, 1);
        let f = &*m.field;
        let b = f.one();
        let g = m.automorphism(f.zero(), b, f.one()).unwrap();
        let o = AffinePoint::new(f.zero(), f.zero());
        assert_eq!(m.apply(&g, o).unwrap(), AffinePoint::new(f.zero(), b));
        let id = m.identity();
        for pt in m.points().into_iter().take(50) {
            assert_eq!(m.apply(&id, pt).unwrap(), pt);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let m = minus_model(7, 1);
        let f = &*m.field;
        assert!(m.automorphism(f.zero(), f.zero(), f.zero()).is_err());
        // b = omega does not satisfy b^q - b = 0
        assert!(m.automorphism(f.zero(), m.omega, f.one()).is_err());
        let off = AffinePoint::new(f.one(), f.zero());
        assert_eq!(m.apply(&m.identity(), off), Err(CurveError::NotOnCurve));
        let plus = HermitianModel::plus(m.field.clone(), 1);
        assert_eq!(m.compose(&m.identity(), &plus.identity()), Err(CurveError::FormMismatch));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let m = minus_model(5, 1);
        let f = &*m.field;
        let g = m.automorphism(f.one(), f.mul(m.omega, f.inv(f.from_int(2)).unwrap()), f.from_int(2)).unwrap();
        assert_eq!(m.compose(&g, &m.inverse(&g)).unwrap(), m.identity());
        assert_eq!(m.compose(&m.inverse(&g), &g).unwrap(), m.identity());
    }
}
