//! Truncated power series and Newton lifting of smooth branches.
//!
//! A branch of a curve cut out by two equations in three variables is
//! parametrized by one coordinate once the Jacobian in the other two is
//! invertible; Newton iteration doubles the precision of the parametrization
//! each step.

use super::poly::MultiPoly;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};
use std::fmt;

/// Default truncation order: comfortably above the largest order of
/// vanishing a non-degenerate input can produce (8).
pub const DEFAULT_SERIES_ORDER: usize = 16;

/// A power series truncated at a fixed order: `coeffs[i]` is the
/// coefficient of t^i, and terms of degree >= prec are unknown.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl TruncSeries {
    pub fn zero(field: Field, prec: usize) -> TruncSeries {
        TruncSeries {
            field,
            coeffs: vec![Scalar::zero(field); prec],
        }
    }

    pub fn constant(value: Scalar, prec: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(value.field(), prec);
        if prec > 0 {
            s.coeffs[0] = value;
        }
        s
    }

    /// The series t.
    pub fn parameter(field: Field, prec: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(field, prec);
        if prec > 1 {
            s.coeffs[1] = Scalar::one(field);
        }
        s
    }

    pub fn from_coeffs(field: Field, coeffs: Vec<Scalar>) -> TruncSeries {
        TruncSeries { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of t^i (zero when i >= prec; the truncated tail is the
    /// caller's responsibility).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// True when every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Truncate or zero-extend to the given precision.
    pub fn with_prec(&self, prec: usize) -> TruncSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(prec, Scalar::zero(self.field));
        TruncSeries {
            field: self.field,
            coeffs,
        }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let prec = self.prec().min(other.prec());
        let coeffs = (0..prec).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncSeries {
            field: self.field,
            coeffs,
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let prec = self.prec().min(other.prec());
        let coeffs = (0..prec).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        TruncSeries {
            field: self.field,
            coeffs,
        }
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> TruncSeries {
        TruncSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let prec = self.prec().min(other.prec());
        let mut coeffs = vec![Scalar::zero(self.field); prec];
        for (i, a) in self.coeffs.iter().enumerate().take(prec) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(prec - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        TruncSeries {
            field: self.field,
            coeffs,
        }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn invert(&self) -> Result<TruncSeries> {
        let prec = self.prec();
        if prec == 0 || self.coeffs[0].is_zero() {
            return Err(Error::Input(
                "series with zero constant term has no inverse".into(),
            ));
        }
        let a0_inv = self.coeffs[0].inv();
        let mut coeffs = vec![Scalar::zero(self.field); prec];
        coeffs[0] = a0_inv.clone();
        for n in 1..prec {
            let mut acc = Scalar::zero(self.field);
            for k in 1..=n {
                acc = &acc + &(&self.coeffs[k] * &coeffs[n - k]);
            }
            coeffs[n] = -&(&acc * &a0_inv);
        }
        Ok(TruncSeries {
            field: self.field,
            coeffs,
        })
    }

    pub fn pow(&self, mut e: u32) -> TruncSeries {
        let mut acc = TruncSeries::constant(Scalar::one(self.field), self.prec());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.prec())
    }
}

/// Evaluate a polynomial at series arguments (one series per variable).
pub fn eval_poly_at_series(poly: &MultiPoly, args: &[TruncSeries]) -> TruncSeries {
    assert_eq!(poly.nvars(), args.len(), "one series per variable");
    let prec = args.iter().map(|s| s.prec()).min().unwrap_or(0);
    let field = poly.field();
    // cache powers of each argument up to its maximum exponent
    let mut max_exp = vec![0u16; args.len()];
    for (e, _) in poly.terms() {
        for (v, &exp) in e.iter().enumerate().take(args.len()) {
            max_exp[v] = max_exp[v].max(exp);
        }
    }
    let one = TruncSeries::constant(Scalar::one(field), prec);
    let powers: Vec<Vec<TruncSeries>> = args
        .iter()
        .enumerate()
        .map(|(v, s)| {
            let mut p = vec![one.clone()];
            for k in 1..=max_exp[v] as usize {
                p.push(p[k - 1].mul(s));
            }
            p
        })
        .collect();
    let mut acc = TruncSeries::zero(field, prec);
    for (e, c) in poly.terms() {
        let mut term = TruncSeries::constant(c.clone(), prec);
        for (v, &exp) in e.iter().enumerate().take(args.len()) {
            if exp > 0 {
                term = term.mul(&powers[v][exp as usize]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Parametrize the smooth branch of `eqs = 0` through a base point by the
/// variable `param`.
///
/// `eqs` are two polynomials in three variables; the two non-parameter
/// variables (in increasing index order) are solved as series in `param`
/// whose constant terms are the base-point coordinates. Requires the 2x2
/// Jacobian in the unknowns to be invertible at the base point; otherwise
/// the branch is not smooth with this parameter choice.
pub fn series_solve_system(
    eqs: &[MultiPoly; 2],
    param: usize,
    base: &[Scalar; 2],
    order: usize,
) -> Result<[TruncSeries; 2]> {
    let field = eqs[0].field();
    if eqs[1].field() != field || base.iter().any(|b| b.field() != field) {
        return Err(Error::MixedFields);
    }
    if eqs[0].nvars() != 3 || eqs[1].nvars() != 3 || param >= 3 {
        return Err(Error::Input(
            "expected two equations in three variables with a valid parameter index".into(),
        ));
    }
    if order == 0 {
        return Err(Error::Input("series order must be positive".into()));
    }
    let unknowns: Vec<usize> = (0..3).filter(|&v| v != param).collect();

    // scalar Jacobian in the unknowns at (t = 0, base)
    let at_base = |p: &MultiPoly| -> Scalar {
        let mut point = [Scalar::zero(field), Scalar::zero(field), Scalar::zero(field)];
        point[unknowns[0]] = base[0].clone();
        point[unknowns[1]] = base[1].clone();
        p.eval(&point)
    };
    let jac = [
        [eqs[0].partial(unknowns[0]), eqs[0].partial(unknowns[1])],
        [eqs[1].partial(unknowns[0]), eqs[1].partial(unknowns[1])],
    ];
    let j00 = at_base(&jac[0][0]);
    let j01 = at_base(&jac[0][1]);
    let j10 = at_base(&jac[1][0]);
    let j11 = at_base(&jac[1][1]);
    let det0 = &(&j00 * &j11) - &(&j01 * &j10);
    if det0.is_zero() {
        return Err(Error::BranchNotSmooth);
    }
    if !at_base(&eqs[0]).is_zero() || !at_base(&eqs[1]).is_zero() {
        return Err(Error::Input("base point does not satisfy the equations".into()));
    }

    let mut y = [
        TruncSeries::constant(base[0].clone(), 1),
        TruncSeries::constant(base[1].clone(), 1),
    ];
    let mut prec = 1;
    while prec < order {
        prec = (2 * prec).min(order);
        let t = TruncSeries::parameter(field, prec);
        let mut args = [t.clone(), t.clone(), t];
        args[unknowns[0]] = y[0].with_prec(prec);
        args[unknowns[1]] = y[1].with_prec(prec);

        let f0 = eval_poly_at_series(&eqs[0], &args);
        let f1 = eval_poly_at_series(&eqs[1], &args);
        let a = eval_poly_at_series(&jac[0][0], &args);
        let b = eval_poly_at_series(&jac[0][1], &args);
        let c = eval_poly_at_series(&jac[1][0], &args);
        let d = eval_poly_at_series(&jac[1][1], &args);
        // J^{-1} = adj(J) / det(J); det is a unit by the base-point check
        let det_inv = a.mul(&d).sub(&b.mul(&c)).invert()?;
        let delta0 = d.mul(&f0).sub(&b.mul(&f1)).mul(&det_inv);
        let delta1 = a.mul(&f1).sub(&c.mul(&f0)).mul(&det_inv);
        y[0] = args[unknowns[0]].sub(&delta0);
        y[1] = args[unknowns[1]].sub(&delta1);
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn c3(n: i64) -> MultiPoly {
        MultiPoly::constant(3, Scalar::from_i64(Field::Rational, n))
    }

    #[test]
    fn explicit_monomial_solution() {
        // y = t^2, z = t^3 with parameter t = variable 0
        let f = Field::Rational;
        let t = MultiPoly::var(3, 0, f);
        let y = MultiPoly::var(3, 1, f);
        let z = MultiPoly::var(3, 2, f);
        let eqs = [y.sub(&t.pow(2)), z.sub(&t.pow(3))];
        let base = [Scalar::zero(f), Scalar::zero(f)];
        let sol = series_solve_system(&eqs, 0, &base, 8).unwrap();
        assert_eq!(sol[0].valuation(), Some(2));
        assert!(sol[0].coeff(2).is_one());
        assert_eq!(sol[1].valuation(), Some(3));
        assert!(sol[1].coeff(3).is_one());
        assert!(eval_poly_at_series(&eqs[0], &[
            TruncSeries::parameter(f, 8),
            sol[0].clone(),
            sol[1].clone()
        ])
        .is_zero());
    }

    #[test]
    fn linear_split() {
        // y + z = t, y = z  =>  y = z = t/2
        let f = Field::Rational;
        let t = MultiPoly::var(3, 0, f);
        let y = MultiPoly::var(3, 1, f);
        let z = MultiPoly::var(3, 2, f);
        let eqs = [y.add(&z).sub(&t), y.sub(&z)];
        let base = [Scalar::zero(f), Scalar::zero(f)];
        let sol = series_solve_system(&eqs, 0, &base, 4).unwrap();
        assert_eq!(sol[0].coeff(1), q(1, 2));
        assert_eq!(sol[1].coeff(1), q(1, 2));
        assert!(sol[0].coeff(2).is_zero());
    }

    #[test]
    fn square_root_series() {
        // y^2 = 1 + t starting at y(0) = 1: the binomial series for sqrt(1+t)
        let f = Field::Rational;
        let t = MultiPoly::var(3, 0, f);
        let y = MultiPoly::var(3, 1, f);
        let z = MultiPoly::var(3, 2, f);
        let eqs = [y.mul(&y).sub(&c3(1)).sub(&t), z.clone()];
        let base = [Scalar::one(f), Scalar::zero(f)];
        let sol = series_solve_system(&eqs, 0, &base, 8).unwrap();
        let expect = [
            q(1, 1),
            q(1, 2),
            q(-1, 8),
            q(1, 16),
            q(-5, 128),
            q(7, 256),
            q(-21, 1024),
            q(33, 2048),
        ];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(&sol[0].coeff(i), e, "coefficient of t^{i}");
        }
    }

    #[test]
    fn singular_jacobian_rejected() {
        // y^2 = t has no smooth branch parametrized by t at the origin
        let f = Field::Rational;
        let t = MultiPoly::var(3, 0, f);
        let y = MultiPoly::var(3, 1, f);
        let z = MultiPoly::var(3, 2, f);
        let eqs = [y.mul(&y).sub(&t), z.clone()];
        let base = [Scalar::zero(f), Scalar::zero(f)];
        match series_solve_system(&eqs, 0, &base, 8) {
            Err(Error::BranchNotSmooth) => {}
            other => panic!("expected branch-not-smooth, got {other:?}"),
        }
    }

    #[test]
    fn inversion_round_trip() {
        let f = Field::Rational;
        let s = TruncSeries::from_coeffs(
            f,
            vec![q(1, 1), q(3, 1), q(-2, 1), q(0, 1), q(5, 7), q(1, 3)],
        );
        let inv = s.invert().unwrap();
        let prod = s.mul(&inv);
        assert!(prod.coeff(0).is_one());
        for i in 1..6 {
            assert!(prod.coeff(i).is_zero(), "coefficient of t^{i}");
        }
    }

    #[test]
    fn works_over_gf7() {
        // y = t/2 over GF(7): 1/2 = 4
        let f = Field::Fp(7);
        let t = MultiPoly::var(3, 0, f);
        let y = MultiPoly::var(3, 1, f);
        let z = MultiPoly::var(3, 2, f);
        let two = MultiPoly::constant(3, Scalar::from_i64(f, 2));
        let eqs = [two.mul(&y).sub(&t), z.clone()];
        let base = [Scalar::zero(f), Scalar::zero(f)];
        let sol = series_solve_system(&eqs, 0, &base, 4).unwrap();
        assert_eq!(sol[0].coeff(1), Scalar::from_i64(f, 4));
    }
}
