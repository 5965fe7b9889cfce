//! Rational solutions of zero-dimensional polynomial systems by lex
//! elimination: factor the eliminant in the last variable, substitute each
//! rational root, recurse on the smaller system.
//!
//! A solve is `complete` when every eliminant encountered split into linear
//! factors, so the rational points found are all points over the closure.

use crate::error::{Error, Result};
use crate::exact::factor::factor_univariate;
use crate::exact::grobner::groebner_basis;
use crate::exact::poly::{MonomialOrder, MultiPoly};
use crate::exact::scalar::Scalar;

/// Solutions of an affine system, with a completeness certificate.
#[derive(Debug)]
pub(crate) struct AffineSolutions {
    pub points: Vec<Vec<Scalar>>,
    pub complete: bool,
}

/// All rational solutions of a zero-dimensional affine system.
///
/// Returns `Error::BaseLocusNotFinite` when the system has positive
/// dimension (callers rename the condition to fit their domain).
pub(crate) fn solve_zero_dim(gens: &[MultiPoly]) -> Result<AffineSolutions> {
    if gens.is_empty() {
        return Err(Error::Input("empty polynomial system".into()));
    }
    let nvars = gens[0].nvars();
    let mut complete = true;
    let points = solve_rec(gens, nvars, &mut complete)?;
    Ok(AffineSolutions { points, complete })
}

fn solve_rec(gens: &[MultiPoly], n: usize, complete: &mut bool) -> Result<Vec<Vec<Scalar>>> {
    debug_assert!(n >= 1);
    let basis = groebner_basis(gens, MonomialOrder::Lex)?;
    if basis.is_empty() {
        // the zero ideal: every point of affine n-space is a solution
        return Err(Error::BaseLocusNotFinite);
    }
    if basis.iter().any(|g| g.total_degree() == Some(0)) {
        return Ok(Vec::new()); // unit ideal, no solutions
    }
    // under lex with variable 0 largest, a zero-dimensional ideal has a
    // univariate element in the smallest variable
    let last = n - 1;
    let Some(elim) = basis.iter().find(|g| g.used_vars() == [last]) else {
        return Err(Error::BaseLocusNotFinite);
    };
    let factors = factor_univariate(elim)?;
    let mut out = Vec::new();
    for (f, _) in &factors.factors {
        if f.degree_in(last) != 1 {
            *complete = false;
            continue;
        }
        // monic linear factor x + c has root -c
        let root = -&f.coeff(&[0u16; crate::exact::poly::MAX_VARS]);
        if n == 1 {
            out.push(vec![root]);
            continue;
        }
        let value = MultiPoly::constant(n, root.clone());
        let sliced: Vec<MultiPoly> = basis
            .iter()
            .map(|g| g.substitute(last, &value).remove_var(last))
            .collect::<Result<_>>()?;
        for mut point in solve_rec(&sliced, last, complete)? {
            point.push(root.clone());
            out.push(point);
        }
    }
    Ok(out)
}

/// All rational points of a zero-dimensional projective variety, via the
/// standard disjoint affine charts (leading coordinates zero, pivot 1).
///
/// Points come back as full normalized coordinate vectors together with the
/// combined completeness flag.
pub(crate) fn projective_rational_zeros(
    gens: &[MultiPoly],
) -> Result<(Vec<Vec<Scalar>>, bool)> {
    if gens.is_empty() {
        return Err(Error::Input("empty polynomial system".into()));
    }
    let n = gens[0].nvars();
    let field = gens[0].field();
    let one = MultiPoly::constant(n, Scalar::one(field));
    let zero = MultiPoly::constant(n, Scalar::zero(field));
    let mut points = Vec::new();
    let mut complete = true;
    for chart in 0..n {
        let mut eqs: Vec<MultiPoly> = gens.to_vec();
        for g in &mut eqs {
            for v in 0..chart {
                *g = g.substitute(v, &zero);
            }
            *g = g.substitute(chart, &one);
        }
        // drop the fixed variables (highest index first keeps indices valid)
        for g in &mut eqs {
            for v in (0..=chart).rev() {
                *g = g.remove_var(v)?;
            }
        }
        let rest = n - chart - 1;
        if rest == 0 {
            if eqs.iter().all(|g| g.is_zero()) {
                let mut coords = vec![Scalar::zero(field); chart];
                coords.push(Scalar::one(field));
                points.push(coords);
            }
            continue;
        }
        if eqs.iter().all(|g| g.is_zero()) {
            return Err(Error::BaseLocusNotFinite);
        }
        let sols = solve_zero_dim(&eqs)?;
        complete &= sols.complete;
        for sol in sols.points {
            let mut coords = vec![Scalar::zero(field); chart];
            coords.push(Scalar::one(field));
            coords.extend(sol);
            points.push(coords);
        }
    }
    Ok((points, complete))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::MAX_VARS;
    use crate::exact::scalar::Field;

    fn p(src: &str, field: Field) -> MultiPoly {
        crate::parse::parse_net_polynomial(src, field).unwrap()
    }

    fn as_i64(points: &[Vec<Scalar>]) -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = points
            .iter()
            .map(|pt| pt.iter().map(|c| c.to_string()).collect())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 = 2, x = y has the two rational points (1,1), (-1,-1)
        let f = Field::Rational;
        let two = MultiPoly::constant(2, Scalar::from_i64(f, 2));
        let x = MultiPoly::var(2, 0, f);
        let y = MultiPoly::var(2, 1, f);
        let circle = x.mul(&x).add(&y.mul(&y)).sub(&two);
        let line = x.sub(&y);
        let sols = solve_zero_dim(&[circle, line]).unwrap();
        assert!(sols.complete);
        assert_eq!(as_i64(&sols.points), vec![vec!["-1", "-1"], vec!["1", "1"]]);
    }

    #[test]
    fn irrational_points_flagged() {
        // x^2 = 2 has no rational roots: empty but incomplete
        let f = Field::Rational;
        let two = MultiPoly::constant(1, Scalar::from_i64(f, 2));
        let x = MultiPoly::var(1, 0, f);
        let sols = solve_zero_dim(&[x.mul(&x).sub(&two)]).unwrap();
        assert!(!sols.complete);
        assert!(sols.points.is_empty());
    }

    #[test]
    fn positive_dimension_rejected() {
        // a single curve in the plane
        let f = Field::Rational;
        let x = MultiPoly::var(2, 0, f);
        let y = MultiPoly::var(2, 1, f);
        assert_eq!(
            solve_zero_dim(&[x.mul(&y)]).unwrap_err(),
            Error::BaseLocusNotFinite
        );
    }

    #[test]
    fn inconsistent_system_is_empty() {
        let f = Field::Rational;
        let x = MultiPoly::var(1, 0, f);
        let one = MultiPoly::constant(1, Scalar::one(f));
        let sols = solve_zero_dim(&[x.clone(), x.add(&one)]).unwrap();
        assert!(sols.points.is_empty());
        assert!(sols.complete);
    }

    #[test]
    fn projective_charts() {
        // three quadrics meeting in the four coordinate points of P^3
        let f = Field::Rational;
        let gens = [p("X*Y", f), p("Z*W", f), p("(X+Y)*(Z+W)", f)];
        let (pts, complete) = projective_rational_zeros(&gens).unwrap();
        assert!(complete);
        assert_eq!(pts.len(), 4);
        for pt in &pts {
            let nonzero: Vec<usize> = (0..4).filter(|&i| !pt[i].is_zero()).collect();
            assert_eq!(nonzero.len(), 1);
        }
    }

    #[test]
    fn projective_positive_dimension() {
        let f = Field::Rational;
        let gens = [p("X*Y", f), p("X*Z", f), p("X*W", f)];
        assert_eq!(
            projective_rational_zeros(&gens).unwrap_err(),
            Error::BaseLocusNotFinite
        );
    }

    #[test]
    fn works_over_gf5() {
        // x^2 + 1 factors as (x+2)(x+3) over GF(5)
        let f = Field::Fp(5);
        let x = MultiPoly::var(1, 0, f);
        let one = MultiPoly::constant(1, Scalar::one(f));
        let sols = solve_zero_dim(&[x.mul(&x).add(&one)]).unwrap();
        assert!(sols.complete);
        assert_eq!(sols.points.len(), 2);
        let _ = MAX_VARS;
    }
}
