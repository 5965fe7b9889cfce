//! Discriminant quartics of nets and the ADE classification of plane-curve
//! singularities.
//!
//! The determinant of the symmetric matrix of a net member, viewed as a
//! polynomial in the net coordinates, is a plane quartic whose singular
//! points mark the members of rank at most 2. Each rational singular point
//! gets an ADE tag from its Milnor number, the corank of its Hessian, and
//! the root structure of the degree-3 part; the tags assemble into a root
//! system of rank at most 7.

use crate::baselocus::Completeness;
use crate::error::{Error, Result};
use crate::exact::factor::squarefree_decomposition;
use crate::exact::linalg::rank;
use crate::exact::poly::{Exponents, MultiPoly};
use crate::exact::scalar::{Field, Scalar};
use crate::exact::solve::projective_rational_zeros;
use crate::parse::parse_quartic_polynomial;
use crate::quadric::Net;
use crate::roots::{AdeClass, SimpleType, TypeList};

/// Truncation order for Milnor-number computations: exact whenever the true
/// value is below [`MILNOR_STABILITY_ORDER`].
const MILNOR_TRUNCATION_ORDER: u32 = 12;
/// The lower order used to confirm the truncated value has stabilized.
const MILNOR_STABILITY_ORDER: u32 = 10;

/// A nonzero homogeneous quartic in the three net coordinates, over a field
/// of characteristic other than 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneQuartic {
    poly: MultiPoly,
}

impl PlaneQuartic {
    pub fn from_poly(poly: &MultiPoly) -> Result<PlaneQuartic> {
        if poly.field().characteristic() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if poly.nvars() != 3 || !poly.is_homogeneous() || poly.total_degree() != Some(4) {
            return Err(Error::Input(
                "expected a homogeneous quartic in three variables".into(),
            ));
        }
        Ok(PlaneQuartic { poly: poly.clone() })
    }

    pub fn parse(src: &str, field: Field) -> Result<PlaneQuartic> {
        PlaneQuartic::from_poly(&parse_quartic_polynomial(src, field)?)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn field(&self) -> Field {
        self.poly.field()
    }

    /// Equality up to a nonzero scalar: the two forms cut the same curve.
    pub fn proportional_to(&self, other: &PlaneQuartic) -> bool {
        if self.field() != other.field() {
            return false;
        }
        let (e, lead) = self
            .poly
            .leading(crate::exact::poly::MonomialOrder::GrLex)
            .expect("quartic is nonzero");
        let other_lead = other.poly.coeff(&e);
        if other_lead.is_zero() {
            return false;
        }
        let ratio = &other_lead * &lead.inv();
        other.poly == self.poly.scale(&ratio)
    }
}

impl std::fmt::Display for PlaneQuartic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly.display(&crate::parse::QUARTIC_VARS))
    }
}

/// A point of the projective plane of net coordinates, normalized so the
/// first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanePoint {
    coords: [Scalar; 3],
}

impl PlanePoint {
    pub fn new(coords: [Scalar; 3]) -> Result<PlanePoint> {
        let field = coords[0].field();
        if coords.iter().any(|c| c.field() != field) {
            return Err(Error::MixedFields);
        }
        let Some(pivot) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(Error::Input("projective point must be nonzero".into()));
        };
        let inv = coords[pivot].inv();
        Ok(PlanePoint {
            coords: [
                &coords[0] * &inv,
                &coords[1] * &inv,
                &coords[2] * &inv,
            ],
        })
    }

    pub fn from_ints(field: Field, coords: [i64; 3]) -> Result<PlanePoint> {
        PlanePoint::new(coords.map(|c| Scalar::from_i64(field, c)))
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }
}

impl std::fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// Root structure of the degree-3 part of a corank-2 germ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicShape {
    ThreeDistinctRoots,
    DoubleRoot,
    TripleRoot,
}

/// Invariants of an isolated plane-curve singularity germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermClass {
    pub milnor: u32,
    pub corank: u32,
    pub cubic_shape: Option<CubicShape>,
    pub tag: SimpleType,
}

/// An ADE singular point of a plane quartic.
#[derive(Debug, Clone)]
pub struct SingularityRecord {
    point: PlanePoint,
    class: GermClass,
}

impl SingularityRecord {
    pub fn point(&self) -> &PlanePoint {
        &self.point
    }

    pub fn milnor(&self) -> u32 {
        self.class.milnor
    }

    pub fn corank(&self) -> u32 {
        self.class.corank
    }

    pub fn cubic_shape(&self) -> Option<CubicShape> {
        self.class.cubic_shape
    }

    pub fn tag(&self) -> SimpleType {
        self.class.tag
    }
}

/// The determinant of the symmetric matrix of the generic member, expanded
/// as a quartic in the net coordinates. Unnormalized: comparisons are made
/// up to a nonzero scalar.
pub fn discriminant_quartic(net: &Net) -> Result<PlaneQuartic> {
    let field = net.field();
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    let half = Scalar::from_i64(field, 2).inv();
    // entry (k, l) of the generic symmetric matrix, linear in the net
    // coordinates
    let mut entries = vec![vec![MultiPoly::zero(3, field); 4]; 4];
    for (t, form) in net.basis().iter().enumerate() {
        let lambda = MultiPoly::var(3, t, field);
        for (idx, &(k, l)) in crate::quadric::PAIRS.iter().enumerate() {
            let c = &form.coeffs()[idx];
            if c.is_zero() {
                continue;
            }
            let value = if k == l { c.clone() } else { c * &half };
            let term = lambda.scale(&value);
            entries[k][l] = entries[k][l].add(&term);
            if k != l {
                entries[l][k] = entries[l][k].add(&term);
            }
        }
    }
    let det = poly_det(&entries);
    if det.is_zero() {
        return Err(Error::NetOfSingularQuadrics);
    }
    PlaneQuartic::from_poly(&det)
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
fn poly_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let field = m[0][0].field();
    let nvars = m[0][0].nvars();
    let mut det = MultiPoly::zero(nvars, field);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&col| col != j)
                    .map(|col| m[i][col].clone())
                    .collect()
            })
            .collect();
        let cof = m[0][j].mul(&poly_det(&minor));
        det = if j % 2 == 0 { det.add(&cof) } else { det.sub(&cof) };
    }
    det
}

/// All rational singular points of the quartic, found as common zeros of the
/// three partial derivatives. `Certified` exactly when every eliminant in
/// the chart solves split into linear factors.
pub fn singular_points(q: &PlaneQuartic) -> Result<(Vec<PlanePoint>, Completeness)> {
    let partials: Vec<MultiPoly> = (0..3).map(|v| q.poly.partial(v)).collect();
    if partials.iter().all(|p| p.is_zero()) {
        return Err(Error::NonIsolatedSingularLocus);
    }
    let (raw, complete) = match projective_rational_zeros(&partials) {
        Ok(r) => r,
        Err(Error::BaseLocusNotFinite) => return Err(Error::NonIsolatedSingularLocus),
        Err(e) => return Err(e),
    };
    let mut points = raw
        .into_iter()
        .map(|c| {
            let coords: [Scalar; 3] = c.try_into().expect("three coordinates");
            PlanePoint::new(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(cmp_points);
    let completeness = if complete {
        Completeness::Certified
    } else {
        Completeness::Incomplete
    };
    Ok((points, completeness))
}

fn cmp_points(a: &PlanePoint, b: &PlanePoint) -> std::cmp::Ordering {
    for (x, y) in a.coords().iter().zip(b.coords().iter()) {
        let c = x.cmp_same_field(y);
        if c != std::cmp::Ordering::Equal {
            return c;
        }
    }
    std::cmp::Ordering::Equal
}

/// Classify an isolated singularity of the quartic at a rational point.
pub fn classify_ade(q: &PlaneQuartic, p: &PlanePoint) -> Result<SingularityRecord> {
    if q.field() != p.field() {
        return Err(Error::MixedFields);
    }
    if !q.poly.eval(p.coords()).is_zero()
        || (0..3).any(|v| !q.poly.partial(v).eval(p.coords()).is_zero())
    {
        return Err(Error::Input(format!(
            "{p} is not a singular point of the quartic"
        )));
    }
    let germ = chart_germ(&q.poly, p)?;
    let class = classify_germ(&germ)?;
    Ok(SingularityRecord { point: p.clone(), class })
}

/// Classify a two-variable polynomial germ with a singular point at the
/// origin. The Milnor number is the length of the Jacobian ideal, computed
/// with a degree truncation high enough to be exact in the ADE range; the
/// tag follows from it together with the Hessian corank and, in corank 2,
/// the root structure of the degree-3 part.
pub fn classify_germ(g: &MultiPoly) -> Result<GermClass> {
    let field = g.field();
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if g.nvars() != 2 {
        return Err(Error::Input("germ must have two variables".into()));
    }
    let zero2 = [Scalar::zero(field), Scalar::zero(field)];
    let gx = g.partial(0);
    let gy = g.partial(1);
    if !g.eval(&zero2).is_zero() || !gx.eval(&zero2).is_zero() || !gy.eval(&zero2).is_zero() {
        return Err(Error::Input("germ must be singular at the origin".into()));
    }
    let jac = [gx, gy];
    let milnor = local_length(&jac, MILNOR_TRUNCATION_ORDER)?;
    let stable = local_length(&jac, MILNOR_STABILITY_ORDER)?;
    if milnor != stable {
        return Err(Error::BeyondAdeScope(format!(
            "Milnor number did not stabilize below the truncation order \
             ({stable} at order {MILNOR_STABILITY_ORDER}, {milnor} at order \
             {MILNOR_TRUNCATION_ORDER})"
        )));
    }
    if milnor > 7 {
        return Err(Error::BeyondAdeScope(format!(
            "Milnor number {milnor} exceeds 7"
        )));
    }
    let milnor = milnor as u32;
    // Hessian of the quadratic part
    let two = Scalar::from_i64(field, 2);
    let a = &g.coeff(&exps(2, 0)) * &two;
    let b = g.coeff(&exps(1, 1));
    let c = &g.coeff(&exps(0, 2)) * &two;
    let det = &(&a * &c) - &(&b * &b);
    let rank = if !det.is_zero() {
        2
    } else if !a.is_zero() || !b.is_zero() || !c.is_zero() {
        1
    } else {
        0
    };
    let corank = 2 - rank;
    let (cubic_shape, tag) = match corank {
        0 => {
            debug_assert_eq!(milnor, 1);
            (None, SimpleType::new(AdeClass::A, 1)?)
        }
        1 => (None, SimpleType::new(AdeClass::A, milnor)?),
        _ => {
            let shape = cubic_part_shape(g)?;
            let tag = match shape {
                CubicShape::ThreeDistinctRoots => SimpleType::new(AdeClass::D, 4)?,
                CubicShape::DoubleRoot => SimpleType::new(AdeClass::D, milnor)?,
                CubicShape::TripleRoot => match milnor {
                    6 | 7 => SimpleType::new(AdeClass::E, milnor)?,
                    other => {
                        return Err(Error::BeyondAdeScope(format!(
                            "triple-root cubic part with Milnor number {other}"
                        )))
                    }
                },
            };
            (Some(shape), tag)
        }
    };
    Ok(GermClass {
        milnor,
        corank,
        cubic_shape,
        tag,
    })
}

/// Root multiplicity pattern of the degree-3 part over the closure, read
/// from a squarefree decomposition (plus the root at infinity when the
/// dehomogenized cubic drops degree).
fn cubic_part_shape(g: &MultiPoly) -> Result<CubicShape> {
    let field = g.field();
    let mut cubic = MultiPoly::zero(1, field);
    for i in 0..=3u16 {
        let coeff = g.coeff(&exps(i, 3 - i));
        if !coeff.is_zero() {
            let mut e: Exponents = [0; crate::exact::poly::MAX_VARS];
            e[0] = i;
            cubic = cubic.add(&MultiPoly::monomial(1, e, coeff));
        }
    }
    if cubic.is_zero() {
        return Err(Error::BeyondAdeScope(
            "degree-3 part of a corank-2 germ vanishes".into(),
        ));
    }
    let mut exponents: Vec<usize> = Vec::new();
    for (factor, mult) in squarefree_decomposition(&cubic)? {
        for _ in 0..factor.degree_in(0) {
            exponents.push(mult);
        }
    }
    let at_infinity = 3 - cubic.degree_in(0) as usize;
    if at_infinity > 0 {
        exponents.push(at_infinity);
    }
    match exponents.iter().max() {
        Some(1) => Ok(CubicShape::ThreeDistinctRoots),
        Some(2) => Ok(CubicShape::DoubleRoot),
        Some(3) => Ok(CubicShape::TripleRoot),
        _ => unreachable!("cubic has between one and three roots"),
    }
}

/// The singular points of the quartic with their ADE tags, as a type list
/// with its total rank (the sum of the Milnor numbers).
pub fn quartic_root_system(q: &PlaneQuartic) -> Result<(Vec<SingularityRecord>, TypeList, u32)> {
    let (points, completeness) = singular_points(q)?;
    if completeness == Completeness::Incomplete {
        return Err(Error::Incomplete(
            "singular points of the quartic are not all rational".into(),
        ));
    }
    let records = points
        .iter()
        .map(|p| classify_ade(q, p))
        .collect::<Result<Vec<_>>>()?;
    let rank = records.iter().map(|r| r.milnor()).sum();
    let types = TypeList::new(
        records
            .iter()
            .map(|r| crate::roots::DynkinType::Finite(r.tag()))
            .collect(),
    );
    Ok((records, types, rank))
}

fn exps(a: u16, b: u16) -> Exponents {
    let mut e: Exponents = [0; crate::exact::poly::MAX_VARS];
    e[0] = a;
    e[1] = b;
    e
}

/// The affine chart of the quartic at a point: set the pivot coordinate to
/// 1, translate the other two so the point moves to the origin, and drop the
/// pivot variable.
fn chart_germ(poly: &MultiPoly, p: &PlanePoint) -> Result<MultiPoly> {
    let field = poly.field();
    let coords = p.coords();
    let s = (0..3)
        .find(|&i| !coords[i].is_zero())
        .expect("projective point has a nonzero coordinate");
    let mut q = poly.substitute(s, &MultiPoly::constant(3, Scalar::one(field)));
    for k in 0..3 {
        if k == s || coords[k].is_zero() {
            continue;
        }
        let repl = MultiPoly::var(3, k, field).add(&MultiPoly::constant(3, coords[k].clone()));
        q = q.substitute(k, &repl);
    }
    q.remove_var(s)
}

/// Length of the quotient by the ideal generated by `gens` at the origin,
/// cut off at total degree `trunc`: append every monomial of that degree and
/// take the (finite) quotient dimension.
fn local_length(gens: &[MultiPoly], trunc: u32) -> Result<u64> {
    let nvars = gens[0].nvars();
    debug_assert_eq!(nvars, 2);
    let field = gens[0].field();
    let n = trunc as u16;
    // the quotient by the ideal plus the n-th power of the maximal ideal is
    // a plain vector-space quotient: monomials of degree below n, modulo the
    // truncations of all monomial multiples of the generators
    let column = |e: &Exponents| -> usize {
        let d = (e[0] + e[1]) as usize;
        d * (d + 1) / 2 + e[1] as usize
    };
    let cols = (n as usize) * (n as usize + 1) / 2;
    let one = Scalar::one(field);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in gens {
        let Some(low) = g.terms().map(|(e, _)| e[0] + e[1]).min() else {
            continue; // the zero polynomial spans nothing
        };
        for du in 0..n.saturating_sub(low) {
            for a in 0..=du {
                let prod = g.mul_term(&exps(a, du - a), &one);
                let mut row = vec![Scalar::zero(field); cols];
                let mut nonzero = false;
                for (e, c) in prod.terms() {
                    if e[0] + e[1] < n {
                        row[column(e)] = c.clone();
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    Ok(cols as u64 - rank(&rows) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(src: &str) -> PlaneQuartic {
        PlaneQuartic::parse(src, Field::Rational).unwrap()
    }

    fn net(q1: &str, q2: &str, q3: &str) -> Net {
        Net::parse(q1, q2, q3, Field::Rational).unwrap()
    }

    fn germ(src_terms: &[(i64, u16, u16)]) -> MultiPoly {
        let field = Field::Rational;
        let mut g = MultiPoly::zero(2, field);
        for &(c, a, b) in src_terms {
            g = g.add(&MultiPoly::monomial(2, exps(a, b), Scalar::from_i64(field, c)));
        }
        g
    }

    #[test]
    fn discriminants_match_table_rows() {
        let cases = [
            ("Y*Z", "X*Z+W^2", "X*Y+Z^2", "b*c*(a*b-c^2)"),
            ("X*Y", "Z*W", "X*Z+X*W+Y*Z+Y*W", "a*b*(a*b-4*c^2)"),
            ("Y*Z+W^2", "X*Z+Y*W", "X*W-Y^2+Z^2", "b^4+2*a*b^2*c+a^2*c^2+4*c^4"),
            ("X*Y+X*Z", "W^2+X*Z", "Y*Z", "a*b*c*(a+b)"),
            ("Y*Z", "X*W+Z^2", "X*Y+W^2", "b*(a^2*b-4*c^3)"),
        ];
        for (q1, q2, q3, table) in cases {
            let delta = discriminant_quartic(&net(q1, q2, q3)).unwrap();
            assert!(
                delta.proportional_to(&q(table)),
                "discriminant of <{q1}, {q2}, {q3}> is {delta}, expected a multiple of {table}"
            );
        }
    }

    #[test]
    fn discriminant_scalar_is_tracked() {
        // this net's determinant is exactly a quarter of the table form
        let delta = discriminant_quartic(&net("Y*Z", "X*Z+W^2", "X*Y+Z^2")).unwrap();
        let quarter = Scalar::from_i64(Field::Rational, 4).inv();
        let expected = q("b*c*(a*b-c^2)").poly().scale(&quarter);
        assert_eq!(delta.poly(), &expected);
    }

    #[test]
    fn characteristic_two_rejected() {
        let n = Net::parse("(X+Y+Z)*W", "(X+Y+W)*Z", "(X+Z+W)*Y", Field::Fp(2)).unwrap();
        assert_eq!(
            discriminant_quartic(&n).unwrap_err(),
            Error::CharacteristicTwo
        );
    }

    #[test]
    fn fermat_quartic_is_smooth() {
        let fermat = q("a^4+b^4+c^4");
        let (pts, completeness) = singular_points(&fermat).unwrap();
        assert!(pts.is_empty());
        assert_eq!(completeness, Completeness::Certified);
        let (records, types, rank) = quartic_root_system(&fermat).unwrap();
        assert!(records.is_empty());
        assert_eq!(types.to_string(), "0");
        assert_eq!(rank, 0);
    }

    #[test]
    fn line_arrangement_singularities() {
        let arrangement = q("a*b*c*(a+b)");
        let (pts, completeness) = singular_points(&arrangement).unwrap();
        assert_eq!(completeness, Completeness::Certified);
        let expect: Vec<PlanePoint> = [[0, 0, 1], [0, 1, 0], [1, -1, 0], [1, 0, 0]]
            .into_iter()
            .map(|c| PlanePoint::from_ints(Field::Rational, c).unwrap())
            .collect();
        assert_eq!(pts, expect);
        let (records, types, rank) = quartic_root_system(&arrangement).unwrap();
        assert_eq!(types.to_string(), "D4+3A1");
        assert_eq!(rank, 7);
        let d4 = records
            .iter()
            .find(|r| r.point() == &expect[0])
            .unwrap();
        assert_eq!(d4.tag().to_string(), "D4");
        assert_eq!(d4.cubic_shape(), Some(CubicShape::ThreeDistinctRoots));
    }

    #[test]
    fn table_row_root_systems() {
        let cases = [
            ("b*(4*a*b^2+b*c^2+4*c^3)", "E7"),
            ("b^4+2*a*b^2*c+a^2*c^2+4*c^4", "A7"),
            ("b*c*(a*b-c^2)", "D6+A1"),
            ("b*(a^2*b-4*c^3)", "A5+A2"),
            ("b*c*(a^2-b*c)", "2A3+A1"),
        ];
        for (src, expect) in cases {
            let quartic = q(src);
            let (_, types, rank) = quartic_root_system(&quartic).unwrap();
            assert_eq!(types.to_string(), expect, "root system of {src}");
            assert_eq!(rank, 7, "rank of {src}");
        }
    }

    #[test]
    fn seven_fold_singularity_details() {
        let e7 = q("b*(4*a*b^2+b*c^2+4*c^3)");
        let p = PlanePoint::from_ints(Field::Rational, [1, 0, 0]).unwrap();
        let rec = classify_ade(&e7, &p).unwrap();
        assert_eq!(rec.tag().to_string(), "E7");
        assert_eq!(rec.milnor(), 7);
        assert_eq!(rec.corank(), 2);
        assert_eq!(rec.cubic_shape(), Some(CubicShape::TripleRoot));

        let a7 = q("b^4+2*a*b^2*c+a^2*c^2+4*c^4");
        let rec = classify_ade(&a7, &p).unwrap();
        assert_eq!(rec.tag().to_string(), "A7");
        assert_eq!(rec.milnor(), 7);
        assert_eq!(rec.corank(), 1);
        assert_eq!(rec.cubic_shape(), None);
    }

    #[test]
    fn germ_normal_forms() {
        // x^2 + y^(n+1) has tag A_n
        for n in 1..=7u16 {
            let g = germ(&[(1, 2, 0), (1, 0, n + 1)]);
            let class = classify_germ(&g).unwrap();
            assert_eq!(class.tag.to_string(), format!("A{n}"));
            assert_eq!(class.milnor, n as u32);
        }
        // x^2 y + y^(n-1) has tag D_n
        for n in 4..=7u16 {
            let g = germ(&[(1, 2, 1), (1, 0, n - 1)]);
            let class = classify_germ(&g).unwrap();
            assert_eq!(class.tag.to_string(), format!("D{n}"));
            assert_eq!(class.milnor, n as u32);
        }
        // x^3 + x y^3 has tag E7
        let class = classify_germ(&germ(&[(1, 3, 0), (1, 1, 3)])).unwrap();
        assert_eq!(class.tag.to_string(), "E7");
        assert_eq!(class.milnor, 7);
        // x^3 + y^4 has tag E6
        let class = classify_germ(&germ(&[(1, 3, 0), (1, 0, 4)])).unwrap();
        assert_eq!(class.tag.to_string(), "E6");
        assert_eq!(class.milnor, 6);
    }

    #[test]
    fn germs_outside_scope() {
        // x^3 + y^5 is E8: Milnor number 8 exceeds the supported range
        let e8 = germ(&[(1, 3, 0), (1, 0, 5)]);
        assert!(matches!(
            classify_germ(&e8).unwrap_err(),
            Error::BeyondAdeScope(_)
        ));
        // x^2 y^2 is not an isolated singularity
        let nonisolated = germ(&[(1, 2, 2)]);
        assert!(matches!(
            classify_germ(&nonisolated).unwrap_err(),
            Error::BeyondAdeScope(_)
        ));
        // a smooth origin is rejected as input
        let smooth = germ(&[(1, 1, 0)]);
        assert!(matches!(
            classify_germ(&smooth).unwrap_err(),
            Error::Input(_)
        ));
    }

    #[test]
    fn nonreduced_quartic_rejected() {
        let double_conic = q("(a*b-c^2)^2");
        assert_eq!(
            singular_points(&double_conic).unwrap_err(),
            Error::NonIsolatedSingularLocus
        );
    }

    #[test]
    fn singular_net_rejected() {
        // every member shares the singular point [0,0,0,1]
        let n = net("X*Y", "X*Z", "Y*Z");
        assert_eq!(
            discriminant_quartic(&n).unwrap_err(),
            Error::NetOfSingularQuadrics
        );
    }

    #[test]
    fn irrational_singular_points_reported() {
        // nodes at [1, ±√2, 0] and more: b^2 factor gives a non-rational pair
        let quartic = q("(a^2-2*b^2)*(b^2-2*c^2)");
        let (_, completeness) = singular_points(&quartic).unwrap();
        assert_eq!(completeness, Completeness::Incomplete);
        assert!(matches!(
            quartic_root_system(&quartic).unwrap_err(),
            Error::Incomplete(_)
        ));
    }

    #[test]
    fn proportionality_is_scalar_blind() {
        let a = q("a*b*c*(a+b)");
        let b = q("3*a*b*c*(a+b)");
        assert!(a.proportional_to(&b));
        assert!(b.proportional_to(&a));
        let c = q("a*b*c*(a+2*b)");
        assert!(!a.proportional_to(&c));
    }
}
