//! Quadratic forms on P^3 and nets of quadrics: evaluation, gradients,
//! singular loci, factorization into planes, and the unique-singular-member
//! check at basepoints.
//!
//! Coefficients are stored upper-triangular (one slot per unordered variable
//! pair) and never divided by 2, so characteristic 2 works throughout.

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{Field, MultiPoly, Scalar};
use crate::exact::scalar::{big_rational_is_square, fp_sqrt};
use std::fmt;

/// Unordered pair order for the 10 coefficient slots:
/// XX, XY, XZ, XW, YY, YZ, YW, ZZ, ZW, WW.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    PAIRS.iter().position(|&p| p == (i, j)).unwrap()
}

/// A quadratic form on P^3 in upper-triangular storage.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticForm {
    field: Field,
    coeffs: [Scalar; 10],
}

/// A point of P^3 normalized so its first nonzero coordinate is 1;
/// equal points compare bitwise equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    coords: [Scalar; 4],
}

/// A linear subspace of the underlying 4-space, kept as an echelonized
/// basis; `proj_dim` is the dimension of its projectivization.
#[derive(Clone, Debug)]
pub struct LinearSubspace {
    field: Field,
    basis: Vec<[Scalar; 4]>,
}

/// Factorization of a quadric into planes over the ground field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PlaneFactorization {
    /// Not a product of two rational planes. `splits_over_extension` is set
    /// when the form has rank 2 but its two planes need a field extension.
    Irreducible { splits_over_extension: bool },
    /// q = scalar * L^2; the linear form is normalized.
    DoublePlane([Scalar; 4]),
    /// q = scalar * L * M with independent normalized linear forms.
    TwoPlanes([Scalar; 4], [Scalar; 4]),
}

/// Outcome of the singular-member solve at a basepoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SingularMember {
    None,
    Unique([Scalar; 3]),
    Violation,
}

/// Result of checking the unique-singular-member condition at every
/// basepoint.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Assumption1Outcome {
    Pass,
    FailAt(ProjPoint),
}

impl QuadraticForm {
    pub fn zero(field: Field) -> QuadraticForm {
        QuadraticForm {
            field,
            coeffs: std::array::from_fn(|_| Scalar::zero(field)),
        }
    }

    /// Extract the 10 coefficients from a homogeneous quadratic polynomial.
    pub fn from_poly(p: &MultiPoly) -> Result<QuadraticForm> {
        if p.nvars() != 4 {
            return Err(Error::Input("quadric polynomials use 4 variables".into()));
        }
        if !p.is_zero() && (!p.is_homogeneous() || p.total_degree() != Some(2)) {
            return Err(Error::Input(
                "quadric must be homogeneous of degree 2".into(),
            ));
        }
        let mut q = QuadraticForm::zero(p.field());
        for (e, c) in p.terms() {
            let vars: Vec<usize> = (0..4).filter(|&v| e[v] > 0).collect();
            let idx = match vars.len() {
                1 => pair_index(vars[0], vars[0]),
                2 => pair_index(vars[0], vars[1]),
                _ => unreachable!("degree-2 monomial"),
            };
            q.coeffs[idx] = c.clone();
        }
        Ok(q)
    }

    pub fn parse(src: &str, field: Field) -> Result<QuadraticForm> {
        QuadraticForm::from_poly(&crate::parse::parse_net_polynomial(src, field)?)
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut acc = MultiPoly::zero(4, self.field);
        for (idx, &(i, j)) in PAIRS.iter().enumerate() {
            if !self.coeffs[idx].is_zero() {
                let mut e = [0u16; 4];
                e[i] += 1;
                e[j] += 1;
                acc = acc.add(&MultiPoly::monomial(4, e, self.coeffs[idx].clone()));
            }
        }
        acc
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar; 10] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &Scalar) -> QuadraticForm {
        QuadraticForm {
            field: self.field,
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * k),
        }
    }

    pub fn add(&self, other: &QuadraticForm) -> QuadraticForm {
        QuadraticForm {
            field: self.field,
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    /// Value at an affine representative.
    pub fn evaluate_coords(&self, x: &[Scalar; 4]) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for (idx, &(i, j)) in PAIRS.iter().enumerate() {
            if !self.coeffs[idx].is_zero() {
                acc = &acc + &(&self.coeffs[idx] * &(&x[i] * &x[j]));
            }
        }
        acc
    }

    pub fn evaluate(&self, p: &ProjPoint) -> Scalar {
        self.evaluate_coords(p.coords())
    }

    /// The four formal partial derivatives at a point; valid in every
    /// characteristic.
    pub fn gradient_coords(&self, x: &[Scalar; 4]) -> [Scalar; 4] {
        let two = Scalar::from_i64(self.field, 2);
        std::array::from_fn(|k| {
            let mut acc = Scalar::zero(self.field);
            for (idx, &(i, j)) in PAIRS.iter().enumerate() {
                if self.coeffs[idx].is_zero() {
                    continue;
                }
                if i == k && j == k {
                    acc = &acc + &(&(&two * &self.coeffs[idx]) * &x[k]);
                } else if i == k {
                    acc = &acc + &(&self.coeffs[idx] * &x[j]);
                } else if j == k {
                    acc = &acc + &(&self.coeffs[idx] * &x[i]);
                }
            }
            acc
        })
    }

    pub fn gradient(&self, p: &ProjPoint) -> [Scalar; 4] {
        self.gradient_coords(p.coords())
    }

    /// Polar bilinear form b(u, v) = q(u+v) - q(u) - q(v).
    pub fn polar(&self, u: &[Scalar; 4], v: &[Scalar; 4]) -> Scalar {
        let sum: [Scalar; 4] = std::array::from_fn(|i| &u[i] + &v[i]);
        let a = self.evaluate_coords(&sum);
        &(&a - &self.evaluate_coords(u)) - &self.evaluate_coords(v)
    }

    /// Gram matrix of the polar form (diagonal entries 2*c_ii).
    pub fn polar_matrix(&self) -> Vec<Vec<Scalar>> {
        let two = Scalar::from_i64(self.field, 2);
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j {
                            &two * &self.coeffs[pair_index(i, i)]
                        } else {
                            self.coeffs[pair_index(i, j)].clone()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank of the polar Gram matrix (the usual quadric rank away from
    /// characteristic 2).
    pub fn polar_rank(&self) -> usize {
        linalg::rank(&self.polar_matrix())
    }

    /// The singular locus as a linear subspace: in odd/zero characteristic
    /// the radical of the polar form; in characteristic 2 the common zeros
    /// of the formal partials intersected with the quadric itself.
    pub fn singular_locus(&self) -> LinearSubspace {
        assert!(!self.is_zero(), "singular locus of the zero form");
        let radical = linalg::kernel_basis(&self.polar_matrix(), 4, self.field);
        let mut basis: Vec<[Scalar; 4]> = radical
            .into_iter()
            .map(|v| std::array::from_fn(|i| v[i].clone()))
            .collect();
        if self.field.characteristic() == 2 {
            // on the radical the form is additive, and over GF(2) linear:
            // intersect with its kernel
            let values: Vec<Scalar> =
                basis.iter().map(|v| self.evaluate_coords(v)).collect();
            if let Some(anchor) = values.iter().position(|c| !c.is_zero()) {
                let mut cut = Vec::new();
                for (i, v) in basis.iter().enumerate() {
                    if i == anchor {
                        continue;
                    }
                    if values[i].is_zero() {
                        cut.push(v.clone());
                    } else {
                        // value 1 over GF(2): add the anchor to cancel
                        cut.push(std::array::from_fn(|k| &v[k] + &basis[anchor][k]));
                    }
                }
                basis = cut;
            }
        }
        LinearSubspace {
            field: self.field,
            basis,
        }
    }

    /// Factor into planes over the ground field.
    pub fn factor_into_planes(&self) -> PlaneFactorization {
        assert!(!self.is_zero(), "factoring the zero form");
        if self.field.characteristic() == 2 {
            return self.factor_into_planes_char2();
        }
        let gram = self.polar_matrix();
        match linalg::rank(&gram) {
            1 => {
                // q = scalar * L^2; any nonzero Gram row is proportional to L
                let row = gram
                    .iter()
                    .find(|r| r.iter().any(|c| !c.is_zero()))
                    .unwrap();
                PlaneFactorization::DoublePlane(normalize_linear(row))
            }
            2 => self.split_rank2(&gram),
            _ => PlaneFactorization::Irreducible {
                splits_over_extension: false,
            },
        }
    }

    /// Rank-2 case away from characteristic 2: restrict to a complement of
    /// the radical and factor the resulting binary form.
    fn split_rank2(&self, gram: &[Vec<Scalar>]) -> PlaneFactorization {
        let field = self.field;
        let radical = linalg::kernel_basis(gram, 4, field);
        debug_assert_eq!(radical.len(), 2);
        // extend the radical to a basis with two complement vectors u, v
        let mut rows: Vec<Vec<Scalar>> = radical.clone();
        let mut complement = Vec::new();
        for k in 0..4 {
            let mut e = vec![Scalar::zero(field); 4];
            e[k] = Scalar::one(field);
            let mut trial = rows.clone();
            trial.push(e.clone());
            if linalg::rank(&trial) > rows.len() {
                rows.push(e.clone());
                complement.push(e);
                if complement.len() == 2 {
                    break;
                }
            }
        }
        let u: [Scalar; 4] = std::array::from_fn(|i| complement[0][i].clone());
        let v: [Scalar; 4] = std::array::from_fn(|i| complement[1][i].clone());

        // dual functionals: rows 0,1 of the inverse of [u v w1 w2]
        let cols = [
            u.clone(),
            v.clone(),
            std::array::from_fn(|i| radical[0][i].clone()),
            std::array::from_fn(|i| radical[1][i].clone()),
        ];
        let mat: Vec<Vec<Scalar>> = (0..4)
            .map(|i| (0..4).map(|j| cols[j][i].clone()).collect())
            .collect();
        let inv = linalg::invert(&mat, field).expect("basis change is invertible");
        let s_fn: [Scalar; 4] = std::array::from_fn(|i| inv[0][i].clone());
        let t_fn: [Scalar; 4] = std::array::from_fn(|i| inv[1][i].clone());

        // q restricted to span(u, v): alpha s^2 + beta s t + gamma t^2
        let alpha = self.evaluate_coords(&u);
        let beta = self.polar(&u, &v);
        let gamma = self.evaluate_coords(&v);

        let combine = |a: &Scalar, f: &[Scalar; 4], b: &Scalar, g: &[Scalar; 4]| {
            let l: [Scalar; 4] =
                std::array::from_fn(|i| &(a * &f[i]) + &(b * &g[i]));
            normalize_linear(&l)
        };
        if alpha.is_zero() && gamma.is_zero() {
            // q = beta * s * t
            return PlaneFactorization::TwoPlanes(
                normalize_linear(&s_fn),
                normalize_linear(&t_fn),
            );
        }
        if alpha.is_zero() {
            // q = t (beta s + gamma t)
            return PlaneFactorization::TwoPlanes(
                normalize_linear(&t_fn),
                combine(&beta, &s_fn, &gamma, &t_fn),
            );
        }
        // discriminant of the binary form decides rational splitting
        let four = Scalar::from_i64(field, 4);
        let disc = &(&beta * &beta) - &(&four * &(&alpha * &gamma));
        let root = match &disc {
            Scalar::Rat(r) => big_rational_is_square(r).map(Scalar::Rat),
            Scalar::Fp { p, val } => fp_sqrt(*val, *p).map(|v| Scalar::Fp { p: *p, val: v }),
        };
        let Some(root) = root else {
            return PlaneFactorization::Irreducible {
                splits_over_extension: true,
            };
        };
        // alpha (s - r1 t)(s - r2 t) with r = (-beta ± root) / (2 alpha)
        let two_alpha = &Scalar::from_i64(field, 2) * &alpha;
        let r1 = &(&(-&beta) + &root) / &two_alpha;
        let r2 = &(&(-&beta) - &root) / &two_alpha;
        let one = Scalar::one(field);
        PlaneFactorization::TwoPlanes(
            combine(&one, &s_fn, &(-&r1), &t_fn),
            combine(&one, &s_fn, &(-&r2), &t_fn),
        )
    }

    /// Characteristic 2: enumerate the 15 linear forms over GF(2).
    fn factor_into_planes_char2(&self) -> PlaneFactorization {
        let field = self.field;
        let forms: Vec<[Scalar; 4]> = (1u8..16)
            .map(|bits| {
                std::array::from_fn(|i| {
                    Scalar::from_i64(field, ((bits >> i) & 1) as i64)
                })
            })
            .collect();
        let product = |a: &[Scalar; 4], b: &[Scalar; 4]| -> QuadraticForm {
            let mut q = QuadraticForm::zero(field);
            for (idx, &(i, j)) in PAIRS.iter().enumerate() {
                q.coeffs[idx] = if i == j {
                    &a[i] * &b[i]
                } else {
                    &(&a[i] * &b[j]) + &(&a[j] * &b[i])
                };
            }
            q
        };
        for l in &forms {
            if &product(l, l) == self {
                return PlaneFactorization::DoublePlane(l.clone());
            }
        }
        for (i, l) in forms.iter().enumerate() {
            for m in &forms[i + 1..] {
                if &product(l, m) == self {
                    return PlaneFactorization::TwoPlanes(l.clone(), m.clone());
                }
            }
        }
        // two conjugate planes over GF(4) leave a singular line behind
        PlaneFactorization::Irreducible {
            splits_over_extension: self.singular_locus().proj_dim() == 1,
        }
    }
}

fn normalize_linear(l: &[Scalar]) -> [Scalar; 4] {
    let lead = l.iter().find(|c| !c.is_zero()).expect("nonzero linear form");
    let inv = lead.inv();
    std::array::from_fn(|i| &l[i] * &inv)
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly().display(&crate::parse::NET_VARS))
    }
}

impl ProjPoint {
    /// Normalize so the first nonzero coordinate is 1.
    pub fn new(coords: [Scalar; 4]) -> Result<ProjPoint> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Input("projective point needs a nonzero coordinate".into()))?;
        let inv = lead.inv();
        Ok(ProjPoint {
            coords: std::array::from_fn(|i| &coords[i] * &inv),
        })
    }

    pub fn from_ints(field: Field, coords: [i64; 4]) -> Result<ProjPoint> {
        ProjPoint::new(std::array::from_fn(|i| Scalar::from_i64(field, coords[i])))
    }

    pub fn coords(&self) -> &[Scalar; 4] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{},{}]",
            self.coords[0], self.coords[1], self.coords[2], self.coords[3]
        )
    }
}

impl LinearSubspace {
    /// Dimension of the projectivization (-1 for the zero space).
    pub fn proj_dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn basis(&self) -> &[[Scalar; 4]] {
        &self.basis
    }

    /// Membership test for a projective point.
    pub fn contains(&self, p: &ProjPoint) -> bool {
        let mut rows: Vec<Vec<Scalar>> =
            self.basis.iter().map(|b| b.to_vec()).collect();
        let base_rank = linalg::rank(&rows);
        rows.push(p.coords().to_vec());
        linalg::rank(&rows) == base_rank
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// A net of quadrics: an ordered, linearly independent basis of three forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Net {
    field: Field,
    basis: [QuadraticForm; 3],
}

impl Net {
    pub fn new(basis: [QuadraticForm; 3]) -> Result<Net> {
        let field = basis[0].field();
        if basis.iter().any(|q| q.field() != field) {
            return Err(Error::MixedFields);
        }
        if basis.iter().any(|q| q.is_zero()) {
            return Err(Error::Input("net members must be nonzero".into()));
        }
        let rows: Vec<Vec<Scalar>> =
            basis.iter().map(|q| q.coeffs().to_vec()).collect();
        if linalg::rank(&rows) != 3 {
            return Err(Error::Input(
                "net members must be linearly independent".into(),
            ));
        }
        Ok(Net { field, basis })
    }

    pub fn from_polys(polys: &[MultiPoly; 3]) -> Result<Net> {
        Net::new([
            QuadraticForm::from_poly(&polys[0])?,
            QuadraticForm::from_poly(&polys[1])?,
            QuadraticForm::from_poly(&polys[2])?,
        ])
    }

    pub fn parse(q1: &str, q2: &str, q3: &str, field: Field) -> Result<Net> {
        Net::new([
            QuadraticForm::parse(q1, field)?,
            QuadraticForm::parse(q2, field)?,
            QuadraticForm::parse(q3, field)?,
        ])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[QuadraticForm; 3] {
        &self.basis
    }

    /// The member with net coordinates lambda.
    pub fn member(&self, lambda: &[Scalar; 3]) -> QuadraticForm {
        let mut acc = QuadraticForm::zero(self.field);
        for (l, q) in lambda.iter().zip(&self.basis) {
            acc = acc.add(&q.scale(l));
        }
        acc
    }

    /// True when all three basis forms vanish at p.
    pub fn is_basepoint(&self, p: &ProjPoint) -> bool {
        self.basis.iter().all(|q| q.evaluate(p).is_zero())
    }
}

/// Canonical representatives of projective tuples over GF(p): first nonzero
/// entry equals 1.
pub(crate) fn proj_tuples(p: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..len {
        let free = len - lead - 1;
        let mut counter = vec![0u64; free];
        loop {
            let mut tuple = vec![0u64; lead];
            tuple.push(1);
            tuple.extend(&counter);
            out.push(tuple);
            let mut i = 0;
            loop {
                if i == free {
                    break;
                }
                counter[i] += 1;
                if counter[i] < p {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if i == free {
                break;
            }
        }
    }
    out
}

/// Solve for net members singular at the basepoint p: the kernel of the
/// 4x3 system sum_i lambda_i grad(Q_i)(p) = 0. (At a basepoint every member
/// also vanishes, so no extra value condition is needed in characteristic 2.)
pub fn singular_member_at(net: &Net, p: &ProjPoint) -> Result<SingularMember> {
    if !net.is_basepoint(p) {
        return Err(Error::Input(format!("{p} is not a basepoint of the net")));
    }
    let grads: Vec<[Scalar; 4]> = net.basis.iter().map(|q| q.gradient(p)).collect();
    let rows: Vec<Vec<Scalar>> = (0..4)
        .map(|k| (0..3).map(|i| grads[i][k].clone()).collect())
        .collect();
    let kernel = linalg::kernel_basis(&rows, 3, net.field);
    match kernel.len() {
        0 => Ok(SingularMember::None),
        1 => {
            let v = &kernel[0];
            let lead = v.iter().find(|c| !c.is_zero()).unwrap();
            let inv = lead.inv();
            Ok(SingularMember::Unique(std::array::from_fn(|i| {
                &v[i] * &inv
            })))
        }
        _ => Ok(SingularMember::Violation),
    }
}

/// Check that at most one member of the net is singular at each basepoint;
/// the first violation is returned as a witness.
pub fn assumption1_check(net: &Net, basepoints: &[ProjPoint]) -> Result<Assumption1Outcome> {
    for p in basepoints {
        if singular_member_at(net, p)? == SingularMember::Violation {
            return Ok(Assumption1Outcome::FailAt(p.clone()));
        }
    }
    Ok(Assumption1Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(src: &str) -> QuadraticForm {
        QuadraticForm::parse(src, Field::Rational).unwrap()
    }

    fn q2(src: &str) -> QuadraticForm {
        QuadraticForm::parse(src, Field::Fp(2)).unwrap()
    }

    fn pt(coords: [i64; 4]) -> ProjPoint {
        ProjPoint::from_ints(Field::Rational, coords).unwrap()
    }

    /// proportional as polynomials
    fn proportional(a: &MultiPoly, b: &MultiPoly) -> bool {
        let (ea, ca) = a.leading(crate::exact::MonomialOrder::GrLex).unwrap();
        let (eb, cb) = b.leading(crate::exact::MonomialOrder::GrLex).unwrap();
        if ea != eb {
            return false;
        }
        let k = &ca / &cb;
        a == &b.scale(&k)
    }

    #[test]
    fn evaluation() {
        let xy = q("X*Y");
        assert!(xy.evaluate(&pt([1, 0, 0, 0])).is_zero());
        assert!(xy.evaluate(&pt([1, 1, 0, 0])).is_one());
        let m2 = q("X*(Y+W) + Y*W");
        assert!(m2.evaluate(&pt([0, 0, 0, 1])).is_zero());
    }

    #[test]
    fn gradients() {
        let zz = q("Z^2");
        assert!(zz.gradient(&pt([1, 0, 0, 0])).iter().all(|c| c.is_zero()));
        let xy = q("X*Y");
        let g = xy.gradient(&pt([1, 0, 0, 0]));
        assert!(g[0].is_zero() && g[1].is_one() && g[2].is_zero() && g[3].is_zero());
        let degenerate = q("X*(X-W)");
        let g = degenerate.gradient(&pt([0, 0, 1, 0]));
        assert!(g.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn singular_loci() {
        assert_eq!(q("X*Y + Z*W").singular_locus().proj_dim(), -1);
        let line = q("Z*W").singular_locus();
        assert_eq!(line.proj_dim(), 1);
        assert!(line.contains(&pt([1, 0, 0, 0])));
        assert!(line.contains(&pt([0, 1, 0, 0])));
        assert!(!line.contains(&pt([0, 0, 1, 0])));
        assert_eq!(q("Z^2").singular_locus().proj_dim(), 2);
    }

    #[test]
    fn singular_loci_char2() {
        let f = Field::Fp(2);
        // double plane: singular along the whole plane Z = 0
        let zz = QuadraticForm::parse("Z^2", f).unwrap();
        assert_eq!(zz.singular_locus().proj_dim(), 2);
        // cone: vertex only
        let cone = QuadraticForm::parse("X^2 + Y*Z", f).unwrap();
        let locus = cone.singular_locus();
        assert_eq!(locus.proj_dim(), 0);
        assert!(locus.contains(&ProjPoint::from_ints(f, [0, 0, 0, 1]).unwrap()));
        // smooth
        let smooth = QuadraticForm::parse("X*Y + Z*W", f).unwrap();
        assert_eq!(smooth.singular_locus().proj_dim(), -1);
    }

    #[test]
    fn factoring_over_q() {
        match q("Z*W").factor_into_planes() {
            PlaneFactorization::TwoPlanes(l, m) => {
                let lp = l.to_vec();
                let mp = m.to_vec();
                // planes Z and W in some order
                let z: Vec<Scalar> = pt([0, 0, 1, 0]).coords().to_vec();
                let w: Vec<Scalar> = pt([0, 0, 0, 1]).coords().to_vec();
                assert!((lp == z && mp == w) || (lp == w && mp == z));
            }
            other => panic!("expected two planes, got {other:?}"),
        }
        assert_eq!(
            q("Z^2").factor_into_planes(),
            PlaneFactorization::DoublePlane(std::array::from_fn(|i| {
                Scalar::from_i64(Field::Rational, i64::from(i == 2))
            }))
        );
        assert_eq!(
            q("X*Y + Z*W").factor_into_planes(),
            PlaneFactorization::Irreducible {
                splits_over_extension: false
            }
        );
        // rank 2 but needs a quadratic extension
        assert_eq!(
            q("X^2 + Y^2").factor_into_planes(),
            PlaneFactorization::Irreducible {
                splits_over_extension: true
            }
        );
        // splits rationally after completing the square
        match q("X^2 - Y^2").factor_into_planes() {
            PlaneFactorization::TwoPlanes(..) => {}
            other => panic!("expected two planes, got {other:?}"),
        }
    }

    #[test]
    fn factoring_round_trip() {
        for src in ["Z*W", "(X+Y)*(Z+W)", "X^2 - 4*Y^2", "(X+2*W)^2"] {
            let form = q(src);
            match form.factor_into_planes() {
                PlaneFactorization::TwoPlanes(l, m) => {
                    let lp = linear_to_poly(&l, Field::Rational);
                    let mp = linear_to_poly(&m, Field::Rational);
                    assert!(proportional(&form.to_poly(), &lp.mul(&mp)), "{src}");
                }
                PlaneFactorization::DoublePlane(l) => {
                    let lp = linear_to_poly(&l, Field::Rational);
                    assert!(proportional(&form.to_poly(), &lp.mul(&lp)), "{src}");
                }
                other => panic!("{src}: unexpected {other:?}"),
            }
        }
    }

    fn linear_to_poly(l: &[Scalar; 4], field: Field) -> MultiPoly {
        let mut acc = MultiPoly::zero(4, field);
        for (i, c) in l.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&MultiPoly::var(4, i, field).scale(c));
            }
        }
        acc
    }

    #[test]
    fn factoring_char2() {
        match q2("(X+Y+Z)*W").factor_into_planes() {
            PlaneFactorization::TwoPlanes(l, m) => {
                let ones = |v: &[Scalar; 4]| -> Vec<usize> {
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, _)| i)
                        .collect()
                };
                let (a, b) = (ones(&l), ones(&m));
                assert!(
                    (a == vec![0, 1, 2] && b == vec![3])
                        || (a == vec![3] && b == vec![0, 1, 2])
                );
            }
            other => panic!("expected two planes, got {other:?}"),
        }
        assert_eq!(
            q2("X^2").factor_into_planes(),
            PlaneFactorization::DoublePlane(std::array::from_fn(|i| {
                Scalar::from_i64(Field::Fp(2), i64::from(i == 0))
            }))
        );
        // irreducible over GF(2), splits over GF(4)
        assert_eq!(
            q2("X^2 + X*Y + Y^2").factor_into_planes(),
            PlaneFactorization::Irreducible {
                splits_over_extension: true
            }
        );
        // honest cone
        assert_eq!(
            q2("X^2 + Y*Z").factor_into_planes(),
            PlaneFactorization::Irreducible {
                splits_over_extension: false
            }
        );
    }

    #[test]
    fn net_construction_rejects_dependence() {
        let f = Field::Rational;
        let err = Net::parse("X*Y", "Z*W", "X*Y + Z*W", f);
        assert!(err.is_err());
        assert!(Net::parse("X*Y", "Z*W", "X^2", f).is_ok());
    }

    #[test]
    fn unique_singular_member() {
        // double plane Z^2 is the only member singular at the basepoint
        let net = Net::parse("Z^2", "X*(Y+W) + Y*W", "X*Z + (Y+W)^2", Field::Rational)
            .unwrap();
        let p = pt([1, 0, 0, 0]);
        assert!(net.is_basepoint(&p));
        match singular_member_at(&net, &p).unwrap() {
            SingularMember::Unique(l) => {
                assert!(l[0].is_one() && l[1].is_zero() && l[2].is_zero());
            }
            other => panic!("expected unique member, got {other:?}"),
        }
    }

    #[test]
    fn violation_detected() {
        let net =
            Net::parse("X*(X-W)", "Y*(Y-W)", "Z*W", Field::Rational).unwrap();
        let p = pt([0, 0, 1, 0]);
        assert_eq!(singular_member_at(&net, &p).unwrap(), SingularMember::Violation);
        assert_eq!(
            assumption1_check(&net, &[p.clone()]).unwrap(),
            Assumption1Outcome::FailAt(p)
        );
    }

    #[test]
    fn simplex_net_singular_members() {
        // the four coordinate basepoints each see exactly one singular member
        let net =
            Net::parse("X*Y", "Z*W", "(X+Y)*(Z+W)", Field::Rational).unwrap();
        let p1 = pt([0, 0, 0, 1]);
        match singular_member_at(&net, &p1).unwrap() {
            SingularMember::Unique(l) => {
                // X*Y is singular along X = Y = 0, which contains p1
                assert!(l[0].is_one() && l[1].is_zero() && l[2].is_zero());
            }
            other => panic!("expected unique member, got {other:?}"),
        }
        assert_eq!(
            assumption1_check(
                &net,
                &[p1, pt([0, 0, 1, 0]), pt([0, 1, 0, 0]), pt([1, 0, 0, 0])]
            )
            .unwrap(),
            Assumption1Outcome::Pass
        );
    }

    #[test]
    fn non_basepoint_rejected() {
        let net =
            Net::parse("X*Y", "Z*W", "(X+Y)*(Z+W)", Field::Rational).unwrap();
        assert!(singular_member_at(&net, &pt([1, 1, 1, 1])).is_err());
    }

    #[test]
    fn projective_tuple_enumeration() {
        assert_eq!(proj_tuples(2, 3).len(), 7);
        assert_eq!(proj_tuples(3, 4).len(), 40);
        assert_eq!(proj_tuples(5, 3).len(), 31);
        // canonical: first nonzero entry is 1
        for t in proj_tuples(3, 4) {
            let lead = t.iter().find(|&&c| c != 0).unwrap();
            assert_eq!(*lead, 1);
        }
    }

    #[test]
    fn point_normalization() {
        let f = Field::Fp(7);
        let a = ProjPoint::from_ints(f, [0, 3, 5, 1]).unwrap();
        let b = ProjPoint::from_ints(f, [0, 6, 10, 2]).unwrap();
        assert_eq!(a, b);
        assert!(a.coords()[1].is_one());
        assert!(ProjPoint::from_ints(f, [0, 0, 0, 0]).is_err());
        assert!(ProjPoint::from_ints(f, [7, 14, 0, 7]).is_err());
    }
}
