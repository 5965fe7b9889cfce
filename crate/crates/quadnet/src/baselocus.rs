//! Base locus of a net of quadrics: rational basepoints, their
//! multiplicities, the induced chain labeling, and the net's type.
//!
//! Three quadrics in general position meet in a degree-8 scheme, so the
//! multiplicities of the basepoints sum to 8. That sum doubles as a
//! completeness certificate for the rational-point search over the rationals;
//! over a prime field an exhaustive scan is certified by construction.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exact::grobner::{quotient_dimension, QuotientDim};
use crate::exact::linalg::rank;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{Field, Scalar};
use crate::exact::series::{eval_poly_at_series, series_solve_system, DEFAULT_SERIES_ORDER};
use crate::exact::solve::projective_rational_zeros;
use crate::quadric::{proj_tuples, singular_member_at, Net, ProjPoint, QuadraticForm, SingularMember};

/// Whether a computed set of rational points provably exhausts the locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    Certified,
    Incomplete,
}

/// Result of the rational basepoint search.
#[derive(Debug, Clone)]
pub struct BasepointSearch {
    pub points: Vec<ProjPoint>,
    pub completeness: Completeness,
}

/// A basepoint together with its multiplicity and the 1-based index range
/// assigned by the labeling convention (indices within a chain are
/// consecutive, and the ranges of all chains partition 1..=8).
#[derive(Debug, Clone)]
pub struct BasepointChain {
    point: ProjPoint,
    multiplicity: u32,
    first_index: usize,
}

impl BasepointChain {
    pub fn new(point: ProjPoint, multiplicity: u32, first_index: usize) -> Result<BasepointChain> {
        if multiplicity == 0
            || first_index == 0
            || first_index + multiplicity as usize - 1 > 8
        {
            return Err(Error::Input(format!(
                "chain of multiplicity {multiplicity} cannot start at index {first_index}"
            )));
        }
        Ok(BasepointChain {
            point,
            multiplicity,
            first_index,
        })
    }

    pub fn point(&self) -> &ProjPoint {
        &self.point
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// First index of the chain's range in the labeling 1..=8.
    pub fn first_index(&self) -> usize {
        self.first_index
    }

    /// Inclusive index range covered by this chain.
    pub fn index_range(&self) -> (usize, usize) {
        (
            self.first_index,
            self.first_index + self.multiplicity as usize - 1,
        )
    }
}

/// The type of a net: the descending multiset of basepoint multiplicities,
/// optionally tagged with a variant subscript when several inequivalent nets
/// share the same multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetType {
    multiplicities: Vec<u32>,
    variant: Option<u32>,
}

impl NetType {
    pub fn new(mut multiplicities: Vec<u32>) -> Result<NetType> {
        if multiplicities.iter().sum::<u32>() != 8 || multiplicities.iter().any(|&m| m == 0) {
            return Err(Error::Input(
                "net type multiplicities must be positive and sum to 8".into(),
            ));
        }
        multiplicities.sort_unstable_by(|a, b| b.cmp(a));
        Ok(NetType {
            multiplicities,
            variant: None,
        })
    }

    pub fn with_variant(mut self, variant: u32) -> NetType {
        self.variant = Some(variant);
        self
    }

    /// Multiplicities in descending order.
    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn variant(&self) -> Option<u32> {
        self.variant
    }

    /// Number of distinct basepoints in projective space.
    pub fn point_count(&self) -> usize {
        self.multiplicities.len()
    }

    /// True when the two types have the same multiplicity multiset,
    /// regardless of variant subscripts.
    pub fn same_multiset(&self, other: &NetType) -> bool {
        self.multiplicities == other.multiplicities
    }
}

impl std::fmt::Display for NetType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}}}", self.multiplicities.iter().join(","))?;
        if let Some(v) = self.variant {
            write!(f, "_{v}")?;
        }
        Ok(())
    }
}

/// Outcome of the collinearity/coplanarity screen on a basepoint set.
#[derive(Debug, Clone)]
pub enum NondegeneracyOutcome {
    Pass,
    CollinearTriple(Vec<ProjPoint>),
    CoplanarQuintuple(Vec<ProjPoint>),
}

/// All basepoints of the net with coordinates in the base field.
///
/// Over GF(p) the projective space is scanned exhaustively, which certifies
/// the result relative to rational points. Over the rationals the locus is
/// solved chart by chart; the search is `Certified` exactly when the
/// multiplicities of the points found sum to 8, since the full base scheme
/// has degree 8.
pub fn find_rational_basepoints(net: &Net) -> Result<BasepointSearch> {
    check_base_locus_finite(net)?;
    let field = net.field();
    let mut points = match field {
        Field::Fp(p) => proj_tuples(p, 4)
            .into_iter()
            .map(|t| {
                let coords = [
                    Scalar::Fp { p, val: t[0] },
                    Scalar::Fp { p, val: t[1] },
                    Scalar::Fp { p, val: t[2] },
                    Scalar::Fp { p, val: t[3] },
                ];
                ProjPoint::new(coords)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|pt| net.is_basepoint(pt))
            .collect::<Vec<_>>(),
        Field::Rational => {
            let gens: Vec<MultiPoly> = net.basis().iter().map(|q| q.to_poly()).collect();
            let (raw, _) = projective_rational_zeros(&gens)?;
            raw.into_iter()
                .map(|c| {
                    let coords: [Scalar; 4] = c.try_into().expect("four coordinates");
                    ProjPoint::new(coords)
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    points.sort_by(|a, b| cmp_coords(a.coords(), b.coords()));
    let completeness = match field {
        Field::Fp(_) => Completeness::Certified,
        Field::Rational => {
            let mut total = 0u32;
            let mut ok = true;
            for pt in &points {
                match basepoint_multiplicity(net, pt) {
                    Ok(m) => total += m,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && total == 8 {
                Completeness::Certified
            } else {
                Completeness::Incomplete
            }
        }
    };
    Ok(BasepointSearch {
        points,
        completeness,
    })
}

/// Multiplicity of the base-locus scheme at a basepoint: the order of
/// vanishing of a third, independent member of the net along the branch of
/// the curve cut by a smooth pair of members through the point.
///
/// A pair (Q, Q') whose Jacobian has rank 2 at the point exists whenever at
/// most one member of the net is singular there; a deterministic sweep over
/// basis pairs and their sums finds one. The branch is parametrized by a
/// truncated power series and the third member's order of vanishing read off
/// its valuation.
pub fn basepoint_multiplicity(net: &Net, p: &ProjPoint) -> Result<u32> {
    if singular_member_at(net, p)? == SingularMember::Violation {
        return Err(Error::Assumption1Violation {
            point: p.to_string(),
        });
    }
    let field = net.field();
    let q = net.basis();
    // basis pairs first, then pairs (Q_i, Q_i +/- Q_j); the remaining basis
    // index always supplies an independent third member
    let mut candidates: Vec<(QuadraticForm, QuadraticForm, usize)> = Vec::new();
    for (i, j, k) in [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)] {
        candidates.push((q[i].clone(), q[j].clone(), k));
    }
    for (i, j, k) in [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)] {
        let minus_one = -&Scalar::one(field);
        candidates.push((q[i].clone(), q[i].add(&q[j]), k));
        candidates.push((q[i].clone(), q[i].add(&q[j].scale(&minus_one)), k));
        candidates.push((q[j].clone(), q[j].add(&q[i]), k));
        candidates.push((q[j].clone(), q[j].add(&q[i].scale(&minus_one)), k));
    }
    for (f, g, k) in &candidates {
        let jac = [f.gradient(p).to_vec(), g.gradient(p).to_vec()];
        if rank(&jac) != 2 {
            continue;
        }
        let fc = chart_at(f, p)?;
        let gc = chart_at(g, p)?;
        let hc = chart_at(&q[*k], p)?;
        let zero2 = [Scalar::zero(field), Scalar::zero(field)];
        for param in 0..3 {
            let branch = match series_solve_system(
                &[fc.clone(), gc.clone()],
                param,
                &zero2,
                DEFAULT_SERIES_ORDER,
            ) {
                Ok(b) => b,
                Err(Error::BranchNotSmooth) => continue,
                Err(e) => return Err(e),
            };
            let t = crate::exact::series::TruncSeries::parameter(field, DEFAULT_SERIES_ORDER);
            let mut args = [t.clone(), t.clone(), t];
            let unknowns: Vec<usize> = (0..3).filter(|&v| v != param).collect();
            args[unknowns[0]] = branch[0].clone();
            args[unknowns[1]] = branch[1].clone();
            let along = eval_poly_at_series(&hc, &args);
            return match along.valuation() {
                Some(v) => Ok(v as u32),
                None => Err(Error::MultiplicityBoundExceeded(DEFAULT_SERIES_ORDER)),
            };
        }
    }
    Err(Error::Assumption1Violation {
        point: p.to_string(),
    })
}

/// The net's type and the labeled chains of its basepoints.
///
/// Chains are ordered by descending multiplicity with ties broken by
/// ascending lexicographic order of normalized coordinates, and receive
/// consecutive 1-based index ranges in that order.
pub fn net_type(net: &Net) -> Result<(NetType, Vec<BasepointChain>)> {
    let search = find_rational_basepoints(net)?;
    let mut decorated: Vec<(ProjPoint, u32)> = Vec::new();
    let mut total = 0u32;
    for pt in &search.points {
        let m = basepoint_multiplicity(net, pt)?;
        total += m;
        decorated.push((pt.clone(), m));
    }
    if total != 8 {
        return Err(Error::IncompleteBasepoints { found: total });
    }
    decorated.sort_by(|(pa, ma), (pb, mb)| {
        mb.cmp(ma).then_with(|| cmp_coords(pa.coords(), pb.coords()))
    });
    let mut chains = Vec::new();
    let mut next = 1usize;
    for (point, multiplicity) in decorated {
        chains.push(BasepointChain {
            point,
            multiplicity,
            first_index: next,
        });
        next += multiplicity as usize;
    }
    let ty = NetType::new(chains.iter().map(|c| c.multiplicity).collect())?;
    Ok((ty, chains))
}

/// Screen a basepoint set for collinear triples and coplanar quintuples,
/// returning the first offending subset found.
pub fn nondegeneracy_check(basepoints: &[ProjPoint]) -> NondegeneracyOutcome {
    for combo in (0..basepoints.len()).combinations(3) {
        let rows: Vec<Vec<Scalar>> = combo
            .iter()
            .map(|&i| basepoints[i].coords().to_vec())
            .collect();
        if rank(&rows) <= 2 {
            return NondegeneracyOutcome::CollinearTriple(
                combo.iter().map(|&i| basepoints[i].clone()).collect(),
            );
        }
    }
    for combo in (0..basepoints.len()).combinations(5) {
        let rows: Vec<Vec<Scalar>> = combo
            .iter()
            .map(|&i| basepoints[i].coords().to_vec())
            .collect();
        if rank(&rows) <= 3 {
            return NondegeneracyOutcome::CoplanarQuintuple(
                combo.iter().map(|&i| basepoints[i].clone()).collect(),
            );
        }
    }
    NondegeneracyOutcome::Pass
}

/// Deterministic total order on normalized coordinate vectors.
fn cmp_coords(a: &[Scalar; 4], b: &[Scalar; 4]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let c = x.cmp_same_field(y);
        if c != std::cmp::Ordering::Equal {
            return c;
        }
    }
    std::cmp::Ordering::Equal
}

/// Error out unless the base locus is zero-dimensional over the closure,
/// checked chart by chart via the dimension of the quotient ring.
fn check_base_locus_finite(net: &Net) -> Result<()> {
    let field = net.field();
    let one = MultiPoly::constant(4, Scalar::one(field));
    let zero = MultiPoly::constant(4, Scalar::zero(field));
    for chart in 0..4usize {
        let mut eqs: Vec<MultiPoly> = net.basis().iter().map(|q| q.to_poly()).collect();
        for g in &mut eqs {
            for v in 0..chart {
                *g = g.substitute(v, &zero);
            }
            *g = g.substitute(chart, &one);
            for v in (0..=chart).rev() {
                *g = g.remove_var(v)?;
            }
        }
        if chart == 3 {
            continue; // no variables left: at most the single point
        }
        if eqs.iter().all(|g| g.is_zero()) {
            return Err(Error::BaseLocusNotFinite);
        }
        if quotient_dimension(&eqs)? == QuotientDim::Infinite {
            return Err(Error::BaseLocusNotFinite);
        }
    }
    Ok(())
}

/// The affine chart of a quadric at a point: set the pivot coordinate to 1,
/// translate the remaining three so the point moves to the origin, and drop
/// the pivot variable.
fn chart_at(form: &QuadraticForm, p: &ProjPoint) -> Result<MultiPoly> {
    let field = form.field();
    let coords = p.coords();
    let s = (0..4)
        .find(|&i| !coords[i].is_zero())
        .expect("projective point has a nonzero coordinate");
    let mut q = form.to_poly();
    q = q.substitute(s, &MultiPoly::constant(4, Scalar::one(field)));
    for k in 0..4 {
        if k == s || coords[k].is_zero() {
            continue;
        }
        let repl = MultiPoly::var(4, k, field).add(&MultiPoly::constant(4, coords[k].clone()));
        q = q.substitute(k, &repl);
    }
    q.remove_var(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(q1: &str, q2: &str, q3: &str) -> Net {
        Net::parse(q1, q2, q3, Field::Rational).unwrap()
    }

    fn pt(coords: [i64; 4]) -> ProjPoint {
        ProjPoint::from_ints(Field::Rational, coords).unwrap()
    }

    #[test]
    fn two_chain_net() {
        let n = net("Y*Z", "X*Z+W^2", "X*Y+Z^2");
        let search = find_rational_basepoints(&n).unwrap();
        assert_eq!(search.completeness, Completeness::Certified);
        assert_eq!(search.points, vec![pt([0, 1, 0, 0]), pt([1, 0, 0, 0])]);
        let (ty, chains) = net_type(&n).unwrap();
        assert_eq!(ty.to_string(), "{6,2}");
        assert_eq!(chains.len(), 2);
        assert_eq!(chains[0].point(), &pt([1, 0, 0, 0]));
        assert_eq!(chains[0].multiplicity(), 6);
        assert_eq!(chains[0].index_range(), (1, 6));
        assert_eq!(chains[1].point(), &pt([0, 1, 0, 0]));
        assert_eq!(chains[1].index_range(), (7, 8));
    }

    #[test]
    fn order_eight_point() {
        let n = net("Y*Z+W^2", "X*Z+Y*W", "X*W-Y^2+Z^2");
        assert_eq!(basepoint_multiplicity(&n, &pt([1, 0, 0, 0])).unwrap(), 8);
        let (ty, chains) = net_type(&n).unwrap();
        assert_eq!(ty.to_string(), "{8}");
        assert_eq!(chains[0].index_range(), (1, 8));
    }

    #[test]
    fn mixed_multiplicities() {
        let n = net("Y*Z", "X*W+Z^2", "X*Y+W^2");
        assert_eq!(basepoint_multiplicity(&n, &pt([0, 1, 0, 0])).unwrap(), 3);
        assert_eq!(basepoint_multiplicity(&n, &pt([1, 0, 0, 0])).unwrap(), 5);
        let (ty, _) = net_type(&n).unwrap();
        assert_eq!(ty.to_string(), "{5,3}");
    }

    #[test]
    fn tie_break_is_lexicographic() {
        let n = net("X*Y+X*Z", "Y*Z", "X*Z+Y*Z+W^2");
        let (ty, chains) = net_type(&n).unwrap();
        assert_eq!(ty.to_string(), "{4,2,2}");
        assert_eq!(chains[0].point(), &pt([1, 0, 0, 0]));
        assert_eq!(chains[0].first_index(), 1);
        assert_eq!(chains[1].point(), &pt([0, 0, 1, 0]));
        assert_eq!(chains[1].first_index(), 5);
        assert_eq!(chains[2].point(), &pt([0, 1, 0, 0]));
        assert_eq!(chains[2].first_index(), 7);
    }

    #[test]
    fn four_simple_chains() {
        let n = net("X*Y", "Z*W", "X*Z+X*W+Y*Z+Y*W");
        let (ty, chains) = net_type(&n).unwrap();
        assert_eq!(ty.to_string(), "{2,2,2,2}");
        let starts: Vec<(ProjPoint, usize)> = chains
            .iter()
            .map(|c| (c.point().clone(), c.first_index()))
            .collect();
        assert_eq!(
            starts,
            vec![
                (pt([0, 0, 0, 1]), 1),
                (pt([0, 0, 1, 0]), 3),
                (pt([0, 1, 0, 0]), 5),
                (pt([1, 0, 0, 0]), 7),
            ]
        );
    }

    #[test]
    fn prime_field_scan() {
        let f = Field::Fp(2);
        let n = Net::parse("(X+Y+Z)*W", "(X+Y+W)*Z", "(X+Z+W)*Y", f).unwrap();
        let search = find_rational_basepoints(&n).unwrap();
        assert_eq!(search.completeness, Completeness::Certified);
        assert_eq!(search.points.len(), 8);
        let has = |c: [i64; 4]| {
            let p = ProjPoint::from_ints(f, c).unwrap();
            search.points.contains(&p)
        };
        assert!(has([1, 1, 1, 0]));
        assert!(has([0, 1, 1, 1]));
        let (ty, chains) = net_type(&n).unwrap();
        assert_eq!(ty.to_string(), "{1,1,1,1,1,1,1,1}");
        assert!(chains.iter().all(|c| c.multiplicity() == 1));
    }

    #[test]
    fn positive_dimensional_locus_detected() {
        let n = net("X*Y", "X*Z", "X*W");
        assert_eq!(
            find_rational_basepoints(&n).unwrap_err(),
            Error::BaseLocusNotFinite
        );
    }

    #[test]
    fn irrational_basepoints_are_incomplete() {
        let n = net("X^2-2*W^2", "Y^2-3*W^2", "Z^2-5*W^2");
        let search = find_rational_basepoints(&n).unwrap();
        assert!(search.points.is_empty());
        assert_eq!(search.completeness, Completeness::Incomplete);
        assert_eq!(
            net_type(&n).unwrap_err(),
            Error::IncompleteBasepoints { found: 0 }
        );
    }

    #[test]
    fn multiplicity_one_means_full_rank_gradients() {
        let n = net("X*Y", "Z*W", "X*Z+X*W+Y*Z+Y*W");
        for c in [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]] {
            let p = pt(c);
            let rows: Vec<Vec<Scalar>> =
                n.basis().iter().map(|q| q.gradient(&p).to_vec()).collect();
            assert_eq!(basepoint_multiplicity(&n, &p).unwrap(), 2);
            assert_eq!(rank(&rows), 2);
        }
    }

    #[test]
    fn nondegeneracy_witnesses() {
        let simplex = vec![
            pt([1, 0, 0, 0]),
            pt([0, 1, 0, 0]),
            pt([0, 0, 1, 0]),
            pt([0, 0, 0, 1]),
        ];
        assert!(matches!(
            nondegeneracy_check(&simplex),
            NondegeneracyOutcome::Pass
        ));
        let collinear = vec![pt([1, 0, 0, 0]), pt([0, 1, 0, 0]), pt([1, 1, 0, 0])];
        match nondegeneracy_check(&collinear) {
            NondegeneracyOutcome::CollinearTriple(w) => assert_eq!(w.len(), 3),
            other => panic!("expected collinear witness, got {other:?}"),
        }
        let coplanar = vec![
            pt([1, 0, 0, 0]),
            pt([0, 1, 0, 0]),
            pt([0, 0, 1, 0]),
            pt([1, 1, 1, 0]),
            pt([1, 2, 3, 0]),
            pt([0, 0, 0, 1]),
        ];
        assert!(matches!(
            nondegeneracy_check(&coplanar),
            NondegeneracyOutcome::CoplanarQuintuple(_)
        ));
    }

    #[test]
    fn prime_field_points_pass_nondegeneracy() {
        let f = Field::Fp(2);
        let n = Net::parse("(X+Y+Z)*W", "(X+Y+W)*Z", "(X+Z+W)*Y", f).unwrap();
        let search = find_rational_basepoints(&n).unwrap();
        assert!(matches!(
            nondegeneracy_check(&search.points),
            NondegeneracyOutcome::Pass
        ));
    }
}
