//! Singular members of a net and the rank of the group of sections of the
//! associated elliptic fibration.
//!
//! A net with eight basepoints counted with multiplicity determines an
//! elliptic threefold fibered over the plane of net coordinates. The rank
//! of its group of sections is n - d - 1, where n is the number of distinct
//! basepoints and d the number of rank-2 members of the net; the fibration
//! is extremal exactly when that rank is 0. The singular members relevant
//! to the fiber geometry split into four counts: double planes (A), rank-2
//! members singular at some basepoint (B), rank-2 members smooth along the
//! base locus (C), and irreducible cones with vertex at a basepoint (D).

use crate::baselocus::{net_type, BasepointChain, Completeness, NetType};
use crate::error::{Error, Result};
use crate::exact::scalar::{Field, Scalar};
use crate::quadric::{
    proj_tuples, singular_member_at, Net, PlaneFactorization, ProjPoint, SingularMember,
};
use crate::quartic::{discriminant_quartic, singular_points};

/// Shape of a singular member of a net.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularShape {
    /// A rank-1 member: a plane counted twice (normalized linear form).
    DoublePlane { plane: [Scalar; 4] },
    /// A rank-2 member splitting into two rational planes.
    TwoPlanes { planes: [[Scalar; 4]; 2] },
    /// A rank-2 member whose two planes are conjugate over a quadratic
    /// extension of the ground field.
    ConjugatePlanePair,
    /// A rank-3 member: an irreducible cone.
    Cone { vertex: ProjPoint },
}

/// A rank-2 member of the net, located by its net coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Member {
    lambda: [Scalar; 3],
    shape: SingularShape,
}

impl Rank2Member {
    /// Normalized net coordinates of the member.
    pub fn lambda(&self) -> &[Scalar; 3] {
        &self.lambda
    }

    /// Always `TwoPlanes` or `ConjugatePlanePair`.
    pub fn shape(&self) -> &SingularShape {
        &self.shape
    }
}

/// The rank-2 members of a net together with a completeness certificate.
#[derive(Clone, Debug)]
pub struct Rank2Enumeration {
    members: Vec<Rank2Member>,
    completeness: Completeness,
}

impl Rank2Enumeration {
    pub fn members(&self) -> &[Rank2Member] {
        &self.members
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }
}

/// A singular member of the net with its incidence to the base locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularMemberReport {
    lambda: [Scalar; 3],
    shape: SingularShape,
    on_chains: Vec<usize>,
}

impl SingularMemberReport {
    /// Normalized net coordinates of the member.
    pub fn lambda(&self) -> &[Scalar; 3] {
        &self.lambda
    }

    pub fn shape(&self) -> &SingularShape {
        &self.shape
    }

    /// Indices (into the chain list) of the basepoints lying in the
    /// member's singular locus.
    pub fn on_chains(&self) -> &[usize] {
        &self.on_chains
    }
}

/// The four singular-member counts of a net.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MemberCounts {
    /// A: rank-1 members (each contains the whole base locus).
    pub double_planes: u32,
    /// B: rank-2 members whose singular line passes through a basepoint.
    pub rank2_singular_at_base: u32,
    /// C: rank-2 members whose singular line avoids the base locus.
    pub rank2_smooth_at_base: u32,
    /// D: cones with vertex at a basepoint.
    pub cones: u32,
}

impl MemberCounts {
    /// d: the number of rank-2 members.
    pub fn rank2(&self) -> u32 {
        self.rank2_singular_at_base + self.rank2_smooth_at_base
    }

    /// The total count A + B + C + D, which equals the number of connected
    /// components of the configuration of vertical divisor classes.
    pub fn h0(&self) -> u32 {
        self.double_planes + self.rank2() + self.cones
    }
}

/// Full analysis of a net: basepoint structure, singular members, and the
/// section rank n - d - 1.
#[derive(Clone, Debug)]
pub struct RankReport {
    net_type: NetType,
    chains: Vec<BasepointChain>,
    counts: MemberCounts,
    members: Vec<SingularMemberReport>,
}

impl RankReport {
    pub fn net_type(&self) -> &NetType {
        &self.net_type
    }

    pub fn chains(&self) -> &[BasepointChain] {
        &self.chains
    }

    pub fn counts(&self) -> MemberCounts {
        self.counts
    }

    pub fn members(&self) -> &[SingularMemberReport] {
        &self.members
    }

    /// n: the number of distinct basepoints.
    pub fn basepoint_count(&self) -> usize {
        self.chains.len()
    }

    /// d: the number of rank-2 members.
    pub fn rank2_count(&self) -> usize {
        self.counts.rank2() as usize
    }

    /// The section rank n - d - 1.
    pub fn rank(&self) -> i64 {
        self.basepoint_count() as i64 - self.rank2_count() as i64 - 1
    }

    /// Extremal means the section group has rank 0.
    pub fn is_extremal(&self) -> bool {
        self.rank() == 0
    }
}

/// Enumerate the rank-2 members of a net.
///
/// Over a prime field this is an exhaustive scan of the net plane and is
/// always certified. Over the rationals the rank-2 members are recovered as
/// singular points of the discriminant quartic; the result is certified
/// exactly when the singular-point solve is.
pub fn enumerate_rank2(net: &Net) -> Result<Rank2Enumeration> {
    let mut members = match net.field() {
        Field::Fp(p) => scan_rank2(net, p),
        Field::Rational => return quartic_rank2(net),
    };
    sort_by_lambda(&mut members);
    Ok(Rank2Enumeration {
        members,
        completeness: Completeness::Certified,
    })
}

fn scan_rank2(net: &Net, p: u64) -> Vec<Rank2Member> {
    let field = net.field();
    let mut members = Vec::new();
    for tuple in proj_tuples(p, 3) {
        let lambda: [Scalar; 3] =
            std::array::from_fn(|i| Scalar::from_i64(field, tuple[i] as i64));
        match net.member(&lambda).factor_into_planes() {
            PlaneFactorization::TwoPlanes(l, m) => members.push(Rank2Member {
                lambda,
                shape: SingularShape::TwoPlanes { planes: [l, m] },
            }),
            PlaneFactorization::Irreducible {
                splits_over_extension: true,
            } => members.push(Rank2Member {
                lambda,
                shape: SingularShape::ConjugatePlanePair,
            }),
            _ => {}
        }
    }
    members
}

fn quartic_rank2(net: &Net) -> Result<Rank2Enumeration> {
    let delta = discriminant_quartic(net)?;
    let (points, completeness) = singular_points(&delta)?;
    let mut members = Vec::new();
    for point in points {
        let lambda = point.coords().clone();
        let member = net.member(&lambda);
        if member.polar_rank() != 2 {
            continue; // a double plane or a tangency point of the quartic
        }
        match member.factor_into_planes() {
            PlaneFactorization::TwoPlanes(l, m) => members.push(Rank2Member {
                lambda,
                shape: SingularShape::TwoPlanes { planes: [l, m] },
            }),
            PlaneFactorization::Irreducible {
                splits_over_extension: true,
            } => members.push(Rank2Member {
                lambda,
                shape: SingularShape::ConjugatePlanePair,
            }),
            other => unreachable!("rank-2 member with factorization {other:?}"),
        }
    }
    sort_by_lambda(&mut members);
    Ok(Rank2Enumeration {
        members,
        completeness,
    })
}

fn sort_by_lambda(members: &mut [Rank2Member]) {
    members.sort_by(|a, b| cmp_lambda(&a.lambda, &b.lambda));
}

fn cmp_lambda(a: &[Scalar; 3], b: &[Scalar; 3]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let c = x.cmp_same_field(y);
        if c != std::cmp::Ordering::Equal {
            return c;
        }
    }
    std::cmp::Ordering::Equal
}

/// Classify the singular members of a net against its basepoint chains,
/// producing the counts (A, B, C, D) and a report per member.
///
/// Rank-2 members are sorted into B or C by whether their singular line
/// meets a basepoint; double planes and cones are found through the unique
/// singular member at each basepoint.
pub fn classify_singular_members(
    net: &Net,
    chains: &[BasepointChain],
) -> Result<(MemberCounts, Vec<SingularMemberReport>)> {
    let rank2 = enumerate_rank2(net)?;
    if rank2.completeness == Completeness::Incomplete {
        return Err(Error::Incomplete(
            "rank-2 member enumeration is not certified over this field".into(),
        ));
    }
    let mut counts = MemberCounts {
        double_planes: 0,
        rank2_singular_at_base: 0,
        rank2_smooth_at_base: 0,
        cones: 0,
    };
    let mut reports = Vec::new();
    for member in &rank2.members {
        let locus = net.member(&member.lambda).singular_locus();
        let on_chains: Vec<usize> = chains
            .iter()
            .enumerate()
            .filter(|(_, c)| locus.contains(c.point()))
            .map(|(i, _)| i)
            .collect();
        if on_chains.is_empty() {
            counts.rank2_smooth_at_base += 1;
        } else {
            counts.rank2_singular_at_base += 1;
        }
        reports.push(SingularMemberReport {
            lambda: member.lambda.clone(),
            shape: member.shape.clone(),
            on_chains,
        });
    }
    let mut double_planes: Vec<[Scalar; 3]> = Vec::new();
    for (i, chain) in chains.iter().enumerate() {
        let lambda = match singular_member_at(net, chain.point())? {
            SingularMember::None => continue,
            SingularMember::Violation => {
                return Err(Error::Assumption1Violation {
                    point: chain.point().to_string(),
                })
            }
            SingularMember::Unique(lambda) => lambda,
        };
        let member = net.member(&lambda);
        match member.factor_into_planes() {
            PlaneFactorization::DoublePlane(plane) => {
                if double_planes.contains(&lambda) {
                    continue; // the same plane shows up at every basepoint
                }
                double_planes.push(lambda.clone());
                let locus = member.singular_locus();
                let on_chains: Vec<usize> = chains
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| locus.contains(c.point()))
                    .map(|(j, _)| j)
                    .collect();
                counts.double_planes += 1;
                reports.push(SingularMemberReport {
                    lambda,
                    shape: SingularShape::DoublePlane { plane },
                    on_chains,
                });
            }
            PlaneFactorization::TwoPlanes(..)
            | PlaneFactorization::Irreducible {
                splits_over_extension: true,
            } => {
                // a rank-2 member singular here: already enumerated above
                debug_assert!(rank2.members.iter().any(|m| m.lambda == lambda));
            }
            PlaneFactorization::Irreducible {
                splits_over_extension: false,
            } => {
                // irreducible and singular at the basepoint: a cone whose
                // vertex is exactly this point
                counts.cones += 1;
                reports.push(SingularMemberReport {
                    lambda,
                    shape: SingularShape::Cone {
                        vertex: chain.point().clone(),
                    },
                    on_chains: vec![i],
                });
            }
        }
    }
    reports.sort_by(|a, b| cmp_lambda(&a.lambda, &b.lambda));
    Ok((counts, reports))
}

/// Analyze a net end to end: basepoint chains, singular-member counts, and
/// the section rank n - d - 1.
pub fn mordell_weil_rank(net: &Net) -> Result<RankReport> {
    let (ty, chains) = net_type(net)?;
    let (counts, members) = classify_singular_members(net, &chains)?;
    Ok(RankReport {
        net_type: ty,
        chains,
        counts,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(q1: &str, q2: &str, q3: &str) -> Net {
        Net::parse(q1, q2, q3, Field::Rational).unwrap()
    }

    fn lam(coords: [i64; 3]) -> [Scalar; 3] {
        std::array::from_fn(|i| Scalar::from_i64(Field::Rational, coords[i]))
    }

    #[test]
    fn simplex_net_has_three_plane_pairs() {
        let n = net("X*Y", "Z*W", "X*Z+X*W+Y*Z+Y*W");
        let rank2 = enumerate_rank2(&n).unwrap();
        assert_eq!(rank2.completeness(), Completeness::Certified);
        let lambdas: Vec<&[Scalar; 3]> =
            rank2.members().iter().map(|m| m.lambda()).collect();
        assert_eq!(lambdas, vec![&lam([0, 0, 1]), &lam([0, 1, 0]), &lam([1, 0, 0])]);
        assert!(rank2
            .members()
            .iter()
            .all(|m| matches!(m.shape(), SingularShape::TwoPlanes { .. })));
    }

    #[test]
    fn simplex_net_counts_and_incidence() {
        let n = net("X*Y", "Z*W", "X*Z+X*W+Y*Z+Y*W");
        let report = mordell_weil_rank(&n).unwrap();
        assert_eq!(report.net_type().to_string(), "{2,2,2,2}");
        assert_eq!(
            report.counts(),
            MemberCounts {
                double_planes: 0,
                rank2_singular_at_base: 2,
                rank2_smooth_at_base: 1,
                cones: 0,
            }
        );
        // chains are sorted by coordinates: [0,0,0,1], [0,0,1,0],
        // [0,1,0,0], [1,0,0,0]; X*Y is singular along X = Y = 0 (the last
        // two), Z*W along Z = W = 0 (the first two as seen from the line)
        let on: Vec<&[usize]> =
            report.members().iter().map(|m| m.on_chains()).collect();
        assert_eq!(on, vec![&[] as &[usize], &[2, 3], &[0, 1]]);
        assert_eq!(report.basepoint_count(), 4);
        assert_eq!(report.rank2_count(), 3);
        assert_eq!(report.rank(), 0);
        assert!(report.is_extremal());
    }

    #[test]
    fn double_plane_spans_the_whole_base_locus() {
        let n = net("Z^2", "X*Y+X*W+Y*W", "X*Z+Y^2+2*Y*W+W^2");
        let report = mordell_weil_rank(&n).unwrap();
        assert_eq!(report.net_type().to_string(), "{8}");
        assert_eq!(
            report.counts(),
            MemberCounts {
                double_planes: 1,
                rank2_singular_at_base: 0,
                rank2_smooth_at_base: 0,
                cones: 0,
            }
        );
        let m = &report.members()[0];
        assert_eq!(m.lambda(), &lam([1, 0, 0]));
        let plane: [Scalar; 4] =
            std::array::from_fn(|i| Scalar::from_i64(Field::Rational, [0, 0, 1, 0][i]));
        assert_eq!(m.shape(), &SingularShape::DoublePlane { plane });
        assert_eq!(m.on_chains(), &[0]);
        assert_eq!(report.rank(), 0); // n = 1, d = 0
        assert_eq!(report.counts().h0(), 1);
    }

    #[test]
    fn cone_vertex_at_the_unique_basepoint() {
        let n = net("Y*Z+W^2", "X*Z+Y*W", "X*W-Y^2+Z^2");
        let rank2 = enumerate_rank2(&n).unwrap();
        assert!(rank2.members().is_empty());
        assert_eq!(rank2.completeness(), Completeness::Certified);
        let report = mordell_weil_rank(&n).unwrap();
        assert_eq!(report.net_type().to_string(), "{8}");
        assert_eq!(
            report.counts(),
            MemberCounts {
                double_planes: 0,
                rank2_singular_at_base: 0,
                rank2_smooth_at_base: 0,
                cones: 1,
            }
        );
        let m = &report.members()[0];
        match m.shape() {
            SingularShape::Cone { vertex } => {
                assert_eq!(vertex, report.chains()[0].point())
            }
            other => panic!("expected a cone, got {other:?}"),
        }
        assert!(report.is_extremal());
    }

    #[test]
    fn mixed_counts_for_two_chain_nets() {
        // one rank-2 member singular at the first basepoint plus one cone
        let report = mordell_weil_rank(&net("Y*Z", "X*Z+W^2", "X*Y+Z^2")).unwrap();
        assert_eq!(report.net_type().to_string(), "{6,2}");
        assert_eq!(
            report.counts(),
            MemberCounts {
                double_planes: 0,
                rank2_singular_at_base: 1,
                rank2_smooth_at_base: 0,
                cones: 1,
            }
        );
        assert_eq!(report.basepoint_count(), 2);
        assert_eq!(report.rank2_count(), 1);
        assert!(report.is_extremal());

        // a double plane coexisting with a rank-2 member smooth at the base
        let report = mordell_weil_rank(&net("X*Y", "Z^2", "X*Z+Y*Z+W^2")).unwrap();
        assert_eq!(report.net_type().to_string(), "{4,4}");
        assert_eq!(
            report.counts(),
            MemberCounts {
                double_planes: 1,
                rank2_singular_at_base: 0,
                rank2_smooth_at_base: 1,
                cones: 0,
            }
        );
        assert!(report.is_extremal());
    }

    #[test]
    fn three_chain_net_with_two_cones() {
        let report = mordell_weil_rank(&net("X*Y+X*Z", "Y*Z", "X*Z+Y*Z+W^2")).unwrap();
        assert_eq!(report.net_type().to_string(), "{4,2,2}");
        assert_eq!(
            report.counts(),
            MemberCounts {
                double_planes: 0,
                rank2_singular_at_base: 1,
                rank2_smooth_at_base: 1,
                cones: 2,
            }
        );
        assert_eq!(report.basepoint_count(), 3);
        assert_eq!(report.rank2_count(), 2);
        assert_eq!(report.rank(), 0);
        assert_eq!(report.counts().h0(), 4);
        // h0 = A + D + n - 1 whenever d = n - 1
        assert_eq!(report.counts().h0(), 0 + 2 + 3 - 1);
    }

    #[test]
    fn generic_net_has_rank_seven() {
        // the net through [1,0,0,0], [0,1,0,0], [0,0,1,0], [0,0,0,1],
        // [1,1,1,1], [1,2,4,7], [3,1,-2,2]: eight simple basepoints (the
        // eighth is the residual intersection point) and no singular member
        // anywhere near the base locus
        let n = net(
            "36*X*Y-43*X*Z-44*X*W+51*Y*Z",
            "96*X*Y-41*X*Z-106*X*W+51*Y*W",
            "282*X*Y-113*X*Z-220*X*W+51*Z*W",
        );
        let report = mordell_weil_rank(&n).unwrap();
        assert_eq!(report.net_type().to_string(), "{1,1,1,1,1,1,1,1}");
        assert_eq!(report.basepoint_count(), 8);
        assert_eq!(report.rank2_count(), 0);
        assert_eq!(report.counts().h0(), 0);
        assert_eq!(report.rank(), 7);
        assert!(!report.is_extremal());
    }

    #[test]
    fn prime_field_scan_is_exhaustive() {
        let n = Net::parse("(X+Y+Z)*W", "(X+Y+W)*Z", "(X+Z+W)*Y", Field::Fp(2)).unwrap();
        let rank2 = enumerate_rank2(&n).unwrap();
        assert_eq!(rank2.members().len(), 7);
        assert_eq!(rank2.completeness(), Completeness::Certified);
        assert!(rank2
            .members()
            .iter()
            .all(|m| matches!(m.shape(), SingularShape::TwoPlanes { .. })));
        let report = mordell_weil_rank(&n).unwrap();
        assert_eq!(report.net_type().to_string(), "{1,1,1,1,1,1,1,1}");
        assert_eq!(
            report.counts(),
            MemberCounts {
                double_planes: 0,
                rank2_singular_at_base: 0,
                rank2_smooth_at_base: 7,
                cones: 0,
            }
        );
        assert_eq!(report.basepoint_count(), 8);
        assert_eq!(report.rank2_count(), 7);
        assert!(report.is_extremal());
    }
}
