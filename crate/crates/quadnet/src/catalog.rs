//! Built-in catalog of the twelve standard extremal nets and the end-to-end
//! verification pipeline that recomputes every classified invariant from the
//! three quadratic forms alone: base-locus type, singular-member census,
//! configuration graph with fiber sums, the section group by two independent
//! routes, and (away from characteristic 2) the discriminant quartic with
//! its singularity root system.
//!
//! Each entry freezes the expected values. `verify_entry` never trusts them:
//! it reruns the whole analysis and reports one named check per comparison,
//! capturing any stage error in the report instead of panicking. A report is
//! green exactly when no applicable check fails; checks that do not apply
//! (the discriminant checks in characteristic 2, plane incidence labels over
//! the rationals) are recorded as skipped. Entries verify independently, so
//! `verify_catalog` runs them on one thread each and merges the reports in
//! catalog order. The same module drives reruns of the rational entries over
//! small prime fields, skipping primes of bad reduction by detection.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::baselocus::{
    find_rational_basepoints, net_type, nondegeneracy_check, BasepointChain, Completeness,
    NondegeneracyOutcome,
};
use crate::error::{Error, Result};
use crate::exact::linalg::rank;
use crate::exact::{AbelianGroup, Field, Scalar};
use crate::lattice::{
    build_config_graph, mw_group_from_config, parse_label, verify_fiber_sums, DivisorClass,
};
use crate::mordell::{mordell_weil_rank, RankReport, SingularShape};
use crate::quadric::{assumption1_check, Assumption1Outcome, Net, ProjPoint};
use crate::quartic::{
    discriminant_quartic, quartic_root_system, CubicShape, PlanePoint, PlaneQuartic,
};
use crate::roots::{affine_extensions, finite_index_subsystems_e7, quotient_group, TypeList};

/// Kind of singular member a catalog entry expects at a frozen pencil point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpectedKind {
    /// Rank 1: a plane counted twice, containing the whole base locus.
    DoublePlane,
    /// Rank 2: a pair of distinct planes over the base field.
    PlanePair,
}

/// A rank-at-most-2 member the catalog pins down: its pencil coordinates,
/// its kind, the chains (by first index) at whose points it is singular,
/// and, when the base points are all simple, the labels of its two planes.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedMember {
    lambda: [i64; 3],
    kind: ExpectedKind,
    on: &'static [usize],
    planes: Option<[&'static str; 2]>,
}

/// A cone member the catalog pins down by its vertex basepoint.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedCone {
    vertex: [i64; 4],
    first_index: usize,
}

/// A singular point of the discriminant quartic with its frozen invariants.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedSingularity {
    point: [i64; 3],
    tag: &'static str,
    milnor: u32,
    corank: u32,
    shape: Option<CubicShape>,
}

/// One catalog entry: a standard net and every value the pipeline must
/// reproduce from it.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    label: &'static str,
    field: Field,
    forms: [&'static str; 3],
    type_string: &'static str,
    chains: &'static [([i64; 4], u32, usize)],
    counts: (u32, u32, u32, u32),
    members: &'static [ExpectedMember],
    cones: &'static [ExpectedCone],
    root_lattice: &'static str,
    config_type: &'static str,
    mw_torsion: &'static [u64],
    table2_nodes: &'static [&'static str],
    quartic: Option<&'static str>,
    quartic_basis: Option<[&'static str; 3]>,
    singularities: &'static [ExpectedSingularity],
}

impl CatalogEntry {
    pub fn label(&self) -> &'static str {
        self.label
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn forms(&self) -> [&'static str; 3] {
        self.forms
    }

    pub fn root_lattice(&self) -> &'static str {
        self.root_lattice
    }

    pub fn config_type(&self) -> &'static str {
        self.config_type
    }

    pub fn mw_torsion(&self) -> &'static [u64] {
        self.mw_torsion
    }

    pub fn table2_nodes(&self) -> &'static [&'static str] {
        self.table2_nodes
    }

    /// The frozen discriminant quartic, absent for the characteristic-2 entry.
    pub fn quartic(&self) -> Option<&'static str> {
        self.quartic
    }

    /// Parse the entry's three forms over its own field.
    pub fn net(&self) -> Result<Net> {
        Net::parse(self.forms[0], self.forms[1], self.forms[2], self.field)
    }
}

/// Outcome of one named comparison inside an entry report.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One named check with its outcome and a human-readable detail line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

/// Verification report for a single catalog entry.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EntryReport {
    pub label: String,
    pub field: String,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl EntryReport {
    /// Green means no applicable check failed; skipped checks do not count.
    pub fn is_green(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}  [{}]  {}  ({} ms)",
            self.label,
            self.field,
            if self.is_green() { "green" } else { "RED" },
            self.elapsed_ms
        )?;
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            writeln!(f, "  {status}  {:<22} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Outcome of rerunning a rational entry over a prime field.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RerunOutcome {
    /// Type, d and rank all reproduced.
    Verified { type_string: String, d: u32, rho: i64 },
    /// Bad reduction detected; the prime is skipped for this entry.
    Skipped { reason: String },
    /// Reduction looked fine but the invariants came out different.
    Mismatch { detail: String },
}

/// Report of one entry rerun over one prime.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RerunReport {
    pub label: String,
    pub prime: u64,
    pub outcome: RerunOutcome,
}

impl fmt::Display for RerunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            RerunOutcome::Verified { type_string, d, rho } => write!(
                f,
                "{}  over GF({}): verified (type {type_string}, d = {d}, rank = {rho})",
                self.label, self.prime
            ),
            RerunOutcome::Skipped { reason } => write!(
                f,
                "{}  over GF({}): skipped, {reason}",
                self.label, self.prime
            ),
            RerunOutcome::Mismatch { detail } => write!(
                f,
                "{}  over GF({}): MISMATCH, {detail}",
                self.label, self.prime
            ),
        }
    }
}

/// Combined report: every entry plus the prime-field reruns.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
    pub reruns: Vec<RerunReport>,
}

impl CatalogReport {
    pub fn is_green(&self) -> bool {
        self.entries.iter().all(|e| e.is_green())
            && self
                .reruns
                .iter()
                .all(|r| !matches!(r.outcome, RerunOutcome::Mismatch { .. }))
    }
}

impl fmt::Display for CatalogReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let green = self.entries.iter().filter(|e| e.is_green()).count();
        writeln!(f, "catalog: {green}/{} entries green", self.entries.len())?;
        for e in &self.entries {
            writeln!(f)?;
            write!(f, "{e}")?;
        }
        if !self.reruns.is_empty() {
            writeln!(f)?;
            writeln!(f, "prime-field reruns:")?;
            for r in &self.reruns {
                writeln!(f, "  {r}")?;
            }
        }
        Ok(())
    }
}

/// The catalog in table order: eleven rational entries and one over GF(2).
pub fn load_catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            label: "{8}_1",
            field: Field::Rational,
            forms: ["Z^2", "X*(Y+W)+Y*W", "X*Z+(Y+W)^2"],
            type_string: "{8}",
            chains: &[([1, 0, 0, 0], 8, 1)],
            counts: (1, 0, 0, 0),
            members: &[ExpectedMember {
                lambda: [1, 0, 0],
                kind: ExpectedKind::DoublePlane,
                on: &[1],
                planes: None,
            }],
            cones: &[],
            root_lattice: "E7",
            config_type: "~E7",
            mw_torsion: &[],
            table2_nodes: &["h1234", "e12", "e23", "e34", "e45", "e56", "e67", "e78"],
            quartic: Some("l2*(4*l1*l2^2+l2*l3^2+4*l3^3)"),
            quartic_basis: None,
            singularities: &[ExpectedSingularity {
                point: [1, 0, 0],
                tag: "E7",
                milnor: 7,
                corank: 2,
                shape: Some(CubicShape::TripleRoot),
            }],
        },
        CatalogEntry {
            label: "{8}_2",
            field: Field::Rational,
            forms: ["Y*Z+W^2", "X*Z+Y*W", "X*W-Y^2+Z^2"],
            type_string: "{8}",
            chains: &[([1, 0, 0, 0], 8, 1)],
            counts: (0, 0, 0, 1),
            members: &[],
            cones: &[ExpectedCone {
                vertex: [1, 0, 0, 0],
                first_index: 1,
            }],
            root_lattice: "A7",
            config_type: "~A7",
            mw_torsion: &[2],
            table2_nodes: &["c1", "e12", "e23", "e34", "e45", "e56", "e67", "e78"],
            quartic: Some("l2^4+2*l1*l2^2*l3+l1^2*l3^2+4*l3^4"),
            quartic_basis: None,
            singularities: &[ExpectedSingularity {
                point: [1, 0, 0],
                tag: "A7",
                milnor: 7,
                corank: 1,
                shape: None,
            }],
        },
        CatalogEntry {
            label: "{4,4}_1",
            field: Field::Rational,
            forms: ["Z*W", "X*Z+Y*W", "X*Y+Z^2+W^2"],
            type_string: "{4,4}",
            chains: &[([0, 1, 0, 0], 4, 1), ([1, 0, 0, 0], 4, 5)],
            counts: (0, 1, 0, 0),
            members: &[ExpectedMember {
                lambda: [1, 0, 0],
                kind: ExpectedKind::PlanePair,
                on: &[1, 5],
                planes: None,
            }],
            cones: &[],
            root_lattice: "A7",
            config_type: "~A7",
            mw_torsion: &[2],
            table2_nodes: &["h1567", "e12", "e23", "e34", "h1235", "e56", "e67", "e78"],
            quartic: Some("(l2^2-l1*l3+2*l3^2)*(l2^2-l1*l3-2*l3^2)"),
            quartic_basis: None,
            singularities: &[ExpectedSingularity {
                point: [1, 0, 0],
                tag: "A7",
                milnor: 7,
                corank: 1,
                shape: None,
            }],
        },
        CatalogEntry {
            label: "{6,2}",
            field: Field::Rational,
            forms: ["Y*Z", "X*Z+W^2", "X*Y+Z^2"],
            type_string: "{6,2}",
            chains: &[([1, 0, 0, 0], 6, 1), ([0, 1, 0, 0], 2, 7)],
            counts: (0, 1, 0, 1),
            members: &[ExpectedMember {
                lambda: [1, 0, 0],
                kind: ExpectedKind::PlanePair,
                on: &[1],
                planes: None,
            }],
            cones: &[ExpectedCone {
                vertex: [0, 1, 0, 0],
                first_index: 7,
            }],
            root_lattice: "D6+A1",
            config_type: "~D6+~A1",
            mw_torsion: &[2],
            table2_nodes: &[
                "e12", "h1278", "e23", "e34", "e45", "e56", "h1234", "e78", "c7",
            ],
            quartic: Some("l2*l3*(l1*l2-l3^2)"),
            quartic_basis: None,
            singularities: &[
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "D6",
                    milnor: 6,
                    corank: 2,
                    shape: Some(CubicShape::DoubleRoot),
                },
            ],
        },
        CatalogEntry {
            label: "{4,4}_2",
            field: Field::Rational,
            forms: ["X*Y", "Z^2", "(X+Y)*Z+W^2"],
            type_string: "{4,4}",
            chains: &[([0, 1, 0, 0], 4, 1), ([1, 0, 0, 0], 4, 5)],
            counts: (1, 0, 1, 0),
            members: &[
                ExpectedMember {
                    lambda: [0, 1, 0],
                    kind: ExpectedKind::DoublePlane,
                    on: &[1, 5],
                    planes: None,
                },
                ExpectedMember {
                    lambda: [1, 0, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: None,
                },
            ],
            cones: &[],
            root_lattice: "D6+A1",
            config_type: "~D6+~A1",
            mw_torsion: &[2],
            table2_nodes: &[
                "e12", "e34", "e23", "h1256", "e67", "e56", "e78", "h1234", "h5678",
            ],
            quartic: Some("l1*l3*(l1*l2-l3^2)"),
            quartic_basis: None,
            singularities: &[
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "D6",
                    milnor: 6,
                    corank: 2,
                    shape: Some(CubicShape::DoubleRoot),
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
            ],
        },
        CatalogEntry {
            label: "{5,3}",
            field: Field::Rational,
            forms: ["Y*Z", "X*W+Z^2", "X*Y+W^2"],
            type_string: "{5,3}",
            chains: &[([1, 0, 0, 0], 5, 1), ([0, 1, 0, 0], 3, 6)],
            counts: (0, 1, 0, 1),
            members: &[ExpectedMember {
                lambda: [1, 0, 0],
                kind: ExpectedKind::PlanePair,
                on: &[1],
                planes: None,
            }],
            cones: &[ExpectedCone {
                vertex: [0, 1, 0, 0],
                first_index: 6,
            }],
            root_lattice: "A5+A2",
            config_type: "~A5+~A2",
            mw_torsion: &[3],
            table2_nodes: &[
                "h1678", "e12", "e23", "e34", "e45", "h1234", "e67", "e78", "c6",
            ],
            quartic: Some("l2*(l1^2*l2-4*l3^3)"),
            quartic_basis: None,
            singularities: &[
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "A2",
                    milnor: 2,
                    corank: 1,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "A5",
                    milnor: 5,
                    corank: 1,
                    shape: None,
                },
            ],
        },
        CatalogEntry {
            label: "{3,3,2}_1",
            field: Field::Rational,
            forms: ["X*Y", "Z*W", "(X+Y)*Z+W^2"],
            type_string: "{3,3,2}",
            chains: &[
                ([0, 1, 0, 0], 3, 1),
                ([1, 0, 0, 0], 3, 4),
                ([0, 0, 1, 0], 2, 7),
            ],
            counts: (0, 2, 0, 0),
            members: &[
                ExpectedMember {
                    lambda: [0, 1, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[1, 4],
                    planes: None,
                },
                ExpectedMember {
                    lambda: [1, 0, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[7],
                    planes: None,
                },
            ],
            cones: &[],
            root_lattice: "A5+A2",
            config_type: "~A5+~A2",
            mw_torsion: &[3],
            table2_nodes: &[
                "h1478", "e12", "e23", "h1245", "e56", "e45", "e78", "h1237", "h4567",
            ],
            quartic: Some("l1*(l1*l2^2-4*l3^3)"),
            quartic_basis: Some(["X*Y", "W*Z", "-W^2-X*Z-Y*Z"]),
            singularities: &[
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "A5",
                    milnor: 5,
                    corank: 1,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "A2",
                    milnor: 2,
                    corank: 1,
                    shape: None,
                },
            ],
        },
        CatalogEntry {
            label: "{4,2,2}",
            field: Field::Rational,
            forms: ["X*(Y+Z)", "Y*Z", "(X+Y)*Z+W^2"],
            type_string: "{4,2,2}",
            chains: &[
                ([1, 0, 0, 0], 4, 1),
                ([0, 0, 1, 0], 2, 5),
                ([0, 1, 0, 0], 2, 7),
            ],
            counts: (0, 1, 1, 2),
            members: &[
                ExpectedMember {
                    lambda: [0, 1, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[1],
                    planes: None,
                },
                ExpectedMember {
                    lambda: [1, 0, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: None,
                },
            ],
            cones: &[
                ExpectedCone {
                    vertex: [0, 0, 1, 0],
                    first_index: 5,
                },
                ExpectedCone {
                    vertex: [0, 1, 0, 0],
                    first_index: 7,
                },
            ],
            root_lattice: "D4+3A1",
            config_type: "~D4+3~A1",
            mw_torsion: &[2, 2],
            table2_nodes: &[
                "e12", "e23", "e34", "h1256", "h1278", "h1234", "h5678", "e56", "c5", "e78", "c7",
            ],
            quartic: Some("l1*l2*l3*(l1+l2)"),
            quartic_basis: Some(["X*Y+X*Z", "W^2+X*Z", "Y*Z"]),
            singularities: &[
                ExpectedSingularity {
                    point: [0, 0, 1],
                    tag: "D4",
                    milnor: 4,
                    corank: 2,
                    shape: Some(CubicShape::ThreeDistinctRoots),
                },
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, -1, 0],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
            ],
        },
        CatalogEntry {
            label: "{4,4}_3",
            field: Field::Rational,
            forms: ["X*Y", "X*Z+W^2", "Y*W+Z^2"],
            type_string: "{4,4}",
            chains: &[([0, 1, 0, 0], 4, 1), ([1, 0, 0, 0], 4, 5)],
            counts: (0, 0, 1, 2),
            members: &[ExpectedMember {
                lambda: [1, 0, 0],
                kind: ExpectedKind::PlanePair,
                on: &[],
                planes: None,
            }],
            cones: &[
                ExpectedCone {
                    vertex: [0, 1, 0, 0],
                    first_index: 1,
                },
                ExpectedCone {
                    vertex: [1, 0, 0, 0],
                    first_index: 5,
                },
            ],
            root_lattice: "2A3+A1",
            config_type: "2~A3+~A1",
            mw_torsion: &[4],
            table2_nodes: &[
                "c1", "e12", "e23", "e34", "c5", "e56", "e67", "e78", "h1234", "h5678",
            ],
            quartic: Some("l2*l3*(l1^2-l2*l3)"),
            quartic_basis: Some(["X*Y", "W^2+X*Z", "4*W*Y+4*Z^2"]),
            singularities: &[
                ExpectedSingularity {
                    point: [0, 0, 1],
                    tag: "A3",
                    milnor: 3,
                    corank: 1,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "A3",
                    milnor: 3,
                    corank: 1,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
            ],
        },
        CatalogEntry {
            label: "{3,3,2}_2",
            field: Field::Rational,
            forms: ["Y*Z", "X*(Z+W)", "X*Y+W^2"],
            type_string: "{3,3,2}",
            chains: &[
                ([0, 1, 0, 0], 3, 1),
                ([1, 0, 0, 0], 3, 4),
                ([0, 0, 1, 0], 2, 7),
            ],
            counts: (0, 2, 0, 1),
            members: &[
                ExpectedMember {
                    lambda: [0, 1, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[1],
                    planes: None,
                },
                ExpectedMember {
                    lambda: [1, 0, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[4],
                    planes: None,
                },
            ],
            cones: &[ExpectedCone {
                vertex: [0, 0, 1, 0],
                first_index: 7,
            }],
            root_lattice: "2A3+A1",
            config_type: "2~A3+~A1",
            mw_torsion: &[4],
            table2_nodes: &[
                "h1456", "e12", "e23", "h1278", "h1234", "e45", "e56", "h4578", "e78", "c7",
            ],
            quartic: Some("l1*l2*(l1*l2+4*l3^2)"),
            quartic_basis: None,
            singularities: &[
                ExpectedSingularity {
                    point: [0, 0, 1],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "A3",
                    milnor: 3,
                    corank: 1,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "A3",
                    milnor: 3,
                    corank: 1,
                    shape: None,
                },
            ],
        },
        CatalogEntry {
            label: "{2,2,2,2}",
            field: Field::Rational,
            forms: ["X*Y", "Z*W", "(X+Y)*(Z+W)"],
            type_string: "{2,2,2,2}",
            chains: &[
                ([0, 0, 0, 1], 2, 1),
                ([0, 0, 1, 0], 2, 3),
                ([0, 1, 0, 0], 2, 5),
                ([1, 0, 0, 0], 2, 7),
            ],
            counts: (0, 2, 1, 0),
            members: &[
                ExpectedMember {
                    lambda: [0, 0, 1],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: None,
                },
                ExpectedMember {
                    lambda: [0, 1, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[5, 7],
                    planes: None,
                },
                ExpectedMember {
                    lambda: [1, 0, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[1, 3],
                    planes: None,
                },
            ],
            cones: &[],
            root_lattice: "2A3+A1",
            config_type: "2~A3+~A1",
            mw_torsion: &[4],
            table2_nodes: &[
                "h1378", "e12", "h1356", "e34", "h3457", "e56", "h1257", "e78", "h1234", "h5678",
            ],
            quartic: Some("l1*l2*(l1*l2-4*l3^2)"),
            quartic_basis: None,
            singularities: &[
                ExpectedSingularity {
                    point: [0, 0, 1],
                    tag: "A1",
                    milnor: 1,
                    corank: 0,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [0, 1, 0],
                    tag: "A3",
                    milnor: 3,
                    corank: 1,
                    shape: None,
                },
                ExpectedSingularity {
                    point: [1, 0, 0],
                    tag: "A3",
                    milnor: 3,
                    corank: 1,
                    shape: None,
                },
            ],
        },
        CatalogEntry {
            label: "{1,1,1,1,1,1,1,1}",
            field: Field::Fp(2),
            forms: ["(X+Y+Z)*W", "(X+Y+W)*Z", "(X+Z+W)*Y"],
            type_string: "{1,1,1,1,1,1,1,1}",
            chains: &[
                ([0, 0, 0, 1], 1, 1),
                ([0, 0, 1, 0], 1, 2),
                ([0, 1, 0, 0], 1, 3),
                ([0, 1, 1, 1], 1, 4),
                ([1, 0, 0, 0], 1, 5),
                ([1, 0, 1, 1], 1, 6),
                ([1, 1, 0, 1], 1, 7),
                ([1, 1, 1, 0], 1, 8),
            ],
            counts: (0, 0, 7, 0),
            members: &[
                ExpectedMember {
                    lambda: [0, 0, 1],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: Some(["h1256", "h3478"]),
                },
                ExpectedMember {
                    lambda: [0, 1, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: Some(["h1357", "h2468"]),
                },
                ExpectedMember {
                    lambda: [0, 1, 1],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: Some(["h1458", "h2367"]),
                },
                ExpectedMember {
                    lambda: [1, 0, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: Some(["h2358", "h1467"]),
                },
                ExpectedMember {
                    lambda: [1, 0, 1],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: Some(["h2457", "h1368"]),
                },
                ExpectedMember {
                    lambda: [1, 1, 0],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: Some(["h3456", "h1278"]),
                },
                ExpectedMember {
                    lambda: [1, 1, 1],
                    kind: ExpectedKind::PlanePair,
                    on: &[],
                    planes: Some(["h5678", "h1234"]),
                },
            ],
            cones: &[],
            root_lattice: "7A1",
            config_type: "7~A1",
            mw_torsion: &[2, 2, 2],
            table2_nodes: &[
                "h1256", "h3478", "h1357", "h2468", "h1458", "h2367", "h2358", "h1467", "h2457",
                "h1368", "h3456", "h1278", "h5678", "h1234",
            ],
            quartic: None,
            quartic_basis: None,
            singularities: &[],
        },
    ]
}

/// Look up a catalog entry by its label.
pub fn find_entry(label: &str) -> Option<CatalogEntry> {
    load_catalog().into_iter().find(|e| e.label == label)
}

/// Collects named check outcomes in pipeline order.
struct Checks {
    list: Vec<CheckResult>,
}

impl Checks {
    fn new() -> Checks {
        Checks { list: Vec::new() }
    }

    fn pass(&mut self, name: &str, detail: impl Into<String>) {
        self.list.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Pass,
            detail: detail.into(),
        });
    }

    fn fail(&mut self, name: &str, detail: impl Into<String>) {
        self.list.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Fail,
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.list.push(CheckResult {
            name: name.into(),
            status: CheckStatus::Skipped,
            detail: detail.into(),
        });
    }

    fn result(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        if ok {
            self.pass(name, detail);
        } else {
            self.fail(name, detail);
        }
    }
}

/// Run the full pipeline on one entry and compare against its frozen values.
pub fn verify_entry(entry: &CatalogEntry) -> EntryReport {
    let start = Instant::now();
    let mut checks = Checks::new();
    run_entry_checks(entry, &mut checks);
    EntryReport {
        label: entry.label.to_string(),
        field: entry.field.to_string(),
        checks: checks.list,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn run_entry_checks(entry: &CatalogEntry, checks: &mut Checks) {
    let net = match entry.net() {
        Ok(net) => {
            checks.pass("parse", "three quadrics span a net");
            net
        }
        Err(e) => {
            checks.fail("parse", e.to_string());
            return;
        }
    };

    let search = match find_rational_basepoints(&net) {
        Ok(s) => s,
        Err(e) => {
            checks.fail("assumption 1", format!("basepoint search failed: {e}"));
            return;
        }
    };
    match assumption1_check(&net, &search.points) {
        Ok(Assumption1Outcome::Pass) => checks.pass(
            "assumption 1",
            format!(
                "a unique singular member at each of {} basepoints",
                search.points.len()
            ),
        ),
        Ok(Assumption1Outcome::FailAt(p)) => {
            checks.fail("assumption 1", format!("violated at {p}"));
            return;
        }
        Err(e) => {
            checks.fail("assumption 1", e.to_string());
            return;
        }
    }

    match nondegeneracy_check(&search.points) {
        NondegeneracyOutcome::Pass => {
            checks.pass("nondegeneracy", "no collinear triple, no coplanar quintuple");
        }
        NondegeneracyOutcome::CollinearTriple(pts) => {
            checks.fail(
                "nondegeneracy",
                format!("collinear triple {}", point_list(&pts)),
            );
            return;
        }
        NondegeneracyOutcome::CoplanarQuintuple(pts) => {
            checks.fail(
                "nondegeneracy",
                format!("coplanar quintuple {}", point_list(&pts)),
            );
            return;
        }
    }

    let report = match mordell_weil_rank(&net) {
        Ok(r) => r,
        Err(e) => {
            checks.fail("type", format!("rank analysis failed: {e}"));
            return;
        }
    };
    check_type(entry, &report, search.completeness, checks);
    check_counts(entry, &report, checks);
    check_members(entry, &report, checks);

    let chains = report.chains();
    let nodes: Result<Vec<(String, DivisorClass)>> = entry
        .table2_nodes
        .iter()
        .map(|l| Ok((l.to_string(), parse_label(l, chains)?)))
        .collect();
    let nodes = match nodes {
        Ok(n) => n,
        Err(e) => {
            checks.fail("config graph", format!("node label failed to parse: {e}"));
            return;
        }
    };
    let graph = match build_config_graph(&nodes) {
        Ok(g) => g,
        Err(e) => {
            checks.fail("config graph", e.to_string());
            return;
        }
    };
    let mut component_types = Vec::new();
    for (component, recognized) in graph.dynkin_types() {
        match recognized {
            Some(t) => component_types.push(t),
            None => {
                let labels: Vec<&str> =
                    component.iter().map(|&i| graph.nodes()[i].label()).collect();
                checks.fail(
                    "config graph",
                    format!("component {{{}}} is not a Dynkin diagram", labels.join(", ")),
                );
                return;
            }
        }
    }
    let config = TypeList::new(component_types);
    let expected_config: TypeList = match entry.config_type.parse() {
        Ok(t) => t,
        Err(e) => {
            checks.fail("config graph", format!("bad frozen configuration type: {e}"));
            return;
        }
    };
    checks.result(
        "config graph",
        config == expected_config,
        format!("components recognize as {config}, expected {expected_config}"),
    );

    match verify_fiber_sums(&graph) {
        Ok(fibers) => {
            let bad: Vec<String> = fibers
                .iter()
                .filter(|f| !f.sum_matches())
                .map(|f| {
                    let labels: Vec<&str> =
                        f.nodes().iter().map(|&i| graph.nodes()[i].label()).collect();
                    format!("{{{}}}", labels.join(", "))
                })
                .collect();
            checks.result(
                "fiber sums",
                bad.is_empty(),
                if bad.is_empty() {
                    format!(
                        "all {} components sum to the half-anticanonical class",
                        fibers.len()
                    )
                } else {
                    format!("components {} miss the half-anticanonical class", bad.join(", "))
                },
            );
        }
        Err(e) => {
            checks.fail("fiber sums", e.to_string());
            return;
        }
    }

    let classes: Vec<DivisorClass> = nodes.iter().map(|(_, c)| *c).collect();
    match mw_group_from_config(&classes) {
        Ok(group) => check_group("MW (config route)", &group, entry.mw_torsion, checks),
        Err(e) => checks.fail("MW (config route)", e.to_string()),
    }

    check_subsystem_route(entry, checks);
    check_affine_extension(entry, checks);
    check_quartic(entry, &net, checks);
    check_coplanarity(entry, &report, checks);
}

fn point_list(pts: &[ProjPoint]) -> String {
    let parts: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
    parts.join(", ")
}

fn check_type(
    entry: &CatalogEntry,
    report: &RankReport,
    completeness: Completeness,
    checks: &mut Checks,
) {
    if completeness == Completeness::Incomplete {
        checks.fail("type", "basepoint search is not certified".to_string());
        return;
    }
    let got = report.net_type().to_string();
    if got != entry.type_string {
        checks.fail(
            "type",
            format!("computed type {got}, expected {}", entry.type_string),
        );
        return;
    }
    let chains = report.chains();
    if chains.len() != entry.chains.len() {
        checks.fail(
            "type",
            format!(
                "{} basepoint chains, expected {}",
                chains.len(),
                entry.chains.len()
            ),
        );
        return;
    }
    for (chain, &(coords, mult, first)) in chains.iter().zip(entry.chains) {
        let expected = match ProjPoint::from_ints(entry.field, coords) {
            Ok(p) => p,
            Err(e) => {
                checks.fail("type", format!("bad frozen basepoint: {e}"));
                return;
            }
        };
        if chain.point() != &expected
            || chain.multiplicity() != mult
            || chain.first_index() != first
        {
            checks.fail(
                "type",
                format!(
                    "chain at {} has multiplicity {} and first index {}, expected {expected} \
                     with multiplicity {mult} at index {first}",
                    chain.point(),
                    chain.multiplicity(),
                    chain.first_index()
                ),
            );
            return;
        }
    }
    checks.pass("type", format!("type {got} with the frozen chain labeling"));
}

fn check_counts(entry: &CatalogEntry, report: &RankReport, checks: &mut Checks) {
    let n = report.basepoint_count();
    let d = report.rank2_count();
    let (_, eb, ec, _) = entry.counts;
    let expected_d = (eb + ec) as usize;
    checks.result(
        "rank-2 count",
        d == expected_d && d + 1 == n,
        format!("d = {d} rank-2 members among n = {n} basepoints (expected d = n - 1 = {expected_d})"),
    );
    checks.result(
        "rank",
        report.rank() == 0 && report.is_extremal(),
        format!("section group rank {} (extremal wants 0)", report.rank()),
    );
    let counts = report.counts();
    let got = (
        counts.double_planes,
        counts.rank2_singular_at_base,
        counts.rank2_smooth_at_base,
        counts.cones,
    );
    let h0 = counts.h0();
    let sum = counts.double_planes + counts.rank2_singular_at_base + counts.rank2_smooth_at_base
        + counts.cones;
    checks.result(
        "member counts",
        got == entry.counts && h0 == sum,
        format!(
            "(A, B, C, D) = {got:?} with h0 = {h0}, expected {:?}",
            entry.counts
        ),
    );
}

fn check_members(entry: &CatalogEntry, report: &RankReport, checks: &mut Checks) {
    let field = entry.field;
    let chains = report.chains();
    let expected_total = entry.members.len() + entry.cones.len();
    if report.members().len() != expected_total {
        checks.fail(
            "singular members",
            format!(
                "{} singular members, expected {expected_total}",
                report.members().len()
            ),
        );
        return;
    }
    for expected in entry.members {
        let lambda = expected.lambda.map(|c| Scalar::from_i64(field, c));
        let Some(member) = report.members().iter().find(|m| m.lambda() == &lambda) else {
            checks.fail(
                "singular members",
                format!("no singular member at pencil point {:?}", expected.lambda),
            );
            return;
        };
        let kind_ok = match (expected.kind, member.shape()) {
            (ExpectedKind::DoublePlane, SingularShape::DoublePlane { .. }) => true,
            (ExpectedKind::PlanePair, SingularShape::TwoPlanes { .. }) => true,
            (ExpectedKind::PlanePair, SingularShape::ConjugatePlanePair) => true,
            _ => false,
        };
        if !kind_ok {
            checks.fail(
                "singular members",
                format!(
                    "member at {:?} has the wrong shape for {:?}",
                    expected.lambda, expected.kind
                ),
            );
            return;
        }
        let mut on: Vec<usize> = member
            .on_chains()
            .iter()
            .map(|&i| chains[i].first_index())
            .collect();
        on.sort_unstable();
        if on != expected.on {
            checks.fail(
                "singular members",
                format!(
                    "member at {:?} is singular at chains {on:?}, expected {:?}",
                    expected.lambda, expected.on
                ),
            );
            return;
        }
    }
    for expected in entry.cones {
        let vertex = match ProjPoint::from_ints(field, expected.vertex) {
            Ok(p) => p,
            Err(e) => {
                checks.fail("singular members", format!("bad frozen vertex: {e}"));
                return;
            }
        };
        let found = report.members().iter().any(|m| {
            matches!(m.shape(), SingularShape::Cone { vertex: v } if v == &vertex)
                && m.on_chains().len() == 1
                && chains[m.on_chains()[0]].first_index() == expected.first_index
        });
        if !found {
            checks.fail(
                "singular members",
                format!("no cone with vertex at the chain starting at index {}",
                    expected.first_index),
            );
            return;
        }
    }
    checks.pass(
        "singular members",
        format!("all {expected_total} singular members match the frozen census"),
    );
}

fn check_group(name: &str, group: &AbelianGroup, expected: &[u64], checks: &mut Checks) {
    let ok = group.free_rank == 0 && group.torsion == expected;
    checks.result(
        name,
        ok,
        format!(
            "free rank {} with invariant factors {:?}, expected rank 0 and {:?}",
            group.free_rank, group.torsion, expected
        ),
    );
}

fn check_subsystem_route(entry: &CatalogEntry, checks: &mut Checks) {
    let expected: TypeList = match entry.root_lattice.parse() {
        Ok(t) => t,
        Err(e) => {
            checks.fail("MW (subsystem route)", format!("bad frozen root lattice: {e}"));
            return;
        }
    };
    let Some(sub) = finite_index_subsystems_e7()
        .into_iter()
        .find(|s| s.type_list() == &expected)
    else {
        checks.fail(
            "MW (subsystem route)",
            format!("{expected} is not a finite-index subsystem"),
        );
        return;
    };
    match quotient_group(&sub) {
        Ok(group) => check_group("MW (subsystem route)", &group, entry.mw_torsion, checks),
        Err(e) => checks.fail("MW (subsystem route)", e.to_string()),
    }
}

fn check_affine_extension(entry: &CatalogEntry, checks: &mut Checks) {
    let finite: TypeList = match entry.root_lattice.parse() {
        Ok(t) => t,
        Err(e) => {
            checks.fail("affine extension", format!("bad frozen root lattice: {e}"));
            return;
        }
    };
    let config: TypeList = match entry.config_type.parse() {
        Ok(t) => t,
        Err(e) => {
            checks.fail("affine extension", format!("bad frozen configuration: {e}"));
            return;
        }
    };
    match affine_extensions(&finite) {
        Ok(extensions) => checks.result(
            "affine extension",
            extensions.contains(&config),
            format!("extensions of {finite} include {config}"),
        ),
        Err(e) => checks.fail("affine extension", e.to_string()),
    }
}

fn check_quartic(entry: &CatalogEntry, net: &Net, checks: &mut Checks) {
    let (Some(expected_src), true) = (entry.quartic, entry.field == Field::Rational) else {
        checks.skip("discriminant", "not defined in characteristic 2");
        checks.skip("singularities", "not defined in characteristic 2");
        return;
    };

    // the frozen table row is written in a possibly rescaled basis of the
    // same net; verify the span agreement before comparing determinants
    let basis = entry.quartic_basis.unwrap_or(entry.forms);
    let frozen = match Net::parse(basis[0], basis[1], basis[2], entry.field) {
        Ok(n) => n,
        Err(e) => {
            checks.fail("discriminant", format!("frozen basis failed to parse: {e}"));
            checks.skip("singularities", "discriminant unavailable");
            return;
        }
    };
    let span_rows: Vec<Vec<Scalar>> = net.basis().iter().map(|q| q.coeffs().to_vec()).collect();
    for q in frozen.basis() {
        let mut rows = span_rows.clone();
        rows.push(q.coeffs().to_vec());
        if rank(&rows) != 3 {
            checks.fail(
                "discriminant",
                "frozen basis does not span the entry's net".to_string(),
            );
            checks.skip("singularities", "discriminant unavailable");
            return;
        }
    }

    let expected_quartic = match PlaneQuartic::parse(expected_src, entry.field) {
        Ok(q) => q,
        Err(e) => {
            checks.fail("discriminant", format!("frozen quartic failed to parse: {e}"));
            checks.skip("singularities", "discriminant unavailable");
            return;
        }
    };
    let quartic = match discriminant_quartic(&frozen) {
        Ok(q) => q,
        Err(e) => {
            checks.fail("discriminant", e.to_string());
            checks.skip("singularities", "discriminant unavailable");
            return;
        }
    };
    checks.result(
        "discriminant",
        quartic.proportional_to(&expected_quartic),
        format!("det of the pencil matches {expected_src} up to a nonzero scalar"),
    );

    let (records, types, total_rank) = match quartic_root_system(&quartic) {
        Ok(r) => r,
        Err(e) => {
            checks.fail("singularities", e.to_string());
            return;
        }
    };
    if records.len() != entry.singularities.len() {
        checks.fail(
            "singularities",
            format!(
                "{} singular points, expected {}",
                records.len(),
                entry.singularities.len()
            ),
        );
        return;
    }
    for expected in entry.singularities {
        let point = match PlanePoint::from_ints(entry.field, expected.point) {
            Ok(p) => p,
            Err(e) => {
                checks.fail("singularities", format!("bad frozen singular point: {e}"));
                return;
            }
        };
        let Some(record) = records.iter().find(|r| r.point() == &point) else {
            checks.fail(
                "singularities",
                format!("no singular point at {:?}", expected.point),
            );
            return;
        };
        let ok = record.tag().to_string() == expected.tag
            && record.milnor() == expected.milnor
            && record.corank() == expected.corank
            && record.cubic_shape() == expected.shape;
        if !ok {
            checks.fail(
                "singularities",
                format!(
                    "point {:?} classifies as {} (mu = {}, corank = {}), expected {} (mu = {})",
                    expected.point,
                    record.tag(),
                    record.milnor(),
                    record.corank(),
                    expected.tag,
                    expected.milnor
                ),
            );
            return;
        }
    }
    let expected_lattice: TypeList = match entry.root_lattice.parse() {
        Ok(t) => t,
        Err(e) => {
            checks.fail("singularities", format!("bad frozen root lattice: {e}"));
            return;
        }
    };
    checks.result(
        "singularities",
        types == expected_lattice && total_rank == 7,
        format!("root system {types} of rank {total_rank}, expected {expected_lattice} of rank 7"),
    );
}

/// For a net whose basepoints are all simple, each plane of a rank-2 member
/// passes through exactly four basepoints, so its divisor class is readable
/// from the incidence pattern alone. Compare those labels with the frozen
/// node list.
fn check_coplanarity(entry: &CatalogEntry, report: &RankReport, checks: &mut Checks) {
    if entry.members.iter().all(|m| m.planes.is_none()) {
        checks.skip(
            "coplanarity",
            "plane classes are fixed by incidence only for simple basepoints",
        );
        return;
    }
    let field = entry.field;
    let chains = report.chains();
    for expected in entry.members {
        let Some(expected_planes) = expected.planes else {
            continue;
        };
        let lambda = expected.lambda.map(|c| Scalar::from_i64(field, c));
        let Some(member) = report.members().iter().find(|m| m.lambda() == &lambda) else {
            checks.fail(
                "coplanarity",
                format!("no member at pencil point {:?}", expected.lambda),
            );
            return;
        };
        let SingularShape::TwoPlanes { planes } = member.shape() else {
            checks.fail(
                "coplanarity",
                format!("member at {:?} is not a plane pair", expected.lambda),
            );
            return;
        };
        let mut got: Vec<String> = Vec::new();
        for plane in planes {
            match plane_incidence_label(plane, chains) {
                Some(label) => got.push(label),
                None => {
                    checks.fail(
                        "coplanarity",
                        format!(
                            "a plane of the member at {:?} does not pass through exactly \
                             four basepoints",
                            expected.lambda
                        ),
                    );
                    return;
                }
            }
        }
        got.sort();
        let mut want: Vec<String> = expected_planes.iter().map(|s| s.to_string()).collect();
        want.sort();
        if got != want {
            checks.fail(
                "coplanarity",
                format!(
                    "member at {:?} lies on planes {got:?}, expected {want:?}",
                    expected.lambda
                ),
            );
            return;
        }
    }
    checks.pass(
        "coplanarity",
        "every plane pair matches its frozen incidence labels",
    );
}

fn plane_incidence_label(plane: &[Scalar; 4], chains: &[BasepointChain]) -> Option<String> {
    let field = plane[0].field();
    let mut indices = Vec::new();
    for chain in chains {
        let value = plane
            .iter()
            .zip(chain.point().coords())
            .fold(Scalar::zero(field), |acc, (a, x)| &acc + &(a * x));
        if value.is_zero() {
            let (s, e) = chain.index_range();
            indices.extend(s..=e);
        }
    }
    if indices.len() != 4 {
        return None;
    }
    indices.sort_unstable();
    Some(format!(
        "h{}{}{}{}",
        indices[0], indices[1], indices[2], indices[3]
    ))
}

/// Three-way agreement of the section group: recomputed from the entry's
/// configuration classes, recomputed as a subsystem quotient, and the frozen
/// column. Returns whether all three coincide.
pub fn cross_check_routes(entry: &CatalogEntry) -> Result<bool> {
    let net = entry.net()?;
    let (_, chains) = net_type(&net)?;
    let classes: Vec<DivisorClass> = entry
        .table2_nodes
        .iter()
        .map(|l| parse_label(l, &chains))
        .collect::<Result<_>>()?;
    let config_route = mw_group_from_config(&classes)?;

    let lattice: TypeList = entry.root_lattice.parse()?;
    let sub = finite_index_subsystems_e7()
        .into_iter()
        .find(|s| s.type_list() == &lattice)
        .ok_or_else(|| {
            Error::Input(format!("{lattice} is not a finite-index subsystem"))
        })?;
    let quotient_route = quotient_group(&sub)?;

    Ok(config_route.free_rank == 0
        && quotient_route.free_rank == 0
        && config_route.torsion == entry.mw_torsion
        && quotient_route.torsion == entry.mw_torsion)
}

/// Rerun a rational entry over GF(p), comparing type, d and rank. Primes of
/// bad reduction are detected (basepoints colliding mod p, or the pencil
/// determinant degenerating) and reported as skipped rather than failed.
pub fn rerun_over_prime(entry: &CatalogEntry, p: u64) -> RerunReport {
    let outcome = rerun_outcome(entry, p);
    RerunReport {
        label: entry.label.to_string(),
        prime: p,
        outcome,
    }
}

fn rerun_outcome(entry: &CatalogEntry, p: u64) -> RerunOutcome {
    if entry.field != Field::Rational {
        return RerunOutcome::Skipped {
            reason: format!("entry is restricted to {}", entry.field),
        };
    }
    let field = Field::Fp(p);
    let net = match Net::parse(entry.forms[0], entry.forms[1], entry.forms[2], field) {
        Ok(n) => n,
        Err(e) => {
            return RerunOutcome::Skipped {
                reason: format!("net degenerates: {e}"),
            };
        }
    };

    // basepoint collision detection: the frozen rational basepoints must
    // stay pairwise distinct after reduction
    let mut reduced = Vec::new();
    for &(coords, _, _) in entry.chains {
        match ProjPoint::from_ints(field, coords) {
            Ok(pt) => reduced.push(pt),
            Err(_) => {
                return RerunOutcome::Skipped {
                    reason: "a basepoint reduces to zero".to_string(),
                };
            }
        }
    }
    for i in 0..reduced.len() {
        for j in i + 1..reduced.len() {
            if reduced[i] == reduced[j] {
                return RerunOutcome::Skipped {
                    reason: format!("basepoints collide at {}", reduced[i]),
                };
            }
        }
    }

    // determinant degeneration detection: the pencil determinant must stay
    // a genuine quartic
    if let Err(e) = discriminant_quartic(&net) {
        return RerunOutcome::Skipped {
            reason: format!("determinant degenerates: {e}"),
        };
    }

    let report = match mordell_weil_rank(&net) {
        Ok(r) => r,
        Err(e) => {
            return RerunOutcome::Mismatch {
                detail: format!("analysis failed: {e}"),
            };
        }
    };
    let type_string = report.net_type().to_string();
    let d = report.rank2_count();
    let rho = report.rank();
    let (_, eb, ec, _) = entry.counts;
    let expected_d = (eb + ec) as usize;
    if type_string != entry.type_string || d != expected_d || rho != 0 {
        return RerunOutcome::Mismatch {
            detail: format!(
                "type {type_string}, d = {d}, rank = {rho}; expected type {}, d = {expected_d}, \
                 rank = 0",
                entry.type_string
            ),
        };
    }
    RerunOutcome::Verified {
        type_string,
        d: d as u32,
        rho,
    }
}

/// Verify every entry (one thread each) and rerun the rational entries over
/// the given primes; reports are merged in catalog order.
pub fn verify_catalog(rerun_primes: &[u64]) -> CatalogReport {
    let catalog = load_catalog();
    let entries = std::thread::scope(|scope| {
        let handles: Vec<_> = catalog
            .iter()
            .map(|entry| scope.spawn(move || verify_entry(entry)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("entry verification does not panic"))
            .collect::<Vec<_>>()
    });
    let reruns = std::thread::scope(|scope| {
        let handles: Vec<_> = catalog
            .iter()
            .filter(|entry| entry.field == Field::Rational)
            .flat_map(|entry| {
                rerun_primes
                    .iter()
                    .map(move |&p| scope.spawn(move || rerun_over_prime(entry, p)))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("rerun does not panic"))
            .collect::<Vec<_>>()
    });
    CatalogReport { entries, reruns }
}

/// Default primes for the rerun harness.
pub const RERUN_PRIMES: [u64; 3] = [5, 7, 11];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_labels_and_fields() {
        let catalog = load_catalog();
        let labels: Vec<&str> = catalog.iter().map(|e| e.label()).collect();
        assert_eq!(
            labels,
            [
                "{8}_1",
                "{8}_2",
                "{4,4}_1",
                "{6,2}",
                "{4,4}_2",
                "{5,3}",
                "{3,3,2}_1",
                "{4,2,2}",
                "{4,4}_3",
                "{3,3,2}_2",
                "{2,2,2,2}",
                "{1,1,1,1,1,1,1,1}",
            ]
        );
        let gf2: Vec<&str> = catalog
            .iter()
            .filter(|e| e.field() == Field::Fp(2))
            .map(|e| e.label())
            .collect();
        assert_eq!(gf2, ["{1,1,1,1,1,1,1,1}"]);
        assert!(catalog.iter().all(|e| e.net().is_ok()));
        // total multiplicity is 8 in every entry and the frozen counts are
        // consistent with the chain data
        for e in &catalog {
            let total: u32 = e.chains.iter().map(|&(_, m, _)| m).sum();
            assert_eq!(total, 8, "{}", e.label());
            let (_, b, c, _) = e.counts;
            assert_eq!((b + c) as usize + 1, e.chains.len(), "{}", e.label());
        }
    }

    #[test]
    fn every_entry_verifies_green() {
        let report = verify_catalog(&[]);
        for entry in &report.entries {
            assert!(entry.is_green(), "{entry}");
        }
        assert_eq!(report.entries.len(), 12);
        assert!(report.is_green());
    }

    #[test]
    fn cross_checks_and_reruns_for_one_entry() {
        let entry = find_entry("{4,4}_3").unwrap();
        assert!(cross_check_routes(&entry).unwrap());
        for p in RERUN_PRIMES {
            let rerun = rerun_over_prime(&entry, p);
            assert!(
                matches!(rerun.outcome, RerunOutcome::Verified { .. }),
                "{rerun}"
            );
        }
    }

    #[test]
    fn corrupted_entry_goes_red_without_panicking() {
        let mut entry = find_entry("{5,3}").unwrap();
        entry.forms[2] = "X*Y+W^3";
        let report = verify_entry(&entry);
        assert!(!report.is_green());
        let parse = report.check("parse").unwrap();
        assert_eq!(parse.status, CheckStatus::Fail);
    }

    #[test]
    fn reports_round_trip_through_json() {
        let entry = find_entry("{8}_1").unwrap();
        let report = verify_entry(&entry);
        let text = serde_json::to_string(&report).unwrap();
        let back: EntryReport = serde_json::from_str(&text).unwrap();
        assert_eq!(report, back);

        let rerun = rerun_over_prime(&entry, 5);
        let text = serde_json::to_string(&rerun).unwrap();
        let back: RerunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(rerun, back);
    }

    #[test]
    fn characteristic_two_entry_skips_the_quartic_checks() {
        let entry = find_entry("{1,1,1,1,1,1,1,1}").unwrap();
        let report = verify_entry(&entry);
        assert!(report.is_green(), "{report}");
        assert_eq!(
            report.check("discriminant").unwrap().status,
            CheckStatus::Skipped
        );
        let coplanarity = report.check("coplanarity").unwrap();
        assert_eq!(coplanarity.status, CheckStatus::Pass);
    }
}
