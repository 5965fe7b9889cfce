//! Integer divisor classes on the blowup of projective 3-space at the eight
//! basepoints of a net, the induced bilinear form, configuration graphs of
//! vertical classes, and the section group computed from a configuration.
//!
//! A class is an integer combination of the hyperplane pullback h and the
//! eight exceptional classes e1..e8. Triple intersection numbers follow the
//! blowup rules (h cubed and each ei cubed equal 1, every mixed product 0),
//! and pairing against the half-anticanonical class -K/2 = 2h - e1 - .. - e8
//! turns triples into a symmetric bilinear form under which the classes
//! h1234, e12, .., e78 are simple roots of an affine diagram of corank 1.

use crate::baselocus::BasepointChain;
use crate::error::{Error, Result};
use crate::exact::matrix::{smith_normal_form, AbelianGroup, IntMatrix};
use crate::roots::{recognize, Diagram, DynkinType};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An integer divisor class a*h + c1*e1 + ... + c8*e8.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DivisorClass {
    h: i64,
    e: [i64; 8],
}

impl DivisorClass {
    pub fn new(h: i64, e: [i64; 8]) -> DivisorClass {
        DivisorClass { h, e }
    }

    /// The pullback of a plane.
    pub fn hyperplane() -> DivisorClass {
        DivisorClass::new(1, [0; 8])
    }

    /// The exceptional class over basepoint i (1-based).
    pub fn exceptional(i: usize) -> Result<DivisorClass> {
        check_index(i)?;
        let mut e = [0i64; 8];
        e[i - 1] = 1;
        Ok(DivisorClass::new(0, e))
    }

    /// h_{ijkl}: a plane through four of the basepoints.
    pub fn h_class(indices: [usize; 4]) -> Result<DivisorClass> {
        let mut e = [0i64; 8];
        for &i in &indices {
            check_index(i)?;
            if e[i - 1] != 0 {
                return Err(Error::Input(format!(
                    "repeated basepoint index {i} in a plane class"
                )));
            }
            e[i - 1] = -1;
        }
        Ok(DivisorClass::new(1, e))
    }

    /// e_{ij} = e_i - e_j, the class of a point infinitely near another.
    pub fn e_diff(i: usize, j: usize) -> Result<DivisorClass> {
        check_index(i)?;
        check_index(j)?;
        if i == j {
            return Err(Error::Input(format!("e_diff indices must differ, got {i}")));
        }
        let mut e = [0i64; 8];
        e[i - 1] = 1;
        e[j - 1] = -1;
        Ok(DivisorClass::new(0, e))
    }

    /// -K/2 = 2h - e1 - ... - e8, the class of a fiber of the net map.
    pub fn half_anticanonical() -> DivisorClass {
        DivisorClass::new(2, [-1; 8])
    }

    pub fn h_coeff(&self) -> i64 {
        self.h
    }

    pub fn e_coeffs(&self) -> &[i64; 8] {
        &self.e
    }

    pub fn scaled(&self, k: i64) -> DivisorClass {
        DivisorClass::new(self.h * k, std::array::from_fn(|i| self.e[i] * k))
    }

    pub fn is_zero(&self) -> bool {
        self.h == 0 && self.e.iter().all(|&c| c == 0)
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=8).contains(&i) {
        Ok(())
    } else {
        Err(Error::Input(format!("basepoint index {i} outside 1..=8")))
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.h + rhs.h, std::array::from_fn(|i| self.e[i] + rhs.e[i]))
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.h - rhs.h, std::array::from_fn(|i| self.e[i] - rhs.e[i]))
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        self.scaled(-1)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: i64, name: &str| -> fmt::Result {
            if c == 0 {
                return Ok(());
            }
            if first {
                first = false;
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{name}")
        };
        term(f, self.h, "h")?;
        for i in 0..8 {
            let name = format!("e{}", i + 1);
            term(f, self.e[i], &name)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Triple intersection number of three classes under the blowup rules:
/// h∘h∘h = 1, ei∘ei∘ei = 1, and every mixed monomial vanishes.
pub fn triple_product(d1: &DivisorClass, d2: &DivisorClass, d3: &DivisorClass) -> i64 {
    let mut t = d1.h * d2.h * d3.h;
    for i in 0..8 {
        t += d1.e[i] * d2.e[i] * d3.e[i];
    }
    t
}

/// The bilinear form D1 ∘ D2 ∘ (-K/2) on divisor classes.
pub fn form(d1: &DivisorClass, d2: &DivisorClass) -> i64 {
    triple_product(d1, d2, &DivisorClass::half_anticanonical())
}

/// Class of the cone with vertex at the first basepoint of the given chain:
/// 2h - 2e_s - sum of e_k over k outside {s, j}, where s is the chain's
/// first index and j its last. A chain of multiplicity 1 has j = s, and the
/// class degenerates to 2h - 2e_s - sum over k != s.
pub fn cone_class(chains: &[BasepointChain], chain: usize) -> Result<DivisorClass> {
    let Some(c) = chains.get(chain) else {
        return Err(Error::Input(format!(
            "chain index {chain} out of range for {} chains",
            chains.len()
        )));
    };
    let (s, j) = c.index_range();
    let mut e = [-1i64; 8];
    e[s - 1] = -2;
    if j > s {
        e[j - 1] = 0;
    }
    Ok(DivisorClass::new(2, e))
}

/// Parse a textual class label: `h1234`, `e12`, `c5` (cone with vertex at
/// basepoint 5, which must start one of the chains), or `-K/2`.
pub fn parse_label(label: &str, chains: &[BasepointChain]) -> Result<DivisorClass> {
    if label == "-K/2" {
        return Ok(DivisorClass::half_anticanonical());
    }
    let digits = |s: &str| -> Result<Vec<usize>> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Input(format!("bad class label {label}")))
            })
            .collect()
    };
    match label.split_at(1) {
        ("h", rest) if rest.len() == 4 => {
            let d = digits(rest)?;
            DivisorClass::h_class([d[0], d[1], d[2], d[3]])
        }
        ("e", rest) if rest.len() == 2 => {
            let d = digits(rest)?;
            DivisorClass::e_diff(d[0], d[1])
        }
        ("c", rest) if rest.len() == 1 => {
            let s = digits(rest)?[0];
            let chain = chains
                .iter()
                .position(|c| c.first_index() == s)
                .ok_or_else(|| {
                    Error::Input(format!("no basepoint chain starts at index {s}"))
                })?;
            cone_class(chains, chain)
        }
        _ => Err(Error::Input(format!("bad class label {label}"))),
    }
}

/// The fixed basis of the orthogonal complement of the canonical class:
/// (h1234, e12, e23, e34, e45, e56, e67, e78).
pub fn kperp_basis() -> [DivisorClass; 8] {
    let mut basis = [DivisorClass::hyperplane(); 8];
    basis[0] = DivisorClass::h_class([1, 2, 3, 4]).unwrap();
    for i in 1..8 {
        basis[i] = DivisorClass::e_diff(i, i + 1).unwrap();
    }
    basis
}

/// Coordinates of a class in the `kperp_basis`, or an input error when the
/// class does not pair to zero with -K/2.
pub fn kperp_coords(d: &DivisorClass) -> Result<[i64; 8]> {
    let a = d.h;
    let c = &d.e;
    if 4 * a + c.iter().sum::<i64>() != 0 {
        return Err(Error::Input(format!(
            "class {d} is not orthogonal to the fiber class"
        )));
    }
    let y7 = -c[7];
    let y6 = y7 - c[6];
    let y5 = y6 - c[5];
    let y4 = y5 - c[4];
    let y3 = y4 - c[3] - a;
    let y2 = y3 - c[2] - a;
    let y1 = y2 - c[1] - a;
    debug_assert_eq!(c[0], y1 - a);
    Ok([a, y1, y2, y3, y4, y5, y6, y7])
}

/// A labeled node of a configuration graph.
#[derive(Clone, Debug)]
pub struct ConfigNode {
    label: String,
    class: DivisorClass,
}

impl ConfigNode {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn class(&self) -> &DivisorClass {
        &self.class
    }
}

/// The intersection graph of a set of vertical divisor classes: nodes are
/// roots orthogonal to the fiber class, edges carry the pairing value 1 or 2.
#[derive(Clone, Debug)]
pub struct ConfigGraph {
    nodes: Vec<ConfigNode>,
    edges: Vec<(usize, usize, u32)>,
    components: Vec<Vec<usize>>,
}

impl ConfigGraph {
    pub fn nodes(&self) -> &[ConfigNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    /// Connected components as sorted index lists, ordered by first node.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// The underlying weighted graph.
    pub fn diagram(&self) -> Diagram {
        Diagram::new(self.nodes.len(), self.edges.clone())
            .expect("edges validated at construction")
    }

    /// Recognized Dynkin type per component, in component order.
    pub fn dynkin_types(&self) -> Vec<(Vec<usize>, Option<DynkinType>)> {
        recognize(&self.diagram())
    }
}

/// Build the configuration graph of a list of labeled classes.
///
/// Every node must satisfy form(D, D) = -2 and form(D, -K/2) = 0; every
/// pairwise value must lie in {0, 1, 2}.
pub fn build_config_graph(nodes: &[(String, DivisorClass)]) -> Result<ConfigGraph> {
    let fiber = DivisorClass::half_anticanonical();
    for (label, class) in nodes {
        if form(class, class) != -2 || form(class, &fiber) != 0 {
            return Err(Error::BadNode {
                label: label.clone(),
            });
        }
    }
    let mut edges = Vec::new();
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            let value = form(&nodes[i].1, &nodes[j].1);
            match value {
                0 => {}
                1 | 2 => edges.push((i, j, value as u32)),
                _ => {
                    return Err(Error::BadEdge {
                        a: nodes[i].0.clone(),
                        b: nodes[j].0.clone(),
                        value,
                    })
                }
            }
        }
    }
    let components = connected_components(nodes.len(), &edges);
    Ok(ConfigGraph {
        nodes: nodes
            .iter()
            .map(|(label, class)| ConfigNode {
                label: label.clone(),
                class: *class,
            })
            .collect(),
        edges,
        components,
    })
}

fn connected_components(n: usize, edges: &[(usize, usize, u32)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b, _) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Result of the fiber-sum check for one component of a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberComponentCheck {
    nodes: Vec<usize>,
    marks: Vec<i64>,
    sum_matches: bool,
}

impl FiberComponentCheck {
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// The primitive positive null vector of the component's Gram matrix.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Whether the marked sum of the component's classes is -K/2.
    pub fn sum_matches(&self) -> bool {
        self.sum_matches
    }
}

/// For each component, compute the affine marks (the primitive positive
/// null vector of its Gram matrix) and check that the marked node classes
/// sum to -K/2.
///
/// A corank-1 Gram matrix with a strictly positive null vector is negative
/// semidefinite here (the diagonal is -2 and off-diagonal entries are
/// nonnegative), so this is exactly the affine condition; anything else is
/// reported as a `NotAffine` error naming the component.
pub fn verify_fiber_sums(graph: &ConfigGraph) -> Result<Vec<FiberComponentCheck>> {
    let fiber = DivisorClass::half_anticanonical();
    let mut checks = Vec::new();
    for comp in graph.components() {
        let name = || {
            comp.iter()
                .map(|&i| graph.nodes[i].label.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let k = comp.len();
        let gram: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| {
                comp.iter()
                    .map(|&j| form(&graph.nodes[i].class, &graph.nodes[j].class))
                    .collect()
            })
            .collect();
        let snf = smith_normal_form(&IntMatrix::from_rows(&gram));
        if snf.rank != k - 1 {
            return Err(Error::NotAffine(format!(
                "component {{{}}} has Gram corank {}",
                name(),
                k - snf.rank
            )));
        }
        // kernel basis vector: the last column of V (U * M * V = D)
        let mut marks: Vec<i64> = (0..k)
            .map(|r| {
                i64::try_from(snf.v.get(r, k - 1).clone()).expect("small mark entry")
            })
            .collect();
        if marks.iter().all(|&m| m <= 0) {
            for m in &mut marks {
                *m = -*m;
            }
        }
        if marks.iter().any(|&m| m <= 0) {
            return Err(Error::NotAffine(format!(
                "component {{{}}} has no positive null vector",
                name()
            )));
        }
        let mut sum = DivisorClass::new(0, [0; 8]);
        for (pos, &i) in comp.iter().enumerate() {
            sum = sum + graph.nodes[i].class.scaled(marks[pos]);
        }
        checks.push(FiberComponentCheck {
            nodes: comp.clone(),
            marks,
            sum_matches: sum == fiber,
        });
    }
    Ok(checks)
}

/// The section group of a configuration: the quotient of the rank-8 lattice
/// spanned by `kperp_basis` by the span of the given classes together with
/// -K/2. Free rank and torsion come from the Smith normal form.
pub fn mw_group_from_config(nodes: &[DivisorClass]) -> Result<AbelianGroup> {
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(nodes.len() + 1);
    for node in nodes {
        rows.push(kperp_coords(node)?.to_vec());
    }
    rows.push(kperp_coords(&DivisorClass::half_anticanonical())?.to_vec());
    let generators = IntMatrix::from_rows(&rows).transpose();
    AbelianGroup::cokernel(&generators)
}
