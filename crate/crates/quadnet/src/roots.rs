//! Simply-laced root systems: Dynkin diagram recognition (finite and affine),
//! one-node affine extensions per component, the finite-index root subsystems
//! of E7 by iterated maximal-subsystem descent, and lattice quotients.
//!
//! Diagrams are weighted multigraphs; all edges have weight 1 except the
//! doubled edge of the affine A1 diagram, which has weight 2.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exact::matrix::{smith_normal_form, AbelianGroup, IntMatrix};

/// The three families of simply-laced simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdeClass {
    A,
    D,
    E,
}

impl std::fmt::Display for AdeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdeClass::A => write!(f, "A"),
            AdeClass::D => write!(f, "D"),
            AdeClass::E => write!(f, "E"),
        }
    }
}

/// An irreducible simply-laced type: A_n (n >= 1), D_n (n >= 4), E_6..E_8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleType {
    class: AdeClass,
    rank: u32,
}

impl SimpleType {
    pub fn new(class: AdeClass, rank: u32) -> Result<SimpleType> {
        let ok = match class {
            AdeClass::A => rank >= 1,
            AdeClass::D => rank >= 4,
            AdeClass::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::Input(format!(
                "no simply-laced type {class}{rank}"
            )));
        }
        Ok(SimpleType { class, rank })
    }

    pub fn class(&self) -> AdeClass {
        self.class
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

impl std::fmt::Display for SimpleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.class, self.rank)
    }
}

/// A finite type or its one-node affine extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    Finite(SimpleType),
    Affine(SimpleType),
}

impl DynkinType {
    pub fn simple(&self) -> SimpleType {
        match self {
            DynkinType::Finite(t) | DynkinType::Affine(t) => *t,
        }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, DynkinType::Affine(_))
    }

    /// Number of diagram nodes: the rank, plus one for affine types.
    pub fn node_count(&self) -> usize {
        match self {
            DynkinType::Finite(t) => t.rank as usize,
            DynkinType::Affine(t) => t.rank as usize + 1,
        }
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DynkinType::Finite(t) => write!(f, "{t}"),
            DynkinType::Affine(t) => write!(f, "~{t}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<DynkinType> {
        let s = s.trim();
        let (affine, rest) = match s.strip_prefix('~') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let mut chars = rest.chars();
        let class = match chars.next() {
            Some('A') => AdeClass::A,
            Some('D') => AdeClass::D,
            Some('E') => AdeClass::E,
            _ => return Err(Error::Input(format!("bad Dynkin type: {s:?}"))),
        };
        let rank: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Input(format!("bad Dynkin rank in {s:?}")))?;
        let t = SimpleType::new(class, rank)?;
        Ok(if affine {
            DynkinType::Affine(t)
        } else {
            DynkinType::Finite(t)
        })
    }
}

/// A formal sum of irreducible types in canonical order (rank descending,
/// then E before D before A), displayed with multiplicities: `2A3+A1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeList {
    entries: Vec<DynkinType>,
}

fn type_order(t: &DynkinType) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<AdeClass>, bool) {
    let s = t.simple();
    (
        std::cmp::Reverse(s.rank),
        std::cmp::Reverse(s.class),
        t.is_affine(),
    )
}

impl TypeList {
    pub fn new(mut entries: Vec<DynkinType>) -> TypeList {
        entries.sort_by_key(type_order);
        TypeList { entries }
    }

    pub fn entries(&self) -> &[DynkinType] {
        &self.entries
    }

    /// Sum of the ranks of the underlying finite types.
    pub fn total_rank(&self) -> u32 {
        self.entries.iter().map(|t| t.simple().rank).sum()
    }

    pub fn is_all_finite(&self) -> bool {
        self.entries.iter().all(|t| !t.is_affine())
    }

    pub fn is_all_affine(&self) -> bool {
        self.entries.iter().all(|t| t.is_affine())
    }
}

impl std::fmt::Display for TypeList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.entries.len() {
            let t = self.entries[i];
            let mut count = 1;
            while i + count < self.entries.len() && self.entries[i + count] == t {
                count += 1;
            }
            if count == 1 {
                parts.push(t.to_string());
            } else {
                parts.push(format!("{count}{t}"));
            }
            i += count;
        }
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for TypeList {
    type Err = Error;

    fn from_str(s: &str) -> Result<TypeList> {
        let s = s.trim();
        if s == "0" {
            return Ok(TypeList::new(Vec::new()));
        }
        let mut entries = Vec::new();
        for token in s.split('+') {
            let token = token.trim();
            let split = token
                .find(|c: char| !c.is_ascii_digit())
                .ok_or_else(|| Error::Input(format!("bad type token {token:?}")))?;
            let count: usize = if split == 0 {
                1
            } else {
                token[..split]
                    .parse()
                    .map_err(|_| Error::Input(format!("bad multiplicity in {token:?}")))?
            };
            if count == 0 {
                return Err(Error::Input(format!("zero multiplicity in {token:?}")));
            }
            let t: DynkinType = token[split..].parse()?;
            entries.extend(std::iter::repeat_n(t, count));
        }
        Ok(TypeList::new(entries))
    }
}

/// An undirected multigraph with edge weights 1 or 2 and no self-loops.
#[derive(Debug, Clone)]
pub struct Diagram {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl Diagram {
    pub fn new(n: usize, edges: Vec<(usize, usize, u32)>) -> Result<Diagram> {
        let mut seen = BTreeSet::new();
        for &(a, b, w) in &edges {
            if a >= n || b >= n || a == b || !(1..=2).contains(&w) || !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::BadEdge {
                    a: a.to_string(),
                    b: b.to_string(),
                    value: w as i64,
                });
            }
        }
        Ok(Diagram { n, edges })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    /// Connected components as sorted node lists, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Identify each connected component against the simply-laced finite and
/// affine catalogs; `None` marks a component matching neither.
pub fn recognize(d: &Diagram) -> Vec<(Vec<usize>, Option<DynkinType>)> {
    d.components()
        .into_iter()
        .map(|comp| {
            let t = recognize_component(d, &comp);
            (comp, t)
        })
        .collect()
}

fn recognize_component(d: &Diagram, comp: &[usize]) -> Option<DynkinType> {
    let k = comp.len();
    let in_comp = |v: usize| comp.binary_search(&v).is_ok();
    let edges: Vec<(usize, usize, u32)> = d
        .edges
        .iter()
        .copied()
        .filter(|&(a, b, _)| in_comp(a) && in_comp(b))
        .collect();
    if edges.iter().any(|&(_, _, w)| w == 2) {
        // the doubled edge occurs only in the affine A1 diagram
        return if k == 2 && edges.len() == 1 {
            Some(DynkinType::Affine(SimpleType::new(AdeClass::A, 1).unwrap()))
        } else {
            None
        };
    }
    let mut degree: BTreeMap<usize, usize> = comp.iter().map(|&v| (v, 0)).collect();
    let mut adj: BTreeMap<usize, Vec<usize>> = comp.iter().map(|&v| (v, Vec::new())).collect();
    for &(a, b, _) in &edges {
        *degree.get_mut(&a).unwrap() += 1;
        *degree.get_mut(&b).unwrap() += 1;
        adj.get_mut(&a).unwrap().push(b);
        adj.get_mut(&b).unwrap().push(a);
    }
    let e = edges.len();
    if e == k && k >= 3 {
        // a single cycle: the affine A_{k-1} diagram
        if degree.values().all(|&d| d == 2) {
            return Some(DynkinType::Affine(
                SimpleType::new(AdeClass::A, k as u32 - 1).unwrap(),
            ));
        }
        return None;
    }
    if e != k - 1 {
        return None; // not a tree
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|v| degree[v] >= 3).collect();
    match branch.len() {
        0 => Some(DynkinType::Finite(
            SimpleType::new(AdeClass::A, k as u32).unwrap(),
        )),
        1 => {
            let c = branch[0];
            if degree[&c] == 4 {
                // four arms: only the affine D4 star qualifies
                return if k == 5 {
                    Some(DynkinType::Affine(SimpleType::new(AdeClass::D, 4).unwrap()))
                } else {
                    None
                };
            }
            if degree[&c] > 4 {
                return None;
            }
            // walk the three arms away from the branch node
            let mut arms: Vec<u32> = adj[&c]
                .iter()
                .map(|&first| {
                    let mut len = 1u32;
                    let mut prev = c;
                    let mut cur = first;
                    while let Some(&next) = adj[&cur].iter().find(|&&w| w != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable_by(|a, b| b.cmp(a));
            let (class, rank, affine) = match (arms[0], arms[1], arms[2]) {
                (a, 1, 1) => (AdeClass::D, a + 3, false),
                (2, 2, 1) => (AdeClass::E, 6, false),
                (3, 2, 1) => (AdeClass::E, 7, false),
                (4, 2, 1) => (AdeClass::E, 8, false),
                (2, 2, 2) => (AdeClass::E, 6, true),
                (3, 3, 1) => (AdeClass::E, 7, true),
                (5, 2, 1) => (AdeClass::E, 8, true),
                _ => return None,
            };
            let t = SimpleType::new(class, rank).unwrap();
            Some(if affine {
                DynkinType::Affine(t)
            } else {
                DynkinType::Finite(t)
            })
        }
        2 => {
            // affine D_{k-1}: two branch nodes, each carrying exactly two
            // leaves, joined by a path
            if comp.iter().any(|v| degree[v] > 3) {
                return None;
            }
            for b in &branch {
                let leaves = adj[b].iter().filter(|&&w| degree[&w] == 1).count();
                if leaves != 2 {
                    return None;
                }
            }
            if k < 6 {
                return None;
            }
            Some(DynkinType::Affine(
                SimpleType::new(AdeClass::D, k as u32 - 1).unwrap(),
            ))
        }
        _ => None,
    }
}

/// The standard diagram of a type, on nodes 0..node_count.
pub fn standard_diagram(t: &DynkinType) -> Diagram {
    let s = t.simple();
    let n = s.rank as usize;
    let path = |len: usize| -> Vec<(usize, usize, u32)> {
        (0..len.saturating_sub(1)).map(|i| (i, i + 1, 1)).collect()
    };
    let edges = match (t, s.class) {
        (DynkinType::Finite(_), AdeClass::A) => path(n),
        (DynkinType::Finite(_), AdeClass::D) => {
            let mut e = path(n - 1);
            e.push((1, n - 1, 1));
            e
        }
        (DynkinType::Finite(_), AdeClass::E) => {
            let mut e = path(n - 1);
            e.push((2, n - 1, 1));
            e
        }
        (DynkinType::Affine(_), AdeClass::A) => {
            if n == 1 {
                vec![(0, 1, 2)]
            } else {
                let mut e = path(n + 1);
                e.push((0, n, 1));
                e
            }
        }
        (DynkinType::Affine(_), AdeClass::D) => {
            if n == 4 {
                vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)]
            } else {
                // central path 0..n-4, two leaves at each end
                let mut e = path(n - 3);
                e.push((0, n - 3, 1));
                e.push((0, n - 2, 1));
                e.push((n - 4, n - 1, 1));
                e.push((n - 4, n, 1));
                e
            }
        }
        (DynkinType::Affine(_), AdeClass::E) => match n {
            6 => {
                let mut e = path(5);
                e.push((2, 5, 1));
                e.push((5, 6, 1));
                e
            }
            7 => {
                let mut e = path(7);
                e.push((3, 7, 1));
                e
            }
            _ => {
                let mut e = path(8);
                e.push((2, 8, 1));
                e
            }
        },
    };
    Diagram::new(t.node_count(), edges).expect("standard diagram is valid")
}

/// For each component of a finite type list, every way of attaching one new
/// node that turns the component into a recognized affine diagram; the
/// results are combined across components and deduplicated by type.
pub fn affine_extensions(finite: &TypeList) -> Result<Vec<TypeList>> {
    if !finite.is_all_finite() {
        return Err(Error::Input(
            "affine extension expects a list of finite types".into(),
        ));
    }
    let mut per_component: Vec<Vec<DynkinType>> = Vec::new();
    for t in finite.entries() {
        let base = standard_diagram(t);
        let r = base.node_count();
        let mut found: BTreeSet<String> = BTreeSet::new();
        let mut types = Vec::new();
        for pattern in 0..3usize.pow(r as u32) {
            if pattern == 0 {
                continue;
            }
            let mut edges = base.edges().to_vec();
            let mut digits = pattern;
            for node in 0..r {
                let w = (digits % 3) as u32;
                digits /= 3;
                if w > 0 {
                    edges.push((node, r, w));
                }
            }
            let d = Diagram::new(r + 1, edges)?;
            let rec = recognize(&d);
            if rec.len() != 1 {
                continue;
            }
            if let Some(t @ DynkinType::Affine(_)) = rec[0].1 {
                if found.insert(t.to_string()) {
                    types.push(t);
                }
            }
        }
        per_component.push(types);
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for combo in per_component.into_iter().multi_cartesian_product() {
        let list = TypeList::new(combo);
        if seen.insert(list.to_string()) {
            out.push(list);
        }
    }
    Ok(out)
}

/// Edges of the E7 diagram on nodes 0..7: a 6-node path 0-2-3-4-5-6 with
/// node 1 attached to node 3.
pub const E7_EDGES: [(usize, usize); 6] = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)];

/// A full-rank root sublattice of E7, recorded by the coordinates of its
/// simple roots in the simple-root basis of E7.
#[derive(Debug, Clone)]
pub struct RootSublattice {
    type_list: TypeList,
    generators: IntMatrix,
}

impl RootSublattice {
    pub fn new(type_list: TypeList, generators: IntMatrix) -> RootSublattice {
        RootSublattice {
            type_list,
            generators,
        }
    }

    pub fn type_list(&self) -> &TypeList {
        &self.type_list
    }

    /// Rows are simple roots in E7 simple-root coordinates.
    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }
}

fn e7_cartan() -> [[i64; 7]; 7] {
    let mut c = [[0i64; 7]; 7];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in &E7_EDGES {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

fn pairing(c: &[[i64; 7]; 7], x: &[i64; 7], y: &[i64; 7]) -> i64 {
    let mut s = 0;
    for i in 0..7 {
        for j in 0..7 {
            s += x[i] * c[i][j] * y[j];
        }
    }
    s
}

/// Type of a set of simple roots of a finite subsystem, with the components
/// of its diagram (as index sets into the given roots).
fn system_type(c: &[[i64; 7]; 7], simples: &[[i64; 7]]) -> (TypeList, Vec<Vec<usize>>) {
    let mut edges = Vec::new();
    for i in 0..simples.len() {
        debug_assert_eq!(pairing(c, &simples[i], &simples[i]), 2);
        for j in i + 1..simples.len() {
            let v = -pairing(c, &simples[i], &simples[j]);
            if v != 0 {
                edges.push((i, j, v as u32));
            }
        }
    }
    let d = Diagram::new(simples.len(), edges).expect("valid root diagram");
    let rec = recognize(&d);
    let mut types = Vec::new();
    let mut comps = Vec::new();
    for (nodes, t) in rec {
        let t = t.expect("simple roots of a finite system form an ADE diagram");
        debug_assert!(!t.is_affine());
        types.push(t);
        comps.push(nodes);
    }
    (TypeList::new(types), comps)
}

/// All roots of the subsystem spanned by the given simple roots: the closure
/// of the simples under reflection in the simples.
fn reflection_closure(c: &[[i64; 7]; 7], simples: &[[i64; 7]]) -> Vec<[i64; 7]> {
    let mut roots: BTreeSet<[i64; 7]> = simples.iter().copied().collect();
    let mut queue: Vec<[i64; 7]> = simples.to_vec();
    while let Some(r) = queue.pop() {
        for alpha in simples {
            let m = pairing(c, &r, alpha);
            let mut image = r;
            for (x, a) in image.iter_mut().zip(alpha.iter()) {
                *x -= m * a;
            }
            if roots.insert(image) {
                queue.push(image);
            }
        }
    }
    roots.into_iter().collect()
}

/// The unique dominant root of an irreducible subsystem: nonnegative pairing
/// with every simple root.
fn highest_root(c: &[[i64; 7]; 7], simples: &[[i64; 7]], roots: &[[i64; 7]]) -> [i64; 7] {
    let mut dominant = roots
        .iter()
        .filter(|r| simples.iter().all(|a| pairing(c, r, a) >= 0));
    let theta = *dominant.next().expect("irreducible system has a dominant root");
    debug_assert!(dominant.next().is_none());
    theta
}

fn descend(
    c: &[[i64; 7]; 7],
    simples: Vec<[i64; 7]>,
    found: &mut BTreeMap<String, RootSublattice>,
) {
    let (ty, comps) = system_type(c, &simples);
    let key = ty.to_string();
    if found.contains_key(&key) {
        return;
    }
    let rows: Vec<Vec<i64>> = simples.iter().map(|r| r.to_vec()).collect();
    found.insert(
        key,
        RootSublattice::new(ty, IntMatrix::from_rows(&rows)),
    );
    for comp in &comps {
        let comp_simples: Vec<[i64; 7]> = comp.iter().map(|&i| simples[i]).collect();
        let roots = reflection_closure(c, &comp_simples);
        let theta = highest_root(c, &comp_simples, &roots);
        let lowest = theta.map(|x| -x);
        for &drop in comp {
            let mut next = simples.clone();
            next[drop] = lowest;
            descend(c, next, found);
        }
    }
}

/// The root subsystems of E7 of finite index (full rank 7), each with one
/// concrete embedding: repeatedly extend a component by its lowest root and
/// delete one node, keeping every rank-7 system that appears.
pub fn finite_index_subsystems_e7() -> Vec<RootSublattice> {
    let c = e7_cartan();
    let mut simples = Vec::new();
    for i in 0..7 {
        let mut v = [0i64; 7];
        v[i] = 1;
        simples.push(v);
    }
    let mut found = BTreeMap::new();
    descend(&c, simples, &mut found);
    found.into_values().collect()
}

/// The quotient of the E7 root lattice by a full-rank sublattice.
pub fn quotient_group(sub: &RootSublattice) -> Result<AbelianGroup> {
    let snf = smith_normal_form(sub.generators());
    if snf.rank < 7 {
        return Err(Error::InfiniteQuotient { rank: snf.rank });
    }
    // generators sit in the rows; the cokernel of the transpose is the
    // quotient of Z^7 by their span
    AbelianGroup::cokernel(&sub.generators().transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    fn list(s: &str) -> TypeList {
        s.parse().unwrap()
    }

    #[test]
    fn type_list_display_round_trip() {
        for s in ["E7", "A7", "D6+A1", "A5+A2", "D4+3A1", "2A3+A1", "7A1", "7~A1", "~D6+~A1"] {
            assert_eq!(list(s).to_string(), s);
        }
        assert_eq!(list("A1+A3+A3").to_string(), "2A3+A1");
        assert_eq!(list("A1+D4").to_string(), "D4+A1");
    }

    #[test]
    fn invalid_types_rejected() {
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("B2".parse::<DynkinType>().is_err());
        assert!("A0".parse::<DynkinType>().is_err());
    }

    #[test]
    fn recognize_cycle_and_doubled_edge() {
        let cycle = Diagram::new(
            8,
            (0..8).map(|i| (i, (i + 1) % 8, 1)).collect(),
        )
        .unwrap();
        let rec = recognize(&cycle);
        assert_eq!(rec.len(), 1);
        assert_eq!(rec[0].1, Some(t("~A7")));

        let doubled = Diagram::new(2, vec![(0, 1, 2)]).unwrap();
        assert_eq!(recognize(&doubled)[0].1, Some(t("~A1")));
    }

    #[test]
    fn recognize_branched_path() {
        // a 7-node path with an extra node on the middle: affine E7
        let mut edges: Vec<(usize, usize, u32)> = (0..6).map(|i| (i, i + 1, 1)).collect();
        edges.push((3, 7, 1));
        let d = Diagram::new(8, edges).unwrap();
        assert_eq!(recognize(&d)[0].1, Some(t("~E7")));
    }

    #[test]
    fn recognize_round_trips_standard_diagrams() {
        let mut all = Vec::new();
        for r in 1..=8 {
            all.push(format!("A{r}"));
            all.push(format!("~A{r}"));
        }
        for r in 4..=8 {
            all.push(format!("D{r}"));
            all.push(format!("~D{r}"));
        }
        for r in 6..=8 {
            all.push(format!("E{r}"));
            all.push(format!("~E{r}"));
        }
        for name in all {
            let ty = t(&name);
            let d = standard_diagram(&ty);
            let rec = recognize(&d);
            assert_eq!(rec.len(), 1, "{name} connected");
            assert_eq!(rec[0].1, Some(ty), "{name} recognized");
        }
    }

    #[test]
    fn unrecognized_shapes() {
        // triangle with a tail: a cycle plus a pendant edge
        let d = Diagram::new(4, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1)]).unwrap();
        assert_eq!(recognize(&d)[0].1, None);
        // doubled edge inside a larger component
        let d = Diagram::new(3, vec![(0, 1, 2), (1, 2, 1)]).unwrap();
        assert_eq!(recognize(&d)[0].1, None);
        // degree-4 node on six nodes is not the affine D4 star
        let d = Diagram::new(
            6,
            vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1), (4, 5, 1)],
        )
        .unwrap();
        assert_eq!(recognize(&d)[0].1, None);
    }

    #[test]
    fn diagram_validation() {
        assert!(Diagram::new(2, vec![(0, 2, 1)]).is_err());
        assert!(Diagram::new(2, vec![(0, 0, 1)]).is_err());
        assert!(Diagram::new(2, vec![(0, 1, 3)]).is_err());
        assert!(Diagram::new(3, vec![(0, 1, 1), (1, 0, 1)]).is_err());
    }

    #[test]
    fn extensions_of_a7() {
        let exts = affine_extensions(&list("A7")).unwrap();
        let strings: Vec<String> = exts.iter().map(|l| l.to_string()).collect();
        assert_eq!(strings.len(), 2);
        assert!(strings.contains(&"~A7".to_string()));
        assert!(strings.contains(&"~E7".to_string()));
    }

    #[test]
    fn extensions_of_products() {
        let cases = [
            ("A5+A2", vec!["~A5+~A2"]),
            ("D6+A1", vec!["~D6+~A1"]),
            ("E7", vec!["~E7"]),
            ("D4+3A1", vec!["~D4+3~A1"]),
            ("2A3+A1", vec!["2~A3+~A1"]),
            ("7A1", vec!["7~A1"]),
        ];
        for (input, expect) in cases {
            let exts = affine_extensions(&list(input)).unwrap();
            let mut strings: Vec<String> = exts.iter().map(|l| l.to_string()).collect();
            strings.sort();
            assert_eq!(strings, expect, "extensions of {input}");
        }
    }

    #[test]
    fn e7_subsystem_census() {
        let subs = finite_index_subsystems_e7();
        let mut names: Vec<String> = subs.iter().map(|s| s.type_list().to_string()).collect();
        names.sort();
        let mut expected = vec![
            "E7", "A7", "D6+A1", "A5+A2", "D4+3A1", "2A3+A1", "7A1",
        ];
        expected.sort_unstable();
        assert_eq!(names, expected);
        for sub in &subs {
            assert_eq!(smith_normal_form(sub.generators()).rank, 7);
            assert_eq!(sub.type_list().total_rank(), 7);
        }
    }

    #[test]
    fn e7_quotients() {
        let expected: BTreeMap<&str, &str> = [
            ("E7", "0"),
            ("A7", "Z/2"),
            ("D6+A1", "Z/2"),
            ("A5+A2", "Z/3"),
            ("D4+3A1", "(Z/2)^2"),
            ("2A3+A1", "Z/4"),
            ("7A1", "(Z/2)^3"),
        ]
        .into_iter()
        .collect();
        for sub in finite_index_subsystems_e7() {
            let q = quotient_group(&sub).unwrap();
            let name = sub.type_list().to_string();
            assert_eq!(q.to_string(), expected[name.as_str()], "quotient for {name}");
        }
    }

    #[test]
    fn degenerate_quotient_rejected() {
        let generators = IntMatrix::from_rows(&[
            vec![1, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0],
            vec![1, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0],
        ]);
        let sub = RootSublattice::new(list("A2"), generators);
        assert_eq!(
            quotient_group(&sub).unwrap_err(),
            Error::InfiniteQuotient { rank: 2 }
        );
    }

    #[test]
    fn generators_are_roots_of_norm_two() {
        let c = e7_cartan();
        for sub in finite_index_subsystems_e7() {
            let g = sub.generators();
            for i in 0..g.rows() {
                let row: Vec<i64> = (0..7)
                    .map(|j| i64::try_from(g.get(i, j)).unwrap())
                    .collect();
                let v: [i64; 7] = row.try_into().unwrap();
                assert_eq!(pairing(&c, &v, &v), 2);
            }
        }
    }
}
