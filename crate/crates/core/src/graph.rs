//! Labeled simple graphs on at most six vertices.
//!
//! A graph is stored as its vertex count plus an edge bitset with one bit per
//! unordered vertex pair. The pair `(i, j)` with `i < j` (0-based) owns bit
//! `j * (j - 1) / 2 + i`, so for every `n` the codes of graphs on `n`
//! vertices are exactly `0 .. 2^(n(n-1)/2)` and a graph on fewer vertices
//! keeps its code when vertices are appended.
//!
//! The `(n, code)` pair is the stable identity of a graph everywhere in this
//! crate; it orders and hashes graphs.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const MIN_VERTICES: usize = 1;
pub const MAX_VERTICES: usize = 6;

/// Edge bitset of a labeled graph.
pub type EdgeCode = u32;

/// Number of unordered vertex pairs on `n` vertices.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit index of the unordered pair `{i, j}`. Panics if `i == j`.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    assert_ne!(i, j, "self-loops have no pair index");
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

/// Inverse of [`pair_index`]: returns `(i, j)` with `i < j`.
pub fn pair_of_index(idx: usize) -> (usize, usize) {
    let mut hi = 1;
    while (hi + 1) * hi / 2 <= idx {
        hi += 1;
    }
    (idx - hi * (hi - 1) / 2, hi)
}

pub(crate) fn check_vertex_count(n: usize) -> Result<()> {
    if (MIN_VERTICES..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::VertexCount(n))
    }
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_graph_count(n: usize) -> Result<usize> {
    check_vertex_count(n)?;
    Ok(1usize << pair_count(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    code: EdgeCode,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_code(n, 0)
    }

    pub fn from_code(n: usize, code: EdgeCode) -> Result<Self> {
        check_vertex_count(n)?;
        if u64::from(code) >> pair_count(n) != 0 {
            return Err(Error::EdgeCode {
                code: code.into(),
                n,
            });
        }
        Ok(Self { n: n as u8, code })
    }

    pub(crate) fn from_code_unchecked(n: usize, code: EdgeCode) -> Self {
        debug_assert!(u64::from(code) >> pair_count(n) == 0);
        Self { n: n as u8, code }
    }

    /// Builds a graph from 0-based vertex pairs. Repeated pairs are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_vertex_count(n)?;
        let mut code = 0;
        for &(i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if i == j {
                return Err(Error::Parse {
                    input: format!("{}-{}", i + 1, j + 1),
                    reason: "self-loops are not allowed".into(),
                });
            }
            code |= 1 << pair_index(i, j);
        }
        Ok(Self { n: n as u8, code })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        Ok(Self::from_code_unchecked(
            n,
            ((1u64 << pair_count(n)) - 1) as EdgeCode,
        ))
    }

    /// Star graph with the given center joined to every other vertex.
    pub fn star(n: usize, center: usize) -> Result<Self> {
        check_vertex_count(n)?;
        if center >= n {
            return Err(Error::VertexOutOfRange { vertex: center, n });
        }
        let edges: Vec<_> = (0..n)
            .filter(|&v| v != center)
            .map(|v| (center, v))
            .collect();
        Self::from_edges(n, &edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn code(&self) -> EdgeCode {
        self.code
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i < self.n() && j < self.n() && self.code >> pair_index(i, j) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.code.count_ones() as usize
    }

    /// Edges as 0-based `(i, j)` pairs with `i < j`, in bit-index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..pair_count(self.n()))
            .filter(move |&k| self.code >> k & 1 == 1)
            .map(pair_of_index)
    }

    /// Neighborhood of `a` as a vertex bitmask (bit `v` set for neighbor `v`).
    pub fn neighbor_mask(&self, a: usize) -> u32 {
        (0..self.n())
            .filter(|&b| self.has_edge(a, b))
            .fold(0, |m, b| m | 1 << b)
    }

    pub fn neighbors(&self, a: usize) -> Vec<usize> {
        (0..self.n()).filter(|&b| self.has_edge(a, b)).collect()
    }

    pub fn degree(&self, a: usize) -> usize {
        self.neighbor_mask(a).count_ones() as usize
    }

    /// Symmetric 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.has_edge(i, j) as u8).collect())
            .collect()
    }

    /// Returns a copy with the pair `{i, j}` flipped.
    pub fn toggled(&self, i: usize, j: usize) -> Result<Self> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::VertexOutOfRange {
                vertex: j,
                n: self.n(),
            });
        }
        Ok(Self {
            n: self.n,
            code: self.code ^ 1 << pair_index(i, j),
        })
    }

    /// Relabels vertices: every edge `{i, j}` becomes `{p(i), p(j)}`.
    pub fn permuted(&self, p: &Permutation) -> Result<Self> {
        if p.len() != self.n() {
            return Err(Error::Permutation(format!(
                "permutation on {} points applied to a graph on {} vertices",
                p.len(),
                self.n()
            )));
        }
        Ok(self.permuted_unchecked(p.as_slice()))
    }

    fn permuted_unchecked(&self, map: &[u8]) -> Self {
        let code = self.edges().fold(0, |acc, (i, j)| {
            acc | 1 << pair_index(map[i] as usize, map[j] as usize)
        });
        Self { n: self.n, code }
    }
}

/// Free-function form of [`Graph::permuted`].
pub fn permute(g: &Graph, p: &Permutation) -> Result<Graph> {
    g.permuted(p)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices in ascending code order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let count = labeled_graph_count(n)?;
    Ok((0..count).map(move |c| Graph::from_code_unchecked(n, c as EdgeCode)))
}

/// Bijection on `{0, .., n-1}`; `mapping[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<u8>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Permutation(format!(
                    "{mapping:?} is not a bijection"
                )));
            }
        }
        Ok(Self {
            mapping: mapping.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            mapping: (0..n as u8).collect(),
        }
    }

    /// Swaps `i` and `j`, fixing everything else.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut mapping: Vec<usize> = (0..n).collect();
        if i >= n || j >= n {
            return Err(Error::Permutation(format!(
                "transposition ({i} {j}) on {n} points"
            )));
        }
        mapping.swap(i, j);
        Self::new(mapping)
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.mapping[v] as usize
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.mapping
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.mapping.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Self { mapping: inv }
    }

    /// `self` after `other`: `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            mapping: other
                .mapping
                .iter()
                .map(|&v| self.mapping[v as usize])
                .collect(),
        }
    }

    /// All `n!` permutations in lexicographic order of their mappings.
    pub fn all(n: usize) -> Vec<Self> {
        let mut current: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Self {
            mapping: current.clone(),
        }];
        while next_permutation(&mut current) {
            out.push(Self {
                mapping: current.clone(),
            });
        }
        out
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Per-permutation image of every pair index, cached per vertex count.
fn pair_maps(n: usize) -> &'static [Vec<u8>] {
    static CACHE: [OnceLock<Vec<Vec<u8>>>; MAX_VERTICES + 1] =
        [const { OnceLock::new() }; MAX_VERTICES + 1];
    CACHE[n].get_or_init(|| {
        Permutation::all(n)
            .iter()
            .map(|p| {
                (0..pair_count(n))
                    .map(|k| {
                        let (i, j) = pair_of_index(k);
                        pair_index(p.apply(i), p.apply(j)) as u8
                    })
                    .collect()
            })
            .collect()
    })
}

fn apply_pair_map(code: EdgeCode, map: &[u8]) -> EdgeCode {
    let mut rest = code;
    let mut out = 0;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        out |= 1 << map[k];
        rest &= rest - 1;
    }
    out
}

/// Lexicographically smallest code over all vertex relabelings of `g`.
///
/// Brute force over all `n!` permutations; two graphs share a canonical form
/// iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Graph {
    let code = pair_maps(g.n())
        .iter()
        .map(|m| apply_pair_map(g.code, m))
        .min()
        .unwrap_or(g.code);
    Graph::from_code_unchecked(g.n(), code)
}

/// Every labeled image of `g` under vertex relabeling, sorted and deduplicated.
pub fn isomorphism_orbit(g: &Graph) -> Vec<EdgeCode> {
    let mut orbit: Vec<EdgeCode> = pair_maps(g.n())
        .iter()
        .map(|m| apply_pair_map(g.code, m))
        .collect();
    orbit.sort_unstable();
    orbit.dedup();
    orbit
}

/// Canonical code of every labeled graph on `n` vertices, indexed by code.
#[derive(Debug, Clone)]
pub struct CanonicalTable {
    n: usize,
    canon: Vec<EdgeCode>,
}

impl CanonicalTable {
    pub fn new(n: usize) -> Result<Self> {
        let count = labeled_graph_count(n)?;
        let mut canon = vec![EdgeCode::MAX; count];
        for code in 0..count {
            if canon[code] != EdgeCode::MAX {
                continue;
            }
            // Ascending sweep: the first unseen code is the minimum of its orbit.
            let g = Graph::from_code_unchecked(n, code as EdgeCode);
            for member in isomorphism_orbit(&g) {
                canon[member as usize] = code as EdgeCode;
            }
        }
        Ok(Self { n, canon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn canonical(&self, code: EdgeCode) -> EdgeCode {
        self.canon[code as usize]
    }

    /// Distinct canonical codes, ascending.
    pub fn representatives(&self) -> Vec<EdgeCode> {
        self.canon
            .iter()
            .enumerate()
            .filter(|&(c, &k)| c as EdgeCode == k)
            .map(|(_, &k)| k)
            .collect()
    }

    /// Distinct canonical codes among `members`, ascending.
    pub fn representatives_of(&self, members: &[EdgeCode]) -> Vec<EdgeCode> {
        let mut reps: Vec<_> = members.iter().map(|&c| self.canonical(c)).collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }
}

impl fmt::Display for Graph {
    /// `n=<int>;edges=<i>-<j>,...` with 1-based vertices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut edges: Vec<_> = self.edges().collect();
        edges.sort_unstable();
        write!(f, "n={};edges=", self.n)?;
        for (k, (i, j)) in edges.into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Accepts `n=3;edges=1-3,2-3` (1-based) or `n=3;code=5`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_owned(),
            reason: reason.to_owned(),
        };
        let trimmed = s.trim();
        let (head, tail) = trimmed
            .split_once(';')
            .ok_or_else(|| err("expected `n=<int>;edges=...` or `n=<int>;code=<int>`"))?;
        let n: usize = head
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| err("missing `n=`"))?
            .trim()
            .parse()
            .map_err(|_| err("vertex count is not an integer"))?;
        check_vertex_count(n)?;
        let tail = tail.trim();
        if let Some(code) = tail.strip_prefix("code=") {
            let code: u64 = code
                .trim()
                .parse()
                .map_err(|_| err("edge code is not an unsigned integer"))?;
            let code = EdgeCode::try_from(code).map_err(|_| Error::EdgeCode { code, n })?;
            return Graph::from_code(n, code);
        }
        let list = tail
            .strip_prefix("edges=")
            .ok_or_else(|| err("expected `edges=` or `code=` after `;`"))?;
        let mut edges = Vec::new();
        for item in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| err("edge must look like `i-j`"))?;
            let parse_vertex = |t: &str| -> Result<usize> {
                let v: usize = t
                    .trim()
                    .parse()
                    .map_err(|_| err("vertex is not an integer"))?;
                if v == 0 || v > n {
                    return Err(err("vertices are numbered 1..=n"));
                }
                Ok(v - 1)
            };
            let (i, j) = (parse_vertex(a)?, parse_vertex(b)?);
            if i == j {
                return Err(err("self-loops are not allowed"));
            }
            edges.push((i, j));
        }
        Graph::from_edges(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn pair_index_layout() {
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(1, 2), 2);
        assert_eq!(pair_index(3, 0), 3);
        for k in 0..pair_count(MAX_VERTICES) {
            let (i, j) = pair_of_index(k);
            assert!(i < j);
            assert_eq!(pair_index(i, j), k);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(5).unwrap().count(), 1024);
        let codes: Vec<_> = enumerate_labeled_graphs(4)
            .unwrap()
            .map(|g| g.code())
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            enumerate_labeled_graphs(0),
            Err(Error::VertexCount(0))
        ));
        assert!(matches!(
            enumerate_labeled_graphs(7),
            Err(Error::VertexCount(7))
        ));
    }

    #[test]
    fn code_range_is_checked() {
        assert!(Graph::from_code(3, 7).is_ok());
        assert!(Graph::from_code(3, 8).is_err());
    }

    #[test]
    fn permute_examples() {
        let tri = Graph::complete(3).unwrap();
        for p in Permutation::all(3) {
            assert_eq!(tri.permuted(&p).unwrap(), tri);
        }
        let path = g(3, &[(0, 1), (1, 2)]);
        let swap = Permutation::transposition(3, 0, 2).unwrap();
        assert_eq!(path.permuted(&swap).unwrap(), path);

        let edge = g(3, &[(0, 1)]);
        let cycle = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(edge.permuted(&cycle).unwrap(), g(3, &[(1, 2)]));

        assert!(edge.permuted(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn malformed_permutations() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn canonical_examples() {
        let tri = Graph::complete(3).unwrap();
        assert_eq!(canonical_form(&tri), tri);
        assert_eq!(
            canonical_form(&g(3, &[(0, 1), (1, 2)])),
            canonical_form(&g(3, &[(1, 0), (0, 2)]))
        );
        assert_ne!(
            canonical_form(&g(4, &[(0, 1), (2, 3)])),
            canonical_form(&g(4, &[(0, 1), (1, 2)]))
        );
    }

    #[test]
    fn canonical_table_agrees_with_brute_force() {
        for n in 1..=5 {
            let table = CanonicalTable::new(n).unwrap();
            for graph in enumerate_labeled_graphs(n).unwrap() {
                assert_eq!(table.canonical(graph.code()), canonical_form(&graph).code());
            }
        }
    }

    #[test]
    fn text_format() {
        let graph: Graph = "n=3;edges=1-3".parse().unwrap();
        assert_eq!(graph, g(3, &[(0, 2)]));
        assert_eq!(graph.to_string(), "n=3;edges=1-3");
        let empty: Graph = "n=3;edges=".parse().unwrap();
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(empty.to_string(), "n=3;edges=");
        let by_code: Graph = "n=3;code=2".parse().unwrap();
        assert_eq!(by_code, graph);
        let spaced: Graph = " n=4 ; edges= 2-1 , 4-3 ".parse().unwrap();
        assert_eq!(spaced, g(4, &[(0, 1), (2, 3)]));

        for bad in [
            "",
            "n=3",
            "n=x;edges=",
            "n=3;edges=1-4",
            "n=3;edges=0-1",
            "n=3;edges=2-2",
            "n=3;edges=1+2",
            "n=3;code=8",
            "n=3;verts=1",
            "n=9;edges=",
        ] {
            assert!(bad.parse::<Graph>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn adjacency_is_symmetric() {
        let graph = g(4, &[(0, 2), (1, 3), (2, 3)]);
        let a = graph.adjacency_matrix();
        for i in 0..4 {
            assert_eq!(a[i][i], 0);
            for j in 0..4 {
                assert_eq!(a[i][j], a[j][i]);
            }
        }
        assert_eq!(graph.neighbors(3), vec![1, 2]);
        assert_eq!(graph.degree(0), 1);
    }
}
