//! Point configurations on the line, their cluster graphs, Ursell coefficients
//! and the one-sided singleton-tree count.
//!
//! The identity checked here is
//!
//! ```text
//! Σ_{H connected spanning subgraph of G} (-1)^{|E(H)|} = (-1)^{n-1} · #{one-sided trees T ⊆ G}
//! ```
//!
//! where a tree rooted at vertex 1 is one-sided when every vertex two or more
//! levels below the root continues monotonically away from its grandparent.

use std::collections::HashSet;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest configuration accepted by the enumerators.
pub const MAX_VERTICES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration")]
pub struct PointConfiguration {
    coords: Vec<Rational>,
    radius: Rational,
}

#[derive(Deserialize)]
struct RawConfiguration {
    coords: Vec<Rational>,
    #[serde(default = "Rational::one")]
    radius: Rational,
}

impl TryFrom<RawConfiguration> for PointConfiguration {
    type Error = Error;

    fn try_from(raw: RawConfiguration) -> Result<Self> {
        PointConfiguration::new(raw.coords, raw.radius)
    }
}

impl PointConfiguration {
    pub fn new(coords: Vec<Rational>, radius: Rational) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Domain("a configuration needs at least one point".into()));
        }
        if !radius.is_positive() {
            return Err(Error::Domain(format!("radius must be positive, got {radius}")));
        }
        let mut seen = HashSet::with_capacity(coords.len());
        for x in &coords {
            if !seen.insert(x) {
                return Err(Error::DuplicateCoordinate(x.to_string()));
            }
        }
        Ok(PointConfiguration { coords, radius })
    }

    /// Unit radius.
    pub fn unit(coords: Vec<Rational>) -> Result<Self> {
        Self::new(coords, Rational::one())
    }

    /// Parses `["0", "2/5", ...]` or `{"coords": [...], "radius": "1"}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if value.is_array() {
            let coords: Vec<Rational> =
                serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
            Self::unit(coords)
        } else {
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
        }
    }

    /// `n` distinct points with coordinates in `{0, 1/10⁶, ..., n}` and unit radius.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        const DENOM: i64 = 1_000_000;
        let top = n as i64 * DENOM;
        let mut seen = HashSet::with_capacity(n);
        let mut coords = Vec::with_capacity(n);
        while coords.len() < n {
            let p = rng.random_range(0..=top);
            if seen.insert(p) {
                coords.push(Rational::ratio(p, DENOM));
            }
        }
        PointConfiguration { coords, radius: Rational::one() }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Whether the first point is the leftmost or the rightmost one.
    pub fn root_is_extremal(&self) -> bool {
        let x0 = &self.coords[0];
        self.coords.iter().all(|x| x >= x0) || self.coords.iter().all(|x| x <= x0)
    }

    /// Same points with the leftmost moved to the front.
    pub fn with_leftmost_first(&self) -> Self {
        let mut coords = self.coords.clone();
        let i = (0..coords.len()).min_by(|&a, &b| coords[a].cmp(&coords[b])).unwrap_or(0);
        coords.swap(0, i);
        PointConfiguration { coords, radius: self.radius.clone() }
    }

    pub fn translated(&self, shift: &Rational) -> Self {
        let coords = self.coords.iter().map(|x| x + shift).collect();
        PointConfiguration { coords, radius: self.radius.clone() }
    }

    pub fn reflected(&self) -> Self {
        let coords = self.coords.iter().map(|x| -x).collect();
        PointConfiguration { coords, radius: self.radius.clone() }
    }

    fn check_size(&self, what: &'static str) -> Result<()> {
        if self.len() > MAX_VERTICES {
            return Err(Error::SizeLimit { what, limit: MAX_VERTICES, got: self.len() });
        }
        Ok(())
    }
}

impl FromStr for PointConfiguration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_json(s)
    }
}

/// Graph on at most 64 vertices, stored as neighbour bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterGraph {
    adjacency: Vec<u64>,
}

impl ClusterGraph {
    /// Builds a graph from an edge list on `n` vertices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::SizeLimit { what: "cluster graph", limit: 64, got: n });
        }
        let mut adjacency = vec![0u64; n];
        for &(i, j) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::Domain(format!("bad edge ({i}, {j}) on {n} vertices")));
            }
            adjacency[i] |= 1 << j;
            adjacency[j] |= 1 << i;
        }
        Ok(ClusterGraph { adjacency })
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] >> j & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        let full = full_mask(self.len());
        reach(&self.adjacency, 0, full) == full
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 { u64::MAX } else { (1u64 << n) - 1 }
}

/// Vertices reachable from `start` inside `within`.
fn reach(adjacency: &[u64], start: usize, within: u64) -> u64 {
    if adjacency.is_empty() {
        return 0;
    }
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adjacency[v] & within & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

pub fn build_cluster(config: &PointConfiguration) -> Result<ClusterGraph> {
    let n = config.len();
    if n > 64 {
        return Err(Error::SizeLimit { what: "cluster graph", limit: 64, got: n });
    }
    let xs = config.coords();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match (&xs[i] - &xs[j]).abs() {
                d if d.is_zero() => return Err(Error::DuplicateCoordinate(xs[i].to_string())),
                d if d < *config.radius() => edges.push((i, j)),
                _ => {}
            }
        }
    }
    ClusterGraph::from_edges(n, &edges)
}

/// Signed count of connected spanning subgraphs, by running over every edge subset.
pub fn ursell_bruteforce(g: &ClusterGraph) -> Result<BigInt> {
    let n = g.len();
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit { what: "ursell enumeration", limit: MAX_VERTICES, got: n });
    }
    if n == 0 {
        return Ok(BigInt::from(0));
    }
    if !g.is_connected() {
        return Ok(BigInt::from(0));
    }
    let edges = g.edges();
    let full = full_mask(n);
    let mut adjacency = vec![0u64; n];
    let mut total: i64 = 0;
    for subset in 0u64..1 << edges.len() {
        adjacency.iter_mut().for_each(|m| *m = 0);
        let mut bits = subset;
        while bits != 0 {
            let (i, j) = edges[bits.trailing_zeros() as usize];
            bits &= bits - 1;
            adjacency[i] |= 1 << j;
            adjacency[j] |= 1 << i;
        }
        if reach(&adjacency, 0, full) == full {
            total += if subset.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(BigInt::from(total))
}

/// Same quantity as [`ursell_bruteforce`] via the vertex-subset recursion
/// `c(S) = f(S) - Σ_{min S ∈ T ⊊ S} c(T) f(S∖T)`, where `f(S)` is 1 when
/// `S` spans no edge and 0 otherwise.
pub fn ursell_by_subsets(g: &ClusterGraph) -> Result<BigInt> {
    let n = g.len();
    if n > 20 {
        return Err(Error::SizeLimit { what: "ursell subset recursion", limit: 20, got: n });
    }
    if n == 0 {
        return Ok(BigInt::from(0));
    }
    let size = 1usize << n;
    let independent: Vec<bool> = (0..size)
        .map(|s| (0..n).all(|v| s >> v & 1 == 0 || g.adjacency[v] & s as u64 == 0))
        .collect();
    let mut c = vec![0i64; size];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut acc = i64::from(independent[s]);
        // T = low ∪ sub for every proper sub of rest
        let mut sub = (rest.wrapping_sub(1)) & rest;
        loop {
            if sub != rest {
                let t = low | sub;
                if independent[s ^ t] {
                    acc -= c[t];
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        c[s] = acc;
    }
    Ok(BigInt::from(c[size - 1]))
}

/// Number of trees on the cluster, rooted at the first point, in which every
/// vertex below level 1 lies on the far side of its parent from its grandparent.
pub fn count_one_sided_singleton_trees(config: &PointConfiguration) -> Result<BigInt> {
    config.check_size("singleton-tree enumeration")?;
    count_rooted(config, 0)
}

pub(crate) fn count_rooted(config: &PointConfiguration, root: usize) -> Result<BigInt> {
    let g = build_cluster(config)?;
    let n = g.len();
    let mut rank: Vec<usize> = (0..n).collect();
    rank.sort_by(|&a, &b| config.coords()[a].cmp(&config.coords()[b]));
    let mut position = vec![0usize; n];
    for (r, &v) in rank.iter().enumerate() {
        position[v] = r;
    }
    let search = TreeSearch { g: &g, position, root, n };
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    let order: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    Ok(BigInt::from(search.extend(&mut parent, &order, 0)))
}

struct TreeSearch<'a> {
    g: &'a ClusterGraph,
    position: Vec<usize>,
    root: usize,
    n: usize,
}

impl TreeSearch<'_> {
    fn extend(&self, parent: &mut [usize], order: &[usize], at: usize) -> u64 {
        if at == order.len() {
            return u64::from(self.acyclic(parent));
        }
        let v = order[at];
        let mut count = 0;
        for p in 0..self.n {
            if p == v || !self.g.has_edge(v, p) {
                continue;
            }
            parent[v] = p;
            if self.locally_one_sided(parent, v) {
                count += self.extend(parent, order, at + 1);
            }
        }
        parent[v] = usize::MAX;
        count
    }

    /// Checks every grandparent condition that became decidable once `v` got its parent.
    fn locally_one_sided(&self, parent: &[usize], v: usize) -> bool {
        if !self.monotone_below(parent, v) {
            return false;
        }
        (0..self.n).filter(|&c| c != self.root && parent[c] == v).all(|c| self.monotone_below(parent, c))
    }

    fn monotone_below(&self, parent: &[usize], v: usize) -> bool {
        let p = parent[v];
        if p == self.root {
            return true;
        }
        let g = parent[p];
        if g == usize::MAX {
            return true;
        }
        let (a, b, c) = (self.position[v], self.position[p], self.position[g]);
        (a < b && b < c) || (a > b && b > c)
    }

    fn acyclic(&self, parent: &[usize]) -> bool {
        (0..self.n).all(|start| {
            let mut v = start;
            for _ in 0..self.n {
                if v == self.root {
                    return true;
                }
                v = parent[v];
            }
            v == self.root
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PenroseCheck {
    #[serde(with = "bigint_text")]
    pub ursell: BigInt,
    #[serde(with = "bigint_text")]
    pub singleton_count: BigInt,
    pub identity_holds: bool,
}

mod bigint_text {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(v) {
            Ok(small) => s.serialize_i64(small),
            Err(_) => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BigInt::from(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

pub fn penrose_check(config: &PointConfiguration) -> Result<PenroseCheck> {
    config.check_size("penrose check")?;
    let ursell = ursell_bruteforce(&build_cluster(config)?)?;
    let singleton_count = count_one_sided_singleton_trees(config)?;
    let sign = if config.len() % 2 == 1 { 1 } else { -1 };
    let identity_holds = ursell == &singleton_count * sign;
    Ok(PenroseCheck { ursell, singleton_count, identity_holds })
}

pub fn check_penrose_identity(config: &PointConfiguration) -> Result<bool> {
    Ok(penrose_check(config)?.identity_holds)
}
