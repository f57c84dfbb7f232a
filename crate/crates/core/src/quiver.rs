//! Dynkin diagrams, height functions and the quivers they orient.
//!
//! Vertices are stored 0-based and printed 1-based. The labelling follows
//! Bourbaki:
//!
//! * `A_n`: the path `1 - 2 - ... - n`;
//! * `D_n`: the path `1 - ... - (n-2)` with `n-1` and `n` both attached to `n-2`;
//! * `E_n`: the path `1 - 3 - 4 - 5 - ... - n` with `2` attached to `4`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidType(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the diagram as 0-based pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        match self.family {
            Family::A => edges.extend((0..n - 1).map(|i| (i, i + 1))),
            Family::D => {
                edges.extend((0..n - 2).map(|i| (i, i + 1)));
                edges.push((n - 3, n - 1));
            }
            Family::E => {
                edges.push((0, 2));
                edges.push((1, 3));
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
            }
        }
        edges.sort_unstable();
        edges
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.rank]; self.rank];
        for (i, j) in self.edges() {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        adj
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let adj = self.adjacency();
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| if i == j { 2 } else if adj[i][j] { -1 } else { 0 })
                    .collect()
            })
            .collect()
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            _ => 120,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        DynkinType::new(family, rank)
    }
}

/// Integer function on the vertices, differing by exactly one across every edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeightFunction(Vec<i64>);

impl HeightFunction {
    pub fn new(values: Vec<i64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn validate(&self, ty: &DynkinType) -> Result<()> {
        if self.0.len() != ty.rank() {
            return Err(Error::InvalidHeight(format!(
                "{} values given for {} vertices",
                self.0.len(),
                ty.rank()
            )));
        }
        for (i, j) in ty.edges() {
            if (self.0[i] - self.0[j]).abs() != 1 {
                return Err(Error::InvalidHeight(format!(
                    "|xi({}) - xi({})| = {} on an edge",
                    i + 1,
                    j + 1,
                    (self.0[i] - self.0[j]).abs()
                )));
            }
        }
        Ok(())
    }

    /// The bipartite height function: 0 on one colour class (containing vertex 1), 1 on the other.
    pub fn bipartite(ty: &DynkinType) -> Self {
        let n = ty.rank();
        let adj = ty.adjacency();
        let mut h = vec![-1i64; n];
        h[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if adj[i][j] && h[j] < 0 {
                    h[j] = 1 - h[i];
                    queue.push_back(j);
                }
            }
        }
        Self(h)
    }
}

impl FromStr for HeightFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidHeight(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self(values))
    }
}

impl fmt::Display for HeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A non-negative integer vector indexed by the vertices.
///
/// Ordered by total dimension first, then lexicographically *descending*, so
/// that the simple roots come first in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.iter().any(|&e| e < 0) {
            return Err(Error::Parse(format!("negative entry in {entries:?}")));
        }
        Ok(Self(entries))
    }

    pub(crate) fn from_raw(entries: Vec<i64>) -> Self {
        debug_assert!(entries.iter().all(|&e| e >= 0));
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let v: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
        v.iter().all(|&e| e >= 0).then_some(Self(v))
    }

    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for DimVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for DimVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A pair `(w(0), w(1))` of multiplicities of indecomposable injectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WVector {
    pub w0: DimVector,
    pub w1: DimVector,
}

impl WVector {
    pub fn new(w0: DimVector, w1: DimVector) -> Self {
        assert_eq!(w0.len(), w1.len(), "w(0) and w(1) must have the same length");
        Self { w0, w1 }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(DimVector::zero(n), DimVector::zero(n))
    }

    pub fn from_slices(w0: &[i64], w1: &[i64]) -> Result<Self> {
        if w0.len() != w1.len() {
            return Err(Error::Parse("w(0) and w(1) differ in length".into()));
        }
        Ok(Self::new(DimVector::new(w0.to_vec())?, DimVector::new(w1.to_vec())?))
    }

    pub fn rank(&self) -> usize {
        self.w0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.w0.is_zero() && self.w1.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.w0.add(&other.w0), self.w1.add(&other.w1))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.w0.scale(k), self.w1.scale(k))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(Self::new(
            self.w0.checked_sub(&other.w0)?,
            self.w1.checked_sub(&other.w1)?,
        ))
    }

    /// Entrywise comparison.
    pub fn le(&self, other: &Self) -> bool {
        self.w0.le(&other.w0) && self.w1.le(&other.w1)
    }

    /// Concatenation `w(0) ++ w(1)`.
    pub fn flat(&self) -> Vec<i64> {
        self.w0.entries().iter().chain(self.w1.entries()).copied().collect()
    }

    pub fn from_flat(flat: &[i64]) -> Self {
        let n = flat.len() / 2;
        Self::new(
            DimVector::from_raw(flat[..n].to_vec()),
            DimVector::from_raw(flat[n..].to_vec()),
        )
    }

    /// All w-vectors of rank `n` whose entries are bounded entrywise by `bound`.
    pub fn boxed(bound: &WVector) -> Vec<WVector> {
        let limits = bound.flat();
        let mut out = Vec::new();
        let mut cur = vec![0i64; limits.len()];
        loop {
            out.push(WVector::from_flat(&cur));
            let mut k = 0;
            loop {
                if k == cur.len() {
                    return out;
                }
                if cur[k] < limits[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    pub fn uniform(n: usize, bound: i64) -> Self {
        Self::new(DimVector::from_raw(vec![bound; n]), DimVector::from_raw(vec![bound; n]))
    }
}

impl fmt::Display for WVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.w0.entries().iter().map(|v| v.to_string()).collect();
        let b: Vec<String> = self.w1.entries().iter().map(|v| v.to_string()).collect();
        write!(f, "{};{}", a.join(","), b.join(","))
    }
}

impl FromStr for WVector {
    type Err = Error;

    /// Parses `"a1,...,an;b1,...,bn"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed w-vector {s:?}, expected \"a1,..,an;b1,..,bn\""));
        let (a, b) = s.split_once(';').ok_or_else(bad)?;
        let parse = |part: &str| -> Result<Vec<i64>> {
            part.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect()
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a.len() != b.len() {
            return Err(bad());
        }
        WVector::from_slices(&a, &b).map_err(|_| bad())
    }
}

/// The Dynkin quiver `Q_xi`: an arrow `i -> j` for each edge with `xi(i) = xi(j) + 1`.
#[derive(Debug, Clone)]
pub struct Quiver {
    ty: DynkinType,
    height: HeightFunction,
    arrows: Vec<(usize, usize)>,
    /// `reach[i][j]`: there is a directed path `i ~> j` (including `i == j`).
    reach: Vec<Vec<bool>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

pub fn build_quiver(ty: DynkinType, xi: HeightFunction) -> Result<Quiver> {
    xi.validate(&ty)?;
    let h = xi.values();
    let arrows = ty
        .edges()
        .into_iter()
        .map(|(i, j)| if h[i] == h[j] + 1 { (i, j) } else { (j, i) })
        .collect();
    let mut q = Quiver {
        ty,
        height: xi,
        arrows,
        reach: Vec::new(),
    };
    q.reach = (0..q.rank())
        .map(|i| (0..q.rank()).map(|j| q.path(i, j).is_some()).collect())
        .collect();
    Ok(q)
}

impl Quiver {
    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn height(&self) -> &HeightFunction {
        &self.height
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// `n_ij`, the number of arrows `i -> j` (0 or 1).
    pub fn arrow_count(&self, i: usize, j: usize) -> i64 {
        self.arrows.iter().filter(|&&a| a == (i, j)).count() as i64
    }

    pub fn arrow_count_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0; n]; n];
        for &(i, j) in &self.arrows {
            m[i][j] += 1;
        }
        m
    }

    /// Indices of arrows with source `i`.
    pub fn out_arrows(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.0 == i)
            .map(|(k, _)| k)
    }

    /// Indices of arrows with target `i`.
    pub fn in_arrows(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.1 == i)
            .map(|(k, _)| k)
    }

    pub fn is_sink(&self, k: usize) -> bool {
        self.out_arrows(k).next().is_none()
    }

    pub fn is_source(&self, k: usize) -> bool {
        self.in_arrows(k).next().is_none()
    }

    /// The quiver with all arrows at `k` reversed; `k` must be a sink or a source.
    pub fn reflect(&self, k: usize) -> Quiver {
        let mut h = self.height.values().to_vec();
        if self.is_sink(k) {
            h[k] += 2;
        } else {
            assert!(self.is_source(k), "reflection at a vertex that is neither sink nor source");
            h[k] -= 2;
        }
        build_quiver(self.ty, HeightFunction::new(h)).expect("reflected height function stays valid")
    }

    /// The arrows along the directed path `from ~> to`, in order, if one exists.
    /// The empty path is returned for `from == to`.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let n = self.rank();
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = Vec::new();
                let mut cur = to;
                while let Some(a) = prev[cur] {
                    path.push(a);
                    cur = self.arrows[a].0;
                }
                path.reverse();
                return Some(path);
            }
            for a in self.out_arrows(v) {
                let t = self.arrows[a].1;
                if !seen[t] {
                    seen[t] = true;
                    prev[t] = Some(a);
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn has_path(&self, from: usize, to: usize) -> bool {
        self.reach[from][to]
    }

    /// Vertices sorted by height (sinks of the whole quiver first), ties by index.
    pub fn height_order(&self) -> Vec<usize> {
        let h = self.height.values();
        let mut order: Vec<usize> = (0..self.rank()).collect();
        order.sort_by_key(|&i| (h[i], i));
        order
    }

    pub fn is_acyclic(&self) -> bool {
        // heights strictly decrease along arrows
        let h = self.height.values();
        self.arrows.iter().all(|&(i, j)| h[i] > h[j])
    }
}

/// `<d, e> = sum_i d_i e_i - sum_{i -> j} d_i e_j`.
pub fn euler_form(q: &Quiver, d: &DimVector, e: &DimVector) -> i64 {
    let diag: i64 = d.entries().iter().zip(e.entries()).map(|(a, b)| a * b).sum();
    let off: i64 = q
        .arrows()
        .iter()
        .map(|&(i, j)| d.entries()[i] * e.entries()[j])
        .sum();
    diag - off
}

/// Applies the simple reflection `s_i` to an element of the root lattice.
pub(crate) fn simple_reflection(ty: &DynkinType, beta: &[i64], i: usize) -> Vec<i64> {
    let cartan = ty.cartan_matrix();
    let pairing: i64 = (0..beta.len()).map(|j| cartan[i][j] * beta[j]).sum();
    let mut out = beta.to_vec();
    out[i] -= pairing;
    out
}

/// All positive roots, in the canonical order of [`DimVector`].
pub fn positive_roots(ty: &DynkinType) -> Vec<DimVector> {
    let n = ty.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let r = simple_reflection(ty, &beta, i);
            if r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<DimVector> = seen.into_iter().map(DimVector::from_raw).collect();
    roots.sort();
    roots
}

/// A Laurent polynomial in a single variable `t`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TLaurent(BTreeMap<i32, i64>);

impl TLaurent {
    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        Self(m)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (&e, &c) in &other.0 {
            let v = m.entry(e).or_insert(0);
            *v += c;
            if *v == 0 {
                m.remove(&e);
            }
        }
        Self(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }
}

impl fmt::Display for TLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(&e, &c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Per-vertex graded dimensions `sum_n dim V^n t^n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedLaurent(pub Vec<TLaurent>);

/// Quantum Cartan matrix: `t + t^{-1}` on the diagonal, `-1` on edges.
pub fn quantum_cartan(ty: &DynkinType) -> Vec<Vec<TLaurent>> {
    let adj = ty.adjacency();
    let n = ty.rank();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        TLaurent::monomial(1, 1).add(&TLaurent::monomial(-1, 1))
                    } else if adj[i][j] {
                        TLaurent::monomial(0, -1)
                    } else {
                        TLaurent::default()
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(code: &str, h: &[i64]) -> Quiver {
        build_quiver(code.parse().unwrap(), HeightFunction::new(h.to_vec())).unwrap()
    }

    #[test]
    fn example_a3_orientation() {
        let q = quiver("A3", &[1, 2, 3]);
        assert_eq!(q.arrows(), &[(1, 0), (2, 1)]);
        let q = quiver("A2", &[0, 1]);
        assert_eq!(q.arrows(), &[(1, 0)]);
        let q = quiver("A3", &[0, 1, 0]);
        assert_eq!(q.arrows(), &[(1, 0), (1, 2)]);
    }

    #[test]
    fn rejects_bad_heights() {
        let ty: DynkinType = "A3".parse().unwrap();
        assert!(build_quiver(ty, HeightFunction::new(vec![0, 2, 1])).is_err());
        assert!(build_quiver(ty, HeightFunction::new(vec![0, 1])).is_err());
        assert!(build_quiver(ty, HeightFunction::new(vec![0, 0, 1])).is_err());
    }

    #[test]
    fn type_codes() {
        for code in ["A2", "A9", "D4", "D9", "E6", "E7", "E8"] {
            let t: DynkinType = code.parse().unwrap();
            assert_eq!(t.to_string(), code);
        }
        for bad in ["D3", "E5", "E9", "B3", "A0", "A", ""] {
            assert!(bad.parse::<DynkinType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn root_counts_and_order() {
        let a2 = positive_roots(&"A2".parse().unwrap());
        assert_eq!(
            a2,
            vec![
                DimVector::from_raw(vec![1, 0]),
                DimVector::from_raw(vec![0, 1]),
                DimVector::from_raw(vec![1, 1])
            ]
        );
        for (code, count) in [("A3", 6), ("A4", 10), ("D4", 12), ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120)] {
            let ty: DynkinType = code.parse().unwrap();
            assert_eq!(positive_roots(&ty).len(), count, "{code}");
            assert_eq!(ty.num_positive_roots(), count);
        }
    }

    #[test]
    fn euler_form_examples() {
        let q = quiver("A2", &[0, 1]);
        let d = |v: &[i64]| DimVector::from_raw(v.to_vec());
        assert_eq!(euler_form(&q, &d(&[1, 0]), &d(&[1, 0])), 1);
        assert_eq!(euler_form(&q, &d(&[0, 1]), &d(&[1, 0])), -1);
        assert_eq!(euler_form(&q, &d(&[1, 1]), &d(&[1, 0])), 0);
    }

    #[test]
    fn quantum_cartan_entries() {
        let c = quantum_cartan(&"A3".parse().unwrap());
        assert_eq!(c[0][0].coeff(1), 1);
        assert_eq!(c[0][0].coeff(-1), 1);
        assert_eq!(c[0][0].coeff(0), 0);
        assert_eq!(c[0][1], TLaurent::monomial(0, -1));
        assert!(c[0][2].is_zero());
    }

    #[test]
    fn shifted_heights_give_same_quiver() {
        assert_eq!(quiver("D4", &[0, 1, 0, 0]), quiver("D4", &[5, 6, 5, 5]));
        assert_ne!(quiver("D4", &[0, 1, 0, 0]), quiver("D4", &[2, 1, 2, 2]));
    }

    #[test]
    fn w_vector_text_round_trip() {
        let w: WVector = "1,0;0,1".parse().unwrap();
        assert_eq!(w.to_string(), "1,0;0,1");
        assert!("1,0;0".parse::<WVector>().is_err());
        assert!("1,-1;0,0".parse::<WVector>().is_err());
        assert!("1,0".parse::<WVector>().is_err());
    }

    #[test]
    fn boxed_count() {
        assert_eq!(WVector::boxed(&WVector::uniform(2, 2)).len(), 81);
        assert_eq!(WVector::boxed(&WVector::uniform(3, 1)).len(), 64);
    }
}
