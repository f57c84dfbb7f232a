//! The finite-type cluster algebra `A_xi` with one frozen variable per vertex.
//!
//! Variables are indexed by `I ⊔ I'`: mutable `x1..xn` and frozen `y1..yn`
//! (see [`crate::laurent`]).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::linalg::{q, Matrix};
use crate::par::Exec;
use crate::quiver::{positive_roots, DimVector, DynkinType, Quiver};

/// Extended exchange matrix: rows `I ⊔ I'`, columns `I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    n: usize,
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(b: Vec<Vec<i64>>) -> Self {
        let n = b.first().map_or(0, Vec::len);
        assert_eq!(b.len(), 2 * n, "extended exchange matrix must be 2n x n");
        Self { n, b }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn is_principal_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.b[i][j] == -self.b[j][i]))
    }

    pub fn mutate(&self, k: usize) -> Self {
        let pos = |x: i64| x.max(0);
        let b = &self.b;
        let out = (0..2 * self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + pos(b[i][k]) * pos(b[k][j]) - pos(-b[i][k]) * pos(-b[k][j])
                        }
                    })
                    .collect()
            })
            .collect();
        Self { n: self.n, b: out }
    }

    /// Simultaneous permutation of the mutable rows and the columns: new position `p` holds old `perm[p]`.
    fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let b = (0..2 * n)
            .map(|i| {
                let src = if i < n { perm[i] } else { i };
                perm.iter().map(|&c| self.b[src][c]).collect()
            })
            .collect();
        Self { n, b }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub cluster: Vec<LaurentPolynomial>,
    pub matrix: ExchangeMatrix,
}

/// `b_ij = n_ij - n_ji`, `b_{i'j} = δ_ij - n_ij`, cluster `(x1, .., xn)`.
pub fn initial_seed(q: &Quiver) -> Seed {
    let n = q.rank();
    let nm = q.arrow_count_matrix();
    let mut b = vec![vec![0i64; n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            b[i][j] = nm[i][j] - nm[j][i];
            b[n + i][j] = (i == j) as i64 - nm[i][j];
        }
    }
    Seed {
        cluster: (0..n).map(|i| LaurentPolynomial::var(2 * n, i)).collect(),
        matrix: ExchangeMatrix::new(b),
    }
}

fn exchange_polynomial(seed: &Seed, k: usize) -> Result<LaurentPolynomial> {
    let n = seed.matrix.rank();
    let var = |j: usize| -> LaurentPolynomial {
        if j < n {
            seed.cluster[j].clone()
        } else {
            LaurentPolynomial::var(2 * n, j)
        }
    };
    let mut plus = LaurentPolynomial::one(2 * n);
    let mut minus = LaurentPolynomial::one(2 * n);
    for j in 0..2 * n {
        let e = seed.matrix.get(j, k);
        match e.cmp(&0) {
            Ordering::Greater => plus = plus.mul(&var(j).pow(e as u32)),
            Ordering::Less => minus = minus.mul(&var(j).pow((-e) as u32)),
            Ordering::Equal => {}
        }
    }
    let x = plus.add(&minus).div_exact(&seed.cluster[k])?;
    if x.terms().any(|(e, _)| e[n..].iter().any(|&f| f < 0)) {
        return Err(Error::NotAClusterVariable(format!(
            "frozen variable inverted in {x}"
        )));
    }
    Ok(x)
}

pub fn mutate(s: &Seed, k: usize) -> Result<Seed> {
    assert!(k < s.matrix.rank(), "vertex {k} is frozen or out of range");
    let mut cluster = s.cluster.clone();
    cluster[k] = exchange_polynomial(s, k)?;
    let matrix = s.matrix.mutate(k);
    debug_assert!(matrix.is_principal_skew_symmetric());
    Ok(Seed { cluster, matrix })
}

/// An element of `Δ_{≥-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlmostPositiveRoot {
    NegSimple(usize),
    Positive(DimVector),
}

impl AlmostPositiveRoot {
    /// All almost positive roots: `-α_1..-α_n`, then the positive roots in canonical order.
    pub fn all(ty: &DynkinType) -> Vec<AlmostPositiveRoot> {
        (0..ty.rank())
            .map(AlmostPositiveRoot::NegSimple)
            .chain(positive_roots(ty).into_iter().map(AlmostPositiveRoot::Positive))
            .collect()
    }

    /// Coefficients in the simple roots.
    pub fn vector(&self, n: usize) -> Vec<i64> {
        match self {
            AlmostPositiveRoot::NegSimple(i) => (0..n).map(|j| -((j == *i) as i64)).collect(),
            AlmostPositiveRoot::Positive(d) => d.entries().to_vec(),
        }
    }
}

impl Ord for AlmostPositiveRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        use AlmostPositiveRoot::*;
        match (self, other) {
            (NegSimple(a), NegSimple(b)) => a.cmp(b),
            (NegSimple(_), Positive(_)) => Ordering::Less,
            (Positive(_), NegSimple(_)) => Ordering::Greater,
            (Positive(a), Positive(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for AlmostPositiveRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AlmostPositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlmostPositiveRoot::NegSimple(i) => write!(f, "-a{}", i + 1),
            AlmostPositiveRoot::Positive(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for AlmostPositiveRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Reads the denominator vector `d = -(min exponents over I)` and matches it against `Δ_{≥-1}`.
pub fn denominator_root(ty: &DynkinType, x: &LaurentPolynomial) -> Result<AlmostPositiveRoot> {
    let n = ty.rank();
    if x.nvars() != 2 * n || x.is_zero() {
        return Err(Error::NotAClusterVariable(x.to_string()));
    }
    let d: Vec<i64> = x.min_exponents()[..n].iter().map(|&e| -(e as i64)).collect();
    if let Some(i) = (0..n).find(|&i| d.iter().enumerate().all(|(j, &c)| c == -((i == j) as i64))) {
        return Ok(AlmostPositiveRoot::NegSimple(i));
    }
    let dv = DimVector::new(d.clone()).map_err(|_| Error::NotAClusterVariable(x.to_string()))?;
    if positive_roots(ty).contains(&dv) {
        Ok(AlmostPositiveRoot::Positive(dv))
    } else {
        Err(Error::NotAClusterVariable(format!("{x} has denominator vector {d:?}")))
    }
}

/// A factor of a cluster monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MonomialFactor {
    Variable(AlmostPositiveRoot),
    Frozen(usize),
}

impl fmt::Display for MonomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialFactor::Variable(r) => write!(f, "x[{r}]"),
            MonomialFactor::Frozen(i) => write!(f, "y{}", i + 1),
        }
    }
}

/// The mutation closure of the initial seed. Variables are numbered in the order
/// of their almost positive roots; clusters are sorted lists of variable numbers.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    ty: DynkinType,
    variables: Vec<LaurentPolynomial>,
    roots: Vec<AlmostPositiveRoot>,
    clusters: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    compatible: Vec<Vec<bool>>,
    /// Denominator vectors of the variables of each cluster, inverted (columns = cluster slots).
    cluster_inverses: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct SeedKey(Vec<usize>, ExchangeMatrix);

struct Node {
    ids: Vec<usize>,
    matrix: ExchangeMatrix,
}

enum Step {
    Known(usize),
    New(LaurentPolynomial),
}

fn seed_key(ids: &[usize], matrix: &ExchangeMatrix) -> SeedKey {
    let mut perm: Vec<usize> = (0..ids.len()).collect();
    perm.sort_by_key(|&p| ids[p]);
    SeedKey(perm.iter().map(|&p| ids[p]).collect(), matrix.permuted(&perm))
}

fn face_of(ids: &[usize], k: usize) -> Vec<usize> {
    let mut f: Vec<usize> = ids.iter().enumerate().filter(|&(p, _)| p != k).map(|(_, &v)| v).collect();
    f.sort_unstable();
    f
}

/// Breadth-first mutation closure from [`initial_seed`], one level at a time.
pub fn exchange_graph(q: &Quiver, exec: Exec) -> Result<ExchangeGraph> {
    let n = q.rank();
    let init = initial_seed(q);
    let mut variables: Vec<LaurentPolynomial> = init.cluster.clone();
    let mut index: HashMap<LaurentPolynomial, usize> =
        variables.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut faces: HashMap<Vec<usize>, BTreeSet<usize>> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut visited: HashMap<SeedKey, usize> = HashMap::new();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();

    let root_ids: Vec<usize> = (0..n).collect();
    visited.insert(seed_key(&root_ids, &init.matrix), 0);
    nodes.push(Node {
        ids: root_ids,
        matrix: init.matrix,
    });
    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let jobs: Vec<(usize, usize)> = frontier.iter().flat_map(|&s| (0..n).map(move |k| (s, k))).collect();
        let results: Vec<Result<Step>> = exec.map(&jobs, |&(s, k)| {
            let node = &nodes[s];
            if let Some(known) = faces.get(&face_of(&node.ids, k)) {
                if let Some(&other) = known.iter().find(|&&v| v != node.ids[k]) {
                    return Ok(Step::Known(other));
                }
            }
            let seed = Seed {
                cluster: node.ids.iter().map(|&v| variables[v].clone()).collect(),
                matrix: node.matrix.clone(),
            };
            exchange_polynomial(&seed, k).map(Step::New)
        });
        let mut next = Vec::new();
        for (&(s, k), step) in jobs.iter().zip(results) {
            let id = match step? {
                Step::Known(id) => id,
                Step::New(p) => match index.get(&p) {
                    Some(&id) => id,
                    None => {
                        let id = variables.len();
                        index.insert(p.clone(), id);
                        variables.push(p);
                        id
                    }
                },
            };
            let mut ids = nodes[s].ids.clone();
            let face = face_of(&ids, k);
            let entry = faces.entry(face).or_default();
            entry.insert(ids[k]);
            entry.insert(id);
            ids[k] = id;
            let matrix = nodes[s].matrix.mutate(k);
            let key = seed_key(&ids, &matrix);
            let t = match visited.get(&key) {
                Some(&t) => t,
                None => {
                    let t = nodes.len();
                    visited.insert(key, t);
                    nodes.push(Node { ids, matrix });
                    next.push(t);
                    t
                }
            };
            edges.insert((s.min(t), s.max(t)));
        }
        frontier = next;
    }

    let ty = q.dynkin_type();
    let raw_roots = variables
        .iter()
        .map(|v| denominator_root(&ty, v))
        .collect::<Result<Vec<_>>>()?;
    let mut order: Vec<usize> = (0..variables.len()).collect();
    order.sort_by(|&a, &b| raw_roots[a].cmp(&raw_roots[b]));
    let mut relabel = vec![0usize; variables.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    let roots: Vec<AlmostPositiveRoot> = order.iter().map(|&o| raw_roots[o].clone()).collect();
    let variables: Vec<LaurentPolynomial> = order.iter().map(|&o| variables[o].clone()).collect();

    let mut clusters_raw: Vec<Vec<usize>> = nodes
        .iter()
        .map(|nd| {
            let mut c: Vec<usize> = nd.ids.iter().map(|&v| relabel[v]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    let mut corder: Vec<usize> = (0..clusters_raw.len()).collect();
    corder.sort_by(|&a, &b| clusters_raw[a].cmp(&clusters_raw[b]));
    let mut crelabel = vec![0usize; corder.len()];
    for (new, &old) in corder.iter().enumerate() {
        crelabel[old] = new;
    }
    let clusters: Vec<Vec<usize>> = corder.iter().map(|&o| std::mem::take(&mut clusters_raw[o])).collect();
    let edges: Vec<(usize, usize)> = edges
        .into_iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| {
            let (x, y) = (crelabel[a], crelabel[b]);
            (x.min(y), x.max(y))
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let nv = variables.len();
    let mut compatible = vec![vec![false; nv]; nv];
    for c in &clusters {
        for &a in c {
            for &b in c {
                compatible[a][b] = true;
            }
        }
    }
    let cluster_inverses = clusters
        .iter()
        .map(|c| {
            let cols: Vec<Vec<i64>> = c.iter().map(|&v| roots[v].vector(n)).collect();
            let m = Matrix::from_fn(n, n, |r, col| crate::linalg::q(cols[col][r]));
            m.inverse().ok_or_else(|| {
                Error::NotAClusterVariable(format!("denominator vectors of cluster {c:?} are dependent"))
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ExchangeGraph {
        ty,
        variables,
        roots,
        clusters,
        edges,
        compatible,
        cluster_inverses,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExchangeGraphJson {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub variables: Vec<VariableJson>,
    pub clusters: Vec<Vec<AlmostPositiveRoot>>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VariableJson {
    pub root: AlmostPositiveRoot,
    pub value: LaurentPolynomial,
}

impl ExchangeGraph {
    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn variables(&self) -> &[LaurentPolynomial] {
        &self.variables
    }

    pub fn roots(&self) -> &[AlmostPositiveRoot] {
        &self.roots
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn num_clusters(&self) -> usize {
        self.clusters.len()
    }

    pub fn variable_index(&self, r: &AlmostPositiveRoot) -> Option<usize> {
        self.roots.binary_search(r).ok()
    }

    /// The cluster variable `x[r]`.
    pub fn variable(&self, r: &AlmostPositiveRoot) -> Option<&LaurentPolynomial> {
        self.variable_index(r).map(|i| &self.variables[i])
    }

    /// Whether `x[a]` and `x[b]` lie in a common cluster.
    pub fn are_compatible(&self, a: &AlmostPositiveRoot, b: &AlmostPositiveRoot) -> bool {
        match (self.variable_index(a), self.variable_index(b)) {
            (Some(i), Some(j)) => self.compatible[i][j],
            _ => false,
        }
    }

    /// Coordinates of `d` in the denominator vectors of cluster `c`, when they are
    /// non-negative integers.
    pub fn cone_coordinates(&self, c: usize, d: &[i64]) -> Option<Vec<u64>> {
        let inv = &self.cluster_inverses[c];
        let n = d.len();
        (0..n)
            .map(|r| {
                let x: BigRational = (0..n).fold(BigRational::zero(), |acc, k| acc + &inv[(r, k)] * q(d[k]));
                if x.is_integer() && !x.is_negative() {
                    num_traits::ToPrimitive::to_u64(&x.to_integer())
                } else {
                    None
                }
            })
            .collect()
    }

    /// Factors `p` as a monomial in one cluster times frozen variables, if possible.
    pub fn is_cluster_monomial(&self, p: &LaurentPolynomial) -> Option<Vec<(MonomialFactor, u64)>> {
        let n = self.ty.rank();
        if p.nvars() != 2 * n || p.is_zero() {
            return None;
        }
        let d: Vec<i64> = p.min_exponents()[..n].iter().map(|&e| -(e as i64)).collect();
        for (c, cluster) in self.clusters.iter().enumerate() {
            let Some(m) = self.cone_coordinates(c, &d) else { continue };
            let mut denom = LaurentPolynomial::one(2 * n);
            for (&v, &k) in cluster.iter().zip(&m) {
                denom = denom.mul(&self.variables[v].pow(k as u32));
            }
            let Ok(rest) = p.div_exact(&denom) else { continue };
            let Some((e, 1)) = rest.as_monomial() else { continue };
            if e[..n].iter().any(|&x| x != 0) || e[n..].iter().any(|&x| x < 0) {
                continue;
            }
            let mut out: Vec<(MonomialFactor, u64)> = cluster
                .iter()
                .zip(&m)
                .filter(|(_, &k)| k > 0)
                .map(|(&v, &k)| (MonomialFactor::Variable(self.roots[v].clone()), k))
                .collect();
            out.extend(
                e[n..]
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| (MonomialFactor::Frozen(i), k as u64)),
            );
            out.sort();
            return Some(out);
        }
        None
    }

    pub fn to_json(&self) -> ExchangeGraphJson {
        ExchangeGraphJson {
            schema: "1",
            ty: self.ty.to_string(),
            variables: self
                .roots
                .iter()
                .zip(&self.variables)
                .map(|(r, v)| VariableJson {
                    root: r.clone(),
                    value: v.clone(),
                })
                .collect(),
            clusters: self
                .clusters
                .iter()
                .map(|c| c.iter().map(|&v| self.roots[v].clone()).collect())
                .collect(),
            edges: self.edges.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::build_quiver;

    fn quiver(ty: &str, h: &str) -> Quiver {
        build_quiver(ty.parse().unwrap(), h.parse().unwrap()).unwrap()
    }

    fn mono(n: usize, e: &[i32]) -> LaurentPolynomial {
        assert_eq!(e.len(), n);
        LaurentPolynomial::monomial(e.to_vec(), 1)
    }

    #[test]
    fn a2_initial_matrix() {
        let s = initial_seed(&quiver("A2", "0,1"));
        let b = s.matrix.rows();
        assert_eq!((b[0][1], b[1][0]), (-1, 1));
        assert_eq!((b[2][0], b[2][1], b[3][0], b[3][1]), (1, 0, -1, 1));
    }

    #[test]
    fn a3_initial_principal_part() {
        let s = initial_seed(&quiver("A3", "1,2,3"));
        let b = s.matrix.rows();
        assert_eq!((b[1][0], b[2][1], b[0][1], b[1][2]), (1, 1, -1, -1));
        assert_eq!((b[0][2], b[2][0]), (0, 0));
        assert!(s.matrix.is_principal_skew_symmetric());
    }

    #[test]
    fn a2_first_mutation() {
        let s = initial_seed(&quiver("A2", "0,1"));
        let m = mutate(&s, 0).unwrap();
        let expected = mono(4, &[-1, 1, 1, 0]).add(&mono(4, &[-1, 0, 0, 1]));
        assert_eq!(m.cluster[0], expected);
    }

    #[test]
    fn mutation_is_involutive() {
        let q = quiver("D4", "0,1,0,0");
        let s = initial_seed(&q);
        let mut cur = s.clone();
        for k in [0, 1, 3, 2, 1] {
            cur = mutate(&cur, k).unwrap();
            let back = mutate(&mutate(&cur, k).unwrap(), k).unwrap();
            assert_eq!(back, cur);
        }
    }

    #[test]
    fn a2_pentagon_closes() {
        let s = initial_seed(&quiver("A2", "0,1"));
        let mut cur = s.clone();
        for t in 0..5 {
            cur = mutate(&cur, t % 2).unwrap();
        }
        let mut a = cur.cluster.clone();
        let mut b = s.cluster.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn exchange_graph_counts() {
        for (ty, h, vars, clusters) in [
            ("A2", "0,1", 5, 5),
            ("A3", "1,2,3", 9, 14),
            ("A3", "0,1,0", 9, 14),
            ("A4", "0,1,0,1", 14, 42),
            ("D4", "0,1,0,0", 16, 50),
        ] {
            let g = exchange_graph(&quiver(ty, h), Exec::Sequential).unwrap();
            assert_eq!((g.num_variables(), g.num_clusters()), (vars, clusters), "{ty} {h}");
        }
    }

    #[test]
    fn sequential_and_parallel_graphs_agree() {
        let q = quiver("D4", "1,0,1,1");
        let a = exchange_graph(&q, Exec::Sequential).unwrap();
        let b = exchange_graph(&q, Exec::Parallel).unwrap();
        assert_eq!(a.variables, b.variables);
        assert_eq!(a.clusters, b.clusters);
        assert_eq!(a.edges, b.edges);
    }

    #[test]
    fn denominators() {
        let q = quiver("A2", "0,1");
        let ty = q.dynkin_type();
        assert_eq!(denominator_root(&ty, &mono(4, &[1, 0, 0, 0])).unwrap(), AlmostPositiveRoot::NegSimple(0));
        let x1 = mono(4, &[-1, 1, 1, 0]).add(&mono(4, &[-1, 0, 0, 1]));
        assert_eq!(
            denominator_root(&ty, &x1).unwrap(),
            AlmostPositiveRoot::Positive(DimVector::new(vec![1, 0]).unwrap())
        );
        let g = exchange_graph(&q, Exec::Sequential).unwrap();
        let top = AlmostPositiveRoot::Positive(DimVector::new(vec![1, 1]).unwrap());
        let v = g.variable(&top).unwrap();
        assert_eq!(v.min_exponents()[..2], [-1, -1]);
        assert!(denominator_root(&ty, &mono(4, &[-2, 0, 0, 0])).is_err());
    }

    #[test]
    fn compatibility() {
        let g = exchange_graph(&quiver("A2", "0,1"), Exec::Sequential).unwrap();
        let n1 = AlmostPositiveRoot::NegSimple(0);
        let n2 = AlmostPositiveRoot::NegSimple(1);
        let a1 = AlmostPositiveRoot::Positive(DimVector::new(vec![1, 0]).unwrap());
        assert!(g.are_compatible(&n1, &n1));
        assert!(g.are_compatible(&n1, &n2));
        assert!(!g.are_compatible(&a1, &n1));
    }

    #[test]
    fn cluster_monomials() {
        let g = exchange_graph(&quiver("A2", "0,1"), Exec::Sequential).unwrap();
        let a1 = AlmostPositiveRoot::Positive(DimVector::new(vec![1, 0]).unwrap());
        let n1 = AlmostPositiveRoot::NegSimple(0);
        let n2 = AlmostPositiveRoot::NegSimple(1);
        let xa1 = g.variable(&a1).unwrap().clone();
        let xn2 = g.variable(&n2).unwrap().clone();
        let p = xa1.pow(2).mul(&xn2);
        assert_eq!(
            g.is_cluster_monomial(&p),
            Some(vec![(MonomialFactor::Variable(n2.clone()), 1), (MonomialFactor::Variable(a1.clone()), 2)])
        );
        let bad = xa1.mul(g.variable(&n1).unwrap());
        assert_eq!(g.is_cluster_monomial(&bad), None);
        let y1 = LaurentPolynomial::var(4, 2);
        assert_eq!(
            g.is_cluster_monomial(&y1.mul(&xa1)),
            Some(vec![(MonomialFactor::Variable(a1), 1), (MonomialFactor::Frozen(0), 1)])
        );
        assert_eq!(g.is_cluster_monomial(&LaurentPolynomial::one(4)), Some(vec![]));
        assert_eq!(g.is_cluster_monomial(&xa1.scale(2)), None);
    }

    #[test]
    fn json_export_lists_roots() {
        let g = exchange_graph(&quiver("A2", "0,1"), Exec::Sequential).unwrap();
        let j = serde_json::to_value(g.to_json()).unwrap();
        assert_eq!(j["clusters"].as_array().unwrap().len(), 5);
        assert_eq!(j["edges"].as_array().unwrap().len(), 5);
        assert_eq!(j["variables"][0]["root"], "-a1");
    }
}
