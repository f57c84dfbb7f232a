//! Injective copresentations `I^{w(0)} -> I^{w(1)}`, symbolically (multisets of
//! indecomposable classes) and concretely (coefficient matrices).
//!
//! `Hom(I_s, I_t)` is at most one-dimensional for a Dynkin quiver, spanned by the
//! map that is the identity on the support of `I_t`. These basis maps compose to
//! basis maps, so a morphism `⊕ I_{s} -> ⊕ I_{t}` is a plain coefficient matrix
//! supported on the slot pairs with `t ⇝ s`, and composition is matrix product.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::linalg::{q as rat, Matrix, Q};
use crate::quiver::{DimVector, Quiver, WVector};
use crate::rep::{cokernel, kernel, InjectiveSum, MinimalCopresentation, Morphism, Representation};

/// An indecomposable object: `φ[α]`, `φ[-α_i] = (0 -> I_i)` or `ν_i = (I_i -> I_i)`.
///
/// Ordered by kind, then root order, then vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CopresClass {
    Root(DimVector),
    NegSimple(usize),
    Nu(usize),
}

impl fmt::Display for CopresClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CopresClass::Root(a) => write!(f, "Root{a}"),
            CopresClass::NegSimple(i) => write!(f, "NegSimple({})", i + 1),
            CopresClass::Nu(i) => write!(f, "Nu({})", i + 1),
        }
    }
}

/// A finite multiset of classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Copresentation {
    summands: BTreeMap<CopresClass, u64>,
}

impl Copresentation {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn single(c: CopresClass) -> Self {
        Self::from_counts([(c, 1)])
    }

    pub fn from_counts(items: impl IntoIterator<Item = (CopresClass, u64)>) -> Self {
        let mut out = Self::empty();
        for (c, k) in items {
            out.insert(c, k);
        }
        out
    }

    pub fn insert(&mut self, c: CopresClass, k: u64) {
        if k > 0 {
            *self.summands.entry(c).or_insert(0) += k;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, &k) in &other.summands {
            out.insert(c.clone(), k);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CopresClass, u64)> + '_ {
        self.summands.iter().map(|(c, &k)| (c, k))
    }

    pub fn multiplicity(&self, c: &CopresClass) -> u64 {
        self.summands.get(c).copied().unwrap_or(0)
    }

    /// Number of summands, with multiplicity.
    pub fn len(&self) -> u64 {
        self.summands.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// The summands with multiplicity, as a flat list.
    pub fn flatten(&self) -> Vec<CopresClass> {
        self.iter()
            .flat_map(|(c, k)| std::iter::repeat_n(c.clone(), k as usize))
            .collect()
    }

    pub fn to_json(&self) -> Vec<SummandJson> {
        self.iter()
            .map(|(c, k)| match c {
                CopresClass::Root(a) => SummandJson {
                    kind: "root".into(),
                    root: Some(a.entries().to_vec()),
                    vertex: None,
                    multiplicity: k,
                },
                CopresClass::NegSimple(i) | CopresClass::Nu(i) => SummandJson {
                    kind: if matches!(c, CopresClass::Nu(_)) { "nu" } else { "neg_simple" }.into(),
                    root: None,
                    vertex: Some(i + 1),
                    multiplicity: k,
                },
            })
            .collect()
    }

    pub fn from_json(items: &[SummandJson]) -> Result<Self> {
        let mut out = Self::empty();
        for s in items {
            let c = match (s.kind.as_str(), &s.root, s.vertex) {
                ("root", Some(r), None) => CopresClass::Root(DimVector::new(r.clone())?),
                ("neg_simple", None, Some(v)) if v >= 1 => CopresClass::NegSimple(v - 1),
                ("nu", None, Some(v)) if v >= 1 => CopresClass::Nu(v - 1),
                _ => return Err(Error::Parse(format!("bad summand {s:?}"))),
            };
            out.insert(c, s.multiplicity);
        }
        Ok(out)
    }
}

impl fmt::Display for Copresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(c, k)| if k == 1 { c.to_string() } else { format!("{c}^{k}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `{"kind": "root"|"neg_simple"|"nu", "root": [..] | "vertex": i, "multiplicity": k}`,
/// vertices 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<usize>,
    pub multiplicity: u64,
}

/// A morphism `⊕_s I_{slots0[s]} -> ⊕_t I_{slots1[t]}` given by its coefficients
/// on the basis maps `I_{slots0[s]} -> I_{slots1[t]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteCopres {
    n: usize,
    slots0: Vec<usize>,
    slots1: Vec<usize>,
    coeffs: Matrix,
}

impl ConcreteCopres {
    pub fn new(q: &Quiver, slots0: Vec<usize>, slots1: Vec<usize>, coeffs: Matrix) -> Result<Self> {
        let n = q.rank();
        if coeffs.shape() != (slots1.len(), slots0.len()) || slots0.iter().chain(&slots1).any(|&i| i >= n) {
            return Err(Error::QuiverMismatch(format!(
                "{:?} coefficients for {} -> {} slots",
                coeffs.shape(),
                slots0.len(),
                slots1.len()
            )));
        }
        for (t, &j) in slots1.iter().enumerate() {
            for (s, &i) in slots0.iter().enumerate() {
                if !coeffs[(t, s)].is_zero() && !q.has_path(j, i) {
                    return Err(Error::QuiverMismatch(format!(
                        "no nonzero morphism I_{} -> I_{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            n,
            slots0,
            slots1,
            coeffs,
        })
    }

    pub fn zero(q: &Quiver, w: &WVector) -> Self {
        let slots = |d: &DimVector| -> Vec<usize> { (0..d.len()).flat_map(|i| std::iter::repeat_n(i, d.get(i))).collect() };
        let (s0, s1) = (slots(&w.w0), slots(&w.w1));
        let coeffs = Matrix::zeros(s1.len(), s0.len());
        Self {
            n: q.rank(),
            slots0: s0,
            slots1: s1,
            coeffs,
        }
    }

    /// Reads off the coefficients of a per-vertex morphism between injective sums.
    pub fn from_minimal(q: &Quiver, c: &MinimalCopresentation) -> Result<Self> {
        let (src, dst) = (&c.source, &c.target);
        let coeffs = Matrix::from_fn(dst.slots.len(), src.slots.len(), |t, s| {
            let v = dst.slots[t];
            match (dst.coords[t][v], src.coords[s][v]) {
                (Some(r), Some(col)) if q.has_path(v, src.slots[s]) => c.map.maps[v][(r, col)].clone(),
                _ => Q::zero(),
            }
        });
        let out = Self::new(q, src.slots.clone(), dst.slots.clone(), coeffs)?;
        if out.morphism(q).2 != c.map {
            return Err(Error::KernelMismatch("copresentation is not a combination of basis maps".into()));
        }
        Ok(out)
    }

    pub fn slots0(&self) -> &[usize] {
        &self.slots0
    }

    pub fn slots1(&self) -> &[usize] {
        &self.slots1
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn w(&self) -> WVector {
        let count = |slots: &[usize]| {
            let mut v = vec![0i64; self.n];
            for &i in slots {
                v[i] += 1;
            }
            DimVector::new(v).expect("counts are non-negative")
        };
        WVector::new(count(&self.slots0), count(&self.slots1))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut coeffs = Matrix::zeros(self.slots1.len() + other.slots1.len(), self.slots0.len() + other.slots0.len());
        coeffs.set_block(0, 0, &self.coeffs);
        coeffs.set_block(self.slots1.len(), self.slots0.len(), &other.coeffs);
        Self {
            n: self.n,
            slots0: self.slots0.iter().chain(&other.slots0).copied().collect(),
            slots1: self.slots1.iter().chain(&other.slots1).copied().collect(),
            coeffs,
        }
    }

    /// Source, target and the per-vertex matrices.
    pub fn morphism(&self, q: &Quiver) -> (InjectiveSum, InjectiveSum, Morphism) {
        let src = InjectiveSum::from_slots(q, self.slots0.clone());
        let dst = InjectiveSum::from_slots(q, self.slots1.clone());
        let mut f = Morphism::zero(src.rep.dims(), dst.rep.dims());
        for (t, &j) in self.slots1.iter().enumerate() {
            for (s, _) in self.slots0.iter().enumerate() {
                let c = &self.coeffs[(t, s)];
                if c.is_zero() {
                    continue;
                }
                for v in 0..q.rank() {
                    if let (Some(r), Some(col)) = (dst.coords[t][v], src.coords[s][v]) {
                        if q.has_path(v, j) {
                            f.maps[v][(r, col)] = c.clone();
                        }
                    }
                }
            }
        }
        (src, dst, f)
    }

    pub fn kernel(&self, q: &Quiver) -> Representation {
        let (src, _, f) = self.morphism(q);
        kernel(q, &f, &src.rep).0
    }

    pub fn cokernel(&self, q: &Quiver) -> Representation {
        let (_, dst, f) = self.morphism(q);
        cokernel(q, &f, &dst.rep).0
    }

    /// Slot pairs `(t, s)` carrying a basis map `I_{slots0[s]} -> I_{slots1[t]}`: a basis of `X(w)`.
    pub fn hom_pattern(q: &Quiver, from: &[usize], to: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, &j) in to.iter().enumerate() {
            for (s, &i) in from.iter().enumerate() {
                if q.has_path(j, i) {
                    out.push((t, s));
                }
            }
        }
        out
    }

    /// `dim X(w)`.
    pub fn hom_space_dim(&self, q: &Quiver) -> usize {
        Self::hom_pattern(q, &self.slots0, &self.slots1).len()
    }

    /// Matrix of `f_ψ(a, b) = b ψ - ψ a` on `End(I^{w(0)}) ⊕ End(I^{w(1)})`,
    /// rows indexed by the basis of `X(w)`.
    pub fn orbit_map(&self, q: &Quiver) -> Matrix {
        let px = Self::hom_pattern(q, &self.slots0, &self.slots1);
        let p0 = Self::hom_pattern(q, &self.slots0, &self.slots0);
        let p1 = Self::hom_pattern(q, &self.slots1, &self.slots1);
        let row_of: BTreeMap<(usize, usize), usize> = px.iter().enumerate().map(|(r, &ts)| (ts, r)).collect();
        let mut m = Matrix::zeros(px.len(), p0.len() + p1.len());
        // a = E_{s, s'} contributes -ψ[t][s] at (t, s')
        for (k, &(s, s2)) in p0.iter().enumerate() {
            for t in 0..self.slots1.len() {
                let c = &self.coeffs[(t, s)];
                if !c.is_zero() {
                    let r = row_of[&(t, s2)];
                    m[(r, k)] -= c;
                }
            }
        }
        // b = E_{t, t'} contributes ψ[t'][s] at (t, s)
        for (k, &(t, t2)) in p1.iter().enumerate() {
            for s in 0..self.slots0.len() {
                let c = &self.coeffs[(t2, s)];
                if !c.is_zero() {
                    let r = row_of[&(t, s)];
                    m[(r, p0.len() + k)] += c;
                }
            }
        }
        m
    }

    /// `rank f_ψ`, the dimension of the orbit of ψ.
    pub fn orbit_dim(&self, q: &Quiver) -> usize {
        self.orbit_map(q).rank()
    }
}

/// `Root(α) ↦ b_{M[α]}`, `NegSimple(i) ↦ (0, δ_i)`, `Nu(i) ↦ (δ_i, δ_i)`.
pub fn w_vector(cat: &Catalog, c: &CopresClass) -> WVector {
    cat.class_w(cat.class_index(c).expect("class belongs to the catalog")).clone()
}

pub fn copres_w_vector(cat: &Catalog, phi: &Copresentation) -> WVector {
    phi.iter()
        .fold(WVector::zero(cat.rank()), |acc, (c, k)| acc.add(&w_vector(cat, c).scale(k as i64)))
}

/// Block-diagonal realization: minimal copresentations, `0 -> I_i` and `id: I_i -> I_i`.
pub fn realize(cat: &Catalog, phi: &Copresentation) -> ConcreteCopres {
    let q = cat.quiver();
    let mut out = ConcreteCopres::zero(q, &WVector::zero(q.rank()));
    for c in phi.flatten() {
        let block = match &c {
            CopresClass::Root(_) => cat.root_copres(cat.class_index(&c).expect("root in catalog")).clone(),
            CopresClass::NegSimple(i) => ConcreteCopres {
                n: q.rank(),
                slots0: vec![],
                slots1: vec![*i],
                coeffs: Matrix::zeros(1, 0),
            },
            CopresClass::Nu(i) => ConcreteCopres {
                n: q.rank(),
                slots0: vec![*i],
                slots1: vec![*i],
                coeffs: Matrix::identity(1),
            },
        };
        out = out.direct_sum(&block);
    }
    out
}

/// `ψ ≅ ρ_M ⊕ ν_{w - b_M}` with `M = Ker ψ`.
pub fn decompose_copres(cat: &Catalog, psi: &ConcreteCopres) -> Result<Copresentation> {
    let q = cat.quiver();
    let k = psi.kernel(q);
    let roots = cat.decompose_module(&k)?;
    let mut out = Copresentation::empty();
    let mut b = WVector::zero(q.rank());
    for (alpha, m) in roots {
        let c = CopresClass::Root(alpha);
        b = b.add(&w_vector(cat, &c).scale(m as i64));
        out.insert(c, m);
    }
    let w = psi.w();
    let u = w.checked_sub(&b).ok_or_else(|| {
        Error::KernelMismatch(format!("Betti vector {b} of the kernel exceeds w = {w}"))
    })?;
    for i in 0..q.rank() {
        let (u0, u1) = (u.w0.get(i), u.w1.get(i));
        if u0 > u1 {
            return Err(Error::KernelMismatch(format!("complement {u} has u0 > u1 at vertex {}", i + 1)));
        }
        out.insert(CopresClass::Nu(i), u0 as u64);
        out.insert(CopresClass::NegSimple(i), (u1 - u0) as u64);
    }
    Ok(out)
}

/// The decomposition of `φ_ξ(w)`, found as the unique cluster cone containing `w`.
pub fn generic_copresentation(cat: &Catalog, w: &WVector) -> Result<Copresentation> {
    let target = w.flat();
    let mut found: Vec<Copresentation> = Vec::new();
    for cone in cat.cones()? {
        let Some(m) = cone.coordinates(&target) else { continue };
        let phi = Copresentation::from_counts(
            cone.classes.iter().zip(m).map(|(&c, k)| (cat.class(c).clone(), k)),
        );
        if !found.contains(&phi) {
            found.push(phi);
        }
    }
    match found.len() {
        1 => {
            let phi = found.pop().expect("one solution");
            let parts: Vec<usize> = phi.iter().map(|(c, _)| cat.class_index(c).expect("catalog class")).collect();
            for &a in &parts {
                for &b in &parts {
                    if cat.e_table(a, b) != 0 {
                        return Err(Error::GenericSearch(format!(
                            "summands {} and {} of the solution for w = {w} are not E-compatible",
                            cat.class(a),
                            cat.class(b)
                        )));
                    }
                }
            }
            Ok(phi)
        }
        0 => Err(Error::GenericSearch(format!("no cluster cone contains w = {w}"))),
        k => Err(Error::GenericSearch(format!(
            "{k} distinct cluster solutions for w = {w}: {}",
            found.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" | ")
        ))),
    }
}

/// Draws ψ with independent uniform coefficients in `[-bound, bound]` on a basis of `X(w)`.
pub fn sample_copres(q: &Quiver, w: &WVector, bound: i64, rng: &mut impl Rng) -> ConcreteCopres {
    let mut psi = ConcreteCopres::zero(q, w);
    for (t, s) in ConcreteCopres::hom_pattern(q, &psi.slots0, &psi.slots1) {
        psi.coeffs[(t, s)] = rat(rng.random_range(-bound..=bound));
    }
    psi
}

/// Monte-Carlo oracle for `φ_ξ(w)`: best of `trials` random points of `X(w)` by orbit dimension.
pub fn sample_generic_oracle_with(cat: &Catalog, w: &WVector, seed: u64, bound: i64, trials: usize) -> Result<Copresentation> {
    let q = cat.quiver();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = ConcreteCopres::zero(q, w).hom_space_dim(q);
    let mut best: Option<(usize, ConcreteCopres)> = None;
    for _ in 0..trials.max(1) {
        let psi = sample_copres(q, w, bound, &mut rng);
        let d = psi.orbit_dim(q);
        if best.as_ref().is_none_or(|(b, _)| d > *b) {
            best = Some((d, psi));
        }
        // an orbit of full dimension is the open one
        if d == full {
            break;
        }
    }
    decompose_copres(cat, &best.expect("at least one trial").1)
}

pub const DEFAULT_SAMPLE_BOUND: i64 = 100;
pub const DEFAULT_SAMPLE_TRIALS: usize = 5;

pub fn sample_generic_oracle(cat: &Catalog, w: &WVector, seed: u64) -> Result<Copresentation> {
    sample_generic_oracle_with(cat, w, seed, DEFAULT_SAMPLE_BOUND, DEFAULT_SAMPLE_TRIALS)
}

/// Every multiset of catalogue classes with total w-vector `w`, one per orbit of `X(w)`.
pub fn enumerate_orbits(cat: &Catalog, w: &WVector) -> Vec<Copresentation> {
    let ws: Vec<Vec<i64>> = (0..cat.num_classes()).map(|c| cat.class_w(c).flat()).collect();
    let mut out = Vec::new();
    let mut chosen = vec![0u64; ws.len()];
    let mut rem = w.flat();
    fn go(ws: &[Vec<i64>], c: usize, rem: &mut [i64], chosen: &mut [u64], out: &mut Vec<Vec<u64>>) {
        if rem.iter().all(|&x| x == 0) {
            out.push(chosen.to_vec());
            return;
        }
        if c == ws.len() {
            return;
        }
        let wc = &ws[c];
        let max = wc
            .iter()
            .zip(rem.iter())
            .filter(|(&a, _)| a > 0)
            .map(|(&a, &r)| r / a)
            .min()
            .unwrap_or(0);
        for k in (0..=max).rev() {
            for (r, &a) in rem.iter_mut().zip(wc) {
                *r -= k * a;
            }
            chosen[c] = k as u64;
            go(ws, c + 1, rem, chosen, out);
            for (r, &a) in rem.iter_mut().zip(wc) {
                *r += k * a;
            }
        }
        chosen[c] = 0;
    }
    let mut raw = Vec::new();
    go(&ws, 0, &mut rem, &mut chosen, &mut raw);
    for m in raw {
        out.push(Copresentation::from_counts(
            m.iter().enumerate().map(|(c, &k)| (cat.class(c).clone(), k)),
        ));
    }
    out.sort();
    out
}

/// Basis morphism `I_s -> I_t` (identity on the support of `I_t`), when `t ⇝ s`.
pub fn injective_basis_map(q: &Quiver, s: usize, t: usize) -> Option<Morphism> {
    if !q.has_path(t, s) {
        return None;
    }
    let (is, it) = (Representation::injective(q, s), Representation::injective(q, t));
    let mut f = Morphism::zero(is.dims(), it.dims());
    for v in 0..q.rank() {
        if it.dims().get(v) == 1 {
            f.maps[v][(0, 0)] = Q::one();
        }
    }
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Exec;
    use crate::quiver::build_quiver;
    use crate::rep::hom_dim;

    fn cat(ty: &str, h: &str) -> Catalog {
        Catalog::new(&build_quiver(ty.parse().unwrap(), h.parse().unwrap()).unwrap(), Exec::Sequential).unwrap()
    }

    fn root(v: &[i64]) -> CopresClass {
        CopresClass::Root(DimVector::new(v.to_vec()).unwrap())
    }

    fn w(s: &str) -> WVector {
        s.parse().unwrap()
    }

    #[test]
    fn class_w_vectors() {
        let c = cat("A2", "0,1");
        assert_eq!(w_vector(&c, &root(&[1, 0])), w("1,0;0,1"));
        assert_eq!(w_vector(&c, &CopresClass::NegSimple(1)), w("0,0;0,1"));
        assert_eq!(w_vector(&c, &CopresClass::Nu(0)), w("1,0;1,0"));
    }

    #[test]
    fn injective_basis_maps_are_the_hom_spaces() {
        for (ty, h) in [("A3", "0,1,0"), ("D4", "1,0,1,1"), ("A3", "1,2,3")] {
            let q = build_quiver(ty.parse().unwrap(), h.parse().unwrap()).unwrap();
            for s in 0..q.rank() {
                for t in 0..q.rank() {
                    let (is, it) = (Representation::injective(&q, s), Representation::injective(&q, t));
                    let d = hom_dim(&q, &is, &it).unwrap();
                    match injective_basis_map(&q, s, t) {
                        Some(f) => {
                            assert_eq!(d, 1);
                            assert!(f.is_intertwiner(&q, &is, &it));
                        }
                        None => assert_eq!(d, 0),
                    }
                }
            }
        }
    }

    #[test]
    fn realize_examples() {
        let c = cat("A2", "0,1");
        let q = c.quiver();
        let r = realize(&c, &Copresentation::single(root(&[1, 0])));
        assert_eq!(r.w(), w("1,0;0,1"));
        assert!(!r.coeffs().is_zero());
        assert_eq!(realize(&c, &Copresentation::empty()).w(), WVector::zero(2));
        let phi = Copresentation::from_counts([(CopresClass::Nu(0), 1), (CopresClass::NegSimple(1), 1)]);
        let r = realize(&c, &phi);
        assert_eq!(r.w(), w("1,0;1,1"));
        assert_eq!(r.kernel(q).total_dim(), 0);
        assert_eq!(decompose_copres(&c, &r).unwrap(), phi);
    }

    #[test]
    fn decompose_examples() {
        let c = cat("A2", "0,1");
        let q = c.quiver();
        let nonzero = ConcreteCopres::new(q, vec![0], vec![1], Matrix::from_i64_rows(&[vec![3]])).unwrap();
        assert_eq!(decompose_copres(&c, &nonzero).unwrap(), Copresentation::single(root(&[1, 0])));
        let zero = ConcreteCopres::zero(q, &w("1,0;0,1"));
        assert_eq!(
            decompose_copres(&c, &zero).unwrap(),
            Copresentation::from_counts([(root(&[1, 1]), 1), (CopresClass::NegSimple(1), 1)])
        );
        let id = ConcreteCopres::new(q, vec![1], vec![1], Matrix::identity(1)).unwrap();
        assert_eq!(decompose_copres(&c, &id).unwrap(), Copresentation::single(CopresClass::Nu(1)));
    }

    #[test]
    fn bad_coefficients_rejected() {
        let c = cat("A2", "0,1");
        // Hom(I_2, I_1) = 0 for the arrow 2 -> 1
        assert!(ConcreteCopres::new(c.quiver(), vec![1], vec![0], Matrix::identity(1)).is_err());
    }

    #[test]
    fn generic_examples() {
        let c = cat("A2", "0,1");
        assert_eq!(generic_copresentation(&c, &w("1,0;0,1")).unwrap(), Copresentation::single(root(&[1, 0])));
        assert_eq!(generic_copresentation(&c, &w("1,0;1,0")).unwrap(), Copresentation::single(CopresClass::Nu(0)));
        assert_eq!(
            generic_copresentation(&c, &w("1,1;0,0")).unwrap(),
            Copresentation::from_counts([(root(&[1, 1]), 1), (root(&[0, 1]), 1)])
        );
        assert_eq!(generic_copresentation(&c, &WVector::zero(2)).unwrap(), Copresentation::empty());
    }

    #[test]
    fn orbit_examples() {
        let c = cat("A2", "0,1");
        let o = enumerate_orbits(&c, &w("1,0;0,1"));
        assert_eq!(o.len(), 2);
        assert!(o.contains(&Copresentation::single(root(&[1, 0]))));
        assert!(o.contains(&Copresentation::from_counts([(root(&[1, 1]), 1), (CopresClass::NegSimple(1), 1)])));
        assert_eq!(enumerate_orbits(&c, &WVector::zero(2)), vec![Copresentation::empty()]);
        let o = enumerate_orbits(&c, &w("1,0;1,0"));
        assert_eq!(o.len(), 2);
        assert!(o.contains(&Copresentation::single(CopresClass::Nu(0))));
        assert!(o.contains(&Copresentation::from_counts([(root(&[1, 1]), 1), (CopresClass::NegSimple(0), 1)])));
    }

    #[test]
    fn oracle_finds_open_orbit() {
        let c = cat("A2", "0,1");
        for seed in 0..5 {
            assert_eq!(
                sample_generic_oracle(&c, &w("1,0;0,1"), seed).unwrap(),
                Copresentation::single(root(&[1, 0]))
            );
        }
        assert_eq!(sample_generic_oracle(&c, &WVector::zero(2), 7).unwrap(), Copresentation::empty());
    }

    #[test]
    fn orbit_dimensions() {
        let c = cat("A2", "0,1");
        let q = c.quiver();
        let nonzero = ConcreteCopres::new(q, vec![0], vec![1], Matrix::identity(1)).unwrap();
        assert_eq!((nonzero.hom_space_dim(q), nonzero.orbit_dim(q)), (1, 1));
        assert_eq!(ConcreteCopres::zero(q, &w("1,0;0,1")).orbit_dim(q), 0);
    }

    #[test]
    fn json_round_trip() {
        let phi = Copresentation::from_counts([(root(&[1, 1]), 2), (CopresClass::NegSimple(1), 1), (CopresClass::Nu(0), 3)]);
        let j = phi.to_json();
        assert_eq!(serde_json::to_value(&j[1]).unwrap(), serde_json::json!({"kind": "neg_simple", "vertex": 2, "multiplicity": 1}));
        assert_eq!(Copresentation::from_json(&j).unwrap(), phi);
        assert_eq!(phi.to_string(), "Root(1,1)^2 + NegSimple(2) + Nu(1)^3");
    }
}
