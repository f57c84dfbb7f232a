//! Per-quiver tables: indecomposables, their Hom/Ext tables, the indecomposable
//! copresentations with their w-vectors, the pairwise E-table, and (lazily) the
//! exchange graph and its cluster cones.
//!
//! Everything is computed once in [`Catalog::new`] or on first use through a
//! `OnceLock`, and is read-only afterwards.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::cluster::{exchange_graph, AlmostPositiveRoot, ExchangeGraph};
use crate::copres::{ConcreteCopres, CopresClass};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::linalg::{q as rat, Matrix};
use crate::par::Exec;
use crate::quiver::{euler_form, positive_roots, DimVector, Quiver, WVector};
use crate::rep::{betti_vector, hom_dim, indecomposable, min_inj_copresentation, Representation};

/// A cluster together with the `ν_i`: the classes spanning one cone of w-space, and
/// the inverse of their w-vector matrix as an integer matrix over a common denominator.
#[derive(Debug, Clone)]
pub struct Cone {
    pub classes: Vec<usize>,
    numer: Vec<Vec<i64>>,
    denom: i64,
}

impl Cone {
    /// Multiplicities `m` with `Σ m_c w_c = target`, when they are non-negative integers.
    pub fn coordinates(&self, target: &[i64]) -> Option<Vec<u64>> {
        self.numer
            .iter()
            .map(|row| {
                let x: i64 = row.iter().zip(target).map(|(a, b)| a * b).sum();
                (x >= 0 && x % self.denom == 0).then(|| (x / self.denom) as u64)
            })
            .collect()
    }
}

pub struct Catalog {
    q: Quiver,
    exec: Exec,
    roots: Vec<DimVector>,
    indecs: Vec<Representation>,
    hom: Vec<Vec<usize>>,
    /// Inverse of `H[b][a] = hom(M_b, M_a)`.
    hom_inv: Vec<Vec<i64>>,
    classes: Vec<CopresClass>,
    class_w: Vec<WVector>,
    root_copres: Vec<ConcreteCopres>,
    e_table: Vec<Vec<usize>>,
    graph: OnceLock<Result<ExchangeGraph>>,
    cones: OnceLock<Result<Vec<Cone>>>,
    class_cc: OnceLock<Vec<Result<LaurentPolynomial>>>,
}

impl std::fmt::Debug for Catalog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Catalog")
            .field("type", &self.q.dynkin_type())
            .field("height", self.q.height())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl Catalog {
    pub fn new(q: &Quiver, exec: Exec) -> Result<Self> {
        let n = q.rank();
        let roots = positive_roots(&q.dynkin_type());
        let r = roots.len();
        let indecs = exec
            .map(&roots, |a| indecomposable(q, a))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let flat = exec
            .map_range(r * r, |k| hom_dim(q, &indecs[k / r], &indecs[k % r]))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let hom: Vec<Vec<usize>> = flat.chunks(r).map(|c| c.to_vec()).collect();

        let h = Matrix::from_fn(r, r, |b, a| rat(hom[b][a] as i64));
        let inv = h
            .inverse()
            .ok_or_else(|| Error::InconsistentDecomposition("Hom table is singular".into()))?;
        let hom_inv = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let x = &inv[(i, j)];
                        x.is_integer()
                            .then(|| x.to_integer().to_i64())
                            .flatten()
                            .ok_or_else(|| Error::InconsistentDecomposition("Hom table is not unimodular".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;

        let mins = exec
            .map(&indecs, |m| min_inj_copresentation(q, m).and_then(|c| ConcreteCopres::from_minimal(q, &c)))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let bettis = exec
            .map(&indecs, |m| betti_vector(q, m))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        for (c, b) in mins.iter().zip(&bettis) {
            let w = c.w();
            if w.w0 != b.b0 || w.w1 != b.b1 {
                return Err(Error::KernelMismatch(format!(
                    "minimal copresentation has w = {w}, Betti vector ({};{})",
                    b.b0, b.b1
                )));
            }
        }

        let mut classes: Vec<CopresClass> = roots.iter().cloned().map(CopresClass::Root).collect();
        classes.extend((0..n).map(CopresClass::NegSimple));
        classes.extend((0..n).map(CopresClass::Nu));
        let mut class_w: Vec<WVector> = mins.iter().map(ConcreteCopres::w).collect();
        class_w.extend((0..n).map(|i| WVector::new(DimVector::zero(n), DimVector::unit(n, i))));
        class_w.extend((0..n).map(|i| WVector::new(DimVector::unit(n, i), DimVector::unit(n, i))));

        // E(Root α, Root β) = Ext(M_α, M_β); E(Root α, NegSimple i) = Hom(M_α, I_i);
        // everything with an empty kernel on the left, or ν on either side, vanishes.
        let injectives: Vec<Representation> = (0..n).map(|i| Representation::injective(q, i)).collect();
        let c = classes.len();
        let e_flat = exec
            .map_range(c * c, |k| -> Result<usize> {
                let (a, b) = (k / c, k % c);
                if a >= r {
                    return Ok(0);
                }
                if b < r {
                    let e = hom[a][b] as i64 - euler_form(q, &roots[a], &roots[b]);
                    return Ok(e as usize);
                }
                if b < r + n {
                    return hom_dim(q, &indecs[a], &injectives[b - r]);
                }
                Ok(0)
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        let e_table = e_flat.chunks(c).map(|x| x.to_vec()).collect();

        Ok(Self {
            q: q.clone(),
            exec,
            roots,
            indecs,
            hom,
            hom_inv,
            classes,
            class_w,
            root_copres: mins,
            e_table,
            graph: OnceLock::new(),
            cones: OnceLock::new(),
            class_cc: OnceLock::new(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.q
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn rank(&self) -> usize {
        self.q.rank()
    }

    pub fn roots(&self) -> &[DimVector] {
        &self.roots
    }

    pub fn root_index(&self, alpha: &DimVector) -> Option<usize> {
        self.roots.binary_search(alpha).ok()
    }

    pub fn indecomposable(&self, root: usize) -> &Representation {
        &self.indecs[root]
    }

    pub fn indecomposables(&self) -> &[Representation] {
        &self.indecs
    }

    /// `dim Hom(M_a, M_b)` for root indices.
    pub fn hom(&self, a: usize, b: usize) -> usize {
        self.hom[a][b]
    }

    /// `dim Ext^1(M_a, M_b)` for root indices.
    pub fn ext(&self, a: usize, b: usize) -> usize {
        (self.hom[a][b] as i64 - euler_form(&self.q, &self.roots[a], &self.roots[b])) as usize
    }

    /// Classes: the roots (same indices as [`Catalog::roots`]), then `NegSimple(0..n)`, then `Nu(0..n)`.
    pub fn classes(&self) -> &[CopresClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, c: usize) -> &CopresClass {
        &self.classes[c]
    }

    pub fn class_index(&self, c: &CopresClass) -> Option<usize> {
        let (r, n) = (self.roots.len(), self.rank());
        match c {
            CopresClass::Root(a) => self.root_index(a),
            CopresClass::NegSimple(i) => (*i < n).then_some(r + i),
            CopresClass::Nu(i) => (*i < n).then_some(r + n + i),
        }
    }

    pub fn class_w(&self, c: usize) -> &WVector {
        &self.class_w[c]
    }

    /// The realization of `Root(α)` for root index `root`.
    pub fn root_copres(&self, root: usize) -> &ConcreteCopres {
        &self.root_copres[root]
    }

    /// `dim E(c, c')` for class indices.
    pub fn e_table(&self, a: usize, b: usize) -> usize {
        self.e_table[a][b]
    }

    pub fn class_of_root(&self, r: &AlmostPositiveRoot) -> CopresClass {
        match r {
            AlmostPositiveRoot::NegSimple(i) => CopresClass::NegSimple(*i),
            AlmostPositiveRoot::Positive(a) => CopresClass::Root(a.clone()),
        }
    }

    /// Krull-Schmidt multiplicities of `m`, read off from `hom(M_β, m)` through the Hom table.
    pub fn decompose_module(&self, m: &Representation) -> Result<BTreeMap<DimVector, u64>> {
        let r = self.roots.len();
        let h = (0..r)
            .map(|b| hom_dim(&self.q, &self.indecs[b], m).map(|x| x as i64))
            .collect::<Result<Vec<_>>>()?;
        let mut out = BTreeMap::new();
        let mut total = DimVector::zero(self.rank());
        for a in 0..r {
            let k: i64 = self.hom_inv[a].iter().zip(&h).map(|(x, y)| x * y).sum();
            if k < 0 {
                return Err(Error::InconsistentDecomposition(format!(
                    "negative multiplicity {k} of {} in a module of dimension {}",
                    self.roots[a],
                    m.dims()
                )));
            }
            if k > 0 {
                out.insert(self.roots[a].clone(), k as u64);
                total = total.add(&self.roots[a].scale(k));
            }
        }
        if &total != m.dims() {
            return Err(Error::InconsistentDecomposition(format!(
                "summands add up to {total}, module has dimension {}",
                m.dims()
            )));
        }
        Ok(out)
    }

    pub fn graph(&self) -> Result<&ExchangeGraph> {
        self.graph
            .get_or_init(|| exchange_graph(&self.q, self.exec))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn cones(&self) -> Result<&[Cone]> {
        self.cones
            .get_or_init(|| self.build_cones())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    fn build_cones(&self) -> Result<Vec<Cone>> {
        let g = self.graph()?;
        let n = self.rank();
        g.clusters()
            .iter()
            .map(|cl| {
                let mut classes: Vec<usize> = cl
                    .iter()
                    .map(|&v| self.class_index(&self.class_of_root(&g.roots()[v])).expect("catalog class"))
                    .collect();
                classes.extend((0..n).map(|i| self.roots.len() + n + i));
                let cols: Vec<Vec<i64>> = classes.iter().map(|&c| self.class_w[c].flat()).collect();
                let m = Matrix::from_fn(2 * n, 2 * n, |r, c| rat(cols[c][r]));
                let inv = m.inverse().ok_or_else(|| {
                    Error::GenericSearch(format!("w-vectors of cluster {cl:?} are linearly dependent"))
                })?;
                let denom = inv
                    .entries()
                    .iter()
                    .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
                let numer = (0..2 * n)
                    .map(|i| {
                        (0..2 * n)
                            .map(|j| {
                                let x = &inv[(i, j)] * num_rational::BigRational::from_integer(denom.clone());
                                x.to_integer().to_i64().expect("small cone inverse")
                            })
                            .collect()
                    })
                    .collect();
                Ok(Cone {
                    classes,
                    numer,
                    denom: denom.to_i64().expect("small cone denominator"),
                })
            })
            .collect()
    }

    /// Cached `CC` of each class (`CC(ν_i) = 1`; the frozen factor is added by the caller).
    pub fn class_cc(&self) -> &[Result<LaurentPolynomial>] {
        self.class_cc.get_or_init(|| crate::character::class_characters(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::build_quiver;
    use crate::rep::{ext_dim, ext_dim_by_corank};

    fn quiver(ty: &str, h: &str) -> Quiver {
        build_quiver(ty.parse().unwrap(), h.parse().unwrap()).unwrap()
    }

    #[test]
    fn tables_match_direct_computation() {
        let q = quiver("A3", "0,1,0");
        let c = Catalog::new(&q, Exec::Sequential).unwrap();
        let r = c.roots().len();
        for a in 0..r {
            for b in 0..r {
                let (ma, mb) = (c.indecomposable(a), c.indecomposable(b));
                assert_eq!(c.ext(a, b), ext_dim(&q, ma, mb).unwrap());
                assert_eq!(c.ext(a, b), ext_dim_by_corank(&q, ma, mb).unwrap());
            }
        }
    }

    #[test]
    fn decomposes_sums_of_indecomposables() {
        let q = quiver("D4", "0,1,0,0");
        let c = Catalog::new(&q, Exec::Parallel).unwrap();
        let r = c.roots().len();
        for a in 0..r {
            for b in a..r {
                let m = c.indecomposable(a).direct_sum(c.indecomposable(b));
                let d = c.decompose_module(&m).unwrap();
                let mut expected = BTreeMap::new();
                *expected.entry(c.roots()[a].clone()).or_insert(0) += 1;
                *expected.entry(c.roots()[b].clone()).or_insert(0) += 1;
                assert_eq!(d, expected);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let q = quiver("A2", "0,1");
        let c = Catalog::new(&q, Exec::Sequential).unwrap();
        let semisimple = Representation::from_dims_zero_maps(&q, DimVector::new(vec![1, 1]).unwrap());
        let d = c.decompose_module(&semisimple).unwrap();
        assert_eq!(d.len(), 2);
        assert!(c.decompose_module(&Representation::zero(&q)).unwrap().is_empty());
    }

    #[test]
    fn cones_cover_the_clusters() {
        let q = quiver("A3", "1,2,3");
        let c = Catalog::new(&q, Exec::Sequential).unwrap();
        assert_eq!(c.cones().unwrap().len(), 14);
        for cone in c.cones().unwrap() {
            for (k, &cl) in cone.classes.iter().enumerate() {
                let m = cone.coordinates(&c.class_w(cl).flat()).unwrap();
                assert!(m.iter().enumerate().all(|(j, &x)| x == (j == k) as u64));
            }
        }
    }
}
