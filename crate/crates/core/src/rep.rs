//! Finite-dimensional representations of `Q_xi` over the rationals.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_q, parse_q, Matrix, Q};
use crate::quiver::{euler_form, simple_reflection, DimVector, Quiver};

/// Vector spaces at the vertices and a matrix of shape `dim(j) x dim(i)` per arrow `i -> j`
/// (in the order of [`Quiver::arrows`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    dims: DimVector,
    maps: Vec<Matrix>,
}

/// A family of linear maps `M_v -> N_v`, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Morphism {
    pub fn zero(source: &DimVector, target: &DimVector) -> Self {
        Self {
            maps: (0..source.len())
                .map(|v| Matrix::zeros(target.get(v), source.get(v)))
                .collect(),
        }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&first.maps).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn is_intertwiner(&self, q: &Quiver, source: &Representation, target: &Representation) -> bool {
        q.arrows().iter().enumerate().all(|(a, &(i, j))| {
            self.maps[j].mul(&source.maps[a]) == target.maps[a].mul(&self.maps[i])
        })
    }
}

impl Representation {
    pub fn new(q: &Quiver, dims: DimVector, maps: Vec<Matrix>) -> Result<Self> {
        let rep = Self { dims, maps };
        rep.check(q)?;
        Ok(rep)
    }


    pub fn check(&self, q: &Quiver) -> Result<()> {
        if self.dims.len() != q.rank() || self.maps.len() != q.arrows().len() {
            return Err(Error::QuiverMismatch(format!(
                "{} vertices / {} arrows, quiver has {} / {}",
                self.dims.len(),
                self.maps.len(),
                q.rank(),
                q.arrows().len()
            )));
        }
        for (a, &(i, j)) in q.arrows().iter().enumerate() {
            if self.maps[a].shape() != (self.dims.get(j), self.dims.get(i)) {
                return Err(Error::QuiverMismatch(format!(
                    "arrow {}->{} carries a {:?} matrix for dims {}",
                    i + 1,
                    j + 1,
                    self.maps[a].shape(),
                    self.dims
                )));
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total() as usize
    }

    pub fn zero(q: &Quiver) -> Self {
        Self::from_dims_zero_maps(q, DimVector::zero(q.rank()))
    }

    /// The semisimple representation with the given dimension vector.
    pub fn from_dims_zero_maps(q: &Quiver, dims: DimVector) -> Self {
        let maps = q
            .arrows()
            .iter()
            .map(|&(i, j)| Matrix::zeros(dims.get(j), dims.get(i)))
            .collect();
        Self { dims, maps }
    }

    pub fn simple(q: &Quiver, i: usize) -> Self {
        Self::from_dims_zero_maps(q, DimVector::unit(q.rank(), i))
    }

    /// The injective hull `I_i` of `S_i`: one dimension at each vertex with a path to `i`.
    pub fn injective(q: &Quiver, i: usize) -> Self {
        let dims = DimVector::from_raw((0..q.rank()).map(|j| q.has_path(j, i) as i64).collect());
        let maps = q
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let mut m = Matrix::zeros(dims.get(t), dims.get(s));
                if dims.get(s) == 1 && dims.get(t) == 1 {
                    m[(0, 0)] = Q::one();
                }
                m
            })
            .collect();
        Self { dims, maps }
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let dims = self.dims.add(&other.dims);
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
                m.set_block(0, 0, a);
                m.set_block(a.rows(), a.cols(), b);
                m
            })
            .collect();
        Representation { dims, maps }
    }

    pub fn direct_sum_all<'a>(q: &Quiver, parts: impl IntoIterator<Item = &'a Representation>) -> Representation {
        parts
            .into_iter()
            .fold(Representation::zero(q), |acc, p| acc.direct_sum(p))
    }

    /// Composite of the arrow maps along a path (given as arrow indices, in order).
    pub fn path_map(&self, q: &Quiver, from: usize, path: &[usize]) -> Matrix {
        let mut m = Matrix::identity(self.dims.get(from));
        for &a in path {
            debug_assert_eq!(self.maps[a].cols(), m.rows(), "{:?} is not a path", q.arrows()[a]);
            m = self.maps[a].mul(&m);
        }
        m
    }
}

/// Offsets of the unknowns `f_v` (row-major `dim N_v x dim M_v` blocks) in the Hom system.
fn hom_offsets(m: &DimVector, n: &DimVector) -> Vec<usize> {
    let mut off = Vec::with_capacity(m.len() + 1);
    let mut acc = 0;
    for v in 0..m.len() {
        off.push(acc);
        acc += m.get(v) * n.get(v);
    }
    off.push(acc);
    off
}

/// The linear map `(f_v)_v -> (f_j M_a - N_a f_i)_{a: i -> j}` as a matrix.
pub(crate) fn hom_system(q: &Quiver, m: &Representation, n: &Representation) -> Matrix {
    let off = hom_offsets(&m.dims, &n.dims);
    let unknowns = off[m.dims.len()];
    let eqs: usize = q
        .arrows()
        .iter()
        .map(|&(i, j)| n.dims.get(j) * m.dims.get(i))
        .sum();
    let mut sys = Matrix::zeros(eqs, unknowns);
    let mut row = 0;
    for (a, &(i, j)) in q.arrows().iter().enumerate() {
        let (di, dj) = (m.dims.get(i), m.dims.get(j));
        let (ei, ej) = (n.dims.get(i), n.dims.get(j));
        let ma = &m.maps[a];
        let na = &n.maps[a];
        for r in 0..ej {
            for c in 0..di {
                // (f_j M_a)[r, c] = sum_l f_j[r, l] M_a[l, c]
                for l in 0..dj {
                    let x = &ma[(l, c)];
                    if !x.is_zero() {
                        sys[(row, off[j] + r * dj + l)] += x;
                    }
                }
                // (N_a f_i)[r, c] = sum_l N_a[r, l] f_i[l, c]
                for l in 0..ei {
                    let x = &na[(r, l)];
                    if !x.is_zero() {
                        sys[(row, off[i] + l * di + c)] -= x;
                    }
                }
                row += 1;
            }
        }
    }
    sys
}

fn check_pair(q: &Quiver, m: &Representation, n: &Representation) -> Result<()> {
    m.check(q)?;
    n.check(q)
}

pub fn hom_dim(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize> {
    check_pair(q, m, n)?;
    let sys = hom_system(q, m, n);
    Ok(sys.cols() - sys.rank())
}

/// `dim Hom(M, N) - <dim M, dim N>`.
pub fn ext_dim(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize> {
    let h = hom_dim(q, m, n)? as i64;
    let e = h - euler_form(q, &m.dims, &n.dims);
    debug_assert!(e >= 0);
    Ok(e as usize)
}

/// Ext computed as the corank of `⊕_i Hom(M_i, N_i) -> ⊕_{a: i -> j} Hom(M_i, N_j)`.
pub fn ext_dim_by_corank(q: &Quiver, m: &Representation, n: &Representation) -> Result<usize> {
    check_pair(q, m, n)?;
    let sys = hom_system(q, m, n);
    Ok(sys.rows() - sys.rank())
}

/// A basis of `Hom(M, N)`; element `k` is the unit vector on coordinate `free[k]`
/// of the flattened system.
pub fn hom_basis(q: &Quiver, m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    check_pair(q, m, n)?;
    let sys = hom_system(q, m, n);
    let (basis, _) = sys.nullspace();
    let off = hom_offsets(&m.dims, &n.dims);
    Ok((0..basis.cols())
        .map(|k| Morphism {
            maps: (0..q.rank())
                .map(|v| {
                    let (rows, cols) = (n.dims.get(v), m.dims.get(v));
                    Matrix::from_fn(rows, cols, |r, c| basis[(off[v] + r * cols + c, k)].clone())
                })
                .collect(),
        })
        .collect())
}

/// The joint kernel of the arrows leaving `i`, as columns (plus its free coordinates).
fn socle_space(q: &Quiver, m: &Representation, i: usize) -> (Matrix, Vec<usize>) {
    let outs: Vec<Matrix> = q.out_arrows(i).map(|a| m.maps[a].clone()).collect();
    let stacked = Matrix::vstack(&outs, m.dims.get(i));
    stacked.nullspace()
}

/// Per-vertex dimension of the socle: `dim ∩_{a: i -> j} Ker M_a`.
pub fn socle(q: &Quiver, m: &Representation) -> DimVector {
    DimVector::from_raw(
        (0..q.rank())
            .map(|i| socle_space(q, m, i).0.cols() as i64)
            .collect(),
    )
}

/// `Ker f` with its inclusion into the source.
pub fn kernel(q: &Quiver, f: &Morphism, source: &Representation) -> (Representation, Morphism) {
    let bases: Vec<(Matrix, Vec<usize>)> = f.maps.iter().map(Matrix::nullspace).collect();
    let dims = DimVector::from_raw(bases.iter().map(|(b, _)| b.cols() as i64).collect());
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(i, j))| {
            let image = source.maps[a].mul(&bases[i].0);
            let x = image.select_rows(&bases[j].1);
            debug_assert_eq!(bases[j].0.mul(&x), image);
            x
        })
        .collect();
    let incl = Morphism {
        maps: bases.into_iter().map(|(b, _)| b).collect(),
    };
    (Representation { dims, maps }, incl)
}

/// `Coker f` with the projection from the target.
pub fn cokernel(q: &Quiver, f: &Morphism, target: &Representation) -> (Representation, Morphism) {
    let proj: Vec<(Matrix, Vec<usize>)> = f.maps.iter().map(Matrix::left_nullspace).collect();
    let dims = DimVector::from_raw(proj.iter().map(|(p, _)| p.rows() as i64).collect());
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(i, j))| {
            let image = proj[j].0.mul(&target.maps[a]);
            let y = image.select_cols(&proj[i].1);
            debug_assert_eq!(y.mul(&proj[i].0), image);
            y
        })
        .collect();
    let pi = Morphism {
        maps: proj.into_iter().map(|(p, _)| p).collect(),
    };
    (Representation { dims, maps }, pi)
}

/// A direct sum `I^b` of indecomposable injectives, laid out vertex-major:
/// slot `s` is a copy of `I_{slots[s]}`, and `coords[s][v]` is its row at vertex `v`.
#[derive(Debug, Clone)]
pub struct InjectiveSum {
    pub b: DimVector,
    pub slots: Vec<usize>,
    pub coords: Vec<Vec<Option<usize>>>,
    pub rep: Representation,
}

impl InjectiveSum {
    pub fn new(q: &Quiver, b: &DimVector) -> Self {
        let slots: Vec<usize> = (0..q.rank())
            .flat_map(|i| std::iter::repeat_n(i, b.get(i)))
            .collect();
        Self::from_slots(q, slots)
    }

    /// The sum `⊕_s I_{slots[s]}` in the given slot order.
    pub fn from_slots(q: &Quiver, slots: Vec<usize>) -> Self {
        let mut counts = vec![0i64; q.rank()];
        for &i in &slots {
            counts[i] += 1;
        }
        let b = DimVector::from_raw(counts);
        let mut next = vec![0usize; q.rank()];
        let mut coords = Vec::with_capacity(slots.len());
        for &i in &slots {
            let c: Vec<Option<usize>> = (0..q.rank())
                .map(|v| {
                    q.has_path(v, i).then(|| {
                        next[v] += 1;
                        next[v] - 1
                    })
                })
                .collect();
            coords.push(c);
        }
        let injectives: Vec<Representation> = (0..q.rank()).map(|i| Representation::injective(q, i)).collect();
        let rep = Representation::direct_sum_all(q, slots.iter().map(|&i| &injectives[i]));
        // direct_sum_all stacks summands in slot order, matching `coords`
        Self {
            b,
            slots,
            coords,
            rep,
        }
    }
}

/// An injective hull `M -> I^{soc M}`.
pub fn injective_hull(q: &Quiver, m: &Representation) -> (InjectiveSum, Morphism) {
    let soc = socle(q, m);
    let hull = InjectiveSum::new(q, &soc);
    // λ_i selects the free coordinates of the socle basis, so it is the identity on the socle
    let selectors: Vec<Vec<usize>> = (0..q.rank()).map(|i| socle_space(q, m, i).1).collect();
    let mut maps: Vec<Matrix> = (0..q.rank())
        .map(|v| Matrix::zeros(hull.rep.dims.get(v), m.dims.get(v)))
        .collect();
    let mut copy = vec![0usize; q.rank()];
    for (s, &i) in hull.slots.iter().enumerate() {
        let sel = selectors[i][copy[i]];
        copy[i] += 1;
        for v in 0..q.rank() {
            let Some(row) = hull.coords[s][v] else { continue };
            let path = q.path(v, i).expect("coordinate implies a path");
            let pm = m.path_map(q, v, &path);
            for c in 0..m.dims.get(v) {
                maps[v][(row, c)] = pm[(sel, c)].clone();
            }
        }
    }
    (hull, Morphism { maps })
}

/// A minimal injective copresentation `0 -> M -> I^{w(0)} -> I^{w(1)} -> 0`, as a
/// concrete per-vertex morphism between the injective sums.
#[derive(Debug, Clone)]
pub struct MinimalCopresentation {
    pub source: InjectiveSum,
    pub target: InjectiveSum,
    pub map: Morphism,
}

pub fn min_inj_copresentation(q: &Quiver, m: &Representation) -> Result<MinimalCopresentation> {
    m.check(q)?;
    let (hull, iota) = injective_hull(q, m);
    let (coker, pi) = cokernel(q, &iota, &hull.rep);
    let (hull1, kappa) = injective_hull(q, &coker);
    if hull1.rep.dims != coker.dims {
        return Err(Error::KernelMismatch(format!(
            "cokernel {} of the injective hull is not injective",
            coker.dims
        )));
    }
    let map = kappa.compose(&pi);
    debug_assert!(map.is_intertwiner(q, &hull.rep, &hull1.rep));
    let (k, _) = kernel(q, &map, &hull.rep);
    if k.dims != m.dims {
        return Err(Error::KernelMismatch(format!(
            "kernel {} of the copresentation differs from {}",
            k.dims, m.dims
        )));
    }
    Ok(MinimalCopresentation {
        source: hull,
        target: hull1,
        map,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiVector {
    pub b0: DimVector,
    pub b1: DimVector,
}

/// `b0 = soc M`, `b1_i = dim Ext^1(S_i, M)`.
pub fn betti_vector(q: &Quiver, m: &Representation) -> Result<BettiVector> {
    m.check(q)?;
    let b1 = (0..q.rank())
        .map(|i| ext_dim(q, &Representation::simple(q, i), m).map(|e| e as i64))
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiVector {
        b0: socle(q, m),
        b1: DimVector::from_raw(b1),
    })
}

/// `S_k^-`: from a representation of `q_src` (where `k` is a source) to one of
/// `q_src.reflect(k)` (where `k` is a sink).
fn reflect_at_source(q_src: &Quiver, n: &Representation, k: usize) -> (Quiver, Representation) {
    let q_dst = q_src.reflect(k);
    let outs: Vec<usize> = q_src.out_arrows(k).collect();
    let blocks: Vec<Matrix> = outs.iter().map(|&a| n.maps[a].clone()).collect();
    let stacked = Matrix::vstack(&blocks, n.dims.get(k));
    let (proj, _) = stacked.left_nullspace();
    let mut dims = n.dims.entries().to_vec();
    dims[k] = proj.rows() as i64;
    let dims = DimVector::from_raw(dims);
    let mut col0 = std::collections::HashMap::new();
    let mut acc = 0;
    for &a in &outs {
        let t = q_src.arrows()[a].1;
        col0.insert(t, acc);
        acc += n.dims.get(t);
    }
    let maps = q_dst
        .arrows()
        .iter()
        .map(|&(i, j)| {
            if j == k {
                let c0 = col0[&i];
                proj.submatrix(0..proj.rows(), c0..c0 + n.dims.get(i))
            } else {
                let a = q_src
                    .arrows()
                    .iter()
                    .position(|&e| e == (i, j))
                    .expect("arrows away from k are unchanged");
                n.maps[a].clone()
            }
        })
        .collect();
    (q_dst, Representation { dims, maps })
}

/// The indecomposable `M_xi[alpha]`, built by reflection functors from a simple.
pub fn indecomposable(q: &Quiver, alpha: &DimVector) -> Result<Representation> {
    let ty = q.dynkin_type();
    if alpha.len() != q.rank() || !crate::quiver::positive_roots(&ty).contains(alpha) {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    // Walk down: at the lowest vertex k (a sink), either alpha = alpha_k or we
    // pass to s_k(alpha) on the quiver with k turned into a source.
    let mut steps: Vec<(Quiver, usize)> = Vec::new();
    let mut cur_q = q.clone();
    let mut cur = alpha.entries().to_vec();
    let limit = 4 * q.rank() * (ty.num_positive_roots() + q.rank());
    loop {
        let k = cur_q.height_order()[0];
        debug_assert!(cur_q.is_sink(k));
        if cur.iter().enumerate().all(|(i, &c)| c == (i == k) as i64) {
            break;
        }
        let next = simple_reflection(&ty, &cur, k);
        debug_assert!(next.iter().all(|&c| c >= 0));
        let next_q = cur_q.reflect(k);
        steps.push((next_q.clone(), k));
        cur_q = next_q;
        cur = next;
        if steps.len() > limit {
            return Err(Error::NotARoot(alpha.to_string()));
        }
    }
    let k = cur_q.height_order()[0];
    let mut rep = Representation::simple(&cur_q, k);
    for (q_src, k) in steps.into_iter().rev() {
        let (_, r) = reflect_at_source(&q_src, &rep, k);
        rep = r;
    }
    debug_assert_eq!(&rep.dims, alpha);
    rep.check(q)?;
    Ok(rep)
}

/// JSON form: `{"dims": [..], "arrows": [{"source": i, "target": j, "matrix": [["p/q", ..], ..]}]}`
/// with 1-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dims: Vec<i64>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub source: usize,
    pub target: usize,
    pub matrix: Vec<Vec<String>>,
}

impl Representation {
    pub fn to_json(&self, q: &Quiver) -> RepresentationJson {
        RepresentationJson {
            dims: self.dims.entries().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(&(i, j), m)| ArrowJson {
                    source: i + 1,
                    target: j + 1,
                    matrix: (0..m.rows())
                        .map(|r| (0..m.cols()).map(|c| format_q(&m[(r, c)])).collect())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(q: &Quiver, json: &RepresentationJson) -> Result<Self> {
        let dims = DimVector::new(json.dims.clone())?;
        let mut maps: Vec<Option<Matrix>> = vec![None; q.arrows().len()];
        for arrow in &json.arrows {
            let a = q
                .arrows()
                .iter()
                .position(|&e| e == (arrow.source.wrapping_sub(1), arrow.target.wrapping_sub(1)))
                .ok_or_else(|| Error::QuiverMismatch(format!("no arrow {}->{}", arrow.source, arrow.target)))?;
            let rows = arrow.matrix.len();
            let cols = arrow.matrix.first().map_or(dims.get(arrow.source - 1), Vec::len);
            let mut entries = Vec::with_capacity(rows * cols);
            for row in &arrow.matrix {
                if row.len() != cols {
                    return Err(Error::Parse("ragged matrix".into()));
                }
                for e in row {
                    entries.push(parse_q(e).ok_or_else(|| Error::Parse(format!("bad rational {e:?}")))?);
                }
            }
            maps[a] = Some(Matrix::from_rows(rows, cols, entries));
        }
        let maps = q
            .arrows()
            .iter()
            .zip(maps)
            .map(|(&(i, j), m)| m.unwrap_or_else(|| Matrix::zeros(dims.get(j), dims.get(i))))
            .collect();
        Representation::new(q, dims, maps)
    }
}
