//! Caldero-Chapoton characters of decorated representations and copresentations.
//!
//! Euler characteristics of quiver Grassmannians are obtained by counting
//! `F_p`-rational points for several primes, interpolating the counting
//! polynomial and evaluating it at `q = 1`. A prime is used only if the reduction
//! of `M` mod `p` has the same Krull-Schmidt type as `M` (same Hom dimensions from
//! every indecomposable, each of which stays a brick). The interpolant is checked
//! against an exhaustive count over `F_2`.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::catalog::Catalog;
use crate::cluster::initial_seed;
use crate::copres::{CopresClass, Copresentation};
use crate::einvariant::DecoratedRep;
use crate::error::{Error, Result};
use crate::fp::{self, FpMatrix};
use crate::laurent::LaurentPolynomial;
use crate::quiver::{DimVector, Quiver};
use crate::rep::{hom_dim, hom_system, socle, Representation};

/// Entries indexed by `I ⊔ I'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExtendedGVector(pub Vec<i64>);

/// `g_i = dim V_i - dim M_i + Σ_j n_ij dim M_j`, `g_{i'} = dim soc(M)_i`.
pub fn extended_g_vector(q: &Quiver, m: &DecoratedRep) -> ExtendedGVector {
    let n = q.rank();
    let d = m.module.dims();
    let nm = q.arrow_count_matrix();
    let soc = socle(q, &m.module);
    let mut g = vec![0i64; 2 * n];
    for i in 0..n {
        let out: i64 = (0..n).map(|j| nm[i][j] * d.entries()[j]).sum();
        g[i] = m.decoration.entries()[i] - d.entries()[i] + out;
        g[n + i] = soc.entries()[i];
    }
    ExtendedGVector(g)
}

/// `Σ_i v_i (d_i - v_i)`, the dimension of the ambient product of Grassmannians.
fn degree_bound(d: &DimVector, v: &DimVector) -> usize {
    d.entries()
        .iter()
        .zip(v.entries())
        .map(|(&a, &b)| (b * (a - b)) as usize)
        .sum()
}

/// `M` reduced mod `p`, one matrix per arrow.
struct Reduced {
    p: u64,
    maps: Vec<FpMatrix>,
}

/// The primes at which `M` may be counted, found on demand.
struct PrimeSource<'a> {
    cat: &'a Catalog,
    m: &'a Representation,
    hom_q: Vec<usize>,
    good: Vec<Reduced>,
    next: u64,
}

impl<'a> PrimeSource<'a> {
    fn new(cat: &'a Catalog, m: &'a Representation) -> Result<Self> {
        let q = cat.quiver();
        let hom_q = cat
            .indecomposables()
            .iter()
            .map(|b| hom_dim(q, b, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cat,
            m,
            hom_q,
            good: Vec::new(),
            next: 3,
        })
    }

    fn hom_mod_p(q: &Quiver, a: &Representation, b: &Representation, p: u64) -> Option<usize> {
        let sys = hom_system(q, a, b);
        let red = fp::reduce_matrix(&sys, p)?;
        Some(sys.cols() - fp::rank(&red, sys.cols(), p))
    }

    fn check(&self, p: u64) -> Option<Reduced> {
        let q = self.cat.quiver();
        let maps = self
            .m
            .maps()
            .iter()
            .map(|a| fp::reduce_matrix(a, p))
            .collect::<Option<Vec<_>>>()?;
        for (b, &h) in self.cat.indecomposables().iter().zip(&self.hom_q) {
            if Self::hom_mod_p(q, b, b, p)? != 1 || Self::hom_mod_p(q, b, self.m, p)? != h {
                return None;
            }
        }
        Some(Reduced { p, maps })
    }

    /// The first `k` good odd primes.
    fn take(&mut self, k: usize) -> &[Reduced] {
        while self.good.len() < k {
            let p = self.next;
            self.next += 1;
            if !fp::is_prime(p) {
                continue;
            }
            if let Some(r) = self.check(p) {
                self.good.push(r);
            }
        }
        &self.good[..k]
    }
}

/// Subspaces enumerated per Grassmannian table before giving up.
pub const COUNT_BUDGET: u64 = 250_000;

/// Number of subrepresentations of dimension `v`, vertices visited sinks first.
/// Every enumerated subspace is drawn from `budget`; `None` once it runs dry.
fn count_subreps(q: &Quiver, dims: &DimVector, r: &Reduced, v: &DimVector, budget: &AtomicU64) -> Option<u128> {
    struct Walk<'a> {
        q: &'a Quiver,
        dims: &'a DimVector,
        r: &'a Reduced,
        v: &'a DimVector,
        order: Vec<usize>,
        ann: Vec<FpMatrix>,
        budget: &'a AtomicU64,
        exhausted: bool,
    }
    impl Walk<'_> {
        fn go(&mut self, pos: usize) -> u128 {
            if pos == self.order.len() || self.exhausted {
                return 1;
            }
            let (q, p) = (self.q, self.r.p);
            let i = self.order[pos];
            let (di, vi) = (self.dims.get(i), self.v.get(i));
            // W_i = {x : M_a x ∈ U_j for every arrow a: i -> j}
            let mut constraints: FpMatrix = Vec::new();
            for a in q.out_arrows(i) {
                let j = q.arrows()[a].1;
                if self.ann[j].is_empty() {
                    continue;
                }
                constraints.extend(fp::mat_mul(&self.ann[j], &self.r.maps[a], self.dims.get(j), di, p));
            }
            let w = fp::nullspace(&constraints, di, p);
            if vi > w.len() {
                return 0;
            }
            if q.is_source(i) {
                return fp::gaussian_binomial(w.len(), vi, p) * self.go(pos + 1);
            }
            let k = fp::gaussian_binomial(w.len(), vi, p);
            let took = u64::try_from(k).ok().and_then(|k| {
                self.budget
                    .fetch_update(Ordering::Relaxed, Ordering::Relaxed, |b| b.checked_sub(k))
                    .ok()
            });
            if took.is_none() {
                self.budget.store(0, Ordering::Relaxed);
                self.exhausted = true;
                return 0;
            }
            let mut subspaces = Vec::with_capacity(k as usize);
            fp::for_each_subspace(&w, vi, p, |u| subspaces.push(u.to_vec()));
            let mut total = 0u128;
            for u in subspaces {
                self.ann[i] = fp::nullspace(&u, di, p);
                total += self.go(pos + 1);
            }
            self.ann[i].clear();
            total
        }
    }
    let mut walk = Walk {
        q,
        dims,
        r,
        v,
        order: q.height_order(),
        ann: vec![Vec::new(); q.rank()],
        budget,
        exhausted: false,
    };
    let total = walk.go(0);
    (!walk.exhausted).then_some(total)
}

fn too_large(d: &DimVector) -> Error {
    Error::TooLarge(format!("Grassmannians of a module of dimension {d} need more than {COUNT_BUDGET} subspaces"))
}

fn d_max(d: &DimVector) -> i64 {
    d.entries().iter().copied().max().unwrap_or(0)
}

/// Exhaustive count over `F_2`: every tuple of subspaces (as sets of vectors) is tested
/// for stability under the arrows. `None` if `M` does not reduce mod 2 or the search is too large.
fn brute_force_f2(q: &Quiver, m: &Representation, v: &DimVector) -> Option<u128> {
    let dims = m.dims();
    // choosing k of the 2^d - 1 non-zero vectors at every vertex must stay small
    let choices_bound = dims.entries().iter().zip(v.entries()).try_fold(1u128, |acc, (&d, &k)| {
        let nonzero = (1u128 << d.min(20)) - 1;
        let c = (0..k as u128).try_fold(1u128, |c, t| c.checked_mul(nonzero.checked_sub(t)?).map(|x| x / (t + 1)))?;
        acc.checked_mul(c)
    });
    if d_max(dims) > 12 || choices_bound.is_none_or(|c| c > 200_000) {
        return None;
    }
    let maps: Vec<FpMatrix> = m.maps().iter().map(|a| fp::reduce_matrix(a, 2)).collect::<Option<_>>()?;
    let apply = |a: usize, x: u32| -> u32 {
        let mat = &maps[a];
        let mut y = 0u32;
        for (r, row) in mat.iter().enumerate() {
            let bit = row.iter().enumerate().filter(|(c, &e)| e == 1 && x >> c & 1 == 1).count() % 2;
            y |= (bit as u32) << r;
        }
        y
    };
    let mut choices: Vec<Vec<HashSet<u32>>> = Vec::new();
    let mut total_tuples: u128 = 1;
    for i in 0..q.rank() {
        let (d, k) = (dims.get(i), v.get(i));
        let mut found: Vec<HashSet<u32>> = Vec::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let nonzero: Vec<u32> = (1..1u32 << d).collect();
        let mut pick = |vecs: &[u32]| {
            let mut span: HashSet<u32> = HashSet::from([0]);
            for &x in vecs {
                let new: Vec<u32> = span.iter().map(|s| s ^ x).collect();
                span.extend(new);
            }
            if span.len() == 1 << vecs.len() {
                let mut key: Vec<u32> = span.iter().copied().collect();
                key.sort_unstable();
                if seen.insert(key) {
                    found.push(span);
                }
            }
        };
        let mut idx: Vec<usize> = (0..k).collect();
        if k == 0 {
            pick(&[]);
        } else if k <= nonzero.len() {
            loop {
                let vecs: Vec<u32> = idx.iter().map(|&t| nonzero[t]).collect();
                pick(&vecs);
                let mut t = k;
                let mut advanced = false;
                while t > 0 {
                    t -= 1;
                    if idx[t] < nonzero.len() - k + t {
                        idx[t] += 1;
                        for s in t + 1..k {
                            idx[s] = idx[s - 1] + 1;
                        }
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    break;
                }
            }
        }
        total_tuples = total_tuples.saturating_mul(found.len() as u128);
        choices.push(found);
    }
    if total_tuples > 200_000 {
        return None;
    }
    let n = q.rank();
    let mut count = 0u128;
    let mut pick = vec![0usize; n];
    if choices.iter().any(Vec::is_empty) {
        return Some(0);
    }
    loop {
        let stable = q.arrows().iter().enumerate().all(|(a, &(i, j))| {
            let (ui, uj) = (&choices[i][pick[i]], &choices[j][pick[j]]);
            ui.iter().all(|&x| uj.contains(&apply(a, x)))
        });
        if stable {
            count += 1;
        }
        let mut t = 0;
        while t < n {
            pick[t] += 1;
            if pick[t] < choices[t].len() {
                break;
            }
            pick[t] = 0;
            t += 1;
        }
        if t == n {
            return Some(count);
        }
    }
}

fn lagrange_at(points: &[(u64, u128)], t: i64) -> BigRational {
    let mut acc = BigRational::zero();
    for (k, &(xk, yk)) in points.iter().enumerate() {
        let mut term = BigRational::from_integer(BigInt::from(yk));
        for (j, &(xj, _)) in points.iter().enumerate() {
            if j != k {
                term *= BigRational::new(BigInt::from(t) - BigInt::from(xj), BigInt::from(xk) - BigInt::from(xj));
            }
        }
        acc += term;
    }
    acc
}

/// The data behind one Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrassmannianCount {
    pub v: Vec<i64>,
    pub chi: i64,
    pub degree_bound: usize,
    /// `(p, #Gr_v(M)(F_p))` for the interpolation nodes.
    pub counts: Vec<(u64, u128)>,
    /// `(interpolated value at 2, exhaustive F_2 count)`, when the probe could run.
    pub f2_probe: Option<(String, u128)>,
}

fn count_one(
    q: &Quiver,
    m: &Representation,
    v: &DimVector,
    primes: &[Reduced],
    f2: bool,
    budget: &AtomicU64,
) -> Result<GrassmannianCount> {
    let d = m.dims();
    let deg = degree_bound(d, v);
    let counts: Vec<(u64, u128)> = primes[..deg + 1]
        .iter()
        .map(|r| {
            count_subreps(q, d, r, v, budget).map(|c| (r.p, c)).ok_or_else(|| too_large(d))
        })
        .collect::<Result<_>>()?;
    let at_one = lagrange_at(&counts, 1);
    if !at_one.is_integer() {
        return Err(Error::Interpolation(format!(
            "Gr_{v} of a module of dimension {d}: value {at_one} at q = 1 from counts {counts:?}"
        )));
    }
    let chi = at_one.to_integer().to_i64().ok_or_else(|| Error::Interpolation("Euler characteristic overflows".into()))?;
    let mut f2_probe = None;
    if f2 {
        if let Some(observed) = brute_force_f2(q, m, v) {
            let predicted = lagrange_at(&counts, 2);
            if predicted != BigRational::from_integer(BigInt::from(observed)) {
                return Err(Error::Interpolation(format!(
                    "Gr_{v}: interpolated F_2 count {predicted} but exhaustive count {observed} (nodes {counts:?})"
                )));
            }
            f2_probe = Some((predicted.to_string(), observed));
        }
    }
    Ok(GrassmannianCount {
        v: v.entries().to_vec(),
        chi,
        degree_bound: deg,
        counts,
        f2_probe,
    })
}

/// Whether 2 is a good prime for `M`, so that the `F_2` count follows the same polynomial.
fn two_is_good(cat: &Catalog, m: &Representation) -> Result<bool> {
    let src = PrimeSource::new(cat, m)?;
    Ok(src.check(2).is_some())
}

fn sub_dimension_vectors(d: &DimVector) -> Vec<DimVector> {
    let mut out = vec![Vec::new()];
    for &x in d.entries() {
        out = out
            .into_iter()
            .flat_map(|pre: Vec<i64>| {
                (0..=x).map(move |k| {
                    let mut p = pre.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(|v| DimVector::new(v).expect("non-negative")).collect()
}

/// Euler characteristics of `Gr_v(M)` for every `v ≤ dim M`.
pub fn grassmannian_table(cat: &Catalog, m: &Representation) -> Result<Vec<GrassmannianCount>> {
    let q = cat.quiver();
    m.check(q)?;
    let vs = sub_dimension_vectors(m.dims());
    let max_deg = vs.iter().map(|v| degree_bound(m.dims(), v)).max().unwrap_or(0);
    let mut src = PrimeSource::new(cat, m)?;
    src.take(max_deg + 1);
    let primes = &src.good;
    let f2 = two_is_good(cat, m)?;
    let budget = AtomicU64::new(COUNT_BUDGET);
    let rows = cat.exec().map(&vs, |v| count_one(q, m, v, primes, f2, &budget));
    if rows.iter().any(|r| matches!(r, Err(Error::TooLarge(_)))) {
        return Err(too_large(m.dims()));
    }
    rows.into_iter().collect()
}

/// `χ(Gr_v(M))`; zero unless `v ≤ dim M`.
pub fn grassmannian_euler_char(cat: &Catalog, m: &Representation, v: &DimVector) -> Result<i64> {
    let q = cat.quiver();
    m.check(q)?;
    if v.len() != q.rank() || !v.le(m.dims()) {
        return Ok(0);
    }
    let mut src = PrimeSource::new(cat, m)?;
    src.take(degree_bound(m.dims(), v) + 1);
    let f2 = two_is_good(cat, m)?;
    Ok(count_one(q, m, v, &src.good, f2, &AtomicU64::new(COUNT_BUDGET))?.chi)
}

/// `CC(M, V) = Σ_v χ(Gr_v M) Π_i x_i^{g_i - Σ_j b_ij v_j}` over `i ∈ I ⊔ I'`.
pub fn cc_decorated(cat: &Catalog, m: &DecoratedRep) -> Result<LaurentPolynomial> {
    let q = cat.quiver();
    let n = q.rank();
    let g = extended_g_vector(q, m);
    let b = initial_seed(q).matrix;
    let table = grassmannian_table(cat, &m.module)?;
    let terms = table.iter().filter(|t| t.chi != 0).map(|t| {
        let e: Vec<i32> = (0..2 * n)
            .map(|i| {
                let shift: i64 = (0..n).map(|j| b.get(i, j) * t.v[j]).sum();
                (g.0[i] - shift) as i32
            })
            .collect();
        (e, t.chi)
    });
    Ok(LaurentPolynomial::from_terms(2 * n, terms))
}

/// `CC` of every catalogue class: `CC(M[α], 0)`, `CC(0, δ_i) = x_i`, and `1` for `ν_i`.
pub(crate) fn class_characters(cat: &Catalog) -> Vec<Result<LaurentPolynomial>> {
    let q = cat.quiver();
    let n = q.rank();
    let classes = cat.classes();
    cat.exec()
        .map(classes, |c| match c {
            CopresClass::Root(a) => {
                let idx = cat.root_index(a).expect("catalog root");
                cc_decorated(cat, &DecoratedRep::undecorated(cat.indecomposable(idx).clone()))
            }
            CopresClass::NegSimple(i) => cc_decorated(
                cat,
                &DecoratedRep::new(Representation::zero(q), DimVector::unit(n, *i)),
            ),
            CopresClass::Nu(_) => Ok(LaurentPolynomial::one(2 * n)),
        })
}

/// `CC(φ) = CC(ℳ(φ)) Π_i x_{i'}^{m_i(φ)}`, with `CC(ℳ(φ))` taken as the product over the
/// indecomposable summands.
pub fn cc_copres(cat: &Catalog, phi: &Copresentation) -> Result<LaurentPolynomial> {
    let n = cat.rank();
    let table = cat.class_cc();
    let mut out = LaurentPolynomial::one(2 * n);
    for (c, k) in phi.iter() {
        let idx = cat.class_index(c).expect("catalog class");
        out = out.mul(&table[idx].as_ref().map_err(Clone::clone)?.pow(k as u32));
        if let CopresClass::Nu(i) = c {
            out = out.mul(&LaurentPolynomial::var(2 * n, n + i).pow(k as u32));
        }
    }
    Ok(out)
}

/// `Σ_v χ(Gr_v M)`, the Euler characteristic of the whole Grassmannian.
pub fn total_euler_char(cat: &Catalog, m: &Representation) -> Result<i64> {
    Ok(grassmannian_table(cat, m)?.iter().map(|t| t.chi).sum())
}

impl GrassmannianCount {
    pub fn is_trivially_one(&self) -> bool {
        self.degree_bound == 0 && self.chi.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Exec;
    use crate::quiver::build_quiver;

    fn cat(ty: &str, h: &str) -> Catalog {
        Catalog::new(&build_quiver(ty.parse().unwrap(), h.parse().unwrap()).unwrap(), Exec::Sequential).unwrap()
    }

    fn dv(v: &[i64]) -> DimVector {
        DimVector::new(v.to_vec()).unwrap()
    }

    fn mono(e: &[i32]) -> LaurentPolynomial {
        LaurentPolynomial::monomial(e.to_vec(), 1)
    }

    #[test]
    fn g_vector_examples() {
        let c = cat("A2", "0,1");
        let q = c.quiver();
        let neg = DecoratedRep::new(Representation::zero(q), DimVector::unit(2, 1));
        assert_eq!(extended_g_vector(q, &neg).0, vec![0, 1, 0, 0]);
        let i1 = DecoratedRep::undecorated(Representation::injective(q, 0));
        assert_eq!(extended_g_vector(q, &i1).0, vec![-1, 0, 1, 0]);
        let s2 = DecoratedRep::undecorated(Representation::simple(q, 1));
        assert_eq!(extended_g_vector(q, &s2).0, vec![0, -1, 0, 1]);
    }

    #[test]
    fn euler_char_examples() {
        let c = cat("A2", "0,1");
        let q = c.quiver();
        let i1 = Representation::injective(q, 0);
        assert_eq!(grassmannian_euler_char(&c, &i1, &dv(&[0, 0])).unwrap(), 1);
        assert_eq!(grassmannian_euler_char(&c, &i1, &dv(&[1, 1])).unwrap(), 1);
        assert_eq!(grassmannian_euler_char(&c, &i1, &dv(&[1, 0])).unwrap(), 1);
        assert_eq!(grassmannian_euler_char(&c, &i1, &dv(&[0, 1])).unwrap(), 0);
        assert_eq!(grassmannian_euler_char(&c, &i1, &dv(&[2, 0])).unwrap(), 0);
    }

    #[test]
    fn euler_char_of_a_semisimple_module() {
        // Gr_(1,0) of S_1^2 is P^1
        let c = cat("A2", "0,1");
        let q = c.quiver();
        let m = Representation::simple(q, 0).direct_sum(&Representation::simple(q, 0));
        assert_eq!(grassmannian_euler_char(&c, &m, &dv(&[1, 0])).unwrap(), 2);
        let t = grassmannian_table(&c, &m).unwrap();
        let row = t.iter().find(|r| r.v == vec![1, 0]).unwrap();
        assert_eq!(row.counts[0], (3, 4));
        assert_eq!(row.f2_probe, Some(("3".to_string(), 3)));
    }

    #[test]
    fn cc_examples() {
        let c = cat("A2", "0,1");
        let q = c.quiver();
        let neg = DecoratedRep::new(Representation::zero(q), DimVector::unit(2, 0));
        assert_eq!(cc_decorated(&c, &neg).unwrap(), mono(&[1, 0, 0, 0]));
        let i1 = DecoratedRep::undecorated(Representation::injective(q, 0));
        let expected = mono(&[-1, 0, 1, 0])
            .add(&mono(&[-1, -1, 0, 1]))
            .add(&mono(&[0, -1, 0, 0]));
        assert_eq!(cc_decorated(&c, &i1).unwrap(), expected);
        let s1 = DecoratedRep::undecorated(Representation::simple(q, 0));
        let x_a1 = mono(&[-1, 1, 1, 0]).add(&mono(&[-1, 0, 0, 1]));
        assert_eq!(cc_decorated(&c, &s1).unwrap(), x_a1);
    }

    #[test]
    fn cc_copres_examples() {
        let c = cat("A2", "0,1");
        assert_eq!(cc_copres(&c, &Copresentation::single(CopresClass::Nu(0))).unwrap(), mono(&[0, 0, 1, 0]));
        let a1 = Copresentation::single(CopresClass::Root(dv(&[1, 0])));
        let x_a1 = mono(&[-1, 1, 1, 0]).add(&mono(&[-1, 0, 0, 1]));
        assert_eq!(cc_copres(&c, &a1).unwrap(), x_a1);
        let both = a1.union(&Copresentation::single(CopresClass::Nu(1)));
        assert_eq!(cc_copres(&c, &both).unwrap(), x_a1.mul(&mono(&[0, 0, 0, 1])));
        assert_eq!(cc_copres(&c, &Copresentation::empty()).unwrap(), LaurentPolynomial::one(4));
    }
}
