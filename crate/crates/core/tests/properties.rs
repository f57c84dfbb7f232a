use std::sync::OnceLock;

use proptest::prelude::*;

use einv::catalog::Catalog;
use einv::character::cc_decorated;
use einv::copres::{
    copres_w_vector, decompose_copres, generic_copresentation, realize, sample_generic_oracle, CopresClass,
    Copresentation,
};
use einv::einvariant::{d_invariant, e_copres, e_copres_concrete, pole_order, self_e_orbit, DecoratedRep};
use einv::harness::{suite_oracle, suite_three_method};
use einv::linalg::{q as rat, Matrix};
use einv::par::Exec;
use einv::quiver::{build_quiver, DimVector, Quiver, WVector};
use einv::rep::Representation;

fn a3() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| {
        let q = build_quiver("A3".parse().unwrap(), "1,2,3".parse().unwrap()).unwrap();
        Catalog::new(&q, Exec::Sequential).unwrap()
    })
}

fn d4() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| {
        let q = build_quiver("D4".parse().unwrap(), "1,0,1,1".parse().unwrap()).unwrap();
        Catalog::new(&q, Exec::Sequential).unwrap()
    })
}

fn w_strategy(n: usize, max: i64) -> impl Strategy<Value = WVector> {
    proptest::collection::vec(0..=max, 2 * n).prop_map(|v| WVector::from_flat(&v))
}

/// Unit upper triangular matrix with small entries, hence invertible over the integers.
fn unitriangular(d: usize, entries: &[i64]) -> Matrix {
    Matrix::from_fn(d, d, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => rat(1),
        std::cmp::Ordering::Less => rat(entries[(r * d + c) % entries.len()]),
        std::cmp::Ordering::Greater => rat(0),
    })
}

/// `M` with every vertex space changed by a unitriangular basis change.
fn twist(q: &Quiver, m: &Representation, entries: &[i64]) -> Representation {
    let p: Vec<Matrix> = (0..q.rank()).map(|i| unitriangular(m.dims().get(i), entries)).collect();
    let maps = q
        .arrows()
        .iter()
        .zip(m.maps())
        .map(|(&(s, t), a)| p[t].mul(a).mul(&p[s].inverse().unwrap()))
        .collect();
    Representation::new(q, m.dims().clone(), maps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn krull_schmidt_multiplicities_are_recovered(
        mult in proptest::collection::vec(0u64..3, 12),
        entries in proptest::collection::vec(-2i64..3, 1..6),
    ) {
        let cat = d4();
        let q = cat.quiver();
        let mut parts = Vec::new();
        for (a, &k) in mult.iter().enumerate() {
            for _ in 0..k {
                parts.push(cat.indecomposable(a).clone());
            }
        }
        let m = twist(q, &Representation::direct_sum_all(q, parts.iter()), &entries);
        let got = cat.decompose_module(&m).unwrap();
        for (a, &k) in mult.iter().enumerate() {
            prop_assert_eq!(got.get(&cat.roots()[a]).copied().unwrap_or(0), k);
        }
    }

    #[test]
    fn generic_copresentation_is_rigid_and_sums_to_w(w in w_strategy(3, 3)) {
        let cat = a3();
        let phi = generic_copresentation(cat, &w).unwrap();
        prop_assert_eq!(copres_w_vector(cat, &phi), w.clone());
        prop_assert_eq!(e_copres(cat, &phi, &phi).dim(), 0);
        prop_assert_eq!(self_e_orbit(cat.quiver(), &realize(cat, &phi)).dim(), 0);
        prop_assert_eq!(d_invariant(cat, &w, &w).unwrap().dim(), 0);
    }

    #[test]
    fn oracle_agrees_on_larger_w(w in w_strategy(3, 3), seed in 0u64..1000) {
        let cat = a3();
        prop_assert_eq!(sample_generic_oracle(cat, &w, seed).unwrap(), generic_copresentation(cat, &w).unwrap());
    }

    #[test]
    fn d_is_symmetric(w in w_strategy(4, 2), v in w_strategy(4, 2)) {
        let cat = d4();
        prop_assert_eq!(d_invariant(cat, &w, &v).unwrap(), d_invariant(cat, &v, &w).unwrap());
        prop_assert_eq!(
            d_invariant(cat, &w, &v).unwrap(),
            pole_order(cat, &w, &v).unwrap() + pole_order(cat, &v, &w).unwrap()
        );
    }

    #[test]
    fn e_is_additive_on_concrete_sums(
        a in proptest::collection::vec(0u64..2, 12),
        b in proptest::collection::vec(0u64..2, 12),
    ) {
        let cat = a3();
        let k = cat.num_classes();
        let pick = |m: &[u64]| Copresentation::from_counts((0..k).map(|c| (cat.class(c).clone(), m[c])));
        let (phi, psi) = (pick(&a), pick(&b));
        let table = e_copres(cat, &phi, &psi);
        prop_assert_eq!(e_copres_concrete(cat, &phi, &psi).unwrap(), table);
        let mut split = 0;
        for (c, m) in phi.iter() {
            split += m as usize * e_copres_concrete(cat, &Copresentation::single(c.clone()), &psi).unwrap().dim();
        }
        prop_assert_eq!(split, table.dim());
    }

    #[test]
    fn decomposition_of_a_twisted_realization(
        m in proptest::collection::vec(0u64..2, 12),
        entries in proptest::collection::vec(-2i64..3, 1..4),
    ) {
        let cat = a3();
        let k = cat.num_classes();
        let phi = Copresentation::from_counts((0..k).map(|c| (cat.class(c).clone(), m[c])));
        let psi = realize(cat, &phi);
        prop_assert_eq!(decompose_copres(cat, &psi).unwrap(), phi.clone());
        // the kernel of a realization is the direct sum of the root summands
        let kernel = psi.kernel(cat.quiver());
        let twisted = twist(cat.quiver(), &kernel, &entries);
        let roots: Vec<(DimVector, u64)> = phi
            .iter()
            .filter_map(|(c, m)| match c {
                CopresClass::Root(a) => Some((a.clone(), m)),
                _ => None,
            })
            .collect();
        let got: Vec<(DimVector, u64)> = cat.decompose_module(&twisted).unwrap().into_iter().collect();
        prop_assert_eq!(got, roots);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn characters_are_multiplicative(a in 0usize..6, b in 0usize..6, c in 0usize..6) {
        let cat = a3();
        let mods = [a, b, c].map(|i| DecoratedRep::undecorated(cat.indecomposable(i).clone()));
        let sum = mods[0].direct_sum(&mods[1]).direct_sum(&mods[2]);
        let product = mods
            .iter()
            .map(|m| cc_decorated(cat, m).unwrap())
            .reduce(|x, y| x.mul(&y))
            .unwrap();
        prop_assert_eq!(cc_decorated(cat, &sum).unwrap(), product);
    }
}

#[test]
fn sequential_and_parallel_reports_match() {
    let q = build_quiver("A3".parse().unwrap(), "0,1,0".parse().unwrap()).unwrap();
    let seq = Catalog::new(&q, Exec::Sequential).unwrap();
    let par = Catalog::new(&q, Exec::Parallel).unwrap();
    let b = WVector::uniform(3, 1);
    for (x, y) in [
        (suite_oracle(&seq, &b, 3), suite_oracle(&par, &b, 3)),
        (suite_three_method(&seq, &b), suite_three_method(&par, &b)),
    ] {
        assert_eq!(serde_json::to_string(&x).unwrap(), serde_json::to_string(&y).unwrap());
    }
}
