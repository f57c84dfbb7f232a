//! E-invariants of copresentations and decorated representations, and the
//! pole orders `o(w, w')` and `d(w, w')` predicted from them.

use std::fmt;

use serde::Serialize;

use crate::catalog::Catalog;
use crate::copres::{generic_copresentation, realize, ConcreteCopres, Copresentation};
use crate::error::Result;
use crate::quiver::{DimVector, Quiver, WVector};
use crate::rep::{ext_dim, hom_dim, socle, Representation};

/// The dimension of an E-invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct EValue(pub usize);

impl EValue {
    pub fn dim(self) -> usize {
        self.0
    }
}

impl std::ops::Add for EValue {
    type Output = EValue;

    fn add(self, rhs: EValue) -> EValue {
        EValue(self.0 + rhs.0)
    }
}

impl fmt::Display for EValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A representation `M` together with a decoration `V` (one space per vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedRep {
    pub module: Representation,
    pub decoration: DimVector,
}

impl DecoratedRep {
    pub fn new(module: Representation, decoration: DimVector) -> Self {
        assert_eq!(module.dims().len(), decoration.len(), "decoration must have one entry per vertex");
        Self { module, decoration }
    }

    pub fn undecorated(module: Representation) -> Self {
        let n = module.dims().len();
        Self::new(module, DimVector::zero(n))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.module.direct_sum(&other.module), self.decoration.add(&other.decoration))
    }
}

/// `E(φ, ψ)` from the pairwise table, extended bilinearly.
pub fn e_copres(cat: &Catalog, phi: &Copresentation, psi: &Copresentation) -> EValue {
    let mut total = 0usize;
    for (a, ka) in phi.iter() {
        let ia = cat.class_index(a).expect("catalog class");
        for (b, kb) in psi.iter() {
            let ib = cat.class_index(b).expect("catalog class");
            total += cat.e_table(ia, ib) * (ka * kb) as usize;
        }
    }
    EValue(total)
}

/// `dim Ext^1(Ker φ, Ker ψ) + dim Hom(Ker φ, Coker ψ)` on the concrete realizations.
pub fn e_copres_concrete(cat: &Catalog, phi: &Copresentation, psi: &Copresentation) -> Result<EValue> {
    let q = cat.quiver();
    let (rp, rq) = (realize(cat, phi), realize(cat, psi));
    let (kp, kq, cq) = (rp.kernel(q), rq.kernel(q), rq.cokernel(q));
    Ok(EValue(ext_dim(q, &kp, &kq)? + hom_dim(q, &kp, &cq)?))
}

/// `dim Ext^1(M, M') + Σ_i dim M_i · dim V'_i`.
pub fn e_decorated(q: &Quiver, m: &DecoratedRep, m2: &DecoratedRep) -> Result<EValue> {
    let ext = ext_dim(q, &m.module, &m2.module)?;
    let pair: i64 = m
        .module
        .dims()
        .entries()
        .iter()
        .zip(m2.decoration.entries())
        .map(|(a, b)| a * b)
        .sum();
    Ok(EValue(ext + pair as usize))
}

/// `(Ker ψ, c)` with `c_i = dim Hom(S_i, Coker ψ)`.
pub fn decorated_of_concrete(q: &Quiver, psi: &ConcreteCopres) -> DecoratedRep {
    let coker = psi.cokernel(q);
    DecoratedRep::new(psi.kernel(q), socle(q, &coker))
}

pub fn decorated_of_copres(cat: &Catalog, phi: &Copresentation) -> DecoratedRep {
    decorated_of_concrete(cat.quiver(), &realize(cat, phi))
}

/// `o(w, w') = dim E(φ_ξ(w), φ_ξ(w'))`.
pub fn pole_order(cat: &Catalog, w: &WVector, w2: &WVector) -> Result<EValue> {
    Ok(e_copres(
        cat,
        &generic_copresentation(cat, w)?,
        &generic_copresentation(cat, w2)?,
    ))
}

/// `d(w, w') = o(w, w') + o(w', w)`.
pub fn d_invariant(cat: &Catalog, w: &WVector, w2: &WVector) -> Result<EValue> {
    Ok(pole_order(cat, w, w2)? + pole_order(cat, w2, w)?)
}

/// `dim X(w) - rank f_ψ`, the codimension of the orbit of ψ.
pub fn self_e_orbit(q: &Quiver, psi: &ConcreteCopres) -> EValue {
    EValue(psi.hom_space_dim(q) - psi.orbit_dim(q))
}
