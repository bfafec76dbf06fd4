//! Graded algebras `T(V)/I`, computed one degree at a time.
//!
//! The degree-`n` component of the ideal is held as a canonical subspace of
//! `V^{⊗n}`; everything else (graded dimensions, normal forms, morphism and
//! epimorphism checks) is linear algebra on those components.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::linalg::{column_space, Matrix, Rational, Subspace};
use crate::report::{VerificationReport, Witness};
use crate::space::{boxtimes, EquippedSpace};
use crate::tensor::{embed_at, encode_digits, phi_permutation};

/// Degree cutoff used when a caller does not pick one.
pub const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Clone, Debug)]
enum IdealSource {
    /// Two-sided ideal generated by homogeneous relation spans.
    Relations(BTreeMap<usize, Subspace>),
    /// Defining ideal of `A∘B ⊆ A⊗B`, expressed on the generators `A₁⊗B₁`.
    Circ(Arc<PresentedAlgebra>, Arc<PresentedAlgebra>),
}

/// A connected graded algebra generated in degree one.
///
/// Ideal components are memoized behind a mutex, so shared references can be
/// used from several threads.
#[derive(Debug)]
pub struct PresentedAlgebra {
    gen_dim: usize,
    source: IdealSource,
    cache: Mutex<BTreeMap<usize, Arc<Subspace>>>,
}

impl Clone for PresentedAlgebra {
    fn clone(&self) -> Self {
        PresentedAlgebra {
            gen_dim: self.gen_dim,
            source: self.source.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache poisoned").clone()),
        }
    }
}

impl PresentedAlgebra {
    /// `T(V)/I[relations]` with `dim V = gen_dim`. Relation degrees must be at
    /// least 2 and each span must live in `V^{⊗m}`; zero spans are dropped.
    pub fn new(gen_dim: usize, relations: BTreeMap<usize, Subspace>) -> Result<Self> {
        if gen_dim == 0 {
            return Err(Error::InvalidStructure("no generators".into()));
        }
        let mut kept = BTreeMap::new();
        for (m, rel) in relations {
            if m < 2 {
                return Err(Error::InvalidStructure(format!(
                    "relation degree {m} is below 2"
                )));
            }
            let expected = gen_dim.pow(m as u32);
            if rel.ambient_dim() != expected {
                return Err(Error::AmbientMismatch {
                    left: expected,
                    right: rel.ambient_dim(),
                });
            }
            if !rel.is_zero() {
                kept.insert(m, rel);
            }
        }
        Ok(Self::from_source(gen_dim, IdealSource::Relations(kept)))
    }

    /// Tensor algebra on `gen_dim` generators.
    pub fn free(gen_dim: usize) -> Result<Self> {
        Self::new(gen_dim, BTreeMap::new())
    }

    /// `𝕜[e]`, the unit for `∘`.
    pub fn unit() -> Self {
        Self::free(1).expect("one generator")
    }

    fn from_source(gen_dim: usize, source: IdealSource) -> Self {
        PresentedAlgebra {
            gen_dim,
            source,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn gen_dim(&self) -> usize {
        self.gen_dim
    }

    /// Generating relation spans, or `None` for a `∘` product, which is only
    /// known degree by degree.
    pub fn relations(&self) -> Option<&BTreeMap<usize, Subspace>> {
        match &self.source {
            IdealSource::Relations(r) => Some(r),
            IdealSource::Circ(..) => None,
        }
    }

    /// Presented with relations in degree 2 only.
    pub fn is_quadratic(&self) -> bool {
        self.relations()
            .map(|r| r.keys().all(|&m| m == 2))
            .unwrap_or(false)
    }

    /// The degree-2 relation span of a quadratic presentation.
    pub fn quadratic_relations(&self) -> Result<Subspace> {
        if !self.is_quadratic() {
            return Err(Error::Unsupported(
                "algebra is not presented by quadratic relations".into(),
            ));
        }
        let d2 = self.gen_dim * self.gen_dim;
        Ok(self
            .relations()
            .and_then(|r| r.get(&2).cloned())
            .unwrap_or_else(|| Subspace::zero(d2)))
    }

    /// Degree-`n` component of the defining ideal, inside `V^{⊗n}`.
    pub fn ideal_component(&self, n: usize) -> Arc<Subspace> {
        if let Some(s) = self.cache.lock().expect("cache poisoned").get(&n) {
            return Arc::clone(s);
        }
        let computed = Arc::new(self.compute_ideal(n));
        let mut cache = self.cache.lock().expect("cache poisoned");
        Arc::clone(cache.entry(n).or_insert(computed))
    }

    fn compute_ideal(&self, n: usize) -> Subspace {
        let d = self.gen_dim;
        let ambient = d.pow(n as u32);
        if n < 2 {
            return Subspace::zero(ambient);
        }
        match &self.source {
            IdealSource::Relations(rels) => {
                // I_n = I_{n-1}⊗V + V⊗I_{n-1} + R_n
                let prev = self.ideal_component(n - 1);
                let v = Subspace::full(d);
                let mut acc = prev.tensor(&v).sum(&v.tensor(&prev)).expect("same ambient");
                if let Some(r) = rels.get(&n) {
                    acc = acc.sum(r).expect("same ambient");
                }
                acc
            }
            IdealSource::Circ(a, b) => {
                let ia = a.ideal_component(n);
                let ib = b.ideal_component(n);
                let full_a = Subspace::full(a.gen_dim.pow(n as u32));
                let full_b = Subspace::full(b.gen_dim.pow(n as u32));
                let split = ia
                    .tensor(&full_b)
                    .sum(&full_a.tensor(&ib))
                    .expect("same ambient");
                let phi_inv = phi_permutation(a.gen_dim, b.gen_dim, n).inverse();
                split.permute(phi_inv.images())
            }
        }
    }

    pub fn graded_dim(&self, n: usize) -> usize {
        self.gen_dim.pow(n as u32) - self.ideal_component(n).dim()
    }

    /// Graded dimensions in degrees `0..=max_degree`.
    pub fn hilbert(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree).map(|n| self.graded_dim(n)).collect()
    }

    /// Basis words of the degree-`n` quotient: the flat indices of `V^{⊗n}`
    /// that are not pivots of the ideal component.
    pub fn normal_words(&self, n: usize) -> Vec<usize> {
        self.ideal_component(n).non_pivots()
    }

    /// Coordinates of `x` modulo the ideal, on the basis [`Self::normal_words`].
    pub fn normal_form(&self, x: &FreeElement) -> Result<Vec<Rational>> {
        let ideal = self.ideal_component(x.degree);
        let residual = ideal.reduce(&x.coords)?;
        Ok(ideal
            .non_pivots()
            .into_iter()
            .map(|i| residual[i].clone())
            .collect())
    }
}

/// An element of the degree-`n` part of the tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl FreeElement {
    pub fn new(gen_dim: usize, degree: usize, coords: Vec<Rational>) -> Result<Self> {
        let expected = gen_dim.pow(degree as u32);
        if coords.len() != expected {
            return Err(Error::AmbientMismatch {
                left: expected,
                right: coords.len(),
            });
        }
        Ok(FreeElement { degree, coords })
    }

    /// The monomial `x_{l₁}⋯x_{lₙ}`.
    pub fn word(gen_dim: usize, letters: &[usize]) -> Self {
        let n = letters.len();
        let mut coords = vec![Rational::zero(); gen_dim.pow(n as u32)];
        coords[encode_digits(gen_dim, letters)] = Rational::one();
        FreeElement { degree: n, coords }
    }
}

/// The functor `U`: `(V, {Rₘ}) ↦ T(V)/I[Im Rₘ]`.
pub fn apply_u(v: &EquippedSpace) -> PresentedAlgebra {
    let relations = v
        .structures()
        .iter()
        .map(|(&m, r)| (m, column_space(r)))
        .collect();
    PresentedAlgebra::new(v.dim(), relations).expect("structure degrees are at least 2")
}

pub fn ideal_component(a: &PresentedAlgebra, n: usize) -> Arc<Subspace> {
    a.ideal_component(n)
}

pub fn graded_dim(a: &PresentedAlgebra, n: usize) -> usize {
    a.graded_dim(n)
}

pub fn hilbert(a: &PresentedAlgebra, max_degree: usize) -> Vec<usize> {
    a.hilbert(max_degree)
}

pub fn normal_form(a: &PresentedAlgebra, x: &FreeElement) -> Result<Vec<Rational>> {
    a.normal_form(x)
}

/// `A∘B`, the subalgebra of `A⊗B` generated by `A₁⊗B₁`.
pub fn circ_product(a: &PresentedAlgebra, b: &PresentedAlgebra) -> PresentedAlgebra {
    PresentedAlgebra::from_source(
        a.gen_dim * b.gen_dim,
        IdealSource::Circ(Arc::new(a.clone()), Arc::new(b.clone())),
    )
}

/// The epimorphism `U(V⊠W) ↠ UV∘UW`: in every degree up to `max_degree` the
/// ideal of `U(V⊠W)` must lie inside the ideal of `UV∘UW`, both written on
/// the generators `V⊗W`.
pub fn check_u_epi(v: &EquippedSpace, w: &EquippedSpace, max_degree: usize) -> VerificationReport {
    let name = "u_epimorphism";
    let product = apply_u(&boxtimes(v, w));
    let circ = circ_product(&apply_u(v), &apply_u(w));
    for n in 0..=max_degree {
        let inner = product.ideal_component(n);
        let outer = circ.ideal_component(n);
        if let Some(vector) = outer.first_outside(&inner).expect("same ambient") {
            return VerificationReport::failed(
                name,
                Witness::Vector {
                    degree: n,
                    column: None,
                    vector,
                },
            );
        }
    }
    VerificationReport::passed(name)
        .with_dimension("graded_dim_product", product.graded_dim(max_degree))
        .with_dimension("graded_dim_circ", circ.graded_dim(max_degree))
}

/// Idempotent `P` with image `rel`, split along the non-pivot coordinates:
/// `P = C·E` where the columns of `C` are the canonical basis of `rel` and `E`
/// reads off the pivot coordinates.
pub fn structure_projector(rel: &Subspace) -> Matrix {
    let n = rel.ambient_dim();
    let mut p = Matrix::zeros(n, n);
    for (basis_vec, pivot) in rel.basis_vectors().iter().zip(rel.pivots()) {
        for (row, x) in basis_vec.iter().enumerate() {
            if !x.is_zero() {
                p.set(row, pivot, x.clone());
            }
        }
    }
    p
}

/// Whether `l` on generators extends to an algebra map `A → B`: the image of
/// every relation span of `A` under `l^{⊗m}` must lie in `I_B` in degree `m`.
pub fn check_algebra_morphism(
    l: &Matrix,
    a: &PresentedAlgebra,
    b: &PresentedAlgebra,
) -> Result<VerificationReport> {
    if l.rows() != b.gen_dim || l.cols() != a.gen_dim {
        return Err(Error::Shape(format!(
            "map is {}x{}, expected {}x{}",
            l.rows(),
            l.cols(),
            b.gen_dim,
            a.gen_dim
        )));
    }
    let relations = a.relations().ok_or_else(|| {
        Error::Unsupported("source algebra has no finite relation list".into())
    })?;
    let name = "algebra_morphism";
    for (&m, rel) in relations {
        let lm = l.kronecker_power(m);
        let image = rel.image(&lm)?;
        if let Some(vector) = b.ideal_component(m).first_outside(&image)? {
            return Ok(VerificationReport::failed(
                name,
                Witness::Vector {
                    degree: m,
                    column: None,
                    vector,
                },
            ));
        }
    }
    Ok(VerificationReport::passed(name))
}

/// Convenience: sum of every positional embedding of every relation span in
/// degree `n`. Same subspace as [`PresentedAlgebra::ideal_component`] for
/// presented algebras, computed without the degree recursion.
pub fn ideal_component_direct(a: &PresentedAlgebra, n: usize) -> Result<Subspace> {
    let d = a.gen_dim;
    let relations = a
        .relations()
        .ok_or_else(|| Error::Unsupported("no finite relation list".into()))?;
    let mut acc = Subspace::zero(d.pow(n as u32));
    for (&m, rel) in relations.range(..=n) {
        for pos in 0..=(n - m) {
            acc = acc.sum(&embed_at(rel, n, pos, d)?)?;
        }
    }
    Ok(acc)
}
