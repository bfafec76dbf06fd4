//! Equipped quantum spaces `(V, {Rₙ})` and their monoidal structure.
//!
//! A structure map `Rₙ` is an endomorphism of `V^{⊗n}`; its image generates
//! the degree-`n` relations of the associated graded algebra. Degrees that are
//! not stored carry the zero map.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::report::{VerificationReport, Witness};
use crate::tensor::phi_permutation;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquippedSpace {
    dim: usize,
    structure: BTreeMap<usize, Matrix>,
}

impl EquippedSpace {
    /// Validates shapes and drops zero structure maps.
    ///
    /// Degree 0 is rejected, and a degree-1 map must be zero.
    pub fn new(dim: usize, structure: BTreeMap<usize, Matrix>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidStructure("dimension must be at least 1".into()));
        }
        let mut kept = BTreeMap::new();
        for (degree, m) in structure {
            let size = dim
                .checked_pow(degree as u32)
                .ok_or_else(|| Error::InvalidStructure(format!("degree {degree} too large")))?;
            if degree == 0 {
                return Err(Error::InvalidStructure("degree 0 structure".into()));
            }
            if m.rows() != size || m.cols() != size {
                return Err(Error::InvalidStructure(format!(
                    "degree {degree} structure is {}x{}, expected {size}x{size}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.is_zero() {
                continue;
            }
            if degree == 1 {
                return Err(Error::InvalidStructure(
                    "degree 1 structure must be zero".into(),
                ));
            }
            kept.insert(degree, m);
        }
        Ok(EquippedSpace {
            dim,
            structure: kept,
        })
    }

    /// A space with a single structure map in degree `degree`.
    pub fn with_structure(dim: usize, degree: usize, m: Matrix) -> Result<Self> {
        Self::new(dim, BTreeMap::from([(degree, m)]))
    }

    /// `V` with the zero structure.
    pub fn trivial(dim: usize) -> Result<Self> {
        Self::new(dim, BTreeMap::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure maps by degree.
    pub fn structures(&self) -> &BTreeMap<usize, Matrix> {
        &self.structure
    }

    /// The degree-`n` structure map, zero if absent.
    pub fn structure(&self, n: usize) -> Cow<'_, Matrix> {
        match self.structure.get(&n) {
            Some(m) => Cow::Borrowed(m),
            None => {
                let size = self.dim.pow(n as u32);
                Cow::Owned(Matrix::zeros(size, size))
            }
        }
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.structure.keys().copied().collect()
    }

    /// Support contained in `{2}`.
    pub fn is_quadratic(&self) -> bool {
        self.structure.keys().all(|&n| n == 2)
    }

    /// Support contained in `{m}`.
    pub fn is_pure_degree(&self, m: usize) -> bool {
        self.structure.keys().all(|&n| n == m)
    }

    /// Whether the degree-2 structure satisfies the braid relation
    /// `R₁₂R₂₃R₁₂ = R₂₃R₁₂R₂₃`. Diagnostic only; nothing here requires it.
    pub fn satisfies_braid_relation(&self) -> bool {
        let r = self.structure(2);
        let id = Matrix::identity(self.dim);
        let r12 = r.kronecker(&id);
        let r23 = id.kronecker(&r);
        &(&r12 * &r23) * &r12 == &(&r23 * &r12) * &r23
    }
}

/// The unit object: the ground field with the zero structure.
pub fn unit_k() -> EquippedSpace {
    EquippedSpace {
        dim: 1,
        structure: BTreeMap::new(),
    }
}

/// `(V,R) ⊠ (W,S)`: per degree, `φ⁻¹ (Rₙ⊗I + I⊗Sₙ) φ` on `(V⊗W)^{⊗n}`.
pub fn boxtimes(v: &EquippedSpace, w: &EquippedSpace) -> EquippedSpace {
    let degrees: BTreeSet<usize> = v.support().union(&w.support()).copied().collect();
    let mut structure = BTreeMap::new();
    for n in degrees {
        let r = v.structure(n);
        let s = w.structure(n);
        let iv = Matrix::identity(r.rows());
        let iw = Matrix::identity(s.rows());
        let sum = &r.kronecker(&iw) + &iv.kronecker(&s);
        // φ⁻¹ M φ is conjugation by the inverse permutation
        let m = phi_permutation(v.dim, w.dim, n).inverse().conjugate(&sum);
        structure.insert(n, m);
    }
    EquippedSpace::new(v.dim * w.dim, structure).expect("product of valid spaces is valid")
}

/// `(V,R)† = (V*, −Rᵀ)`.
pub fn dagger(v: &EquippedSpace) -> EquippedSpace {
    EquippedSpace {
        dim: v.dim,
        structure: v
            .structure
            .iter()
            .map(|(&n, m)| (n, -&m.transpose()))
            .collect(),
    }
}

/// Internal coHom object `hom[W,V] = W†⊠V`.
///
/// Generator `t_i^j = w^j ⊗ v_i` sits at flat index `j·dim V + i`.
pub fn hom_space(w: &EquippedSpace, v: &EquippedSpace) -> EquippedSpace {
    boxtimes(&dagger(w), v)
}

/// Flat generator index of `t_i^j` in `hom[W,V]`.
pub fn generator_index(i: usize, j: usize, dim_v: usize) -> usize {
    j * dim_v + i
}

/// Checks `l^{⊗n} Rₙ = Sₙ l^{⊗n}` for every degree in either support.
pub fn check_morphism(
    l: &Matrix,
    v: &EquippedSpace,
    w: &EquippedSpace,
) -> Result<VerificationReport> {
    if l.rows() != w.dim || l.cols() != v.dim {
        return Err(Error::Shape(format!(
            "map is {}x{}, expected {}x{}",
            l.rows(),
            l.cols(),
            w.dim,
            v.dim
        )));
    }
    let name = "structure_morphism";
    for n in v.support().union(&w.support()) {
        let ln = l.kronecker_power(*n);
        let defect = &(&ln * &v.structure(*n)) - &(&*w.structure(*n) * &ln);
        if let Some(c) = (0..defect.cols()).find(|&c| (0..defect.rows()).any(|r| !defect.get(r, c).is_zero())) {
            return Ok(VerificationReport::failed(
                name,
                Witness::Vector {
                    degree: *n,
                    column: Some(c),
                    vector: defect.column(c),
                },
            ));
        }
    }
    Ok(VerificationReport::passed(name))
}

/// A linear map that intertwines the structures of its endpoints. The
/// constructor runs [`check_morphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMorphism {
    source: EquippedSpace,
    target: EquippedSpace,
    map: Matrix,
}

impl LinearMorphism {
    pub fn new(source: EquippedSpace, target: EquippedSpace, map: Matrix) -> Result<Self> {
        let report = check_morphism(&map, &source, &target)?;
        if !report.pass {
            return Err(Error::NotAMorphism(Box::new(report)));
        }
        Ok(LinearMorphism {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &EquippedSpace {
        &self.source
    }

    pub fn target(&self) -> &EquippedSpace {
        &self.target
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }
}

/// Evaluation `V†⊠V → K`, the pairing `vⁱ⊗v_j ↦ δⁱ_j`.
pub fn ev_map(v: &EquippedSpace) -> Result<LinearMorphism> {
    LinearMorphism::new(boxtimes(&dagger(v), v), unit_k(), pairing_row(v.dim))
}

/// Coevaluation `K → V⊠V†`, `1 ↦ Σᵢ vᵢ⊗vⁱ`.
pub fn coev_map(v: &EquippedSpace) -> Result<LinearMorphism> {
    LinearMorphism::new(unit_k(), boxtimes(v, &dagger(v)), pairing_row(v.dim).transpose())
}

fn pairing_row(d: usize) -> Matrix {
    let mut m = Matrix::zeros(1, d * d);
    for i in 0..d {
        m.set(0, i * d + i, Rational::one());
    }
    m
}

/// `Σ_R v_R ⊗ v^R` in `V^{⊗n} ⊗ V*^{⊗n}` coordinates (multi-index major).
pub fn coev_tensor_power(d: usize, n: usize) -> Vec<Rational> {
    let size = d.pow(n as u32);
    let mut v = vec![Rational::zero(); size * size];
    for r in 0..size {
        v[r * size + r] = Rational::one();
    }
    v
}

/// The degree-wise rigidity identity `(Rₙ⊗I − I⊗Rₙᵀ)·Σ_R v_R⊗v^R = 0`.
pub fn check_coev_identity(v: &EquippedSpace) -> VerificationReport {
    let name = "coev_identity";
    for (&n, r) in v.structures() {
        let id = Matrix::identity(r.rows());
        let op = &r.kronecker(&id) - &id.kronecker(&r.transpose());
        let out = op.apply(&coev_tensor_power(v.dim, n));
        if out.iter().any(|x| !x.is_zero()) {
            return VerificationReport::failed(
                name,
                Witness::Vector {
                    degree: n,
                    column: None,
                    vector: out,
                },
            );
        }
    }
    VerificationReport::passed(name)
}

/// Both triangle identities for the pairing on `V`:
/// `(ev⊗I)(I⊗coev) = I_{V*}` and `(I⊗ev)(coev⊗I) = I_V`.
pub fn check_snake_identities(v: &EquippedSpace) -> VerificationReport {
    let d = v.dim;
    let ev = pairing_row(d);
    let coev = ev.transpose();
    let id = Matrix::identity(d);
    let left = &ev.kronecker(&id) * &id.kronecker(&coev);
    let right = &id.kronecker(&ev) * &coev.kronecker(&id);
    if left != id {
        return VerificationReport::failed(
            "snake_identities",
            Witness::Vector {
                degree: 1,
                column: None,
                vector: left.entries().to_vec(),
            },
        );
    }
    if right != id {
        return VerificationReport::failed(
            "snake_identities",
            Witness::Vector {
                degree: 1,
                column: None,
                vector: right.entries().to_vec(),
            },
        );
    }
    VerificationReport::passed("snake_identities")
}

/// All rigidity checks for one space: ev and coev are morphisms, the
/// coevaluation identity holds per degree, and the triangle identities hold.
pub fn rigidity_reports(v: &EquippedSpace) -> Vec<VerificationReport> {
    let morphism_report = |name: &str, res: Result<LinearMorphism>| match res {
        Ok(_) => VerificationReport::passed(name),
        Err(Error::NotAMorphism(r)) => (*r).renamed(name),
        Err(e) => panic!("unexpected error building {name}: {e}"),
    };
    vec![
        morphism_report("ev_morphism", ev_map(v)),
        morphism_report("coev_morphism", coev_map(v)),
        check_coev_identity(v),
        check_snake_identities(v),
    ]
}
