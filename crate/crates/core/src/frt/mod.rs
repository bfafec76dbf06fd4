//! Rectangular quantum matrix algebras `A(R:S)` as internal coHom objects.
//!
//! For equipped spaces `(V,R)` and `(W,S)` the generators are
//! `t_i^j = w^j ⊗ v_i` at flat index `j·dim V + i` (the `hom[W,V] = W†⊠V`
//! convention from [`crate::space::hom_space`]). Relation spans are computed
//! twice, from the explicit formula and from the `⊠`/`†` pipeline, and the
//! bialgebra structure maps are checked against them.

mod manin;
mod symbolic;

pub use manin::{check_manin_epi, manin_hom_algebra, manin_hom_relations};
pub use symbolic::{
    check_coassociativity, check_counit_laws, coaction_coordinates, counit_on_leg, counit_word,
    Alphabet, Comultiplication, GeneratorSymbol, LegTensor, TensorLegElement, Word,
};

use crate::error::{Error, Result};
use crate::linalg::{column_space, Rational, Subspace};
use crate::report::{VerificationReport, Witness};
use crate::space::{hom_space, EquippedSpace};
use crate::tensor::{decode_digits, encode_digits};

/// The generating vectors
/// `Σ_K R^{K}_{I} t_K^N − Σ_K t_I^K S^{N}_{K}` of the degree-`m` relations of
/// `A(R:S)`, one per `(I, N)` in lexicographic order, where `R = Rₘ` acts on
/// columns (`R(v_I) = Σ_K R[K,I] v_K`) and `t_K^N = t_{k₁}^{n₁}⋯t_{kₘ}^{nₘ}`.
pub fn frt_generating_vectors(
    v: &EquippedSpace,
    w: &EquippedSpace,
    m: usize,
) -> Vec<Vec<Rational>> {
    let (dv, dw) = (v.dim(), w.dim());
    let g = dv * dw;
    let r = v.structure(m);
    let s = w.structure(m);
    let vm = dv.pow(m as u32);
    let wm = dw.pow(m as u32);
    let word = |primal: &[usize], dual: &[usize]| -> usize {
        let gens: Vec<usize> = primal
            .iter()
            .zip(dual)
            .map(|(&i, &j)| j * dv + i)
            .collect();
        encode_digits(g, &gens)
    };
    let mut out = Vec::with_capacity(vm * wm);
    for i_flat in 0..vm {
        let big_i = decode_digits(dv, m, i_flat);
        for n_flat in 0..wm {
            let big_n = decode_digits(dw, m, n_flat);
            let mut vec = vec![Rational::zero(); g.pow(m as u32)];
            for k_flat in 0..vm {
                let c = r.get(k_flat, i_flat);
                if !c.is_zero() {
                    vec[word(&decode_digits(dv, m, k_flat), &big_n)] += c;
                }
            }
            for k_flat in 0..wm {
                let c = s.get(n_flat, k_flat);
                if !c.is_zero() {
                    vec[word(&big_i, &decode_digits(dw, m, k_flat))] -= c;
                }
            }
            out.push(vec);
        }
    }
    out
}

/// Relation span of `A(R:S)` from the explicit formula; both spaces must be
/// quadratic.
pub fn frt_relations(v: &EquippedSpace, w: &EquippedSpace) -> Result<Subspace> {
    if !v.is_quadratic() || !w.is_quadratic() {
        return Err(Error::Unsupported(
            "non-quadratic structure; use frt_relations_conic".into(),
        ));
    }
    frt_span(v, w, 2)
}

/// Degree-`m` relation span of the conic rectangular algebra; both spaces
/// must have support inside `{m}`.
pub fn frt_relations_conic(v: &EquippedSpace, w: &EquippedSpace, m: usize) -> Result<Subspace> {
    if m < 2 {
        return Err(Error::Unsupported(format!("relation degree {m} is below 2")));
    }
    if !v.is_pure_degree(m) || !w.is_pure_degree(m) {
        return Err(Error::Unsupported(format!(
            "mixed supports: {:?} and {:?}, expected only degree {m}",
            v.support(),
            w.support()
        )));
    }
    frt_span(v, w, m)
}

fn frt_span(v: &EquippedSpace, w: &EquippedSpace, m: usize) -> Result<Subspace> {
    let g = v.dim() * w.dim();
    Subspace::span(g.pow(m as u32), frt_generating_vectors(v, w, m))
}

/// Compares the image of `(S†⊠R)ₘ` with the explicit relation span.
pub fn verify_hom_equals_frt(v: &EquippedSpace, w: &EquippedSpace) -> Result<VerificationReport> {
    let explicit = frt_relations(v, w)?;
    Ok(compare_spans("hom_equals_frt", v, w, 2, explicit))
}

/// Degree-`m` version of [`verify_hom_equals_frt`].
pub fn verify_hom_equals_frt_conic(
    v: &EquippedSpace,
    w: &EquippedSpace,
    m: usize,
) -> Result<VerificationReport> {
    let explicit = frt_relations_conic(v, w, m)?;
    Ok(compare_spans("hom_equals_frt_conic", v, w, m, explicit))
}

fn compare_spans(
    name: &str,
    v: &EquippedSpace,
    w: &EquippedSpace,
    m: usize,
    explicit: Subspace,
) -> VerificationReport {
    let pipeline = column_space(&hom_space(w, v).structure(m));
    let witness = if pipeline == explicit {
        None
    } else if let Some(vector) = explicit.first_outside(&pipeline).expect("same ambient") {
        Some(Witness::Vector {
            degree: m,
            column: None,
            vector,
        })
    } else if let Some(vector) = pipeline.first_outside(&explicit).expect("same ambient") {
        Some(Witness::Vector {
            degree: m,
            column: None,
            vector,
        })
    } else {
        Some(Witness::Dimensions {
            left: pipeline.dim(),
            right: explicit.dim(),
        })
    };
    VerificationReport::from_witness(name, witness)
        .with_dimension("pipeline", pipeline.dim())
        .with_dimension("explicit", explicit.dim())
}

/// Well-definedness of `Δ: A(R:S) → A(R:T) ⊗ A(T:S)`: the image of every
/// degree-2 relation of `A(R:S)` must lie in
/// `rel(R:T) ⊗ (all words) + (all words) ⊗ rel(T:S)` in bidegree `(2,2)`.
pub fn check_comult_well_defined(
    v: &EquippedSpace,
    w: &EquippedSpace,
    mid: &EquippedSpace,
) -> Result<VerificationReport> {
    let name = "comultiplication_well_defined";
    let rel = frt_relations(v, w)?;
    let rel_left = frt_relations(v, mid)?;
    let rel_right = frt_relations(mid, w)?;
    let delta = Comultiplication::new(v.dim(), w.dim(), mid.dim());
    let (left, right) = (delta.left(), delta.right());
    let left_sq = left.size().pow(2);
    let right_sq = right.size().pow(2);
    let target = rel_left
        .tensor(&Subspace::full(right_sq))
        .sum(&Subspace::full(left_sq).tensor(&rel_right))?;
    for (idx, r) in rel.basis_vectors().iter().enumerate() {
        let element = delta.source().element_from_coords(2, r);
        let image = delta.apply_on_leg(&element, 0);
        let coords = TensorLegElement::from_leg_tensor(&image, left, right, (2, 2))?.coords;
        if !target.contains_vector(&coords)? {
            return Ok(VerificationReport::failed(
                name,
                Witness::Vector {
                    degree: 2,
                    column: Some(idx),
                    vector: target.reduce(&coords)?,
                },
            ));
        }
    }
    Ok(VerificationReport::passed(name)
        .with_dimension("relations", rel.dim())
        .with_dimension("target", target.dim()))
}

/// Evaluates `ε(t_i^j) = δ_i^j` on every generating relation vector of
/// `A(R) = A(R:R)`; each must evaluate to zero.
pub fn counit_check(v: &EquippedSpace) -> Result<VerificationReport> {
    if !v.is_quadratic() {
        return Err(Error::Unsupported("counit check needs a quadratic structure".into()));
    }
    let name = "counit_kills_relations";
    let alphabet = Alphabet::new(v.dim(), v.dim());
    for (idx, r) in frt_generating_vectors(v, v, 2).iter().enumerate() {
        let value: Rational = alphabet
            .element_from_coords(2, r)
            .terms()
            .iter()
            .map(|(key, c)| c * &counit_word(&key[0]))
            .sum();
        if !value.is_zero() {
            return Ok(VerificationReport::failed(
                name,
                Witness::Vector {
                    degree: 2,
                    column: Some(idx),
                    vector: vec![value],
                },
            ));
        }
    }
    Ok(VerificationReport::passed(name))
}

/// Well-definedness of the coaction `δ: UV → U hom[W,V] ∘ UW`,
/// `v_i ↦ Σ_j t_i^j ⊗ w_j`: the image of `Im R` must lie in
/// `rel(R:S) ⊗ W^{⊗2} + (all words) ⊗ Im S`.
pub fn corep_delta_check(v: &EquippedSpace, w: &EquippedSpace) -> Result<VerificationReport> {
    let name = "coaction_well_defined";
    let rel = frt_relations(v, w)?;
    let g2 = (v.dim() * w.dim()).pow(2);
    let w2 = w.dim().pow(2);
    let im_r = column_space(&v.structure(2));
    let im_s = column_space(&w.structure(2));
    let target = rel
        .tensor(&Subspace::full(w2))
        .sum(&Subspace::full(g2).tensor(&im_s))?;
    for (idx, r) in im_r.basis_vectors().iter().enumerate() {
        let coords = coaction_coordinates(v.dim(), w.dim(), 2, r);
        if !target.contains_vector(&coords)? {
            return Ok(VerificationReport::failed(
                name,
                Witness::Vector {
                    degree: 2,
                    column: Some(idx),
                    vector: target.reduce(&coords)?,
                },
            ));
        }
    }
    Ok(VerificationReport::passed(name).with_dimension("image_r", im_r.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::presets::{cubic_example, drinfeld_jimbo, quantum_plane};

    fn qp() -> EquippedSpace {
        quantum_plane(Rational::from(2))
    }

    fn dj() -> EquippedSpace {
        drinfeld_jimbo(Rational::from(2))
    }

    #[test]
    fn zero_structures_give_free_algebra() {
        let t = EquippedSpace::trivial(2).unwrap();
        assert!(frt_relations(&t, &t).unwrap().is_zero());
        assert!(verify_hom_equals_frt(&t, &t).unwrap().pass);
    }

    #[test]
    fn relation_dimensions() {
        assert_eq!(frt_relations(&qp(), &qp()).unwrap().dim(), 6);
        let rel = frt_relations(&dj(), &dj()).unwrap();
        assert_eq!(rel.dim(), 6);
        let a = crate::algebra::PresentedAlgebra::new(4, [(2, rel)].into()).unwrap();
        assert_eq!(a.hilbert(3), vec![1, 4, 10, 20]);
    }

    #[test]
    fn drinfeld_jimbo_relations_are_the_quantum_matrix_relations() {
        // a=t_0^0, c=t_1^0, b=t_0^1, d=t_1^1 at flat index j·2+i
        let (a, c, b, d) = (0usize, 1, 2, 3);
        let q = Rational::from(2);
        let vec_of = |terms: &[((usize, usize), Rational)]| {
            let mut v = vec![Rational::zero(); 16];
            for ((x, y), coeff) in terms {
                v[x * 4 + y] += coeff;
            }
            v
        };
        let one = Rational::one;
        let minus_q = -q.clone();
        let q_diff = -(&q - &q.recip());
        let holds = [
            vec_of(&[((a, b), one()), ((b, a), minus_q.clone())]),
            vec_of(&[((a, c), one()), ((c, a), minus_q.clone())]),
            vec_of(&[((b, d), one()), ((d, b), minus_q.clone())]),
            vec_of(&[((c, d), one()), ((d, c), minus_q.clone())]),
            vec_of(&[((b, c), one()), ((c, b), -one())]),
            vec_of(&[((a, d), one()), ((d, a), -one()), ((b, c), q_diff)]),
        ];
        let rel = frt_relations(&dj(), &dj()).unwrap();
        for x in &holds {
            assert!(rel.contains_vector(x).unwrap());
        }
        assert_eq!(Subspace::span(16, holds).unwrap(), rel);
        let reversed = vec_of(&[((b, a), one()), ((a, b), minus_q)]);
        assert!(!rel.contains_vector(&reversed).unwrap());
    }

    #[test]
    fn hom_equals_frt_instances() {
        for (v, w) in [(qp(), qp()), (dj(), dj()), (qp(), dj()), (dj(), qp())] {
            let r = verify_hom_equals_frt(&v, &w).unwrap();
            assert!(r.pass, "{}", r.summary());
        }
        let r = verify_hom_equals_frt(&qp(), &qp()).unwrap();
        assert_eq!(r.dimensions["explicit"], 6);
    }

    #[test]
    fn rejects_non_quadratic() {
        let c = cubic_example();
        assert!(frt_relations(&c, &c).is_err());
        assert!(frt_relations_conic(&c, &qp(), 3).is_err());
        assert!(frt_relations_conic(&c, &c, 1).is_err());
    }

    #[test]
    fn conic_cubic_instance() {
        let c = cubic_example();
        let span = frt_relations_conic(&c, &c, 3).unwrap();
        // sympy oracle: rank of the 64x64 degree-3 structure of hom[c,c]
        assert_eq!(span.dim(), 14);
        assert!(verify_hom_equals_frt_conic(&c, &c, 3).unwrap().pass);
        assert!(frt_relations_conic(&EquippedSpace::trivial(2).unwrap(), &EquippedSpace::trivial(2).unwrap(), 3).unwrap().is_zero());
        assert_eq!(frt_relations_conic(&qp(), &dj(), 2).unwrap(), frt_relations(&qp(), &dj()).unwrap());
    }

    #[test]
    fn comultiplication_well_defined_instances() {
        let t = EquippedSpace::trivial(2).unwrap();
        assert!(check_comult_well_defined(&t, &t, &t).unwrap().pass);
        assert!(check_comult_well_defined(&qp(), &qp(), &qp()).unwrap().pass);
        let r = check_comult_well_defined(&dj(), &dj(), &dj()).unwrap();
        assert!(r.pass, "{}", r.summary());
        // middle space of a different dimension
        let mid = EquippedSpace::with_structure(3, 2, Matrix::identity(9).scale(&Rational::from(2))).unwrap();
        assert!(check_comult_well_defined(&qp(), &dj(), &mid).unwrap().pass);
    }

    #[test]
    fn counit_instances() {
        assert!(counit_check(&EquippedSpace::trivial(3).unwrap()).unwrap().pass);
        assert!(counit_check(&dj()).unwrap().pass);
        assert!(counit_check(&qp()).unwrap().pass);
        assert!(counit_check(&cubic_example()).is_err());
    }

    #[test]
    fn coaction_instances() {
        let t = EquippedSpace::trivial(2).unwrap();
        assert!(corep_delta_check(&t, &qp()).unwrap().pass);
        let r = corep_delta_check(&qp(), &qp()).unwrap();
        assert!(r.pass, "{}", r.summary());
        assert!(corep_delta_check(&dj(), &qp()).unwrap().pass);
    }

    #[test]
    fn swapped_coaction_fails() {
        // A wrong coaction convention, v_i ↦ Σ_j t_j^i ⊗ w_j, is not compatible
        // with the quantum-plane relations; this guards the index convention.
        let v = qp();
        let rel = frt_relations(&v, &v).unwrap();
        let target = rel
            .tensor(&Subspace::full(4))
            .sum(&Subspace::full(16).tensor(&column_space(&v.structure(2))))
            .unwrap();
        let r = column_space(&v.structure(2)).basis_vectors().remove(0);
        let mut coords = vec![Rational::zero(); 64];
        for (flat, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (i1, i2) = (flat / 2, flat % 2);
            for j1 in 0..2 {
                for j2 in 0..2 {
                    let g1 = i1 * 2 + j1;
                    let g2 = i2 * 2 + j2;
                    coords[(g1 * 4 + g2) * 4 + j1 * 2 + j2] += c;
                }
            }
        }
        assert!(!target.contains_vector(&coords).unwrap());
    }
}
