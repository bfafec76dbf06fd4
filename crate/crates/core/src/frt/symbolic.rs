//! Symbolic elements of tensor products of free algebras on matrix symbols,
//! and the comultiplication / counit / coaction assignments on them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::report::{VerificationReport, Witness};
use crate::tensor::encode_digits;

/// The symbol `t_i^j` of a rectangular algebra: `i` is the primal index
/// (`< dim V`), `j` the dual index (`< dim W`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol {
    pub i: usize,
    pub j: usize,
}

impl GeneratorSymbol {
    pub fn new(i: usize, j: usize) -> Self {
        GeneratorSymbol { i, j }
    }

    /// Flat index `j·dim_v + i`, the generator order of `hom[W,V]`.
    pub fn flat(&self, dim_v: usize) -> usize {
        self.j * dim_v + self.i
    }

    pub fn from_flat(flat: usize, dim_v: usize) -> Self {
        GeneratorSymbol {
            i: flat % dim_v,
            j: flat / dim_v,
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t_{}^{}", self.i, self.j)
    }
}

pub type Word = Vec<GeneratorSymbol>;

/// Shape of a generator alphabet `{t_i^j : i < dim_v, j < dim_w}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub dim_v: usize,
    pub dim_w: usize,
}

impl Alphabet {
    pub fn new(dim_v: usize, dim_w: usize) -> Self {
        Alphabet { dim_v, dim_w }
    }

    pub fn size(&self) -> usize {
        self.dim_v * self.dim_w
    }

    pub fn symbols(&self) -> impl Iterator<Item = GeneratorSymbol> + '_ {
        (0..self.size()).map(|g| GeneratorSymbol::from_flat(g, self.dim_v))
    }

    /// All words of length `n`, in flat-index order.
    pub fn words(&self, n: usize) -> Vec<Word> {
        let g = self.size();
        (0..g.pow(n as u32))
            .map(|flat| {
                crate::tensor::decode_digits(g, n, flat)
                    .into_iter()
                    .map(|x| GeneratorSymbol::from_flat(x, self.dim_v))
                    .collect()
            })
            .collect()
    }

    fn word_index(&self, word: &[GeneratorSymbol]) -> Result<usize> {
        let mut digits = Vec::with_capacity(word.len());
        for s in word {
            if s.i >= self.dim_v || s.j >= self.dim_w {
                return Err(Error::OutOfRange(format!(
                    "{s} outside alphabet {}x{}",
                    self.dim_v, self.dim_w
                )));
            }
            digits.push(s.flat(self.dim_v));
        }
        Ok(encode_digits(self.size(), &digits))
    }

    /// Element of the free algebra with coordinates `coords` in degree `n`.
    pub fn element_from_coords(&self, n: usize, coords: &[Rational]) -> LegTensor {
        let mut out = LegTensor::zero(1);
        for (flat, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let word: Word = crate::tensor::decode_digits(self.size(), n, flat)
                .into_iter()
                .map(|x| GeneratorSymbol::from_flat(x, self.dim_v))
                .collect();
            out.add_term(vec![word], c.clone());
        }
        out
    }
}

/// A finite linear combination of tensor products `w₁ ⊗ … ⊗ w_k` of words,
/// one word per leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegTensor {
    legs: usize,
    terms: BTreeMap<Vec<Word>, Rational>,
}

impl LegTensor {
    pub fn zero(legs: usize) -> Self {
        LegTensor {
            legs,
            terms: BTreeMap::new(),
        }
    }

    /// The scalar `1` with `legs` empty words.
    pub fn one(legs: usize) -> Self {
        let mut t = LegTensor::zero(legs);
        t.add_term(vec![Vec::new(); legs], Rational::one());
        t
    }

    pub fn generator(s: GeneratorSymbol) -> Self {
        let mut t = LegTensor::zero(1);
        t.add_term(vec![vec![s]], Rational::one());
        t
    }

    pub fn word(w: Word) -> Self {
        let mut t = LegTensor::zero(1);
        t.add_term(vec![w], Rational::one());
        t
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<Word>, coeff: Rational) {
        assert_eq!(key.len(), self.legs, "leg count mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LegTensor) -> LegTensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LegTensor {
        let mut out = LegTensor::zero(self.legs);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, other: &LegTensor) -> LegTensor {
        self.add(&other.scale(&Rational::from(-1)))
    }

    /// Product in the tensor product of free algebras: legwise concatenation.
    pub fn mul(&self, other: &LegTensor) -> LegTensor {
        assert_eq!(self.legs, other.legs, "leg count mismatch");
        let mut out = LegTensor::zero(self.legs);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = ka
                    .iter()
                    .zip(kb)
                    .map(|(a, b)| a.iter().chain(b).copied().collect())
                    .collect();
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    /// Replaces leg `leg` by the legs of `f(word)`, which must return a tensor
    /// with a fixed number of legs for every word.
    pub fn map_leg<F>(&self, leg: usize, out_legs: usize, f: F) -> LegTensor
    where
        F: Fn(&Word) -> LegTensor,
    {
        assert!(leg < self.legs);
        let mut out = LegTensor::zero(self.legs - 1 + out_legs);
        for (key, c) in &self.terms {
            let image = f(&key[leg]);
            assert_eq!(image.legs, out_legs);
            for (ikey, ic) in &image.terms {
                let mut new_key = Vec::with_capacity(out.legs);
                new_key.extend_from_slice(&key[..leg]);
                new_key.extend(ikey.iter().cloned());
                new_key.extend_from_slice(&key[leg + 1..]);
                out.add_term(new_key, c * ic);
            }
        }
        out
    }

    /// Coordinates in `⊗_k (alphabet_k)^{⊗degree_k}`, leg 0 major. Every term
    /// must have the given multidegree.
    pub fn to_coordinates(&self, alphabets: &[Alphabet], degrees: &[usize]) -> Result<Vec<Rational>> {
        assert_eq!(alphabets.len(), self.legs);
        assert_eq!(degrees.len(), self.legs);
        let sizes: Vec<usize> = alphabets
            .iter()
            .zip(degrees)
            .map(|(a, &n)| a.size().pow(n as u32))
            .collect();
        let total: usize = sizes.iter().product();
        let mut coords = vec![Rational::zero(); total];
        for (key, c) in &self.terms {
            let mut flat = 0;
            for ((word, alphabet), (&n, &size)) in key.iter().zip(alphabets).zip(degrees.iter().zip(&sizes)) {
                if word.len() != n {
                    return Err(Error::Shape(format!(
                        "word of length {} in a component of degree {n}",
                        word.len()
                    )));
                }
                flat = flat * size + alphabet.word_index(word)?;
            }
            coords[flat] += c;
        }
        Ok(coords)
    }
}

impl fmt::Display for LegTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(key, c)| {
                let legs: Vec<String> = key
                    .iter()
                    .map(|w| {
                        if w.is_empty() {
                            "1".to_string()
                        } else {
                            w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                        }
                    })
                    .collect();
                let body = legs.join(" ⊗ ");
                if c.is_one() {
                    body
                } else {
                    format!("({c}) {body}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A two-leg element in fixed bidegree `(p, q)`, as a coordinate vector over
/// word pairs (left word major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLegElement {
    pub bidegree: (usize, usize),
    pub left: Alphabet,
    pub right: Alphabet,
    pub coords: Vec<Rational>,
}

impl TensorLegElement {
    pub fn from_leg_tensor(
        t: &LegTensor,
        left: Alphabet,
        right: Alphabet,
        bidegree: (usize, usize),
    ) -> Result<Self> {
        if t.legs() != 2 {
            return Err(Error::Shape(format!("{} legs, expected 2", t.legs())));
        }
        let coords = t.to_coordinates(&[left, right], &[bidegree.0, bidegree.1])?;
        Ok(TensorLegElement {
            bidegree,
            left,
            right,
            coords,
        })
    }
}

/// The assignment `t_i^j ↦ Σ_k t_i^k ⊗ t_k^j` from `A(R:S)` (symbols over
/// `dim_v × dim_w`) to `A(R:T) ⊗ A(T:S)` with `dim_mid` middle indices,
/// extended multiplicatively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comultiplication {
    pub dim_v: usize,
    pub dim_w: usize,
    pub dim_mid: usize,
}

impl Comultiplication {
    pub fn new(dim_v: usize, dim_w: usize, dim_mid: usize) -> Self {
        Comultiplication {
            dim_v,
            dim_w,
            dim_mid,
        }
    }

    pub fn source(&self) -> Alphabet {
        Alphabet::new(self.dim_v, self.dim_w)
    }

    /// Alphabet of the left leg, `A(R:T)`.
    pub fn left(&self) -> Alphabet {
        Alphabet::new(self.dim_v, self.dim_mid)
    }

    /// Alphabet of the right leg, `A(T:S)`.
    pub fn right(&self) -> Alphabet {
        Alphabet::new(self.dim_mid, self.dim_w)
    }

    pub fn apply_generator(&self, s: GeneratorSymbol) -> LegTensor {
        let mut out = LegTensor::zero(2);
        for k in 0..self.dim_mid {
            out.add_term(
                vec![vec![GeneratorSymbol::new(s.i, k)], vec![GeneratorSymbol::new(k, s.j)]],
                Rational::one(),
            );
        }
        out
    }

    pub fn apply_word(&self, w: &Word) -> LegTensor {
        w.iter()
            .fold(LegTensor::one(2), |acc, &s| acc.mul(&self.apply_generator(s)))
    }

    /// Applies the comultiplication to leg `leg` of `x`, splitting it in two.
    pub fn apply_on_leg(&self, x: &LegTensor, leg: usize) -> LegTensor {
        x.map_leg(leg, 2, |w| self.apply_word(w))
    }
}

/// `ε(t_i^j) = δ_i^j`, extended multiplicatively.
pub fn counit_word(w: &Word) -> Rational {
    if w.iter().all(|s| s.i == s.j) {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Applies the counit to leg `leg`, removing it.
pub fn counit_on_leg(x: &LegTensor, leg: usize) -> LegTensor {
    x.map_leg(leg, 0, |w| LegTensor::one(0).scale(&counit_word(w)))
}

/// The coaction `v_i ↦ Σ_j t_i^j ⊗ w_j` of `hom[W,V]` on `V`, applied to a
/// degree-`n` tensor given by coordinates in `V^{⊗n}`: the result lives in
/// `(generators)^{⊗n} ⊗ W^{⊗n}`, generator part major.
pub fn coaction_coordinates(dim_v: usize, dim_w: usize, n: usize, x: &[Rational]) -> Vec<Rational> {
    let g = dim_v * dim_w;
    let gn = g.pow(n as u32);
    let wn = dim_w.pow(n as u32);
    let mut out = vec![Rational::zero(); gn * wn];
    for (flat_v, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let is = crate::tensor::decode_digits(dim_v, n, flat_v);
        for flat_w in 0..wn {
            let js = crate::tensor::decode_digits(dim_w, n, flat_w);
            let gens: Vec<usize> = is.iter().zip(&js).map(|(&i, &j)| j * dim_v + i).collect();
            out[encode_digits(g, &gens) * wn + flat_w] += c;
        }
    }
    out
}

/// Symbolic coassociativity on every word up to `max_len`:
/// `(Δ⊗id)Δ = (id⊗Δ)Δ` with middle dimensions `d1` (left split) and `d2`.
pub fn check_coassociativity(
    dim_v: usize,
    dim_w: usize,
    d1: usize,
    d2: usize,
    max_len: usize,
) -> VerificationReport {
    let name = "coassociativity";
    let outer_left = Comultiplication::new(dim_v, dim_w, d2);
    let inner_left = Comultiplication::new(dim_v, d2, d1);
    let outer_right = Comultiplication::new(dim_v, dim_w, d1);
    let inner_right = Comultiplication::new(d1, dim_w, d2);
    let alphabet = Alphabet::new(dim_v, dim_w);
    for n in 0..=max_len {
        for w in alphabet.words(n) {
            let lhs = inner_left.apply_on_leg(&outer_left.apply_word(&w), 0);
            let rhs = inner_right.apply_on_leg(&outer_right.apply_word(&w), 1);
            if lhs != rhs {
                return VerificationReport::failed(
                    name,
                    Witness::Term {
                        term: format!("{}", LegTensor::word(w)),
                    },
                );
            }
        }
    }
    VerificationReport::passed(name)
}

/// Symbolic counit laws on every word up to `max_len`:
/// `(ε⊗id)Δ = id` (middle dimension `dim_v`) and `(id⊗ε)Δ = id` (middle
/// dimension `dim_w`).
pub fn check_counit_laws(dim_v: usize, dim_w: usize, max_len: usize) -> VerificationReport {
    let name = "counit_laws";
    let left = Comultiplication::new(dim_v, dim_w, dim_v);
    let right = Comultiplication::new(dim_v, dim_w, dim_w);
    for n in 0..=max_len {
        for w in Alphabet::new(dim_v, dim_w).words(n) {
            let id = LegTensor::word(w.clone());
            let l = counit_on_leg(&left.apply_word(&w), 0);
            let r = counit_on_leg(&right.apply_word(&w), 1);
            if l != id || r != id {
                return VerificationReport::failed(
                    name,
                    Witness::Term {
                        term: format!("{id}"),
                    },
                );
            }
        }
    }
    VerificationReport::passed(name)
}

#[cfg(test)]
#[allow(clippy::identity_op, clippy::erasing_op)]
mod tests {
    use super::*;

    fn t(i: usize, j: usize) -> GeneratorSymbol {
        GeneratorSymbol::new(i, j)
    }

    #[test]
    fn single_middle_index() {
        let delta = Comultiplication::new(2, 3, 1);
        let img = delta.apply_generator(t(1, 2));
        let mut expected = LegTensor::zero(2);
        expected.add_term(vec![vec![t(1, 0)], vec![t(0, 2)]], Rational::one());
        assert_eq!(img, expected);
    }

    #[test]
    fn multiplicative_on_words() {
        let delta = Comultiplication::new(2, 2, 2);
        let img = delta.apply_word(&vec![t(0, 1), t(1, 0)]);
        assert_eq!(img.terms().len(), 4);
        let key = vec![vec![t(0, 1), t(1, 0)], vec![t(1, 1), t(0, 0)]];
        assert!(img.terms()[&key].is_one());
        assert_eq!(delta.apply_word(&vec![]), LegTensor::one(2));
    }

    #[test]
    fn counit_recovers_generator() {
        let delta = Comultiplication::new(3, 2, 3);
        let out = counit_on_leg(&delta.apply_generator(t(2, 1)), 0);
        assert_eq!(out, LegTensor::generator(t(2, 1)));
    }

    #[test]
    fn double_comultiplication_has_expected_shape() {
        let outer = Comultiplication::new(2, 2, 2);
        let inner = Comultiplication::new(2, 2, 2);
        let x = inner.apply_on_leg(&outer.apply_generator(t(0, 1)), 0);
        let mut expected = LegTensor::zero(3);
        for k in 0..2 {
            for l in 0..2 {
                expected.add_term(vec![vec![t(0, k)], vec![t(k, l)], vec![t(l, 1)]], Rational::one());
            }
        }
        assert_eq!(x, expected);
    }

    #[test]
    fn symbolic_laws_hold() {
        assert!(check_coassociativity(2, 3, 2, 1, 2).pass);
        assert!(check_coassociativity(2, 2, 2, 2, 3).pass);
        assert!(check_counit_laws(2, 3, 2).pass);
        assert!(check_counit_laws(3, 3, 2).pass);
    }

    #[test]
    fn leg_coordinates() {
        let delta = Comultiplication::new(2, 2, 1);
        let img = delta.apply_generator(t(1, 1));
        let e = TensorLegElement::from_leg_tensor(&img, delta.left(), delta.right(), (1, 1)).unwrap();
        // t_1^0 has flat 0·2+1 = 1 on the left (2 symbols), t_0^1 flat 1·1+0 = 1 on the right
        let mut expected = vec![Rational::zero(); 4];
        expected[1 * 2 + 1] = Rational::one();
        assert_eq!(e.coords, expected);
        assert!(TensorLegElement::from_leg_tensor(&img, delta.left(), delta.right(), (2, 1)).is_err());
    }

    #[test]
    fn coaction_on_a_basis_vector() {
        // v_1 ↦ t_1^0⊗w_0 + t_1^1⊗w_1 with dim V = dim W = 2
        let x = vec![Rational::zero(), Rational::one()];
        let out = coaction_coordinates(2, 2, 1, &x);
        let mut expected = vec![Rational::zero(); 8];
        expected[1 * 2 + 0] = Rational::one();
        expected[3 * 2 + 1] = Rational::one();
        assert_eq!(out, expected);
    }
}
