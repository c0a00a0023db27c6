//! Monomial bases of `S^d V` for `dim V = 4`, multiplication indexing, and
//! hyperplane frames `H ⊂ V` together with the 9-dimensional `H.V ⊂ S²V`.
//!
//! Monomials of a fixed degree are ordered graded-lexicographically with
//! `x1 > x2 > x3 > x4`, so degree 1 is `x1, x2, x3, x4` and degree 2 ends
//! with `x4²`. Tensors in `A ⊗ S^d V` use the index
//! `j * dim S^d V + monomial_index`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, FieldElem, PrimeField};

pub const NVARS: usize = 4;

/// Binomial coefficient, zero when `k > n`.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim S^d V = C(d+3, 3)`.
pub fn sym_dim(d: usize) -> usize {
    binom(d + 3, 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: [u32; NVARS],
}

impl Monomial {
    pub fn new(exponents: [u32; NVARS]) -> Self {
        Self { exponents }
    }

    pub fn one() -> Self {
        Self {
            exponents: [0; NVARS],
        }
    }

    /// The variable `x_{k+1}` (zero-based `k`).
    pub fn var(k: usize) -> Self {
        let mut e = [0; NVARS];
        e[k] = 1;
        Self { exponents: e }
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().sum::<u32>() as usize
    }

    pub fn times_var(&self, k: usize) -> Self {
        let mut e = self.exponents;
        e[k] += 1;
        Self { exponents: e }
    }

    /// Position in the graded-lex basis of its own degree.
    pub fn index(&self) -> usize {
        let mut remaining = self.degree();
        let mut idx = 0;
        for (v, &e) in self.exponents.iter().enumerate().take(NVARS - 1) {
            let vars_left = NVARS - v - 1;
            // monomials with a larger exponent in this slot come first
            for larger in (e as usize + 1)..=remaining {
                idx += binom(remaining - larger + vars_left - 1, vars_left - 1);
            }
            remaining -= e as usize;
        }
        idx
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoBasis {
    degree: usize,
    monomials: Vec<Monomial>,
}

impl MonoBasis {
    pub fn new(degree: usize) -> Self {
        let d = degree as u32;
        let mut monomials = Vec::with_capacity(sym_dim(degree));
        for e1 in (0..=d).rev() {
            for e2 in (0..=d - e1).rev() {
                for e3 in (0..=d - e1 - e2).rev() {
                    monomials.push(Monomial::new([e1, e2, e3, d - e1 - e2 - e3]));
                }
            }
        }
        Self { degree, monomials }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> Monomial {
        self.monomials[i]
    }
}

pub fn mono_basis(d: i64) -> Result<MonoBasis> {
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    Ok(MonoBasis::new(d as usize))
}

/// Index of `mu * x_{k+1}` in the basis of degree `deg(mu) + 1`.
pub fn mult_index(mu: &Monomial, k: usize) -> usize {
    assert!(k < NVARS, "variable index {k} out of range");
    mu.times_var(k).index()
}

/// Index of `x_p x_q` (zero-based) in the degree-2 basis.
pub fn quad_index(p: usize, q: usize) -> usize {
    mult_index(&Monomial::var(p), q)
}

/// Coordinates (degree-2 basis) of the product of two linear forms.
pub fn product_of_linear_forms(
    u: &[FieldElem; NVARS],
    v: &[FieldElem; NVARS],
    field: PrimeField,
) -> Vec<FieldElem> {
    let mut out = vec![0; sym_dim(2)];
    for k in 0..NVARS {
        for l in 0..NVARS {
            let i = quad_index(k, l);
            out[i] = field.add(out[i], field.mul(u[k], v[l]));
        }
    }
    out
}

/// A hyperplane `H = ker h` of `V` together with an adapted basis
/// `y1, y2, y3` of `H` and a completing vector `y4`, so that in the
/// `y`-coordinates `H` becomes `{x4 = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneFrame {
    covector: [FieldElem; NVARS],
    /// Columns are `y1..y4` written in the `x` basis.
    to_standard: DenseMatrix,
    /// Inverse of `to_standard`: `x`-coordinates to `y`-coordinates.
    from_standard: DenseMatrix,
    field: PrimeField,
}

impl HyperplaneFrame {
    pub fn new(covector: [FieldElem; NVARS], field: PrimeField) -> Result<Self> {
        let h = covector.map(|c| c % field.modulus());
        let Some(k) = (0..NVARS).rev().find(|&i| h[i] != 0) else {
            return Err(Error::ZeroCovector);
        };
        let hk_inv = field.inv(h[k]);
        let mut cols: Vec<Vec<FieldElem>> = Vec::with_capacity(NVARS);
        for i in (0..NVARS).filter(|&i| i != k) {
            let mut y = vec![0; NVARS];
            y[i] = 1;
            y[k] = field.neg(field.mul(h[i], hk_inv));
            cols.push(y);
        }
        let mut y4 = vec![0; NVARS];
        y4[k] = 1;
        cols.push(y4);
        let to_standard = DenseMatrix::from_columns(NVARS, &cols, field);
        let from_standard = to_standard.inverse().expect("adapted basis is invertible");
        Ok(Self {
            covector: h,
            to_standard,
            from_standard,
            field,
        })
    }

    /// `H = {x4 = 0}`, i.e. the span of `x1, x2, x3`.
    pub fn standard(field: PrimeField) -> Self {
        Self::new([0, 0, 0, 1], field).expect("nonzero covector")
    }

    pub fn random<R: Rng + ?Sized>(field: PrimeField, rng: &mut R) -> Self {
        loop {
            let h = [(); NVARS].map(|_| field.random(rng));
            if let Ok(frame) = Self::new(h, field) {
                return frame;
            }
        }
    }

    pub fn covector(&self) -> [FieldElem; NVARS] {
        self.covector
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The three basis vectors of `H`, in `x`-coordinates.
    pub fn h_basis(&self) -> [[FieldElem; NVARS]; 3] {
        [0, 1, 2].map(|c| self.frame_vector(c))
    }

    fn frame_vector(&self, c: usize) -> [FieldElem; NVARS] {
        [0, 1, 2, 3].map(|r| self.to_standard.get(r, c))
    }

    /// 4×4 matrix with columns `y1..y4` in `x`-coordinates.
    pub fn to_standard(&self) -> &DenseMatrix {
        &self.to_standard
    }

    /// Change of coordinates on `V` sending `H` to `{x4 = 0}`.
    pub fn from_standard(&self) -> &DenseMatrix {
        &self.from_standard
    }

    /// 10×10 matrix whose column `quad_index(p, q)` holds `y_p y_q` in the
    /// `x`-monomial basis of `S²V`.
    pub fn s2_change(&self) -> DenseMatrix {
        let y: Vec<[FieldElem; NVARS]> = (0..NVARS).map(|c| self.frame_vector(c)).collect();
        let mut cols = vec![Vec::new(); sym_dim(2)];
        for p in 0..NVARS {
            for q in p..NVARS {
                cols[quad_index(p, q)] = product_of_linear_forms(&y[p], &y[q], self.field);
            }
        }
        DenseMatrix::from_columns(sym_dim(2), &cols, self.field)
    }

    /// Nine vectors of `S²V` (in `x`-coordinates) spanning `H.V`: the products
    /// `y_p y_q` with `(p, q) != (4, 4)`, in graded-lex order of the frame.
    pub fn hv_basis(&self) -> Vec<Vec<FieldElem>> {
        let k = self.s2_change();
        (0..HV_DIM).map(|c| k.column(c)).collect()
    }

    /// `S²V` vector in frame coordinates, mapped back to `x`-coordinates.
    pub fn s2_from_frame(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        self.s2_change().mul_vec(v)
    }

    pub fn s2_to_frame(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        self.s2_change()
            .inverse()
            .expect("frame change is invertible")
            .mul_vec(v)
    }
}

/// `dim H.V`.
pub const HV_DIM: usize = 9;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    #[test]
    fn basis_sizes() {
        assert_eq!(mono_basis(0).unwrap().len(), 1);
        assert_eq!(mono_basis(1).unwrap().len(), 4);
        assert_eq!(mono_basis(2).unwrap().len(), 10);
        assert!(mono_basis(-1).is_err());
        for d in 0..=10 {
            assert_eq!(MonoBasis::new(d).len(), binom(d + 3, 3));
        }
    }

    #[test]
    fn degree_two_order() {
        let b = MonoBasis::new(2);
        let names: Vec<String> = b.monomials().iter().map(|m| m.to_string()).collect();
        assert_eq!(
            names,
            [
                "x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4",
                "x4^2"
            ]
        );
    }

    #[test]
    fn index_matches_enumeration() {
        for d in 0..=7 {
            for (i, m) in MonoBasis::new(d).monomials().iter().enumerate() {
                assert_eq!(m.index(), i);
            }
        }
    }

    #[test]
    fn mult_index_examples() {
        let one = Monomial::one();
        assert_eq!(MonoBasis::new(1).get(mult_index(&one, 0)), Monomial::var(0));
        assert_eq!(
            MonoBasis::new(2)
                .get(mult_index(&Monomial::var(0), 0))
                .to_string(),
            "x1^2"
        );
        let mu = Monomial::new([1, 0, 2, 0]);
        for j in 0..NVARS {
            for k in 0..NVARS {
                assert_eq!(
                    mult_index(&mu.times_var(j), k),
                    mult_index(&mu.times_var(k), j)
                );
            }
        }
    }

    #[test]
    fn standard_frame_hv_is_all_but_x4_squared() {
        let f = PrimeField::default();
        let frame = HyperplaneFrame::standard(f);
        assert_eq!(frame.to_standard(), &DenseMatrix::identity(4, f));
        for (c, v) in frame.hv_basis().iter().enumerate() {
            let mut e = vec![0; 10];
            e[c] = 1;
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn random_frames() {
        let f = PrimeField::default();
        let mut rng = seeded(3);
        for _ in 0..20 {
            let frame = HyperplaneFrame::random(f, &mut rng);
            let h = frame.covector();
            for y in frame.h_basis() {
                let pairing = (0..4).fold(0, |acc, i| f.add(acc, f.mul(h[i], y[i])));
                assert_eq!(pairing, 0);
            }
            let hv = DenseMatrix::from_columns(10, &frame.hv_basis(), f);
            assert_eq!(hv.rank(), 9, "dim H.V = 9, quotient S²V/H.V is a line");
            // H.V also equals the span of all products h_i * x_k
            let mut prods = Vec::new();
            for y in frame.h_basis() {
                for k in 0..4 {
                    let mut xk = [0; 4];
                    xk[k] = 1;
                    prods.push(product_of_linear_forms(&y, &xk, f));
                }
            }
            let both: Vec<Vec<FieldElem>> = prods
                .iter()
                .chain(frame.hv_basis().iter())
                .cloned()
                .collect();
            assert_eq!(DenseMatrix::from_columns(10, &both, f).rank(), 9);

            let v: Vec<FieldElem> = (0..10).map(|_| f.random(&mut rng)).collect();
            assert_eq!(frame.s2_from_frame(&frame.s2_to_frame(&v)), v);
        }
    }

    #[test]
    fn zero_covector_rejected() {
        assert!(matches!(
            HyperplaneFrame::new([0; 4], PrimeField::default()),
            Err(Error::ZeroCovector)
        ));
    }
}
