//! F-forms on `A ⊗ S²V` and `A ⊗ H.V`, the transported maps `g*` and
//! `f*_{Z,T}`, and the rank invariants built from them (V*-rank, Z-rank,
//! (Z,H)-rank).
//!
//! A codimension-`f` subspace `Z ⊂ A ⊗ S²V` is always carried by a
//! surjection `Φ : A ⊗ S²V → F`, stored as an `f × 10a` matrix whose column
//! `10 j + quad_index(p, q)` holds the values `t_{pqjs} = Φ_s(α_j ⊗ x_p x_q)`.
//! Evaluating on monomials (not on symmetrized tensors) makes `t` symmetric
//! in `(p, q)` with no factors of two.
//!
//! Layouts: `A ⊗ V` is indexed `4 j + q`; `V^∨ ⊗ F` rows of `g*` are
//! indexed `4 s + p`; `A ⊗ H.V` is indexed `9 j + i` against the frame's
//! `hv_basis`.

use std::io::BufRead;
use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactalg::{DenseMatrix, FieldElem, Lines, PrimeField};
use crate::multilin::{quad_index, sym_dim, HyperplaneFrame, HV_DIM, NVARS};
use crate::steiner::SteinerPresentation;

const S2: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFormQuotient {
    a: usize,
    matrix: DenseMatrix,
}

impl FFormQuotient {
    /// Checks the shape `f × 10a` and that `Φ` has full row rank.
    pub fn new(a: usize, matrix: DenseMatrix) -> Result<Self> {
        if matrix.cols() != S2 * a {
            return Err(Error::Shape(format!(
                "F-form needs {} columns, got {}",
                S2 * a,
                matrix.cols()
            )));
        }
        let rank = matrix.rank();
        if rank != matrix.rows() {
            return Err(Error::NotSurjective {
                rank,
                expected: matrix.rows(),
            });
        }
        Ok(Self { a, matrix })
    }

    /// The empty quotient (`f = 0`, `Z` is everything).
    pub fn empty(a: usize, field: PrimeField) -> Self {
        Self {
            a,
            matrix: DenseMatrix::zeros(0, S2 * a, field),
        }
    }

    /// Builds `Φ` from its trilinear coefficients `t(p, q, j, s)`, which must
    /// be symmetric in `(p, q)`; only `p <= q` is read.
    pub fn from_coefficients(
        a: usize,
        f: usize,
        field: PrimeField,
        t: impl Fn(usize, usize, usize, usize) -> FieldElem,
    ) -> Result<Self> {
        let mut m = DenseMatrix::zeros(f, S2 * a, field);
        for s in 0..f {
            for j in 0..a {
                for p in 0..NVARS {
                    for q in p..NVARS {
                        m.set(
                            s,
                            S2 * j + quad_index(p, q),
                            t(p, q, j, s) % field.modulus(),
                        );
                    }
                }
            }
        }
        Self::new(a, m)
    }

    pub fn random<R: Rng + ?Sized>(a: usize, f: usize, field: PrimeField, rng: &mut R) -> Self {
        loop {
            if let Ok(q) = Self::new(a, DenseMatrix::random(f, S2 * a, field, rng)) {
                return q;
            }
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn f(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    /// `t_{pqjs}`, zero-based indices.
    pub fn coefficient(&self, p: usize, q: usize, j: usize, s: usize) -> FieldElem {
        self.matrix.get(s, S2 * j + quad_index(p, q))
    }

    /// Quotient presenting `T = Z ∩ ker(extra)`. The extra covectors must stay
    /// independent modulo the rows of `Φ`.
    pub fn with_extra(&self, extra: &[Vec<FieldElem>]) -> Result<Self> {
        let rows: Vec<Vec<FieldElem>> = (0..self.f())
            .map(|s| self.matrix.row(s).to_vec())
            .chain(extra.iter().cloned())
            .collect();
        if rows.iter().any(|r| r.len() != S2 * self.a) {
            return Err(Error::Shape("covector length must be 10a".into()));
        }
        let m = DenseMatrix::from_fn(rows.len(), S2 * self.a, self.field(), |i, j| rows[i][j]);
        let rank = m.rank();
        if rank != rows.len() {
            return Err(Error::DependentCovectors {
                rank,
                expected: rows.len(),
            });
        }
        Ok(Self {
            a: self.a,
            matrix: m,
        })
    }

    /// The same F-form evaluated on the frame's products `y_p y_q`.
    pub fn in_frame(&self, frame: &HyperplaneFrame) -> Self {
        let k = frame.s2_change();
        let field = self.field();
        let mut out = DenseMatrix::zeros(self.f(), S2 * self.a, field);
        for s in 0..self.f() {
            let row = self.matrix.row(s);
            for j in 0..self.a {
                let block = &row[S2 * j..S2 * (j + 1)];
                for c in 0..S2 {
                    let v =
                        (0..S2).fold(0, |acc, r| field.add(acc, field.mul(block[r], k.get(r, c))));
                    out.set(s, S2 * j + c, v);
                }
            }
        }
        Self {
            a: self.a,
            matrix: out,
        }
    }

    /// `f × 9a` matrix of `Φ_H`, the restriction to `A ⊗ H.V` in frame
    /// coordinates.
    pub fn restricted_to_hv(&self, frame: &HyperplaneFrame) -> DenseMatrix {
        let framed = self.in_frame(frame);
        let cols: Vec<usize> = (0..self.a)
            .flat_map(|j| (0..HV_DIM).map(move |i| S2 * j + i))
            .collect();
        framed.matrix.select_cols(&cols)
    }

    /// `fform a f p`, then the `f × 10a` matrix.
    pub fn to_interchange(&self) -> String {
        let mut s = format!("fform {} {} {}\n", self.a, self.f(), self.field().modulus());
        self.matrix.write_interchange(&mut s);
        s
    }

    pub fn parse_interchange(text: &str) -> Result<Self> {
        Self::read_interchange(&mut Lines::new(text.as_bytes()))
    }

    pub fn read_interchange<R: BufRead>(lines: &mut Lines<R>) -> Result<Self> {
        let h = lines.expect_header("fform", 3)?;
        let m = DenseMatrix::read_interchange(lines)?;
        if (m.rows() as u64, m.cols() as u64, m.field().modulus() as u64)
            != (h[1], S2 as u64 * h[0], h[2])
        {
            return Err(lines.error("header does not match the matrix"));
        }
        Self::new(h[0] as usize, m)
    }
}

/// `g* : A ⊗ V → V^∨ ⊗ F`, a `4f × 4a` matrix with entry
/// `[(s,p), (j,q)] = t_{pqjs}`.
pub fn gstar(phi: &FFormQuotient) -> DenseMatrix {
    let (a, f) = (phi.a(), phi.f());
    DenseMatrix::from_fn(NVARS * f, NVARS * a, phi.field(), |r, c| {
        phi.coefficient(r % NVARS, c % NVARS, c / NVARS, r / NVARS)
    })
}

pub fn vstar_rank(phi: &FFormQuotient) -> usize {
    gstar(phi).rank()
}

/// Deterministic quotient of maximal V*-rank `4f`: `t_{pqjs} = x_{sj} y_{pq}`
/// with `x : A → F` the coordinate projection and `y` the nondegenerate
/// symmetric form `diag(1, 2, 3, 4)`.
pub fn witness_z(a: usize, f: usize, field: PrimeField) -> Result<FFormQuotient> {
    if f > a {
        return Err(Error::TooManyForms { a, f });
    }
    FFormQuotient::from_coefficients(a, f, field, |p, q, j, s| {
        if s == j && p == q {
            (p + 1) as FieldElem
        } else {
            0
        }
    })
}

/// Basis of `Z* = ker g*` inside `A ⊗ V`.
pub fn zstar_basis(phi: &FFormQuotient) -> Vec<Vec<FieldElem>> {
    if phi.f() == 0 {
        return standard_basis(NVARS * phi.a());
    }
    gstar(phi).kernel_basis()
}

fn standard_basis(n: usize) -> Vec<Vec<FieldElem>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

/// V*-rank of `T = Z ∩ ker(extra)` minus the V*-rank of `Z`.
pub fn z_rank(phi: &FFormQuotient, extra: &[Vec<FieldElem>]) -> Result<usize> {
    let t = phi.with_extra(extra)?;
    Ok(vstar_rank(&t) - vstar_rank(phi))
}

/// `Z = ker Φ` with a lazily computed kernel basis.
#[derive(Debug, Clone)]
pub struct SubspaceZ {
    quotient: FFormQuotient,
    basis: OnceLock<Vec<Vec<FieldElem>>>,
}

impl SubspaceZ {
    pub fn new(quotient: FFormQuotient) -> Self {
        Self {
            quotient,
            basis: OnceLock::new(),
        }
    }

    pub fn quotient(&self) -> &FFormQuotient {
        &self.quotient
    }

    pub fn dim(&self) -> usize {
        S2 * self.quotient.a() - self.quotient.f()
    }

    pub fn basis(&self) -> &[Vec<FieldElem>] {
        self.basis.get_or_init(|| {
            let q = &self.quotient;
            if q.f() == 0 {
                standard_basis(S2 * q.a())
            } else {
                q.matrix().kernel_basis()
            }
        })
    }
}

/// `Z' = Z ∩ (A ⊗ H.V)` for a hyperplane `H`, in the frame of `H`.
#[derive(Debug, Clone)]
pub struct HSliceZ {
    z: SubspaceZ,
    frame: HyperplaneFrame,
    phi_h: DenseMatrix,
    dim_zprime: usize,
}

impl HSliceZ {
    /// Builds the slice without checking transversality.
    pub fn build(z: SubspaceZ, frame: HyperplaneFrame) -> Self {
        let phi_h = z.quotient().restricted_to_hv(&frame);
        let dim_zprime = HV_DIM * z.quotient().a() - phi_h.rank();
        Self {
            z,
            frame,
            phi_h,
            dim_zprime,
        }
    }

    pub fn z(&self) -> &SubspaceZ {
        &self.z
    }

    pub fn frame(&self) -> &HyperplaneFrame {
        &self.frame
    }

    /// `Φ_H`, an `f × 9a` matrix cutting `Z'` out of `A ⊗ H.V`.
    pub fn phi_h(&self) -> &DenseMatrix {
        &self.phi_h
    }

    pub fn dim_zprime(&self) -> usize {
        self.dim_zprime
    }

    pub fn expected_dim(&self) -> usize {
        HV_DIM * self.z.quotient().a() - self.z.quotient().f()
    }

    pub fn is_transverse(&self) -> bool {
        self.dim_zprime == self.expected_dim()
    }

    fn a(&self) -> usize {
        self.z.quotient().a()
    }

    /// Quotient covectors of `T = Z' ∩ ker(extra)`: the rows of `Φ_H` followed
    /// by `extra`, which must stay independent.
    pub fn subspace_quotient(&self, extra: &[Vec<FieldElem>]) -> Result<DenseMatrix> {
        let width = HV_DIM * self.a();
        if extra.iter().any(|r| r.len() != width) {
            return Err(Error::Shape(format!(
                "covector on A⊗H.V must have length {width}"
            )));
        }
        let n = self.phi_h.rows() + extra.len();
        let m = DenseMatrix::from_fn(n, width, self.phi_h.field(), |i, j| {
            if i < self.phi_h.rows() {
                self.phi_h.get(i, j)
            } else {
                extra[i - self.phi_h.rows()][j]
            }
        });
        let expected = self.phi_h.rank() + extra.len();
        let rank = m.rank();
        if rank != expected {
            return Err(Error::DependentCovectors { rank, expected });
        }
        Ok(m)
    }

    /// `f* : A ⊗ V → H^∨ ⊗ F'` for the very partially symmetric forms given
    /// by the rows of `covectors` (`r × 9a`), as a `3r × 4a` matrix in the
    /// original `x`-coordinates of `A ⊗ V`.
    pub fn tps_matrix(&self, covectors: &DenseMatrix) -> DenseMatrix {
        let a = self.a();
        let field = covectors.field();
        let q = self.frame.from_standard();
        // frame coordinates: row (s, p), column (j, l) reads g_s(α_j ⊗ y_p y_l)
        let framed = DenseMatrix::from_fn(3 * covectors.rows(), NVARS * a, field, |r, c| {
            let (s, p) = (r / 3, r % 3);
            let (j, l) = (c / NVARS, c % NVARS);
            covectors.get(s, HV_DIM * j + quad_index(p, l))
        });
        // back to x-coordinates: F_x(j, k) = Σ_l F_y(j, l) Q[l, k]
        DenseMatrix::from_fn(framed.rows(), NVARS * a, field, |r, c| {
            let (j, k) = (c / NVARS, c % NVARS);
            (0..NVARS).fold(0, |acc, l| {
                field.add(acc, field.mul(framed.get(r, NVARS * j + l), q.get(l, k)))
            })
        })
    }
}

pub fn restrict_to_h(z: &SubspaceZ, frame: &HyperplaneFrame) -> Result<HSliceZ> {
    let slice = HSliceZ::build(z.clone(), frame.clone());
    if !slice.is_transverse() {
        return Err(Error::NonTransverse {
            got: slice.dim_zprime,
            expected: slice.expected_dim(),
        });
    }
    Ok(slice)
}

/// `f*_{Z,T}`: `g*(Φ)` stacked over the tps matrix of `T`'s quotient, where
/// `T = ker(t_quotient) ⊂ A ⊗ H.V`. Shape `(4f + 3 codim T) × 4a`.
pub fn fstar_zt(slice: &HSliceZ, t_quotient: &DenseMatrix) -> Result<DenseMatrix> {
    let a = slice.a();
    if t_quotient.cols() != HV_DIM * a {
        return Err(Error::Shape(format!(
            "T quotient must have {} columns",
            HV_DIM * a
        )));
    }
    let both = DenseMatrix::vstack(&[t_quotient, slice.phi_h()], HV_DIM * a, t_quotient.field())?;
    if both.rank() != t_quotient.rank() {
        return Err(Error::NotContained);
    }
    let basis = t_quotient.row_space_basis();
    let top = gstar(slice.z().quotient());
    let bottom = slice.tps_matrix(&basis);
    DenseMatrix::vstack(&[&top, &bottom], NVARS * a, t_quotient.field())
}

/// Rank of `f*_{Z,T}` minus the V*-rank of `Z`.
pub fn zh_rank(slice: &HSliceZ, t_quotient: &DenseMatrix) -> Result<usize> {
    Ok(fstar_zt(slice, t_quotient)?.rank() - vstar_rank(slice.z().quotient()))
}

/// `m_H(1) : B ⊗ H → A ⊗ H.V`, a `9a × 3b` matrix in frame coordinates:
/// column `3 i + p`, row `9 j + hv index`.
pub fn mh1(m: &SteinerPresentation, frame: &HyperplaneFrame) -> DenseMatrix {
    let m1 = m.in_frame(frame).assemble_md(1);
    let (a, b) = (m.a(), m.b());
    let rows: Vec<usize> = (0..a)
        .flat_map(|j| (0..HV_DIM).map(move |i| sym_dim(2) * j + i))
        .collect();
    let cols: Vec<usize> = (0..b)
        .flat_map(|i| (0..3).map(move |p| NVARS * i + p))
        .collect();
    m1.select_rows(&rows).select_cols(&cols)
}

/// Both sides of the transport of equations, computed independently.
///
/// `lhs`: `Φ ∘ m(1) = 0`, and when a hyperplane and `T` are given, also
/// `T ⊇ Im m_H(1)`. `rhs`: the stacked transported map annihilates `m`.
pub fn transport_check(
    m: &SteinerPresentation,
    phi: &FFormQuotient,
    hyperplane: Option<(&HyperplaneFrame, &DenseMatrix)>,
) -> Result<(bool, bool)> {
    if m.a() != phi.a() {
        return Err(Error::Shape("presentation and F-form disagree on a".into()));
    }
    let mut lhs = phi.f() == 0 || phi.matrix().mul(&m.assemble_md(1))?.is_zero();
    let stacked = m.stacked();
    let mut rhs = phi.f() == 0 || gstar(phi).mul(&stacked)?.is_zero();
    if let Some((frame, t_quotient)) = hyperplane {
        if t_quotient.rows() > 0 {
            lhs &= t_quotient.mul(&mh1(m, frame))?.is_zero();
            let slice = HSliceZ::build(SubspaceZ::new(phi.clone()), frame.clone());
            rhs &= slice.tps_matrix(t_quotient).mul(&stacked)?.is_zero();
        }
    }
    Ok((lhs, rhs))
}
