//! Jordan types, the `r = 0` stratification tables for `4 × 4` and `3 × 4`
//! coefficient matrices, the constructive search for rank-0 hyperplanes, and
//! sampled rank distributions.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::{DenseMatrix, FieldElem, PrimeField};
use crate::multilin::{quad_index, HyperplaneFrame, HV_DIM, NVARS};
use crate::rng::split;
use crate::subspace::{restrict_to_h, z_rank, zh_rank, FFormQuotient, HSliceZ, SubspaceZ};

/// One partition (Jordan block sizes) per distinct eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JordanType {
    parts: Vec<Vec<usize>>,
}

impl JordanType {
    /// Partitions are sorted decreasingly; eigenvalue order is kept.
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable_by(|a, b| b.cmp(a));
                p
            })
            .filter(|p| !p.is_empty())
            .collect();
        Self { parts }
    }

    /// Parses labels such as `"21|1"`: `|` separates eigenvalues, digits are
    /// block sizes.
    pub fn parse(label: &str) -> Option<Self> {
        let parts = label
            .split('|')
            .map(|p| {
                p.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        if parts.iter().any(|p| p.is_empty() || p.contains(&0)) {
            return None;
        }
        Some(Self::new(parts))
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().flatten().sum()
    }

    pub fn eigenvalue_count(&self) -> usize {
        self.parts.len()
    }

    /// Multiset form, for comparing types regardless of eigenvalue order.
    pub fn canonical(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_by(|a, b| (b.iter().sum::<usize>(), b).cmp(&(a.iter().sum::<usize>(), a)));
        Self { parts }
    }

    pub fn same_type(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// `Σ_λ Σ_{i,j} min(b_i, b_j)`.
    pub fn centralizer_dim(&self) -> usize {
        self.parts
            .iter()
            .map(|p| {
                p.iter()
                    .flat_map(|&x| p.iter().map(move |&y| x.min(y)))
                    .sum::<usize>()
            })
            .sum()
    }

    /// Orbit dimension plus one parameter per distinct eigenvalue.
    pub fn stratum_dim(&self) -> usize {
        let n = self.size();
        n * n - self.centralizer_dim() + self.eigenvalue_count()
    }

    /// Jordan matrix with eigenvalues `1, 2, 3, ...` in part order and ones
    /// on the superdiagonal of each block.
    pub fn representative(&self, field: PrimeField) -> DenseMatrix {
        let n = self.size();
        let mut m = DenseMatrix::zeros(n, n, field);
        let mut i = 0;
        for (ev, part) in self.parts.iter().enumerate() {
            for &block in part {
                for k in 0..block {
                    m.set(i + k, i + k, (ev + 1) as FieldElem);
                    if k + 1 < block {
                        m.set(i + k, i + k + 1, 1);
                    }
                }
                i += block;
            }
        }
        m
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self
            .parts
            .iter()
            .map(|p| p.iter().map(|b| b.to_string()).collect::<String>())
            .collect();
        write!(f, "{}", labels.join("|"))
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every multiset of partitions with total size `n`.
pub fn enumerate_jordan(n: usize) -> Vec<JordanType> {
    // (size, partition) pairs, listed in non-increasing order to avoid repeats
    let mut pieces: Vec<Vec<usize>> = (1..=n).rev().flat_map(|k| partitions(k, k)).collect();
    pieces.sort_by(|a, b| (b.iter().sum::<usize>(), b).cmp(&(a.iter().sum::<usize>(), a)));
    fn go(
        rem: usize,
        from: usize,
        pieces: &[Vec<usize>],
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<JordanType>,
    ) {
        if rem == 0 {
            out.push(JordanType::new(acc.clone()));
            return;
        }
        for i in from..pieces.len() {
            let s: usize = pieces[i].iter().sum();
            if s <= rem {
                acc.push(pieces[i].clone());
                go(rem - s, i, pieces, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 0, &pieces, &mut Vec::new(), &mut out);
    out
}

/// Reference rows of the `4 × 4` table: label, stratum dimension, solution
/// dimension, in reference row order.
pub const JORDAN4_REFERENCE: [(&str, usize, usize); 14] = [
    ("1|1|1|1", 16, 4),
    ("2|1|1", 14, 4),
    ("2|2", 14, 4),
    ("3|1", 14, 4),
    ("4", 13, 4),
    ("11|1|1", 13, 5),
    ("2|11", 12, 5),
    ("21|1", 12, 5),
    ("31", 11, 5),
    ("11|11", 10, 6),
    ("22", 9, 7),
    ("111|1", 8, 7),
    ("211", 7, 7),
    ("1111", 1, 10),
];

/// The 14 Jordan types of size 4, in reference row order.
pub fn enumerate_jordan4() -> Vec<JordanType> {
    let all = enumerate_jordan(4);
    JORDAN4_REFERENCE
        .iter()
        .map(|(label, _, _)| {
            let want = JordanType::parse(label).expect("valid label");
            assert!(
                all.iter().any(|t| t.same_type(&want)),
                "{label} not enumerated"
            );
            want
        })
        .collect()
}

/// Linear system in the 10 coordinates of a symmetric `4 × 4` matrix `X`
/// expressing that the leading `n × n` block of `C X` is symmetric, for an
/// `n × 4` matrix `C`. One equation per pair `p < q < n`.
fn symmetry_system(c: &DenseMatrix) -> DenseMatrix {
    assert_eq!(c.cols(), NVARS);
    let n = c.rows();
    let field = c.field();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
        .collect();
    let mut sys = DenseMatrix::zeros(pairs.len(), 10, field);
    for (e, &(p, q)) in pairs.iter().enumerate() {
        for r in 0..NVARS {
            // (CX)_{pq} - (CX)_{qp} = Σ_r C[p,r] X[r,q] - C[q,r] X[r,p]
            sys.add_at(e, quad_index(r.min(q), r.max(q)), c.get(p, r));
            sys.add_at(e, quad_index(r.min(p), r.max(p)), field.neg(c.get(q, r)));
        }
    }
    sys
}

/// `dim {X symmetric : C X symmetric}` for a `4 × 4` matrix `C`.
pub fn solution_dim_4x4(c: &DenseMatrix) -> usize {
    assert_eq!((c.rows(), c.cols()), (4, 4));
    10 - symmetry_system(c).rank()
}

/// Rank `r` of the three equations making `C0 X0 + c xᵗ` symmetric, and
/// `S = 10 - r`.
pub fn solution_dim_3x4(c0: &DenseMatrix, c: &[FieldElem; 3]) -> (usize, usize) {
    assert_eq!((c0.rows(), c0.cols()), (3, 3));
    let full = DenseMatrix::from_fn(
        3,
        4,
        c0.field(),
        |i, j| if j < 3 { c0.get(i, j) } else { c[i] },
    );
    let r = symmetry_system(&full).rank();
    (r, 10 - r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrataRow {
    pub jordan: String,
    pub o_reference: usize,
    pub o_computed: usize,
    pub s_reference: usize,
    pub s_computed: usize,
    pub o_matches: bool,
    pub s_matches: bool,
}

pub fn jordan4_table(field: PrimeField) -> Vec<StrataRow> {
    enumerate_jordan4()
        .into_iter()
        .zip(JORDAN4_REFERENCE)
        .map(|(t, (label, o_ref, s_ref))| {
            let o = t.stratum_dim();
            let s = solution_dim_4x4(&t.representative(field));
            StrataRow {
                jordan: label.to_string(),
                o_reference: o_ref,
                o_computed: o,
                s_reference: s_ref,
                s_computed: s,
                o_matches: o == o_ref,
                s_matches: s == s_ref,
            }
        })
        .collect()
}

/// Class of the column `c` in a `3 × 4` row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CClass {
    Any,
    /// Only the third coordinate nonzero.
    ThirdAxis,
    /// Only the first coordinate nonzero.
    FirstAxis,
    NonZero,
    Zero,
    Other,
}

impl CClass {
    pub fn label(self) -> &'static str {
        match self {
            CClass::Any => "",
            CClass::ThirdAxis => "(0,0,*)",
            CClass::FirstAxis => "(*,0,0)",
            CClass::NonZero => "!=0",
            CClass::Zero => "0",
            CClass::Other => "other",
        }
    }

    pub fn representative(self) -> [FieldElem; 3] {
        match self {
            CClass::ThirdAxis => [0, 0, 1],
            CClass::FirstAxis => [1, 0, 0],
            CClass::Zero => [0, 0, 0],
            CClass::Any | CClass::NonZero | CClass::Other => [2, 3, 5],
        }
    }

    fn dim(self) -> usize {
        match self {
            CClass::ThirdAxis | CClass::FirstAxis => 1,
            CClass::Zero => 0,
            CClass::Any | CClass::NonZero | CClass::Other => 3,
        }
    }
}

/// Tabulated stratum dimension: a value, an upper bound, or the
/// degenerate case where the form is not surjective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ODim {
    Exactly(usize),
    Below(usize),
    NotSurjective,
}

pub const JORDAN3X4_REFERENCE: [(&str, CClass, usize, ODim); 9] = [
    ("1|1|1", CClass::Any, 3, ODim::Exactly(12)),
    ("11|1", CClass::ThirdAxis, 2, ODim::Exactly(7)),
    ("11|1", CClass::Other, 3, ODim::Below(12)),
    ("111", CClass::NonZero, 2, ODim::Exactly(7)),
    ("111", CClass::Zero, 0, ODim::NotSurjective),
    ("2|1", CClass::Any, 3, ODim::Below(12)),
    ("21", CClass::FirstAxis, 2, ODim::Exactly(6)),
    ("21", CClass::Other, 3, ODim::Below(12)),
    ("3", CClass::Any, 3, ODim::Below(12)),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Strata3x4Row {
    pub jordan: String,
    pub c_class: String,
    pub r_reference: usize,
    pub r_computed: usize,
    pub s_computed: usize,
    pub rank_matches: bool,
    /// Flags the row where `g` fails to be surjective (`C0` scalar, `c = 0`).
    pub g_not_surjective: bool,
    pub o_reference: ODim,
    /// Orbit dimension of `J(C0)` plus the dimension of the `c`-class;
    /// informational.
    pub o_computed: usize,
    pub o_consistent: bool,
}

pub fn jordan3x4_table(field: PrimeField) -> Vec<Strata3x4Row> {
    JORDAN3X4_REFERENCE
        .iter()
        .map(|&(label, class, r_ref, o_ref)| {
            let t = JordanType::parse(label).expect("valid label");
            let (r, s) = solution_dim_3x4(&t.representative(field), &class.representative());
            let o = t.stratum_dim() + class.dim();
            let o_consistent = match o_ref {
                ODim::Exactly(v) => v == o,
                ODim::Below(v) => o < v,
                ODim::NotSurjective => true,
            };
            Strata3x4Row {
                jordan: label.to_string(),
                c_class: class.label().to_string(),
                r_reference: r_ref,
                r_computed: r,
                s_computed: s,
                rank_matches: r == r_ref,
                g_not_surjective: r == 0,
                o_reference: o_ref,
                o_computed: o,
                o_consistent,
            }
        })
        .collect()
}

/// Where the rank-0 search runs: hyperplanes of `Z`, or of `Z' = Z ∩ A⊗H.V`.
#[derive(Debug, Clone, Copy)]
pub enum SearchContext<'a> {
    Full,
    Hyper(&'a HyperplaneFrame),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank0Search {
    /// Dimension of the solution space in the coefficients `c_{prs}`.
    pub solution_dim: usize,
    /// Covector on `A⊗S²V` (full) or `A⊗H.V` in frame coordinates (hyper)
    /// cutting a rank-0 hyperplane, independent of the rows of `Φ` (`Φ_H`).
    pub witness: Option<Vec<FieldElem>>,
}

/// Solves the linear system in `c` making `g_{pqj} = Σ_{r,s} c_{prs} t_{rqjs}`
/// symmetric, with `Φ` fixed.
pub fn rank0_search(phi: &FFormQuotient, context: SearchContext<'_>) -> Rank0Search {
    let (a, f) = (phi.a(), phi.f());
    let field = phi.field();
    let (framed, g_rows, base, width) = match context {
        SearchContext::Full => (phi.clone(), NVARS, phi.matrix().clone(), 10 * a),
        SearchContext::Hyper(frame) => (
            phi.in_frame(frame),
            3,
            phi.restricted_to_hv(frame),
            HV_DIM * a,
        ),
    };
    let unknown = |p: usize, r: usize, s: usize| (p * NVARS + r) * f + s;
    let n_unknowns = g_rows * NVARS * f;
    let pairs: Vec<(usize, usize)> = (0..g_rows)
        .flat_map(|p| (p + 1..g_rows).map(move |q| (p, q)))
        .collect();

    let mut sys = DenseMatrix::zeros(pairs.len() * a, n_unknowns, field);
    for (e, &(p, q)) in pairs.iter().enumerate() {
        for j in 0..a {
            let row = e * a + j;
            for r in 0..NVARS {
                for s in 0..f {
                    sys.add_at(row, unknown(p, r, s), framed.coefficient(r, q, j, s));
                    sys.add_at(
                        row,
                        unknown(q, r, s),
                        field.neg(framed.coefficient(r, p, j, s)),
                    );
                }
            }
        }
    }
    let kernel = sys.kernel_basis();

    let induced = |c: &[FieldElem]| -> Vec<FieldElem> {
        let g = |p: usize, q: usize, j: usize| {
            (0..NVARS)
                .flat_map(|r| (0..f).map(move |s| (r, s)))
                .fold(0, |acc, (r, s)| {
                    field.add(
                        acc,
                        field.mul(c[unknown(p, r, s)], framed.coefficient(r, q, j, s)),
                    )
                })
        };
        let block = width / a;
        let mut out = vec![0; width];
        for j in 0..a {
            for p in 0..NVARS {
                for q in p..NVARS {
                    let i = quad_index(p, q);
                    if i < block {
                        // p <= q and (p, q) != (4, 4), so p indexes a row of g
                        out[block * j + i] = g(p, q, j);
                    }
                }
            }
        }
        out
    };

    let base_rank = base.rank();
    let witness = kernel.iter().map(|c| induced(c)).find(|g| {
        let stacked = DenseMatrix::from_fn(base.rows() + 1, width, field, |i, j| {
            if i < base.rows() {
                base.get(i, j)
            } else {
                g[j]
            }
        });
        stacked.rank() == base_rank + 1
    });
    Rank0Search {
        solution_dim: kernel.len(),
        witness,
    }
}

pub fn find_rank0(phi: &FFormQuotient, context: SearchContext<'_>) -> Option<Vec<FieldElem>> {
    rank0_search(phi, context).witness
}

/// Histogram of Z-ranks (no frame) or (Z,H)-ranks (with a frame) of random
/// codimension-`codim` subspaces of `Z` or `Z'`. Trial `t` draws from stream
/// `t` of `seed`.
pub fn rank_distribution(
    phi: &FFormQuotient,
    frame: Option<&HyperplaneFrame>,
    codim: usize,
    trials: usize,
    seed: u64,
) -> crate::Result<BTreeMap<usize, usize>> {
    let field = phi.field();
    let slice: Option<HSliceZ> = match frame {
        Some(h) => Some(restrict_to_h(&SubspaceZ::new(phi.clone()), h)?),
        None => None,
    };
    let width = if slice.is_some() {
        HV_DIM * phi.a()
    } else {
        10 * phi.a()
    };
    let ranks: Vec<usize> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = split(seed, t as u64);
            loop {
                let extra: Vec<Vec<FieldElem>> = (0..codim)
                    .map(|_| (0..width).map(|_| field.random(&mut rng)).collect())
                    .collect();
                let r = match &slice {
                    Some(sl) => sl.subspace_quotient(&extra).and_then(|tq| zh_rank(sl, &tq)),
                    None => z_rank(phi, &extra),
                };
                if let Ok(r) = r {
                    return r;
                }
            }
        })
        .collect();
    let mut hist = BTreeMap::new();
    for r in ranks {
        *hist.entry(r).or_insert(0) += 1;
    }
    Ok(hist)
}
