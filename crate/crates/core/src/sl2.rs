//! sl2-triples through nilpotent elements and the decomposition of the
//! algebra under the triple and its centralizer.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, ChevalleyAlgebra};
use crate::error::{AtlasError, Result};
use crate::linalg::{q, solve_linear, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub x: AlgebraElement,
    pub y: AlgebraElement,
    pub h: AlgebraElement,
}

impl Sl2Triple {
    /// Checks `[H,X] = 2X`, `[H,Y] = -2Y`, `[X,Y] = H`.
    pub fn is_valid(&self, a: &ChevalleyAlgebra) -> bool {
        a.bracket(&self.h, &self.x) == self.x.scale(&q(2))
            && a.bracket(&self.h, &self.y) == self.y.scale(&q(-2))
            && a.bracket(&self.x, &self.y) == self.h
    }
}

/// Eigenvalue of `ad h` on each basis vector, for `h` in the Cartan
/// subalgebra with integral eigenvalues.
pub fn basis_degrees(a: &ChevalleyAlgebra, h: &AlgebraElement) -> Result<Vec<i64>> {
    let rs = a.root_system();
    let r = a.rank();
    if !h.is_real() || h.re[r..].iter().any(|c| !c.is_zero()) {
        return Err(AtlasError::TripleCompletion(
            "H is not a real Cartan element".into(),
        ));
    }
    let ce = crate::roots::CartanElement {
        coroot: h.re[..r].to_vec(),
    };
    let marks = ce.marks(rs);
    let mut out = vec![0; r];
    for i in r..a.dim() {
        let root = a.basis_root(i).expect("root");
        let d: Rational = root.iter().zip(&marks).map(|(c, m)| m * q(*c)).sum();
        if !d.is_integer() {
            return Err(AtlasError::TripleCompletion(format!(
                "non-integral eigenvalue {d}"
            )));
        }
        out.push(d.to_integer().try_into().expect("small"));
    }
    Ok(out)
}

/// Solve `[X, Y] = H` for `Y` in the `-2` eigenspace of `ad H`.
pub fn complete_triple(
    a: &ChevalleyAlgebra,
    x: &AlgebraElement,
    h: &AlgebraElement,
) -> Result<Sl2Triple> {
    if a.bracket(h, x) != x.scale(&q(2)) {
        return Err(AtlasError::TripleCompletion("[H, X] != 2X".into()));
    }
    if !x.is_real() {
        return Err(AtlasError::TripleCompletion("X must be real".into()));
    }
    let deg = basis_degrees(a, h)?;
    let n = a.dim();
    let cols: Vec<usize> = (0..n).filter(|&i| deg[i] == -2).collect();
    let columns: Vec<Vec<Rational>> = cols
        .iter()
        .map(|&j| {
            // [X, b_j] = -[b_j, X]
            a.ad_basis_apply(j, &x.re).into_iter().map(|c| -c).collect()
        })
        .collect();
    if columns.is_empty() {
        return Err(AtlasError::TripleCompletion("empty -2 eigenspace".into()));
    }
    let m = RationalMatrix::from_columns(&columns, n);
    let sol = solve_linear(&m, &h.re)?
        .ok_or_else(|| AtlasError::TripleCompletion("[X, Y] = H has no solution".into()))?;
    let mut y = AlgebraElement::zero(n);
    for (&j, c) in cols.iter().zip(sol) {
        y.re[j] = c;
    }
    let t = Sl2Triple {
        x: x.clone(),
        y,
        h: h.clone(),
    };
    if !t.is_valid(a) {
        return Err(AtlasError::TripleCompletion("triple relations fail".into()));
    }
    Ok(t)
}

/// Basis of the joint centralizer of `X`, `Y` and `H`.
pub fn triple_centralizer(
    a: &ChevalleyAlgebra,
    t: &Sl2Triple,
) -> Result<(Vec<Vec<Rational>>, usize)> {
    let deg = basis_degrees(a, &t.h)?;
    let n = a.dim();
    let zero: Vec<usize> = (0..n).filter(|&i| deg[i] == 0).collect();
    // Columns: b_j in degree 0; rows: [b_j, X] stacked over [b_j, Y].
    let columns: Vec<Vec<Rational>> = zero
        .iter()
        .map(|&j| {
            let mut c = a.ad_basis_apply(j, &t.x.re);
            c.extend(a.ad_basis_apply(j, &t.y.re));
            c
        })
        .collect();
    let m = RationalMatrix::from_columns(&columns, 2 * n);
    let basis: Vec<Vec<Rational>> = m
        .kernel_basis()
        .into_iter()
        .map(|k| {
            let mut v = vec![Rational::zero(); n];
            for (&j, c) in zero.iter().zip(k) {
                v[j] = c;
            }
            v
        })
        .collect();
    let dim = basis.len();
    Ok((basis, dim))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicDecomposition {
    pub k_dim: usize,
    /// `k -> dim A_k` for `k >= 1`, nonzero entries only.
    pub multiplicities: BTreeMap<usize, usize>,
    pub w_dim: usize,
}

impl IsotypicDecomposition {
    /// `3 + dim k + sum (dim A_k)(k+1)`.
    pub fn total_dimension(&self) -> usize {
        3 + self.k_dim
            + self
                .multiplicities
                .iter()
                .map(|(k, m)| m * (k + 1))
                .sum::<usize>()
    }
}

/// Decomposition `g = sl2 + k + sum_k A_k (x) S^k` read off the grading.
pub fn isotypic_decomposition(
    a: &ChevalleyAlgebra,
    t: &Sl2Triple,
) -> Result<IsotypicDecomposition> {
    let deg = basis_degrees(a, &t.h)?;
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    for d in &deg {
        *dims.entry(*d).or_default() += 1;
    }
    let dim_at = |k: i64| dims.get(&k).copied().unwrap_or(0) as i64;
    let top = dims.keys().next_back().copied().unwrap_or(0);
    let k_dim = dim_at(0) - dim_at(2);
    let mut multiplicities = BTreeMap::new();
    for k in 1..=top {
        let mut m = dim_at(k) - dim_at(k + 2);
        if k == 2 {
            m -= 1;
        }
        if m < 0 || k_dim < 0 {
            return Err(AtlasError::Verification(format!(
                "negative multiplicity in degree {k}"
            )));
        }
        if m > 0 {
            multiplicities.insert(k as usize, m as usize);
        }
    }
    let w_dim = multiplicities
        .iter()
        .filter(|(k, _)| **k >= 2)
        .map(|(k, m)| m * (k - 1))
        .sum();
    let d = IsotypicDecomposition {
        k_dim: k_dim as usize,
        multiplicities,
        w_dim,
    };
    if d.total_dimension() != a.dim() {
        return Err(AtlasError::Verification(format!(
            "decomposition accounts for {} of {} dimensions",
            d.total_dimension(),
            a.dim()
        )));
    }
    Ok(d)
}

/// Dimension of the space of matrices commuting with every given matrix.
pub fn commutant_dim(action_matrices: &[RationalMatrix]) -> usize {
    let Some(first) = action_matrices.first() else {
        return 0;
    };
    let d = first.rows();
    if d == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for m in action_matrices {
        for r in 0..d {
            for c in 0..d {
                // (M T - T M)[r][c]; unknown T[i][j] at index i*d + j.
                let mut row = vec![Rational::zero(); d * d];
                for k in 0..d {
                    row[k * d + c] += m.get(r, k);
                    row[r * d + k] -= m.get(k, c);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return d * d;
    }
    d * d - RationalMatrix::from_rows(rows).expect("rectangular").rank()
}

/// Matrices of the centralizer `k` acting on the multiplicity spaces `A_k`,
/// realized as highest-weight vectors `ker ad X` in degree `k` (modulo `X`
/// in degree 2). Only degrees `k >= min_degree` are included.
pub fn k_action_on_highest_weights(
    a: &ChevalleyAlgebra,
    t: &Sl2Triple,
    k_basis: &[Vec<Rational>],
    min_degree: i64,
) -> Result<Vec<RationalMatrix>> {
    let deg = basis_degrees(a, &t.h)?;
    let n = a.dim();
    let top = deg.iter().copied().max().unwrap_or(0);
    // Basis of the model space: for each degree, kernel of ad X on g_k.
    let mut model: Vec<Vec<Rational>> = Vec::new();
    let mut degree2_x: Option<usize> = None;
    for k in min_degree.max(1)..=top {
        let idx: Vec<usize> = (0..n).filter(|&i| deg[i] == k).collect();
        if idx.is_empty() {
            continue;
        }
        let columns: Vec<Vec<Rational>> =
            idx.iter().map(|&j| a.ad_basis_apply(j, &t.x.re)).collect();
        let mut vecs: Vec<Vec<Rational>> = RationalMatrix::from_columns(&columns, n)
            .kernel_basis()
            .into_iter()
            .map(|kv| {
                let mut v = vec![Rational::zero(); n];
                for (&j, c) in idx.iter().zip(kv) {
                    v[j] = c;
                }
                v
            })
            .collect();
        if k == 2 {
            // Put X first and drop a kernel vector it depends on.
            let mut with_x = vec![t.x.re.clone()];
            for v in vecs {
                let mut trial = with_x.clone();
                trial.push(v.clone());
                if RationalMatrix::from_rows(trial)?.rank() == with_x.len() + 1 {
                    with_x.push(v);
                }
            }
            vecs = with_x;
            degree2_x = Some(model.len());
        }
        model.extend(vecs);
    }
    let basis_matrix = RationalMatrix::from_columns(&model, n);
    let keep: Vec<usize> = (0..model.len()).filter(|&i| Some(i) != degree2_x).collect();
    let mut out = Vec::new();
    for z in k_basis {
        let mut m = RationalMatrix::zeros(keep.len(), keep.len());
        for (col, &j) in keep.iter().enumerate() {
            let image = a.bracket_real(z, &model[j]);
            let coords = solve_linear(&basis_matrix, &image)?.ok_or_else(|| {
                AtlasError::Verification("k does not preserve highest-weight vectors".into())
            })?;
            for (row, &i) in keep.iter().enumerate() {
                m.set(row, col, coords[i].clone());
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Rank of the reductive algebra spanned by `k_basis`: the dimension of the
/// centralizer, inside it, of a random element.
pub fn centralizer_rank(
    a: &ChevalleyAlgebra,
    k_basis: &[Vec<Rational>],
    seed: u64,
) -> Result<usize> {
    if k_basis.is_empty() {
        return Ok(0);
    }
    let n = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = k_basis.len();
    for _ in 0..3 {
        let mut z = vec![Rational::zero(); n];
        for v in k_basis {
            let c = q(rng.gen_range(-5..=5));
            for (zi, vi) in z.iter_mut().zip(v) {
                *zi += &c * vi;
            }
        }
        let cols: Vec<Vec<Rational>> = k_basis.iter().map(|v| a.bracket_real(&z, v)).collect();
        let r = RationalMatrix::from_columns(&cols, n).rank();
        best = best.min(k_basis.len() - r);
    }
    Ok(best)
}

/// The full decomposition data for a triple.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleReport {
    pub decomposition: IsotypicDecomposition,
    pub k_rank: usize,
    /// Commutant dimension of `k` acting on `sum_{k>=2} A_k`.
    pub w_commutant_dim: usize,
}

pub fn triple_report(a: &ChevalleyAlgebra, t: &Sl2Triple, seed: u64) -> Result<TripleReport> {
    let decomposition = isotypic_decomposition(a, t)?;
    let (basis, dim) = triple_centralizer(a, t)?;
    if dim != decomposition.k_dim {
        return Err(AtlasError::Verification(format!(
            "centralizer has dimension {dim}, grading predicts {}",
            decomposition.k_dim
        )));
    }
    let k_rank = centralizer_rank(a, &basis, seed)?;
    let action = k_action_on_highest_weights(a, t, &basis, 2)?;
    let w_commutant_dim = if action.is_empty() {
        0
    } else {
        commutant_dim(&action)
    };
    Ok(TripleReport {
        decomposition,
        k_rank,
        w_commutant_dim,
    })
}
