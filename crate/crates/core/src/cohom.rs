//! Cohomogeneity of the compact real form acting on an adjoint orbit.
//!
//! A point of the complex orbit is sampled as `a n x0` with `n` a product of
//! root unipotents `exp(t ad e_alpha)` over positive roots (`t` a Gaussian
//! integer) and `a` a positive rational torus element. Since the complex group
//! factors as `G A N`, the compact orbits through such points exhaust the
//! complex orbit. All arithmetic is exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, ChevalleyAlgebra};
use crate::error::Result;
use crate::linalg::{integer_scaled, q, IntegerMatrix, Rational, RationalMatrix};
use crate::nilpotent::{label_representative, OrbitLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub num_samples: usize,
    /// Number of root unipotent factors; `None` means twice the number of
    /// positive roots.
    pub unipotent_steps: Option<usize>,
    pub coefficient_range: i64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            num_samples: 5,
            unipotent_steps: None,
            coefficient_range: 3,
        }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn steps(&self, a: &ChevalleyAlgebra) -> usize {
        self.unipotent_steps.unwrap_or(2 * a.num_positive())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomReport {
    pub cohomogeneity: usize,
    pub orbit_real_dim: usize,
    /// `(seed, real dimension of the compact orbit through the sample)`.
    pub samples: Vec<(u64, usize)>,
    pub samples_agree: bool,
    pub certification: String,
}

const CERTIFICATION: &str =
    "exact rank at every sampled point; the cohomogeneity is an upper bound \
     that is attained for generic samples";

impl CohomReport {
    fn from_samples(orbit_real_dim: usize, samples: Vec<(u64, usize)>) -> Self {
        let max = samples.iter().map(|s| s.1).max().unwrap_or(0);
        let samples_agree = samples.iter().all(|s| s.1 == max);
        Self {
            cohomogeneity: orbit_real_dim - max,
            orbit_real_dim,
            samples,
            samples_agree,
            certification: CERTIFICATION.into(),
        }
    }

    /// Pool the samples of two reports on the same orbit.
    pub fn merge(&self, other: &CohomReport) -> CohomReport {
        let mut samples = self.samples.clone();
        samples.extend(other.samples.iter().copied());
        Self::from_samples(self.orbit_real_dim, samples)
    }

    pub fn max_sample_dim(&self) -> usize {
        self.samples.iter().map(|s| s.1).max().unwrap_or(0)
    }
}

/// `exp(t ad b_i) x` for a root vector `b_i` and complex `t = t.0 + t.1 i`.
pub fn apply_root_unipotent(
    a: &ChevalleyAlgebra,
    x: &AlgebraElement,
    basis_index: usize,
    t: (&Rational, &Rational),
) -> AlgebraElement {
    let mut out = x.clone();
    let mut term = x.clone();
    let mut k = 1i64;
    loop {
        let adv = AlgebraElement {
            re: a.ad_basis_apply(basis_index, &term.re),
            im: a.ad_basis_apply(basis_index, &term.im),
        };
        if adv.is_zero() {
            break;
        }
        term = adv
            .scale_complex(t.0, t.1)
            .scale(&Rational::new(One::one(), k.into()));
        out = out.add(&term);
        k += 1;
    }
    out
}

/// A random point `a n x0` of the complex orbit through `x0`.
pub fn sample_orbit_point(
    a: &ChevalleyAlgebra,
    x0: &AlgebraElement,
    cfg: &SampleConfig,
) -> AlgebraElement {
    let steps = cfg.steps(a);
    if steps == 0 {
        return x0.clone();
    }
    let r = cfg.coefficient_range.max(1);
    let np = a.num_positive();
    let rank = a.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut x = x0.clone();
    for s in 0..steps {
        let k = if s < np { s } else { rng.gen_range(0..np) };
        let t = (q(rng.gen_range(-r..=r)), q(rng.gen_range(-r..=r)));
        if t.0.is_zero() && t.1.is_zero() {
            continue;
        }
        x = apply_root_unipotent(a, &x, rank + k, (&t.0, &t.1));
    }
    let torus: Vec<Rational> = (0..rank)
        .map(|_| Rational::new(rng.gen_range(1..=r).into(), rng.gen_range(1..=r).into()))
        .collect();
    for i in rank..a.dim() {
        let root = a.basis_root(i).expect("root vector");
        let mut c = Rational::one();
        for (ti, &e) in torus.iter().zip(root) {
            for _ in 0..e.abs() {
                c = if e > 0 { c * ti } else { c / ti };
            }
        }
        x.re[i] *= &c;
        x.im[i] *= &c;
    }
    x
}

/// Real dimension of the orbit of the compact form through `x`: the rank of
/// `{[u, x] : u in the compact basis}` inside the realification.
pub fn real_orbit_dim(a: &ChevalleyAlgebra, x: &AlgebraElement) -> usize {
    if x.is_zero() {
        return 0;
    }
    compact_tangent_matrix(a, x).rank()
}

/// Rows `[u, x]` (realified, integer-scaled) for `u` in the compact basis.
pub fn compact_tangent_matrix(a: &ChevalleyAlgebra, x: &AlgebraElement) -> IntegerMatrix {
    let n = a.dim();
    let scaled = integer_scaled(&x.realified());
    let (xr, xi) = scaled.split_at(n);
    let ad = |i: usize, v: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for &(k, c) in a.bracket_basis(i, j) {
                out[k] += vj * c;
            }
        }
        out
    };
    // [b_i, x] as (re, im).
    let bx = |i: usize| (ad(i, xr), ad(i, xi));
    let combine = |parts: &[(i64, bool, usize)]| -> Vec<BigInt> {
        // Each part is coefficient * (i if flag) * b_index.
        let mut re = vec![BigInt::zero(); n];
        let mut im = vec![BigInt::zero(); n];
        for &(c, imag, i) in parts {
            let (r, m) = bx(i);
            for k in 0..n {
                if imag {
                    re[k] -= &m[k] * c;
                    im[k] += &r[k] * c;
                } else {
                    re[k] += &r[k] * c;
                    im[k] += &m[k] * c;
                }
            }
        }
        re.into_iter().chain(im).collect()
    };
    let rank = a.rank();
    let np = a.num_positive();
    let mut rows = Vec::with_capacity(n);
    for j in 0..rank {
        rows.push(combine(&[(1, true, j)]));
    }
    for k in 0..np {
        let (p, m) = (rank + k, rank + np + k);
        rows.push(combine(&[(1, false, p), (-1, false, m)]));
        rows.push(combine(&[(1, true, p), (1, true, m)]));
    }
    IntegerMatrix::from_rows(rows).expect("rectangular")
}

/// Cohomogeneity of the compact form on the complex orbit through `x0`.
pub fn cohom_adjoint(
    a: &ChevalleyAlgebra,
    x0: &AlgebraElement,
    cfg: &SampleConfig,
) -> Result<CohomReport> {
    let orbit_real_dim = 2 * a.orbit_dim(x0);
    if orbit_real_dim == 0 {
        return Ok(CohomReport::from_samples(0, vec![(cfg.seed, 0)]));
    }
    let samples = (0..cfg.num_samples.max(1) as u64)
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i);
            let c = SampleConfig {
                seed,
                ..cfg.clone()
            };
            let x = sample_orbit_point(a, x0, &c);
            (seed, real_orbit_dim(a, &x))
        })
        .collect();
    Ok(CohomReport::from_samples(orbit_real_dim, samples))
}

/// Cohomogeneity of a linear action given by a spanning set of its Lie
/// algebra acting on a rational vector space of dimension `rep_dim`.
pub fn cohom_linear_rep(
    action_matrices: &[RationalMatrix],
    rep_dim: usize,
    cfg: &SampleConfig,
) -> CohomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let r = cfg.coefficient_range.max(1);
    let samples = (0..cfg.num_samples.max(1) as u64)
        .map(|i| {
            let v: Vec<Rational> = (0..rep_dim).map(|_| q(rng.gen_range(-r..=r))).collect();
            let cols: Vec<Vec<Rational>> = action_matrices.iter().map(|m| m.mul_vec(&v)).collect();
            let rank = if cols.is_empty() {
                0
            } else {
                RationalMatrix::from_rows(cols).expect("rectangular").rank()
            };
            (cfg.seed.wrapping_add(i), rank)
        })
        .collect();
    CohomReport::from_samples(rep_dim, samples)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub chain: Vec<(String, usize)>,
    pub strictly_increasing: bool,
}

/// Cohomogeneities along a chain of orbits ordered by closure.
pub fn check_monotonicity(
    a: &ChevalleyAlgebra,
    labels: &[OrbitLabel],
    cfg: &SampleConfig,
) -> Result<MonotonicityReport> {
    let mut chain = Vec::new();
    for l in labels {
        let rep = label_representative(a, l, cfg.seed)?;
        chain.push((l.to_string(), cohom_adjoint(a, &rep.x, cfg)?.cohomogeneity));
    }
    let strictly_increasing = chain.windows(2).all(|w| w[0].1 < w[1].1);
    Ok(MonotonicityReport {
        chain,
        strictly_increasing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotent::{classical_label, Partition};
    use crate::roots::CartanType;

    fn alg(s: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::from_type(&s.parse::<CartanType>().unwrap())
    }

    #[test]
    fn unipotent_examples() {
        let a = alg("A1");
        let h = AlgebraElement::basis(3, 0);
        let cfg = SampleConfig {
            unipotent_steps: Some(0),
            ..SampleConfig::default()
        };
        assert_eq!(sample_orbit_point(&a, &h, &cfg), h);
        let y = apply_root_unipotent(&a, &h, 1, (&q(1), &q(0)));
        assert_eq!(y, AlgebraElement::real(vec![q(1), q(-2), q(0)]));
    }

    #[test]
    fn samples_stay_on_orbit() {
        let a = alg("B2");
        let x = AlgebraElement::basis(a.dim(), 0).add(&AlgebraElement::basis(a.dim(), 3));
        for seed in 0..3 {
            let y = sample_orbit_point(&a, &x, &SampleConfig::with_seed(seed));
            assert_eq!(a.centralizer_dim(&y), a.centralizer_dim(&x));
        }
    }

    #[test]
    fn real_orbit_dims() {
        let a = alg("A1");
        assert_eq!(real_orbit_dim(&a, &AlgebraElement::zero(3)), 0);
        assert_eq!(real_orbit_dim(&a, &AlgebraElement::basis(3, 1)), 3);
        assert_eq!(real_orbit_dim(&a, &AlgebraElement::basis(3, 0)), 2);
    }

    #[test]
    fn minimal_orbits_have_cohomogeneity_one() {
        for s in ["A1", "A2", "G2"] {
            let a = alg(s);
            let theta = a.root_system().highest_root().clone();
            let x = AlgebraElement::basis(a.dim(), a.root_vector(&theta).unwrap());
            let r = cohom_adjoint(&a, &x, &SampleConfig::default()).unwrap();
            assert_eq!(r.cohomogeneity, 1, "{s}");
            assert!(r.samples.iter().all(|s| s.1 <= r.orbit_real_dim));
        }
    }

    #[test]
    fn regular_a2_and_c3() {
        let a = alg("A2");
        let ty: CartanType = "A2".parse().unwrap();
        let l = classical_label(&ty, Partition::new(vec![3])).unwrap();
        let rep = label_representative(&a, &l, 1).unwrap();
        assert_eq!(
            cohom_adjoint(&a, &rep.x, &SampleConfig::default())
                .unwrap()
                .cohomogeneity,
            4
        );
        let scaled = rep.x.scale(&q(4));
        assert_eq!(
            cohom_adjoint(&a, &scaled, &SampleConfig::default())
                .unwrap()
                .cohomogeneity,
            4
        );

        let a = alg("C3");
        let ty: CartanType = "C3".parse().unwrap();
        let l = classical_label(&ty, "2,2,1,1".parse().unwrap()).unwrap();
        let rep = label_representative(&a, &l, 1).unwrap();
        assert_eq!(
            cohom_adjoint(&a, &rep.x, &SampleConfig::default())
                .unwrap()
                .cohomogeneity,
            2
        );
    }

    #[test]
    fn linear_reps() {
        let cfg = SampleConfig::default();
        let zero = RationalMatrix::zeros(3, 3);
        assert_eq!(cohom_linear_rep(&[zero], 3, &cfg).cohomogeneity, 3);
        let rot = RationalMatrix::from_i64_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
        assert_eq!(cohom_linear_rep(&[rot], 2, &cfg).cohomogeneity, 1);
        // so(3) acting diagonally on R^3 + R^3.
        let gens = [(0, 1), (0, 2), (1, 2)].map(|(i, j)| {
            let mut m = RationalMatrix::zeros(6, 6);
            for off in [0, 3] {
                m.set(i + off, j + off, q(1));
                m.set(j + off, i + off, q(-1));
            }
            m
        });
        assert_eq!(cohom_linear_rep(&gens, 6, &cfg).cohomogeneity, 3);
    }

    #[test]
    fn monotone_chains() {
        let ty: CartanType = "C2".parse().unwrap();
        let a = ChevalleyAlgebra::from_type(&ty);
        let chain: Vec<OrbitLabel> = ["2,1,1", "2,2", "4"]
            .iter()
            .map(|s| classical_label(&ty, s.parse().unwrap()).unwrap())
            .collect();
        let r = check_monotonicity(&a, &chain, &SampleConfig::default()).unwrap();
        assert!(r.strictly_increasing, "{:?}", r.chain);
        let r = check_monotonicity(&a, &chain[..1], &SampleConfig::default()).unwrap();
        assert!(r.strictly_increasing);
    }

    #[test]
    fn pooled_samples_never_decrease() {
        let a = alg("A2");
        let ty: CartanType = "A2".parse().unwrap();
        let l = classical_label(&ty, Partition::new(vec![2, 1])).unwrap();
        let rep = label_representative(&a, &l, 1).unwrap();
        let r1 = cohom_adjoint(&a, &rep.x, &SampleConfig::with_seed(10)).unwrap();
        let r2 = cohom_adjoint(&a, &rep.x, &SampleConfig::with_seed(20)).unwrap();
        let m = r1.merge(&r2);
        assert!(m.max_sample_dim() >= r1.max_sample_dim().max(r2.max_sample_dim()));
    }
}
