//! Weight multiplicities (Freudenthal) and branching to regular subalgebras.
//!
//! Weights are written in Dynkin labels (fundamental-weight coordinates).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AtlasError, Result};
use crate::linalg::{integer_scaled, Rational, RationalMatrix};
use crate::roots::{Root, RootSystem};

/// Multiplicities of the weights of an irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiplicityTable {
    pub highest_weight: Vec<i64>,
    pub entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiplicityTable {
    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, w: &[i64]) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Checks invariance of the multiplicities under every simple reflection.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        let a = rs.cartan_matrix();
        (0..rs.rank()).all(|i| {
            self.entries.iter().all(|(w, &m)| {
                let r: Vec<i64> = (0..w.len()).map(|j| w[j] - w[i] * a[j][i]).collect();
                self.multiplicity(&r) == m
            })
        })
    }
}

/// Freudenthal's recursion for the irreducible module of highest weight `hw`.
pub fn weight_multiplicities(rs: &RootSystem, hw: &[i64]) -> Result<WeightMultiplicityTable> {
    let n = rs.rank();
    if hw.len() != n {
        return Err(AtlasError::Dimension(format!(
            "weight of length {} for rank {n}",
            hw.len()
        )));
    }
    if hw.iter().any(|&x| x < 0) {
        return Err(AtlasError::NotDominant(hw.to_vec()));
    }
    let a = rs.cartan_matrix();
    let b = rs.symmetric_form();
    let pos = rs.positive_roots();

    // Weights are stored by their depth vector d: mu = hw - sum d_j alpha_j.
    let labels = |d: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|i| hw[i] - (0..n).map(|j| a[i][j] * d[j]).sum::<i64>())
            .collect()
    };
    // |hw + rho|^2 - |mu + rho|^2.
    let gap = |d: &[i64]| -> i64 {
        let lin: i64 = (0..n).map(|j| d[j] * (hw[j] + 1) * b[j][j]).sum();
        lin - rs.inner(d, d)
    };

    let mut mult: HashMap<Root, u64> = HashMap::new();
    mult.insert(vec![0; n], 1);
    let mut level: Vec<Root> = vec![vec![0; n]];
    while !level.is_empty() {
        let mut next: Vec<Root> = Vec::new();
        for d in &level {
            for j in 0..n {
                let mut c = d.clone();
                c[j] += 1;
                if !mult.contains_key(&c) && !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        let mut found = Vec::new();
        for d in next {
            let den = gap(&d);
            if den <= 0 {
                continue;
            }
            let mut num: i64 = 0;
            for r in pos {
                let mut k = 1;
                loop {
                    let shifted: Root = d.iter().zip(r).map(|(x, y)| x - k * y).collect();
                    if shifted.iter().any(|&x| x < 0) {
                        break;
                    }
                    let Some(&m) = mult.get(&shifted) else {
                        k += 1;
                        continue;
                    };
                    // 2 (nu, alpha) with nu in Dynkin labels.
                    let nu = labels(&shifted);
                    let s: i64 = (0..n).map(|j| nu[j] * r[j] * b[j][j]).sum();
                    num += m as i64 * s;
                    k += 1;
                }
            }
            if num == 0 {
                continue;
            }
            if num % den != 0 || num < 0 {
                return Err(AtlasError::Bookkeeping(format!(
                    "non-integral multiplicity {num}/{den}"
                )));
            }
            found.push((d, (num / den) as u64));
        }
        level = found.iter().map(|(d, _)| d.clone()).collect();
        for (d, m) in found {
            mult.insert(d, m);
        }
    }
    let entries = mult.iter().map(|(d, &m)| (labels(d), m)).collect();
    Ok(WeightMultiplicityTable {
        highest_weight: hw.to_vec(),
        entries,
    })
}

/// Weyl's dimension formula.
pub fn weyl_dimension(rs: &RootSystem, hw: &[i64]) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for r in rs.positive_roots() {
        let c = rs.coroot_coefficients(r);
        num *= c.iter().zip(hw).map(|(c, l)| c * (l + 1)).sum::<i64>();
        den *= c.iter().sum::<i64>();
    }
    num / den
}

/// Weights of the adjoint representation: every root once, zero `rank` times.
pub fn adjoint_table(rs: &RootSystem) -> Result<WeightMultiplicityTable> {
    if rs.cartan_type().as_simple().is_some() {
        let hw = rs.dynkin_labels(rs.highest_root());
        return weight_multiplicities(rs, &hw);
    }
    let mut entries = BTreeMap::new();
    entries.insert(vec![0; rs.rank()], rs.rank() as u64);
    for r in rs.positive_roots() {
        let l = rs.dynkin_labels(r);
        entries.insert(l.iter().map(|x| -x).collect(), 1);
        entries.insert(l, 1);
    }
    Ok(WeightMultiplicityTable {
        highest_weight: rs.dynkin_labels(rs.highest_root()),
        entries,
    })
}

/// Restriction matrix `R` with `R[k][i] = <omega_i, beta_k^vee>`: row `k` maps
/// Dynkin labels of `rs` to the `k`-th label of the subsystem.
pub fn restriction_matrix(rs: &RootSystem, subsystem: &[Root]) -> Result<Vec<Vec<i64>>> {
    check_subsystem(rs, subsystem)?;
    Ok(subsystem
        .iter()
        .map(|b| rs.coroot_coefficients(b))
        .collect())
}

fn check_subsystem(rs: &RootSystem, subsystem: &[Root]) -> Result<()> {
    for b in subsystem {
        if b.len() != rs.rank() || !rs.is_root(b) {
            return Err(AtlasError::DependentSubsystem(format!(
                "{b:?} is not a root"
            )));
        }
    }
    if !subsystem.is_empty() {
        let m = RationalMatrix::from_i64_rows(subsystem)?;
        if m.rank() < subsystem.len() {
            return Err(AtlasError::DependentSubsystem(format!(
                "{subsystem:?} is linearly dependent"
            )));
        }
    }
    Ok(())
}

/// One isotypic piece of a branched representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchComponent {
    /// Highest weight for the semi-simple part, in the subsystem's Dynkin labels.
    pub highest_weight: Vec<i64>,
    /// Eigenvalues on a basis of the central torus.
    #[serde(with = "crate::linalg::rational_vec")]
    pub charge: Vec<Rational>,
    pub multiplicity: u64,
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingResult {
    pub components: Vec<BranchComponent>,
}

impl BranchingResult {
    pub fn total_dimension(&self) -> u64 {
        self.components
            .iter()
            .map(|c| c.multiplicity * c.dimension)
            .sum()
    }

    /// Component dimensions with multiplicity, largest first.
    pub fn dimensions(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .components
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.dimension, c.multiplicity as usize))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Branch a representation of `rs` to the reductive subalgebra spanned by the
/// Cartan subalgebra and the root spaces of the subsystem with simple roots
/// `subsystem`.
pub fn branch(
    rs: &RootSystem,
    table: &WeightMultiplicityTable,
    subsystem: &[Root],
) -> Result<BranchingResult> {
    check_subsystem(rs, subsystem)?;
    let res = restriction_matrix(rs, subsystem)?;
    let n = rs.rank();

    // Torus directions: coweights killed by every subsystem root.
    let torus: Vec<Vec<BigInt>> = if subsystem.is_empty() {
        (0..n)
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect()
    } else {
        RationalMatrix::from_i64_rows(subsystem)?
            .kernel_basis()
            .iter()
            .map(|v| integer_scaled(v))
            .collect()
    };

    let mut by_charge: BTreeMap<Vec<Rational>, HashMap<Vec<i64>, i64>> = BTreeMap::new();
    for (w, &m) in &table.entries {
        let sub: Vec<i64> = res
            .iter()
            .map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum())
            .collect();
        let root_coords = rs.weight_to_root_coords(w);
        let charge: Vec<Rational> = torus
            .iter()
            .map(|t| {
                t.iter()
                    .zip(&root_coords)
                    .fold(Rational::zero(), |acc, (a, c)| {
                        acc + c * Rational::from(a.clone())
                    })
            })
            .collect();
        *by_charge.entry(charge).or_default().entry(sub).or_default() += m as i64;
    }

    let sub_rs = if subsystem.is_empty() {
        None
    } else {
        Some(rs.subsystem_root_system(subsystem)?)
    };
    let height = |w: &[i64]| -> Rational {
        match &sub_rs {
            Some(s) => s.weight_to_root_coords(w).iter().sum(),
            None => Rational::zero(),
        }
    };

    let mut cache: HashMap<Vec<i64>, WeightMultiplicityTable> = HashMap::new();
    let mut components = Vec::new();
    for (charge, mut weights) in by_charge {
        let mut found: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        loop {
            weights.retain(|_, m| *m != 0);
            let Some(top) = weights
                .keys()
                .max_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)))
                .cloned()
            else {
                break;
            };
            if top.iter().any(|&x| x < 0) {
                return Err(AtlasError::Bookkeeping(format!(
                    "highest remaining weight {top:?} is not dominant"
                )));
            }
            let count = weights[&top];
            let piece = match &sub_rs {
                Some(s) => {
                    if !cache.contains_key(&top) {
                        cache.insert(top.clone(), weight_multiplicities(s, &top)?);
                    }
                    &cache[&top]
                }
                None => cache
                    .entry(top.clone())
                    .or_insert_with(|| WeightMultiplicityTable {
                        highest_weight: vec![],
                        entries: [(vec![], 1)].into_iter().collect(),
                    }),
            };
            for (w, &m) in &piece.entries {
                let slot = weights.entry(w.clone()).or_default();
                *slot -= count * m as i64;
                if *slot < 0 {
                    return Err(AtlasError::Bookkeeping(format!(
                        "negative residual multiplicity at {w:?}"
                    )));
                }
            }
            *found.entry(top).or_default() += count as u64;
        }
        for (hw, multiplicity) in found {
            let dimension = cache[&hw].dimension();
            components.push(BranchComponent {
                highest_weight: hw,
                charge: charge.clone(),
                multiplicity,
                dimension,
            });
        }
    }
    let result = BranchingResult { components };
    if result.total_dimension() != table.dimension() {
        return Err(AtlasError::Bookkeeping(format!(
            "dimension {} after branching, expected {}",
            result.total_dimension(),
            table.dimension()
        )));
    }
    Ok(result)
}

/// Decomposition of the adjoint representation under a regular subalgebra.
pub fn branch_adjoint(rs: &RootSystem, subsystem: &[Root]) -> Result<BranchingResult> {
    branch(rs, &adjoint_table(rs)?, subsystem)
}

/// Weyl dimension as a machine integer, when it fits.
pub fn weyl_dimension_u64(rs: &RootSystem, hw: &[i64]) -> Option<u64> {
    weyl_dimension(rs, hw).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap())
    }

    #[test]
    fn sl2_adjoint() {
        let t = weight_multiplicities(&rs("A1"), &[2]).unwrap();
        let expect: BTreeMap<Vec<i64>, u64> = [(vec![2], 1), (vec![0], 1), (vec![-2], 1)]
            .into_iter()
            .collect();
        assert_eq!(t.entries, expect);
    }

    #[test]
    fn adjoint_tables() {
        for (s, zero) in [("A2", 2), ("G2", 2), ("B3", 3), ("F4", 4), ("E6", 6)] {
            let r = rs(s);
            let t = adjoint_table(&r).unwrap();
            assert_eq!(t.dimension() as usize, r.dimension(), "{s}");
            assert_eq!(t.multiplicity(&vec![0; r.rank()]), zero);
            assert!(t.is_weyl_invariant(&r));
            assert_eq!(
                weyl_dimension(&r, &t.highest_weight),
                BigInt::from(r.dimension())
            );
        }
    }

    #[test]
    fn non_dominant_rejected() {
        assert!(matches!(
            weight_multiplicities(&rs("A2"), &[1, -1]),
            Err(AtlasError::NotDominant(_))
        ));
    }

    #[test]
    fn small_representations() {
        let a2 = rs("A2");
        let t = weight_multiplicities(&a2, &[1, 1]).unwrap();
        assert_eq!(t.dimension(), 8);
        let t = weight_multiplicities(&a2, &[2, 0]).unwrap();
        assert_eq!(t.dimension(), 6);
        let t = weight_multiplicities(&a2, &[2, 2]).unwrap();
        assert_eq!(t.dimension(), 27);
        assert_eq!(t.multiplicity(&[0, 0]), 3);
        let g2 = rs("G2");
        let t = weight_multiplicities(&g2, &[1, 0]).unwrap();
        assert_eq!(t.dimension(), 7);
    }

    #[test]
    fn restriction_examples() {
        let a2 = rs("A2");
        assert_eq!(
            restriction_matrix(&a2, &[vec![1, 0], vec![0, 1]]).unwrap(),
            vec![vec![1, 0], vec![0, 1]]
        );
        let r = restriction_matrix(&a2, &[vec![1, 0]]).unwrap();
        let alpha2 = a2.dynkin_labels(&[0, 1]);
        assert_eq!(
            r[0].iter().zip(&alpha2).map(|(a, b)| a * b).sum::<i64>(),
            -1
        );
        assert!(matches!(
            restriction_matrix(&a2, &[vec![1, 0], vec![2, 0]]),
            Err(AtlasError::DependentSubsystem(_))
        ));
        let g2 = rs("G2");
        let r = restriction_matrix(&g2, &[vec![0, 1], vec![3, 1]]).unwrap();
        assert_eq!(r, vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn branching_examples() {
        let a1 = rs("A1");
        let b = branch_adjoint(&a1, &[vec![1]]).unwrap();
        assert_eq!(b.components.len(), 1);
        assert_eq!(b.components[0].highest_weight, vec![2]);

        let g2 = rs("G2");
        let b = branch_adjoint(&g2, &[vec![0, 1], vec![3, 1]]).unwrap();
        assert_eq!(b.dimensions(), vec![8, 3, 3]);

        let a2 = rs("A2");
        let b = branch_adjoint(&a2, &[vec![1, 0]]).unwrap();
        assert_eq!(b.dimensions(), vec![3, 2, 2, 1]);
        let charges: Vec<_> = b.components.iter().map(|c| c.charge.clone()).collect();
        assert!(charges.contains(&vec![q(1)]) && charges.contains(&vec![q(-1)]));

        let full = branch_adjoint(&a2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(full.components.len(), 1);
        assert_eq!(full.components[0].highest_weight, vec![1, 1]);

        let torus = branch_adjoint(&a2, &[]).unwrap();
        assert_eq!(torus.total_dimension(), 8);
        assert!(torus.components.iter().all(|c| c.dimension == 1));
    }

    #[test]
    fn e8_centralizer_branching() {
        let e8 = rs("E8");
        let h = e8.coweight_element(&[1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        let sub = e8.root_centralizer_subsystem(&h);
        let b = branch_adjoint(&e8, &sub.simple_roots).unwrap();
        assert_eq!(b.total_dimension(), 248);
        let mut d = b.dimensions();
        d.sort_unstable();
        assert_eq!(d, vec![1, 14, 14, 64, 64, 91]);
    }
}
