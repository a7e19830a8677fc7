//! Painted Dynkin diagrams: flag manifolds `G/K`, their isotropy
//! representations and the cohomogeneity of the semi-simple orbits they label.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::ChevalleyAlgebra;
use crate::cohom::{cohom_adjoint, CohomReport, SampleConfig};
use crate::error::{AtlasError, Result};
use crate::roots::{CartanType, Family, Root, RootSystem, SimpleType};

/// A Dynkin diagram with a set of crossed nodes (numbered from 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaintedDiagram {
    pub cartan_type: CartanType,
    pub crossed: Vec<usize>,
}

impl PaintedDiagram {
    pub fn new(cartan_type: CartanType, crossed: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = crossed.into_iter().collect();
        let rank = cartan_type.rank();
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > rank) {
            return Err(AtlasError::InvalidLabel(format!(
                "node {bad} out of range for {cartan_type}"
            )));
        }
        Ok(Self {
            cartan_type,
            crossed: set.into_iter().collect(),
        })
    }

    pub fn length(&self) -> usize {
        self.crossed.len()
    }

    fn is_crossed(&self, i: usize) -> bool {
        self.crossed.contains(&(i + 1))
    }

    /// Marks of the semi-simple element: 1 on crossed nodes, 0 elsewhere.
    pub fn marks(&self) -> Vec<i64> {
        (0..self.cartan_type.rank())
            .map(|i| self.is_crossed(i) as i64)
            .collect()
    }

    fn crossed_coefficients(&self, r: &[i64]) -> Vec<i64> {
        self.crossed.iter().map(|&i| r[i - 1]).collect()
    }
}

impl fmt::Display for PaintedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.crossed.iter().map(|i| i.to_string()).collect();
        write!(f, "{}{{{}}}", self.cartan_type, nodes.join(","))
    }
}

/// Roots of the isotropy representation: nonzero on some crossed node.
pub fn isotropy_roots(rs: &RootSystem, pd: &PaintedDiagram) -> Vec<Root> {
    let mut out = Vec::new();
    for r in rs.positive_roots() {
        if pd.crossed_coefficients(r).iter().any(|&c| c != 0) {
            out.push(r.clone());
            out.push(r.iter().map(|x| -x).collect());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropySummary {
    /// Positive roots of the isotropy representation.
    pub m_roots: Vec<Root>,
    /// Classes of `m_roots` joined by differences that are roots of `k`.
    pub kostant_classes: Vec<Vec<Root>>,
    pub num_summands: usize,
}

/// Irreducible summands of the isotropy representation by Kostant's
/// criterion, one per class of positive isotropy roots.
pub fn kostant_summands(rs: &RootSystem, pd: &PaintedDiagram) -> IsotropySummary {
    let m_roots: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|r| pd.crossed_coefficients(r).iter().any(|&c| c != 0))
        .cloned()
        .collect();
    let is_k_root = |d: &[i64]| rs.is_root(d) && pd.crossed_coefficients(d).iter().all(|&c| c == 0);
    let n = m_roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let d: Root = m_roots[i]
                .iter()
                .zip(&m_roots[j])
                .map(|(a, b)| a - b)
                .collect();
            if is_k_root(&d) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut classes: Vec<Vec<Root>> = Vec::new();
    let mut roots_of: std::collections::BTreeMap<usize, usize> = Default::default();
    for i in 0..n {
        let p = find(&mut parent, i);
        let idx = *roots_of.entry(p).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(m_roots[i].clone());
    }
    IsotropySummary {
        num_summands: classes.len(),
        m_roots,
        kostant_classes: classes,
    }
}

/// Cohomogeneity of the adjoint orbit through the element pairing to 1 with
/// the crossed simple roots and 0 with the others.
pub fn flag_cohom(
    a: &ChevalleyAlgebra,
    pd: &PaintedDiagram,
    cfg: &SampleConfig,
) -> Result<CohomReport> {
    let h = a.root_system().coweight_element(&pd.marks())?;
    cohom_adjoint(a, &a.cartan_element(&h.coroot), cfg)
}

/// Permutations of the nodes preserving the Cartan matrix.
pub fn diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    let a = rs.cartan_matrix();
    let n = rs.rank();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(a: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = a.len();
        let i = perm.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            if (0..i).all(|k| a[i][k] == a[j][perm[k]] && a[k][i] == a[perm[k]][j])
                && a[i][i] == a[j][j]
            {
                used[j] = true;
                perm.push(j);
                rec(a, perm, used, out);
                perm.pop();
                used[j] = false;
            }
        }
    }
    rec(a, &mut perm, &mut used, &mut out);
    out
}

/// One painted diagram of each length-`len` node set up to diagram symmetry.
pub fn diagram_representatives(t: &CartanType, len: usize) -> Vec<PaintedDiagram> {
    let rs = RootSystem::new(t);
    let autos = diagram_automorphisms(&rs);
    let n = t.rank();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for subset in subsets(n, len) {
        let canonical = autos
            .iter()
            .map(|p| {
                let mut s: Vec<usize> = subset.iter().map(|&i| p[i]).collect();
                s.sort_unstable();
                s
            })
            .min()
            .expect("identity");
        if seen.insert(canonical.clone()) {
            out.push(
                PaintedDiagram::new(t.clone(), canonical.iter().map(|i| i + 1))
                    .expect("nodes in range"),
            );
        }
    }
    out
}

/// All `k`-element subsets of `0..n`, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Simple types of rank at most `max_rank`, each isomorphism class once:
/// `A_n (n>=1)`, `B_n (n>=2)`, `C_n (n>=3)`, `D_n (n>=4)`, `E_6..8`, `F_4`, `G_2`.
pub fn simple_types_up_to(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for (family, min) in [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
    ] {
        for n in min..=max_rank {
            out.push(SimpleType::new(family, n).expect("valid"));
        }
    }
    for (family, n) in [
        (Family::G, 2),
        (Family::F, 4),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
    ] {
        if n <= max_rank {
            out.push(SimpleType::new(family, n).expect("valid"));
        }
    }
    out
}

/// Length-one painted diagrams over simple types of rank at most `max_rank`
/// whose semi-simple orbit has cohomogeneity `target`. Longer diagrams have
/// at least three isotropy summands and are not scanned.
pub fn classify_ss_low_cohom(
    max_rank: usize,
    target: usize,
    cfg: &SampleConfig,
) -> Result<Vec<PaintedDiagram>> {
    let mut out = Vec::new();
    for s in simple_types_up_to(max_rank) {
        let t = CartanType::simple(s);
        let a = ChevalleyAlgebra::from_type(&t);
        for pd in diagram_representatives(&t, 1) {
            if flag_cohom(&a, &pd, cfg)?.cohomogeneity == target {
                out.push(pd);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(t: &str, nodes: &[usize]) -> PaintedDiagram {
        PaintedDiagram::new(t.parse().unwrap(), nodes.iter().copied()).unwrap()
    }

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(&t.parse().unwrap())
    }

    #[test]
    fn isotropy_examples() {
        let a2 = rs("A2");
        assert_eq!(isotropy_roots(&a2, &pd("A2", &[1, 2])).len(), 6);
        let m = isotropy_roots(&a2, &pd("A2", &[1]));
        let expect: Vec<Root> = vec![vec![1, 0], vec![-1, 0], vec![1, 1], vec![-1, -1]];
        assert_eq!(m, expect);
        let c2 = rs("C2");
        assert_eq!(isotropy_roots(&c2, &pd("C2", &[1])).len(), 6);
        assert!(PaintedDiagram::new("A2".parse().unwrap(), [3]).is_err());
    }

    #[test]
    fn summand_examples() {
        assert_eq!(kostant_summands(&rs("A2"), &pd("A2", &[1])).num_summands, 1);
        assert_eq!(kostant_summands(&rs("C2"), &pd("C2", &[1])).num_summands, 2);
        assert!(kostant_summands(&rs("B2"), &pd("B2", &[1, 2])).num_summands >= 3);
    }

    #[test]
    fn summands_match_crossed_coefficient_vectors() {
        for t in ["B3", "C3", "G2", "F4", "A4", "D4"] {
            let r = rs(t);
            for len in 1..=2 {
                for d in diagram_representatives(&t.parse().unwrap(), len) {
                    let s = kostant_summands(&r, &d);
                    let distinct: BTreeSet<Vec<i64>> = s
                        .m_roots
                        .iter()
                        .map(|x| d.crossed_coefficients(x))
                        .collect();
                    assert_eq!(s.num_summands, distinct.len(), "{d}");
                }
            }
        }
    }

    #[test]
    fn representatives_respect_symmetry() {
        let nodes = |t: &str| -> Vec<Vec<usize>> {
            diagram_representatives(&t.parse().unwrap(), 1)
                .into_iter()
                .map(|d| d.crossed)
                .collect()
        };
        assert_eq!(nodes("A5"), [[1], [2], [3]]);
        assert_eq!(nodes("D4"), [[1], [2]]);
        assert_eq!(nodes("D5"), [[1], [2], [3], [4]]);
        assert_eq!(nodes("E6"), [[1], [2], [3], [4]]);
        assert_eq!(nodes("B3"), [[1], [2], [3]]);
        assert_eq!(diagram_automorphisms(&rs("D4")).len(), 6);
    }

    #[test]
    fn flag_examples() {
        let cfg = SampleConfig::default();
        let c = |t: &str, n: &[usize]| {
            let a = ChevalleyAlgebra::from_type(&t.parse().unwrap());
            flag_cohom(&a, &pd(t, n), &cfg).unwrap().cohomogeneity
        };
        assert_eq!(c("A3", &[1]), 1);
        assert_eq!(c("C3", &[1]), 2);
        assert!(c("B2", &[1, 2]) >= 3);
        assert!(c("C3", &[2]) >= 3);
    }

    #[test]
    fn hermitian_symmetric_ranks() {
        let cfg = SampleConfig::default();
        let cases: &[(&str, usize, usize)] = &[
            ("A3", 2, 2),
            ("A4", 2, 2),
            ("B3", 1, 2),
            ("C3", 3, 3),
            ("D4", 1, 2),
            ("D5", 5, 2),
            ("D6", 6, 3),
        ];
        for &(t, node, rank) in cases {
            let a = ChevalleyAlgebra::from_type(&t.parse().unwrap());
            assert_eq!(
                flag_cohom(&a, &pd(t, &[node]), &cfg).unwrap().cohomogeneity,
                rank,
                "{t} {node}"
            );
        }
    }
}
