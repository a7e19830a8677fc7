//! Nilpotent orbits: partitions for classical types, weighted Dynkin
//! diagrams, closure order, and explicit representatives.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, ChevalleyAlgebra};
use crate::error::{AtlasError, Result};
use crate::linalg::q;
use crate::roots::{CartanElement, CartanType, Family, RootSystem, SimpleType};

/// Jordan-block sizes, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn dual(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        Partition::new(
            (1..=max)
                .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut s = 0;
        (0..len)
            .map(|i| {
                s += self.parts.get(i).copied().unwrap_or(0);
                s
            })
            .collect()
    }

    /// Multiset of eigenvalues of the neutral element of an sl2 acting with
    /// these block sizes, sorted decreasingly.
    fn neutral_eigenvalues(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&p| {
                let p = p as i64;
                (0..p).map(move |k| p - 1 - 2 * k)
            })
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = AtlasError;

    /// Accepts `2,2,1,1`, `(2,2,1,1)`, `2^2,1^2` or `2^2 1^2`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || AtlasError::InvalidPartition(s.to_string());
        let mut parts = Vec::new();
        for tok in body.split([',', ' ']).filter(|t| !t.is_empty()) {
            let (p, e) = match tok.split_once('^') {
                Some((p, e)) => (p, e.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let p: usize = p.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat_n(p, e));
        }
        if parts.is_empty() {
            return Err(bad());
        }
        Ok(Partition::new(parts))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightedDynkinDiagram {
    pub marks: Vec<i64>,
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.marks {
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Name of a nilpotent orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrbitLabel {
    /// A partition; `very_even` marks the D-type partitions naming two orbits.
    Classical {
        partition: Partition,
        very_even: bool,
    },
    /// An exceptional orbit given by its Bala-Carter name and diagram.
    Exceptional {
        name: String,
        diagram: WeightedDynkinDiagram,
    },
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Classical {
                partition,
                very_even,
            } => {
                write!(f, "{partition}")?;
                if *very_even {
                    write!(f, " I/II")?;
                }
                Ok(())
            }
            OrbitLabel::Exceptional { name, diagram } => write!(f, "{name} [{diagram}]"),
        }
    }
}

/// Size of the defining representation for a classical simple type.
fn natural_size(t: SimpleType) -> Option<usize> {
    let n = t.rank;
    match t.family {
        Family::A => Some(n + 1),
        Family::B => Some(2 * n + 1),
        Family::C | Family::D => Some(2 * n),
        _ => None,
    }
}

fn classical(t: &CartanType) -> Result<SimpleType> {
    match t.as_simple() {
        Some(s) if s.is_classical() => Ok(s),
        _ => Err(AtlasError::Unsupported(format!(
            "{t} is not a simple classical type"
        ))),
    }
}

fn simple(t: &CartanType) -> Result<SimpleType> {
    t.as_simple()
        .ok_or_else(|| AtlasError::Unsupported(format!("{t} is not simple")))
}

pub fn is_valid_partition(t: SimpleType, p: &Partition) -> bool {
    if natural_size(t) != Some(p.total()) {
        return false;
    }
    let forbidden_parity = match t.family {
        Family::A => return true,
        Family::B | Family::D => 0,
        Family::C => 1,
        _ => return false,
    };
    p.parts
        .iter()
        .filter(|&&k| k % 2 == forbidden_parity)
        .all(|&k| p.multiplicity(k).is_multiple_of(2))
}

/// Type D partitions with only even parts, each with even multiplicity.
pub fn is_very_even(t: SimpleType, p: &Partition) -> bool {
    t.family == Family::D
        && p.parts
            .iter()
            .all(|&k| k % 2 == 0 && p.multiplicity(k).is_multiple_of(2))
}

pub fn valid_partitions(t: &CartanType) -> Result<Vec<Partition>> {
    let s = classical(t)?;
    let n = natural_size(s).expect("classical");
    Ok(Partition::all(n)
        .into_iter()
        .filter(|p| is_valid_partition(s, p))
        .collect())
}

pub fn classical_label(t: &CartanType, p: Partition) -> Result<OrbitLabel> {
    let s = classical(t)?;
    if !is_valid_partition(s, &p) {
        return Err(AtlasError::InvalidPartition(format!("{p} for {t}")));
    }
    let very_even = is_very_even(s, &p);
    Ok(OrbitLabel::Classical {
        partition: p,
        very_even,
    })
}

/// Complex dimension of the orbit with Jordan type `p`.
pub fn orbit_dimension(t: &CartanType, p: &Partition) -> Result<usize> {
    let s = classical(t)?;
    if !is_valid_partition(s, p) {
        return Err(AtlasError::InvalidPartition(format!("{p} for {t}")));
    }
    let d = p.dual();
    let sq: usize = d.parts.iter().map(|x| x * x).sum();
    let odd = p.parts.iter().filter(|&&x| x % 2 == 1).count();
    let n = s.rank;
    Ok(match s.family {
        Family::A => (n + 1) * (n + 1) - sq,
        Family::B => 2 * n * n + n - (sq - odd) / 2,
        Family::C => 2 * n * n + n - (sq + odd) / 2,
        Family::D => 2 * n * n - n - (sq - odd) / 2,
        _ => unreachable!(),
    })
}

/// Dominance order: partial sums of `p` bound those of `q`.
pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    if p.total() != q.total() {
        return Err(AtlasError::InvalidPartition(format!(
            "{p} and {q} have different totals"
        )));
    }
    let len = p.parts.len().max(q.parts.len());
    Ok(p.partial_sums(len)
        .iter()
        .zip(q.partial_sums(len))
        .all(|(a, b)| *a >= b))
}

/// Covering relations `(lower, upper)` of the closure order.
pub fn hasse_diagram(t: &CartanType) -> Result<Vec<(Partition, Partition)>> {
    let ps = valid_partitions(t)?;
    let mut edges = Vec::new();
    for lo in &ps {
        for hi in &ps {
            if lo == hi || !dominates(hi, lo)? {
                continue;
            }
            let mut covered = true;
            for mid in &ps {
                if mid != lo && mid != hi && dominates(hi, mid)? && dominates(mid, lo)? {
                    covered = false;
                    break;
                }
            }
            if covered {
                edges.push((lo.clone(), hi.clone()));
            }
        }
    }
    Ok(edges)
}

/// Marks `<alpha_i, theta^vee>` of the minimal orbit.
fn minimal_marks(rs: &RootSystem) -> Vec<i64> {
    let theta = rs.highest_root().clone();
    let len = rs.inner(&theta, &theta);
    (0..rs.rank())
        .map(|i| 2 * rs.inner(&rs.simple_root(i), &theta) / len)
        .collect()
}

struct ExceptionalOrbit {
    family: Family,
    rank: usize,
    name: &'static str,
    marks: &'static [i64],
    dim: usize,
}

/// Next-to-minimal exceptional orbits in Bourbaki numbering.
const NEXT_TO_MINIMAL: &[ExceptionalOrbit] = &[
    ExceptionalOrbit {
        family: Family::G,
        rank: 2,
        name: "A1~",
        marks: &[1, 0],
        dim: 8,
    },
    ExceptionalOrbit {
        family: Family::F,
        rank: 4,
        name: "A1~",
        marks: &[0, 0, 0, 1],
        dim: 22,
    },
    ExceptionalOrbit {
        family: Family::E,
        rank: 6,
        name: "2A1",
        marks: &[1, 0, 0, 0, 0, 1],
        dim: 32,
    },
    ExceptionalOrbit {
        family: Family::E,
        rank: 7,
        name: "2A1",
        marks: &[0, 0, 0, 0, 0, 1, 0],
        dim: 52,
    },
    ExceptionalOrbit {
        family: Family::E,
        rank: 8,
        name: "2A1",
        marks: &[1, 0, 0, 0, 0, 0, 0, 0],
        dim: 92,
    },
];

/// Tabulated orbit dimension of a known exceptional label.
pub fn exceptional_orbit_dimension(t: &CartanType, label: &OrbitLabel) -> Option<usize> {
    let s = t.as_simple()?;
    let OrbitLabel::Exceptional { name, diagram } = label else {
        return None;
    };
    if name == "A1" {
        let rs = RootSystem::new(t);
        return Some(2 * rs.dual_coxeter_number() as usize - 2);
    }
    NEXT_TO_MINIMAL
        .iter()
        .find(|o| o.family == s.family && o.rank == s.rank && o.marks == diagram.marks.as_slice())
        .map(|o| o.dim)
}

pub fn minimal_orbit(t: &CartanType) -> Result<OrbitLabel> {
    let s = simple(t)?;
    if s.is_classical() {
        let n = s.rank;
        let p = match s.family {
            Family::A => [vec![2], vec![1; n - 1]].concat(),
            Family::B => [vec![2, 2], vec![1; 2 * n - 3]].concat(),
            Family::C => [vec![2], vec![1; 2 * n - 2]].concat(),
            Family::D => [vec![2, 2], vec![1; 2 * n - 4]].concat(),
            _ => unreachable!(),
        };
        return classical_label(t, Partition::new(p));
    }
    let rs = RootSystem::new(t);
    Ok(OrbitLabel::Exceptional {
        name: "A1".into(),
        diagram: WeightedDynkinDiagram {
            marks: minimal_marks(&rs),
        },
    })
}

/// Orbits covering the minimal orbit in the closure order.
pub fn next_to_minimal(t: &CartanType) -> Result<Vec<OrbitLabel>> {
    let s = simple(t)?;
    if s.is_classical() {
        let OrbitLabel::Classical { partition: min, .. } = minimal_orbit(t)? else {
            unreachable!()
        };
        let mut out = Vec::new();
        for (lo, hi) in hasse_diagram(t)? {
            if lo == min {
                out.push(classical_label(t, hi)?);
            }
        }
        return Ok(out);
    }
    Ok(NEXT_TO_MINIMAL
        .iter()
        .filter(|o| o.family == s.family && o.rank == s.rank)
        .map(|o| OrbitLabel::Exceptional {
            name: o.name.into(),
            diagram: WeightedDynkinDiagram {
                marks: o.marks.to_vec(),
            },
        })
        .collect())
}

/// Weighted Dynkin diagram of a classical orbit (the I variant for very even
/// partitions) or the stored diagram of an exceptional one.
pub fn weighted_diagram(t: &CartanType, label: &OrbitLabel) -> Result<WeightedDynkinDiagram> {
    match label {
        OrbitLabel::Exceptional { diagram, .. } => {
            if diagram.marks.len() != t.rank() {
                return Err(AtlasError::InvalidLabel(format!("{label} for {t}")));
            }
            Ok(diagram.clone())
        }
        OrbitLabel::Classical { partition, .. } => {
            let s = classical(t)?;
            if !is_valid_partition(s, partition) {
                return Err(AtlasError::InvalidPartition(format!("{partition} for {t}")));
            }
            let h = partition.neutral_eigenvalues();
            let n = s.rank;
            let mut marks: Vec<i64> = (0..n).map(|i| h[i] - h[i + 1]).collect();
            match s.family {
                Family::A => {}
                Family::B => marks[n - 1] = h[n - 1],
                Family::C => marks[n - 1] = 2 * h[n - 1],
                Family::D => marks[n - 1] = h[n - 2] + h[n - 1],
                _ => unreachable!(),
            }
            Ok(WeightedDynkinDiagram { marks })
        }
    }
}

/// Both diagrams of a very even label; a single diagram otherwise.
pub fn weighted_diagrams(t: &CartanType, label: &OrbitLabel) -> Result<Vec<WeightedDynkinDiagram>> {
    let w = weighted_diagram(t, label)?;
    if let OrbitLabel::Classical {
        very_even: true, ..
    } = label
    {
        let n = w.marks.len();
        let mut other = w.clone();
        other.marks.swap(n - 2, n - 1);
        if other != w {
            return Ok(vec![w, other]);
        }
    }
    Ok(vec![w])
}

/// Parse a label for type `t`: a partition for classical types; for
/// exceptional types a name (`A1`, `2A1`, `A1~`) or a digit string of marks.
pub fn parse_label(t: &CartanType, s: &str) -> Result<OrbitLabel> {
    let st = simple(t)?;
    if st.is_classical() {
        return classical_label(t, s.parse()?);
    }
    let s = s.trim();
    let min = minimal_orbit(t)?;
    let mut known = vec![min];
    known.extend(next_to_minimal(t)?);
    for l in &known {
        if let OrbitLabel::Exceptional { name, diagram } = l {
            if name == s || diagram.to_string() == s {
                return Ok(l.clone());
            }
        }
    }
    let marks: Vec<i64> = s
        .chars()
        .filter(|c| !matches!(c, ',' | ' '))
        .map(|c| c.to_digit(10).map(i64::from))
        .collect::<Option<_>>()
        .ok_or_else(|| AtlasError::InvalidLabel(s.to_string()))?;
    if marks.len() != t.rank() || marks.iter().any(|&m| m > 2) {
        return Err(AtlasError::InvalidLabel(s.to_string()));
    }
    Ok(OrbitLabel::Exceptional {
        name: "custom".into(),
        diagram: WeightedDynkinDiagram { marks },
    })
}

/// Dimensions of the eigenspaces of `ad h` on the algebra, indexed by
/// eigenvalue `k` for `-max..=max`.
pub fn grading_dimensions(
    rs: &RootSystem,
    marks: &[i64],
) -> std::collections::BTreeMap<i64, usize> {
    let mut out = std::collections::BTreeMap::new();
    *out.entry(0).or_insert(0) += rs.rank();
    for r in rs.positive_roots() {
        let d: i64 = r.iter().zip(marks).map(|(a, b)| a * b).sum();
        *out.entry(d).or_insert(0) += 1;
        *out.entry(-d).or_insert(0) += 1;
    }
    out
}

/// A nilpotent element `x` in degree 2 of the grading by `h`.
#[derive(Clone, Debug)]
pub struct Representative {
    pub marks: Vec<i64>,
    pub h: CartanElement,
    pub x: AlgebraElement,
    pub attempts: usize,
}

impl Representative {
    /// `h` as an algebra element.
    pub fn h_element(&self, a: &ChevalleyAlgebra) -> AlgebraElement {
        a.cartan_element(&self.h.coroot)
    }
}

const MAX_ATTEMPTS: usize = 12;

/// Random degree-2 element accepted when its centralizer has dimension
/// `dim g_0 + dim g_1`, the centralizer dimension for the orbit with this
/// diagram.
pub fn representative(
    a: &ChevalleyAlgebra,
    w: &WeightedDynkinDiagram,
    seed: u64,
) -> Result<Representative> {
    let rs = a.root_system();
    let h = rs.coweight_element(&w.marks)?;
    let grading = grading_dimensions(rs, &w.marks);
    let expected = grading.get(&0).copied().unwrap_or(0) + grading.get(&1).copied().unwrap_or(0);
    let degree2: Vec<usize> = rs
        .positive_roots()
        .iter()
        .filter(|r| r.iter().zip(&w.marks).map(|(a, b)| a * b).sum::<i64>() == 2)
        .map(|r| a.root_vector(r).expect("root"))
        .collect();
    if degree2.is_empty() && w.marks.iter().all(|&m| m == 0) {
        return Ok(Representative {
            marks: w.marks.clone(),
            h,
            x: AlgebraElement::zero(a.dim()),
            attempts: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut range = 3i64;
    for attempt in 1..=MAX_ATTEMPTS {
        let mut x = AlgebraElement::zero(a.dim());
        for &i in &degree2 {
            x.re[i] = q(rng.gen_range(-range..=range));
        }
        if !x.is_zero() && a.centralizer_dim(&x) == expected {
            return Ok(Representative {
                marks: w.marks.clone(),
                h,
                x,
                attempts: attempt,
            });
        }
        if attempt % 3 == 0 {
            range *= 2;
        }
    }
    Err(AtlasError::RepresentativeNotFound {
        marks: w.marks.clone(),
        attempts: MAX_ATTEMPTS,
    })
}

/// Representative of an orbit label. Exceptional labels with a tabulated
/// dimension are checked against it.
pub fn label_representative(
    a: &ChevalleyAlgebra,
    label: &OrbitLabel,
    seed: u64,
) -> Result<Representative> {
    let t = a.root_system().cartan_type().clone();
    let w = weighted_diagram(&t, label)?;
    let rep = representative(a, &w, seed)?;
    let dim = a.orbit_dim(&rep.x);
    let expected = match label {
        OrbitLabel::Classical { partition, .. } => Some(orbit_dimension(&t, partition)?),
        OrbitLabel::Exceptional { .. } => exceptional_orbit_dimension(&t, label),
    };
    if let Some(e) = expected {
        if e != dim {
            return Err(AtlasError::Verification(format!(
                "{label} in {t}: representative has orbit dimension {dim}, expected {e}"
            )));
        }
    }
    Ok(rep)
}

/// Catalog entry for the orbit listing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub label: OrbitLabel,
    pub dimension: usize,
    pub diagram: WeightedDynkinDiagram,
    pub minimal: bool,
    pub next_to_minimal: bool,
}

/// All orbits of a classical type; for exceptional types the zero,
/// minimal and next-to-minimal orbits.
pub fn catalog(t: &CartanType) -> Result<Vec<OrbitInfo>> {
    let s = simple(t)?;
    let min = minimal_orbit(t)?;
    let ntm = next_to_minimal(t)?;
    let labels: Vec<OrbitLabel> = if s.is_classical() {
        valid_partitions(t)?
            .into_iter()
            .map(|p| classical_label(t, p))
            .collect::<Result<_>>()?
    } else {
        let mut v = vec![OrbitLabel::Exceptional {
            name: "0".into(),
            diagram: WeightedDynkinDiagram {
                marks: vec![0; t.rank()],
            },
        }];
        v.push(min.clone());
        v.extend(ntm.iter().cloned());
        v
    };
    labels
        .into_iter()
        .map(|label| {
            let dimension = match &label {
                OrbitLabel::Classical { partition, .. } => orbit_dimension(t, partition)?,
                OrbitLabel::Exceptional { name, .. } if name == "0" => 0,
                l => exceptional_orbit_dimension(t, l).unwrap_or(0),
            };
            Ok(OrbitInfo {
                diagram: weighted_diagram(t, &label)?,
                minimal: label == min,
                next_to_minimal: ntm.contains(&label),
                label,
                dimension,
            })
        })
        .collect()
}

/// Eigenvalue of `ad h` on the root vector `e_r`, for marks `w`.
pub fn degree(r: &[i64], w: &[i64]) -> i64 {
    r.iter().zip(w).map(|(a, b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_per_type() {
        let c2: Vec<String> = valid_partitions(&t("C2"))
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(c2, ["(4)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(valid_partitions(&t("A2")).unwrap().len(), 3);
        let b2: Vec<String> = valid_partitions(&t("B2"))
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(b2, ["(5)", "(3,1,1)", "(2,2,1)", "(1,1,1,1,1)"]);
        assert!(valid_partitions(&t("G2")).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("2^2,1^3"), p("2,2,1,1,1"));
        assert_eq!(p("(3,1,1)"), p("3 1 1"));
        assert!("2,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn dimensions() {
        for n in 1..6 {
            let ty = t(&format!("A{n}"));
            let mut parts = vec![2];
            parts.extend(vec![1; n - 1]);
            assert_eq!(orbit_dimension(&ty, &Partition::new(parts)).unwrap(), 2 * n);
            assert_eq!(
                orbit_dimension(&ty, &Partition::new(vec![1; n + 1])).unwrap(),
                0
            );
        }
        assert_eq!(orbit_dimension(&t("C2"), &p("2,1,1")).unwrap(), 4);
        assert_eq!(orbit_dimension(&t("C2"), &p("2,2")).unwrap(), 6);
        assert_eq!(orbit_dimension(&t("C2"), &p("4")).unwrap(), 8);
        assert_eq!(orbit_dimension(&t("B3"), &p("7")).unwrap(), 18);
        assert_eq!(orbit_dimension(&t("D4"), &p("2^4")).unwrap(), 12);
        assert!(orbit_dimension(&t("C2"), &p("3,1")).is_err());
    }

    #[test]
    fn dominance_and_hasse() {
        assert!(dominates(&p("3,1,1,1"), &p("2,2,1,1")).unwrap());
        assert!(dominates(&p("2,2"), &p("2,2")).unwrap());
        assert!(dominates(&p("2,2"), &p("3,1,1")).is_err());
        let mut edges = hasse_diagram(&t("C2")).unwrap();
        edges.sort();
        let chain = [("1^4", "2,1,1"), ("2,1,1", "2,2"), ("2,2", "4")];
        let mut expect: Vec<_> = chain.iter().map(|(a, b)| (p(a), p(b))).collect();
        expect.sort();
        assert_eq!(edges, expect);
    }

    #[test]
    fn diagrams() {
        let wd = |ty: &str, s: &str| {
            weighted_diagram(&t(ty), &classical_label(&t(ty), p(s)).unwrap())
                .unwrap()
                .marks
        };
        assert_eq!(wd("A2", "2,1"), [1, 1]);
        assert_eq!(wd("A1", "2"), [2]);
        assert_eq!(wd("A2", "3"), [2, 2]);
        assert_eq!(wd("C2", "4"), [2, 2]);
        assert_eq!(wd("B3", "7"), [2, 2, 2]);
        assert_eq!(wd("D4", "7,1"), [2, 2, 2, 2]);
        assert_eq!(wd("C3", "2,1^4"), [1, 0, 0]);
        assert_eq!(wd("B3", "2,2,1,1,1"), [0, 1, 0]);
        let ve = classical_label(&t("D4"), p("2^4")).unwrap();
        assert_eq!(weighted_diagrams(&t("D4"), &ve).unwrap().len(), 2);
    }

    #[test]
    fn minimal_and_next() {
        let l = |s: &str, ps: &[&str]| {
            let got: Vec<OrbitLabel> = next_to_minimal(&t(s)).unwrap();
            let want: Vec<OrbitLabel> = ps
                .iter()
                .map(|x| classical_label(&t(s), p(x)).unwrap())
                .collect();
            assert_eq!(got.len(), want.len(), "{s}");
            for w in want {
                assert!(got.contains(&w), "{s}: {w}");
            }
        };
        assert_eq!(
            minimal_orbit(&t("A5")).unwrap(),
            classical_label(&t("A5"), p("2,1,1,1,1")).unwrap()
        );
        l("A5", &["2,2,1,1"]);
        l("A2", &["3"]);
        l("B4", &["3,1^6", "2^4,1"]);
        l("B3", &["3,1^4"]);
        l("C3", &["2,2,1,1"]);
        l("D4", &["3,1^5", "2^4"]);
        l("D5", &["3,1^7", "2^4,1,1"]);
        for s in ["A3", "B3", "C3", "D4", "D5"] {
            let min = match minimal_orbit(&t(s)).unwrap() {
                OrbitLabel::Classical { partition, .. } => partition,
                _ => unreachable!(),
            };
            for q in valid_partitions(&t(s)).unwrap() {
                if q.parts().iter().any(|&x| x > 1) {
                    assert!(dominates(&q, &min).unwrap());
                }
            }
        }
    }

    #[test]
    fn exceptional_minimal_marks() {
        let m = |s: &str| match minimal_orbit(&t(s)).unwrap() {
            OrbitLabel::Exceptional { diagram, .. } => diagram.marks,
            _ => unreachable!(),
        };
        assert_eq!(m("G2"), [0, 1]);
        assert_eq!(m("F4"), [1, 0, 0, 0]);
        assert_eq!(m("E6"), [0, 1, 0, 0, 0, 0]);
        assert_eq!(m("E7"), [1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(m("E8"), [0, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn representatives_match_formula() {
        for s in ["A1", "A2", "A3", "B2", "C2", "C3", "B3", "D4"] {
            let ty = t(s);
            let a = ChevalleyAlgebra::from_type(&ty);
            for part in valid_partitions(&ty).unwrap() {
                let label = classical_label(&ty, part.clone()).unwrap();
                let rep = label_representative(&a, &label, 7).unwrap();
                assert_eq!(
                    a.orbit_dim(&rep.x),
                    orbit_dimension(&ty, &part).unwrap(),
                    "{s} {part}"
                );
            }
        }
    }

    #[test]
    fn representative_examples() {
        let a = ChevalleyAlgebra::from_type(&t("A1"));
        let r = representative(&a, &WeightedDynkinDiagram { marks: vec![2] }, 1).unwrap();
        assert_eq!(a.centralizer_dim(&r.x), 1);
        let a = ChevalleyAlgebra::from_type(&t("A2"));
        let r = representative(&a, &WeightedDynkinDiagram { marks: vec![1, 1] }, 1).unwrap();
        assert_eq!(a.orbit_dim(&r.x), 4);
    }

    #[test]
    fn exceptional_next_to_minimal_dims() {
        for s in ["G2", "F4", "E6"] {
            let ty = t(s);
            let a = ChevalleyAlgebra::from_type(&ty);
            for l in next_to_minimal(&ty).unwrap() {
                label_representative(&a, &l, 3).unwrap();
            }
            let rep = label_representative(&a, &minimal_orbit(&ty).unwrap(), 3).unwrap();
            let hv = a.root_system().dual_coxeter_number() as usize;
            assert_eq!(a.orbit_dim(&rep.x), 2 * hv - 2);
        }
    }

    #[test]
    fn label_parsing() {
        let f4 = t("F4");
        assert_eq!(
            parse_label(&f4, "A1~").unwrap(),
            parse_label(&f4, "0001").unwrap()
        );
        assert!(parse_label(&f4, "00012").is_err());
        assert!(parse_label(&t("C2"), "3,1").is_err());
    }
}
