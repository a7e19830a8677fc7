//! Integer root data for simple and semi-simple Cartan types.
//!
//! Nodes follow Bourbaki numbering (0-based in code, 1-based in labels):
//!
//! * `A_n`: chain `1 - 2 - ... - n`.
//! * `B_n`: chain, `alpha_n` short.
//! * `C_n`: chain, `alpha_n` long.
//! * `D_n`: chain `1 - ... - (n-2)`, with `n-1` and `n` both joined to `n-2`.
//! * `E_n`: chain `1 - 3 - 4 - ... - n`, with `2` joined to `4`.
//! * `F_4`: `1 - 2 => 3 - 4`, `alpha_1, alpha_2` long.
//! * `G_2`: `alpha_1` short, `alpha_2` long.
//!
//! Roots are integer vectors in the simple-root basis. The invariant form is
//! scaled so that short roots have squared length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AtlasError, Result};
use crate::linalg::{q, Rational, RationalMatrix};

pub type Root = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Cartan type such as `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(AtlasError::InvalidType(format!(
                "{}{} has an invalid rank",
                family.letter(),
                rank
            )))
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// Complex dimension of the simple Lie algebra.
    pub fn dimension(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Gram matrix of the simple roots, short roots of squared length 2.
    pub fn symmetric_form(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut b = vec![vec![0i64; n]; n];
        let mut link = |i: usize, j: usize, v: i64| {
            b[i][j] = v;
            b[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    link(i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1);
                }
                link(n - 2, n - 1, -2);
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1);
                }
                link(n - 3, n - 1, -1);
            }
            Family::E => {
                link(0, 2, -1);
                link(1, 3, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1);
                }
            }
            Family::F => {
                link(0, 1, -2);
                link(1, 2, -2);
                link(2, 3, -1);
            }
            Family::G => link(0, 1, -3),
        }
        for i in 0..n {
            b[i][i] = match self.family {
                Family::A | Family::D | Family::E => 2,
                Family::B => {
                    if i + 1 == n {
                        2
                    } else {
                        4
                    }
                }
                Family::C => {
                    if i + 1 == n {
                        4
                    } else {
                        2
                    }
                }
                Family::F => {
                    if i < 2 {
                        4
                    } else {
                        2
                    }
                }
                Family::G => {
                    if i == 0 {
                        2
                    } else {
                        6
                    }
                }
            };
        }
        b
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| AtlasError::InvalidType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| AtlasError::InvalidType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// A simple type or a product of simple types.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    components: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(components: Vec<SimpleType>) -> Result<Self> {
        if components.is_empty() {
            return Err(AtlasError::InvalidType(
                "a product type needs at least one component".to_string(),
            ));
        }
        Ok(Self { components })
    }

    pub fn simple(t: SimpleType) -> Self {
        Self {
            components: vec![t],
        }
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn as_simple(&self) -> Option<SimpleType> {
        match self.components.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|t| t.rank).sum()
    }

    pub fn dimension(&self) -> usize {
        self.components.iter().map(|t| t.dimension()).sum()
    }
}

impl From<SimpleType> for CartanType {
    fn from(t: SimpleType) -> Self {
        Self::simple(t)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = AtlasError;

    /// Accepts `E8`, `A1xA1`, `A2+A1` or `A2*A1`.
    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .split(['x', 'X', '+', '*'])
            .map(str::parse)
            .collect::<Result<Vec<SimpleType>>>()?;
        Self::new(comps)
    }
}

/// Integer root data for a (semi-)simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// Gram matrix of the simple roots.
    form: Vec<Vec<i64>>,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    highest: Vec<Root>,
    det_cartan: i64,
    inv_cartan_times_det: Vec<Vec<i64>>,
    /// Simple-root indices of each simple component.
    component_nodes: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn new(t: &CartanType) -> Self {
        let n = t.rank();
        let mut form = vec![vec![0i64; n]; n];
        let mut component_nodes = Vec::new();
        let mut offset = 0;
        for c in t.components() {
            let b = c.symmetric_form();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    form[offset + i][offset + j] = b[i][j];
                }
            }
            component_nodes.push((offset..offset + c.rank).collect());
            offset += c.rank;
        }
        Self::from_form(t.clone(), form, component_nodes)
    }

    fn from_form(
        cartan_type: CartanType,
        form: Vec<Vec<i64>>,
        component_nodes: Vec<Vec<usize>>,
    ) -> Self {
        let n = form.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();
        let positive = positive_roots(&cartan);
        let index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let highest = component_nodes
            .iter()
            .map(|nodes: &Vec<usize>| {
                positive
                    .iter()
                    .filter(|r| {
                        r.iter()
                            .enumerate()
                            .all(|(i, &c)| c == 0 || nodes.contains(&i))
                    })
                    .max_by_key(|r| r.iter().sum::<i64>())
                    .cloned()
                    .unwrap_or_default()
            })
            .collect();
        let (det_cartan, inv_cartan_times_det) = adjugate(&cartan);
        Self {
            cartan_type,
            form,
            cartan,
            positive,
            index,
            highest,
            det_cartan,
            inv_cartan_times_det,
            component_nodes,
        }
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    /// Complex dimension of the Lie algebra.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetric_form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Highest root of a simple system; the first component's for products.
    pub fn highest_root(&self) -> &Root {
        &self.highest[0]
    }

    pub fn highest_roots(&self) -> &[Root] {
        &self.highest
    }

    pub fn det_cartan(&self) -> i64 {
        self.det_cartan
    }

    pub fn inv_cartan_times_det(&self) -> &[Vec<i64>] {
        &self.inv_cartan_times_det
    }

    pub fn component_nodes(&self) -> &[Vec<usize>] {
        &self.component_nodes
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = vec![0; self.rank()];
        r[i] = 1;
        r
    }

    /// Index of a positive root.
    pub fn positive_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        if self.index.contains_key(r) {
            return true;
        }
        let neg: Root = r.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    /// `(u, v)` for vectors in the simple-root basis.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                s += a * self.form[i][j] * b;
            }
        }
        s
    }

    /// `<r, alpha_i^vee>`.
    pub fn pairing_with_simple_coroot(&self, r: &[i64], i: usize) -> i64 {
        r.iter().zip(&self.cartan[i]).map(|(c, a)| c * a).sum()
    }

    /// Coefficients of `r^vee` in the basis of simple coroots.
    pub fn coroot_coefficients(&self, r: &[i64]) -> Vec<i64> {
        let len = self.inner(r, r);
        r.iter()
            .enumerate()
            .map(|(i, &c)| {
                let v = c * self.form[i][i];
                debug_assert_eq!(v % len, 0);
                v / len
            })
            .collect()
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    /// Dual Coxeter number of a simple system: one plus the sum of the
    /// coefficients of the highest coroot.
    pub fn dual_coxeter_number(&self) -> i64 {
        let theta = self.highest_root();
        1 + self.coroot_coefficients(theta).iter().sum::<i64>()
    }

    /// Weight in fundamental-weight coordinates of a vector in the root basis.
    pub fn dynkin_labels(&self, r: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| self.pairing_with_simple_coroot(r, i))
            .collect()
    }

    /// Root-lattice coordinates of a weight given by Dynkin labels.
    pub fn weight_to_root_coords(&self, labels: &[i64]) -> Vec<Rational> {
        // c = A^{-1} l with A[i][j] = <alpha_j, alpha_i^vee>.
        let n = self.rank();
        let det = q(self.det_cartan);
        (0..n)
            .map(|j| {
                let s: i64 = (0..n)
                    .map(|i| self.inv_cartan_times_det[j][i] * labels[i])
                    .sum();
                q(s) / &det
            })
            .collect()
    }

    /// The Cartan element pairing to `marks[i]` with every simple root.
    pub fn coweight_element(&self, marks: &[i64]) -> Result<CartanElement> {
        if marks.len() != self.rank() {
            return Err(AtlasError::Dimension(format!(
                "{} marks for rank {}",
                marks.len(),
                self.rank()
            )));
        }
        // <alpha_i, h> = sum_j k_j A[j][i], so k = (A^T)^{-1} m.
        let n = self.rank();
        let det = q(self.det_cartan);
        let coroot = (0..n)
            .map(|j| {
                let s: i64 = (0..n)
                    .map(|i| self.inv_cartan_times_det[i][j] * marks[i])
                    .sum();
                q(s) / &det
            })
            .collect();
        Ok(CartanElement { coroot })
    }

    /// Roots annihilated by `h`, with a simple system for them and its type.
    pub fn root_centralizer_subsystem(&self, h: &CartanElement) -> RootSubsystem {
        let marks = h.marks(self);
        let pair = |r: &Root| -> Rational {
            r.iter()
                .zip(&marks)
                .filter(|(c, _)| **c != 0)
                .fold(Rational::zero(), |acc, (c, m)| acc + q(*c) * m)
        };
        let zero_pos: Vec<Root> = self
            .positive
            .iter()
            .filter(|r| pair(r).is_zero())
            .cloned()
            .collect();
        self.subsystem_from_positive(zero_pos)
    }

    /// Subsystem spanned by a closed set of positive roots.
    pub fn subsystem_from_positive(&self, zero_pos: Vec<Root>) -> RootSubsystem {
        let set: std::collections::HashSet<&Root> = zero_pos.iter().collect();
        let simple: Vec<Root> = zero_pos
            .iter()
            .filter(|r| {
                !zero_pos.iter().any(|a| {
                    let b: Root = r.iter().zip(a).map(|(x, y)| x - y).collect();
                    set.contains(&b)
                })
            })
            .cloned()
            .collect();
        let form: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| self.inner(a, b)).collect())
            .collect();
        let comps = identify_components(&form);
        let mut ordered = Vec::new();
        let mut components = Vec::new();
        for (t, nodes) in comps {
            components.push(t);
            ordered.extend(nodes.iter().map(|&k| simple[k].clone()));
        }
        let mut roots = zero_pos.clone();
        roots.extend(
            zero_pos
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Root>()),
        );
        RootSubsystem {
            torus_dim: self.rank() - ordered.len(),
            roots,
            simple_roots: ordered,
            components,
        }
    }

    /// Root system of a subsystem with the given simple roots (in the given
    /// order), using the restriction of this system's invariant form.
    pub fn subsystem_root_system(&self, simple: &[Root]) -> Result<RootSystem> {
        let form: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| self.inner(a, b)).collect())
            .collect();
        let comps = identify_components(&form);
        let types: Vec<SimpleType> = comps.iter().map(|(t, _)| *t).collect();
        let component_nodes = comps.into_iter().map(|(_, nodes)| nodes).collect();
        let cartan_type = if types.is_empty() {
            // A torus: no roots at all. Keep an empty product label.
            CartanType { components: vec![] }
        } else {
            CartanType::new(types)?
        };
        Ok(Self::from_form(cartan_type, form, component_nodes))
    }
}

/// Element of the Cartan subalgebra, in the basis of simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanElement {
    #[serde(with = "crate::linalg::rational_vec")]
    pub coroot: Vec<Rational>,
}

impl CartanElement {
    /// `<alpha_i, h>` for every simple root.
    pub fn marks(&self, rs: &RootSystem) -> Vec<Rational> {
        let n = rs.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(Rational::zero(), |acc, j| {
                    acc + &self.coroot[j] * q(rs.cartan[j][i])
                })
            })
            .collect()
    }

    /// `<r, h>` for a vector `r` in the root basis.
    pub fn pairing(&self, rs: &RootSystem, r: &[i64]) -> Rational {
        let marks = self.marks(rs);
        r.iter()
            .zip(&marks)
            .fold(Rational::zero(), |acc, (c, m)| acc + q(*c) * m)
    }

    pub fn is_zero(&self) -> bool {
        self.coroot.iter().all(Zero::is_zero)
    }
}

/// Result of a root-centralizer computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSubsystem {
    /// All roots (positive then negative) of the subsystem.
    pub roots: Vec<Root>,
    /// Simple roots, ordered component by component in Bourbaki order.
    pub simple_roots: Vec<Root>,
    pub components: Vec<SimpleType>,
    /// Dimension of the central torus of the reductive centralizer.
    pub torus_dim: usize,
}

impl RootSubsystem {
    /// Dimension of the reductive subalgebra `t + sum of root spaces`.
    pub fn reductive_dimension(&self) -> usize {
        self.roots.len() + self.simple_roots.len() + self.torus_dim
    }

    pub fn type_label(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        if self.torus_dim > 0 {
            parts.push(format!("T{}", self.torus_dim));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: Vec<Root> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut set: std::collections::HashSet<Root> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p = length of the alpha_i-string below beta.
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if set.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| {
        RootSystem::height(a)
            .cmp(&RootSystem::height(b))
            .then_with(|| b.cmp(a))
    });
    all
}

/// Determinant and adjugate of a small integer matrix.
fn adjugate(a: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = a.len();
    if n == 0 {
        return (1, vec![]);
    }
    let m = RationalMatrix::from_i64_rows(a).expect("square");
    // Gauss-Jordan inverse over Q.
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        if p != col {
            aug.swap(p, col);
            det = -det;
        }
        let piv = aug[col][col].clone();
        det *= &piv;
        let inv = piv.recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        let prow = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, s) in row.iter_mut().zip(&prow) {
                    *x -= &f * s;
                }
            }
        }
    }
    assert!(det.is_integer());
    let d = det.to_integer();
    let di: i64 = num_traits::ToPrimitive::to_i64(&d).expect("small determinant");
    let adj = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = &aug[i][n + j] * &det;
                    assert!(v.is_integer());
                    num_traits::ToPrimitive::to_i64(&v.to_integer()).expect("small entry")
                })
                .collect()
        })
        .collect();
    (di, adj)
}

/// Splits a Gram matrix of simple roots into simple components and returns
/// each component's type with its nodes in Bourbaki order.
pub fn identify_components(form: &[Vec<i64>]) -> Vec<(SimpleType, Vec<usize>)> {
    let n = form.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if !seen[w] && form[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(identify_connected(form, &comp));
    }
    out
}

fn identify_connected(form: &[Vec<i64>], nodes: &[usize]) -> (SimpleType, Vec<usize>) {
    let n = nodes.len();
    let st = |f: Family, r: usize| SimpleType::new(f, r).expect("valid identified type");
    if n == 1 {
        return (st(Family::A, 1), nodes.to_vec());
    }
    let nbrs = |v: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&w| w != v && form[v][w] != 0)
            .collect()
    };
    let bond = |v: usize, w: usize| -> i64 {
        // Product of the two Cartan entries.
        (2 * form[v][w] / form[v][v]) * (2 * form[w][v] / form[w][w])
    };
    let len = |v: usize| form[v][v];
    // Walks a path starting at an endpoint.
    let walk = |from: usize| -> Vec<usize> {
        let mut path = vec![from];
        let mut prev = usize::MAX;
        let mut cur = from;
        loop {
            let next = nbrs(cur).into_iter().find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    path.push(w);
                }
                None => break,
            }
        }
        path
    };
    let degrees: Vec<usize> = nodes.iter().map(|&v| nbrs(v).len()).collect();
    let max_bond = nodes
        .iter()
        .flat_map(|&v| nbrs(v).into_iter().map(move |w| (v, w)))
        .map(|(v, w)| bond(v, w))
        .max()
        .unwrap_or(1);
    if max_bond == 3 {
        let mut path = nodes.to_vec();
        path.sort_by_key(|&v| len(v));
        return (st(Family::G, 2), path);
    }
    if max_bond == 2 {
        let ends: Vec<usize> = nodes
            .iter()
            .zip(&degrees)
            .filter(|(_, &d)| d == 1)
            .map(|(&v, _)| v)
            .collect();
        let mut path = walk(ends[0]);
        let double_at = |p: &[usize]| {
            (0..p.len() - 1)
                .find(|&i| bond(p[i], p[i + 1]) == 2)
                .expect("double bond present")
        };
        if n == 2 {
            path.sort_by_key(|&v| std::cmp::Reverse(len(v)));
            return (st(Family::B, 2), path);
        }
        let mut d = double_at(&path);
        if d == 0 {
            path.reverse();
            d = double_at(&path);
        }
        if d == n - 2 {
            let family = if len(path[n - 1]) < len(path[0]) {
                Family::B
            } else {
                Family::C
            };
            return (st(family, n), path);
        }
        // F4: orient so the first two nodes are long.
        if len(path[0]) < len(path[n - 1]) {
            path.reverse();
        }
        return (st(Family::F, 4), path);
    }
    // Simply laced.
    if let Some(bi) = degrees.iter().position(|&d| d == 3) {
        let branch = nodes[bi];
        let mut arms: Vec<Vec<usize>> = nbrs(branch)
            .into_iter()
            .map(|first| {
                let mut arm = vec![first];
                let mut prev = branch;
                let mut cur = first;
                while let Some(w) = nbrs(cur).into_iter().find(|&w| w != prev) {
                    prev = cur;
                    cur = w;
                    arm.push(w);
                }
                arm
            })
            .collect();
        arms.sort_by_key(|a| (a.len(), a[0]));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        if lens[0] == 1 && lens[1] == 1 {
            // D_n: long arm from its far end, then branch, then the two leaves.
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.push(branch);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            return (st(Family::D, n), order);
        }
        // E_n: alpha_2 is the leaf, alpha_1 - alpha_3 the length-2 arm.
        let mut order = vec![arms[1][1], arms[0][0], arms[1][0], branch];
        order.extend(arms[2].iter().copied());
        return (st(Family::E, n), order);
    }
    let end = nodes
        .iter()
        .zip(&degrees)
        .find(|(_, &d)| d == 1)
        .map(|(&v, _)| v)
        .expect("path has an endpoint");
    (st(Family::A, n), walk(end))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap())
    }

    fn expected_positive(t: SimpleType) -> usize {
        (t.dimension() - t.rank) / 2
    }

    #[test]
    fn small_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.num_positive(), 3);
        assert_eq!(a2.highest_root(), &vec![1, 1]);
        let g2 = rs("G2");
        assert_eq!(g2.num_positive(), 6);
        assert_eq!(g2.dimension(), 14);
        assert_eq!(g2.highest_root(), &vec![3, 2]);
        let e8 = rs("E8");
        assert_eq!(e8.num_positive(), 120);
        assert_eq!(e8.dimension(), 248);
    }

    #[test]
    fn counts_match_dimension_formulas() {
        for s in [
            "A1", "A4", "A7", "B2", "B3", "B5", "C3", "C4", "D3", "D4", "D6", "E6", "E7", "F4",
        ] {
            let t: SimpleType = s.parse().unwrap();
            let r = rs(s);
            assert_eq!(r.num_positive(), expected_positive(t), "{s}");
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        for s in ["B1", "C1", "D2", "E5", "E9", "F3", "G3", "A0"] {
            assert!(s.parse::<SimpleType>().is_err(), "{s}");
        }
        assert!("A2xB".parse::<CartanType>().is_err());
    }

    #[test]
    fn product_types_parse_and_concatenate() {
        let t: CartanType = "A2xA1".parse().unwrap();
        assert_eq!(t.to_string(), "A2xA1");
        let r = RootSystem::new(&t);
        assert_eq!(r.num_positive(), 4);
        assert_eq!(r.dimension(), 11);
        assert_eq!(r.highest_roots(), &[vec![1, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn adjugate_identity_holds() {
        for s in ["A3", "B4", "C3", "D5", "E6", "E8", "F4", "G2"] {
            let r = rs(s);
            let a = r.cartan_matrix();
            let adj = r.inv_cartan_times_det();
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    let v: i64 = (0..n).map(|k| adj[i][k] * a[k][j]).sum();
                    assert_eq!(v, if i == j { r.det_cartan() } else { 0 }, "{s}");
                }
            }
        }
        assert_eq!(rs("E8").det_cartan(), 1);
        assert_eq!(rs("A3").det_cartan(), 4);
    }

    #[test]
    fn highest_root_dominates_and_is_long() {
        for s in ["A5", "B4", "C4", "D5", "E7", "F4", "G2"] {
            let r = rs(s);
            let theta = r.highest_root();
            let tt = r.inner(theta, theta);
            for a in r.positive_roots() {
                assert!(a.iter().zip(theta).all(|(x, y)| x <= y), "{s}");
                assert!(r.inner(a, a) <= tt);
            }
            let top: Vec<_> = r
                .positive_roots()
                .iter()
                .filter(|a| RootSystem::height(a) == RootSystem::height(theta))
                .collect();
            assert_eq!(top.len(), 1);
        }
    }

    #[test]
    fn closed_under_addition() {
        for s in ["B3", "G2", "F4", "D4"] {
            let r = rs(s);
            let all: Vec<Root> = r
                .positive_roots()
                .iter()
                .cloned()
                .chain(
                    r.positive_roots()
                        .iter()
                        .map(|a| a.iter().map(|x| -x).collect()),
                )
                .collect();
            for a in &all {
                for b in &all {
                    let s2: Root = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if s2.iter().all(|&x| x == 0) {
                        continue;
                    }
                    // a + b is a root iff the a-string through b continues.
                    let ab = r.inner(a, b);
                    if ab < 0 {
                        assert!(r.is_root(&s2), "{s}: {a:?}+{b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn dual_coxeter_numbers() {
        for (s, h) in [
            ("A4", 5),
            ("B3", 5),
            ("C3", 4),
            ("D5", 8),
            ("E6", 12),
            ("E7", 18),
            ("E8", 30),
            ("F4", 9),
            ("G2", 4),
        ] {
            assert_eq!(rs(s).dual_coxeter_number(), h, "{s}");
        }
    }

    #[test]
    fn coweight_examples() {
        let a2 = rs("A2");
        assert!(a2.coweight_element(&[0, 0]).unwrap().is_zero());
        let a1 = rs("A1");
        let h = a1.coweight_element(&[2]).unwrap();
        assert_eq!(h.coroot, vec![q(1)]);
        assert_eq!(h.pairing(&a1, &[1]), q(2));
        let e8 = rs("E8");
        let h = e8.coweight_element(&[1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        let marks = h.marks(&e8);
        assert_eq!(marks[0], q(1));
        assert!(marks[1..].iter().all(Zero::is_zero));
        assert!(e8.coweight_element(&[1, 0]).is_err());
    }

    #[test]
    fn coweight_round_trip() {
        for s in ["B3", "C4", "F4", "G2", "E7", "D5"] {
            let r = rs(s);
            let marks: Vec<i64> = (0..r.rank() as i64).map(|i| (i * 7 + 3) % 5 - 2).collect();
            let h = r.coweight_element(&marks).unwrap();
            assert_eq!(h.marks(&r), marks.iter().map(|&m| q(m)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn centralizer_subsystem_examples() {
        let a2 = rs("A2");
        let h0 = a2.coweight_element(&[0, 0]).unwrap();
        let sub = a2.root_centralizer_subsystem(&h0);
        assert_eq!(sub.roots.len(), 6);
        assert_eq!(sub.components, vec!["A2".parse().unwrap()]);
        assert_eq!(sub.torus_dim, 0);

        let h1 = a2.coweight_element(&[1, 0]).unwrap();
        let sub = a2.root_centralizer_subsystem(&h1);
        assert_eq!(sub.simple_roots, vec![vec![0, 1]]);
        assert_eq!(sub.roots.len(), 2);
        assert_eq!(sub.components, vec!["A1".parse().unwrap()]);
        assert_eq!(sub.torus_dim, 1);

        let reg = a2.coweight_element(&[1, 1]).unwrap();
        let sub = a2.root_centralizer_subsystem(&reg);
        assert!(sub.roots.is_empty());
        assert_eq!(sub.torus_dim, 2);
    }

    #[test]
    fn e8_node_one_centralizer_is_d7() {
        let e8 = rs("E8");
        let h = e8.coweight_element(&[1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        let sub = e8.root_centralizer_subsystem(&h);
        assert_eq!(sub.type_label(), "D7+T1");
        assert_eq!(sub.reductive_dimension(), 92);
    }

    #[test]
    fn identification_recovers_standard_types() {
        for s in [
            "A1", "A5", "B2", "B4", "C3", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
        ] {
            let t: SimpleType = s.parse().unwrap();
            let comps = identify_components(&t.symmetric_form());
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].0, t, "{s}");
            // The ordering must reproduce the standard Gram matrix.
            let ord = &comps[0].1;
            let b = t.symmetric_form();
            let permuted: Vec<Vec<i64>> = ord
                .iter()
                .map(|&i| ord.iter().map(|&j| b[i][j]).collect())
                .collect();
            assert_eq!(permuted, b, "{s}");
        }
    }

    #[test]
    fn long_root_subsystem_of_g2_is_a2() {
        let g2 = rs("G2");
        let long: Vec<Root> = g2
            .positive_roots()
            .iter()
            .filter(|r| g2.inner(r, r) == 6)
            .cloned()
            .collect();
        let sub = g2.subsystem_from_positive(long);
        assert_eq!(sub.components, vec!["A2".parse().unwrap()]);
        assert_eq!(sub.torus_dim, 0);
    }
}
