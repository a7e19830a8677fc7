//! Chevalley-basis realization of a complex semi-simple Lie algebra.
//!
//! Basis order: `h_1..h_r` (simple coroots), then `e_alpha` for the positive
//! roots in root-system order, then `e_{-alpha}` in the same order.
//!
//! Sign convention: positive roots are totally ordered by height (ties broken
//! by reverse lexicographic order of coordinates). For each positive non-simple
//! root `xi` the extraspecial pair `(alpha, beta)` has `alpha` minimal with
//! `xi - alpha` a positive root, and `N_{alpha,beta} = p + 1 > 0` where `p` is
//! the largest integer with `beta - p alpha` a root. Together with
//! `N_{-a,-b} = -N_{a,b}` and `[e_a, e_{-a}] = h_a` this fixes all constants.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::linalg::{q, IntegerMatrix, Rational, RationalMatrix};
use crate::roots::{CartanType, Root, RootSystem};

/// Element of the complexified algebra with exact rational real and
/// imaginary coordinates over the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub re: Vec<Rational>,
    pub im: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            re: vec![Rational::zero(); dim],
            im: vec![Rational::zero(); dim],
        }
    }

    pub fn real(re: Vec<Rational>) -> Self {
        let n = re.len();
        Self {
            re,
            im: vec![Rational::zero(); n],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = Self::zero(dim);
        x.re[i] = Rational::one();
        x
    }

    pub fn dim(&self) -> usize {
        self.re.len()
    }

    pub fn is_zero(&self) -> bool {
        self.re.iter().chain(&self.im).all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.im.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            re: self.re.iter().zip(&other.re).map(|(a, b)| a + b).collect(),
            im: self.im.iter().zip(&other.im).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            re: self.re.iter().zip(&other.re).map(|(a, b)| a - b).collect(),
            im: self.im.iter().zip(&other.im).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            re: self.re.iter().map(|a| a * c).collect(),
            im: self.im.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by the complex scalar `a + b i`.
    pub fn scale_complex(&self, a: &Rational, b: &Rational) -> Self {
        Self {
            re: self
                .re
                .iter()
                .zip(&self.im)
                .map(|(x, y)| a * x - b * y)
                .collect(),
            im: self
                .re
                .iter()
                .zip(&self.im)
                .map(|(x, y)| b * x + a * y)
                .collect(),
        }
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        Self {
            re: self.im.iter().map(|x| -x).collect(),
            im: self.re.clone(),
        }
    }

    /// Coordinates over `R` of length `2 dim`: real parts then imaginary parts.
    pub fn realified(&self) -> Vec<Rational> {
        self.re.iter().chain(&self.im).cloned().collect()
    }
}

/// A complex semi-simple Lie algebra in a Chevalley basis.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    /// Positive roots, then their negatives.
    roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    /// `table[i * dim + j]` is `[b_i, b_j]` as sparse integer coordinates.
    table: Vec<Vec<(usize, i64)>>,
    constants: HashMap<(usize, usize), i64>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Self {
        let pos = rs.positive_roots().to_vec();
        let np = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<Root>()));
        let root_index: HashMap<Root, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let constants = structure_constants(&rs, &roots, &root_index);
        let rank = rs.rank();
        let dim = rank + roots.len();
        let mut table = vec![Vec::new(); dim * dim];
        for (a, ra) in roots.iter().enumerate() {
            let ea = rank + a;
            for i in 0..rank {
                let c = rs.pairing_with_simple_coroot(ra, i);
                if c != 0 {
                    table[i * dim + ea] = vec![(ea, c)];
                    table[ea * dim + i] = vec![(ea, -c)];
                }
            }
            let opp = if a < np { a + np } else { a - np };
            table[ea * dim + rank + opp] = rs
                .coroot_coefficients(ra)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .collect();
        }
        for (&(a, b), &n) in &constants {
            let s: Root = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
            let c = root_index[&s];
            table[(rank + a) * dim + rank + b] = vec![(rank + c, n)];
        }
        Self {
            rs,
            roots,
            root_index,
            table,
            constants,
        }
    }

    pub fn from_type(t: &CartanType) -> Self {
        Self::new(RootSystem::new(t))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.rank() + self.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Root of the basis vector `i`, or `None` for a Cartan basis vector.
    pub fn basis_root(&self, i: usize) -> Option<&Root> {
        i.checked_sub(self.rank()).map(|k| &self.roots[k])
    }

    /// Basis index of `e_r`.
    pub fn root_vector(&self, r: &[i64]) -> Option<usize> {
        self.root_index.get(r).map(|k| self.rank() + k)
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// `N_{a,b}` with `[e_a, e_b] = N_{a,b} e_{a+b}`; zero when `a+b` is not a root.
    pub fn structure_constant(&self, a: &[i64], b: &[i64]) -> i64 {
        match (self.root_index.get(a), self.root_index.get(b)) {
            (Some(&i), Some(&j)) => self.constants.get(&(i, j)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// `[b_i, b_j]` in sparse form.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim() + j]
    }

    /// Bracket of real coordinate vectors.
    pub fn bracket_real(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        let ys: Vec<usize> = (0..n).filter(|&j| !y[j].is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ys {
                for &(k, c) in &self.table[i * n + j] {
                    out[k] += xi * &y[j] * q(c);
                }
            }
        }
        out
    }

    /// `[b_i, y]` for a real vector `y`.
    pub fn ad_basis_apply(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for &(k, c) in &self.table[i * n + j] {
                out[k] += yj * q(c);
            }
        }
        out
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let x_real = x.is_real();
        let y_real = y.is_real();
        let n = self.dim();
        let mut re = self.bracket_real(&x.re, &y.re);
        let mut im = vec![Rational::zero(); n];
        if !x_real && !y_real {
            for (a, b) in re.iter_mut().zip(self.bracket_real(&x.im, &y.im)) {
                *a -= b;
            }
        }
        if !y_real {
            for (a, b) in im.iter_mut().zip(self.bracket_real(&x.re, &y.im)) {
                *a += b;
            }
        }
        if !x_real {
            for (a, b) in im.iter_mut().zip(self.bracket_real(&x.im, &y.re)) {
                *a += b;
            }
        }
        AlgebraElement { re, im }
    }

    /// Matrix of `y -> [x, y]` for a real element `x`.
    pub fn ad_matrix(&self, x: &[Rational]) -> RationalMatrix {
        let n = self.dim();
        let mut m = RationalMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for &(k, c) in &self.table[i * n + j] {
                    let v = m.get(k, j) + xi * q(c);
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of `ad x` acting on the realification (`2 dim` square).
    pub fn ad_matrix_realified(&self, x: &AlgebraElement) -> RationalMatrix {
        let n = self.dim();
        let a = self.ad_matrix(&x.re);
        let b = self.ad_matrix(&x.im);
        let mut m = RationalMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let (ar, br) = (a.get(i, j), b.get(i, j));
                if !ar.is_zero() {
                    m.set(i, j, ar.clone());
                    m.set(n + i, n + j, ar.clone());
                }
                if !br.is_zero() {
                    m.set(i, n + j, -br.clone());
                    m.set(n + i, j, br.clone());
                }
            }
        }
        m
    }

    /// Complex dimension of the centralizer `ker ad x`.
    pub fn centralizer_dim(&self, x: &AlgebraElement) -> usize {
        let n = self.dim();
        if x.is_real() {
            n - self.ad_matrix(&x.re).rank()
        } else {
            let r = self.ad_matrix_realified(x).rank();
            debug_assert_eq!(r % 2, 0);
            n - r / 2
        }
    }

    /// Complex dimension of the adjoint orbit through `x`.
    pub fn orbit_dim(&self, x: &AlgebraElement) -> usize {
        self.dim() - self.centralizer_dim(x)
    }

    /// Cartan element as an algebra element.
    pub fn cartan_element(&self, coroot: &[Rational]) -> AlgebraElement {
        let mut x = AlgebraElement::zero(self.dim());
        for (i, c) in coroot.iter().enumerate() {
            x.re[i] = c.clone();
        }
        x
    }

    /// Killing form `tr(ad b_i ad b_j)` on basis vectors.
    pub fn killing_basis(&self, i: usize, j: usize) -> Rational {
        let n = self.dim();
        let mut tr = 0i64;
        for k in 0..n {
            for &(l, c) in &self.table[j * n + k] {
                for &(m, d) in &self.table[i * n + l] {
                    if m == k {
                        tr += c * d;
                    }
                }
            }
        }
        q(tr)
    }

    /// Complex-bilinear Killing form; returns `(re, im)`.
    pub fn killing(&self, x: &AlgebraElement, y: &AlgebraElement) -> (Rational, Rational) {
        let n = self.dim();
        let (mut re, mut im) = (Rational::zero(), Rational::zero());
        let support = |v: &AlgebraElement| -> Vec<usize> {
            (0..n)
                .filter(|&i| !v.re[i].is_zero() || !v.im[i].is_zero())
                .collect()
        };
        let sy = support(y);
        for i in support(x) {
            for &j in &sy {
                // The form pairs weight spaces of opposite weight only.
                let paired = match (self.basis_root(i), self.basis_root(j)) {
                    (None, None) => true,
                    (Some(a), Some(b)) => a.iter().zip(b).all(|(p, q)| p + q == 0),
                    _ => false,
                };
                if !paired {
                    continue;
                }
                let k = self.killing_basis(i, j);
                re += &k * (&x.re[i] * &y.re[j] - &x.im[i] * &y.im[j]);
                im += &k * (&x.re[i] * &y.im[j] + &x.im[i] * &y.re[j]);
            }
        }
        (re, im)
    }

    /// Basis of the compact real form: `i h_j`, `e_a - e_{-a}` and
    /// `i (e_a + e_{-a})` for each positive root `a`.
    pub fn compact_form_basis(&self) -> CompactFormBasis {
        let n = self.dim();
        let r = self.rank();
        let np = self.num_positive();
        let mut elements = Vec::with_capacity(n);
        for j in 0..r {
            elements.push(AlgebraElement::basis(n, j).times_i());
        }
        for k in 0..np {
            let ep = AlgebraElement::basis(n, r + k);
            let em = AlgebraElement::basis(n, r + np + k);
            elements.push(ep.sub(&em));
            elements.push(ep.add(&em).times_i());
        }
        CompactFormBasis { elements }
    }

    /// The conjugate-linear Cartan involution fixing the compact form:
    /// `e_a -> -e_{-a}`, `h -> -h`.
    pub fn compact_involution(&self, x: &AlgebraElement) -> AlgebraElement {
        let n = self.dim();
        let r = self.rank();
        let np = self.num_positive();
        let mut out = AlgebraElement::zero(n);
        for i in 0..n {
            let target = if i < r {
                i
            } else if i < r + np {
                i + np
            } else {
                i - np
            };
            out.re[target] = -x.re[i].clone();
            out.im[target] = x.im[i].clone();
        }
        out
    }

    /// Integer matrix of `ad x` for an element with integral real coordinates.
    pub fn ad_integer_matrix(&self, x: &[BigInt]) -> IntegerMatrix {
        let n = self.dim();
        let mut m = IntegerMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for &(k, c) in &self.table[i * n + j] {
                    let v = m.get(k, j) + xi * c;
                    m.set(k, j, v);
                }
            }
        }
        m
    }
}

/// Basis of the compact real form, as complex elements.
#[derive(Clone, Debug)]
pub struct CompactFormBasis {
    pub elements: Vec<AlgebraElement>,
}

impl CompactFormBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Real Gram matrix of the Killing form on this basis.
    pub fn killing_gram(&self, a: &ChevalleyAlgebra) -> RationalMatrix {
        let n = self.len();
        let mut g = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let (re, im) = a.killing(&self.elements[i], &self.elements[j]);
                debug_assert!(im.is_zero());
                g.set(i, j, re.clone());
                g.set(j, i, re);
            }
        }
        g
    }
}

fn structure_constants(
    rs: &RootSystem,
    roots: &[Root],
    index: &HashMap<Root, usize>,
) -> HashMap<(usize, usize), i64> {
    let np = roots.len() / 2;
    let is_pos = |k: usize| k < np;
    let neg = |k: usize| if k < np { k + np } else { k - np };
    let len2 = |k: usize| rs.inner(&roots[k], &roots[k]);
    let add = |a: &[i64], b: &[i64]| -> Root { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let sum_index = |a: usize, b: usize| index.get(&add(&roots[a], &roots[b])).copied();

    let mut npos: HashMap<(usize, usize), i64> = HashMap::new();

    // N for an arbitrary pair, from positive pairs of smaller height.
    fn n_any(
        a: usize,
        b: usize,
        np: usize,
        npos: &HashMap<(usize, usize), i64>,
        c: usize,
        len2: &dyn Fn(usize) -> i64,
    ) -> i64 {
        let is_pos = |k: usize| k < np;
        let neg = |k: usize| if k < np { k + np } else { k - np };
        let lookup = |x: usize, y: usize| -> i64 {
            *npos
                .get(&(x, y))
                .unwrap_or_else(|| panic!("missing positive pair ({x},{y})"))
        };
        if is_pos(a) && is_pos(b) {
            return lookup(a, b);
        }
        if !is_pos(a) && !is_pos(b) {
            return -lookup(neg(a), neg(b));
        }
        // a + b + c = 0; N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
        let (num, den) = if is_pos(c) {
            if is_pos(a) {
                (len2(c) * lookup(c, a), len2(b))
            } else {
                (len2(c) * lookup(b, c), len2(a))
            }
        } else if !is_pos(a) {
            (-len2(c) * lookup(neg(c), neg(a)), len2(b))
        } else {
            (-len2(c) * lookup(neg(b), neg(c)), len2(a))
        };
        assert_eq!(num % den, 0, "non-integral structure constant");
        num / den
    }

    let n_of = |a: usize, b: usize, npos: &HashMap<(usize, usize), i64>| -> i64 {
        let s = add(&roots[a], &roots[b]);
        let c = index[&s.iter().map(|x| -x).collect::<Root>()];
        n_any(a, b, np, npos, c, &len2)
    };

    for xi in 0..np {
        let pairs: Vec<(usize, usize)> = (0..np)
            .filter_map(|a| {
                let b = index.get(&add(&roots[xi], &roots[neg(a)]))?;
                (is_pos(*b) && a < *b).then_some((a, *b))
            })
            .collect();
        let Some(&(alpha, beta)) = pairs.first() else {
            continue;
        };
        let mut p = 0;
        loop {
            let cand: Root = roots[beta]
                .iter()
                .zip(&roots[alpha])
                .map(|(b, a)| b - (p + 1) * a)
                .collect();
            if index.contains_key(&cand) {
                p += 1;
            } else {
                break;
            }
        }
        let n_ab = p + 1;
        npos.insert((alpha, beta), n_ab);
        npos.insert((beta, alpha), -n_ab);
        for &(gamma, delta) in &pairs[1..] {
            let mut acc = Rational64::zero();
            if let Some(d) = sum_index(delta, neg(alpha)) {
                let t = n_of(delta, neg(alpha), &npos) * n_of(gamma, neg(beta), &npos);
                acc += Rational64::new(t, len2(d));
            }
            if let Some(g) = sum_index(gamma, neg(alpha)) {
                let t = n_of(neg(alpha), gamma, &npos) * n_of(delta, neg(beta), &npos);
                acc += Rational64::new(t, len2(g));
            }
            let v = acc * Rational64::new(len2(xi), n_ab);
            assert!(v.is_integer() && !v.is_zero(), "bad structure constant");
            let v = v.to_integer();
            npos.insert((gamma, delta), v);
            npos.insert((delta, gamma), -v);
        }
    }

    let mut all = HashMap::new();
    for a in 0..roots.len() {
        for b in 0..roots.len() {
            if b == neg(a) {
                continue;
            }
            if sum_index(a, b).is_some() {
                let v = n_of(a, b, &npos);
                debug_assert!(v.abs() > 0);
                all.insert((a, b), v);
            }
        }
    }
    all
}
