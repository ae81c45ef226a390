//! Root systems of types A, B, C, D, E6 and E7 in their standard coordinate
//! models, with exact rational coordinates.
//!
//! Simple roots follow Bourbaki numbering (index 0 here is node 1):
//!
//! | type | ambient | simple roots |
//! |------|---------|--------------|
//! | A_n  | R^{n+1} | ε_i − ε_{i+1} |
//! | B_n  | R^n     | ε_i − ε_{i+1}, ε_n |
//! | C_n  | R^n     | ε_i − ε_{i+1}, 2ε_n |
//! | D_n  | R^n     | ε_i − ε_{i+1}, ε_{n−1} + ε_n |
//! | E6, E7 | R^8   | the first 6 (resp. 7) simple roots of the E8 model |
//!
//! E7 is realized as the E8 roots orthogonal to ε_7 + ε_8, and E6 as those
//! additionally orthogonal to ε_6 + ε_8.
//!
//! Inner products are normalized so that long roots have squared length 2.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl Family {
    /// Smallest admissible rank, and the fixed rank for exceptional types.
    pub fn rank_bounds(self) -> (usize, Option<usize>) {
        match self {
            Family::A => (1, None),
            Family::B | Family::C => (2, None),
            Family::D => (3, None),
            Family::E6 => (6, Some(6)),
            Family::E7 => (7, Some(7)),
        }
    }

    pub fn is_simply_laced(self) -> bool {
        !matches!(self, Family::B | Family::C)
    }

    /// Number of roots of the system of this type and rank.
    pub fn root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E6 => 72,
            Family::E7 => 126,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            other => Err(Error::Config(format!("unsupported family `{other}`"))),
        }
    }
}

/// A vector in the ambient coordinate space of a root system.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<Rational64>,
}

impl Root {
    pub fn new(coords: Vec<Rational64>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| Rational64::from_integer(c)).collect() }
    }

    /// `Σ sign·ε_index` with 1-based indices in a space of dimension `dim`.
    pub fn from_terms(dim: usize, terms: &[(usize, i64)]) -> Self {
        let mut coords = vec![Rational64::zero(); dim];
        for &(i, c) in terms {
            coords[i - 1] += Rational64::from_integer(c);
        }
        Self { coords }
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Root) -> Rational64 {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: i64) -> Root {
        Root { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Canonical name: `e1-e3`, `e1+e2`, `2e1`, `-e2` for integral vectors,
    /// and a coordinate list `(1/2,-1/2,...)` otherwise.
    pub fn name(&self) -> String {
        if !self.is_integral() {
            let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
            return format!("({})", parts.join(","));
        }
        let mut out = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            let c = c.to_integer();
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses either a canonical name (`e1-e3`, `2e1`) or a coordinate
    /// list `(a,b,...)` of rationals, producing a vector of dimension `dim`.
    pub fn parse(s: &str, dim: usize) -> Result<Root> {
        let s = s.trim();
        let bad = |why: &str| Error::Argument(format!("cannot parse root `{s}`: {why}"));
        if let Some(inner) = s.strip_prefix('(').or_else(|| s.strip_prefix('[')) {
            let inner =
                inner.strip_suffix(')').or_else(|| inner.strip_suffix(']')).ok_or_else(|| bad("unclosed list"))?;
            let coords = inner
                .split(',')
                .map(|t| t.trim().parse::<Rational64>().map_err(|_| bad("bad coordinate")))
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != dim {
                return Err(bad(&format!("expected {dim} coordinates, got {}", coords.len())));
            }
            return Ok(Root { coords });
        }
        let mut coords = vec![Rational64::zero(); dim];
        let bytes = s.as_bytes();
        let mut pos = 0;
        if bytes.is_empty() {
            return Err(bad("empty"));
        }
        while pos < bytes.len() {
            let mut sign = 1;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(bad("expected `+` or `-`"));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mult: i64 = if pos == start { 1 } else { s[start..pos].parse().map_err(|_| bad("bad multiplier"))? };
            if pos >= bytes.len() || (bytes[pos] != b'e' && bytes[pos] != b'E') {
                return Err(bad("expected `e<index>`"));
            }
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let idx: usize = s[start..pos].parse().map_err(|_| bad("bad index"))?;
            if idx == 0 || idx > dim {
                return Err(bad(&format!("index {idx} outside 1..={dim}")));
            }
            coords[idx - 1] += Rational64::from_integer(sign * mult);
        }
        Ok(Root { coords })
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

/// A finite crystallographic root system with a fixed positive system.
///
/// Roots are indexed: `0..n_pos` are the positive roots in increasing
/// (height, coordinates) order and `n_pos + i` is the negative of root `i`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    dim: usize,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Root, usize>,
    simple: Vec<usize>,
    coeffs: Vec<Vec<i64>>,
    scale: Rational64,
    gram: Vec<Rational64>,
    sums: Vec<Option<usize>>,
}

fn half(n: i64) -> Rational64 {
    Rational64::new(n, 2)
}

fn e8_roots() -> Vec<Root> {
    let mut out = Vec::with_capacity(240);
    for i in 1..=8 {
        for j in i + 1..=8 {
            for si in [1, -1] {
                for sj in [1, -1] {
                    out.push(Root::from_terms(8, &[(i, si), (j, sj)]));
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let coords = (0..8).map(|k| if mask & (1 << k) != 0 { half(-1) } else { half(1) }).collect();
            out.push(Root::new(coords));
        }
    }
    out
}

fn e8_simple_roots() -> Vec<Root> {
    let mut a1 = vec![half(-1); 8];
    a1[0] = half(1);
    a1[7] = half(1);
    let mut simple = vec![Root::new(a1), Root::from_terms(8, &[(1, 1), (2, 1)])];
    for i in 1..=6 {
        simple.push(Root::from_terms(8, &[(i + 1, 1), (i, -1)]));
    }
    simple
}

fn classical_roots(family: Family, n: usize) -> (usize, Vec<Root>, Vec<Root>) {
    let mut roots = Vec::new();
    match family {
        Family::A => {
            let dim = n + 1;
            for i in 1..=dim {
                for j in 1..=dim {
                    if i != j {
                        roots.push(Root::from_terms(dim, &[(i, 1), (j, -1)]));
                    }
                }
            }
            let simple = (1..=n).map(|i| Root::from_terms(dim, &[(i, 1), (i + 1, -1)])).collect();
            (dim, roots, simple)
        }
        Family::B | Family::C | Family::D => {
            for i in 1..=n {
                for j in i + 1..=n {
                    for si in [1, -1] {
                        for sj in [1, -1] {
                            roots.push(Root::from_terms(n, &[(i, si), (j, sj)]));
                        }
                    }
                }
                let k = if family == Family::C { 2 } else { 1 };
                if family != Family::D {
                    roots.push(Root::from_terms(n, &[(i, k)]));
                    roots.push(Root::from_terms(n, &[(i, -k)]));
                }
            }
            let mut simple: Vec<Root> = (1..n).map(|i| Root::from_terms(n, &[(i, 1), (i + 1, -1)])).collect();
            simple.push(match family {
                Family::B => Root::from_terms(n, &[(n, 1)]),
                Family::C => Root::from_terms(n, &[(n, 2)]),
                _ => Root::from_terms(n, &[(n - 1, 1), (n, 1)]),
            });
            (n, roots, simple)
        }
        Family::E6 | Family::E7 => unreachable!(),
    }
}

fn exceptional_roots(family: Family) -> (usize, Vec<Root>, Vec<Root>) {
    let w78 = Root::from_terms(8, &[(7, 1), (8, 1)]);
    let w68 = Root::from_terms(8, &[(6, 1), (8, 1)]);
    let keep = |r: &Root| r.dot(&w78).is_zero() && (family == Family::E7 || r.dot(&w68).is_zero());
    let roots = e8_roots().into_iter().filter(keep).collect();
    let rank = if family == Family::E6 { 6 } else { 7 };
    let simple = e8_simple_roots().into_iter().take(rank).collect();
    (8, roots, simple)
}

/// Builds the root system of the given type. Errors name the offending
/// parameter when the pair is not a supported simple type.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let (min, fixed) = family.rank_bounds();
    if let Some(r) = fixed {
        if rank != r {
            return Err(Error::Config(format!("rank: {family} has fixed rank {r}, got {rank}")));
        }
    } else if rank < min {
        return Err(Error::Config(format!("rank: {family}_{rank} is not a simple type (rank must be >= {min})")));
    }
    let (dim, raw, simple_vecs) = match family {
        Family::E6 | Family::E7 => exceptional_roots(family),
        _ => classical_roots(family, rank),
    };
    RootSystem::from_parts(family, rank, dim, raw, simple_vecs)
}

impl RootSystem {
    fn from_parts(family: Family, rank: usize, dim: usize, raw: Vec<Root>, simple_vecs: Vec<Root>) -> Result<Self> {
        let max_len = raw.iter().map(|r| r.dot(r)).max().ok_or_else(|| Error::Consistency("empty root set".into()))?;
        let scale = Rational64::from_integer(2) / max_len;

        // Expansion in simple roots: solve G k = ((α_i, β))_i with G the Gram
        // matrix of the simple roots.
        let gram = Matrix::from_fn(rank, rank, |i, j| simple_vecs[i].dot(&simple_vecs[j]));
        let gram_inv = gram.inverse().ok_or_else(|| Error::Consistency("simple roots are dependent".into()))?;
        let expand = |r: &Root| -> Result<Vec<i64>> {
            let rhs: Vec<Rational64> = simple_vecs.iter().map(|s| s.dot(r)).collect();
            gram_inv
                .mul_vec(&rhs)
                .into_iter()
                .map(|c| {
                    if c.is_integer() {
                        Ok(c.to_integer())
                    } else {
                        Err(Error::Consistency(format!("root {r} has non-integral coefficient {c}")))
                    }
                })
                .collect()
        };

        let mut positives = Vec::new();
        for r in &raw {
            let k = expand(r)?;
            if k.iter().all(|&c| c >= 0) {
                positives.push((k.iter().sum::<i64>(), r.clone(), k));
            } else if !k.iter().all(|&c| c <= 0) {
                return Err(Error::Consistency(format!("root {r} has mixed-sign coefficients")));
            }
        }
        positives.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let n_pos = positives.len();
        if 2 * n_pos != raw.len() {
            return Err(Error::Consistency("positive roots are not half of the system".into()));
        }

        let mut roots: Vec<Root> = positives.iter().map(|p| p.1.clone()).collect();
        let mut coeffs: Vec<Vec<i64>> = positives.iter().map(|p| p.2.clone()).collect();
        for i in 0..n_pos {
            roots.push(-&roots[i]);
            coeffs.push(coeffs[i].iter().map(|c| -c).collect());
        }
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        if index.len() != roots.len() || raw.iter().any(|r| !index.contains_key(r)) {
            return Err(Error::Consistency("positive and negative roots do not partition the system".into()));
        }
        let simple = simple_vecs
            .iter()
            .map(|s| index.get(s).copied().ok_or_else(|| Error::Consistency(format!("simple root {s} is not a root"))))
            .collect::<Result<Vec<_>>>()?;

        let n = roots.len();
        let mut gram = Vec::with_capacity(n * n);
        let mut sums = Vec::with_capacity(n * n);
        for a in &roots {
            for b in &roots {
                gram.push(a.dot(b) * scale);
                sums.push(index.get(&(a + b)).copied());
            }
        }

        Ok(Self { family, rank, dim, roots, n_pos, index, simple, coeffs, scale, gram, sums })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient coordinate space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn simple_roots(&self) -> Vec<&Root> {
        self.simple.iter().map(|&i| &self.roots[i]).collect()
    }

    /// Root indices of the simple roots, in Bourbaki order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// Index of `roots[i] + roots[j]` when that is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.roots.len() + j]
    }

    /// Index of `roots[i] - roots[j]` when that is a root.
    pub fn diff_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sum_index(i, self.negate(j))
    }

    /// Normalized inner product of two roots by index.
    pub fn inner_idx(&self, i: usize, j: usize) -> Rational64 {
        self.gram[i * self.roots.len() + j]
    }

    pub fn norm2(&self, i: usize) -> Rational64 {
        self.inner_idx(i, i)
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.norm2(i) == Rational64::from_integer(2)
    }

    /// Coefficients of root `i` on the simple roots.
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coeffs[i].iter().sum()
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> usize {
        self.n_pos - 1
    }

    /// Cartan integer `2(a,b)/(a,a)` by index.
    pub fn cartan_integer(&self, a: usize, b: usize) -> i64 {
        let v = Rational64::from_integer(2) * self.inner_idx(a, b) / self.norm2(a);
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// Reflection of `b` through the hyperplane orthogonal to `a`.
    pub fn reflect(&self, a: usize, b: usize) -> Root {
        let k = self.cartan_integer(a, b);
        &self.roots[b] - &self.roots[a].scaled(k)
    }

    fn check_dim(&self, v: &Root) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::Argument(format!("vector {v} has dimension {}, expected {}", v.dim(), self.dim)));
        }
        Ok(())
    }

    pub fn is_root(&self, v: &Root) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.index.contains_key(v))
    }

    /// Normalized inner product (long roots have squared length 2).
    pub fn inner(&self, a: &Root, b: &Root) -> Result<Rational64> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(a.dot(b) * self.scale)
    }

    /// The `a`-string through `b`: `p` steps down and `q` steps up.
    pub fn root_string(&self, a: &Root, b: &Root) -> Result<(i64, i64)> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        if !self.index.contains_key(a) || !self.index.contains_key(b) {
            return Err(Error::Argument("root_string arguments must be roots".into()));
        }
        if a == b || *a == -b {
            return Err(Error::Argument(format!("root_string undefined for b = ±a (a = {a})")));
        }
        let mut p = 0;
        let mut cur = b - a;
        while self.index.contains_key(&cur) {
            p += 1;
            cur = &cur - a;
        }
        let mut q = 0;
        let mut cur = b + a;
        while self.index.contains_key(&cur) {
            q += 1;
            cur = &cur + a;
        }
        Ok((p, q))
    }

    /// `root_string` by index.
    pub fn string_idx(&self, a: usize, b: usize) -> (i64, i64) {
        let mut p = 0;
        let mut cur = b;
        while let Some(next) = self.diff_index(cur, a) {
            p += 1;
            cur = next;
        }
        let mut q = 0;
        let mut cur = b;
        while let Some(next) = self.sum_index(cur, a) {
            q += 1;
            cur = next;
        }
        (p, q)
    }

    /// Nodes whose coefficient in the highest root is 1.
    pub fn cominuscule_nodes(&self) -> Vec<usize> {
        let top = self.coefficients(self.highest_root());
        (0..self.rank).filter(|&k| top[k] == 1).collect()
    }

    /// Coordinate scale applied to raw dot products.
    pub fn scale(&self) -> Rational64 {
        self.scale
    }

    pub fn parse_root(&self, s: &str) -> Result<Root> {
        Root::parse(s, self.dim)
    }
}

/// Integral coordinates are required of classical roots; E-type roots have
/// either all-integer or all-half-odd coordinates.
pub fn coordinates_are_uniform(r: &Root) -> bool {
    let all_int = r.coords().iter().all(|c| c.is_integer());
    let all_half = r.coords().iter().all(|c| !c.is_integer() && (c * 2).is_integer() && (c * 2).to_integer().is_odd());
    all_int || all_half
}
