//! The six families of compact irreducible hermitian symmetric spaces,
//! realized as cominuscule quotients of simple root systems.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::Serialize;

use crate::chevalley::{structure_constants, StructureTable};
use crate::error::{Error, Result};
use crate::root_system::{build_root_system, Family, Root, RootSystem};

/// Textual grammar: `gr:p,q` | `quadric:p` | `lagr:r` | `spinor:r` | `e6` | `e7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceId {
    /// Grassmannian of p-planes in C^{p+q}.
    Grassmannian {
        p: usize,
        q: usize,
    },
    /// Quadric hypersurface of complex dimension p.
    Quadric {
        p: usize,
    },
    /// Sp(r)/U(r).
    Lagrangian {
        r: usize,
    },
    /// SO(2r)/U(r).
    Spinor {
        r: usize,
    },
    E6,
    E7,
}

impl SpaceId {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            SpaceId::Grassmannian { p, q } => p >= 1 && q >= 1,
            SpaceId::Quadric { p } => p >= 3,
            SpaceId::Lagrangian { r } => r >= 2,
            SpaceId::Spinor { r } => r >= 3,
            SpaceId::E6 | SpaceId::E7 => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Config(format!("space `{self}` is outside the parameter bounds ({})", self.bounds())))
        }
    }

    pub fn family_name(self) -> &'static str {
        match self {
            SpaceId::Grassmannian { .. } => "gr",
            SpaceId::Quadric { .. } => "quadric",
            SpaceId::Lagrangian { .. } => "lagr",
            SpaceId::Spinor { .. } => "spinor",
            SpaceId::E6 => "e6",
            SpaceId::E7 => "e7",
        }
    }

    pub fn bounds(self) -> &'static str {
        match self {
            SpaceId::Grassmannian { .. } => "p >= 1, q >= 1",
            SpaceId::Quadric { .. } => "p >= 3",
            SpaceId::Lagrangian { .. } => "r >= 2",
            SpaceId::Spinor { .. } => "r >= 3",
            SpaceId::E6 | SpaceId::E7 => "no parameters",
        }
    }

    /// Ambient root system type and rank. The cominuscule node for the
    /// exceptional types is chosen at resolution.
    pub fn ambient(self) -> (Family, usize, Option<usize>) {
        match self {
            SpaceId::Grassmannian { p, q } => (Family::A, p + q - 1, Some(p - 1)),
            SpaceId::Quadric { p } if p % 2 == 1 => (Family::B, p.div_ceil(2), Some(0)),
            SpaceId::Quadric { p } => (Family::D, (p + 2) / 2, Some(0)),
            SpaceId::Lagrangian { r } => (Family::C, r, Some(r - 1)),
            SpaceId::Spinor { r } => (Family::D, r, Some(r - 1)),
            SpaceId::E6 => (Family::E6, 6, None),
            SpaceId::E7 => (Family::E7, 7, None),
        }
    }

    /// Complex dimension from the closed form.
    pub fn expected_dim(self) -> usize {
        match self {
            SpaceId::Grassmannian { p, q } => p * q,
            SpaceId::Quadric { p } => p,
            SpaceId::Lagrangian { r } => r * (r + 1) / 2,
            SpaceId::Spinor { r } => r * (r - 1) / 2,
            SpaceId::E6 => 16,
            SpaceId::E7 => 27,
        }
    }

    /// Rank of the symmetric space (size of a maximal strongly orthogonal set).
    pub fn expected_rank(self) -> usize {
        match self {
            SpaceId::Grassmannian { p, q } => p.min(q),
            SpaceId::Quadric { .. } => 2,
            SpaceId::Lagrangian { r } => r,
            SpaceId::Spinor { r } => r / 2,
            SpaceId::E6 => 2,
            SpaceId::E7 => 3,
        }
    }

    /// Complex positivity from the closed-form table.
    pub fn expected_positivity(self) -> usize {
        match self {
            SpaceId::Grassmannian { p, q } => p + q - 1,
            SpaceId::Quadric { p } => p - 1,
            SpaceId::Lagrangian { r } => r,
            SpaceId::Spinor { r } => 2 * r - 3,
            SpaceId::E6 => 11,
            SpaceId::E7 => 17,
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceId::Grassmannian { p, q } => write!(f, "gr:{p},{q}"),
            SpaceId::Quadric { p } => write!(f, "quadric:{p}"),
            SpaceId::Lagrangian { r } => write!(f, "lagr:{r}"),
            SpaceId::Spinor { r } => write!(f, "spinor:{r}"),
            SpaceId::E6 => f.write_str("e6"),
            SpaceId::E7 => f.write_str("e7"),
        }
    }
}

impl FromStr for SpaceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || {
            Error::Config(format!(
                "cannot parse space id `{s}` (expected gr:p,q | quadric:p | lagr:r | spinor:r | e6 | e7)"
            ))
        };
        let int = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let id = match s.split_once(':') {
            None => match s.to_ascii_lowercase().as_str() {
                "e6" => SpaceId::E6,
                "e7" => SpaceId::E7,
                _ => return Err(bad()),
            },
            Some((fam, args)) => match fam.to_ascii_lowercase().as_str() {
                "gr" => {
                    let (p, q) = args.split_once(',').ok_or_else(bad)?;
                    SpaceId::Grassmannian { p: int(p)?, q: int(q)? }
                }
                "quadric" => SpaceId::Quadric { p: int(args)? },
                "lagr" => SpaceId::Lagrangian { r: int(args)? },
                "spinor" => SpaceId::Spinor { r: int(args)? },
                _ => return Err(bad()),
            },
        };
        id.validate()
    }
}

impl Serialize for SpaceId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A resolved hermitian symmetric space: ambient algebra, cominuscule node
/// and the complementary roots Ψ indexing the holomorphic tangent space.
#[derive(Debug, Clone)]
pub struct HermitianSpace {
    id: SpaceId,
    table: StructureTable,
    node: usize,
    /// Root indices of Ψ, in increasing (height, coordinates) order.
    psi: Vec<usize>,
    /// Position in `psi` of each root index.
    psi_pos: Vec<Option<usize>>,
}

/// Outcome of the pairwise closure scan over Ψ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub pairs_checked: usize,
    pub orthogonal_pairs: usize,
    pub violations: usize,
}

fn psi_for(rs: &RootSystem, node: usize) -> Vec<usize> {
    (0..rs.n_positive()).filter(|&i| rs.coefficients(i)[node] == 1).collect()
}

/// Resolves a space id to its root datum and verifies the Ψ invariants.
pub fn resolve(id: SpaceId) -> Result<HermitianSpace> {
    let id = id.validate()?;
    let (family, rank, node) = id.ambient();
    let rs = build_root_system(family, rank)?;
    let node = match node {
        Some(k) => k,
        None => rs
            .cominuscule_nodes()
            .into_iter()
            .min_by_key(|&k| (psi_for(&rs, k).len(), k))
            .ok_or_else(|| Error::Consistency(format!("{family} has no cominuscule node")))?,
    };
    let table = structure_constants(&rs)?;
    let space = HermitianSpace::assemble(id, table, node);
    space.verify_invariants()?;
    Ok(space)
}

impl HermitianSpace {
    fn assemble(id: SpaceId, table: StructureTable, node: usize) -> Self {
        let rs = table.root_system();
        let psi = psi_for(rs, node);
        let mut psi_pos = vec![None; rs.len()];
        for (k, &i) in psi.iter().enumerate() {
            psi_pos[i] = Some(k);
        }
        Self { id, table, node, psi, psi_pos }
    }

    fn verify_invariants(&self) -> Result<()> {
        let rs = self.root_system();
        if self.rs_top_coefficient() != 1 {
            return Err(Error::Consistency(format!("node {} of {} is not cominuscule", self.node + 1, self.id)));
        }
        for &i in &self.psi {
            if !rs.is_positive(i) || rs.coefficients(i)[self.node] != 1 {
                return Err(Error::Consistency(format!("{} is not a complementary root", rs.root(i))));
            }
        }
        if self.v() != self.id.expected_dim() {
            return Err(Error::Consistency(format!(
                "{} has |Ψ| = {}, expected {}",
                self.id,
                self.v(),
                self.id.expected_dim()
            )));
        }
        self.check_psi_closure()?;
        Ok(())
    }

    fn rs_top_coefficient(&self) -> i64 {
        let rs = self.root_system();
        rs.coefficients(rs.highest_root())[self.node]
    }

    pub fn id(&self) -> SpaceId {
        self.id
    }

    pub fn root_system(&self) -> &RootSystem {
        self.table.root_system()
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    /// Bourbaki index (0-based) of the cominuscule simple root.
    pub fn cominuscule_node(&self) -> usize {
        self.node
    }

    /// Complex dimension `|Ψ|`.
    pub fn v(&self) -> usize {
        self.psi.len()
    }

    /// Root indices of Ψ in canonical order.
    pub fn psi_indices(&self) -> &[usize] {
        &self.psi
    }

    /// Position of a root index within Ψ.
    pub fn psi_position(&self, root: usize) -> Option<usize> {
        self.psi_pos[root]
    }

    /// Position within Ψ of a root vector, with an argument error otherwise.
    pub fn psi_position_of(&self, root: &Root) -> Result<usize> {
        self.root_system()
            .index_of(root)
            .and_then(|i| self.psi_pos[i])
            .ok_or_else(|| Error::Argument(format!("{root} is not in Ψ of {}", self.id)))
    }

    pub fn psi_root(&self, k: usize) -> &Root {
        self.root_system().root(self.psi[k])
    }

    /// Ψ: the positive roots with coefficient 1 on the cominuscule node.
    pub fn complementary_roots(&self) -> Vec<Root> {
        self.psi.iter().map(|&i| self.root_system().root(i).clone()).collect()
    }

    /// Every ordered pair in Ψ must have `α + β ∉ Σ` and `(α, β) ≥ 0`.
    pub fn check_psi_closure(&self) -> Result<ClosureReport> {
        let rs = self.root_system();
        let mut report = ClosureReport { pairs_checked: 0, orthogonal_pairs: 0, violations: 0 };
        for &a in &self.psi {
            for &b in &self.psi {
                report.pairs_checked += 1;
                let ip = rs.inner_idx(a, b);
                if rs.sum_index(a, b).is_some() || ip.is_negative() {
                    return Err(Error::Consistency(format!(
                        "Ψ closure violated by ({}, {}) in {}",
                        rs.root(a),
                        rs.root(b),
                        self.id
                    )));
                }
                if ip == num_rational::Rational64::from_integer(0) {
                    report.orthogonal_pairs += 1;
                }
            }
        }
        Ok(report)
    }

    /// Greedy cascade of strongly orthogonal roots in Ψ: repeatedly take the
    /// highest remaining root and discard everything not orthogonal to it.
    /// Returned as root indices.
    pub fn cascade_indices(&self) -> Vec<usize> {
        let rs = self.root_system();
        let mut remaining: Vec<usize> = self.psi.clone();
        let mut out = Vec::new();
        while let Some(&top) = remaining.iter().max_by_key(|&&i| (rs.height(i), i)) {
            out.push(top);
            remaining.retain(|&i| i != top && rs.inner_idx(i, top) == num_rational::Rational64::from_integer(0));
        }
        out
    }

    pub fn strongly_orthogonal_cascade(&self) -> Vec<Root> {
        self.cascade_indices().into_iter().map(|i| self.root_system().root(i).clone()).collect()
    }

    /// Copy with one structure constant's sign flipped and no re-verification.
    #[doc(hidden)]
    pub fn with_corrupted_constant(&self, a: usize, b: usize) -> Self {
        Self::assemble(self.id, self.table.with_corrupted_constant(a, b), self.node)
    }
}

/// Parameter ranges used for the closed-form table reproduction.
pub fn table_catalog() -> Vec<SpaceId> {
    let mut out = Vec::new();
    for p in 1..=6 {
        for q in 1..=6 {
            out.push(SpaceId::Grassmannian { p, q });
        }
    }
    out.extend((3..=12).map(|p| SpaceId::Quadric { p }));
    out.extend((2..=8).map(|r| SpaceId::Lagrangian { r }));
    out.extend((3..=8).map(|r| SpaceId::Spinor { r }));
    out.push(SpaceId::E6);
    out.push(SpaceId::E7);
    out
}

/// Parameter ranges used for the randomized curvature sweeps.
pub fn verification_catalog() -> Vec<SpaceId> {
    let mut out = Vec::new();
    for p in 1..=4 {
        for q in 1..=4 {
            out.push(SpaceId::Grassmannian { p, q });
        }
    }
    out.extend((3..=8).map(|p| SpaceId::Quadric { p }));
    out.extend((2..=6).map(|r| SpaceId::Lagrangian { r }));
    out.extend((3..=6).map(|r| SpaceId::Spinor { r }));
    out.push(SpaceId::E6);
    out.push(SpaceId::E7);
    out
}
