//! Exact rational realizations of the irreducible root systems, the Wolf
//! (maximal) root, the parabolic splitting with its quaternionic-line
//! pairing, and the search for non-orthogonal long-root pairs.

mod build;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{rat, Scalar};

/// Rational coordinate vector of a root in the ambient space.
pub type Root = Vec<Scalar>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("family {family} does not admit rank {rank}")]
    InadmissibleRank { family: RootFamily, rank: usize },
    #[error("no unique maximal root found (construction bug)")]
    NoMaximalRoot,
    #[error("Wolf criterion failed for a root: 2<a,l>/<l,l> = {ratio} not in {{-1,0,1}}")]
    WolfCriterionFailed { ratio: String },
    #[error("the given root is not the Wolf root of this system")]
    NotWolfRoot,
    #[error("unknown family letter {0:?}")]
    UnknownFamily(String),
}

/// The seven families of irreducible root systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for RootFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl RootFamily {
    pub fn parse(s: &str) -> Result<Self, RootSystemError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootFamily::A),
            "B" => Ok(RootFamily::B),
            "C" => Ok(RootFamily::C),
            "D" => Ok(RootFamily::D),
            "E" => Ok(RootFamily::E),
            "F" => Ok(RootFamily::F),
            "G" => Ok(RootFamily::G),
            other => Err(RootSystemError::UnknownFamily(other.to_string())),
        }
    }
}

/// Identifier of an irreducible root system: family plus rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystemId {
    pub family: RootFamily,
    pub rank: usize,
}

impl RootSystemId {
    pub fn new(family: RootFamily, rank: usize) -> Self {
        RootSystemId { family, rank }
    }

    /// Admissible ranks: A ≥ 1, B ≥ 2, C ≥ 2, D ≥ 3, E ∈ {6,7,8}, F = 4, G = 2.
    pub fn is_admissible(&self) -> bool {
        match self.family {
            RootFamily::A => self.rank >= 1,
            RootFamily::B => self.rank >= 2,
            RootFamily::C => self.rank >= 2,
            RootFamily::D => self.rank >= 3,
            RootFamily::E => (6..=8).contains(&self.rank),
            RootFamily::F => self.rank == 4,
            RootFamily::G => self.rank == 2,
        }
    }
}

impl fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An irreducible root system realized with rational coordinates and the
/// Euclidean dot product of the ambient space.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub id: RootSystemId,
    pub ambient_dim: usize,
    /// All roots, sorted; index into this list is the canonical root index.
    pub roots: Vec<Root>,
    /// The chosen simple system.
    pub simple_roots: Vec<Root>,
    index: BTreeMap<Root, usize>,
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Root {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_neg(a: &[Scalar]) -> Root {
    a.iter().map(|x| -x.clone()).collect()
}

fn vec_scale(a: &[Scalar], s: &Scalar) -> Root {
    a.iter().map(|x| x * s).collect()
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.index.contains_key(v)
    }

    pub fn root_index(&self, v: &[Scalar]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn form(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        dot(a, b)
    }

    /// Reflection `s_b(a) = a - (2<a,b>/<b,b>) b`.
    pub fn reflect(&self, a: &[Scalar], b: &[Scalar]) -> Root {
        let coeff = rat(2, 1) * dot(a, b) / dot(b, b);
        vec_sub(a, &vec_scale(b, &coeff))
    }

    /// Cartan pairing `2<a,b>/<b,b>`; an integer for roots (checked by the
    /// axiom sweep, not here).
    pub fn cartan_pairing(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        rat(2, 1) * dot(a, b) / dot(b, b)
    }

    /// Scale-free inner-product ratio `<a,b>/<l,l>` against a reference
    /// root `l`. Curvature formulas only ever consume such ratios, which
    /// are independent of the realization's normalization.
    pub fn ratio(&self, a: &[Scalar], b: &[Scalar], l: &[Scalar]) -> Scalar {
        dot(a, b) / dot(l, l)
    }

    /// Expansion coefficients of `v` over the simple roots.
    pub fn simple_coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let m = crate::exact::Matrix::from_fn(self.ambient_dim, self.rank(), |r, c| {
            self.simple_roots[c][r].clone()
        });
        crate::exact::solve(&m, v)
    }

    /// Height of a root: the coefficient sum over the simple system.
    pub fn height(&self, v: &[Scalar]) -> Scalar {
        let coords = self
            .simple_coordinates(v)
            .expect("root lies in the span of the simple system");
        let mut acc = Scalar::zero();
        for c in coords {
            acc += c;
        }
        acc
    }

    /// Positive roots with respect to the simple system, ascending by
    /// (height, coordinates).
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut pos: Vec<(Scalar, Root)> = self
            .roots
            .iter()
            .filter_map(|r| {
                let h = self.height(r);
                (h > Scalar::zero()).then(|| (h, r.clone()))
            })
            .collect();
        pos.sort();
        pos.into_iter().map(|(_, r)| r).collect()
    }

    /// Verifies the four root-system axioms exhaustively. Used by builders
    /// and by the verification suites.
    pub fn verify_axioms(&self) -> Result<(), String> {
        if self.roots.is_empty() {
            return Err("empty root set".into());
        }
        // No zero roots; the only multiples of a in the set are ±a.
        for a in &self.roots {
            if a.iter().all(Zero::is_zero) {
                return Err("zero vector among roots".into());
            }
            if !self.contains(&vec_neg(a)) {
                return Err("root set not symmetric under negation".into());
            }
        }
        for a in &self.roots {
            for b in &self.roots {
                // Proportional roots must be ±a.
                let ab = dot(a, b);
                let aa = dot(a, a);
                let bb = dot(b, b);
                if &ab * &ab == &aa * &bb {
                    // Cauchy-Schwarz equality: b = ±a up to scale; roots
                    // may only be equal or opposite.
                    let scale = ab / aa;
                    if vec_scale(a, &scale) == *b
                        && scale != rat(1, 1)
                        && scale != rat(-1, 1)
                    {
                        return Err(format!("non-trivial multiple of a root: scale {scale}"));
                    }
                }
                // Cartan integrality.
                let c = self.cartan_pairing(a, b);
                if !c.is_integer() {
                    return Err(format!("non-integral Cartan pairing {c}"));
                }
                // Closure under reflections.
                if !self.contains(&self.reflect(a, b)) {
                    return Err("root set not closed under reflection".into());
                }
            }
        }
        // Exactly two root lengths at most.
        let mut lengths: Vec<Scalar> = self.roots.iter().map(|r| dot(r, r)).collect();
        lengths.sort();
        lengths.dedup();
        if lengths.len() > 2 {
            return Err(format!("{} distinct root lengths", lengths.len()));
        }
        Ok(())
    }

    /// Applying `s_b` to every root, for every `b`, reproduces the root set.
    pub fn verify_weyl_closure(&self) -> bool {
        self.roots.iter().all(|b| {
            self.roots
                .iter()
                .all(|a| self.contains(&self.reflect(a, b)))
        })
    }
}

/// Wolf-root data of a root system: the maximal root, the set `S` of
/// isotropy roots, the quaternionic-line pairing and the quaternionic
/// dimension.
#[derive(Clone, Debug)]
pub struct WolfData {
    /// The Wolf root (highest root of the standard simple system).
    pub lambda: Root,
    /// Roots `a` with `2<a,l> = <l,l>`, sorted canonically.
    pub s_roots: Vec<Root>,
    /// Quaternionic dimension, `|S|/2`.
    pub n: usize,
    /// Unordered pairs `{a, l-a}` partitioning `s_roots` (each stored once,
    /// with the lexicographically smaller member first).
    pub lines: Vec<(Root, Root)>,
    /// Roots orthogonal to the Wolf root, together with ±l.
    pub k_roots: Vec<Root>,
}

impl WolfData {
    /// Real dimension `4n` of the associated symmetric space.
    pub fn dim_m(&self) -> usize {
        4 * self.n
    }

    /// Index of a root within `s_roots`.
    pub fn s_index(&self, root: &[Scalar]) -> Option<usize> {
        self.s_roots.iter().position(|r| r.as_slice() == root)
    }

    /// The partner `l - a` of an isotropy root.
    pub fn line_partner(&self, alpha: &[Scalar]) -> Root {
        vec_sub(&self.lambda, alpha)
    }
}

/// Builds the standard rational realization of an irreducible root system.
pub fn build_root_system(id: RootSystemId) -> Result<RootSystem, RootSystemError> {
    if !id.is_admissible() {
        return Err(RootSystemError::InadmissibleRank { family: id.family, rank: id.rank });
    }
    let (ambient_dim, roots, simple_roots) = build::realization(id);
    let mut sorted = roots;
    sorted.sort();
    sorted.dedup();
    let index = sorted.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    Ok(RootSystem { id, ambient_dim, roots: sorted, simple_roots, index })
}

/// The Wolf root: the highest root for the standard simple system. The Wolf
/// criterion `2<a,l>/<l,l> ∈ {-1,0,+1}` is verified for every other root
/// before returning.
pub fn wolf_root(rs: &RootSystem) -> Result<Root, RootSystemError> {
    let mut best: Option<(Scalar, Root)> = None;
    let mut unique = true;
    for r in &rs.roots {
        let h = rs.height(r);
        match &best {
            None => best = Some((h, r.clone())),
            Some((bh, _)) => {
                if &h > bh {
                    best = Some((h, r.clone()));
                    unique = true;
                } else if &h == bh {
                    unique = false;
                }
            }
        }
    }
    let (_, lambda) = best.ok_or(RootSystemError::NoMaximalRoot)?;
    if !unique {
        return Err(RootSystemError::NoMaximalRoot);
    }
    let minus_lambda = vec_neg(&lambda);
    for a in &rs.roots {
        if *a == lambda || *a == minus_lambda {
            continue;
        }
        let c = rs.cartan_pairing(a, &lambda);
        if c != rat(-1, 1) && c != rat(0, 1) && c != rat(1, 1) {
            return Err(RootSystemError::WolfCriterionFailed { ratio: c.to_string() });
        }
    }
    Ok(lambda)
}

/// The parabolic splitting attached to the Wolf root: the set `S`, the
/// quaternionic-line pairing and the centralizer roots.
pub fn wolf_decomposition(rs: &RootSystem) -> Result<WolfData, RootSystemError> {
    let lambda = wolf_root(rs)?;
    let ll = dot(&lambda, &lambda);
    let two = rat(2, 1);
    let mut s_roots = Vec::new();
    let mut k_roots = Vec::new();
    let minus_lambda = vec_neg(&lambda);
    for a in &rs.roots {
        let al = dot(a, &lambda);
        if &two * &al == ll {
            s_roots.push(a.clone());
        } else if al.is_zero() {
            k_roots.push(a.clone());
        }
    }
    k_roots.push(lambda.clone());
    k_roots.push(minus_lambda);
    k_roots.sort();

    debug_assert!(s_roots.len() % 2 == 0);
    let n = s_roots.len() / 2;
    let mut lines = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for a in &s_roots {
        if seen.contains(a) {
            continue;
        }
        let partner = vec_sub(&lambda, a);
        debug_assert!(s_roots.contains(&partner), "l - a must lie in S");
        debug_assert_ne!(*a, partner, "l - a = a cannot happen");
        seen.insert(a.clone());
        seen.insert(partner.clone());
        let pair = if *a < partner { (a.clone(), partner) } else { (partner, a.clone()) };
        lines.push(pair);
    }
    lines.sort();

    Ok(WolfData { lambda, s_roots, n, lines, k_roots })
}

/// Searches `S` for a long root (same length as the Wolf root). Such a root
/// exists for every irreducible type except A1, B2 and C_n; its existence
/// is what produces negative quaternionic bisectional curvature. Among all
/// candidates the lexicographically largest coordinate vector is returned,
/// which makes the output deterministic.
pub fn long_nonorthogonal_witness(
    rs: &RootSystem,
    lambda: &[Scalar],
) -> Result<Option<Root>, RootSystemError> {
    let expected = wolf_root(rs)?;
    if expected.as_slice() != lambda {
        return Err(RootSystemError::NotWolfRoot);
    }
    let ll = dot(lambda, lambda);
    let two = rat(2, 1);
    let mut witness: Option<Root> = None;
    for a in &rs.roots {
        if &two * &dot(a, lambda) == ll && dot(a, a) == ll {
            match &witness {
                Some(w) if *a <= *w => {}
                _ => witness = Some(a.clone()),
            }
        }
    }
    Ok(witness)
}

/// JSON shape for a root system report:
/// `{"family","rank","roots":[[...]],"wolf_root":[...],"n":int}` with all
/// coordinates as rational strings.
#[derive(Serialize)]
pub struct RootSystemJson {
    pub family: String,
    pub rank: usize,
    pub roots: Vec<Vec<String>>,
    pub wolf_root: Vec<String>,
    pub n: usize,
}

pub fn to_json(rs: &RootSystem, wd: &WolfData) -> RootSystemJson {
    RootSystemJson {
        family: rs.id.family.to_string(),
        rank: rs.id.rank,
        roots: rs
            .roots
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect(),
        wolf_root: wd.lambda.iter().map(|x| x.to_string()).collect(),
        n: wd.n,
    }
}
