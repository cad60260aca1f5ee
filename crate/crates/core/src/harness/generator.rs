//! Seeded random instances: flag spheres grown from the cross-polytope and
//! subdivisions of a simplex, both by edge subdivisions.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::subdivision::{
    barycentric_subdivision, edge_subdivision, join_subdivision, stellar_subdivision, SubdivisionMap,
};

/// Name of the random generator, recorded in report headers.
pub const RNG_NAME: &str = "ChaCha8Rng::seed_from_u64 (rand_chacha 0.3)";

/// How moves pick their target, recorded in report headers.
pub const EDGE_CHOICE: &str = "uniform over the current faces of the required size, in face order";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Move {
    EdgeSubdivide,
    /// Join with a two-point sphere; only meaningful for spheres.
    JoinS0,
    /// Stellar subdivision on a face with at least two vertices; keeps
    /// subdivisions geometric but not necessarily flag.
    Stellar,
}

impl Move {
    pub fn name(self) -> &'static str {
        match self {
            Move::EdgeSubdivide => "edge-subdivide",
            Move::JoinS0 => "join-s0",
            Move::Stellar => "stellar",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-subdivide" | "edge" => Ok(Move::EdgeSubdivide),
            "join-s0" | "join" => Ok(Move::JoinS0),
            "stellar" => Ok(Move::Stellar),
            other => Err(Error::MalformedInstance(format!("unknown move `{other}`"))),
        }
    }
}

/// Parameters of one generated instance. `d` is the number of vertices of a
/// facet, so spheres have dimension `d - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub d: usize,
    pub steps: usize,
    pub seed: u64,
    pub moves: Vec<Move>,
}

impl GeneratorSpec {
    pub fn new(d: usize, steps: usize, seed: u64) -> Self {
        GeneratorSpec {
            d,
            steps,
            seed,
            moves: vec![Move::EdgeSubdivide],
        }
    }

    pub fn with_moves(mut self, moves: &[Move]) -> Self {
        self.moves = moves.to_vec();
        self
    }

    fn check(&self, allowed: &[Move]) -> Result<()> {
        if self.d == 0 {
            return Err(Error::MalformedInstance("d must be at least 1".into()));
        }
        if let Some(m) = self.moves.iter().find(|m| !allowed.contains(m)) {
            return Err(Error::MalformedInstance(format!("move `{m}` not allowed here")));
        }
        if self.steps > 0 && !self.moves.iter().any(|m| *m != Move::JoinS0) {
            return Err(Error::MalformedInstance("need a subdividing move".into()));
        }
        Ok(())
    }
}

/// One applied move, by vertex names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "kebab-case")]
pub enum TrailStep {
    EdgeSubdivide { face: Vec<String>, vertex: String },
    Stellar { face: Vec<String>, vertex: String },
    JoinS0 { pair: [String; 2] },
}

/// A generated complex with its map onto the starting complex.
#[derive(Debug, Clone)]
pub struct Generated {
    /// From the generated complex onto the start (the cross-polytope
    /// boundary, or the simplex).
    pub map: SubdivisionMap,
    pub trail: Vec<TrailStep>,
    /// The starting subdivision the moves were applied to.
    pub start: SubdivisionMap,
    /// Per step, the elementary subdivision map; `None` for joins.
    pub steps: Vec<Option<SubdivisionMap>>,
}

impl Generated {
    pub fn complex(&self) -> &SimplicialComplex {
        self.map.total()
    }

    /// The composite of the elementary maps after step `k`, from the final
    /// complex onto the complex reached after `k` steps. Fails when a join
    /// happens after `k`.
    pub fn suffix_map(&self, k: usize) -> Result<SubdivisionMap> {
        let mut out: Option<SubdivisionMap> = None;
        for step in &self.steps[k..] {
            let step = step
                .as_ref()
                .ok_or_else(|| Error::MalformedInstance("join inside a subdivision suffix".into()))?;
            out = Some(match out {
                None => step.clone(),
                Some(s) => SubdivisionMap::compose(&s, step)?,
            });
        }
        Ok(match out {
            Some(s) => s,
            None => SubdivisionMap::trivial(self.complex()),
        })
    }

    /// The start composed with the first `k` elementary maps, from the
    /// complex reached after `k` steps onto the base. Fails on joins.
    pub fn prefix_map(&self, k: usize) -> Result<SubdivisionMap> {
        let mut out = self.start.clone();
        for step in &self.steps[..k] {
            let step = step
                .as_ref()
                .ok_or_else(|| Error::MalformedInstance("join inside a subdivision prefix".into()))?;
            out = SubdivisionMap::compose(&out, step)?;
        }
        Ok(out)
    }

    /// Index just after the last join, so every later step subdivides.
    pub fn last_join_end(&self) -> usize {
        self.steps.iter().rposition(Option::is_none).map_or(0, |i| i + 1)
    }
}

fn pick(rng: &mut ChaCha8Rng, faces: &[Face]) -> Option<Face> {
    (!faces.is_empty()).then(|| faces[rng.gen_range(0..faces.len())])
}

fn apply_subdividing(
    rng: &mut ChaCha8Rng,
    mv: Move,
    current: &SubdivisionMap,
    vertex: String,
) -> Result<Option<(SubdivisionMap, TrailStep)>> {
    let k = current.total();
    let target = match mv {
        Move::EdgeSubdivide => pick(rng, k.faces_of_size(2)),
        _ => {
            let big: Vec<Face> = k.faces().iter().copied().filter(|f| f.len() >= 2).collect();
            pick(rng, &big)
        }
    };
    let Some(f) = target else {
        return Ok(None);
    };
    let face = k.sorted_names(f);
    let (step, trail) = if mv == Move::EdgeSubdivide {
        let step = edge_subdivision(k, f, Some(&vertex))?;
        (step, TrailStep::EdgeSubdivide { face, vertex })
    } else {
        let step = stellar_subdivision(k, f, Some(&vertex))?;
        (step, TrailStep::Stellar { face, vertex })
    };
    Ok(Some((step, trail)))
}

/// A random flag sphere of dimension `d - 1`, grown from the cross-polytope
/// boundary by the moves of `spec`.
///
/// The move sequence is drawn first. Joins with a two-point sphere are
/// capped at `d - 2`; with `J` joins the walk starts from the boundary of
/// the `(d - J)`-dimensional cross-polytope, so the final base is always the
/// `d`-dimensional one. On `d = 1` there are no edges and subdividing moves
/// do nothing.
pub fn random_flag_sphere(spec: &GeneratorSpec) -> Result<Generated> {
    spec.check(&[Move::EdgeSubdivide, Move::JoinS0])?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut ops = Vec::with_capacity(spec.steps);
    let mut joins = 0;
    for _ in 0..spec.steps {
        let mut mv = spec.moves[rng.gen_range(0..spec.moves.len())];
        if mv == Move::JoinS0 {
            if joins + 2 < spec.d {
                joins += 1;
            } else {
                mv = Move::EdgeSubdivide;
            }
        }
        ops.push(mv);
    }
    let mut m = spec.d - joins;
    let start = SubdivisionMap::trivial(&SimplicialComplex::cross_polytope(m));
    let mut current = start.clone();
    let mut trail = Vec::new();
    let mut steps = Vec::new();
    for (i, mv) in ops.into_iter().enumerate() {
        if mv == Move::JoinS0 {
            m += 1;
            let pair = [format!("u{m}"), format!("v{m}")];
            let s0 = SimplicialComplex::from_facets(&pair, &[[pair[0].clone()], [pair[1].clone()]])?;
            current = join_subdivision(&current, &SubdivisionMap::trivial(&s0))?;
            trail.push(TrailStep::JoinS0 { pair });
            steps.push(None);
        } else if let Some((step, t)) = apply_subdividing(&mut rng, mv, &current, format!("w{}", i + 1))? {
            current = SubdivisionMap::compose(&current, &step)?;
            trail.push(t);
            steps.push(Some(step));
        }
    }
    Ok(Generated {
        map: current,
        trail,
        start,
        steps,
    })
}

/// A random subdivision of the simplex on `{prefix}1 .. {prefix}d`, starting
/// from the trivial or the barycentric subdivision. New vertices are named
/// `{prefix}w{k}`.
pub fn random_simplex_subdivision(spec: &GeneratorSpec, prefix: &str, barycentric: bool) -> Result<Generated> {
    spec.check(&[Move::EdgeSubdivide, Move::Stellar])?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let names: Vec<String> = (1..=spec.d).map(|i| format!("{prefix}{i}")).collect();
    let start = if barycentric {
        barycentric_subdivision(&names)?
    } else {
        SubdivisionMap::trivial(&SimplicialComplex::simplex(&names)?)
    };
    let mut current = start.clone();
    let mut trail = Vec::new();
    let mut steps = Vec::new();
    for i in 0..spec.steps {
        let mv = spec.moves[rng.gen_range(0..spec.moves.len())];
        if let Some((step, t)) = apply_subdividing(&mut rng, mv, &current, format!("{prefix}w{}", i + 1))? {
            current = SubdivisionMap::compose(&current, &step)?;
            trail.push(t);
            steps.push(Some(step));
        }
    }
    Ok(Generated {
        map: current,
        trail,
        start,
        steps,
    })
}
