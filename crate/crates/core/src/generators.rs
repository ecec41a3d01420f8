//! Builders for chain and lattice graphs, chain enumeration and sampling, and
//! the O(1)-per-step incremental edge-type census.
//!
//! Chains are assembled abstractly by fusing rings on shared edges rather
//! than by planar embedding, so arbitrarily kinked (helicene-like) chains
//! never self-overlap. The terminal hexagon of a chain always exposes four
//! degree-2 vertices `w1..w4` in cyclic order between the two shared-edge
//! endpoints; the next ring fuses on `(w1,w2)`, `(w2,w3)` or `(w3,w4)`.

use rand::RngExt;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::census::EdgeTypeCensus;
use crate::error::{Error, Result};
use crate::graph::MolecularGraph;

/// Attachment mode of one chain-growth step.
///
/// `Type2` is the linear attachment on the middle free edge; `Type1` and
/// `Type3` are the two mirror kinks and contribute identical census deltas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainStep {
    Type1,
    Type2,
    Type3,
}

impl ChainStep {
    pub const ALL: [ChainStep; 3] = [ChainStep::Type1, ChainStep::Type2, ChainStep::Type3];

    /// Swap the two mirror kinks; the linear step is its own mirror image.
    pub fn mirrored(self) -> Self {
        match self {
            ChainStep::Type1 => ChainStep::Type3,
            ChainStep::Type2 => ChainStep::Type2,
            ChainStep::Type3 => ChainStep::Type1,
        }
    }

    fn digit(self) -> char {
        match self {
            ChainStep::Type1 => '1',
            ChainStep::Type2 => '2',
            ChainStep::Type3 => '3',
        }
    }

    fn from_digit(c: char) -> Option<Self> {
        match c {
            '1' => Some(ChainStep::Type1),
            '2' => Some(ChainStep::Type2),
            '3' => Some(ChainStep::Type3),
            _ => None,
        }
    }
}

/// The two chain families grown by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainFamily {
    /// Catacondensed chains of fused hexagons.
    Hexagonal,
    /// Alternating hexagon/square chains; each step adds a square and a hexagon.
    Phenylene,
}

impl ChainFamily {
    pub const BOTH: [ChainFamily; 2] = [ChainFamily::Hexagonal, ChainFamily::Phenylene];

    /// Token used in the chain-spec text format.
    pub fn token(&self) -> &'static str {
        match self {
            ChainFamily::Hexagonal => "hex",
            ChainFamily::Phenylene => "phen",
        }
    }

    fn from_token(s: &str) -> Option<Self> {
        match s {
            "hex" => Some(ChainFamily::Hexagonal),
            "phen" => Some(ChainFamily::Phenylene),
            _ => None,
        }
    }
}

impl std::fmt::Display for ChainFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// A fully determined chain: family, length `n ≥ 2` and the `n − 2` growth steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainSpec {
    family: ChainFamily,
    n: u64,
    steps: Vec<ChainStep>,
}

impl ChainSpec {
    pub fn new(family: ChainFamily, n: u64, steps: Vec<ChainStep>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("chain length n must be ≥ 2"));
        }
        if steps.len() as u64 != n - 2 {
            return Err(Error::domain(format!(
                "a chain of length n = {n} needs exactly {} steps, got {}",
                n - 2,
                steps.len()
            )));
        }
        Ok(ChainSpec { family, n, steps })
    }

    pub fn family(&self) -> ChainFamily {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    /// The chain with every kink replaced by its mirror image.
    pub fn mirrored(&self) -> ChainSpec {
        ChainSpec {
            family: self.family,
            n: self.n,
            steps: self.steps.iter().map(|s| s.mirrored()).collect(),
        }
    }
}

/// Text format `family:n:steps`, e.g. `hex:5:212` or `phen:2:`.
impl std::fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:", self.family.token(), self.n)?;
        for step in &self.steps {
            write!(f, "{}", step.digit())?;
        }
        Ok(())
    }
}

impl std::str::FromStr for ChainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::ChainSpecParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = s.splitn(3, ':');
        let family = parts
            .next()
            .and_then(ChainFamily::from_token)
            .ok_or_else(|| parse_err("expected family 'hex' or 'phen'"))?;
        let n: u64 = parts
            .next()
            .ok_or_else(|| parse_err("expected 'family:n:steps'"))?
            .parse()
            .map_err(|_| parse_err("chain length is not a non-negative integer"))?;
        let steps_str = parts.next().ok_or_else(|| parse_err("expected 'family:n:steps'"))?;
        let steps = steps_str
            .chars()
            .map(|c| ChainStep::from_digit(c).ok_or_else(|| parse_err("steps must be digits in {1,2,3}")))
            .collect::<Result<Vec<_>>>()?;
        ChainSpec::new(family, n, steps)
    }
}

/// Step-choice probabilities `(p1, p2)`; the third mode has probability `1 − p1 − p2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainProbabilities {
    p1: f64,
    p2: f64,
}

impl ChainProbabilities {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        if !(p1.is_finite() && p2.is_finite() && p1 >= 0.0 && p2 >= 0.0 && p1 + p2 <= 1.0) {
            return Err(Error::domain(format!(
                "step probabilities need p1 ≥ 0, p2 ≥ 0, p1 + p2 ≤ 1; got p1 = {p1}, p2 = {p2}"
            )));
        }
        Ok(ChainProbabilities { p1, p2 })
    }

    /// Uniform choice over the three modes.
    pub fn uniform() -> Self {
        ChainProbabilities { p1: 1.0 / 3.0, p2: 1.0 / 3.0 }
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }

    pub fn p3(&self) -> f64 {
        1.0 - self.p1 - self.p2
    }
}

/// Classify a unit draw `u ∈ [0, 1)` into a step: `Type1` on `[0, p1)`,
/// `Type2` on `[p1, p1 + p2)`, `Type3` otherwise.
pub(crate) fn step_from_unit(u: f64, probs: ChainProbabilities) -> ChainStep {
    if u < probs.p1 {
        ChainStep::Type1
    } else if u < probs.p1 + probs.p2 {
        ChainStep::Type2
    } else {
        ChainStep::Type3
    }
}

/// Edge accumulator for ring-fusion construction.
struct RingAssembler {
    edges: Vec<(u32, u32)>,
    next: u32,
}

impl RingAssembler {
    /// Start with one hexagon on vertices 0..6.
    fn hexagon() -> Self {
        let mut a = RingAssembler { edges: Vec::new(), next: 6 };
        for i in 0..6u32 {
            a.edges.push((i, (i + 1) % 6));
        }
        a
    }

    fn alloc(&mut self, count: u32) -> u32 {
        let first = self.next;
        self.next += count;
        first
    }

    /// Fuse a hexagon onto the existing edge `(u, v)`; the four new vertices
    /// are returned in path order from the `u` side to the `v` side.
    fn fuse_hexagon(&mut self, u: u32, v: u32) -> [u32; 4] {
        let x = self.alloc(4);
        self.edges.push((u, x));
        self.edges.push((x, x + 1));
        self.edges.push((x + 1, x + 2));
        self.edges.push((x + 2, x + 3));
        self.edges.push((x + 3, v));
        [x, x + 1, x + 2, x + 3]
    }

    /// Fuse a square onto the existing edge `(u, v)`; returns the opposite
    /// edge of the square, oriented from the `u` side to the `v` side.
    fn fuse_square(&mut self, u: u32, v: u32) -> (u32, u32) {
        let y = self.alloc(2);
        self.edges.push((u, y));
        self.edges.push((y, y + 1));
        self.edges.push((y + 1, v));
        (y, y + 1)
    }

    fn finish(self) -> Result<MolecularGraph> {
        MolecularGraph::new(self.next as usize, self.edges)
    }
}

/// Free edge of the terminal hexagon selected by a step, given the window of
/// four degree-2 vertices `w1..w4`.
fn attachment_edge(window: [u32; 4], step: ChainStep) -> (u32, u32) {
    match step {
        ChainStep::Type1 => (window[0], window[1]),
        ChainStep::Type2 => (window[1], window[2]),
        ChainStep::Type3 => (window[2], window[3]),
    }
}

fn expect_family(spec: &ChainSpec, family: ChainFamily) -> Result<()> {
    if spec.family() == family {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "chain spec is for family '{}', expected '{}'",
            spec.family().token(),
            family.token()
        )))
    }
}

/// Explicit hexagonal chain: `4n + 2` vertices, `5n + 1` edges.
pub fn build_hexagonal_chain(spec: &ChainSpec) -> Result<MolecularGraph> {
    expect_family(spec, ChainFamily::Hexagonal)?;
    let mut assembler = RingAssembler::hexagon();
    let mut window = assembler.fuse_hexagon(0, 1);
    for &step in spec.steps() {
        let (u, v) = attachment_edge(window, step);
        window = assembler.fuse_hexagon(u, v);
    }
    assembler.finish()
}

/// Explicit phenylene chain: `6n` vertices, `8n − 2` edges. Each growth step
/// fuses a square on the chosen free edge, then a hexagon on the square's
/// opposite edge.
pub fn build_phenylene_chain(spec: &ChainSpec) -> Result<MolecularGraph> {
    expect_family(spec, ChainFamily::Phenylene)?;
    let mut assembler = RingAssembler::hexagon();
    let (s1, s2) = assembler.fuse_square(0, 1);
    let mut window = assembler.fuse_hexagon(s1, s2);
    for &step in spec.steps() {
        let (u, v) = attachment_edge(window, step);
        let (s1, s2) = assembler.fuse_square(u, v);
        window = assembler.fuse_hexagon(s1, s2);
    }
    assembler.finish()
}

/// Build whichever family the spec names.
pub fn build_chain(spec: &ChainSpec) -> Result<MolecularGraph> {
    match spec.family() {
        ChainFamily::Hexagonal => build_hexagonal_chain(spec),
        ChainFamily::Phenylene => build_phenylene_chain(spec),
    }
}

/// `(m22, m23, m33)` counts or per-step deltas.
pub(crate) type CensusCounts = (u64, u64, u64);

/// Census of the length-2 chain plus the per-step deltas
/// `(Δm22, Δm23, Δm33)` for a linear step and for either kink.
pub(crate) fn census_model(family: ChainFamily) -> (CensusCounts, CensusCounts, CensusCounts) {
    match family {
        ChainFamily::Hexagonal => ((6, 4, 1), (0, 4, 1), (1, 2, 2)),
        ChainFamily::Phenylene => ((6, 4, 4), (0, 4, 4), (1, 2, 5)),
    }
}

/// Edge-type census of a chain computed incrementally from its step sequence,
/// in O(1) work per step, with no graph materialized.
pub fn incremental_census(family: ChainFamily, steps: &[ChainStep]) -> EdgeTypeCensus {
    let (base, linear_delta, kink_delta) = census_model(family);
    let linear = steps.iter().filter(|&&s| s == ChainStep::Type2).count() as u64;
    let kinks = steps.len() as u64 - linear;
    EdgeTypeCensus::benzenoid(
        base.0 + linear * linear_delta.0 + kinks * kink_delta.0,
        base.1 + linear * linear_delta.1 + kinks * kink_delta.1,
        base.2 + linear * linear_delta.2 + kinks * kink_delta.2,
    )
}

fn guard_vertex_budget(vertices: u64) -> Result<()> {
    if vertices > u32::MAX as u64 {
        return Err(Error::domain(format!(
            "graph would have {vertices} vertices, above the u32 id budget"
        )));
    }
    Ok(())
}

/// Rectangular graphene sheet: `k` rows of `n` fused hexagons, consecutive
/// rows joined by `n` vertical bonds.
///
/// Each row is the linear chain drawn as two zigzag paths of `2n + 1`
/// vertices with rungs at the even positions; bond `j` of a row gap joins the
/// bottom path's odd position `2j − 1` to the next row's top odd position.
/// The stated domain is `1 ≤ k ≤ n`; `allow_out_of_domain` relaxes it to
/// `n ≥ 1, k ≥ 1`.
pub fn build_graphene(n: u64, k: u64, allow_out_of_domain: bool) -> Result<MolecularGraph> {
    if n < 1 || k < 1 {
        return Err(Error::domain("graphene needs n ≥ 1 and k ≥ 1"));
    }
    if !allow_out_of_domain && k > n {
        return Err(Error::domain(format!(
            "graphene domain is 1 ≤ k ≤ n (got n = {n}, k = {k}); enable the domain override to relax"
        )));
    }
    guard_vertex_budget(2 * (2 * n + 1) * k)?;

    let row_len = 2 * n + 1;
    let row_stride = 2 * row_len;
    let top = |r: u64, i: u64| (r * row_stride + i) as u32;
    let bottom = |r: u64, i: u64| (r * row_stride + row_len + i) as u32;

    let mut edges = Vec::with_capacity(((6 * n + 1) * k - n) as usize);
    for r in 0..k {
        for i in 0..row_len - 1 {
            edges.push((top(r, i), top(r, i + 1)));
            edges.push((bottom(r, i), bottom(r, i + 1)));
        }
        for i in (0..row_len).step_by(2) {
            edges.push((top(r, i), bottom(r, i)));
        }
    }
    for r in 0..k - 1 {
        for j in 1..=n {
            edges.push((bottom(r, 2 * j - 1), top(r + 1, 2 * j - 1)));
        }
    }
    MolecularGraph::new((row_stride * k) as usize, edges)
}

/// Carbon nanocone: a central `k`-gon surrounded by `n` hexagon layers.
///
/// Ring `i` (`i = 0..=n`) is a cycle of `k(2i + 1)` vertices split into `k`
/// sectors of `2i + 1` positions; the even positions of ring `i − 1` send
/// spokes to the odd positions of ring `i` within the same sector. The stated
/// domain is `k ≥ 5`; `allow_small_apex` relaxes it to `k ≥ 3`. `n ≥ 1` is
/// required in either case.
pub fn build_nanocone(k: u64, n: u64, allow_small_apex: bool) -> Result<MolecularGraph> {
    let min_k = if allow_small_apex { 3 } else { 5 };
    if k < min_k {
        return Err(Error::domain(format!(
            "nanocone needs k ≥ {min_k} (got k = {k})"
        )));
    }
    if n < 1 {
        return Err(Error::domain("nanocone needs n ≥ 1"));
    }
    guard_vertex_budget(k * (n + 1) * (n + 1))?;

    // Ring i starts at id k·i² and has k(2i + 1) vertices.
    let ring_start = |i: u64| k * i * i;
    let vertex = |i: u64, s: u64, j: u64| (ring_start(i) + s * (2 * i + 1) + j) as u32;

    let mut edges = Vec::with_capacity((k * (n + 1) * (3 * n + 2) / 2) as usize);
    for i in 0..=n {
        let len = k * (2 * i + 1);
        let start = ring_start(i);
        for pos in 0..len {
            edges.push(((start + pos) as u32, (start + (pos + 1) % len) as u32));
        }
    }
    for i in 1..=n {
        for s in 0..k {
            for t in 0..i {
                edges.push((vertex(i - 1, s, 2 * t), vertex(i, s, 2 * t + 1)));
            }
        }
    }
    MolecularGraph::new((k * (n + 1) * (n + 1)) as usize, edges)
}

/// Default cap on exhaustive chain enumeration (3^(n−2) specs).
pub const DEFAULT_ENUMERATION_CAP: u64 = 10;

/// All `3^(n−2)` chains of length `n` in lexicographic step order, under the
/// default cap [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_chains(family: ChainFamily, n: u64) -> Result<Vec<ChainSpec>> {
    enumerate_chains_capped(family, n, DEFAULT_ENUMERATION_CAP)
}

/// All `3^(n−2)` chains of length `n` in lexicographic step order, guarded by
/// an explicit cap on `n`.
pub fn enumerate_chains_capped(family: ChainFamily, n: u64, cap: u64) -> Result<Vec<ChainSpec>> {
    if n < 2 {
        return Err(Error::domain("chain length n must be ≥ 2"));
    }
    if n > cap {
        return Err(Error::EnumerationCapExceeded { n, cap });
    }
    let len = (n - 2) as u32;
    let total = 3u64.pow(len);
    let mut specs = Vec::with_capacity(total as usize);
    for index in 0..total {
        let mut steps = Vec::with_capacity(len as usize);
        for pos in 0..len {
            let digit = (index / 3u64.pow(len - 1 - pos)) % 3;
            steps.push(ChainStep::ALL[digit as usize]);
        }
        specs.push(ChainSpec { family, n, steps });
    }
    Ok(specs)
}

/// Draw a random chain: steps are i.i.d. with `P(Type1) = p1`,
/// `P(Type2) = p2`, `P(Type3) = 1 − p1 − p2`. Deterministic for a fixed seed;
/// concurrent sampling should use distinct seeds.
pub fn sample_chain(
    family: ChainFamily,
    n: u64,
    probs: ChainProbabilities,
    seed: u64,
) -> Result<ChainSpec> {
    if n < 2 {
        return Err(Error::domain("chain length n must be ≥ 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = (0..n - 2)
        .map(|_| step_from_unit(rng.random::<f64>(), probs))
        .collect();
    Ok(ChainSpec { family, n, steps })
}
