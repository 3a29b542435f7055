//! Cayley graphs Γ_pq(a) on Z/pqZ, their coset spreads, and the fusion
//! construction that glues copies along matched spread blocks.

use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::arith::{distinct_prime_factors, gcd, is_generator, is_prime, multiplicative_order, pow_mod};
use crate::error::{Error, Result};
use crate::feasibility::NeumaierParams;
use crate::graph::{regularity_report, Graph, VertexSubset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CayleySpec {
    pub p: u64,
    pub q: u64,
    pub a: u64,
}

impl CayleySpec {
    /// Checks every requirement on (p, q, a), naming the first one violated.
    pub fn new(p: u64, q: u64, a: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::Input(format!("p = {p} is not an odd prime")));
        }
        if q < 3 || q % 2 == 0 {
            return Err(Error::Input(format!("q = {q} is not an odd integer >= 3")));
        }
        if gcd(p, q) != 1 {
            return Err(Error::Input(format!("gcd(p, q) != 1 for p = {p}, q = {q}")));
        }
        let n = p.checked_mul(q).filter(|&n| n < 1 << 62).ok_or_else(|| Error::Input("p*q too large".into()))?;
        let a = a % n;
        if gcd(a, n) != 1 {
            return Err(Error::Input(format!("a = {a} is not a unit mod {n}")));
        }
        if !is_generator(a % p, p, &distinct_prime_factors(p - 1)?) {
            return Err(Error::Precondition(format!("a mod p = {} does not generate (Z/{p}Z)*", a % p)));
        }
        if pow_mod(a, (p - 1) / 2, n) != n - 1 {
            return Err(Error::Precondition(format!("a^((p-1)/2) != -1 mod {n} for a = {a}")));
        }
        Ok(CayleySpec { p, q, a })
    }

    pub fn modulus(&self) -> u64 {
        self.p * self.q
    }
}

/// The cyclic group S_n(a) = {a^j}, which must contain −1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenSet {
    pub modulus: u64,
    /// a^0, a^1, … in order.
    pub elements: Vec<u64>,
    #[serde(skip)]
    sorted: Vec<u64>,
}

impl GenSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.sorted.binary_search(&(x % self.modulus)).is_ok()
    }

    pub fn sorted(&self) -> &[u64] {
        &self.sorted
    }

    /// |S ∩ (S+1)|.
    pub fn shift_intersection(&self) -> usize {
        let n = self.modulus;
        self.sorted.iter().filter(|&&s| self.contains((s + n - 1) % n)).count()
    }
}

pub fn gen_set(n: u64, a: u64) -> Result<GenSet> {
    if n < 2 {
        return Err(Error::Input(format!("modulus {n} < 2")));
    }
    let a = a % n;
    let order = multiplicative_order(a, n).ok_or_else(|| Error::Input(format!("{a} is not a unit mod {n}")))?;
    if order % 2 != 0 || pow_mod(a, order / 2, n) != n - 1 {
        return Err(Error::Precondition(format!("{a} has order {order} mod {n} and no power equal to -1")));
    }
    let mut elements = Vec::with_capacity(order as usize);
    let mut x = 1 % n;
    for _ in 0..order {
        elements.push(x);
        x = ((x as u128 * a as u128) % n as u128) as u64;
    }
    let mut sorted = elements.clone();
    sorted.sort_unstable();
    Ok(GenSet {
        modulus: n,
        elements,
        sorted,
    })
}

/// A partition of the vertex set into blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spread {
    pub blocks: Vec<VertexSubset>,
}

impl Spread {
    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every vertex; errors unless the blocks partition `0..n`.
    pub fn block_of(&self, n: usize) -> Result<Vec<usize>> {
        let mut owner = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &m in &b.members {
                if m >= n || owner[m] != usize::MAX {
                    return Err(Error::Input(format!("spread blocks do not partition 0..{n} (vertex {m})")));
                }
                owner[m] = i;
            }
        }
        if let Some(u) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Input(format!("vertex {u} is in no spread block")));
        }
        Ok(owner)
    }
}

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub spec: CayleySpec,
    pub gens: GenSet,
    pub graph: Graph,
    pub spread: Spread,
    pub lambda: usize,
}

/// Cayley graph on Z/pqZ with connection set S_pq(a), together with the
/// spread formed by the cosets of ⟨p⟩. Blocks are ordered by the unique
/// element of S ∪ {0} they contain, so block 0 is ⟨p⟩ itself.
pub fn gamma_pq(spec: CayleySpec) -> Result<CayleyGraph> {
    let CayleySpec { p, q, a } = spec;
    let n = p * q;
    let gens = gen_set(n, a)?;
    if gens.len() as u64 != p - 1 {
        return Err(Error::Invariant(format!("|S| = {} != p-1", gens.len())));
    }
    let nu = n as usize;
    let mut graph = Graph::new(nu);
    for x in 0..n {
        for &s in gens.sorted() {
            let y = (x + s) % n;
            if x < y {
                graph.add_edge(x as usize, y as usize);
            }
        }
    }
    let mut rep = vec![u64::MAX; p as usize];
    rep[0] = 0;
    for &s in gens.sorted() {
        let r = (s % p) as usize;
        if rep[r] != u64::MAX {
            return Err(Error::Invariant(format!("coset {r} + <p> meets S u {{0}} twice")));
        }
        rep[r] = s;
    }
    let mut reps = rep.clone();
    reps.sort_unstable();
    let blocks = reps
        .iter()
        .map(|&r| VertexSubset::coclique((0..q).map(|j| ((r + j * p) % n) as usize).collect()))
        .collect();
    let lambda = graph.common_neighbours(0, 1);
    Ok(CayleyGraph {
        spec,
        gens,
        graph,
        spread: Spread { blocks },
        lambda,
    })
}

/// A permutation of block indices `0..m`, written in image notation
/// (`"2 0 1"`) or cycle notation (`"(0 2)(1 3)"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Input(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    /// Cycle notation needs the size, since fixed points may be omitted.
    pub fn from_cycles(text: &str, m: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        let body = text.trim();
        for chunk in body.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let inner = chunk
                .strip_prefix('(')
                .ok_or_else(|| Error::Input(format!("malformed cycle {chunk:?}")))?;
            let cycle: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Input(format!("bad index {t:?}"))))
                .collect::<Result<_>>()?;
            for (i, &x) in cycle.iter().enumerate() {
                if x >= m || std::mem::replace(&mut touched[x], true) {
                    return Err(Error::Input(format!("index {x} repeated or out of range 0..{m}")));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Image notation when the text has no parentheses, else cycle notation.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        if text.contains('(') {
            return Permutation::from_cycles(text, m);
        }
        let images: Vec<usize> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Input(format!("bad index {t:?}"))))
            .collect::<Result<_>>()?;
        if images.len() != m {
            return Err(Error::Input(format!("permutation has {} images, expected {m}", images.len())));
        }
        Permutation::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Image notation only; the size is the number of entries.
    fn from_str(s: &str) -> Result<Self> {
        let m = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).count();
        Permutation::parse(s, m)
    }
}

/// Copies to be fused. Block `c` of the first copy is glued to block
/// `perms[i-1](c)` of copy `i`.
#[derive(Debug, Clone)]
pub struct FusionSpec {
    pub copies: Vec<(Graph, Spread)>,
    pub perms: Vec<Permutation>,
}

impl FusionSpec {
    /// t copies of one graph, glued with identity permutations.
    pub fn identity(graph: Graph, spread: Spread, t: usize) -> Self {
        let m = spread.n_blocks();
        FusionSpec {
            copies: vec![(graph, spread); t],
            perms: vec![Permutation::identity(m); t.saturating_sub(1)],
        }
    }

    pub fn t(&self) -> usize {
        self.copies.len()
    }

    fn perm(&self, copy: usize) -> Option<&Permutation> {
        copy.checked_sub(1).map(|i| &self.perms[i])
    }

    /// Vertices of the fused clique with index `c`, in copy-major labels.
    pub fn fused_block(&self, c: usize) -> Vec<usize> {
        let v = self.copies[0].0.n_vertices();
        let mut members = Vec::new();
        for (i, (_, spread)) in self.copies.iter().enumerate() {
            let b = self.perm(i).map_or(c, |p| p.apply(c));
            members.extend(spread.blocks[b].members.iter().map(|&x| i * v + x));
        }
        members
    }

    fn validate(&self) -> Result<(usize, usize)> {
        let (first, first_spread) = self.copies.first().ok_or_else(|| Error::Input("no copies to fuse".into()))?;
        let (v, m) = (first.n_vertices(), first_spread.n_blocks());
        if self.perms.len() + 1 != self.copies.len() {
            return Err(Error::Input(format!(
                "{} permutations given for {} copies",
                self.perms.len(),
                self.copies.len()
            )));
        }
        for (g, s) in &self.copies {
            if g.n_vertices() != v || s.n_blocks() != m {
                return Err(Error::Input("copies differ in vertex or block count".into()));
            }
            s.block_of(v)?;
        }
        if let Some(p) = self.perms.iter().find(|p| p.len() != m) {
            return Err(Error::Input(format!("permutation on {} points, expected {m}", p.len())));
        }
        Ok((v, m))
    }
}

/// Disjoint union of the copies in which each fused block becomes a clique.
/// Vertex `x` of copy `i` gets label `i·v + x`.
pub fn fuse(fs: &FusionSpec) -> Result<Graph> {
    let (v, m) = fs.validate()?;
    let mut g = Graph::new(v * fs.t());
    for (i, (h, _)) in fs.copies.iter().enumerate() {
        for (x, y) in h.edges() {
            g.add_edge(i * v + x, i * v + y);
        }
    }
    for c in 0..m {
        let block = fs.fused_block(c);
        for (j, &x) in block.iter().enumerate() {
            for &y in &block[j + 1..] {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub cayley: CayleyGraph,
    pub t: usize,
    pub fusion: FusionSpec,
    pub graph: Graph,
    pub params: NeumaierParams,
    pub witness: VertexSubset,
}

/// Builds F(Γ_pq(a), …) with `t = (λ+2)/q` copies. An empty `perms` means
/// identity gluing; otherwise exactly `t − 1` permutations are required.
pub fn construct_neumaier(q: u64, p: u64, a: u64, perms: &[Permutation]) -> Result<Construction> {
    let spec = CayleySpec::new(p, q, a)?;
    let lambda = gen_set(spec.modulus(), spec.a)?.shift_intersection() as u64;
    if (lambda + 2) % q != 0 {
        return Err(Error::CongruenceFails {
            lambda,
            q,
            residue: lambda % q,
        });
    }
    let t = ((lambda + 2) / q) as usize;
    let cayley = gamma_pq(spec)?;
    if cayley.lambda as u64 != lambda {
        return Err(Error::Invariant(format!("graph lambda {} != counted {lambda}", cayley.lambda)));
    }
    let v = p * q;
    if (lambda + 2) * p % v != 0 || (lambda + 2) * p / v != t as u64 {
        return Err(Error::Invariant(format!("t = (lambda+2)(k+1)/v is not {t}")));
    }
    let mut fusion = FusionSpec::identity(cayley.graph.clone(), cayley.spread.clone(), t);
    if !perms.is_empty() {
        if perms.len() != t - 1 {
            return Err(Error::Input(format!("{} permutations given, t - 1 = {}", perms.len(), t - 1)));
        }
        fusion.perms = perms.to_vec();
    }
    let graph = fuse(&fusion)?;
    let witness = VertexSubset::clique(fusion.fused_block(0));
    let params = NeumaierParams::new(t as u64 * v, p + lambda, lambda, 1, lambda + 2);
    Ok(Construction {
        cayley,
        t,
        fusion,
        graph,
        params,
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strictness {
    /// The distance or copy-count criterion guarantees the fused graph is not
    /// strongly regular.
    SufficientConditionMet,
    /// The criterion failed, but exhaustive checking found the fused graph is
    /// not strongly regular.
    VerifiedByExhaustion,
    /// The fused graph is strongly regular.
    NotStrict,
}

impl Strictness {
    pub fn is_strict(self) -> bool {
        self != Strictness::NotStrict
    }
}

impl fmt::Display for Strictness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strictness::SufficientConditionMet => "sufficient-condition-met",
            Strictness::VerifiedByExhaustion => "verified-by-exhaustion",
            Strictness::NotStrict => "not-strict",
        })
    }
}

/// Whether some pair in different blocks of `g` lies at finite distance ≥ 3.
fn far_pair_across_blocks(g: &Graph, spread: &Spread) -> Result<bool> {
    let n = g.n_vertices();
    let owner = spread.block_of(n)?;
    let comp = g.components();
    Ok((0..n).into_par_iter().any(|u| {
        let ball = g.ball2(u);
        (0..n).any(|w| ball[w / 64] >> (w % 64) & 1 == 0 && comp[w] == comp[u] && owner[w] != owner[u])
    }))
}

pub fn strictness_check(fs: &FusionSpec, fused: &Graph) -> Result<Strictness> {
    fs.validate()?;
    let sufficient = if fs.t() >= 2 {
        fs.copies.iter().all(|(g, _)| {
            let n = g.n_vertices();
            g.edge_count() < n * (n - 1) / 2
        })
    } else {
        let (g, spread) = &fs.copies[0];
        far_pair_across_blocks(g, spread)?
    };
    if sufficient {
        return Ok(Strictness::SufficientConditionMet);
    }
    Ok(if regularity_report(fused).is_strongly_regular {
        Strictness::NotStrict
    } else {
        Strictness::VerifiedByExhaustion
    })
}
