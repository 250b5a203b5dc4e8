//! Seeded graph generators, including four-part stall instances built to
//! land in a chosen bi-star case.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::approx4::{classify_case, try_merge4, try_pull4};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Caterpillar,
    Grid,
    RandomConnected,
    DoubleStarCase1,
    DoubleStarCase2,
    BiStarCase3,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Caterpillar,
        Family::Grid,
        Family::RandomConnected,
        Family::DoubleStarCase1,
        Family::DoubleStarCase2,
        Family::BiStarCase3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Caterpillar => "caterpillar",
            Family::Grid => "grid",
            Family::RandomConnected => "random_connected",
            Family::DoubleStarCase1 => "double_star_case1",
            Family::DoubleStarCase2 => "double_star_case2",
            Family::BiStarCase3 => "bi_star_case3",
        }
    }

    /// The stall case a family is built to realize, if any.
    pub fn case(self) -> Option<u8> {
        match self {
            Family::DoubleStarCase1 => Some(1),
            Family::DoubleStarCase2 => Some(2),
            Family::BiStarCase3 => Some(3),
            _ => None,
        }
    }

    /// Smallest supported vertex count.
    pub fn min_n(self) -> usize {
        match self {
            Family::Cycle => 3,
            Family::Star => 2,
            Family::DoubleStarCase1 | Family::DoubleStarCase2 | Family::BiStarCase3 => 15,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        if s == "random" {
            return Ok(Family::RandomConnected);
        }
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    /// Probability of each extra edge on top of a random tree.
    pub edge_prob: f64,
    /// Number of cross edges between hub components in the case families;
    /// drawn from the seed when absent.
    pub cross_edges: Option<usize>,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            family,
            n,
            seed,
            edge_prob: 0.15,
            cross_edges: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < self.family.min_n() {
            return Err(Error::InvalidSpec(format!(
                "{} needs n >= {}, got {}",
                self.family,
                self.family.min_n(),
                self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.edge_prob) {
            return Err(Error::InvalidSpec(format!("edge probability {} outside [0, 1]", self.edge_prob)));
        }
        if self.cross_edges == Some(0) {
            return Err(Error::InvalidSpec("at least one cross edge is needed".into()));
        }
        Ok(())
    }
}

/// Parses `FAMILY:N:SEED`.
impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeneratorSpec> {
        let bad = || Error::InvalidSpec(format!("expected FAMILY:N:SEED, got `{s}`"));
        let mut it = s.split(':');
        let (Some(f), Some(n), Some(seed), None) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(bad());
        };
        Ok(GeneratorSpec::new(
            f.parse()?,
            n.parse().map_err(|_| bad())?,
            seed.parse().map_err(|_| bad())?,
        ))
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.family, self.n, self.seed)
    }
}

/// Builds the graph described by `spec`. Deterministic in the spec.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges: Vec<(usize, usize)> = match spec.family {
        Family::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Family::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        Family::Star => (1..n).map(|i| (0, i)).collect(),
        Family::Caterpillar => {
            let spine = n.div_ceil(2);
            let mut e: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
            e.extend((spine..n).map(|leg| (rng.random_range(0..spine), leg)));
            e
        }
        Family::Grid => {
            let w = (1..).find(|w| w * w >= n).unwrap();
            let mut e = Vec::new();
            for i in 0..n {
                if (i + 1) % w != 0 && i + 1 < n {
                    e.push((i, i + 1));
                }
                if i + w < n {
                    e.push((i, i + w));
                }
            }
            e
        }
        Family::RandomConnected => random_connected(n, spec.edge_prob, &mut rng),
        Family::DoubleStarCase1 | Family::DoubleStarCase2 | Family::BiStarCase3 => {
            return Ok(case_instance(spec)?.0);
        }
    };
    Graph::new(n, &edges)
}

/// Edges of a uniform random labeled tree on `ids`, decoded from a random
/// Prüfer sequence.
fn random_tree(ids: &[usize], rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let m = ids.len();
    if m < 2 {
        return Vec::new();
    }
    let seq: Vec<usize> = (0..m - 2).map(|_| rng.random_range(0..m)).collect();
    let mut degree = vec![1usize; m];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..m).filter(|&i| degree[i] == 1).collect();
    let mut edges = Vec::with_capacity(m - 1);
    for &x in &seq {
        let leaf = leaves.pop_first().expect("a Prüfer decode always has a leaf");
        edges.push((ids[leaf], ids[x]));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push((ids[a], ids[b]));
    edges
}

/// Adds every missing pair inside `ids` with probability `p`.
fn sprinkle(ids: &[usize], edges: &mut Vec<(usize, usize)>, p: f64, rng: &mut impl Rng) {
    let have: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for (x, &a) in ids.iter().enumerate() {
        for &b in &ids[x + 1..] {
            if !have.contains(&(a.min(b), a.max(b))) && rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
}

fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let ids: Vec<usize> = (0..n).collect();
    let mut edges = random_tree(&ids, rng);
    sprinkle(&ids, &mut edges, p, rng);
    edges
}

/// A hub with small path-shaped pieces hanging off it. Returns the pieces.
fn hub_part(ids: &[usize], piece: usize, p: f64, edges: &mut Vec<(usize, usize)>, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    let hub = ids[0];
    let pieces: Vec<Vec<usize>> = ids[1..].chunks(piece).map(<[usize]>::to_vec).collect();
    for c in &pieces {
        edges.extend(c.windows(2).map(|w| (w[0], w[1])));
        sprinkle(c, edges, p, rng);
        edges.push((hub, c[rng.random_range(0..c.len())]));
    }
    pieces
}

/// The large part without an attachment hub: either a random tree with a few
/// extra edges or, half the time, a star of short paths.
fn body(ids: &[usize], p: f64, edges: &mut Vec<(usize, usize)>, rng: &mut impl Rng) {
    if rng.random_bool(0.5) {
        let mut local = random_tree(ids, rng);
        sprinkle(ids, &mut local, p / 2.0, rng);
        edges.extend(local);
    } else {
        let len = ((ids.len() - 1) / 4).max(1);
        for c in ids[1..].chunks(len) {
            edges.push((ids[0], c[0]));
            edges.extend(c.windows(2).map(|w| (w[0], w[1])));
        }
    }
}

/// Builds a case-family graph together with the four-part stall it was
/// designed around. The stall is checked before returning: no Merge or Pull
/// applies and classification yields the requested case with no earlier
/// certificate.
pub fn case_instance(spec: &GeneratorSpec) -> Result<(Graph, Partition)> {
    spec.validate()?;
    let Some(case) = spec.family.case() else {
        return Err(Error::InvalidSpec(format!("{} is not a case family", spec.family)));
    };
    let n = spec.n;
    let unit = (n / 16).max(1);
    let rest = n - 2 * unit;
    let s4 = rest.div_ceil(2);
    let s3 = rest - s4;
    // Blocks in id order V1, V2, V3, V4 so the sorted partition keeps them.
    let v1: Vec<usize> = (0..unit).collect();
    let v2: Vec<usize> = (unit..2 * unit).collect();
    let v3: Vec<usize> = (2 * unit..2 * unit + s3).collect();
    let v4: Vec<usize> = (2 * unit + s3..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..256 {
        let mut edges = Vec::new();
        let path = |b: &[usize], e: &mut Vec<(usize, usize)>| e.extend(b.windows(2).map(|w| (w[0], w[1])));
        path(&v1, &mut edges);
        path(&v2, &mut edges);
        let attach = |b: &[usize], hub: usize, e: &mut Vec<(usize, usize)>, r: &mut ChaCha8Rng| {
            e.push((hub, b[r.random_range(0..b.len())]))
        };
        // Pieces on the two sides that cross edges may join.
        let (from, to): (Vec<Vec<usize>>, Vec<Vec<usize>>) = match case {
            1 => {
                let pieces = hub_part(&v4, unit, spec.edge_prob, &mut edges, &mut rng);
                body(&v3, spec.edge_prob, &mut edges, &mut rng);
                attach(&v1, v4[0], &mut edges, &mut rng);
                attach(&v2, v4[0], &mut edges, &mut rng);
                (pieces, vec![v3.clone()])
            }
            2 => {
                let pieces = hub_part(&v3, unit, spec.edge_prob, &mut edges, &mut rng);
                body(&v4, spec.edge_prob, &mut edges, &mut rng);
                attach(&v1, v3[0], &mut edges, &mut rng);
                attach(&v2, v3[0], &mut edges, &mut rng);
                (pieces, vec![v4.clone()])
            }
            _ => {
                let p3 = hub_part(&v3, unit, spec.edge_prob, &mut edges, &mut rng);
                let p4 = hub_part(&v4, unit, spec.edge_prob, &mut edges, &mut rng);
                attach(&v1, v3[0], &mut edges, &mut rng);
                attach(&v2, v4[0], &mut edges, &mut rng);
                (p3, p4)
            }
        };
        let count = spec.cross_edges.unwrap_or_else(|| rng.random_range(1..=from.len()));
        let mut order: Vec<usize> = (0..from.len()).collect();
        order.shuffle(&mut rng);
        let mut seen = BTreeSet::new();
        for &i in order.iter().cycle().take(count) {
            let a = from[i][rng.random_range(0..from[i].len())];
            let side = &to[rng.random_range(0..to.len())];
            let b = side[rng.random_range(0..side.len())];
            if seen.insert((a, b)) {
                edges.push((a, b));
            }
        }
        let g = Graph::new(n, &edges)?;
        let p = Partition::from_lists(&g, &[v1.clone(), v2.clone(), v3.clone(), v4.clone()])?;
        if try_merge4(&g, &p).is_some() || try_pull4(&g, &p).is_some() {
            continue;
        }
        match classify_case(&g, &p) {
            Ok((s, None)) if s.case == case => return Ok((g, p)),
            _ => continue,
        }
    }
    Err(Error::InvalidSpec(format!("could not realize case {case} for {spec}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(f: Family, n: usize, seed: u64) -> Graph {
        generate(&GeneratorSpec::new(f, n, seed)).unwrap()
    }

    #[test]
    fn analytic_shapes() {
        let p = gen(Family::Path, 12, 0);
        assert_eq!(p.edges(), (1..12).map(|i| (i - 1, i)).collect::<Vec<_>>().as_slice());
        let s = gen(Family::Star, 7, 0);
        assert_eq!(s.neighbors(0), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(gen(Family::Cycle, 10, 3).edge_count(), 10);
        assert_eq!(gen(Family::Grid, 9, 0).edge_count(), 12);
        assert_eq!(gen(Family::Caterpillar, 11, 5).edge_count(), 10);
    }

    #[test]
    fn deterministic_in_spec() {
        for f in Family::ALL {
            let n = f.min_n().max(16);
            assert_eq!(gen(f, n, 9), gen(f, n, 9), "{f}");
        }
        assert_ne!(gen(Family::RandomConnected, 12, 1), gen(Family::RandomConnected, 12, 2));
    }

    #[test]
    fn spec_round_trip() {
        let s: GeneratorSpec = "random:10:42".parse().unwrap();
        assert_eq!(s.family, Family::RandomConnected);
        assert_eq!(s.to_string(), "random_connected:10:42");
        assert!("star:7".parse::<GeneratorSpec>().is_err());
        assert!("blob:7:1".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&GeneratorSpec::new(Family::Cycle, 2, 0)).is_err());
        assert!(generate(&GeneratorSpec::new(Family::BiStarCase3, 14, 0)).is_err());
        let mut s = GeneratorSpec::new(Family::RandomConnected, 5, 0);
        s.edge_prob = 1.5;
        assert!(generate(&s).is_err());
    }

    #[test]
    fn case_families_realize_their_case() {
        for f in [Family::DoubleStarCase1, Family::DoubleStarCase2, Family::BiStarCase3] {
            for n in [15, 16, 23, 40] {
                for seed in 0..5 {
                    let (g, p) = case_instance(&GeneratorSpec::new(f, n, seed)).unwrap();
                    let (s, early) = classify_case(&g, &p).unwrap();
                    assert_eq!(Some(s.case), f.case());
                    assert!(early.is_none());
                }
            }
        }
    }
}
