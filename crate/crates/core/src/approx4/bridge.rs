//! The three bridge moves: grow a connected set across the two hubs out of
//! whole hub components, then regroup.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::{total_len, union_all, VertexSet};

use super::StallStructure4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Three,
    Four,
}

/// A finished growth: `v3` and `v4` are unions of absorbed components.
struct Grown {
    v3: VertexSet,
    v4: VertexSet,
    in3: Vec<bool>,
    in4: Vec<bool>,
    crossed: Side,
}

/// Shortest prefix of `idx` whose total size exceeds `need`.
fn prefix(comps: &[VertexSet], idx: &[usize], need: usize) -> Option<Vec<usize>> {
    let mut acc = 0;
    for (pos, &i) in idx.iter().enumerate() {
        acc += comps[i].len();
        if acc > need {
            return Some(idx[..=pos].to_vec());
        }
    }
    None
}

struct Growth<'a> {
    g: &'a Graph,
    comps3: &'a [VertexSet],
    comps4: &'a [VertexSet],
    limit3: usize,
    limit4: usize,
}

impl Growth<'_> {
    fn seeds(&self) -> Vec<(Option<usize>, Option<usize>)> {
        let mut out = Vec::new();
        for (x, c4) in self.comps4.iter().enumerate() {
            for (y, c3) in self.comps3.iter().enumerate() {
                if self.g.touches(c4, c3) {
                    out.push((Some(x), Some(y)));
                }
            }
        }
        out.extend((0..self.comps3.len()).map(|y| (None, Some(y))));
        out.extend((0..self.comps4.len()).map(|x| (Some(x), None)));
        out
    }

    /// Grows from each seed in turn and returns the first growth that crosses
    /// a limit. Seeds inside an already stalled region are skipped: a stalled
    /// growth has absorbed its whole region without crossing.
    fn run(&self) -> Option<Grown> {
        let n = self.g.n();
        let mut explored3 = vec![false; self.comps3.len()];
        let mut explored4 = vec![false; self.comps4.len()];
        for (x, y) in self.seeds() {
            if x.is_some_and(|x| explored4[x]) || y.is_some_and(|y| explored3[y]) {
                continue;
            }
            let mut st = Grown {
                v3: VertexSet::empty(n),
                v4: VertexSet::empty(n),
                in3: vec![false; self.comps3.len()],
                in4: vec![false; self.comps4.len()],
                crossed: Side::Three,
            };
            if let Some(x) = x {
                st.in4[x] = true;
                st.v4.union_with(&self.comps4[x]);
            }
            if let Some(y) = y {
                st.in3[y] = true;
                st.v3.union_with(&self.comps3[y]);
            }
            if self.grow(&mut st) {
                return Some(st);
            }
            for (e, &a) in explored3.iter_mut().zip(&st.in3) {
                *e |= a;
            }
            for (e, &a) in explored4.iter_mut().zip(&st.in4) {
                *e |= a;
            }
        }
        None
    }

    /// True if a limit was crossed.
    fn grow(&self, st: &mut Grown) -> bool {
        if st.v3.len() > self.limit3 {
            st.crossed = Side::Three;
            return true;
        }
        if st.v4.len() > self.limit4 {
            st.crossed = Side::Four;
            return true;
        }
        loop {
            let c3: Vec<usize> = (0..self.comps3.len())
                .filter(|&y| !st.in3[y] && self.g.touches(&self.comps3[y], &st.v4))
                .collect();
            let room3 = self.limit3 - st.v3.len();
            if let Some(take) = prefix(self.comps3, &c3, room3) {
                for y in take {
                    st.in3[y] = true;
                    st.v3.union_with(&self.comps3[y]);
                }
                st.crossed = Side::Three;
                return true;
            }
            for &y in &c3 {
                st.in3[y] = true;
                st.v3.union_with(&self.comps3[y]);
            }
            let c4: Vec<usize> = (0..self.comps4.len())
                .filter(|&x| !st.in4[x] && self.g.touches(&self.comps4[x], &st.v3))
                .collect();
            let room4 = self.limit4 - st.v4.len();
            if let Some(take) = prefix(self.comps4, &c4, room4) {
                for x in take {
                    st.in4[x] = true;
                    st.v4.union_with(&self.comps4[x]);
                }
                st.crossed = Side::Four;
                return true;
            }
            for &x in &c4 {
                st.in4[x] = true;
                st.v4.union_with(&self.comps4[x]);
            }
            if c3.is_empty() && c4.is_empty() {
                return false;
            }
        }
    }
}

fn violation<T>(what: &str) -> Result<T> {
    Err(Error::StructureViolation(what.to_string()))
}

/// Shared shape of the first two bridges. Side `a` has limit `2|V1|` and
/// side `b` has limit `|V1|`; `V1` is folded into what remains of `b`.
struct Sides<'a> {
    a: &'a VertexSet,
    a_grown: VertexSet,
    b: &'a VertexSet,
    b_comps: &'a [VertexSet],
    b_grown: VertexSet,
    b_in: Vec<bool>,
    a_crossed: bool,
}

fn regroup(g: &Graph, s: Sides<'_>, v1: &VertexSet, v2: &VertexSet) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let s1 = v1.len();
    let b_with_v1 = s.b.union(v1);
    if !s.a_crossed {
        if s.b_grown.len() > 2 * s1 || s.a_grown.len() > 2 * s1 {
            return violation("bridge grew past twice the smallest part");
        }
        return Ok(vec![
            b_with_v1.difference(&s.b_grown),
            s.b_grown.union(&s.a_grown),
            s.a.difference(&s.a_grown),
            v2.clone(),
        ]);
    }
    if 3 * s.a_grown.len() >= 6 * s1 + s.a.len() || s.b_grown.len() > s1 {
        return violation("bridge crossing on the wide side is out of range");
    }
    let need = s1 - s.b_grown.len();
    let touching: Vec<usize> = (0..s.b_comps.len())
        .filter(|&x| !s.b_in[x] && g.touches(&s.b_comps[x], &s.a_grown))
        .collect();
    let a_rest = s.a.difference(&s.a_grown);
    let (extra, joins_grown) = match prefix(s.b_comps, &touching, need) {
        Some(take) => (take, true),
        None => {
            let apart: Vec<usize> = (0..s.b_comps.len())
                .filter(|&x| {
                    !s.b_in[x] && !g.touches(&s.b_comps[x], &s.a_grown) && g.touches(&s.b_comps[x], &a_rest)
                })
                .collect();
            match prefix(s.b_comps, &apart, need) {
                Some(take) => (take, false),
                None => return violation("bridge found no second cut-off set"),
            }
        }
    };
    let b_extra = union_all(n, extra.iter().map(|&x| &s.b_comps[x]));
    let moved = s.b_grown.len() + b_extra.len();
    if moved <= s1 || moved > 2 * s1 {
        return violation("bridge cut-off sets are out of range");
    }
    let b_out = s.b_grown.union(&b_extra);
    Ok(if joins_grown {
        vec![
            b_with_v1.difference(&b_out),
            b_out.union(&s.a_grown),
            a_rest,
            v2.clone(),
        ]
    } else {
        vec![
            b_with_v1.difference(&b_out),
            s.b_grown.union(&s.a_grown),
            a_rest.union(&b_extra),
            v2.clone(),
        ]
    })
}

fn hubs(s: &StallStructure4) -> Result<(usize, usize)> {
    match (s.u, s.v) {
        (Some(u), Some(v)) => Ok((u, v)),
        _ => violation("bridge needs both hubs"),
    }
}

/// Bridge for the configuration where both small parts hang on `u`.
pub fn try_bridge1(g: &Graph, p: &Partition, s: &StallStructure4) -> Result<Option<Partition>> {
    hubs(s)?;
    let [v1, v2, v3, v4] = p.parts() else {
        return violation("bridge needs four parts");
    };
    let s1 = v1.len();
    let growth = Growth {
        g,
        comps3: &s.comps3,
        comps4: &s.comps4,
        limit3: 2 * s1,
        limit4: s1,
    };
    let Some(st) = growth.run() else {
        return Ok(None);
    };
    let sides = Sides {
        a: v3,
        a_grown: st.v3,
        b: v4,
        b_comps: &s.comps4,
        b_grown: st.v4,
        b_in: st.in4,
        a_crossed: st.crossed == Side::Three,
    };
    Ok(Some(Partition::sorted(regroup(g, sides, v1, v2)?)))
}

/// Bridge for the configuration where both small parts hang on `v`.
pub fn try_bridge2(g: &Graph, p: &Partition, s: &StallStructure4) -> Result<Option<Partition>> {
    hubs(s)?;
    let [v1, v2, v3, v4] = p.parts() else {
        return violation("bridge needs four parts");
    };
    let s1 = v1.len();
    let growth = Growth {
        g,
        comps3: &s.comps3,
        comps4: &s.comps4,
        limit3: s1,
        limit4: 2 * s1,
    };
    let Some(st) = growth.run() else {
        return Ok(None);
    };
    let sides = Sides {
        a: v4,
        a_grown: st.v4,
        b: v3,
        b_comps: &s.comps3,
        b_grown: st.v3,
        b_in: st.in3,
        a_crossed: st.crossed == Side::Four,
    };
    Ok(Some(Partition::sorted(regroup(g, sides, v1, v2)?)))
}

/// Bridge for the configuration with one small part on each hub.
pub fn try_bridge3(g: &Graph, p: &Partition, s: &StallStructure4) -> Result<Option<Partition>> {
    hubs(s)?;
    let parts = p.parts();
    if parts.len() != 4 {
        return violation("bridge needs four parts");
    }
    let (vi, vj, v3, v4) = (&parts[s.i], &parts[1 - s.i], &parts[2], &parts[3]);
    let growth = Growth {
        g,
        comps3: &s.comps3,
        comps4: &s.comps4,
        limit3: vi.len(),
        limit4: vj.len(),
    };
    let Some(st) = growth.run() else {
        return Ok(None);
    };
    if st.v3.len() > 2 * vi.len() || st.v4.len() > 2 * vj.len() {
        return violation("bridge grew past twice a small part");
    }
    let bridge = st.v3.union(&st.v4);
    let out = match st.crossed {
        Side::Three => vec![bridge, v4.difference(&st.v4), v3.difference(&st.v3).union(vi), vj.clone()],
        Side::Four => vec![bridge, v4.difference(&st.v4).union(vj), v3.difference(&st.v3), vi.clone()],
    };
    debug_assert_eq!(total_len(&out), g.n());
    Ok(Some(Partition::sorted(out)))
}
