//! The affine valued quivers with minimal symmetrizers, their primitive
//! null roots, extending vertices and tier numbers.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::quiver::{Edge, RankVector, ValuedQuiver};
use crate::CoreError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A1,
    A,
    B,
    C,
    D,
    BC1,
    BC,
    BD,
    CD,
    E6,
    E7,
    E8,
    F41,
    F42,
    G21,
    G23,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::A1,
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::BC1,
        Family::BC,
        Family::BD,
        Family::CD,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F41,
        Family::F42,
        Family::G21,
        Family::G23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC1 => "BC1",
            Family::BC => "BC",
            Family::BD => "BD",
            Family::CD => "CD",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F41 => "F41",
            Family::F42 => "F42",
            Family::G21 => "G21",
            Family::G23 => "G23",
        }
    }

    /// Whether the family takes a rank parameter.
    pub fn has_rank(self) -> bool {
        matches!(
            self,
            Family::A | Family::B | Family::C | Family::D | Family::BC | Family::BD | Family::CD
        )
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::B | Family::C | Family::BC => 2,
            Family::BD | Family::CD => 3,
            Family::D => 4,
            Family::A1 | Family::BC1 => 1,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F41 | Family::F42 => 4,
            Family::G21 | Family::G23 => 2,
        }
    }

    /// Tier number from the table.
    pub fn tier(self) -> u32 {
        match self {
            Family::B | Family::BC1 | Family::BC | Family::CD | Family::F42 => 2,
            Family::G23 => 3,
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
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Family, CoreError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CoreError::UnknownFamily(s.to_string()))
    }
}

/// Parse names like "C2", "BD5", "E8", "BC1" or "G21" into a family and
/// rank. Fixed-rank names win over the letter-plus-rank reading.
pub fn parse_name(s: &str) -> Result<(Family, usize), CoreError> {
    if let Ok(f) = s.parse::<Family>() {
        if !f.has_rank() {
            return Ok((f, f.min_rank()));
        }
    }
    let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    let (letters, digits) = s.split_at(split);
    let family: Family = letters.parse()?;
    if !family.has_rank() {
        return Err(CoreError::UnknownFamily(s.to_string()));
    }
    let rank = digits
        .parse::<usize>()
        .map_err(|_| CoreError::UnknownFamily(s.to_string()))?;
    Ok((family, rank))
}

/// A catalog quiver together with its table data.
#[derive(Clone, Debug, Serialize)]
pub struct AffineEntry {
    pub family: Family,
    pub rank: usize,
    pub quiver: ValuedQuiver,
    pub null_root: RankVector,
    pub extending_vertex: usize,
    pub tier: u32,
}

impl AffineEntry {
    pub fn name(&self) -> String {
        if self.family.has_rank() {
            format!("{}{}", self.family, self.rank)
        } else {
            self.family.to_string()
        }
    }
}

/// Undirected valued graph: (left, right, x, y) carries the label "x|y",
/// meaning `c_left * y == c_right * x`.
struct Graph {
    n: usize,
    edges: Vec<(usize, usize, u32, u32)>,
    eta: Vec<i64>,
    extending: usize,
}

impl Graph {
    fn new(n: usize, eta: Vec<i64>, extending: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            eta,
            extending,
        }
    }

    fn edge(&mut self, l: usize, r: usize) -> &mut Self {
        self.labelled(l, r, 1, 1)
    }

    fn labelled(&mut self, l: usize, r: usize, x: u32, y: u32) -> &mut Self {
        self.edges.push((l, r, x, y));
        self
    }

    fn chain(&mut self, vertices: &[usize]) -> &mut Self {
        for w in vertices.windows(2) {
            self.edge(w[0], w[1]);
        }
        self
    }

    /// Componentwise smallest positive solution of the symmetrizer law.
    fn minimal_symmetrizer(&self) -> Vec<u32> {
        // Propagate ratios c_v = num/den along a spanning tree.
        let mut ratio: Vec<Option<(u64, u64)>> = vec![None; self.n];
        ratio[0] = Some((1, 1));
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            let (num, den) = ratio[v].unwrap();
            for &(l, r, x, y) in &self.edges {
                // c_r / c_l = y / x
                let (next, n2, d2) = if l == v {
                    (r, num * y as u64, den * x as u64)
                } else if r == v {
                    (l, num * x as u64, den * y as u64)
                } else {
                    continue;
                };
                if ratio[next].is_none() {
                    let g = n2.gcd(&d2);
                    ratio[next] = Some((n2 / g, d2 / g));
                    queue.push_back(next);
                }
            }
        }
        let lcm = ratio.iter().fold(1u64, |acc, r| acc.lcm(&r.unwrap().1));
        let scaled: Vec<u64> = ratio.iter().map(|r| r.unwrap().0 * (lcm / r.unwrap().1)).collect();
        let g = scaled.iter().fold(0u64, |acc, &c| acc.gcd(&c));
        scaled.iter().map(|&c| (c / g) as u32).collect()
    }

    /// Orient every edge away from the extending vertex: vertices are ranked
    /// by (graph distance, index) and edges point from lower to higher rank.
    fn orient_away(&self, c: &[u32]) -> Vec<Edge> {
        let mut dist = vec![usize::MAX; self.n];
        dist[self.extending] = 0;
        let mut queue = VecDeque::from([self.extending]);
        while let Some(v) = queue.pop_front() {
            for &(l, r, _, _) in &self.edges {
                for (a, b) in [(l, r), (r, l)] {
                    if a == v && dist[b] == usize::MAX {
                        dist[b] = dist[v] + 1;
                        queue.push_back(b);
                    }
                }
            }
        }
        self.edges
            .iter()
            .map(|&(l, r, x, y)| {
                let forward = (dist[l], l) < (dist[r], r);
                let e = if forward {
                    Edge {
                        from: l,
                        to: r,
                        v_out: y,
                        v_in: x,
                    }
                } else {
                    Edge {
                        from: r,
                        to: l,
                        v_out: x,
                        v_in: y,
                    }
                };
                debug_assert_eq!(c[e.from] * e.v_out, c[e.to] * e.v_in);
                e
            })
            .collect()
    }
}

fn graph(family: Family, n: usize) -> Graph {
    match family {
        Family::A1 => {
            let mut g = Graph::new(2, vec![1, 1], 1);
            g.labelled(0, 1, 2, 2);
            g
        }
        Family::A => {
            let mut g = Graph::new(n + 1, vec![1; n + 1], 0);
            let cycle: Vec<usize> = (0..=n).chain([0]).collect();
            g.chain(&cycle);
            g
        }
        Family::B => {
            let mut g = Graph::new(n + 1, vec![1; n + 1], n);
            g.labelled(0, 1, 1, 2);
            g.chain(&(1..n).collect::<Vec<_>>());
            g.labelled(n - 1, n, 2, 1);
            g
        }
        Family::C => {
            let mut eta = vec![2; n + 1];
            eta[0] = 1;
            eta[n] = 1;
            let mut g = Graph::new(n + 1, eta, n);
            g.labelled(0, 1, 2, 1);
            g.chain(&(1..n).collect::<Vec<_>>());
            g.labelled(n - 1, n, 1, 2);
            g
        }
        Family::D => {
            // Leaves 0, 1 at the top, chain 2..n-2, leaves n-1, n at the bottom.
            let chain: Vec<usize> = (2..=n - 2).collect();
            let mut eta = vec![2; n + 1];
            for leaf in [0, 1, n - 1, n] {
                eta[leaf] = 1;
            }
            let mut g = Graph::new(n + 1, eta, 1);
            let (first, last) = (chain[0], *chain.last().unwrap());
            g.edge(0, first).edge(1, first);
            g.chain(&chain);
            g.edge(last, n - 1).edge(last, n);
            g
        }
        Family::BC1 => {
            let mut g = Graph::new(2, vec![1, 2], 0);
            // Read from the vertex with symmetrizer 4: label "4|1".
            g.labelled(0, 1, 4, 1);
            g
        }
        Family::BC => {
            let mut eta = vec![2; n + 1];
            eta[n] = 1;
            let mut g = Graph::new(n + 1, eta, n);
            g.labelled(0, 1, 1, 2);
            g.chain(&(1..n).collect::<Vec<_>>());
            g.labelled(n - 1, n, 1, 2);
            g
        }
        Family::BD | Family::CD => {
            // Vertex 0 and n are leaves at the forked end of the chain 1..n-1.
            let mut eta = vec![2; n + 1];
            eta[0] = 1;
            eta[n] = 1;
            if family == Family::CD {
                eta[1] = 1;
            }
            let mut g = Graph::new(n + 1, eta, 0);
            if family == Family::BD {
                g.labelled(1, 2, 1, 2);
            } else {
                g.labelled(1, 2, 2, 1);
            }
            g.chain(&(2..n).collect::<Vec<_>>());
            g.edge(n - 1, 0).edge(n - 1, n);
            g
        }
        Family::E6 => {
            let mut g = Graph::new(7, vec![2, 1, 3, 2, 1, 2, 1], 1);
            g.edge(0, 1).edge(0, 2).chain(&[2, 3, 4]).chain(&[2, 5, 6]);
            g
        }
        Family::E7 => {
            let mut g = Graph::new(8, vec![3, 2, 1, 4, 3, 2, 1, 2], 2);
            g.chain(&[2, 1, 0, 3, 4, 5, 6]).edge(3, 7);
            g
        }
        Family::E8 => {
            let mut g = Graph::new(9, vec![5, 4, 3, 2, 1, 6, 4, 2, 3], 4);
            g.chain(&[7, 6, 5, 0, 1, 2, 3, 4]).edge(5, 8);
            g
        }
        Family::F41 => {
            let mut g = Graph::new(5, vec![2, 4, 3, 2, 1], 4);
            g.edge(0, 1).labelled(1, 2, 1, 2).chain(&[2, 3, 4]);
            g
        }
        Family::F42 => {
            let mut g = Graph::new(5, vec![1, 2, 3, 2, 1], 4);
            g.edge(0, 1).labelled(1, 2, 2, 1).chain(&[2, 3, 4]);
            g
        }
        Family::G21 => {
            let mut g = Graph::new(3, vec![3, 2, 1], 2);
            g.labelled(0, 1, 1, 3).edge(1, 2);
            g
        }
        Family::G23 => {
            let mut g = Graph::new(3, vec![1, 2, 1], 2);
            g.labelled(0, 1, 3, 1).edge(1, 2);
            g
        }
    }
}

/// Build a catalog quiver. `flips` optionally reverses individual edges of
/// the default orientation (one flag per edge, in catalog edge order).
/// The default orientation makes the extending vertex a source, except for
/// BC1 where the conventional orientation makes it a sink.
pub fn catalog_affine(family: Family, rank: usize, flips: Option<&[bool]>) -> Result<AffineEntry, CoreError> {
    let rank = if family.has_rank() { rank } else { family.min_rank() };
    if family.has_rank() && (rank < family.min_rank() || rank > 64) {
        return Err(CoreError::RankOutOfRange {
            family: family.to_string(),
            rank,
        });
    }
    let g = graph(family, rank);
    let c = g.minimal_symmetrizer();
    let mut edges = g.orient_away(&c);
    if family == Family::BC1 {
        edges = vec![Edge {
            from: 1,
            to: 0,
            v_out: 4,
            v_in: 1,
        }];
    }
    let mut quiver = ValuedQuiver::new(c, edges)?;
    if let Some(flips) = flips {
        quiver = quiver.reoriented(flips)?;
    }
    let computed = quiver.null_root()?;
    if computed != g.eta {
        return Err(CoreError::NotAffine(format!(
            "{family}{rank}: computed null root {computed:?} differs from table {:?}",
            g.eta
        )));
    }
    Ok(AffineEntry {
        family,
        rank,
        quiver,
        null_root: g.eta,
        extending_vertex: g.extending,
        tier: family.tier(),
    })
}

/// Catalog lookup by name, e.g. "C2" or "BC1".
pub fn by_name(name: &str) -> Result<AffineEntry, CoreError> {
    let (family, rank) = parse_name(name)?;
    catalog_affine(family, rank, None)
}

/// Every fixed-rank family plus each series at every admissible rank up
/// to `max_rank`.
pub fn representatives(max_rank: usize) -> Vec<AffineEntry> {
    let mut out = Vec::new();
    for f in Family::ALL {
        if f.has_rank() {
            for r in f.min_rank()..=max_rank {
                out.push(catalog_affine(f, r, None).expect("catalog entry"));
            }
        } else {
            out.push(catalog_affine(f, 0, None).expect("catalog entry"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bc1_default() {
        let e = by_name("BC1").unwrap();
        assert_eq!(e.quiver.symmetrizer, vec![4, 1]);
        assert_eq!(
            e.quiver.edges,
            vec![Edge {
                from: 1,
                to: 0,
                v_out: 4,
                v_in: 1
            }]
        );
        assert_eq!(e.quiver.edges[0].label(), "1|4");
        assert_eq!(e.null_root, vec![1, 2]);
    }

    #[test]
    fn c2_and_a1() {
        let c2 = by_name("C2").unwrap();
        assert_eq!(c2.quiver.symmetrizer, vec![2, 1, 2]);
        assert_eq!(c2.null_root, vec![1, 2, 1]);
        let a1 = by_name("A1").unwrap();
        assert_eq!(a1.quiver.symmetrizer, vec![1, 1]);
        assert_eq!(a1.quiver.edges[0].label(), "2|2");
    }

    #[test]
    fn names() {
        assert_eq!(parse_name("G21").unwrap(), (Family::G21, 2));
        assert_eq!(parse_name("BD5").unwrap(), (Family::BD, 5));
        assert_eq!(parse_name("c3").unwrap(), (Family::C, 3));
        assert!(parse_name("X9").is_err());
        assert!(parse_name("E9").is_err());
        assert!(catalog_affine(Family::D, 3, None).is_err());
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(by_name("G21").unwrap().quiver.symmetrizer, vec![1, 3, 3]);
        assert_eq!(by_name("G23").unwrap().quiver.symmetrizer, vec![3, 1, 1]);
        assert_eq!(by_name("F41").unwrap().quiver.symmetrizer, vec![1, 1, 2, 2, 2]);
        assert_eq!(by_name("BC3").unwrap().quiver.symmetrizer, vec![1, 2, 2, 4]);
        assert_eq!(by_name("CD4").unwrap().quiver.symmetrizer, vec![1, 2, 1, 1, 1]);
    }

    #[test]
    fn extending_vertex_is_source_by_default() {
        for e in representatives(6) {
            if e.family == Family::BC1 {
                continue;
            }
            let x = e.extending_vertex;
            assert!(e.quiver.edges.iter().all(|ed| ed.to != x), "{}", e.name());
        }
    }
}
