//! Bound quiver algebras with a path normal-form basis, and the GLS
//! algebra of a valued quiver.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, OnceLock, Weak};

use gls_linalg::{BigInt, BigRational, Field, LinalgError, Scalar};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::quiver::ValuedQuiver;
use crate::CoreError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub name: String,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A path, stored in traversal order: `arrows[0]` is walked first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            start: v,
            arrows: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Linear combination of paths with integer coefficients.
pub type PathCombination = Vec<(i64, Path)>;

/// Sparse element of the algebra in the normal-form basis.
pub type Element = Vec<(usize, BigRational)>;

/// Extra structure carried by GLS algebras: the valued quiver, the loop at
/// each vertex, and the arrows belonging to each edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlsData {
    pub quiver: ValuedQuiver,
    pub loops: Vec<Option<usize>>,
    pub edge_arrows: Vec<Vec<usize>>,
}

#[derive(Debug)]
pub struct Algebra {
    pub name: String,
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    /// Monomial relations given as arrow sequences.
    pub zero_paths: Vec<Vec<usize>>,
    /// Remaining relations.
    pub relations: Vec<PathCombination>,
    pub gls: Option<GlsData>,
    /// Whether this is the opposite of the algebra it was built from.
    pub is_opposite: bool,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    basis: Vec<usize>,
    normal_forms: Vec<Element>,
    corners: Vec<Vec<Vec<usize>>>,
    corner_pos: Vec<usize>,
    op_cell: OnceLock<Arc<Algebra>>,
    op_parent: Option<Weak<Algebra>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        self.vertices == other.vertices
            && self.arrows == other.arrows
            && self.zero_paths == other.zero_paths
            && self.relations == other.relations
    }
}

const PATH_CAP: usize = 200_000;

impl Algebra {
    /// Bound quiver algebra. The paths avoiding every monomial relation must
    /// form a finite set; the basis is computed by linear closure.
    pub fn new(
        name: impl Into<String>,
        vertices: usize,
        arrows: Vec<Arrow>,
        zero_paths: Vec<Vec<usize>>,
        relations: Vec<PathCombination>,
    ) -> Result<Algebra, CoreError> {
        for a in &arrows {
            if a.source >= vertices || a.target >= vertices {
                return Err(CoreError::InvalidQuiver(format!("arrow {} out of range", a.name)));
            }
        }
        let mut alg = Algebra {
            name: name.into(),
            vertices,
            arrows,
            zero_paths,
            relations,
            gls: None,
            is_opposite: false,
            paths: vec![],
            index: HashMap::new(),
            basis: vec![],
            normal_forms: vec![],
            corners: vec![],
            corner_pos: vec![],
            op_cell: OnceLock::new(),
            op_parent: None,
        };
        for rel in &alg.relations {
            for (_, p) in rel {
                alg.check_path(p)?;
            }
        }
        alg.compute_basis()?;
        Ok(alg)
    }

    /// The GLS algebra: per edge `g` parallel arrows, a loop at every vertex
    /// with symmetrizer above one, loop nilpotency and commutation relations.
    pub fn gls(q: &ValuedQuiver) -> Result<Algebra, CoreError> {
        let mut arrows = Vec::new();
        let mut edge_arrows = Vec::new();
        for (k, e) in q.edges.iter().enumerate() {
            let g = e.multiplicity() as usize;
            let mut ids = Vec::new();
            for copy in 0..g {
                ids.push(arrows.len());
                let name = if g == 1 {
                    format!("a{k}")
                } else {
                    format!("a{k}_{copy}")
                };
                arrows.push(Arrow {
                    source: e.from,
                    target: e.to,
                    name,
                });
            }
            edge_arrows.push(ids);
        }
        let mut loops = vec![None; q.vertices];
        for i in 0..q.vertices {
            if q.symmetrizer[i] > 1 {
                loops[i] = Some(arrows.len());
                arrows.push(Arrow {
                    source: i,
                    target: i,
                    name: format!("e{i}"),
                });
            }
        }
        let zero_paths: Vec<Vec<usize>> = (0..q.vertices)
            .filter_map(|i| loops[i].map(|l| vec![l; q.symmetrizer[i] as usize]))
            .collect();
        let loop_power = |v: usize, k: u32| -> Option<Vec<usize>> {
            if k == 0 {
                return Some(vec![]);
            }
            loops[v].filter(|_| k < q.symmetrizer[v]).map(|l| vec![l; k as usize])
        };
        let mut relations = Vec::new();
        for (k, e) in q.edges.iter().enumerate() {
            for &a in &edge_arrows[k] {
                // Target loop power after the arrow equals the arrow after the
                // source loop power.
                let mut rel = Vec::new();
                if let Some(pw) = loop_power(e.to, e.target_exponent()) {
                    let mut arr = vec![a];
                    arr.extend(pw);
                    rel.push((
                        1,
                        Path {
                            start: e.from,
                            arrows: arr,
                        },
                    ));
                }
                if let Some(pw) = loop_power(e.from, e.source_exponent()) {
                    let mut arr = pw;
                    arr.push(a);
                    rel.push((
                        -1,
                        Path {
                            start: e.from,
                            arrows: arr,
                        },
                    ));
                }
                if !rel.is_empty() {
                    relations.push(rel);
                }
            }
        }
        let mut alg = Algebra::new("H", q.vertices, arrows, zero_paths, relations)?;
        alg.gls = Some(GlsData {
            quiver: q.clone(),
            loops,
            edge_arrows,
        });
        Ok(alg)
    }

    /// Path algebra of a quiver without oriented cycles.
    pub fn path_algebra(vertices: usize, arrows: Vec<Arrow>) -> Result<Algebra, CoreError> {
        Algebra::new("KQ", vertices, arrows, vec![], vec![])
    }

    fn check_path(&self, p: &Path) -> Result<(), CoreError> {
        let mut at = p.start;
        for &a in &p.arrows {
            let arrow = self
                .arrows
                .get(a)
                .ok_or_else(|| CoreError::InvalidQuiver(format!("arrow {a} out of range")))?;
            if arrow.source != at {
                return Err(CoreError::InvalidQuiver("relation path is not composable".into()));
            }
            at = arrow.target;
        }
        Ok(())
    }

    pub fn end(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| self.arrows[a].target)
    }

    fn contains_zero_path(&self, arrows: &[usize]) -> bool {
        self.zero_paths
            .iter()
            .any(|z| !z.is_empty() && arrows.windows(z.len()).any(|w| w == z.as_slice()))
    }

    fn sort_key(&self, p: &Path) -> (usize, usize, Vec<(bool, usize)>) {
        (
            p.len(),
            if p.is_empty() { p.start } else { 0 },
            p.arrows.iter().map(|&a| (self.arrows[a].is_loop(), a)).collect(),
        )
    }

    fn compute_basis(&mut self) -> Result<(), CoreError> {
        // All paths avoiding the monomial relations.
        let mut paths: Vec<Path> = (0..self.vertices).map(Path::trivial).collect();
        let mut frontier = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                let end = self.end(p);
                for (a, arrow) in self.arrows.iter().enumerate() {
                    if arrow.source != end {
                        continue;
                    }
                    let mut arr = p.arrows.clone();
                    arr.push(a);
                    if self.contains_zero_path(&arr) {
                        continue;
                    }
                    next.push(Path {
                        start: p.start,
                        arrows: arr,
                    });
                }
            }
            paths.extend(next.iter().cloned());
            if paths.len() > PATH_CAP {
                return Err(CoreError::InvalidQuiver(
                    "path set is not finite (missing nilpotency relations?)".into(),
                ));
            }
            frontier = next;
        }
        paths.sort_by_key(|p| self.sort_key(p));
        let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        // Images of relations under two-sided multiplication by paths.
        let mut ending_at: Vec<Vec<usize>> = vec![vec![]; self.vertices];
        let mut starting_at: Vec<Vec<usize>> = vec![vec![]; self.vertices];
        for (i, p) in paths.iter().enumerate() {
            ending_at[self.end(p)].push(i);
            starting_at[p.start].push(i);
        }
        let mut rows: HashSet<Vec<(usize, i64)>> = HashSet::new();
        for rel in &self.relations {
            let (s, t) = (rel[0].1.start, self.end(&rel[0].1));
            for &u in &ending_at[s] {
                for &w in &starting_at[t] {
                    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                    for (coef, p) in rel {
                        let mut arr = paths[u].arrows.clone();
                        arr.extend(&p.arrows);
                        arr.extend(&paths[w].arrows);
                        if self.contains_zero_path(&arr) {
                            continue;
                        }
                        let key = Path {
                            start: paths[u].start,
                            arrows: arr,
                        };
                        let idx = *index.get(&key).expect("reduced path is enumerated");
                        *acc.entry(idx).or_default() += coef;
                    }
                    let row: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
                    if !row.is_empty() {
                        rows.insert(row);
                    }
                }
            }
        }
        let mut rows: Vec<Vec<(usize, i64)>> = rows.into_iter().collect();
        rows.sort();
        let pivots = sparse_rref(rows);

        let basis: Vec<usize> = (0..paths.len()).filter(|i| !pivots.contains_key(i)).collect();
        let mut basis_pos = vec![usize::MAX; paths.len()];
        for (b, &i) in basis.iter().enumerate() {
            basis_pos[i] = b;
        }
        let normal_forms: Vec<Element> = (0..paths.len())
            .map(|i| match pivots.get(&i) {
                None => vec![(basis_pos[i], BigRational::one())],
                // pivot + sum(rest) = 0
                Some(row) => row
                    .iter()
                    .filter(|(c, _)| *c != i)
                    .map(|(c, v)| (basis_pos[*c], -v.clone()))
                    .collect(),
            })
            .collect();
        let mut corners = vec![vec![vec![]; self.vertices]; self.vertices];
        let mut corner_pos = vec![0; basis.len()];
        for (b, &i) in basis.iter().enumerate() {
            let list: &mut Vec<usize> = &mut corners[paths[i].start][self.end(&paths[i])];
            corner_pos[b] = list.len();
            list.push(b);
        }
        self.corner_pos = corner_pos;
        self.paths = paths;
        self.index = index;
        self.basis = basis;
        self.normal_forms = normal_forms;
        self.corners = corners;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_path(&self, b: usize) -> &Path {
        &self.paths[self.basis[b]]
    }

    pub fn basis_paths(&self) -> Vec<Path> {
        self.basis.iter().map(|&i| self.paths[i].clone()).collect()
    }

    /// Basis indices of the paths from `s` to `t`.
    pub fn corner(&self, s: usize, t: usize) -> &[usize] {
        &self.corners[s][t]
    }

    /// Position of a basis element within its corner list.
    pub fn corner_position(&self, b: usize) -> usize {
        self.corner_pos[b]
    }

    pub fn basis_start(&self, b: usize) -> usize {
        self.basis_path(b).start
    }

    pub fn basis_end(&self, b: usize) -> usize {
        self.end(self.basis_path(b))
    }

    /// Normal form of an arbitrary path.
    pub fn normal_form(&self, p: &Path) -> Element {
        if self.contains_zero_path(&p.arrows) {
            return vec![];
        }
        match self.index.get(p) {
            Some(&i) => self.normal_forms[i].clone(),
            None => vec![],
        }
    }

    /// Product "first `x`, then `y`" of two basis elements.
    pub fn concat_basis(&self, x: usize, y: usize) -> Element {
        let (px, py) = (self.basis_path(x), self.basis_path(y));
        if self.end(px) != py.start {
            return vec![];
        }
        let mut arr = px.arrows.clone();
        arr.extend(&py.arrows);
        self.normal_form(&Path {
            start: px.start,
            arrows: arr,
        })
    }

    /// Product "first `x`, then `y`" of two elements.
    pub fn concat(&self, x: &Element, y: &Element) -> Element {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (bx, cx) in x {
            for (by, cy) in y {
                for (b, c) in self.concat_basis(*bx, *by) {
                    let e = acc.entry(b).or_insert_with(BigRational::zero);
                    *e += c * cx * cy;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn basis_element(&self, b: usize) -> Element {
        vec![(b, BigRational::one())]
    }

    /// Image of an element in a ground field, as a dense vector over the basis.
    pub fn element_to_field(&self, x: &Element, field: Field) -> Result<Vec<Scalar>, LinalgError> {
        let mut v = vec![field.zero(); self.dim()];
        for (b, c) in x {
            v[*b] = &v[*b] + &field.from_rational(c)?;
        }
        Ok(v)
    }

    /// Whether a basis path lies in the square of the arrow ideal or is an
    /// arrow (i.e. is not a trivial path).
    pub fn is_radical(&self, b: usize) -> bool {
        !self.basis_path(b).is_empty()
    }

    pub fn path_string(&self, p: &Path) -> String {
        if p.is_empty() {
            return format!("e{}", p.start);
        }
        p.arrows
            .iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// The loop at `v`: from the GLS data when present, otherwise the only
    /// loop arrow at `v`.
    pub fn loop_at(&self, v: usize) -> Option<usize> {
        if let Some(g) = &self.gls {
            return g.loops[v];
        }
        let mut loops = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_loop() && a.source == v);
        match (loops.next(), loops.next()) {
            (Some((l, _)), None) => Some(l),
            _ => None,
        }
    }

    /// Nilpotency index of the loop at `v` (1 when there is none).
    pub fn loop_order(&self, v: usize) -> usize {
        if let Some(c) = self.symmetrizer() {
            return c[v] as usize;
        }
        let Some(l) = self.loop_at(v) else {
            return 1;
        };
        self.zero_paths
            .iter()
            .filter(|z| z.iter().all(|&a| a == l))
            .map(Vec::len)
            .min()
            .unwrap_or(usize::MAX)
    }

    pub fn symmetrizer(&self) -> Option<&[u32]> {
        self.gls.as_ref().map(|g| g.quiver.symmetrizer.as_slice())
    }

    /// Opposite algebra: every arrow and relation reversed, arrow indices
    /// kept. Cached, and the opposite of the opposite is the original.
    pub fn op(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(parent) = self.op_parent.as_ref().and_then(Weak::upgrade) {
            return parent;
        }
        self.op_cell
            .get_or_init(|| {
                let rev = |p: &Path| -> Path {
                    Path {
                        start: self.end(p),
                        arrows: p.arrows.iter().rev().copied().collect(),
                    }
                };
                let arrows = self
                    .arrows
                    .iter()
                    .map(|a| Arrow {
                        source: a.target,
                        target: a.source,
                        name: a.name.clone(),
                    })
                    .collect();
                let zero_paths = self
                    .zero_paths
                    .iter()
                    .map(|z| z.iter().rev().copied().collect())
                    .collect();
                let relations = self
                    .relations
                    .iter()
                    .map(|r| r.iter().map(|(c, p)| (*c, rev(p))).collect())
                    .collect();
                let mut op = Algebra::new(
                    format!("{}^op", self.name),
                    self.vertices,
                    arrows,
                    zero_paths,
                    relations,
                )
                .expect("opposite of a valid algebra is valid");
                op.gls = self.gls.as_ref().map(|g| GlsData {
                    quiver: g.quiver.opposite(),
                    loops: g.loops.clone(),
                    edge_arrows: g.edge_arrows.clone(),
                });
                op.is_opposite = !self.is_opposite;
                op.op_parent = Some(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    /// Reverse a basis element into the opposite algebra.
    pub fn to_opposite(self: &Arc<Self>, x: &Element) -> Element {
        let op = self.op();
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (b, c) in x {
            let p = self.basis_path(*b);
            let rp = Path {
                start: self.end(p),
                arrows: p.arrows.iter().rev().copied().collect(),
            };
            for (ob, oc) in op.normal_form(&rp) {
                *acc.entry(ob).or_insert_with(BigRational::zero) += oc * c;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// JSON description: quiver, relations, dimension and basis paths.
    pub fn to_json(&self) -> serde_json::Value {
        let rel_str = |r: &PathCombination| -> String {
            r.iter()
                .map(|(c, p)| {
                    format!("{}{}", if *c < 0 { "-" } else { "+" }, {
                        let s = self.path_string(p);
                        if c.abs() == 1 {
                            s
                        } else {
                            format!("{}*{}", c.abs(), s)
                        }
                    })
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        serde_json::json!({
            "name": self.name,
            "vertices": self.vertices,
            "arrows": self.arrows,
            "zero_relations": self.zero_paths.iter().map(|z| self.path_string(&Path {
                start: self.arrows[z[0]].source,
                arrows: z.clone(),
            })).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(rel_str).collect::<Vec<_>>(),
            "dimension": self.dim(),
            "basis": self.basis_paths().iter().map(|p| self.path_string(p)).collect::<Vec<_>>(),
            "valued_quiver": self.gls.as_ref().map(|g| g.quiver.to_json()),
        })
    }
}

/// Reduced row echelon form of sparse integer rows with the pivot at the
/// largest column of each row. Returns pivot column -> fully reduced row
/// (pivot coefficient one).
fn sparse_rref(rows: Vec<Vec<(usize, i64)>>) -> BTreeMap<usize, Vec<(usize, BigRational)>> {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, BigRational> = row
            .into_iter()
            .map(|(c, v)| (c, BigRational::from_integer(BigInt::from(v))))
            .collect();
        // Reduce the leading entry until it is a new pivot or the row dies.
        while let Some((&lead, _)) = r.iter().next_back() {
            match pivots.get(&lead) {
                Some(p) => {
                    let f = r[&lead].clone();
                    for (c, v) in p {
                        let e = r.entry(*c).or_insert_with(BigRational::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            r.remove(c);
                        }
                    }
                }
                None => {
                    let inv = r[&lead].recip();
                    for v in r.values_mut() {
                        *v *= &inv;
                    }
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    // Back substitution in increasing pivot order.
    let cols: Vec<usize> = pivots.keys().copied().collect();
    let mut done: BTreeMap<usize, Vec<(usize, BigRational)>> = BTreeMap::new();
    for col in cols {
        let mut r = pivots.remove(&col).unwrap();
        loop {
            let target = r.keys().copied().filter(|&c| c != col && done.contains_key(&c)).max();
            let Some(c) = target else { break };
            let f = r.remove(&c).unwrap();
            for (cc, v) in &done[&c] {
                if *cc == c {
                    continue;
                }
                let e = r.entry(*cc).or_insert_with(BigRational::zero);
                *e -= &f * v;
                if e.is_zero() {
                    r.remove(cc);
                }
            }
        }
        done.insert(col, r.into_iter().collect());
    }
    done
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;

    #[test]
    fn bc1_dimension_nine() {
        let a = Algebra::gls(&by_name("BC1").unwrap().quiver).unwrap();
        assert_eq!(a.dim(), 9);
        assert_eq!(a.corner(0, 0).len(), 4);
        assert_eq!(a.corner(1, 1).len(), 1);
        assert_eq!(a.corner(1, 0).len(), 4);
        assert_eq!(a.corner(0, 1).len(), 0);
    }

    #[test]
    fn simply_laced_has_no_loops() {
        let a = Algebra::gls(&by_name("D4").unwrap().quiver).unwrap();
        assert!(a.arrows.iter().all(|x| !x.is_loop()));
        // One source leaf, an arrow into the centre and three out of it.
        assert_eq!(a.dim(), 5 + 4 + 3);
    }

    #[test]
    fn c2_relations() {
        let a = Algebra::gls(&by_name("C2").unwrap().quiver).unwrap();
        for i in 0..3 {
            let c = a.symmetrizer().unwrap()[i] as usize;
            assert_eq!(a.corner(i, i).len(), c);
        }
        // Both commutation relations involve a loop power at or beyond its
        // nilpotency index on each side, so they vanish.
        assert!(a.relations.is_empty());
        assert!(a.loop_at(0).is_some() && a.loop_at(1).is_none() && a.loop_at(2).is_some());
    }

    #[test]
    fn opposite_round_trip() {
        let a = Arc::new(Algebra::gls(&by_name("G21").unwrap().quiver).unwrap());
        let op = a.op();
        assert_eq!(op.dim(), a.dim());
        assert!(Arc::ptr_eq(&op.op(), &a));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.corner(i, j).len(), op.corner(j, i).len());
            }
        }
    }
}
