//! Diagonals: classes of the equivalence generated by "[p, q] is a
//! d-interval", together with their adjacency.

use crate::dstructure::{DInterval, DStructure};
use crate::poset::{Element, ElementSet, Poset};
use crate::report::OracleReport;

pub type DiagonalId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPartition {
    diagonal_of: Vec<DiagonalId>,
    classes: Vec<ElementSet>,
    adjacency: Vec<bool>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Diagonal ids are assigned in order of each class's smallest element.
pub fn compute_diagonals(poset: &Poset, intervals: &[DInterval]) -> DiagonalPartition {
    let n = poset.len();
    let mut uf = UnionFind((0..n).collect());
    for d in intervals {
        uf.union(d.bottom, d.top);
    }
    let mut id_of_root = vec![usize::MAX; n];
    let mut diagonal_of = vec![0; n];
    let mut classes: Vec<ElementSet> = Vec::new();
    for p in 0..n {
        let r = uf.find(p);
        if id_of_root[r] == usize::MAX {
            id_of_root[r] = classes.len();
            classes.push(ElementSet::new());
        }
        diagonal_of[p] = id_of_root[r];
        classes[id_of_root[r]].insert(p);
    }
    let m = classes.len();
    let mut adjacency = vec![false; m * m];
    for &(a, b) in poset.cover_pairs() {
        let (da, db) = (diagonal_of[a], diagonal_of[b]);
        adjacency[da * m + db] = true;
        adjacency[db * m + da] = true;
    }
    DiagonalPartition { diagonal_of, classes, adjacency }
}

impl DiagonalPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn diagonal_of(&self, p: Element) -> DiagonalId {
        self.diagonal_of[p]
    }

    pub fn class(&self, d: DiagonalId) -> &ElementSet {
        &self.classes[d]
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    pub fn adjacent(&self, c: DiagonalId, d: DiagonalId) -> bool {
        self.adjacency[c * self.len() + d]
    }

    /// Adjacent pairs `(c, d)` with `c < d`, sorted.
    pub fn adjacent_pairs(&self) -> Vec<(DiagonalId, DiagonalId)> {
        let m = self.len();
        let mut out = Vec::new();
        for c in 0..m {
            for d in c + 1..m {
                if self.adjacent(c, d) {
                    out.push((c, d));
                }
            }
        }
        out
    }

    /// Whether `p` and `q` lie on the same diagonal.
    pub fn same(&self, p: Element, q: Element) -> bool {
        self.diagonal_of[p] == self.diagonal_of[q]
    }

    /// The class of `d` as a chain, bottom first.
    pub fn chain(&self, poset: &Poset, d: DiagonalId) -> Vec<Element> {
        let mut v = self.classes[d].to_vec();
        v.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if poset.leq(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        v
    }
}

/// Exhaustive checks of the six diagonal properties.
///
/// The upper-set properties are checked against every upper set of `poset`,
/// with the diagonals of each upper set recomputed from scratch.
pub fn diagonal_oracles(poset: &Poset, part: &DiagonalPartition) -> OracleReport {
    let mut report = OracleReport::new();
    let ds = match DStructure::new(poset) {
        Ok(ds) => ds,
        Err(e) => {
            report.check("d-structure", false, || e.to_string());
            return report;
        }
    };

    // (1) chains whose consecutive members are p < up(p).
    for d in 0..part.len() {
        let members = part.class(d).to_vec();
        let is_chain = members
            .iter()
            .all(|&a| members.iter().all(|&b| poset.comparable(a, b)));
        report.check("chain", is_chain, || format!("diagonal {d} = {members:?}"));
        if !is_chain {
            continue;
        }
        let chain = part.chain(poset, d);
        for w in chain.windows(2) {
            report.check("chain-steps", ds.up(w[0]) == Some(w[1]), || {
                format!("diagonal {d}: up({}) = {:?}, expected {}", w[0], ds.up(w[0]), w[1])
            });
        }
        let (lo, hi) = (chain[0], *chain.last().unwrap());
        report.check("chain-ends", ds.down(lo).is_none() && ds.up(hi).is_none(), || {
            format!("diagonal {d} = {chain:?} extends beyond its ends")
        });
    }

    // (2) no two members of one diagonal are adjacent.
    for &(a, b) in poset.cover_pairs() {
        report.check("non-adjacent", !part.same(a, b), || {
            format!("{a} and {b} are adjacent on diagonal {}", part.diagonal_of(a))
        });
    }

    // (4) if min C is minimal in P, every element of an adjacent D touches C.
    // (6) adjacent diagonals cannot both start at minimal elements.
    let minimal: Vec<bool> = poset.elements().map(|p| poset.lower_covers(p).is_empty()).collect();
    let bottom = |d: DiagonalId| part.chain(poset, d)[0];
    for (c, d) in part.adjacent_pairs() {
        for (x, y) in [(c, d), (d, c)] {
            if minimal[bottom(x)] {
                for q in part.class(y).iter() {
                    let touches = part.class(x).iter().any(|p| poset.adjacent(p, q));
                    report.check("adjacent-cover", touches, || {
                        format!("element {q} of diagonal {y} touches nothing in diagonal {x}")
                    });
                }
            }
        }
        report.check("minimal-bottoms", !(minimal[bottom(c)] && minimal[bottom(d)]), || {
            format!("adjacent diagonals {c}, {d} both start at minimal elements")
        });
    }

    // (3) and (5) on every upper set.
    for up in poset.upper_sets() {
        if up.is_empty() {
            continue;
        }
        let (sub, map) = poset.induced(&up);
        let sub_part = compute_diagonals(&sub, &crate::dstructure::find_d_intervals(&sub));
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                let ok = sub_part.same(i, j) == part.same(map[i], map[j]);
                report.check("upper-set-diagonals", ok, || {
                    format!("upper set {:?}: {} and {} disagree", up.to_vec(), map[i], map[j])
                });
            }
        }
        let mut present = vec![false; part.len()];
        for &p in &map {
            present[part.diagonal_of(p)] = true;
        }
        for c in 0..part.len() {
            for d in c + 1..part.len() {
                if !present[c] || !present[d] {
                    continue;
                }
                let in_sub = sub.cover_pairs().iter().any(|&(a, b)| {
                    let (da, db) = (part.diagonal_of(map[a]), part.diagonal_of(map[b]));
                    (da, db) == (c, d) || (da, db) == (d, c)
                });
                report.check("upper-set-adjacency", in_sub == part.adjacent(c, d), || {
                    format!("upper set {:?}: diagonals {c}, {d}", up.to_vec())
                });
            }
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dstructure::find_d_intervals;
    use crate::generators::{d_k_one, named_example, shifted_young, tree, young};

    fn diagonals(p: &Poset) -> DiagonalPartition {
        compute_diagonals(p, &find_d_intervals(p))
    }

    #[test]
    fn trees_have_singleton_diagonals() {
        let t = tree(&[None, Some(0), Some(0), Some(1)]).unwrap();
        let part = diagonals(&t);
        assert_eq!(part.len(), 4);
        assert!(diagonal_oracles(&t, &part).passed());
    }

    #[test]
    fn d4_diagonals() {
        let d4 = d_k_one(4).unwrap();
        let part = diagonals(&d4);
        // D(1) = {1, 6}, D(2) = {2, 5}, D(3) = {3}, D(4) = {4}.
        let classes: Vec<Vec<Element>> = part.classes().iter().map(|c| c.to_vec()).collect();
        assert_eq!(classes, vec![vec![0, 5], vec![1, 4], vec![2], vec![3]]);
        assert_eq!(part.adjacent_pairs(), vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn ten_element_diagonals_and_adjacency() {
        let p = named_example("ten-element").unwrap();
        let part = diagonals(&p);
        assert_eq!(part.len(), 6);
        let id = |s: &str| part.diagonal_of(p.find(s).unwrap());
        // Labels D1..D6 read off the drawing, top row first.
        let d1 = id("t");
        let d2 = id("a");
        let d3 = id("b");
        let d4 = id("c");
        let d5 = id("e");
        let d6 = id("g");
        assert_eq!(id("f"), d2);
        assert_eq!(id("h"), d3);
        assert_eq!(id("i"), d1);
        assert_eq!(id("j"), d4);
        let mut expected: Vec<(usize, usize)> = [(d1, d2), (d2, d3), (d2, d4), (d3, d5), (d4, d6)]
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        expected.sort();
        assert_eq!(part.adjacent_pairs(), expected);
        // The class of the top is a two-element chain.
        assert_eq!(part.chain(&p, d1), vec![p.find("i").unwrap(), p.find("t").unwrap()]);
        assert!(diagonal_oracles(&p, &part).passed());
    }

    #[test]
    fn shifted_leftmost_cells_alternate() {
        let p = shifted_young(&[5, 4, 2]).unwrap();
        assert_eq!(p.len(), 11);
        let part = diagonals(&p);
        let id = |s: &str| part.diagonal_of(p.find(s).unwrap());
        assert_eq!(id("1,1"), id("3,3"));
        assert_ne!(id("1,1"), id("2,2"));
        assert_eq!(part.len(), 6);
        assert!(diagonal_oracles(&p, &part).passed());
    }

    #[test]
    fn young_diagonals_are_contents() {
        let p = young(&[4, 3, 3, 1]).unwrap();
        let part = diagonals(&p);
        let cells: Vec<(i64, i64)> = (0..p.len())
            .map(|e| {
                let name = p.name(e).unwrap();
                let (i, j) = name.split_once(',').unwrap();
                (i.parse().unwrap(), j.parse().unwrap())
            })
            .collect();
        for a in 0..p.len() {
            for b in 0..p.len() {
                let content = cells[a].0 - cells[a].1 == cells[b].0 - cells[b].1;
                assert_eq!(part.same(a, b), content, "{:?} {:?}", cells[a], cells[b]);
            }
        }
    }

    #[test]
    fn singleton_passes_vacuously() {
        let p = Poset::chain(1);
        let part = diagonals(&p);
        assert!(diagonal_oracles(&p, &part).passed());
    }

    #[test]
    fn order_of_intervals_does_not_matter() {
        let p = named_example("ten-element").unwrap();
        let mut ivs = find_d_intervals(&p);
        let forward = compute_diagonals(&p, &ivs);
        ivs.reverse();
        assert_eq!(compute_diagonals(&p, &ivs), forward);
        ivs.rotate_left(1);
        assert_eq!(compute_diagonals(&p, &ivs), forward);
    }
}
