//! Standard families of d-complete posets.

use std::collections::BTreeSet;

use crate::error::{domain, Result};
use crate::poset::{Element, Poset};

fn check_partition(lambda: &[usize], strict: bool) -> Result<()> {
    if lambda.contains(&0) {
        return domain(format!("partition {lambda:?} has a zero part"));
    }
    for w in lambda.windows(2) {
        if w[0] < w[1] || (strict && w[0] == w[1]) {
            let kind = if strict { "strict partition" } else { "partition" };
            return domain(format!("{lambda:?} is not a {kind}"));
        }
    }
    Ok(())
}

fn cell_poset(cells: &[(usize, usize)]) -> Poset {
    let index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
    let mut pairs = Vec::new();
    for (a, &(i, j)) in cells.iter().enumerate() {
        // The box above and the box to the left cover (i, j).
        if i > 0 {
            if let Some(b) = index(i - 1, j) {
                pairs.push((a, b));
            }
        }
        if j > 0 {
            if let Some(b) = index(i, j - 1) {
                pairs.push((a, b));
            }
        }
    }
    let names: Vec<String> = cells.iter().map(|&(i, j)| format!("{},{}", i + 1, j + 1)).collect();
    Poset::from_cover_relations(cells.len(), &pairs)
        .expect("cell posets are acyclic")
        .with_names(names)
}

/// Cells of the Young diagram of `lambda` in reading order, 0-based.
pub fn young_cells(lambda: &[usize]) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            cells.push((i, j));
        }
    }
    cells
}

/// Cells of the shifted diagram: row `i` occupies columns `i..i + lambda[i]`.
pub fn shifted_cells(lambda: &[usize]) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &row) in lambda.iter().enumerate() {
        for j in i..i + row {
            cells.push((i, j));
        }
    }
    cells
}

/// One element per box; the box above and the box to the left cover it, so
/// the top-left box is the maximum. Element ids follow reading order and
/// names are `row,col` (1-based).
pub fn young(lambda: &[usize]) -> Result<Poset> {
    check_partition(lambda, false)?;
    Ok(cell_poset(&young_cells(lambda)))
}

pub fn shifted_young(lambda: &[usize]) -> Result<Poset> {
    check_partition(lambda, true)?;
    Ok(cell_poset(&shifted_cells(lambda)))
}

/// A rooted forest given by parent pointers; each node is covered by its
/// parent and roots are maximal.
pub fn tree(parent: &[Option<Element>]) -> Result<Poset> {
    let n = parent.len();
    let mut pairs = Vec::new();
    for (child, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            if p >= n {
                return domain(format!("parent {p} of node {child} is out of range"));
            }
            pairs.push((child, p));
        }
    }
    match Poset::from_cover_relations(n, &pairs) {
        Ok(poset) => Ok(poset),
        Err(_) => domain("parent pointers contain a cycle"),
    }
}

/// The double-tailed diamond with `2k - 2` elements.
///
/// Ids run bottom-up: `0..k-2` is the tail (0 is the bottom), `k-2` and
/// `k-1` are the side elements, and `k..2k-2` is the neck (`2k-3` is the
/// top). Names are the 1-based ids.
pub fn d_k_one(k: usize) -> Result<Poset> {
    if k < 3 {
        return domain(format!("d_k(1) needs k >= 3, got {k}"));
    }
    let n = 2 * k - 2;
    let (left, right) = (k - 2, k - 1);
    let mut pairs = Vec::new();
    for t in 1..k - 2 {
        pairs.push((t - 1, t));
    }
    let top_tail = k - 3;
    pairs.push((top_tail, left));
    pairs.push((top_tail, right));
    pairs.push((left, k));
    pairs.push((right, k));
    for m in k + 1..n {
        pairs.push((m - 1, m));
    }
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    Ok(Poset::from_cover_relations(n, &pairs)
        .expect("d_k(1) is acyclic")
        .with_names(names))
}

/// Names accepted by [`named_example`].
pub const NAMED_EXAMPLES: &[&str] = &["lettered-d4", "ten-element"];

/// Small hand-drawn posets used throughout the tests.
///
/// * `lettered-d4`: the six-element double-tailed diamond with elements
///   `p < c < a, b < d < q`.
/// * `ten-element`: a ten-element d-complete poset that is not a tree or a
///   (shifted) Young diagram. Rows from the top: `t`; `a`; `b c`; `e f g`;
///   `h i j`, with `i` covered only by `f`.
pub fn named_example(name: &str) -> Result<Poset> {
    match name {
        "lettered-d4" => {
            let names = ["p", "c", "a", "b", "d", "q"];
            let pairs = [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)];
            Ok(Poset::from_cover_relations(6, &pairs).unwrap().with_names(names))
        }
        "ten-element" => {
            let names = ["t", "a", "b", "c", "e", "f", "g", "h", "i", "j"];
            let (t, a, b, c, e, f, g, h, i, j) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
            let pairs = [
                (a, t),
                (b, a),
                (c, a),
                (e, b),
                (f, b),
                (f, c),
                (g, c),
                (h, e),
                (h, f),
                (j, f),
                (j, g),
                (i, f),
            ];
            Ok(Poset::from_cover_relations(10, &pairs).unwrap().with_names(names))
        }
        _ => domain(format!(
            "unknown example {name:?}; expected one of {NAMED_EXAMPLES:?}"
        )),
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn strict_partitions(n: usize) -> Vec<Vec<usize>> {
    partitions(n)
        .into_iter()
        .filter(|p| p.windows(2).all(|w| w[0] > w[1]))
        .collect()
}

/// Unlabeled rooted trees on `n` nodes, one representative each, as parent
/// arrays with node 0 the root.
pub fn rooted_trees(n: usize) -> Vec<Vec<Option<Element>>> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<Option<Element>>> = vec![vec![None]];
    for _ in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..t.len() {
                let mut grown = t.clone();
                grown.push(Some(attach));
                let canon = canonical_tree(&grown);
                if seen.insert(canon.clone()) {
                    next.push(tree_from_canonical(&canon));
                }
            }
        }
        level = next;
    }
    level
}

fn canonical_tree(parent: &[Option<Element>]) -> String {
    let n = parent.len();
    let mut children = vec![Vec::new(); n];
    let mut root = 0;
    for (c, p) in parent.iter().enumerate() {
        match p {
            Some(p) => children[*p].push(c),
            None => root = c,
        }
    }
    fn enc(v: usize, children: &[Vec<usize>]) -> String {
        let mut parts: Vec<String> = children[v].iter().map(|&c| enc(c, children)).collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    enc(root, &children)
}

fn tree_from_canonical(s: &str) -> Vec<Option<Element>> {
    let mut parent = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                let id = parent.len();
                parent.push(stack.last().copied());
                stack.push(id);
            }
            ')' => {
                stack.pop();
            }
            _ => unreachable!(),
        }
    }
    parent
}

/// Brute-force isomorphism test over all bijections; for small posets only.
pub fn is_isomorphic(a: &Poset, b: &Poset) -> bool {
    if a.len() != b.len() || a.cover_pairs().len() != b.cover_pairs().len() {
        return false;
    }
    let n = a.len();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        i: usize,
        a: &Poset,
        b: &Poset,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let consistent = (0..i).all(|j| {
                a.leq(i, j) == b.leq(cand, image[j]) && a.leq(j, i) == b.leq(image[j], cand)
            });
            if consistent {
                image[i] = cand;
                used[cand] = true;
                if extend(i + 1, a, b, image, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }

    extend(0, a, b, &mut image, &mut used)
}
