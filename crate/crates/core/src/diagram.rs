//! Bipartite multigraph form of a monomial.
//!
//! Left dots are the distinct row indices, right dots the distinct column
//! indices, and an edge of multiplicity `m` joins row `i` to column `j` for
//! every factor `O(i,j)^m`. Haar invariance under permutation matrices and
//! under transposition means only the isomorphism class of this graph
//! matters, so [`canonicalize`] picks one representative per class.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::monomial::{Factor, Monomial};

/// One edge of a diagram: 0-based left dot, 0-based right dot, multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub left: usize,
    pub right: usize,
    pub multiplicity: u32,
}

/// Canonical diagram. Constructed only through [`canonicalize`], so two
/// diagrams compare equal iff their monomials are related by row and column
/// relabelings and/or transposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    left_degrees: Vec<u32>,
    right_degrees: Vec<u32>,
    // row-major, left_degrees.len() x right_degrees.len()
    matrix: Vec<u32>,
}

impl Diagram {
    pub fn left_degrees(&self) -> &[u32] {
        &self.left_degrees
    }

    pub fn right_degrees(&self) -> &[u32] {
        &self.right_degrees
    }

    /// Number of left dots (distinct rows), `t`.
    pub fn left_len(&self) -> usize {
        self.left_degrees.len()
    }

    /// Number of right dots (distinct columns), `s`.
    pub fn right_len(&self) -> usize {
        self.right_degrees.len()
    }

    pub fn order(&self) -> u32 {
        self.left_degrees.iter().sum()
    }

    /// Edge multiplicity between left dot `i` and right dot `j` (0 if absent).
    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.matrix[i * self.right_len() + j]
    }

    pub fn edges(&self) -> Vec<Edge> {
        let s = self.right_len();
        self.matrix
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| Edge {
                left: k / s,
                right: k % s,
                multiplicity: m,
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.matrix.iter().filter(|&&m| m > 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.left_degrees.is_empty()
    }

    /// The representative monomial: left dot `i` becomes row `i + 1`, right
    /// dot `j` becomes column `j + 1`.
    pub fn to_monomial(&self) -> Monomial {
        Monomial::new(
            self.edges()
                .into_iter()
                .map(|e| Factor::new(e.left + 1, e.right + 1, e.multiplicity)),
        )
    }
}

/// Reduces a monomial to its canonical diagram.
///
/// Rows and columns are ordered by descending degree. Ties are broken by the
/// lexicographically smallest row-major multiplicity matrix over all
/// relabelings that keep the degree order, and the smaller of that form and
/// the canonical form of the transpose is returned.
pub fn canonicalize(m: &Monomial) -> Diagram {
    let (rows, cols, matrix) = dense(m);
    let direct = canonical_orientation(rows, cols, &matrix);
    let transposed = {
        let mut t = vec![0; rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                t[j * rows + i] = matrix[i * cols + j];
            }
        }
        canonical_orientation(cols, rows, &t)
    };
    match compare(&direct, &transposed) {
        Ordering::Greater => transposed,
        _ => direct,
    }
}

/// True iff the integral vanishes identically: odd order, or some dot with
/// odd degree (sign flips of one row or one column).
pub fn vanishes_by_invariance(d: &Diagram) -> bool {
    d.order() % 2 == 1
        || d.left_degrees.iter().any(|&x| x % 2 == 1)
        || d.right_degrees.iter().any(|&x| x % 2 == 1)
}

/// Smallest `N` for which the monomial can be written with indices in `1..=N`.
pub fn required_dimension(d: &Diagram) -> usize {
    d.left_len().max(d.right_len()).max(1)
}

fn compare(a: &Diagram, b: &Diagram) -> Ordering {
    (&a.left_degrees, &a.right_degrees, &a.matrix).cmp(&(
        &b.left_degrees,
        &b.right_degrees,
        &b.matrix,
    ))
}

fn dense(m: &Monomial) -> (usize, usize, Vec<u32>) {
    let mut row_ids = BTreeMap::new();
    let mut col_ids = BTreeMap::new();
    for f in m.factors() {
        let next = row_ids.len();
        row_ids.entry(f.row).or_insert(next);
        let next = col_ids.len();
        col_ids.entry(f.col).or_insert(next);
    }
    let (rows, cols) = (row_ids.len(), col_ids.len());
    let mut matrix = vec![0; rows * cols];
    for f in m.factors() {
        matrix[row_ids[&f.row] * cols + col_ids[&f.col]] += f.power;
    }
    (rows, cols, matrix)
}

fn canonical_orientation(rows: usize, cols: usize, matrix: &[u32]) -> Diagram {
    let row_deg: Vec<u32> = (0..rows)
        .map(|i| matrix[i * cols..(i + 1) * cols].iter().sum())
        .collect();
    let col_deg: Vec<u32> = (0..cols)
        .map(|j| (0..rows).map(|i| matrix[i * cols + j]).sum())
        .collect();

    let mut row_order: Vec<usize> = (0..rows).collect();
    row_order.sort_by(|&a, &b| row_deg[b].cmp(&row_deg[a]));
    let mut col_order: Vec<usize> = (0..cols).collect();
    col_order.sort_by(|&a, &b| col_deg[b].cmp(&col_deg[a]));

    let row_groups = groups(&row_order, &row_deg);
    let col_groups = groups(&col_order, &col_deg);

    let mut best: Option<Vec<u32>> = None;
    let mut current = row_order.clone();
    for_each_grouped_permutation(&mut current, &row_groups, 0, &mut |perm| {
        let candidate = best_for_row_order(perm, &col_order, &col_groups, cols, matrix);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    });

    Diagram {
        left_degrees: row_order.iter().map(|&i| row_deg[i]).collect(),
        right_degrees: col_order.iter().map(|&j| col_deg[j]).collect(),
        matrix: best.unwrap_or_default(),
    }
}

/// Index ranges of runs with equal degree in an order sorted by degree.
fn groups(order: &[usize], degree: &[u32]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=order.len() {
        if k == order.len() || degree[order[k]] != degree[order[start]] {
            out.push((start, k));
            start = k;
        }
    }
    out
}

fn for_each_grouped_permutation(
    order: &mut [usize],
    groups: &[(usize, usize)],
    group: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    match groups.get(group) {
        None => visit(order),
        Some(&(lo, hi)) => permute(order, lo, lo, hi, &mut |o| {
            for_each_grouped_permutation(o, groups, group + 1, visit)
        }),
    }
}

fn permute(
    order: &mut [usize],
    lo: usize,
    k: usize,
    hi: usize,
    visit: &mut impl FnMut(&mut [usize]),
) {
    if hi - lo <= 1 || k + 1 >= hi {
        visit(order);
        return;
    }
    for i in k..hi {
        order.swap(k, i);
        permute(order, lo, k + 1, hi, visit);
        order.swap(k, i);
    }
}

/// For a fixed row order, sorting each equal-degree block of columns by its
/// column vector gives the row-major-smallest matrix.
fn best_for_row_order(
    row_perm: &[usize],
    col_order: &[usize],
    col_groups: &[(usize, usize)],
    cols: usize,
    matrix: &[u32],
) -> Vec<u32> {
    let column =
        |j: usize| -> Vec<u32> { row_perm.iter().map(|&i| matrix[i * cols + j]).collect() };
    let mut order = col_order.to_vec();
    for &(lo, hi) in col_groups {
        order[lo..hi].sort_by_key(|&j| column(j));
    }
    let mut out = Vec::with_capacity(row_perm.len() * cols);
    for &i in row_perm {
        out.extend(order.iter().map(|&j| matrix[i * cols + j]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_monomial;

    fn diagram(text: &str) -> Diagram {
        canonicalize(&parse_monomial(text).unwrap())
    }

    #[test]
    fn relabeling_gives_same_diagram() {
        let a = canonicalize(&Monomial::from_triples(&[(3, 7, 2), (3, 9, 4)]));
        let b = canonicalize(&Monomial::from_triples(&[(1, 1, 2), (1, 2, 4)]));
        assert_eq!(a, b);
    }

    #[test]
    fn transposition_gives_same_diagram() {
        let a = canonicalize(&Monomial::from_triples(&[(1, 1, 2), (2, 1, 2)]));
        let b = canonicalize(&Monomial::from_triples(&[(1, 1, 2), (1, 2, 2)]));
        assert_eq!(a, b);
    }

    #[test]
    fn figure_one_example() {
        let d = canonicalize(&Monomial::from_triples(&[
            (1, 1, 1),
            (1, 2, 3),
            (2, 1, 1),
            (2, 2, 1),
        ]));
        assert_eq!(d.left_len(), 2);
        assert_eq!(d.right_len(), 2);
        let mut mults: Vec<u32> = d.edges().iter().map(|e| e.multiplicity).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 1, 1, 3]);
        assert_eq!(d.left_degrees(), &[4, 2]);
        assert_eq!(d.right_degrees(), &[4, 2]);
        // the 3-fold line joins the two degree-4 dots
        assert_eq!(d.multiplicity(0, 0), 3);
    }

    #[test]
    fn vanishing_rules() {
        assert!(vanishes_by_invariance(&diagram("O(1,1)")));
        assert!(!vanishes_by_invariance(&diagram(
            "O(1,1) O(1,2) O(2,1) O(2,2)"
        )));
        assert!(vanishes_by_invariance(&diagram("O(1,1)^2 O(1,2) O(2,2)")));
        assert!(!vanishes_by_invariance(&diagram("")));
    }

    #[test]
    fn required_dimensions() {
        assert_eq!(
            required_dimension(&diagram("O(1,1)^2 O(1,2)^2 O(1,3)^2")),
            3
        );
        assert_eq!(required_dimension(&diagram("O(1,1)^2")), 1);
        assert_eq!(
            required_dimension(&diagram("O(1,1) O(1,2) O(2,1) O(2,2)")),
            2
        );
        assert_eq!(required_dimension(&diagram("")), 1);
    }

    #[test]
    fn idempotent() {
        let d = diagram("O(4,2)^3 O(1,2) O(4,5) O(1,5) O(7,7)^2");
        assert_eq!(canonicalize(&d.to_monomial()), d);
    }

    #[test]
    fn degree_lists_are_sorted_descending() {
        let d = diagram("O(1,1)^2 O(2,2)^4 O(2,3)^2");
        assert_eq!(d.order(), 8);
        assert!(d.left_degrees().windows(2).all(|w| w[0] >= w[1]));
        assert!(d.right_degrees().windows(2).all(|w| w[0] >= w[1]));
        for i in 0..d.left_len() {
            let sum: u32 = (0..d.right_len()).map(|j| d.multiplicity(i, j)).sum();
            assert_eq!(sum, d.left_degrees()[i]);
        }
    }

    #[test]
    fn distinguishes_non_isomorphic_shapes() {
        // six-cycle vs. four-cycle plus a separate double line
        let hexagon = diagram("O(1,1) O(1,2) O(2,2) O(2,3) O(3,3) O(3,1)");
        let square_plus_line = diagram("O(1,1) O(1,2) O(2,1) O(2,2) O(3,3)^2");
        assert_ne!(hexagon, square_plus_line);
    }
}
