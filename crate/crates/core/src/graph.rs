//! The digraph `D(A)` of a matrix: irreducibility, unipathic patterns, simple
//! path enumeration and the path-sum formula for inverse entries.

use std::fmt::Write as _;

use num::{One, Zero};

use crate::matcore::{det, minor_of, Matrix, Rational};
use crate::{Error, Result};

/// Largest order for which simple paths are enumerated.
pub const PATH_ORDER_CAP: usize = 12;

/// Vertices `v_1..v_n`; edge `(i, j)` present iff `a_ij != 0`. Loops allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

/// Simple directed path, vertices 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Vertices of `{1..n}` not on the path, ascending.
    pub fn off_path(&self, n: usize) -> Vec<usize> {
        (1..=n).filter(|v| !self.vertices.contains(v)).collect()
    }

    /// Consecutive vertex pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

impl Digraph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        Self { n, adj: vec![vec![false; n]; n] }
    }

    /// Builds from 1-based edge pairs.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (i, j) in edges {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(Error::InvalidArgument(format!("edge ({i},{j}) outside 1..={n}")));
            }
            g.adj[i - 1][j - 1] = true;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i - 1][j - 1]
    }

    /// All edges as 1-based pairs in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.adj[i][j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().flatten().filter(|&&e| e).count()
    }

    #[allow(clippy::needless_range_loop)]
    fn reaches_all(&self, reverse: bool) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                let edge = if reverse { self.adj[v][u] } else { self.adj[u][v] };
                if edge && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Plain-text DOT rendering, loops included.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph D {\n");
        for v in 1..=self.n {
            let _ = writeln!(out, "  v{v};");
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  v{i} -> v{j};");
        }
        out.push_str("}\n");
        out
    }
}

/// `D(A)`: one edge per nonzero entry.
pub fn digraph_of(a: &Matrix) -> Digraph {
    let n = a.order();
    let mut g = Digraph::empty(n);
    for i in 0..n {
        for j in 0..n {
            g.adj[i][j] = !a[(i, j)].is_zero();
        }
    }
    g
}

/// Strong connectivity. A single vertex counts as irreducible.
pub fn is_irreducible(d: &Digraph) -> bool {
    d.n <= 1 || (d.reaches_all(false) && d.reaches_all(true))
}

/// All simple paths `v_i -> v_j` (1-based, `i != j`), shortest first and
/// lexicographic within a length.
pub fn enumerate_paths(d: &Digraph, i: usize, j: usize) -> Result<Vec<Path>> {
    if d.n > PATH_ORDER_CAP {
        return Err(Error::OrderCapExceeded { n: d.n, cap: PATH_ORDER_CAP });
    }
    if !(1..=d.n).contains(&i) || !(1..=d.n).contains(&j) {
        return Err(Error::InvalidArgument(format!("vertex pair ({i},{j}) outside 1..={}", d.n)));
    }
    if i == j {
        return Err(Error::InvalidArgument("path endpoints must differ".into()));
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; d.n];
    let mut stack = vec![i - 1];
    on_path[i - 1] = true;
    dfs(d, j - 1, &mut stack, &mut on_path, &mut out);
    out.sort_by(|p: &Path, q: &Path| p.length().cmp(&q.length()).then_with(|| p.cmp(q)));
    Ok(out)
}

fn dfs(d: &Digraph, target: usize, stack: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Path>) {
    let u = *stack.last().expect("nonempty stack");
    for v in 0..d.n {
        if !d.adj[u][v] || on_path[v] {
            continue;
        }
        stack.push(v);
        if v == target {
            out.push(Path { vertices: stack.iter().map(|x| x + 1).collect() });
        } else {
            on_path[v] = true;
            dfs(d, target, stack, on_path, out);
            on_path[v] = false;
        }
        stack.pop();
    }
}

/// At most one simple path between every ordered pair of distinct vertices.
pub fn is_unipathic(d: &Digraph) -> Result<bool> {
    for i in 1..=d.n {
        for j in 1..=d.n {
            if i != j && enumerate_paths(d, i, j)?.len() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Entry `(i, j)` (1-based) of `A^{-1}` from the digraph of `A`.
///
/// Orientation: the sum runs over paths `v_i -> v_j` of `D(A)`, multiplying
/// the entries of `A` along each path, and yields `(A^{-1})_ij` itself (no
/// transpose). For `i == j` this is `det A(i) / det A`.
pub fn maybee_entry(a: &Matrix, i: usize, j: usize) -> Result<Rational> {
    let n = a.order();
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::InvalidArgument(format!("index ({i},{j}) outside 1..={n}")));
    }
    let det_a = det(a);
    if det_a.is_zero() {
        return Err(Error::Singular);
    }
    if i == j {
        let rest: Vec<usize> = (0..n).filter(|&k| k != i - 1).collect();
        return Ok(minor_of(a, &rest, &rest) / det_a);
    }
    let mut total = Rational::zero();
    for p in enumerate_paths(&digraph_of(a), i, j)? {
        let weight = p.edges().fold(Rational::one(), |acc, (u, v)| acc * a.entry(u, v));
        let off: Vec<usize> = p.off_path(n).into_iter().map(|v| v - 1).collect();
        let term = weight * minor_of(a, &off, &off);
        if p.length() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total / det_a)
}

/// Whole inverse assembled entry by entry with [`maybee_entry`].
pub fn maybee_inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.order();
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let row = (1..=n).map(|j| maybee_entry(a, i, j)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Number of nonzero summands in the path-sum for `(i, j)`, useful to check
/// that unipathic matrices produce at most one term.
pub fn maybee_term_count(a: &Matrix, i: usize, j: usize) -> Result<usize> {
    let n = a.order();
    let mut count = 0;
    for p in enumerate_paths(&digraph_of(a), i, j)? {
        let weight = p.edges().fold(Rational::one(), |acc, (u, v)| acc * a.entry(u, v));
        let off: Vec<usize> = p.off_path(n).into_iter().map(|v| v - 1).collect();
        if !(weight * minor_of(a, &off, &off)).is_zero() {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{int, inverse};

    fn bdsw4() -> Matrix {
        Matrix::from_ints(&[[1, 2, 0, 0], [0, 3, 4, 0], [0, 0, 5, 6], [7, 0, 0, 8]])
    }

    #[test]
    fn digraph_of_bdsw_is_cycle_with_loops() {
        let g = digraph_of(&bdsw4());
        let mut expect: Vec<(usize, usize)> = (1..=4).map(|v| (v, v)).collect();
        expect.extend([(1, 2), (2, 3), (3, 4), (4, 1)]);
        expect.sort();
        assert_eq!(g.edges(), expect);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(digraph_of(&Matrix::zeros(3)).edge_count(), 0);
        assert_eq!(digraph_of(&Matrix::identity(3)).edges(), vec![(1, 1), (2, 2), (3, 3)]);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&digraph_of(&bdsw4())));
        let upper = Matrix::from_ints(&[[1, 1, 1], [0, 1, 1], [0, 0, 1]]);
        assert!(!is_irreducible(&digraph_of(&upper)));
        assert!(!is_irreducible(&digraph_of(&Matrix::identity(2))));
        assert!(is_irreducible(&digraph_of(&Matrix::from_ints(&[[0]]))));
    }

    #[test]
    fn path_enumeration() {
        let g = digraph_of(&bdsw4());
        let p = enumerate_paths(&g, 1, 3).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].vertices(), &[1, 2, 3]);
        assert_eq!(p[0].off_path(4), vec![4]);
        assert!(enumerate_paths(&digraph_of(&Matrix::identity(2)), 1, 2).unwrap().is_empty());
        let full = digraph_of(&Matrix::from_ints(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]]));
        let p = enumerate_paths(&full, 1, 3).unwrap();
        let v: Vec<&[usize]> = p.iter().map(Path::vertices).collect();
        assert_eq!(v, vec![&[1, 3][..], &[1, 2, 3][..]]);
        assert!(enumerate_paths(&full, 2, 2).is_err());
        assert!(matches!(enumerate_paths(&Digraph::empty(13), 1, 2), Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn unipathic() {
        assert!(is_unipathic(&digraph_of(&bdsw4())).unwrap());
        let full = Matrix::from_ints(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]]);
        assert!(!is_unipathic(&digraph_of(&full)).unwrap());
        assert!(is_unipathic(&digraph_of(&Matrix::identity(4))).unwrap());
    }

    #[test]
    fn maybee_golden() {
        let b = Matrix::from_ints(&[[-1, -1, 0], [0, -1, -1], [-2, 0, 1]]);
        assert_eq!(maybee_entry(&b, 1, 3).unwrap(), int(-1));
        assert_eq!(maybee_entry(&Matrix::identity(3), 2, 2).unwrap(), int(1));
        assert_eq!(maybee_inverse(&b).unwrap(), inverse(&b).unwrap());
        assert_eq!(maybee_entry(&Matrix::zeros(2), 1, 2), Err(Error::Singular));
    }

    #[test]
    fn maybee_dense_orientation() {
        let a = Matrix::from_ints(&[[2, 7, -1], [3, 0, 4], [-5, 1, 6]]);
        assert_eq!(maybee_inverse(&a).unwrap(), inverse(&a).unwrap());
    }

    #[test]
    fn dot_export() {
        let dot = Digraph::from_edges(2, [(1, 1), (1, 2)]).unwrap().to_dot();
        assert_eq!(dot, "digraph D {\n  v1;\n  v2;\n  v1 -> v1;\n  v1 -> v2;\n}\n");
    }
}
