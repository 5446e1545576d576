//! Kirchhoff matrix-tree oracle with exact integer determinants.
//!
//! Nothing here touches the tree enumerator; only [`forest_charpoly_check`]
//! compares against [`crate::forest::f_poly`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::f_poly;
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, entries: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        let entries = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Ok(IntMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Drops row and column `k`.
    pub fn minor(&self, k: usize) -> IntMatrix {
        let keep: Vec<usize> = (0..self.dim).filter(|&i| i != k).collect();
        let mut m = IntMatrix::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Adds `c` to every diagonal entry.
    pub fn shift_diagonal(&self, c: i64) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            m[(i, i)] += c;
        }
        m
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.dim + j]
    }
}

/// Row/column `i` stands for vertex `i + 1`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.n());
    for (u, v) in g.edges() {
        let (a, b) = (u - 1, v - 1);
        m[(a, a)] += 1;
        m[(b, b)] += 1;
        m[(a, b)] -= 1;
        m[(b, a)] -= 1;
    }
    m
}

/// Bareiss fraction-free elimination. Every division is exact.
pub fn det(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.entries.swap(k * n + j, swap * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Number of spanning trees of `g` by the matrix-tree theorem.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    det(&laplacian(g).minor(0))
}

/// Spanning trees of the extended graph, counted on its materialized form.
pub fn extended_tree_count(g: &Graph) -> BigInt {
    spanning_tree_count(&g.extended_materialized())
}

/// `j * f_G(j; 1, ..., 1) == det(L + j I)` for `j = 1..=n+1`.
pub fn forest_charpoly_check(g: &Graph) -> bool {
    let n = g.n();
    let f = f_poly(g);
    let lap = laplacian(g);
    (1..=n as i64 + 1).all(|j| {
        let mut point = vec![1; n + 1];
        point[0] = j;
        let lhs = f.evaluate(&point).expect("point sized to ambient") * j;
        lhs == det(&lap.shift_diagonal(j))
    })
}
