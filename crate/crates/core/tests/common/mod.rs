//! Independent floating-point oracle: structure constants are copied into
//! plain arrays and every identity is evaluated by explicit index sums, with
//! ranks from a separate Gaussian elimination.  Nothing here calls the
//! library's checkers or solvers.

#![allow(dead_code)]

use hom_dialgebra::{HomDialgebra, LinearMap, Side};
use num::complex::Complex64 as C;

pub const TOL: f64 = 1e-8;

/// `l[i][j][k]`: coefficient of e_k in e_i ⊣ e_j; `a[i][j]`: coefficient of e_i in α(e_j).
pub struct Naive {
    pub n: usize,
    pub l: Vec<Vec<Vec<C>>>,
    pub r: Vec<Vec<Vec<C>>>,
    pub a: Vec<Vec<C>>,
}

pub fn naive(x: &HomDialgebra) -> Naive {
    let n = x.dim();
    let table = |side: Side| {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| x.table(side).get(i, j, k).to_complex()).collect()).collect())
            .collect()
    };
    Naive {
        n,
        l: table(Side::Left),
        r: table(Side::Right),
        a: (0..n).map(|i| (0..n).map(|j| x.alpha().get(i, j).to_complex()).collect()).collect(),
    }
}

pub fn matrix(m: &LinearMap) -> Vec<Vec<C>> {
    (0..m.dim()).map(|i| (0..m.dim()).map(|j| m.get(i, j).to_complex()).collect()).collect()
}

pub fn mat_mul(p: &[Vec<C>], q: &[Vec<C>]) -> Vec<Vec<C>> {
    let n = p.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|t| p[i][t] * q[t][j]).sum()).collect()).collect()
}

pub fn mat_pow(p: &[Vec<C>], k: u32) -> Vec<Vec<C>> {
    let n = p.len();
    let mut out: Vec<Vec<C>> = (0..n).map(|i| (0..n).map(|j| if i == j { C::new(1.0, 0.0) } else { C::new(0.0, 0.0) }).collect()).collect();
    for _ in 0..k {
        out = mat_mul(&out, p);
    }
    out
}

impl Naive {
    fn t(&self, left: bool) -> &Vec<Vec<Vec<C>>> {
        if left {
            &self.l
        } else {
            &self.r
        }
    }

    /// Σ g¹_{ij}^p a_{qk} g²_{pq}^r − Σ a_{pi} g⁴_{jk}^q g³_{pq}^r, maximised over i, j, k, r.
    pub fn axiom_defect(&self, shape: [bool; 4]) -> f64 {
        let n = self.n;
        let [g1, g2, g3, g4] = shape.map(|b| self.t(b));
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for r in 0..n {
                        let mut lhs = C::new(0.0, 0.0);
                        let mut rhs = C::new(0.0, 0.0);
                        for p in 0..n {
                            for q in 0..n {
                                lhs += g1[i][j][p] * self.a[q][k] * g2[p][q][r];
                                rhs += self.a[p][i] * g4[j][k][q] * g3[p][q][r];
                            }
                        }
                        worst = worst.max((lhs - rhs).norm());
                    }
                }
            }
        }
        worst
    }

    /// The five dialgebra identities as `[inner lhs, outer lhs, outer rhs, inner rhs]` with `true` = ⊣.
    pub fn axiom_defects(&self) -> [f64; 5] {
        const T: bool = true;
        const F: bool = false;
        [[T, T, T, T], [T, T, T, F], [F, T, F, T], [T, F, F, F], [F, F, F, F]].map(|s| self.axiom_defect(s))
    }

    pub fn multiplicative_defect(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for g in [&self.l, &self.r] {
            for i in 0..n {
                for j in 0..n {
                    for r in 0..n {
                        let lhs: C = (0..n).map(|p| g[i][j][p] * self.a[r][p]).sum();
                        let mut rhs = C::new(0.0, 0.0);
                        for p in 0..n {
                            for q in 0..n {
                                rhs += self.a[p][i] * self.a[q][j] * g[p][q][r];
                            }
                        }
                        worst = worst.max((lhs - rhs).norm());
                    }
                }
            }
        }
        worst
    }

    /// Residual of the αᵏ-derivation conditions for `d` (`d[i][j]`: coefficient of e_i in d(e_j)).
    pub fn derivation_rows(&self, d: &[Vec<C>], k: u32) -> Vec<C> {
        let n = self.n;
        let ak = mat_pow(&self.a, k);
        let mut out = Vec::new();
        let (da, ad) = (mat_mul(d, &self.a), mat_mul(&self.a, d));
        for i in 0..n {
            for j in 0..n {
                out.push(da[i][j] - ad[i][j]);
            }
        }
        for g in [&self.l, &self.r] {
            for i in 0..n {
                for j in 0..n {
                    for r in 0..n {
                        let mut v: C = (0..n).map(|p| g[i][j][p] * d[r][p]).sum();
                        for p in 0..n {
                            for q in 0..n {
                                v -= d[p][i] * ak[q][j] * g[p][q][r];
                                v -= ak[p][i] * d[q][j] * g[p][q][r];
                            }
                        }
                        out.push(v);
                    }
                }
            }
        }
        out
    }

    /// Residual of the linear centroid conditions: ψα = αψ and ψ(x)•α(y) = α(x)•ψ(y).
    pub fn centroid_rows(&self, psi: &[Vec<C>]) -> Vec<C> {
        let n = self.n;
        let mut out = Vec::new();
        let (pa, ap) = (mat_mul(psi, &self.a), mat_mul(&self.a, psi));
        for i in 0..n {
            for j in 0..n {
                out.push(pa[i][j] - ap[i][j]);
            }
        }
        for g in [&self.l, &self.r] {
            for i in 0..n {
                for j in 0..n {
                    for r in 0..n {
                        let mut v = C::new(0.0, 0.0);
                        for p in 0..n {
                            for q in 0..n {
                                v += psi[p][i] * self.a[q][j] * g[p][q][r];
                                v -= self.a[p][i] * psi[q][j] * g[p][q][r];
                            }
                        }
                        out.push(v);
                    }
                }
            }
        }
        out
    }

    fn space_dim(&self, rows_of: impl Fn(&[Vec<C>]) -> Vec<C>) -> usize {
        let n = self.n;
        // Column u of the system is the residual of the elementary map e_{out} ← e_{in}.
        let mut columns = Vec::new();
        for input in 0..n {
            for output in 0..n {
                let mut m = vec![vec![C::new(0.0, 0.0); n]; n];
                m[output][input] = C::new(1.0, 0.0);
                columns.push(rows_of(&m));
            }
        }
        n * n - rank(&columns)
    }

    pub fn derivation_dim(&self, k: u32) -> usize {
        self.space_dim(|d| self.derivation_rows(d, k))
    }

    pub fn centroid_dim(&self) -> usize {
        self.space_dim(|p| self.centroid_rows(p))
    }
}

/// Rank of the matrix whose columns (or rows — rank is symmetric) are the given vectors.
pub fn rank(vectors: &[Vec<C>]) -> usize {
    let mut m: Vec<Vec<C>> = vectors.to_vec();
    let scale = m.iter().flatten().map(|z| z.norm()).fold(1.0_f64, f64::max);
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).max_by(|&x, &y| m[x][c].norm().total_cmp(&m[y][c].norm())) else {
            break;
        };
        if m[p][c].norm() <= TOL * scale {
            continue;
        }
        m.swap(rank, p);
        let pivot = m[rank][c];
        for row in 0..m.len() {
            if row != rank {
                let f = m[row][c] / pivot;
                if f.norm() != 0.0 {
                    for cc in c..cols {
                        let v = m[rank][cc];
                        m[row][cc] -= f * v;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn max_norm(v: &[C]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
