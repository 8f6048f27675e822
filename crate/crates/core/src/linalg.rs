//! Exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::exactpoly::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Row echelon reduction in place; returns the pivot columns.
fn echelon(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    echelon(&mut a).len()
}

/// Some solution of `a·x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse of a non-square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Incrementally builds a basis from a stream of vectors, remembering how
/// each reduced vector is written in terms of the accepted inputs.
#[derive(Clone, Debug)]
pub struct Reducer {
    dim: usize,
    // (pivot column, reduced vector with 1 at pivot, combination of accepted inputs)
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    accepted: usize,
}

impl Reducer {
    pub fn new(dim: usize) -> Self {
        Reducer {
            dim,
            rows: Vec::new(),
            accepted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.accepted
    }

    pub fn is_full(&self) -> bool {
        self.accepted == self.dim
    }

    fn reduce(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut v = v.to_vec();
        let mut combo = vec![Rational::zero(); self.accepted];
        for (p, row, rc) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &f * y;
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                *x += &f * y;
            }
        }
        (v, combo)
    }

    /// Adds `v` if it is independent of the accepted vectors; returns its
    /// index among the accepted ones.
    pub fn insert(&mut self, v: &[Rational]) -> Option<usize> {
        assert_eq!(v.len(), self.dim);
        let (rem, combo) = self.reduce(v);
        let p = rem.iter().position(|x| !x.is_zero())?;
        let inv = rem[p].recip();
        let idx = self.accepted;
        self.accepted += 1;
        for (_, _, rc) in self.rows.iter_mut() {
            rc.push(Rational::zero());
        }
        // rem = v - Σ combo_j·accepted_j, normalised
        let mut rc: Vec<Rational> = combo.iter().map(|c| -(c * &inv)).collect();
        rc.push(inv.clone());
        let row: Vec<Rational> = rem.iter().map(|x| x * &inv).collect();
        // keep rows fully reduced at the new pivot
        for (_, r, c) in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                *x -= &f * y;
            }
            for (x, y) in c.iter_mut().zip(&rc) {
                *x -= &f * y;
            }
        }
        self.rows.push((p, row, rc));
        Some(idx)
    }

    /// Coefficients over the accepted vectors summing to `v`, if `v` lies in
    /// their span.
    pub fn express(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.dim);
        let (rem, combo) = self.reduce(v);
        rem.iter().all(|x| x.is_zero()).then_some(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|x| rat(*x)).collect())
            .collect()
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, m(&[&[1, -1], &[-1, 2]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&a, &[rat(1), rat(3)]).is_none());
        let x = solve(&a, &[rat(1), rat(2)]).unwrap();
        assert_eq!(mat_vec(&a, &x), vec![rat(1), rat(2)]);
        let b = m(&[&[4]]);
        assert_eq!(solve(&b, &[rat(1)]).unwrap(), vec![ratio(1, 4)]);
    }

    #[test]
    fn reducer_expresses_in_accepted_inputs() {
        let mut r = Reducer::new(3);
        let inputs = m(&[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(r.insert(&inputs[0]), Some(0));
        assert_eq!(r.insert(&inputs[1]), None);
        assert_eq!(r.insert(&inputs[2]), Some(1));
        assert_eq!(r.insert(&inputs[3]), Some(2));
        assert!(r.is_full());
        let target = vec![rat(3), rat(-1), rat(5)];
        let c = r.express(&target).unwrap();
        let accepted = [&inputs[0], &inputs[2], &inputs[3]];
        let back: Vec<Rational> = (0..3)
            .map(|j| (0..3).map(|k| &c[k] * &accepted[k][j]).sum())
            .collect();
        assert_eq!(back, target);
        assert_eq!(rank(&inputs), 3);
    }
}
