//! The Springer morphism on the maximal torus, and the Cayley transform for
//! the defining representations.

use num_traits::{One, Zero};

use super::weights::{integral_weight, weight_system_int};
use crate::error::{Error, Result};
use crate::exactpoly::{rat, LaurentPoly, Rational};
use crate::linalg::{inverse, Matrix};
use crate::rootdata::{dot_qi, Family, RootSystem};

/// `θ_λ(t) ∈ 𝔱` in ambient coordinates, as Laurent polynomials in the
/// ambient torus coordinates `t_i`. `h` is the trace-form orthogonal
/// projection of `ρ_λ(t)` onto the span of the coroots:
/// `Σ_μ m_μ μ(h) μ(x) = Σ_μ m_μ t^μ μ(x)` for all such `x`.
pub fn springer_torus_general(rs: &RootSystem, lambda: &[Rational]) -> Result<Vec<LaurentPoly>> {
    let lam = integral_weight(rs, lambda)?;
    let ws = weight_system_int(rs, &lam)?;
    let n = rs.rank();
    let dim = rs.dim();
    let pair = |mu: &[i64], j: usize| dot_qi(rs.simple_coroot(j), mu);
    let mut gram: Matrix = vec![vec![Rational::zero(); n]; n];
    let mut v = vec![LaurentPoly::zero(dim); n];
    for (mu, m) in ws.weights() {
        let m = rat(*m as i64);
        let p: Vec<Rational> = (1..=n).map(|j| pair(mu, j)).collect();
        let t_mu = LaurentPoly::monomial(mu.iter().map(|x| *x as i32).collect(), Rational::one());
        for j in 0..n {
            for k in 0..n {
                gram[j][k] += &m * &p[j] * &p[k];
            }
            if !p[j].is_zero() {
                v[j] = &v[j] + &t_mu.scale(&(&m * &p[j]));
            }
        }
    }
    let ginv = inverse(&gram).ok_or(Error::DegenerateForm)?;
    let mut h = vec![LaurentPoly::zero(dim); dim];
    for j in 0..n {
        let c_j = (0..n).fold(LaurentPoly::zero(dim), |acc, k| {
            &acc + &v[k].scale(&ginv[j][k])
        });
        for (a, coord) in rs.simple_coroot(j + 1).iter().enumerate() {
            if !coord.is_zero() {
                h[a] = &h[a] + &c_j.scale(coord);
            }
        }
    }
    Ok(h)
}

/// [`springer_torus_general`] for type A, restricted to the torus of `SL`
/// (`t_{n+1} = (t_1⋯t_n)^{-1}`).
pub fn springer_torus_sl(rs: &RootSystem, lambda: &[Rational]) -> Result<Vec<LaurentPoly>> {
    if rs.family() != Family::A {
        return Err(Error::UnsupportedFamily(rs.family()));
    }
    Ok(springer_torus_general(rs, lambda)?
        .iter()
        .map(LaurentPoly::restrict_determinant_one)
        .collect())
}

/// Matrix of the invariant form for the defining representation of
/// `SO_{2n}`, `SO_{2n+1}` or `Sp_{2n}`.
pub fn invariant_form(family: Family, n: usize) -> Result<Matrix> {
    let size = match family {
        Family::B => 2 * n + 1,
        Family::C | Family::D => 2 * n,
        Family::A => return Err(Error::UnsupportedFamily(family)),
    };
    let mut e = vec![vec![Rational::zero(); size]; size];
    for i in 0..size {
        let j = size - 1 - i;
        e[i][j] = match family {
            Family::B if i == n => rat(2),
            Family::C if i < n => rat(-1),
            _ => rat(1),
        };
    }
    Ok(e)
}

type LaurentMatrix = Vec<Vec<LaurentPoly>>;

fn scalar_matrix(m: &Matrix, nvars: usize) -> LaurentMatrix {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|c| LaurentPoly::constant(nvars, c.clone()))
                .collect()
        })
        .collect()
}

fn mat_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    let nvars = a[0][0].nvars();
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| {
                    (0..b.len()).fold(LaurentPoly::zero(nvars), |acc, k| {
                        if a[i][k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[i][k] * &b[k][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

fn transpose(a: &LaurentMatrix) -> LaurentMatrix {
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// `(g - E^{-1} g^t E)/2` for `g` in `SO_{2n}`, `SO_{2n+1}` or `Sp_{2n}`.
pub fn cayley_transform(g: &[Vec<LaurentPoly>], family: Family) -> Result<Vec<Vec<LaurentPoly>>> {
    let size = g.len();
    if size == 0 || g.iter().any(|row| row.len() != size) {
        return Err(Error::InvalidElement(
            "matrix must be square and nonempty".into(),
        ));
    }
    let n = match family {
        Family::B if size % 2 == 1 => size / 2,
        Family::C | Family::D if size.is_multiple_of(2) => size / 2,
        Family::A => return Err(Error::UnsupportedFamily(family)),
        _ => return Err(Error::NotInGroup(family)),
    };
    let nvars = g[0][0].nvars();
    let e_q = invariant_form(family, n)?;
    let e = scalar_matrix(&e_q, nvars);
    let e_inv = scalar_matrix(&inverse(&e_q).expect("invariant form is invertible"), nvars);
    let g: LaurentMatrix = g.to_vec();
    let gt = transpose(&g);
    if mat_mul(&mat_mul(&gt, &e), &g) != e {
        return Err(Error::NotInGroup(family));
    }
    let conj = mat_mul(&mat_mul(&e_inv, &gt), &e);
    let half = Rational::new(1.into(), 2.into());
    Ok(g.iter()
        .zip(&conj)
        .map(|(r, s)| r.iter().zip(s).map(|(a, b)| (a - b).scale(&half)).collect())
        .collect())
}

/// The symbolic torus point `diag(t_1,…,t_n,[1,]t_n^{-1},…,t_1^{-1})`.
pub fn torus_point(family: Family, n: usize) -> Result<Vec<Vec<LaurentPoly>>> {
    let mut diag: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
    match family {
        Family::B => diag.push(LaurentPoly::one(n)),
        Family::C | Family::D => {}
        Family::A => return Err(Error::UnsupportedFamily(family)),
    }
    for i in (0..n).rev() {
        let mut e = vec![0; n];
        e[i] = -1;
        diag.push(LaurentPoly::monomial(e, Rational::one()));
    }
    let size = diag.len();
    Ok((0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        diag[i].clone()
                    } else {
                        LaurentPoly::zero(n)
                    }
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use crate::rootdata::build_root_system;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, 't', Some(n)).unwrap()
    }

    #[test]
    fn sl2_first_and_second_fundamental_weight() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let h = springer_torus_sl(&a1, a1.fundamental_weight(1)).unwrap();
        assert_eq!(h[0], lp("1/2*t1 - 1/2*t1^-1", 1));
        let two = a1.weight_from_fundamental(&[2]).unwrap();
        let h = springer_torus_sl(&a1, &two).unwrap();
        // Gram entry 8, pairing 2(z^2 - z^-2)
        assert_eq!(h[0], lp("1/4*t1^2 - 1/4*t1^-2", 1));
    }

    #[test]
    fn trivial_rep_is_degenerate() {
        let c2 = build_root_system(Family::C, 2).unwrap();
        assert_eq!(
            springer_torus_general(&c2, &[rat(0), rat(0)]),
            Err(Error::DegenerateForm)
        );
    }

    #[test]
    fn symplectic_rank_one_cayley() {
        let g = torus_point(Family::C, 1).unwrap();
        let x = cayley_transform(&g, Family::C).unwrap();
        assert_eq!(x[0][0], lp("1/2*t1 - 1/2*t1^-1", 1));
        assert_eq!(x[1][1], lp("-1/2*t1 + 1/2*t1^-1", 1));
        assert!(x[0][1].is_zero() && x[1][0].is_zero());
    }

    #[test]
    fn odd_orthogonal_middle_entry_vanishes() {
        let g = torus_point(Family::B, 1).unwrap();
        let x = cayley_transform(&g, Family::B).unwrap();
        assert_eq!(x[0][0], lp("1/2*t1 - 1/2*t1^-1", 1));
        assert!(x[1][1].is_zero());
        assert_eq!(x[2][2], lp("-1/2*t1 + 1/2*t1^-1", 1));
    }

    #[test]
    fn identity_maps_to_zero() {
        for f in [Family::B, Family::C, Family::D] {
            let id: Vec<Vec<LaurentPoly>> = scalar_matrix(
                &(0..6 + (f == Family::B) as usize)
                    .map(|i| {
                        (0..6 + (f == Family::B) as usize)
                            .map(|j| if i == j { rat(1) } else { rat(0) })
                            .collect()
                    })
                    .collect(),
                2,
            );
            let x = cayley_transform(&id, f).unwrap();
            assert!(x.iter().flatten().all(LaurentPoly::is_zero));
        }
    }

    #[test]
    fn rejects_non_group_elements() {
        let mut g = torus_point(Family::C, 2).unwrap();
        g[0][0] = LaurentPoly::constant(2, rat(2));
        assert_eq!(
            cayley_transform(&g, Family::C),
            Err(Error::NotInGroup(Family::C))
        );
        let g = torus_point(Family::C, 2).unwrap();
        assert_eq!(
            cayley_transform(&g, Family::A),
            Err(Error::UnsupportedFamily(Family::A))
        );
    }

    #[test]
    fn lie_algebra_relation() {
        // X^t = -E X E^{-1}
        for (f, n) in [(Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            let g = torus_point(f, n).unwrap();
            let x = cayley_transform(&g, f).unwrap();
            let e_q = invariant_form(f, n).unwrap();
            let e = scalar_matrix(&e_q, n);
            let e_inv = scalar_matrix(&inverse(&e_q).unwrap(), n);
            let rhs = mat_mul(&mat_mul(&e, &x), &e_inv);
            let lhs = transpose(&x);
            for (a, b) in lhs.iter().flatten().zip(rhs.iter().flatten()) {
                assert_eq!(a, &-b);
            }
        }
    }

    #[test]
    fn defining_reps_match_cayley_diagonal() {
        for (f, n) in [(Family::C, 2), (Family::B, 3), (Family::D, 4)] {
            let rs = build_root_system(f, n).unwrap();
            let h = springer_torus_general(&rs, rs.fundamental_weight(1)).unwrap();
            let x = cayley_transform(&torus_point(f, n).unwrap(), f).unwrap();
            for i in 0..n {
                assert_eq!(h[i], x[i][i], "{rs} coordinate {i}");
            }
        }
    }
}
