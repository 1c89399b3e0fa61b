//! Penner's construction: positive twists on components of `A` and negative
//! twists on components of `B`, tracked on the bigon track obtained by
//! smoothing every intersection point.
//!
//! Each curve with `d` intersection points contributes `d` branches, branch
//! `k` running from its `k`-th to its `(k+1)`-th point. At a point of sign
//! `+1` the branch of `b` leaving the point is `j+` and the one entering it
//! is `j-`; likewise the branch of `a` leaving is `i+` and the entering one
//! `i-`. Sign `-1` swaps the tags.
//!
//! `M^{a+} = I + R^{a+}` where `R^{a+}_{pq}` counts the points of `a` at which
//! `q` is the `j+` branch, for every branch `p` of `a`; the other three
//! cases are analogous. For a word `w = c_1^{e_1} ... c_n^{e_n}` the matrix of
//! `phi^2` is the product, in the written order, of the minus-side factors
//! followed by the plus-side factors, each factor raised to `|e|` (using
//! `R^2 = 0`). The PF eigenvalue of that product is `lambda(phi)^2`.
//!
//! The global rule ("every branch of `a`") is used rather than only the
//! local branches `i+-`. Checked against the Fuchsian dilatation of
//! `A^e B^-d` for `e, d` in `1..=3` on the torus and `A_3` fixtures, where the
//! two agree to about `1e-14`. Swapping the two blocks cannot change the
//! result since `XY` and `YX` have the same spectrum.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::config::{ConfigurationGraph, Curve, EmbeddedConfiguration};
use crate::error::{Error, Result};
use crate::spectral::pf_eigen;

/// Product of twists about single components, e.g. `a1^2 b3^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ComponentWord {
    letters: Vec<(Curve, i64)>,
}

impl ComponentWord {
    pub fn new(letters: Vec<(Curve, i64)>) -> Result<Self> {
        if letters.iter().any(|&(_, e)| e == 0) {
            return Err(Error::Parse("exponents must be nonzero".into()));
        }
        Ok(ComponentWord { letters })
    }

    pub fn letters(&self) -> &[(Curve, i64)] {
        &self.letters
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ComponentWord { letters }
    }

    /// `T_A^e T_B^-d` written on components: every `a_i^e`, then every `b_j^-d`.
    pub fn full_multi_twist(g: &ConfigurationGraph, e: i64, d: i64) -> Self {
        let mut letters: Vec<(Curve, i64)> = (0..g.n_a()).map(|i| (Curve::A(i), e)).collect();
        letters.extend((0..g.n_b()).map(|j| (Curve::B(j), -d)));
        ComponentWord { letters }
    }
}

impl FromStr for ComponentWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => {
                    let e = e.trim_start_matches('{').trim_end_matches('}');
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                    (h, e)
                }
                None => (tok, 1),
            };
            let mut chars = head.chars();
            let family = chars.next();
            let index: usize = chars
                .as_str()
                .parse()
                .ok()
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::Parse(format!("bad curve index in {tok:?}")))?;
            let curve = match family {
                Some('a') | Some('A') => Curve::A(index - 1),
                Some('b') | Some('B') => Curve::B(index - 1),
                _ => return Err(Error::Parse(format!("unknown curve {head:?}"))),
            };
            letters.push((curve, exp));
        }
        ComponentWord::new(letters)
    }
}

impl fmt::Display for ComponentWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(c, e)| {
                let name = match c {
                    Curve::A(i) => format!("a{}", i + 1),
                    Curve::B(j) => format!("b{}", j + 1),
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub curve: Curve,
    /// Position of `from_point` along the curve.
    pub index: usize,
    pub from_point: usize,
    pub to_point: usize,
}

/// The four branches around an intersection point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PointTags {
    pub i_plus: usize,
    pub i_minus: usize,
    pub j_plus: usize,
    pub j_minus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigonTrack {
    pub branches: Vec<Branch>,
    /// Branch indices along each a-curve, then each b-curve.
    pub a_branches: Vec<Vec<usize>>,
    pub b_branches: Vec<Vec<usize>>,
    /// Tags per intersection point (indexed like the embedding's points).
    pub tags: Vec<PointTags>,
    /// `(a, b)` curves through each point.
    pub point_curves: Vec<(usize, usize)>,
    n_a: usize,
    n_b: usize,
}

impl BigonTrack {
    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn curve_branches(&self, c: Curve) -> &[usize] {
        match c {
            Curve::A(i) => &self.a_branches[i],
            Curve::B(j) => &self.b_branches[j],
        }
    }

    fn has_curve(&self, c: Curve) -> bool {
        match c {
            Curve::A(i) => i < self.n_a,
            Curve::B(j) => j < self.n_b,
        }
    }
}

pub fn build_track(e: &EmbeddedConfiguration) -> Result<BigonTrack> {
    let g = e.graph();
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut branches = Vec::new();
    // (leaving, entering) branch at each point, per family
    let n_pts = e.points().len();
    let mut a_adj = vec![(usize::MAX, usize::MAX); n_pts];
    let mut b_adj = vec![(usize::MAX, usize::MAX); n_pts];
    let mut add_curve = |curve: Curve, cycle: &[usize], adj: &mut Vec<(usize, usize)>| {
        let d = cycle.len();
        let mut ids = Vec::with_capacity(d);
        for k in 0..d {
            let (from, to) = (cycle[k], cycle[(k + 1) % d]);
            let id = branches.len();
            branches.push(Branch {
                curve,
                index: k,
                from_point: from,
                to_point: to,
            });
            adj[from].0 = id;
            adj[to].1 = id;
            ids.push(id);
        }
        ids
    };
    let a_branches: Vec<Vec<usize>> = (0..g.n_a())
        .map(|i| add_curve(Curve::A(i), e.a_cycle(i), &mut a_adj))
        .collect();
    let b_branches: Vec<Vec<usize>> = (0..g.n_b())
        .map(|j| add_curve(Curve::B(j), e.b_cycle(j), &mut b_adj))
        .collect();
    let tags = e
        .points()
        .iter()
        .enumerate()
        .map(|(p, pt)| {
            let (a_out, a_in) = a_adj[p];
            let (b_out, b_in) = b_adj[p];
            if pt.sign > 0 {
                PointTags {
                    i_plus: a_out,
                    i_minus: a_in,
                    j_plus: b_out,
                    j_minus: b_in,
                }
            } else {
                PointTags {
                    i_plus: a_in,
                    i_minus: a_out,
                    j_plus: b_in,
                    j_minus: b_out,
                }
            }
        })
        .collect();
    Ok(BigonTrack {
        branches,
        a_branches,
        b_branches,
        tags,
        point_curves: e.points().iter().map(|p| (p.a_curve, p.b_curve)).collect(),
        n_a: g.n_a(),
        n_b: g.n_b(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Plus,
    Minus,
}

/// `R` for the push-off of `curve` on `side`.
fn incidence_r(t: &BigonTrack, curve: Curve, side: Side) -> Vec<Vec<u64>> {
    let k = t.len();
    let mut r = vec![vec![0u64; k]; k];
    let own = t.curve_branches(curve);
    for (tag, &(a, b)) in t.tags.iter().zip(&t.point_curves) {
        let on_curve = match curve {
            Curve::A(i) => a == i,
            Curve::B(j) => b == j,
        };
        if !on_curve {
            continue;
        }
        let q = match (curve, side) {
            (Curve::A(_), Side::Plus) => tag.j_plus,
            (Curve::A(_), Side::Minus) => tag.j_minus,
            (Curve::B(_), Side::Plus) => tag.i_plus,
            (Curve::B(_), Side::Minus) => tag.i_minus,
        };
        for &row in own {
            r[row][q] += 1;
        }
    }
    r
}

/// `M = I + R` for the push-off of `curve` on `side`.
pub fn twist_incidence(t: &BigonTrack, curve: Curve, side: Side) -> Result<Vec<Vec<u64>>> {
    if !t.has_curve(curve) {
        return Err(Error::Validation(format!("no curve {curve:?}")));
    }
    let mut m = incidence_r(t, curve, side);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] += 1;
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Membership {
    /// Every component is twisted at least once.
    InG0,
    InG,
    Invalid,
}

pub fn validate_penner_word(w: &ComponentWord, g: &ConfigurationGraph) -> Membership {
    let mut seen_a = vec![false; g.n_a()];
    let mut seen_b = vec![false; g.n_b()];
    for &(c, e) in &w.letters {
        match c {
            Curve::A(i) if i < g.n_a() && e > 0 => seen_a[i] = true,
            Curve::B(j) if j < g.n_b() && e < 0 => seen_b[j] = true,
            _ => return Membership::Invalid,
        }
    }
    if seen_a.iter().chain(&seen_b).all(|&s| s) {
        Membership::InG0
    } else {
        Membership::InG
    }
}

fn overflow() -> Error {
    Error::Validation("incidence matrix entries overflow".into())
}

/// `M <- M (I + e R)`, done as `M + e (M R)`.
fn apply_factor(m: &mut [Vec<u64>], r: &[Vec<u64>], e: u64) -> Result<()> {
    let k = m.len();
    for row in m.iter_mut() {
        let mut add = vec![0u64; k];
        for (p, &x) in row.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (q, &y) in r[p].iter().enumerate() {
                if y != 0 {
                    add[q] = x
                        .checked_mul(y)
                        .and_then(|v| v.checked_mul(e))
                        .and_then(|v| add[q].checked_add(v))
                        .ok_or_else(overflow)?;
                }
            }
        }
        for (x, a) in row.iter_mut().zip(add) {
            *x = x.checked_add(a).ok_or_else(overflow)?;
        }
    }
    Ok(())
}

/// Incidence matrix of `phi^2` for a word in `G0(A, B)`.
pub fn phi_squared_matrix(w: &ComponentWord, e: &EmbeddedConfiguration) -> Result<Vec<Vec<u64>>> {
    if validate_penner_word(w, e.graph()) != Membership::InG0 {
        return Err(Error::NotInG0(w.to_string()));
    }
    let t = build_track(e)?;
    let k = t.len();
    let mut m: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    for side in [Side::Minus, Side::Plus] {
        for &(c, exp) in &w.letters {
            let r = incidence_r(&t, c, side);
            apply_factor(&mut m, &r, exp.unsigned_abs())?;
        }
    }
    Ok(m)
}

/// `lambda(phi)`, the square root of the PF eigenvalue of `M(phi^2)`.
///
/// The matrix is scaled to max entry 1 first, so `tol` bounds the
/// relative error of the eigenvalue.
pub fn penner_dilatation(w: &ComponentWord, e: &EmbeddedConfiguration, tol: f64) -> Result<f64> {
    let m = phi_squared_matrix(w, e)?;
    let scale = m.iter().flatten().copied().max().unwrap_or(1).max(1) as f64;
    let mf: Vec<Vec<f64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as f64 / scale).collect())
        .collect();
    let pf = pf_eigen(&mf, tol)?;
    Ok((pf.mu * scale).sqrt())
}

/// Smallest row sum of `M(phi^2)`.
pub fn row_sum_check(w: &ComponentWord, e: &EmbeddedConfiguration) -> Result<u64> {
    let m = phi_squared_matrix(w, e)?;
    m.iter()
        .map(|r| r.iter().try_fold(0u64, |a, &x| a.checked_add(x)).ok_or_else(overflow))
        .try_fold(u64::MAX, |lo, s| s.map(|s| lo.min(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn word(s: &str) -> ComponentWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_words() {
        let w = word("a1^2 b3^-1 a2");
        assert_eq!(
            w.letters(),
            &[(Curve::A(0), 2), (Curve::B(2), -1), (Curve::A(1), 1)]
        );
        assert_eq!(w.to_string(), "a1^2 b3^-1 a2");
        assert!("a0".parse::<ComponentWord>().is_err());
        assert!("c1".parse::<ComponentWord>().is_err());
        assert!("a1^0".parse::<ComponentWord>().is_err());
    }

    #[test]
    fn branch_counts() {
        assert_eq!(build_track(&fixtures::torus()).unwrap().len(), 2);
        assert_eq!(build_track(&fixtures::a3_embedded()).unwrap().len(), 4);
        assert_eq!(build_track(&fixtures::lehmer()).unwrap().len(), 18);
    }

    #[test]
    fn torus_incidence() {
        let t = build_track(&fixtures::torus()).unwrap();
        assert_eq!(
            twist_incidence(&t, Curve::A(0), Side::Plus).unwrap(),
            vec![vec![1, 1], vec![0, 1]]
        );
        assert_eq!(
            twist_incidence(&t, Curve::B(0), Side::Minus).unwrap(),
            vec![vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn r_squares_to_zero() {
        let e = fixtures::lehmer();
        let t = build_track(&e).unwrap();
        let curves = (0..5).map(Curve::A).chain((0..5).map(Curve::B));
        for c in curves {
            for side in [Side::Plus, Side::Minus] {
                let r = incidence_r(&t, c, side);
                let k = r.len();
                for i in 0..k {
                    for j in 0..k {
                        let s: u64 = (0..k).map(|l| r[i][l] * r[l][j]).sum();
                        assert_eq!(s, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn membership() {
        let g = fixtures::torus().graph().clone();
        assert_eq!(validate_penner_word(&word("a1 b1^-1"), &g), Membership::InG0);
        assert_eq!(validate_penner_word(&word("a1"), &g), Membership::InG);
        assert_eq!(validate_penner_word(&word("a1^-1 b1^-1"), &g), Membership::Invalid);
        assert_eq!(validate_penner_word(&word("a2 b1^-1"), &g), Membership::Invalid);
    }

    #[test]
    fn torus_dilatations() {
        let e = fixtures::torus();
        let d = penner_dilatation(&word("a1 b1^-1"), &e, 1e-12).unwrap();
        assert!((d - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        let d = penner_dilatation(&word("a1^2 b1^-1"), &e, 1e-12).unwrap();
        assert!((d - (2.0 + 3f64.sqrt())).abs() < 1e-9);
        assert!(row_sum_check(&word("a1 b1^-1"), &e).unwrap() >= 5);
        assert!(row_sum_check(&word("a1^3 b1^-3"), &e).unwrap() >= 5);
        assert!(matches!(
            penner_dilatation(&word("a1"), &e, 1e-12),
            Err(Error::NotInG0(_))
        ));
    }

    #[test]
    fn a3_full_word() {
        let e = fixtures::a3_embedded();
        let w = ComponentWord::full_multi_twist(e.graph(), 1, 1);
        assert_eq!(w.to_string(), "a1 b1^-1 b2^-1");
        assert!(row_sum_check(&w, &e).unwrap() >= 5);
        // trace of A B^-1 at mu = sqrt 2 is 4
        let d = penner_dilatation(&w, &e, 1e-12).unwrap();
        assert!((d - (2.0 + 3f64.sqrt())).abs() < 1e-9);
    }
}
