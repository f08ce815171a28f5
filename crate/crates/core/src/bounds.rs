//! Exact-rational evaluation of the edge-density bound functions f1 and f2,
//! the density-deficit trade-off parameters, Turán density, the reduced-graph
//! edge accounting, and the constrained maximization check behind the
//! lower-branch Lagrangian argument.

use crate::error::{GraphError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from(BigInt::from(v))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Parses "p/q" or a plain decimal string into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || GraphError::InvalidParameter(format!("cannot parse {s:?} as an exact rational"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits_ok = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !(int_part.is_empty() || digits_ok(int_part)) || !(frac_part.is_empty() || digits_ok(frac_part)) {
        return Err(bad());
    }
    let int: BigInt = if int_part.is_empty() { BigInt::zero() } else { int_part.parse().map_err(|_| bad())? };
    let mut value = Rat::from(int);
    if !frac_part.is_empty() {
        let num: BigInt = frac_part.parse().map_err(|_| bad())?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        value += Rat::new(num, den);
    }
    Ok(value * Rat::from(BigInt::from(sign)))
}

/// Renders an exact rational as a decimal with the given significant digits.
pub fn render_decimal(r: &Rat, sig_digits: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let v = rat_to_f64(r);
    format!("{:.*}", sig_digits.saturating_sub(1), v)
        .trim_end_matches('0')
        .trim_end_matches('.')
        .to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Upper,
    Lower,
    InRange,
    OutOfRangeLow,
    OutOfRangeHigh,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Regime::Upper => "upper",
            Regime::Lower => "lower",
            Regime::InRange => "in-range",
            Regime::OutOfRangeLow => "out-of-range-low",
            Regime::OutOfRangeHigh => "out-of-range-high",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct BoundEvaluation {
    pub r: usize,
    pub delta: Rat,
    pub value: Rat,
    pub regime: Regime,
    pub theorem: u8,
}

/// Window endpoints of f1: [(2r-5)/(2r-2), (2r-5)/(2r-3)], with the branch
/// boundary at (5r-13)/(5r-8) belonging to the lower branch.
pub fn f1_window(r: usize) -> (Rat, Rat, Rat) {
    let r = r as i64;
    (rat(2 * r - 5, 2 * r - 2), rat(5 * r - 13, 5 * r - 8), rat(2 * r - 5, 2 * r - 3))
}

fn f1_upper_branch(r: i64, d: &Rat) -> Rat {
    let a = rat_int(-5 * r * r + 17 * r - 14);
    let b = rat_int(10 * r * r - 44 * r + 46);
    let c = rat_int(-5 * r * r + 27 * r - 36);
    (a * d * d + b * d + c) / rat_int(2)
}

fn f1_lower_branch(r: i64, d: &Rat) -> Rat {
    let a = rat_int(-4 * (r - 1));
    let b = rat_int(4 * (2 * r - 5));
    let c = rat_int(r - 3);
    (a * d * d + b * d + c) / rat_int(10 * r - 28)
}

pub fn f1(r: usize, delta: &Rat) -> Result<BoundEvaluation> {
    if r < 3 {
        return Err(GraphError::InvalidParameter("f1 needs r >= 3".into()));
    }
    let (lo, mid, hi) = f1_window(r);
    let (regime, value) = if *delta > hi {
        (Regime::OutOfRangeHigh, f1_upper_branch(r as i64, delta))
    } else if *delta < lo {
        (Regime::OutOfRangeLow, f1_lower_branch(r as i64, delta))
    } else if *delta > mid {
        (Regime::Upper, f1_upper_branch(r as i64, delta))
    } else {
        (Regime::Lower, f1_lower_branch(r as i64, delta))
    };
    Ok(BoundEvaluation { r, delta: delta.clone(), value, regime, theorem: 1 })
}

/// Window endpoints of f2: [(r-3)/(r-1), (r-3)/(r-2)].
pub fn f2_window(r: usize) -> (Rat, Rat) {
    let r = r as i64;
    (rat(r - 3, r - 1), rat(r - 3, r - 2))
}

pub fn f2(r: usize, delta: &Rat) -> Result<BoundEvaluation> {
    if r < 4 {
        return Err(GraphError::InvalidParameter("f2 needs r >= 4".into()));
    }
    let ri = r as i64;
    let one = Rat::one();
    let value = delta * (&one - delta)
        + (&one - delta) * (&one - delta) / rat_int(4)
        + rat_int(ri - 4) * delta * delta / rat_int(2 * (ri - 3));
    let (lo, hi) = f2_window(r);
    let regime = if *delta < lo {
        Regime::OutOfRangeLow
    } else if *delta > hi {
        Regime::OutOfRangeHigh
    } else {
        Regime::InRange
    };
    Ok(BoundEvaluation { r, delta: delta.clone(), value, regime, theorem: 2 })
}

#[derive(Clone, Debug)]
pub struct TradeoffParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub regime: Regime,
}

/// Parameters of the density-deficit trade-off rho + A(delta - B)^2 > C,
/// satisfying C - A(delta - B)^2 = f1(r, delta) on the matching branch.
pub fn tradeoff_params(r: usize, regime: Regime) -> Result<TradeoffParams> {
    if r < 3 {
        return Err(GraphError::InvalidParameter("tradeoff needs r >= 3".into()));
    }
    let ri = r as i64;
    match regime {
        Regime::Upper => Ok(TradeoffParams {
            a: rat(5 * ri * ri - 17 * ri + 14, 2),
            b: rat(5 * ri * ri - 22 * ri + 23, 5 * ri * ri - 17 * ri + 14),
            c: rat(5 * ri * ri - 22 * ri + 25, 2 * (5 * ri * ri - 17 * ri + 14)),
            regime,
        }),
        Regime::Lower => Ok(TradeoffParams {
            a: rat(2 * ri - 2, 5 * ri - 14),
            b: rat(2 * ri - 5, 2 * ri - 2),
            c: rat(ri - 2, 2 * ri - 2),
            regime,
        }),
        _ => Err(GraphError::InvalidParameter("tradeoff regime must be upper or lower".into())),
    }
}

impl TradeoffParams {
    pub fn evaluate(&self, delta: &Rat) -> Rat {
        let d = delta - &self.b;
        &self.c - &self.a * &d * &d
    }
}

/// Turán density of K_r-free graphs: (r-2)/(2(r-1)), attained by T_{r-1}(n).
pub fn turan_density(r: usize) -> Result<Rat> {
    if r < 3 {
        return Err(GraphError::InvalidParameter("turan_density needs r >= 3".into()));
    }
    let r = r as i64;
    Ok(rat(r - 2, 2 * (r - 1)))
}

/// Right-hand side of the reduced-graph edge bound:
/// e(R) n^2/k^2 + (d/2 + 2 eps) n^2.
pub fn reduced_edge_bound(e_r: u64, n: u64, k: u64, d: f64, eps: f64) -> Result<f64> {
    if k == 0 || 1.0 / (k as f64) > 2.0 * eps {
        return Err(GraphError::InvalidParameter("need 1/k <= 2 eps".into()));
    }
    if !(0.0..1.0).contains(&d) {
        return Err(GraphError::InvalidParameter("need 0 <= d < 1".into()));
    }
    let nf = n as f64;
    let kf = k as f64;
    Ok(e_r as f64 * nf * nf / (kf * kf) + (d / 2.0 + 2.0 * eps) * nf * nf)
}

/// g(x, y) = x(1-x) + y(1-x-y) + ((r-4)/(2(r-3))) y^2 in exact rationals.
pub fn g_claim(x: &Rat, y: &Rat, r: usize) -> Result<Rat> {
    if r < 4 {
        return Err(GraphError::InvalidParameter("the claim machinery needs r >= 4".into()));
    }
    let ri = r as i64;
    let one = Rat::one();
    Ok(x * (&one - x) + y * (&one - x - y) + rat(ri - 4, 2 * (ri - 3)) * y * y)
}

pub fn g_claim_f64(x: f64, y: f64, r: usize) -> f64 {
    let coeff = (r as f64 - 4.0) / (2.0 * (r as f64 - 3.0));
    x * (1.0 - x) + y * (1.0 - x - y) + coeff * y * y
}

/// Stationary point of the Lagrangian on x/2 + y = delta:
/// x = 2(4 delta - r delta + r - 3)/(5r - 14), y = (6 delta - 1)(r-3)/(5r - 14).
pub fn lagrangian_stationary(r: usize, delta: &Rat) -> Result<(Rat, Rat)> {
    if r < 4 {
        return Err(GraphError::InvalidParameter("the claim machinery needs r >= 4".into()));
    }
    let ri = r as i64;
    let den = rat_int(5 * ri - 14);
    let x = rat_int(2) * (rat_int(4 - ri) * delta + rat_int(ri - 3)) / den.clone();
    let y = (rat_int(6) * delta - Rat::one()) * rat_int(ri - 3) / den;
    Ok((x, y))
}

/// Slope of the boundary restriction h(y) = g(2 delta - 2y, y):
/// h'(y) = 6 delta - 1 - ((5r-14)/(r-3)) y.
pub fn h_prime(r: usize, delta: &Rat, y: &Rat) -> Rat {
    let ri = r as i64;
    rat_int(6) * delta - Rat::one() - rat(5 * ri - 14, ri - 3) * y
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ClaimReport {
    pub r: usize,
    pub delta: String,
    /// max of g - f1 over the grid (floats)
    pub max_excess: f64,
    pub argmax: (f64, f64),
    pub grid_points: u64,
    /// lower interval: stationary point feasible and g(x*, y*) = f1 exactly
    pub stationary_exact: Option<bool>,
    /// upper interval: h((r-3)(1-delta)) = f1 exactly
    pub boundary_exact: Option<bool>,
}

/// Scans the feasible region {0 <= x,y <= 1, y <= (r-3)(1-delta),
/// x/2 + y >= delta} for violations of g <= f1, and runs the exact
/// stationary-point / boundary checks of the two intervals.
pub fn verify_claim(r: usize, delta: &Rat, grid_step: f64) -> Result<ClaimReport> {
    if r < 4 {
        return Err(GraphError::InvalidParameter("the claim machinery needs r >= 4".into()));
    }
    let (lo, mid, hi) = f1_window(r);
    if *delta < lo || *delta > hi {
        return Err(GraphError::InvalidParameter("delta outside the f1 window".into()));
    }
    let f1_val = f1(r, delta)?.value;
    let f1_f = rat_to_f64(&f1_val);
    let d = rat_to_f64(delta);
    let y_cap = ((r as f64 - 3.0) * (1.0 - d)).min(1.0);
    let mut max_excess = f64::NEG_INFINITY;
    let mut argmax = (0.0, 0.0);
    let mut grid_points = 0u64;
    let steps_x = (1.0 / grid_step).ceil() as u64;
    let steps_y = (y_cap / grid_step).ceil() as u64;
    for iy in 0..=steps_y {
        let y = (iy as f64 * grid_step).min(y_cap);
        for ix in 0..=steps_x {
            let x = (ix as f64 * grid_step).min(1.0);
            if x / 2.0 + y < d {
                continue;
            }
            grid_points += 1;
            let excess = g_claim_f64(x, y, r) - f1_f;
            if excess > max_excess {
                max_excess = excess;
                argmax = (x, y);
            }
        }
    }
    let one = Rat::one();
    let stationary_exact = if *delta <= mid {
        let (x, y) = lagrangian_stationary(r, delta)?;
        let feasible = !x.is_negative()
            && !y.is_negative()
            && &x / rat_int(2) + &y == *delta
            && y <= rat_int(r as i64 - 3) * (&one - delta);
        let exact = g_claim(&x, &y, r)? == f1_val;
        Some(feasible && exact)
    } else {
        None
    };
    let boundary_exact = if *delta >= mid {
        let y = rat_int(r as i64 - 3) * (&one - delta);
        let x = rat_int(2) * delta - rat_int(2) * &y;
        Some(g_claim(&x, &y, r)? == f1_val)
    } else {
        None
    };
    Ok(ClaimReport {
        r,
        delta: delta.to_string(),
        max_excess,
        argmax,
        grid_points,
        stationary_exact,
        boundary_exact,
    })
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub delta: Rat,
    pub value: Rat,
    pub regime: Regime,
}

/// Evaluates f1 or f2 on the arithmetic grid from..=to with the given step.
pub fn sweep(theorem: u8, r: usize, from: &Rat, to: &Rat, step: &Rat) -> Result<Vec<SweepRow>> {
    if from > to {
        return Err(GraphError::InvalidParameter("sweep needs from <= to".into()));
    }
    if !step.is_positive() {
        return Err(GraphError::InvalidParameter("sweep needs a positive step".into()));
    }
    let mut rows = Vec::new();
    let mut delta = from.clone();
    while delta <= *to {
        let eval = match theorem {
            1 => f1(r, &delta)?,
            2 => f2(r, &delta)?,
            t => {
                return Err(GraphError::InvalidParameter(format!("unknown theorem {t}")));
            }
        };
        rows.push(SweepRow { delta: delta.clone(), value: eval.value, regime: eval.regime });
        delta += step;
    }
    Ok(rows)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("delta,value,regime\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            render_decimal(&row.delta, 12),
            render_decimal(&row.value, 12),
            row.regime
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_figure_points() {
        assert_eq!(f1(4, &rat(1, 2)).unwrap().value, rat(1, 3));
        assert_eq!(f1(4, &rat(3, 5)).unwrap().value, rat(8, 25));
        assert_eq!(f1(4, &rat(3, 5)).unwrap().regime, Regime::Upper);
        // breakpoint: both branches agree at 7/12
        let bp = rat(7, 12);
        assert_eq!(f1_upper_branch(4, &bp), rat(47, 144));
        assert_eq!(f1_lower_branch(4, &bp), rat(47, 144));
        assert_eq!(f1(4, &bp).unwrap().regime, Regime::Lower);
    }

    #[test]
    fn f1_branch_continuity() {
        for r in 3..=12i64 {
            let bp = rat(5 * r - 13, 5 * r - 8);
            assert_eq!(f1_upper_branch(r, &bp), f1_lower_branch(r, &bp), "r={r}");
        }
    }

    #[test]
    fn f1_out_of_range_flags() {
        assert_eq!(f1(4, &rat(1, 4)).unwrap().regime, Regime::OutOfRangeLow);
        assert_eq!(f1(4, &rat(9, 10)).unwrap().regime, Regime::OutOfRangeHigh);
        assert!(f1(2, &rat(1, 2)).is_err());
    }

    #[test]
    fn f2_points() {
        assert_eq!(f2(4, &rat(1, 3)).unwrap().value, rat(1, 3));
        assert_eq!(f2(5, &rat(3, 5)).unwrap().value, rat(37, 100));
        assert_eq!(f2(4, &rat(1, 2)).unwrap().value, rat(5, 16));
        assert!(f2(3, &rat(1, 2)).is_err());
    }

    #[test]
    fn endpoint_coincidence() {
        for r in 3..=12usize {
            let td = turan_density(r).unwrap();
            let (lo, _, _) = f1_window(r);
            assert_eq!(f1(r, &lo).unwrap().value, td, "f1 endpoint r={r}");
            if r >= 4 {
                let (lo2, _) = f2_window(r);
                assert_eq!(f2(r, &lo2).unwrap().value, td, "f2 endpoint r={r}");
            }
        }
    }

    #[test]
    fn tradeoff_r4() {
        let lo = tradeoff_params(4, Regime::Lower).unwrap();
        assert_eq!((lo.a.clone(), lo.b.clone(), lo.c.clone()), (rat_int(1), rat(1, 2), rat(1, 3)));
        let up = tradeoff_params(4, Regime::Upper).unwrap();
        assert_eq!((up.a.clone(), up.b.clone(), up.c.clone()), (rat_int(13), rat(15, 26), rat(17, 52)));
    }

    #[test]
    fn tradeoff_identity_pinned() {
        // quadratics agreeing at 5 points are identical
        for r in 3..=10usize {
            for (regime, branch) in
                [(Regime::Lower, f1_lower_branch as fn(i64, &Rat) -> Rat), (Regime::Upper, f1_upper_branch)]
            {
                let p = tradeoff_params(r, regime).unwrap();
                for i in 0..5i64 {
                    let d = rat(i, 7);
                    assert_eq!(p.evaluate(&d), branch(r as i64, &d), "r={r} {regime:?} i={i}");
                }
            }
        }
    }

    #[test]
    fn turan_density_values() {
        assert_eq!(turan_density(3).unwrap(), rat(1, 4));
        assert_eq!(turan_density(4).unwrap(), rat(1, 3));
        // closed-form edge count approaches the density
        use crate::graph::Graph;
        for r in 3..=8usize {
            let n = 1000usize;
            let e = Graph::turan_edge_count(r - 1, n) as f64;
            let d = rat_to_f64(&turan_density(r).unwrap());
            assert!((e / (n * n) as f64 - d).abs() < 1.0 / n as f64, "r={r}");
        }
    }

    #[test]
    fn reduced_bound_examples() {
        assert!((reduced_edge_bound(0, 100, 10, 0.1, 0.05).unwrap() - 1500.0).abs() < 1e-9);
        assert!((reduced_edge_bound(45, 100, 10, 0.0, 0.05).unwrap() - 5500.0).abs() < 1e-9);
        // main term e_R n^2/k^2 plus the (d/2 + 2 eps) n^2 slack
        let tight = reduced_edge_bound(45, 100, 1000, 1e-6, 5e-4).unwrap();
        let expect = 45.0 * 10_000.0 / 1e6 + (0.5e-6 + 1e-3) * 10_000.0;
        assert!((tight - expect).abs() < 1e-9);
        assert!(reduced_edge_bound(0, 10, 2, 0.5, 0.01).is_err()); // 1/k > 2 eps
    }

    #[test]
    fn stationary_point_r4() {
        let d = rat(11, 20);
        let (x, y) = lagrangian_stationary(4, &d).unwrap();
        assert_eq!(x, rat(1, 3));
        assert_eq!(y, rat(23, 60));
        assert_eq!(x / rat_int(2) + y, d);
    }

    #[test]
    fn g_at_stationary_matches_f1() {
        let g = g_claim(&rat(1, 3), &rat(23, 60), 4).unwrap();
        assert_eq!(g, rat(1191, 3600));
        assert_eq!(g, f1(4, &rat(11, 20)).unwrap().value);
    }

    #[test]
    fn g_boundary_x0() {
        // x = 0, y = delta: g = delta(1-delta) + ((r-4)/(2(r-3))) delta^2
        let d = rat(1, 2);
        let g = g_claim(&rat_int(0), &d, 5).unwrap();
        assert_eq!(g, rat(1, 4) + rat(1, 4) * rat(1, 4));
    }

    #[test]
    fn verify_claim_spots() {
        let rep = verify_claim(4, &rat(11, 20), 1e-3).unwrap();
        assert!(rep.max_excess <= 1e-9, "{}", rep.max_excess);
        assert_eq!(rep.stationary_exact, Some(true));
        assert!((rep.argmax.0 - 1.0 / 3.0).abs() < 0.01 && (rep.argmax.1 - 23.0 / 60.0).abs() < 0.01);

        let rep = verify_claim(4, &rat(3, 5), 1e-3).unwrap();
        assert!(rep.max_excess <= 1e-9);
        assert_eq!(rep.boundary_exact, Some(true));
        assert!((rep.argmax.0 - 0.4).abs() < 0.01 && (rep.argmax.1 - 0.4).abs() < 0.01);

        let rep = verify_claim(5, &rat(5, 8), 1e-3).unwrap();
        assert!(rep.max_excess <= 1e-9);
    }

    #[test]
    fn sweep_figure1() {
        let rows = sweep(1, 4, &rat(1, 2), &rat(3, 5), &rat(1, 120)).unwrap();
        assert_eq!(rows.len(), 13);
        assert_eq!(rows[0].value, rat(1, 3));
        assert_eq!(rows[12].value, rat(8, 25));
        // max at the left endpoint for r = 4
        assert!(rows.iter().all(|row| row.value <= rows[0].value));
        let rows2 = sweep(2, 4, &rat(1, 3), &rat(1, 2), &rat(1, 60)).unwrap();
        assert_eq!(rows2.first().unwrap().value, rat(1, 3));
        assert_eq!(rows2.last().unwrap().value, rat(5, 16));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/5").unwrap(), rat(3, 5));
        assert_eq!(parse_rational("0.55").unwrap(), rat(11, 20));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("2").unwrap(), rat_int(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.3e2").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
