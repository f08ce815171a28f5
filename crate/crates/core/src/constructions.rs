//! Finite instances of the tightness constructions: the two Borsuk-blowup
//! families and the Erdős-graph family, with a desk-scale circle core and
//! assertion-backed reports.

use crate::bounds::{f1, f2, rat, rat_int, rat_to_f64, Rat};
use crate::cliques::clique_number;
use crate::coloring::chromatic_number_capped;
use crate::cycles::girth;
use crate::error::{GraphError, Result};
use crate::graph::{Graph, RolePartition};
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    BhStar,
    BhStarStar,
    Eg,
}

impl std::fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConstructionKind::BhStar => "bh-star",
            ConstructionKind::BhStarStar => "bh-star-star",
            ConstructionKind::Eg => "eg",
        };
        f.write_str(s)
    }
}

/// Core of an EG build: a triangle-free graph standing in for the
/// high-girth, high-chromatic component.
#[derive(Clone, Debug)]
pub enum EgCore {
    C5,
    Petersen,
    Grotzsch,
    External(Graph),
}

impl EgCore {
    pub fn graph(&self) -> Graph {
        match self {
            EgCore::C5 => Graph::cycle(5),
            EgCore::Petersen => Graph::petersen(),
            EgCore::Grotzsch => Graph::grotzsch(),
            EgCore::External(g) => g.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub r: usize,
    pub delta: Rat,
    /// target total vertex count
    pub scale: usize,
    /// circle-core size for the BH kinds (ignored for EG)
    pub core_size: usize,
    /// circle-core angular slack, 0 < eps < pi/3
    pub eps: f64,
    /// EG core (ignored for the BH kinds)
    pub eg_core: Option<EgCore>,
}

impl ConstructionSpec {
    pub fn new(kind: ConstructionKind, r: usize, delta: Rat, scale: usize) -> Self {
        ConstructionSpec {
            kind,
            r,
            delta,
            scale,
            core_size: (scale / 100).max(3),
            eps: 0.1,
            eg_core: None,
        }
    }
}

/// Exact rational part-size ratios |Y_i|/|X| and |Z|/|X| for BH*.
pub fn bh_star_ratios(r: usize, delta: &Rat) -> Result<(Rat, Rat)> {
    let ri = r as i64;
    let one = Rat::from_integer(1.into());
    let den = rat_int(2) * delta - rat_int(2 * (ri - 3)) * (&one - delta);
    if !den.is_positive() {
        return Err(GraphError::InvalidParameter(
            "bh-star part ratios need 2 delta > 2(r-3)(1-delta)".into(),
        ));
    }
    let y = (&one - delta) / &den;
    let z = (&one - rat_int(2) * delta + rat_int(ri - 3) * (&one - delta)) / den;
    Ok((y, z))
}

/// Exact rational part-size ratios |Y_i|/|X| and |Z|/|X| for BH**.
pub fn bh_star_star_ratios(r: usize, delta: &Rat) -> Result<(Rat, Rat)> {
    let ri = r as i64;
    let one = Rat::from_integer(1.into());
    let six_d = rat_int(6) * delta - &one;
    let den = rat_int(2) * (delta * rat_int(5 * ri - 14) - rat_int(ri - 3) * &six_d);
    if !den.is_positive() {
        return Err(GraphError::InvalidParameter(
            "bh-star-star part ratios need delta(5r-14) > (r-3)(6 delta - 1)".into(),
        ));
    }
    let y = &six_d / &den;
    let z = ((&one - rat_int(2) * delta) * rat_int(5 * ri - 14) + rat_int(ri - 3) * six_d) / den;
    Ok((y, z))
}

fn round_nearest(x: &Rat) -> usize {
    (x + rat(1, 2)).floor().to_integer().to_usize().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSizes {
    pub x: usize,
    pub y_each: usize,
    pub y_parts: usize,
    pub z: usize,
}

/// Part sizes of BH* for a given |X|, rounding the exact targets.
pub fn part_sizes_bh_star(r: usize, delta: &Rat, x_size: usize) -> Result<PartSizes> {
    let (ry, rz) = bh_star_ratios(r, delta)?;
    let xs = rat_int(x_size as i64);
    Ok(PartSizes {
        x: x_size,
        y_each: round_nearest(&(ry * &xs)),
        y_parts: r - 3,
        z: round_nearest(&(rz * &xs)),
    })
}

/// Part sizes of BH** for a given |X|.
pub fn part_sizes_bh_star_star(r: usize, delta: &Rat, x_size: usize) -> Result<PartSizes> {
    let (ry, rz) = bh_star_star_ratios(r, delta)?;
    let xs = rat_int(x_size as i64);
    Ok(PartSizes {
        x: x_size,
        y_each: round_nearest(&(ry * &xs)),
        y_parts: r - 3,
        z: round_nearest(&(rz * &xs)),
    })
}

/// Part sizes of EG at a total scale: |Y_i| = delta n/(r-3), |X| = |Z| =
/// (1-delta) n/2.
pub fn part_sizes_eg(r: usize, delta: &Rat, scale: usize) -> Result<PartSizes> {
    if r < 4 {
        return Err(GraphError::InvalidParameter("eg needs r >= 4".into()));
    }
    let n = rat_int(scale as i64);
    let one = Rat::from_integer(1.into());
    let y = delta * &n / rat_int(r as i64 - 3);
    let xz = (&one - delta) * &n / rat_int(2);
    if y.is_negative() || xz.is_negative() {
        return Err(GraphError::InvalidParameter("delta outside [0, 1]".into()));
    }
    Ok(PartSizes {
        x: round_nearest(&xz),
        y_each: round_nearest(&y),
        y_parts: r - 3,
        z: round_nearest(&xz),
    })
}

fn circular_distance(a: f64, b: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let d = (a - b).rem_euclid(two_pi);
    d.min(two_pi - d)
}

/// Desk-scale circle Borsuk core on U' (near-antipodal adjacency) plus an
/// independent set X attached by antipodal caps. All properties the BH
/// builds rely on are asserted on the result:
/// the union is triangle-free, X is independent, and every u in U' sees at
/// least (1/2 - eps)|X| of X.
pub fn borsuk_circle_core(m: usize, eps: f64, x_count: usize) -> Result<(Graph, RolePartition)> {
    use std::f64::consts::PI;
    if !(eps > 0.0 && eps < PI / 3.0) {
        return Err(GraphError::InvalidParameter("need 0 < eps < pi/3".into()));
    }
    if m < 3 || x_count < 3 {
        return Err(GraphError::InvalidParameter("need m, x_count >= 3".into()));
    }
    let n = m + x_count;
    let mut g = Graph::empty(n);
    let u_angle = |i: usize| std::f64::consts::TAU * i as f64 / m as f64;
    let x_angle = |j: usize| std::f64::consts::TAU * j as f64 / x_count as f64;
    for i in 0..m {
        for i2 in (i + 1)..m {
            if circular_distance(u_angle(i), u_angle(i2)) > PI - eps {
                g.add_edge(i, i2);
            }
        }
        for j in 0..x_count {
            if circular_distance(u_angle(i), x_angle(j)) > PI / 2.0 + eps / 2.0 {
                g.add_edge(i, m + j);
            }
        }
    }
    // construction-bug guards
    if crate::cliques::has_clique(&g, 3) {
        return Err(GraphError::InvalidParameter("circle core contains a triangle".into()));
    }
    let min_x_nbrs = (0..m)
        .map(|u| g.neighbors(u).filter(|&w| w >= m).count())
        .min()
        .unwrap_or(0);
    if (min_x_nbrs as f64) < (0.5 - eps) * x_count as f64 {
        return Err(GraphError::InvalidParameter(format!(
            "circle core X-degree {min_x_nbrs} below (1/2 - eps)|X|"
        )));
    }
    let mut roles = RolePartition::new();
    roles.add_role("U'", (0..m).collect(), n)?;
    roles.add_role("X", (m..n).collect(), n)?;
    Ok((g, roles))
}

#[derive(Clone, Debug, Serialize)]
pub struct CoreDiagnostics {
    pub size: usize,
    pub edges: usize,
    pub girth: Option<usize>,
    pub triangle_free: bool,
    pub chi: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub kind: String,
    pub r: usize,
    pub delta: String,
    pub n: usize,
    pub parts: BTreeMap<String, usize>,
    pub edges: usize,
    pub min_degree: usize,
    pub density: f64,
    pub target: f64,
    pub target_exact: String,
    pub deviation: f64,
    pub clique_number: usize,
    pub core: Option<CoreDiagnostics>,
}

pub struct Built {
    pub graph: Graph,
    pub roles: RolePartition,
    pub report: ConstructionReport,
}

/// Largest-remainder rounding of exact rational targets to integers with the
/// given total.
fn largest_remainder(targets: &[Rat], total: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = targets.iter().map(|t| t.floor().to_integer().to_usize().unwrap_or(0)).collect();
    let mut fracs: Vec<(Rat, usize)> = targets
        .iter()
        .enumerate()
        .map(|(i, t)| (t - t.floor(), i))
        .collect();
    fracs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let assigned: usize = sizes.iter().sum();
    let mut left = total.saturating_sub(assigned);
    let mut k = 0;
    while left > 0 {
        sizes[fracs[k % fracs.len()].1] += 1;
        left -= 1;
        k += 1;
    }
    sizes
}

fn bh_build(spec: &ConstructionSpec, ratios: (Rat, Rat)) -> Result<Built> {
    let r = spec.r;
    if r < 3 {
        return Err(GraphError::InvalidParameter("bh builds need r >= 3".into()));
    }
    let (ry, rz) = ratios;
    let m = spec.core_size;
    if spec.scale <= m + r {
        return Err(GraphError::InvalidParameter("scale too small for the core".into()));
    }
    let budget = spec.scale - m;
    // solve |X| from x (1 + (r-3) ry + rz) = budget
    let denom = Rat::from_integer(1.into()) + rat_int(r as i64 - 3) * &ry + &rz;
    let x_target = rat_int(budget as i64) / denom;
    let mut targets = vec![x_target.clone()];
    for _ in 0..(r - 3) {
        targets.push(&ry * &x_target);
    }
    targets.push(&rz * &x_target);
    let sizes = largest_remainder(&targets, budget);
    let x_size = sizes[0];
    let y_sizes = &sizes[1..1 + (r - 3)];
    let z_size = sizes[r - 2];
    if x_size < 3 {
        return Err(GraphError::InvalidParameter("resolved |X| too small".into()));
    }

    let (core, _) = borsuk_circle_core(m, spec.eps, x_size)?;
    // layout: [U' 0..m][X m..m+x][Y parts][Z]
    let n = m + x_size + y_sizes.iter().sum::<usize>() + z_size;
    let mut g = Graph::empty(n);
    for (u, v) in core.edges() {
        g.add_edge(u, v); // core labels already match the layout
    }
    let x_start = m;
    let y_start = m + x_size;
    let mut y_bounds = Vec::new();
    let mut pos = y_start;
    for &ys in y_sizes {
        y_bounds.push((pos, pos + ys));
        pos += ys;
    }
    let z_start = pos;
    // Y parts form a complete (r-3)-partite graph
    for i in 0..y_bounds.len() {
        for j in (i + 1)..y_bounds.len() {
            for u in y_bounds[i].0..y_bounds[i].1 {
                for v in y_bounds[j].0..y_bounds[j].1 {
                    g.add_edge(u, v);
                }
            }
        }
    }
    // complete join X - Z
    for u in x_start..y_start {
        for v in z_start..n {
            g.add_edge(u, v);
        }
    }
    // complete join Y - (U' ∪ X ∪ Z)
    for u in y_start..z_start {
        for v in (0..y_start).chain(z_start..n) {
            g.add_edge(u, v);
        }
    }

    let mut roles = RolePartition::new();
    roles.add_role("U'", (0..m).collect(), n)?;
    roles.add_role("X", (x_start..y_start).collect(), n)?;
    for (i, &(a, b)) in y_bounds.iter().enumerate() {
        roles.add_role(&format!("Y{}", i + 1), (a..b).collect(), n)?;
    }
    roles.add_role("Z", (z_start..n).collect(), n)?;

    let core_graph = g.induced(&(0..m).collect::<Vec<_>>())?;
    let target = f1(r, &spec.delta)?.value;
    let report = build_report(spec.kind, r, &spec.delta, &g, &roles, &target, Some(&core_graph));
    Ok(Built { graph: g, roles, report })
}

pub fn build_bh_star(spec: &ConstructionSpec) -> Result<Built> {
    bh_build(spec, bh_star_ratios(spec.r, &spec.delta)?)
}

pub fn build_bh_star_star(spec: &ConstructionSpec) -> Result<Built> {
    bh_build(spec, bh_star_star_ratios(spec.r, &spec.delta)?)
}

pub fn build_eg(spec: &ConstructionSpec) -> Result<Built> {
    let r = spec.r;
    let core = spec.eg_core.clone().unwrap_or(EgCore::Petersen).graph();
    if let Some(girth) = girth(&core) {
        if girth < 4 {
            return Err(GraphError::InvalidParameter("eg core must have girth >= 4".into()));
        }
    }
    if core.n() * 50 > spec.scale {
        return Err(GraphError::InvalidParameter(format!(
            "eg core of {} vertices exceeds 2% of scale {}",
            core.n(),
            spec.scale
        )));
    }
    let budget = spec.scale - core.n();
    let one = Rat::from_integer(1.into());
    if r < 4 {
        return Err(GraphError::InvalidParameter("eg needs r >= 4".into()));
    }
    let y_t = &spec.delta * rat_int(budget as i64) / rat_int(r as i64 - 3);
    let xz_t = (&one - &spec.delta) * rat_int(budget as i64) / rat_int(2);
    let mut targets = vec![xz_t.clone()];
    for _ in 0..(r - 3) {
        targets.push(y_t.clone());
    }
    targets.push(xz_t);
    let sizes = largest_remainder(&targets, budget);
    let x_size = sizes[0];
    let y_sizes = &sizes[1..1 + (r - 3)];
    let z_size = sizes[r - 2];

    // layout: [E 0..c][X][Y parts][Z]
    let c = core.n();
    let n = c + x_size + y_sizes.iter().sum::<usize>() + z_size;
    let mut g = Graph::empty(n);
    for (u, v) in core.edges() {
        g.add_edge(u, v);
    }
    let x_start = c;
    let y_start = c + x_size;
    let mut y_bounds = Vec::new();
    let mut pos = y_start;
    for &ys in y_sizes {
        y_bounds.push((pos, pos + ys));
        pos += ys;
    }
    let z_start = pos;
    for i in 0..y_bounds.len() {
        for j in (i + 1)..y_bounds.len() {
            for u in y_bounds[i].0..y_bounds[i].1 {
                for v in y_bounds[j].0..y_bounds[j].1 {
                    g.add_edge(u, v);
                }
            }
        }
    }
    for u in x_start..y_start {
        for v in z_start..n {
            g.add_edge(u, v);
        }
    }
    // complete join (E ∪ X ∪ Z) - Y
    for u in y_start..z_start {
        for v in (0..y_start).chain(z_start..n) {
            g.add_edge(u, v);
        }
    }

    let mut roles = RolePartition::new();
    roles.add_role("E", (0..c).collect(), n)?;
    roles.add_role("X", (x_start..y_start).collect(), n)?;
    for (i, &(a, b)) in y_bounds.iter().enumerate() {
        roles.add_role(&format!("Y{}", i + 1), (a..b).collect(), n)?;
    }
    roles.add_role("Z", (z_start..n).collect(), n)?;

    let target = f2(r, &spec.delta)?.value;
    let report = build_report(spec.kind, r, &spec.delta, &g, &roles, &target, Some(&core));
    Ok(Built { graph: g, roles, report })
}

fn build_report(
    kind: ConstructionKind,
    r: usize,
    delta: &Rat,
    g: &Graph,
    roles: &RolePartition,
    target: &Rat,
    core: Option<&Graph>,
) -> ConstructionReport {
    let n = g.n();
    let e = g.edge_count();
    let density = e as f64 / (n * n) as f64;
    let target_f = rat_to_f64(target);
    let parts: BTreeMap<String, usize> =
        roles.roles().map(|(name, vs)| (name.to_string(), vs.len())).collect();
    let core_diag = core.map(|c| CoreDiagnostics {
        size: c.n(),
        edges: c.edge_count(),
        girth: girth(c),
        triangle_free: !crate::cliques::has_clique(c, 3),
        chi: if c.n() <= 16 { chromatic_number_capped(c, 16).ok() } else { None },
    });
    ConstructionReport {
        kind: kind.to_string(),
        r,
        delta: delta.to_string(),
        n,
        parts,
        edges: e,
        min_degree: g.min_degree(),
        density,
        target: target_f,
        target_exact: target.to_string(),
        deviation: (density - target_f).abs(),
        clique_number: clique_number(g),
        core: core_diag,
    }
}

/// Report for an arbitrary graph against a bound target.
pub fn density_report(g: &Graph, r: usize, delta: &Rat, theorem: u8) -> Result<ConstructionReport> {
    let target = match theorem {
        1 => f1(r, delta)?.value,
        2 => f2(r, delta)?.value,
        t => return Err(GraphError::InvalidParameter(format!("unknown theorem {t}"))),
    };
    let roles = RolePartition::new();
    let kind = if theorem == 1 { ConstructionKind::BhStar } else { ConstructionKind::Eg };
    let mut report = build_report(kind, r, delta, g, &roles, &target, None);
    report.kind = "report".into();
    Ok(report)
}

/// Dispatches to the builder for the requested kind.
pub fn build(spec: &ConstructionSpec) -> Result<Built> {
    match spec.kind {
        ConstructionKind::BhStar => build_bh_star(spec),
        ConstructionKind::BhStarStar => build_bh_star_star(spec),
        ConstructionKind::Eg => build_eg(spec),
    }
}
