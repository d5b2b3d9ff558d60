//! Named verification suites: each re-checks one family of statements by
//! exhaustive enumeration over a bounded range and returns a deterministic
//! report.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    build_lattice, check_lattice_conjecture, check_qtr_theorem, cover_rotations,
    two_part_side, ConjectureStatus, Side,
};
use crate::partition::{
    enumerate_subpartitions, enumerate_triangular_partitions, two_part_slope_bounds, Partition,
};
use crate::poly::{a_lambda_polynomial, a_theta_polynomial, decompose_schur_2var, MultiPoly};
use crate::reference::{reference_expansion, reference_shapes};
use crate::simsym::{
    check_deficit_area_bijection, closed_form_a_lambda_2part, verify_simsym_characterization,
};
use crate::tableau::{
    deficit_cells, max_row_regular_index, row_regular_tableau, slope_similar_cells, statistics,
    top_down_tableau, triangular_tableau,
};
use crate::TriangularDyckPath;

/// The suite names accepted by [`run_suite`].
pub const SUITE_NAMES: [&str; 8] = [
    "triangularity",
    "deficit-equals-nonsim",
    "schur-positivity-qt",
    "2part-closed-form",
    "2part-simsym",
    "2part-qtr",
    "conjecture-lattice",
    "structure-2part",
];

/// Size limits for a suite run. `max_size` overrides the suite's default
/// range (its meaning is suite-specific: largest `m`, `|lambda|`, or `m+n`);
/// `slow` additionally enables the expensive opt-in cases.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteBounds {
    pub max_size: Option<u32>,
    pub slow: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Pass,
    Fail,
    NotApplicable,
    /// Mismatch against a reference value that is itself conjectural.
    ReferenceUncertain,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub input: String,
    pub status: CaseStatus,
    pub details: String,
}

/// Outcome of one suite run. Serialization skips the wall time so reports
/// are byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub reference_uncertain: usize,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    fn assemble(suite: &str, mut cases: Vec<CaseResult>, start: Instant) -> Self {
        cases.sort_by(|a, b| a.input.cmp(&b.input));
        let count = |s: CaseStatus| cases.iter().filter(|c| c.status == s).count();
        VerificationReport {
            suite: suite.to_string(),
            passed: count(CaseStatus::Pass),
            failed: count(CaseStatus::Fail),
            not_applicable: count(CaseStatus::NotApplicable),
            reference_uncertain: count(CaseStatus::ReferenceUncertain),
            cases,
            wall_time: start.elapsed(),
        }
    }

    /// True when no case failed hard.
    pub fn all_ok(&self) -> bool {
        self.failed == 0
    }
}

/// Runs a named suite within the given bounds.
pub fn run_suite(name: &str, bounds: &SuiteBounds) -> Result<VerificationReport> {
    let start = Instant::now();
    let cases = match name {
        "triangularity" => triangularity_cases(bounds),
        "deficit-equals-nonsim" => deficit_nonsim_cases(bounds)?,
        "schur-positivity-qt" => schur_positivity_cases(bounds)?,
        "2part-closed-form" => closed_form_cases(bounds)?,
        "2part-simsym" => simsym_cases(bounds)?,
        "2part-qtr" => qtr_cases(bounds)?,
        "conjecture-lattice" => conjecture_cases(bounds)?,
        "structure-2part" => structure_cases(bounds)?,
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    Ok(VerificationReport::assemble(name, cases, start))
}

fn case(input: String, pass: bool, details: String) -> CaseResult {
    CaseResult {
        input,
        status: if pass { CaseStatus::Pass } else { CaseStatus::Fail },
        details,
    }
}

fn two_part(m: u32, n: u32) -> Partition {
    Partition::new(if n == 0 { vec![m] } else { vec![m, n] }).expect("m >= n")
}

/// Triangular 2-partitions `(m,n)` with `m` up to the bound; `with_single`
/// includes the single-row shapes `n = 0`.
fn triangular_two_parts(max_m: u32, with_single: bool) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in u32::from(!with_single)..=m.div_ceil(2) {
            out.push((m, n));
        }
    }
    out
}

fn triangularity_cases(bounds: &SuiteBounds) -> Vec<CaseResult> {
    let max_m = bounds.max_size.unwrap_or(30);
    let mut cases = Vec::new();
    for m in 1..=max_m {
        let mut pass = true;
        let mut details = String::new();
        for n in 0..=m {
            let shape = two_part(m, n);
            let expected = n <= m.div_ceil(2);
            if shape.is_triangular() != expected {
                pass = false;
                details = format!("triangularity of ({m},{n}) disagrees with n <= ceil(m/2)");
                break;
            }
            if expected && n >= 1 && shape.slope_bounds().unwrap() != two_part_slope_bounds(m, n)
            {
                pass = false;
                details = format!("slope bounds of ({m},{n}) disagree with the closed form");
                break;
            }
        }
        if pass {
            details = "triangularity criterion and slope bounds agree".into();
        }
        cases.push(case(format!("m={m:02}"), pass, details));
    }
    cases
}

fn deficit_nonsim_cases(bounds: &SuiteBounds) -> Result<Vec<CaseResult>> {
    let max_size = bounds.max_size.unwrap_or(12);
    let mut cases = Vec::new();
    for size in 1..=max_size as usize {
        for shape in enumerate_triangular_partitions(size) {
            let theta = triangular_tableau(&shape)?;
            let mut pass = true;
            let mut details = String::new();
            for mu in enumerate_subpartitions(&shape) {
                let path = TriangularDyckPath::new(shape.clone(), mu.clone())?;
                let similar = slope_similar_cells(&path);
                let mut non_similar: Vec<_> =
                    mu.cells().filter(|c| !similar.contains(c)).collect();
                non_similar.sort_unstable();
                if deficit_cells(&theta, &mu)? != non_similar {
                    pass = false;
                    details = format!("deficit cells differ from non-similar cells at mu={mu}");
                    break;
                }
                let s = statistics(&theta, &mu)?;
                if s.area + s.sim + s.deficit != shape.size() {
                    pass = false;
                    details = format!("statistics do not sum to |lambda| at mu={mu}");
                    break;
                }
            }
            if pass {
                details = "deficit cells equal non-similar cells for every subpartition".into();
            }
            cases.push(case(format!("lambda={shape}"), pass, details));
        }
    }
    Ok(cases)
}

fn schur_positivity_cases(bounds: &SuiteBounds) -> Result<Vec<CaseResult>> {
    let max_size = bounds.max_size.unwrap_or(10);
    let mut cases = Vec::new();
    for size in 1..=max_size as usize {
        for shape in enumerate_triangular_partitions(size) {
            let poly = a_lambda_polynomial(&shape)?;
            if !poly.is_qt_symmetric() {
                cases.push(case(
                    format!("lambda={shape}"),
                    false,
                    "polynomial is not symmetric in q,t".into(),
                ));
                continue;
            }
            let expansion = decompose_schur_2var(&poly)?;
            cases.push(case(
                format!("lambda={shape}"),
                expansion.is_positive(),
                format!("expansion {expansion}"),
            ));
        }
    }
    Ok(cases)
}

fn closed_form_cases(bounds: &SuiteBounds) -> Result<Vec<CaseResult>> {
    let max_m = bounds.max_size.unwrap_or(16);
    let mut cases = Vec::new();
    for (m, n) in triangular_two_parts(max_m, false) {
        let expected = closed_form_a_lambda_2part(m, n)?;
        let mut pass = true;
        let mut details = String::new();
        for i in 1..=max_row_regular_index(m, n) {
            let theta = row_regular_tableau(m, n, i)?;
            if decompose_schur_2var(&a_theta_polynomial(&theta)?)? != expected {
                pass = false;
                details = format!("row-regular index {i} misses the closed form");
                break;
            }
            if !check_deficit_area_bijection(m, n, i)? {
                pass = false;
                details = format!("(deficit, area) bijection fails at index {i}");
                break;
            }
        }
        if pass {
            details = format!("all row-regular tableaux expand as {expected}");
        }
        cases.push(case(format!("shape={m:02},{n:02}"), pass, details));
    }
    Ok(cases)
}

fn simsym_cases(bounds: &SuiteBounds) -> Result<Vec<CaseResult>> {
    let max_m = bounds.max_size.unwrap_or(12);
    let mut cases = Vec::new();
    for (m, n) in triangular_two_parts(max_m, false) {
        // The brute force enumerates every standard tableau of (m,n); wide
        // shapes with large n are the costly ones and are opt-in.
        if !bounds.slow && bounds.max_size.is_none() && m + n > 13 {
            continue;
        }
        let report = verify_simsym_characterization(m, n)?;
        cases.push(case(
            format!("shape={m:02},{n:02}"),
            report.pass,
            format!("{} sim-sym tableaux", report.witnesses.len()),
        ));
    }
    Ok(cases)
}

fn qtr_cases(bounds: &SuiteBounds) -> Result<Vec<CaseResult>> {
    let max_total = bounds.max_size.unwrap_or(20);
    let mut cases = Vec::new();
    for (m, n) in triangular_two_parts(max_total, true) {
        if m + n > max_total {
            continue;
        }
        let report = check_qtr_theorem(m, n)?;
        cases.push(case(
            format!("shape={m:02},{n:02}"),
            report.pass,
            "interval polynomial vs Schur sum at r=1".into(),
        ));
    }
    Ok(cases)
}

fn conjecture_case(shape: &Partition) -> Result<CaseResult> {
    let report = check_lattice_conjecture(shape)?;
    let status = match report.status {
        ConjectureStatus::Pass => CaseStatus::Pass,
        ConjectureStatus::Fail => CaseStatus::Fail,
        ConjectureStatus::NotApplicable => CaseStatus::NotApplicable,
        ConjectureStatus::ReferenceUncertain => CaseStatus::ReferenceUncertain,
    };
    Ok(CaseResult {
        input: format!("lambda={shape}"),
        status,
        details: report.details,
    })
}

fn conjecture_cases(bounds: &SuiteBounds) -> Result<Vec<CaseResult>> {
    let sweep_size = bounds.max_size.unwrap_or(10);
    let reference_cap = if bounds.slow { 21 } else { 15 };
    let mut seen = BTreeSet::new();
    let mut cases = Vec::new();
    for size in 1..=sweep_size as usize {
        for shape in enumerate_triangular_partitions(size) {
            seen.insert(shape.clone());
            cases.push(conjecture_case(&shape)?);
        }
    }
    for shape in reference_shapes() {
        if shape.size() <= reference_cap && seen.insert(shape.clone()) {
            cases.push(conjecture_case(shape)?);
        }
    }
    if bounds.slow {
        let big = Partition::new(vec![8, 6, 4, 2, 1])?;
        if seen.insert(big.clone()) {
            cases.push(conjecture_case(&big)?);
        }
    }
    // Cross-check: the 2-variable polynomial is the r-degree-0 slice of the
    // reference function, i.e. its terms with at most two rows.
    for shape in reference_shapes() {
        if shape.size() > reference_cap {
            continue;
        }
        let entry = reference_expansion(shape).expect("listed shape");
        let truncated: MultiPoly = entry
            .expansion
            .iter()
            .filter(|(nu, _)| nu.len() <= 2)
            .try_fold(MultiPoly::zero(2), |acc, (nu, coef)| {
                let mut acc = acc;
                acc.add_scaled(&crate::poly::schur_polynomial(nu, 2), coef)?;
                Ok::<_, Error>(acc)
            })?;
        let pass = truncated == a_lambda_polynomial(shape)?;
        let status = match (pass, entry.conjectural) {
            (true, _) => CaseStatus::Pass,
            (false, true) => CaseStatus::ReferenceUncertain,
            (false, false) => CaseStatus::Fail,
        };
        cases.push(CaseResult {
            input: format!("lambda={shape} 2var-slice"),
            status,
            details: "reference terms with <= 2 rows vs A_lambda(q,t)".into(),
        });
    }
    Ok(cases)
}

fn structure_cases(bounds: &SuiteBounds) -> Result<Vec<CaseResult>> {
    let max_m = bounds.max_size.unwrap_or(12);
    let mut cases = Vec::new();
    for (m, n) in triangular_two_parts(max_m, true) {
        let detail = structure_case(m, n)?;
        cases.push(case(
            format!("shape={m:02},{n:02}"),
            detail.is_none(),
            detail.unwrap_or_else(|| "rotations, sides, distances, E(s), f_mu agree".into()),
        ));
    }
    Ok(cases)
}

/// Checks every structural statement about the 2-partition lattice on one
/// shape; returns the first discrepancy, if any.
fn structure_case(m: u32, n: u32) -> Result<Option<String>> {
    let lam = two_part(m, n);
    let lattice = build_lattice(&lam)?;
    let theta = top_down_tableau(&lam)?;
    let nodes = lattice.nodes().to_vec();
    let dist: Vec<Vec<Option<u32>>> =
        (0..nodes.len()).map(|s| lattice.distances_from(s)).collect();
    let coords = |mu: &Partition| (m - mu.part(0), n - mu.part(1));
    let sims: Vec<u32> = nodes
        .iter()
        .map(|mu| Ok(statistics(&theta, mu)?.sim as u32))
        .collect::<Result<_>>()?;

    // Closed-form rotations and polygon chains.
    for mu in &nodes {
        let (a, b) = (mu.part(0), mu.part(1));
        let (i, j) = coords(mu);
        let mut expected = Vec::new();
        if a > b {
            expected.push(Partition::new(vec![a - 1, b])?);
        }
        if b > 0 {
            let upper = if i <= j {
                Partition::new(vec![a, b - 1])?
            } else {
                Partition::new(vec![a - 1, b - 1])?
            };
            if !expected.contains(&upper) {
                expected.push(upper);
            }
        }
        if cover_rotations(&lam, mu)? != expected {
            return Ok(Some(format!("rotation closed form fails at mu={mu}")));
        }
        if a > b && b > 0 {
            let node = |x: u32, y: u32| Partition::new(vec![x, y]).expect("chain shape");
            let chains = match i.cmp(&j) {
                std::cmp::Ordering::Equal => [
                    vec![mu.clone(), node(a, b - 1), node(a - 1, b - 1), node(a - 2, b - 1)],
                    vec![mu.clone(), node(a - 1, b), node(a - 2, b - 1)],
                ],
                std::cmp::Ordering::Less => [
                    vec![mu.clone(), node(a, b - 1), node(a - 1, b - 1)],
                    vec![mu.clone(), node(a - 1, b), node(a - 1, b - 1)],
                ],
                std::cmp::Ordering::Greater => [
                    vec![mu.clone(), node(a - 1, b - 1), node(a - 2, b - 1)],
                    vec![mu.clone(), node(a - 1, b), node(a - 2, b - 1)],
                ],
            };
            for chain in &chains {
                for step in chain.windows(2) {
                    if !cover_rotations(&lam, &step[0])?.contains(&step[1]) {
                        return Ok(Some(format!(
                            "polygon chain broken at mu={mu}: {} -> {}",
                            step[0], step[1]
                        )));
                    }
                }
            }
        }
    }

    // Side-dependent comparability and distance.
    for (s, tau) in nodes.iter().enumerate() {
        let side = two_part_side(&lam, tau)?;
        for (u, mu) in nodes.iter().enumerate() {
            let contained = tau.contains(mu);
            let (expected_comp, expected_dist) = if !contained {
                (false, 0)
            } else {
                match side {
                    Side::Right => (
                        tau.part(0) - mu.part(0) >= tau.part(1) - mu.part(1),
                        tau.part(0) - mu.part(0),
                    ),
                    Side::Left | Side::Center => (
                        true,
                        (tau.part(0) - mu.part(0)) + (tau.part(1) - mu.part(1)),
                    ),
                }
            };
            match dist[s][u] {
                Some(d) => {
                    if !expected_comp {
                        return Ok(Some(format!(
                            "unexpected comparability {tau} to {mu}"
                        )));
                    }
                    if d != expected_dist {
                        return Ok(Some(format!(
                            "distance {tau} to {mu}: DP {d}, formula {expected_dist}"
                        )));
                    }
                    if side == Side::Right && two_part_side(&lam, mu)? != Side::Right {
                        return Ok(Some(format!(
                            "{mu} above right-side {tau} is not on the right"
                        )));
                    }
                }
                None => {
                    if expected_comp {
                        return Ok(Some(format!(
                            "missing comparability {tau} to {mu}"
                        )));
                    }
                }
            }
        }
    }

    // Sim closed form and E(s) level sets.
    let mut expected_fibers: BTreeMap<u32, BTreeSet<Partition>> = BTreeMap::new();
    for s in 0..=m - n {
        let fiber = expected_fibers.entry(s).or_default();
        for k in 0..=s.min(n) {
            fiber.insert(Partition::new(vec![s, k])?);
        }
    }
    for i in 0..n {
        let fiber = expected_fibers.entry(m + n - 2 * i).or_default();
        for j in 0..=i {
            fiber.insert(Partition::new(vec![m - i, n - j])?);
        }
    }
    for j in 1..=n {
        let fiber = expected_fibers.entry(m + n - 2 * j + 1).or_default();
        for i in 0..j {
            fiber.insert(Partition::new(vec![m - i, n - j])?);
        }
    }
    let mut fibers: BTreeMap<u32, BTreeSet<Partition>> = BTreeMap::new();
    for (u, mu) in nodes.iter().enumerate() {
        let (i, j) = coords(mu);
        let expected_sim = if i < j {
            m + n - 2 * j + 1
        } else if i < n {
            m + n - 2 * i
        } else {
            m - i
        };
        if sims[u] != expected_sim {
            return Ok(Some(format!(
                "sim closed form at mu={mu}: statistics {} vs formula {expected_sim}",
                sims[u]
            )));
        }
        fibers.entry(sims[u]).or_default().insert(mu.clone());
    }
    if fibers != expected_fibers {
        return Ok(Some("E(s) level sets differ from the case analysis".into()));
    }

    // f_mu: distance generating function from the boundary ("red line")
    // elements tau with tau_1 = m or tau_2 = n.
    for (u, mu) in nodes.iter().enumerate() {
        let mut actual = MultiPoly::zero(2);
        for (s, tau) in nodes.iter().enumerate() {
            if (tau.part(0) == m || tau.part(1) == n) && dist[s][u].is_some() {
                actual.add_term(vec![0, dist[s][u].unwrap()], 1)?;
            }
        }
        let (i, j) = coords(mu);
        // Left/center shapes start at d = i, right shapes at d = j.
        let lo = if i <= j { i } else { j };
        let mut expected = MultiPoly::zero(2);
        for d in lo..=i + j {
            expected.add_term(vec![0, d], 1)?;
        }
        if actual != expected {
            return Ok(Some(format!("f_mu mismatch at mu={mu}")));
        }
    }
    Ok(None)
}
