//! Registry of identities checked numerically, each pairing two independent
//! evaluations of the same quantity, and a parallel runner producing
//! [`IdentityReport`]s.

mod registry;

pub use registry::registry;

use crate::error::{Error, Result};
use crate::numerics::EvalOptions;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// Where a check is evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum Sampling {
    /// Once, with no sample point.
    Constant,
    /// Every point of the [`GridSpec`].
    Grid,
    /// Grid points at least [`EDGE_MARGIN`] away from 0 and 1.
    InteriorGrid,
    /// A fixed list of points owned by the check (orders, arguments outside
    /// the grid, ...).
    Points(Vec<f64>),
    /// `count` pairs `(s, x)` drawn from `opts.seed`, uniform on the given
    /// ranges, with `s` kept out of `avoid`.
    SeededPairs {
        count: usize,
        s: (f64, f64),
        x: (f64, f64),
        avoid: (f64, f64),
    },
}

/// Grid points closer than this to 0 or 1 are skipped by
/// [`Sampling::InteriorGrid`].
pub const EDGE_MARGIN: f64 = 0.05;

/// How fast the slower side of a check converges; bounds the tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConvergenceClass {
    /// Closed forms, absolutely convergent sums and quadrature.
    Converged,
    /// Sums whose tails are added from asymptotic expansions.
    TailCorrected,
    /// Tail-averaged conditionally convergent sums, fixed truncations and
    /// finite-step limits.
    Approximate,
}

impl ConvergenceClass {
    /// Largest tolerance a check of this class may declare.
    pub fn max_tolerance(self) -> f64 {
        match self {
            ConvergenceClass::Converged => 1e-8,
            ConvergenceClass::TailCorrected => 1e-6,
            ConvergenceClass::Approximate => 1e-3,
        }
    }
}

/// One evaluation point: the grid or list point, and for seeded pairs the
/// exponent drawn with it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub point: Option<f64>,
    pub param: Option<f64>,
}

/// One side of an identity.
pub type Side = Arc<dyn Fn(&Sample, &EvalOptions) -> Result<f64> + Send + Sync>;

/// A named identity with both sides and its acceptance tolerance.
#[derive(Clone)]
pub struct IdentityCheck {
    pub id: String,
    pub description: &'static str,
    /// Classical name of the result.
    pub paper_ref: &'static str,
    pub tolerance: f64,
    pub class: ConvergenceClass,
    pub sampling: Sampling,
    /// True when one side is a quadrature.
    pub integral: bool,
    pub lhs: Side,
    pub rhs: Side,
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("id", &self.id)
            .field("description", &self.description)
            .field("tolerance", &self.tolerance)
            .field("class", &self.class)
            .field("sampling", &self.sampling)
            .finish_non_exhaustive()
    }
}

/// Outcome of one check at one point. Non-finite numbers serialize as `null`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub grid_point: Option<f64>,
    #[serde(deserialize_with = "nullable_f64")]
    pub lhs: f64,
    #[serde(deserialize_with = "nullable_f64")]
    pub rhs: f64,
    #[serde(deserialize_with = "nullable_f64")]
    pub abs_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub paper_ref: String,
}

fn nullable_f64<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

/// Sample points on `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    points: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        let mut points = vec![0.01];
        points.extend((1..=9).map(|k| k as f64 / 10.0));
        points.push(0.99);
        Self { points }
    }
}

impl GridSpec {
    /// A grid from explicit points, which must lie strictly inside `(0, 1)`.
    /// Points are sorted and deduplicated.
    pub fn new(mut points: Vec<f64>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| !(**p > 0.0 && **p < 1.0)) {
            return Err(Error::Options(format!("grid point {p} outside (0, 1)")));
        }
        points.sort_by(f64::total_cmp);
        points.dedup();
        Ok(Self { points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }
}

/// Which checks to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    All,
    /// Ids or families. `EQ-3` selects every `EQ-3.*` entry and `EQ-6.2`
    /// selects `EQ-6.2` together with its `EQ-6.2@...` variants.
    Ids(Vec<String>),
}

fn matches(id: &str, key: &str) -> bool {
    id == key
        || id
            .strip_prefix(key)
            .is_some_and(|rest| rest.starts_with('.') || rest.starts_with('@'))
}

/// Registry entries picked by `selection`, in registry order.
pub fn select(selection: &Selection) -> Result<Vec<IdentityCheck>> {
    let all = registry();
    let keys = match selection {
        Selection::All => return Ok(all),
        Selection::Ids(keys) => keys,
    };
    for key in keys {
        if !all.iter().any(|c| matches(&c.id, key)) {
            let valid: Vec<&str> = all.iter().map(|c| c.id.as_str()).collect();
            return Err(Error::UnknownIdentity {
                id: key.clone(),
                valid: valid.join(", "),
            });
        }
    }
    Ok(all
        .into_iter()
        .filter(|c| keys.iter().any(|k| matches(&c.id, k)))
        .collect())
}

fn samples(check: &IdentityCheck, grid: &GridSpec, opts: &EvalOptions) -> Vec<Sample> {
    let at = |p: f64| Sample {
        point: Some(p),
        param: None,
    };
    match &check.sampling {
        Sampling::Constant => vec![Sample {
            point: None,
            param: None,
        }],
        Sampling::Grid => grid.points().iter().copied().map(at).collect(),
        Sampling::InteriorGrid => grid
            .points()
            .iter()
            .copied()
            .filter(|p| *p >= EDGE_MARGIN && *p <= 1.0 - EDGE_MARGIN)
            .map(at)
            .collect(),
        Sampling::Points(points) => points.iter().copied().map(at).collect(),
        Sampling::SeededPairs { count, s, x, avoid } => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut out = Vec::with_capacity(*count);
            while out.len() < *count {
                let sv = rng.gen_range(s.0..s.1);
                let xv = rng.gen_range(x.0..x.1);
                if sv > avoid.0 && sv < avoid.1 {
                    continue;
                }
                out.push(Sample {
                    point: Some(xv),
                    param: Some(sv),
                });
            }
            out.sort_by(|a, b| a.point.unwrap().total_cmp(&b.point.unwrap()));
            out
        }
    }
}

/// Evaluate one check at one sample. Evaluation errors produce a failing
/// report with non-finite sides.
pub fn evaluate(check: &IdentityCheck, sample: &Sample, opts: &EvalOptions) -> IdentityReport {
    let lhs = (check.lhs)(sample, opts).unwrap_or(f64::NAN);
    let rhs = (check.rhs)(sample, opts).unwrap_or(f64::NAN);
    let abs_residual = (lhs - rhs).abs();
    IdentityReport {
        id: check.id.clone(),
        grid_point: sample.point,
        lhs,
        rhs,
        abs_residual,
        tolerance: check.tolerance,
        pass: abs_residual <= check.tolerance,
        paper_ref: check.paper_ref.to_string(),
    }
}

/// Run the selected checks over `grid`. Reports come back in registry order,
/// then by sample point, whatever the thread scheduling.
pub fn run_suite(
    selection: &Selection,
    grid: &GridSpec,
    opts: &EvalOptions,
) -> Result<Vec<IdentityReport>> {
    opts.validate()?;
    let checks = select(selection)?;
    let tasks: Vec<(&IdentityCheck, Sample)> = checks
        .iter()
        .flat_map(|c| samples(c, grid, opts).into_iter().map(move |s| (c, s)))
        .collect();
    Ok(tasks
        .par_iter()
        .map(|(c, s)| evaluate(c, s, opts))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn registry_shape() {
        let r = registry();
        assert!(r.len() >= 38);
        let ids: HashSet<&str> = r.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), r.len(), "duplicate ids");
        for c in &r {
            assert!((1e-12..=1e-3).contains(&c.tolerance), "{}", c.id);
            assert!(
                c.tolerance <= c.class.max_tolerance(),
                "{} exceeds its class bound",
                c.id
            );
            assert!(c.id.starts_with("EQ-"));
            assert!(!c.paper_ref.is_empty() && !c.description.is_empty());
        }
        let required = [
            "EQ-2.9",
            "EQ-2.16",
            "EQ-2.17",
            "EQ-2.18",
            "EQ-2.19",
            "EQ-2.20",
            "EQ-3.1",
            "EQ-3.3",
            "EQ-3.4",
            "EQ-3.5",
            "EQ-3.6",
            "EQ-3.7",
            "EQ-3.8",
            "EQ-3.9",
            "EQ-3.10",
            "EQ-3.11",
            "EQ-3.12",
            "EQ-3.13",
            "EQ-3.14",
            "EQ-3.15",
            "EQ-3.16",
            "EQ-3.17",
            "EQ-3.18",
            "EQ-3.19",
            "EQ-4.3@t=1",
            "EQ-4.5",
            "EQ-4.6",
            "EQ-4.7",
            "EQ-4.8",
            "EQ-5.2",
            "EQ-5.5",
            "EQ-5.7",
            "EQ-5.8",
            "EQ-5.9",
            "EQ-5.11",
            "EQ-6.2",
            "EQ-6.11",
            "EQ-6.12",
            "EQ-6.14",
            "EQ-6.15",
            "EQ-6.16",
            "EQ-6.17",
            "EQ-6.19",
            "EQ-7.1",
            "EQ-7.9",
            "EQ-7.10",
            "EQ-7.11",
            "EQ-7.12",
            "EQ-PQ",
            "EQ-8.1",
            "EQ-8.2",
            "EQ-8.3",
            "EQ-8.4",
            "EQ-8.6",
            "EQ-8.7",
        ];
        for key in required {
            assert!(r.iter().any(|c| matches(&c.id, key)), "missing {key}");
        }
    }

    #[test]
    fn selection_rules() {
        assert!(matches("EQ-6.2@s=-1", "EQ-6.2"));
        assert!(matches("EQ-3.5", "EQ-3"));
        assert!(!matches("EQ-3.15", "EQ-3.1"));
        assert!(!matches("EQ-2.16", "EQ-2.1"));
        let s = select(&Selection::Ids(vec!["EQ-3.5".into(), "EQ-3.5".into()])).unwrap();
        assert_eq!(s.len(), 1);
        match select(&Selection::Ids(vec!["NO-SUCH".into()])) {
            Err(Error::UnknownIdentity { id, valid }) => {
                assert_eq!(id, "NO-SUCH");
                assert!(valid.contains("EQ-3.5"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_and_single_selection() {
        let o = EvalOptions::default();
        let g = GridSpec::default();
        assert!(run_suite(&Selection::Ids(vec![]), &g, &o)
            .unwrap()
            .is_empty());
        let r = run_suite(&Selection::Ids(vec!["EQ-3.5".into()]), &g, &o).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].pass);
        assert_eq!(r[0].grid_point, None);
        assert!((r[0].lhs + std::f64::consts::LN_2).abs() <= 1e-10);
    }

    #[test]
    fn grid_validation() {
        assert_eq!(GridSpec::default().points().len(), 11);
        assert!(GridSpec::new(vec![0.0, 0.5]).is_err());
        assert!(GridSpec::new(vec![0.5, 1.0]).is_err());
        assert_eq!(
            GridSpec::new(vec![0.7, 0.2, 0.7]).unwrap().points(),
            &[0.2, 0.7]
        );
    }

    #[test]
    fn seeded_pairs_follow_the_seed() {
        let c = registry().into_iter().find(|c| c.id == "EQ-6.12").unwrap();
        let g = GridSpec::default();
        let a = samples(&c, &g, &EvalOptions::default());
        let b = samples(&c, &g, &EvalOptions::default());
        let d = samples(&c, &g, &EvalOptions::default().with_seed(7));
        assert_eq!(a.len(), 20);
        assert_eq!(a, b);
        assert_ne!(a, d);
    }

    #[test]
    fn reports_are_deterministic_and_ordered() {
        let o = EvalOptions::default();
        let g = GridSpec::default();
        let sel = Selection::Ids(vec!["EQ-5".into(), "EQ-2.16".into()]);
        let a = run_suite(&sel, &g, &o).unwrap();
        let b = run_suite(&sel, &g, &o).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a[0].id, "EQ-2.16");
        let pts: Vec<f64> = a
            .iter()
            .filter(|r| r.id == "EQ-2.16")
            .map(|r| r.grid_point.unwrap())
            .collect();
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn failed_evaluation_serializes_as_null() {
        let r = IdentityReport {
            id: "EQ-X".into(),
            grid_point: None,
            lhs: f64::NAN,
            rhs: 1.0,
            abs_residual: f64::NAN,
            tolerance: 1e-8,
            pass: false,
            paper_ref: "x".into(),
        };
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"lhs\":null"));
        let back: IdentityReport = serde_json::from_str(&s).unwrap();
        assert!(back.lhs.is_nan());
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
