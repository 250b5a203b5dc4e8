//! Ratio reports comparing an algorithm with the exact optimum over
//! generated instances.

use std::fmt::{self, Write};
use std::str::FromStr;
use std::time::Instant;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::{ratio, Certificate, CertificateKind, Ratio};
use crate::error::{Error, Result};
use crate::generate::{generate, Family, GeneratorSpec};
use crate::graph::Graph;
use crate::oracle::exact_opt_with_limit;
use crate::trace::Solution;
use crate::{approx3, approx4, approx_k};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Approx3,
    ApproxK,
    Approx4,
    Exact,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Approx3 => "approx3",
            Algo::ApproxK => "approxk",
            Algo::Approx4 => "approx4",
            Algo::Exact => "exact",
        }
    }

    /// Guaranteed worst-case ratio for `k` parts.
    pub fn claimed_ratio(self, k: usize) -> Ratio {
        match self {
            Algo::Approx3 => ratio(3, 2),
            Algo::ApproxK => ratio(k as u64, 2),
            Algo::Approx4 => ratio(24, 13),
            Algo::Exact => ratio(1, 1),
        }
    }

    /// Rejects part counts the algorithm is not defined for.
    pub fn check_k(self, k: usize) -> Result<()> {
        match (self, k) {
            (Algo::Approx3, 3) | (Algo::Approx4, 4) => Ok(()),
            (Algo::Approx3, _) => Err(Error::WrongK { algo: "approx3", k, expected: 3 }),
            (Algo::Approx4, _) => Err(Error::WrongK { algo: "approx4", k, expected: 4 }),
            (Algo::ApproxK, k) if k < 3 => Err(Error::KTooSmall { k, min: 3 }),
            (_, 0) => Err(Error::KTooSmall { k: 0, min: 1 }),
            _ => Ok(()),
        }
    }

    /// Runs the algorithm. `oracle_limit` caps the exact solver.
    pub fn run(self, g: &Graph, k: usize, oracle_limit: usize) -> Result<Solution> {
        self.check_k(k)?;
        match self {
            Algo::Approx3 => approx3(g),
            Algo::Approx4 => approx4(g),
            Algo::ApproxK => approx_k(g, k),
            Algo::Exact => {
                let (_, partition) = exact_opt_with_limit(g, k, oracle_limit)?;
                Ok(Solution {
                    partition,
                    certificate: Certificate::new(CertificateKind::OracleExact, ratio(1, 1)),
                    trace: Vec::new(),
                })
            }
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algo> {
        [Algo::Approx3, Algo::ApproxK, Algo::Approx4, Algo::Exact]
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// How instances of a report are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        return Mode::Parallel;
        #[cfg(not(feature = "parallel"))]
        Mode::Sequential
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    pub k: usize,
    pub algo: Algo,
    pub size: usize,
    pub opt: usize,
    #[serde(serialize_with = "crate::certificate::ser_ratio")]
    pub ratio: Ratio,
    pub certificate: String,
    pub ops: usize,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub k: usize,
    pub algo: Algo,
    pub rows: Vec<Row>,
    #[serde(serialize_with = "crate::certificate::ser_ratio")]
    pub claimed_ratio: Ratio,
}

pub const TSV_HEADER: &str = "family\tn\tseed\tk\talgo\tsize\topt\tratio\tcertificate\tops\tmillis";

impl Report {
    pub fn max_ratio(&self) -> Ratio {
        self.rows.iter().map(|r| r.ratio).max().unwrap_or(ratio(1, 1))
    }

    pub fn mean_ratio(&self) -> f64 {
        if self.rows.is_empty() {
            return 1.0;
        }
        self.rows.iter().map(|r| to_f64(r.ratio)).sum::<f64>() / self.rows.len() as f64
    }

    /// Rows whose ratio exceeds the claimed guarantee.
    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| r.ratio > self.claimed_ratio).count()
    }

    /// Tab-separated rows under a header, then `#`-prefixed summary lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from(TSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.4}\t{}\t{}\t{:.3}",
                r.family,
                r.n,
                r.seed,
                r.k,
                r.algo,
                r.size,
                r.opt,
                to_f64(r.ratio),
                r.certificate,
                r.ops,
                r.millis
            )
            .unwrap();
        }
        write!(out, "{}", self.summary()).unwrap();
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "# instances\t{}\n# max_ratio\t{} ({:.4})\n# mean_ratio\t{:.4}\n# claimed_ratio\t{}\n# violations\t{}\n",
            self.rows.len(),
            self.max_ratio(),
            to_f64(self.max_ratio()),
            self.mean_ratio(),
            self.claimed_ratio,
            self.violations()
        )
    }
}

pub fn to_f64(r: Ratio) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn row(spec: &GeneratorSpec, k: usize, algo: Algo, oracle_limit: usize) -> Result<Row> {
    let g = generate(spec)?;
    let start = Instant::now();
    let sol = algo.run(&g, k, oracle_limit)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let (opt, _) = exact_opt_with_limit(&g, k, oracle_limit)?;
    Ok(Row {
        family: spec.family,
        n: spec.n,
        seed: spec.seed,
        k,
        algo,
        size: sol.size(),
        opt,
        ratio: ratio(sol.size() as u64, opt as u64),
        certificate: sol.certificate.to_string(),
        ops: sol.ops(),
        millis,
    })
}

/// Runs `algo` on every spec and compares with the exact optimum. Rows come
/// back ordered by `(family, n, seed)` whatever the scheduling.
pub fn ratio_report(specs: &[GeneratorSpec], k: usize, algo: Algo, oracle_limit: usize, mode: Mode) -> Result<Report> {
    algo.check_k(k)?;
    let one = |s: &GeneratorSpec| row(s, k, algo, oracle_limit);
    let rows: Result<Vec<Row>> = match mode {
        Mode::Sequential => specs.iter().map(one).collect(),
        #[cfg(feature = "parallel")]
        Mode::Parallel => specs.par_iter().map(one).collect(),
    };
    let mut rows = rows?;
    rows.sort_by_key(|r| (r.family, r.n, r.seed));
    Ok(Report {
        k,
        algo,
        rows,
        claimed_ratio: algo.claimed_ratio(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::random_specs;
    use crate::oracle::ORACLE_LIMIT;

    #[test]
    fn random_approx3_within_bound() {
        let specs = random_specs(100, 10..=10, 0);
        let r = ratio_report(&specs, 3, Algo::Approx3, ORACLE_LIMIT, Mode::default()).unwrap();
        assert_eq!(r.rows.len(), 100);
        assert!(r.max_ratio() <= ratio(3, 2));
        assert_eq!(r.violations(), 0);
    }

    #[test]
    fn paths_approx4_within_bound() {
        let specs: Vec<_> = (6..=14).map(|n| GeneratorSpec::new(Family::Path, n, 0)).collect();
        let r = ratio_report(&specs, 4, Algo::Approx4, ORACLE_LIMIT, Mode::default()).unwrap();
        assert!(r.max_ratio() <= ratio(24, 13));
    }

    #[test]
    fn stars_are_exact() {
        let specs: Vec<_> = (5..=14).map(|n| GeneratorSpec::new(Family::Star, n, 0)).collect();
        let r = ratio_report(&specs, 3, Algo::Approx3, ORACLE_LIMIT, Mode::default()).unwrap();
        assert!(r.rows.iter().all(|row| row.ratio == ratio(1, 1)));
    }

    #[test]
    fn rows_are_ordered_and_modes_agree() {
        let mut specs = random_specs(30, 8..=11, 7);
        specs.reverse();
        specs.push(GeneratorSpec::new(Family::Cycle, 9, 0));
        let strip = |mut r: Report| {
            r.rows.iter_mut().for_each(|row| row.millis = 0.0);
            r
        };
        let seq = strip(ratio_report(&specs, 4, Algo::ApproxK, ORACLE_LIMIT, Mode::Sequential).unwrap());
        let keys: Vec<_> = seq.rows.iter().map(|r| (r.family, r.n, r.seed)).collect();
        assert!(keys.is_sorted());
        assert_eq!(seq, strip(ratio_report(&specs, 4, Algo::ApproxK, ORACLE_LIMIT, Mode::default()).unwrap()));
    }

    #[test]
    fn shape_mismatch() {
        let specs = random_specs(2, 8..=8, 0);
        assert!(ratio_report(&specs, 4, Algo::Approx3, ORACLE_LIMIT, Mode::default()).is_err());
        assert!(ratio_report(&specs, 2, Algo::ApproxK, ORACLE_LIMIT, Mode::default()).is_err());
    }

    #[test]
    fn too_large_for_oracle() {
        let specs = vec![GeneratorSpec::new(Family::Path, 15, 0)];
        let e = ratio_report(&specs, 3, Algo::Approx3, ORACLE_LIMIT, Mode::default()).unwrap_err();
        assert!(matches!(e, Error::InstanceTooLarge { n: 15, limit: 14 }));
    }

    #[test]
    fn tsv_layout() {
        let specs = random_specs(3, 8..=8, 0);
        let tsv = ratio_report(&specs, 3, Algo::Approx3, ORACLE_LIMIT, Mode::Sequential).unwrap().to_tsv();
        let lines: Vec<_> = tsv.lines().collect();
        assert_eq!(lines[0], TSV_HEADER);
        assert!(lines[1..4].iter().all(|l| l.split('\t').count() == 11));
        assert!(lines[4..].iter().all(|l| l.starts_with('#')));
    }
}
