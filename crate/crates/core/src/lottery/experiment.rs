use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lottery::baseline::baseline;
use crate::lottery::data::LotteryInstance;
use crate::lottery::rank::{run_mcrm, run_rm, McrmMode};
use crate::lottery::report::{format_km, AssignmentReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Algo {
    Baseline,
    Rm,
    Mcrm,
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "baseline" => Ok(Algo::Baseline),
            "rm" => Ok(Algo::Rm),
            "mcrm" => Ok(Algo::Mcrm),
            other => Err(Error::Config(format!("unknown algorithm `{other}`"))),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Baseline => "Baseline",
            Algo::Rm => "RM",
            Algo::Mcrm => "MCRM",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub algos: Vec<Algo>,
    pub seeds: Vec<u64>,
    pub mcrm_mode: McrmMode,
}

/// Reports for one lottery seed, in `algos` order.
#[derive(Debug, Clone)]
pub struct SeedRun {
    pub seed: u64,
    pub reports: Vec<AssignmentReport>,
}

/// Runs every algorithm for every seed. RM and MCRM do not use the seed and
/// are computed once; lottery seeds run in parallel.
pub fn run_experiment(inst: &LotteryInstance, config: &ExperimentConfig) -> Result<Vec<SeedRun>> {
    if config.algos.is_empty() || config.seeds.is_empty() {
        return Err(Error::Config(
            "need at least one algorithm and one seed".into(),
        ));
    }
    let rm = config
        .algos
        .contains(&Algo::Rm)
        .then(|| run_rm(inst))
        .transpose()?;
    let mcrm = config
        .algos
        .contains(&Algo::Mcrm)
        .then(|| run_mcrm(inst, config.mcrm_mode))
        .transpose()?;
    config
        .seeds
        .par_iter()
        .map(|&seed| {
            let reports = config
                .algos
                .iter()
                .map(|algo| match algo {
                    Algo::Baseline => baseline(inst, seed),
                    Algo::Rm => Ok(rm.clone().expect("computed above")),
                    Algo::Mcrm => Ok(mcrm.clone().expect("computed above")),
                })
                .collect::<Result<_>>()?;
            Ok(SeedRun { seed, reports })
        })
        .collect()
}

/// Mean choice counts and distance of one algorithm over seeds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub algo: String,
    pub runs: usize,
    pub mean_choice_counts: [f64; 4],
    pub mean_total_km: f64,
}

impl Summary {
    pub fn csv_header() -> &'static str {
        "algo,runs,choice1,choice2,choice3,others,total_km"
    }

    pub fn csv_row(&self) -> String {
        let [c1, c2, c3, c4] = self.mean_choice_counts;
        format!(
            "{},{},{c1:.2},{c2:.2},{c3:.2},{c4:.2},{:.2}",
            self.algo, self.runs, self.mean_total_km
        )
    }
}

pub fn summarize(runs: &[SeedRun]) -> Vec<Summary> {
    let Some(first) = runs.first() else {
        return Vec::new();
    };
    (0..first.reports.len())
        .map(|i| {
            let n = runs.len() as f64;
            let mut counts = [0.0; 4];
            let mut hundredths = 0u128;
            for run in runs {
                let r = &run.reports[i];
                for (c, &x) in counts.iter_mut().zip(&r.choice_counts) {
                    *c += x as f64 / n;
                }
                hundredths += r.total_distance as u128;
            }
            let mean = (hundredths as f64 / n).round() as u64;
            Summary {
                algo: first.reports[i].algo.clone(),
                runs: runs.len(),
                mean_choice_counts: counts,
                mean_total_km: format_km(mean).parse().expect("formatted decimal"),
            }
        })
        .collect()
}
