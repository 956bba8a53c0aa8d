use std::fmt::Write as _;

use serde::Serialize;
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::lottery::data::LotteryInstance;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub student: String,
    pub school: Option<String>,
}

/// Outcome of one allocation algorithm on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentReport {
    pub algo: String,
    /// Students placed at their first, second, third choice, and elsewhere.
    pub choice_counts: [u64; 4],
    /// Sum of assigned distances, in hundredths of a km.
    pub total_distance: u64,
    pub assignments: Vec<Assignment>,
    /// School index per student.
    pub placement: Vec<Option<usize>>,
    pub instance: u64,
}

impl AssignmentReport {
    /// Builds a report from a school index per student.
    pub fn new(
        inst: &LotteryInstance,
        algo: impl Into<String>,
        placement: Vec<Option<usize>>,
    ) -> Self {
        let mut choice_counts = [0u64; 4];
        let mut total_distance = 0;
        let mut assignments = Vec::with_capacity(placement.len());
        for (s, (st, &h)) in inst.students().iter().zip(&placement).enumerate() {
            if let Some(h) = h {
                let rank = inst.rank(s, h).expect("placement at an eligible school");
                choice_counts[rank as usize - 1] += 1;
                total_distance += inst.distance(s, h).expect("eligible pairs have distances");
            }
            assignments.push(Assignment {
                student: st.id.clone(),
                school: h.map(|h| inst.schools()[h].id.clone()),
            });
        }
        AssignmentReport {
            algo: algo.into(),
            choice_counts,
            total_distance,
            assignments,
            placement,
            instance: inst.fingerprint(),
        }
    }

    pub fn total_km(&self) -> String {
        format_km(self.total_distance)
    }

    pub fn assigned(&self) -> u64 {
        self.choice_counts.iter().sum()
    }
}

/// Hundredths of a km as a decimal with exactly two places.
pub fn format_km(hundredths: u64) -> String {
    format!("{}.{:02}", hundredths / 100, hundredths % 100)
}

#[derive(Serialize)]
struct JsonReport<'a> {
    algo: &'a str,
    choice_counts: [u64; 4],
    total_km: Box<RawValue>,
    assignments: &'a [Assignment],
}

/// JSON and CSV renderings of a set of reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub json: String,
    pub csv: String,
}

/// Renders reports that all belong to the same instance.
pub fn report(reports: &[AssignmentReport]) -> Result<Rendered> {
    if let Some(first) = reports.first() {
        if reports.iter().any(|r| r.instance != first.instance) {
            return Err(Error::MixedInstances);
        }
    }
    let json_reports = reports
        .iter()
        .map(|r| {
            Ok(JsonReport {
                algo: &r.algo,
                choice_counts: r.choice_counts,
                total_km: RawValue::from_string(r.total_km())?,
                assignments: &r.assignments,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let json = serde_json::to_string_pretty(&json_reports)?;
    let mut csv = String::from("algo,choice1,choice2,choice3,others,total_km\n");
    for r in reports {
        let [c1, c2, c3, c4] = r.choice_counts;
        writeln!(csv, "{},{c1},{c2},{c3},{c4},{}", r.algo, r.total_km())
            .expect("writing to a String");
    }
    Ok(Rendered { json, csv })
}

/// Fixed-width summary table: choice counts and total distance per algorithm.
pub fn render_table(reports: &[AssignmentReport]) -> String {
    let mut out = format!(
        "{:<10} {:>8} {:>8} {:>8} {:>8} {:>12}\n",
        "algo", "choice1", "choice2", "choice3", "others", "total_km"
    );
    for r in reports {
        let [c1, c2, c3, c4] = r.choice_counts;
        writeln!(
            out,
            "{:<10} {c1:>8} {c2:>8} {c3:>8} {c4:>8} {:>12}",
            r.algo,
            r.total_km()
        )
        .expect("writing to a String");
    }
    out
}
