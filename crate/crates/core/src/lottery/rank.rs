use crate::error::Result;
use crate::lottery::data::LotteryInstance;
use crate::lottery::report::AssignmentReport;
use crate::lottery::seats::{expand_seats, SeatExpansion, RANKS};
use crate::model::Matching;
use crate::reduce::{optimal_matching, optimal_matching_with, ConditionCheck};
use crate::weights::{mcrm_weights, rm_weights};

/// Weighting used for the minimum-cost rank-maximal run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum McrmMode {
    /// Mixed-radix weights over rank indicators plus `D - distance`.
    #[default]
    MixedRadix,
    /// `(D + 1) * 2^(r - rank) - D - distance`, checked exhaustively. The
    /// formula is evaluated with one unused rank past "others" so that the
    /// lowest rank stays positive.
    ClosedForm,
}

fn placement(exp: &SeatExpansion, students: usize, m: &Matching) -> Vec<Option<usize>> {
    let mut out = vec![None; students];
    for (s, seat) in m.pairs() {
        out[s] = Some(exp.seats[seat].school);
    }
    out
}

/// Rank-maximal allocation with weights `2^(r - rank + 1) - 1`.
pub fn run_rm(inst: &LotteryInstance) -> Result<AssignmentReport> {
    let exp = expand_seats(inst)?;
    let w = rm_weights(&exp.ranks, RANKS)?;
    let red = optimal_matching_with(&exp.instance()?, &w, ConditionCheck::Exhaustive)?;
    Ok(AssignmentReport::new(
        inst,
        "RM",
        placement(&exp, inst.students().len(), &red.matching),
    ))
}

/// Rank-maximal allocation of minimum total distance.
pub fn run_mcrm(inst: &LotteryInstance, mode: McrmMode) -> Result<AssignmentReport> {
    let exp = expand_seats(inst)?;
    let graph = exp.distance_instance()?;
    let red = match mode {
        McrmMode::MixedRadix => optimal_matching(&graph)?,
        McrmMode::ClosedForm => {
            let w = mcrm_weights(&exp.ranks, RANKS + 1)?;
            optimal_matching_with(&graph, &w, ConditionCheck::Exhaustive)?
        }
    };
    Ok(AssignmentReport::new(
        inst,
        "MCRM",
        placement(&exp, inst.students().len(), &red.matching),
    ))
}
