//! School-choice lottery: CSV input, seat expansion, the two-stage lottery
//! baseline, rank-maximal runs and reporting.

mod baseline;
mod data;
mod experiment;
mod rank;
mod report;
mod seats;
mod synth;

pub use baseline::{baseline, DISTANCE_RANKS};
pub use data::{
    load, load_from_readers, parse_schools, parse_students, LotteryInstance, School, Sex, Student,
    MAX_CHOICES, OTHERS_RANK,
};
pub use experiment::{run_experiment, summarize, Algo, ExperimentConfig, SeedRun, Summary};
pub use rank::{run_mcrm, run_rm, McrmMode};
pub use report::{format_km, render_table, report, Assignment, AssignmentReport, Rendered};
pub use seats::{expand_seats, Seat, SeatExpansion, RANKS};
pub use synth::{default_schools, generate, SynthConfig};
