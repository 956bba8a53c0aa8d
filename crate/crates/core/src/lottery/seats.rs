use crate::error::Result;
use crate::lottery::data::{LotteryInstance, Sex, OTHERS_RANK};
use crate::model::Instance;
use crate::weights::RankSystem;

/// Number of rank classes: three stated choices plus "others".
pub const RANKS: u32 = OTHERS_RANK;

/// One seat: a copy of a school reserved for one sex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seat {
    pub school: usize,
    pub sex: Sex,
}

/// Students on the A side, one B vertex per seat.
#[derive(Debug, Clone)]
pub struct SeatExpansion {
    pub seats: Vec<Seat>,
    pub ranks: RankSystem,
}

impl SeatExpansion {
    /// The rank-indicator instance (`r = 4`).
    pub fn instance(&self) -> Result<Instance> {
        self.ranks.indicator_instance(RANKS)
    }

    /// Rank indicators followed by `D - distance`.
    pub fn distance_instance(&self) -> Result<Instance> {
        self.ranks.indicator_distance_instance(RANKS)
    }
}

/// Seats are listed school by school, male seats first. A student is joined
/// to every seat of their sex at an eligible school.
pub fn expand_seats(inst: &LotteryInstance) -> Result<SeatExpansion> {
    let mut seats = Vec::new();
    for (h, school) in inst.schools().iter().enumerate() {
        for sex in [Sex::Male, Sex::Female] {
            seats.extend((0..school.quota(sex)).map(|_| Seat { school: h, sex }));
        }
    }
    let mut ranks =
        RankSystem::new(inst.students().len(), seats.len()).with_distances(inst.max_distance());
    for (s, st) in inst.students().iter().enumerate() {
        for (k, seat) in seats.iter().enumerate() {
            if seat.sex != st.sex {
                continue;
            }
            if let (Some(rank), Some(d)) =
                (inst.rank(s, seat.school), inst.distance(s, seat.school))
            {
                ranks.set_rank(s, k, rank)?;
                ranks.set_distance(s, k, d)?;
            }
        }
    }
    Ok(SeatExpansion { seats, ranks })
}
