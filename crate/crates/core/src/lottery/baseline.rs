use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lottery::data::{LotteryInstance, Sex};
use crate::lottery::report::AssignmentReport;

/// Schools a student ranks by distance in the second stage.
pub const DISTANCE_RANKS: usize = 6;

fn slot(sex: Sex) -> usize {
    match sex {
        Sex::Male => 0,
        Sex::Female => 1,
    }
}

/// Two-stage lottery. Stage one fills 80% of each quota (rounded down) from
/// stated choices in a random order; stage two places everyone left at the
/// nearest of their six closest eligible schools with room, again in a
/// random order.
pub fn baseline(inst: &LotteryInstance, seed: u64) -> Result<AssignmentReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let schools = inst.schools();
    let students = inst.students();
    let mut room: Vec<[u32; 2]> = schools
        .iter()
        .map(|h| [h.male_quota * 4 / 5, h.female_quota * 4 / 5])
        .collect();
    let mut placement = vec![None; students.len()];

    let mut order: Vec<usize> = (0..students.len()).collect();
    order.shuffle(&mut rng);
    for &s in &order {
        let x = slot(students[s].sex);
        if let Some(&h) = students[s].choices.iter().find(|&&h| room[h][x] > 0) {
            room[h][x] -= 1;
            placement[s] = Some(h);
        }
    }

    let mut filled = vec![[0u32; 2]; schools.len()];
    for (s, h) in placement.iter().enumerate() {
        if let Some(h) = *h {
            filled[h][slot(students[s].sex)] += 1;
        }
    }
    for (h, school) in schools.iter().enumerate() {
        room[h] = [
            school.male_quota - filled[h][0],
            school.female_quota - filled[h][1],
        ];
    }

    let mut order: Vec<usize> = (0..students.len())
        .filter(|&s| placement[s].is_none())
        .collect();
    order.shuffle(&mut rng);
    for &s in &order {
        let x = slot(students[s].sex);
        let mut near: Vec<(u64, usize)> = (0..schools.len())
            .filter_map(|h| inst.distance(s, h).map(|d| (d, h)))
            .collect();
        near.sort_by(|x, y| {
            x.0.cmp(&y.0)
                .then_with(|| schools[x.1].id.cmp(&schools[y.1].id))
        });
        match near
            .iter()
            .take(DISTANCE_RANKS)
            .find(|&&(_, h)| room[h][x] > 0)
        {
            Some(&(_, h)) => {
                room[h][x] -= 1;
                placement[s] = Some(h);
            }
            None => {
                if let Some(&(_, h)) = near.iter().find(|&&(_, h)| room[h][x] > 0) {
                    return Err(Error::InfeasibleAssignment {
                        student: students[s].id.clone(),
                        school: schools[h].id.clone(),
                    });
                }
            }
        }
    }
    Ok(AssignmentReport::new(inst, "Baseline", placement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lottery::data::{School, Student};

    fn student(id: &str, choices: Vec<usize>, d: Vec<u64>) -> Student {
        Student {
            id: id.into(),
            sex: Sex::Male,
            choices,
            distances: d.into_iter().map(Some).collect(),
        }
    }

    #[test]
    fn stage_one_caps_at_eighty_percent() {
        let schools = vec![School::new("h1", 5, 0), School::new("h2", 5, 0)];
        let students = (0..6)
            .map(|i| student(&format!("s{i}"), vec![0], vec![50, 10]))
            .collect();
        let inst = LotteryInstance::new(schools, students).unwrap();
        let r = baseline(&inst, 7).unwrap();
        // four win the lottery for h1; the other two go to the nearer h2
        assert_eq!(r.choice_counts, [4, 0, 0, 2]);
        assert_eq!(r.total_distance, 4 * 50 + 2 * 10);
        assert_eq!(r, baseline(&inst, 7).unwrap());
    }

    #[test]
    fn infeasible_when_only_far_seats_remain() {
        let mut schools: Vec<School> = (0..7).map(|h| School::new(format!("h{h}"), 1, 0)).collect();
        schools[6].male_quota = 2;
        let students = (0..8)
            .map(|i| student(&format!("s{i}"), vec![0], vec![1, 2, 3, 4, 5, 6, 7]))
            .collect();
        let inst = LotteryInstance::new(schools, students).unwrap();
        assert!(matches!(
            baseline(&inst, 1),
            Err(Error::InfeasibleAssignment { .. })
        ));
    }
}
