use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lottery::data::{LotteryInstance, School, Sex, Student, MAX_CHOICES};

/// Nine schools: three boys', three girls', three mixed; 715 male and 699
/// female seats.
pub fn default_schools() -> Vec<School> {
    [
        ("h1", 154, 0),
        ("h2", 161, 0),
        ("h3", 172, 0),
        ("h4", 0, 186),
        ("h5", 0, 170),
        ("h6", 0, 172),
        ("h7", 80, 73),
        ("h8", 77, 46),
        ("h9", 71, 52),
    ]
    .into_iter()
    .map(|(id, m, f)| School::new(id, m, f))
    .collect()
}

/// Parameters of the synthetic city. Students and schools are placed
/// uniformly in a square; distances are Euclidean.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SynthConfig {
    pub schools: Vec<School>,
    pub male_students: usize,
    pub female_students: usize,
    /// Side of the square, km.
    pub area_km: f64,
    /// Probability that a student's list is drawn nearest-first.
    pub distance_bias: f64,
    /// Length scale of the nearest-first draw, km.
    pub distance_scale_km: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            schools: default_schools(),
            male_students: 715,
            female_students: 699,
            area_km: 8.0,
            distance_bias: 0.8,
            distance_scale_km: 1.5,
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if self.schools.is_empty() {
            return bad("no schools".into());
        }
        if !(self.area_km.is_finite() && self.area_km > 0.0) {
            return bad(format!("area_km must be positive, got {}", self.area_km));
        }
        if !(0.0..=1.0).contains(&self.distance_bias) {
            return bad(format!(
                "distance_bias must lie in [0, 1], got {}",
                self.distance_bias
            ));
        }
        if !(self.distance_scale_km.is_finite() && self.distance_scale_km > 0.0) {
            return bad(format!(
                "distance_scale_km must be positive, got {}",
                self.distance_scale_km
            ));
        }
        for (sex, count) in [
            (Sex::Male, self.male_students),
            (Sex::Female, self.female_students),
        ] {
            if count > 0 && self.schools.iter().all(|h| h.quota(sex) == 0) {
                return bad(format!("no school admits sex {sex}"));
            }
        }
        Ok(())
    }
}

fn point(rng: &mut ChaCha8Rng, side: f64) -> (f64, f64) {
    (rng.gen::<f64>() * side, rng.gen::<f64>() * side)
}

/// Deterministic synthetic instance for `seed`.
pub fn generate(config: &SynthConfig, seed: u64) -> Result<LotteryInstance> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sites: Vec<(f64, f64)> = config
        .schools
        .iter()
        .map(|_| point(&mut rng, config.area_km))
        .collect();
    let sexes = std::iter::repeat_n(Sex::Male, config.male_students)
        .chain(std::iter::repeat_n(Sex::Female, config.female_students));
    let mut students = Vec::new();
    for (i, sex) in sexes.enumerate() {
        let (x, y) = point(&mut rng, config.area_km);
        let eligible: Vec<usize> = (0..config.schools.len())
            .filter(|&h| config.schools[h].quota(sex) > 0)
            .collect();
        let mut distances = vec![None; config.schools.len()];
        let mut km = Vec::with_capacity(eligible.len());
        for &h in &eligible {
            let d = ((x - sites[h].0).powi(2) + (y - sites[h].1).powi(2)).sqrt();
            distances[h] = Some((d * 100.0).round() as u64);
            km.push(d);
        }
        let take = MAX_CHOICES.min(eligible.len());
        let choices = if rng.gen_bool(config.distance_bias) {
            // successive draws without replacement, weight exp(-d / scale)
            let mut weights: Vec<f64> = km
                .iter()
                .map(|d| (-d / config.distance_scale_km).exp())
                .collect();
            let mut picked = Vec::with_capacity(take);
            for _ in 0..take {
                let total: f64 = weights.iter().sum();
                let mut t = rng.gen::<f64>() * total;
                let mut k = weights
                    .iter()
                    .rposition(|&w| w > 0.0)
                    .expect("an unpicked school remains");
                for (j, &w) in weights.iter().enumerate() {
                    if w > 0.0 && t < w {
                        k = j;
                        break;
                    }
                    t -= w;
                }
                weights[k] = 0.0;
                picked.push(eligible[k]);
            }
            picked
        } else {
            sample(&mut rng, eligible.len(), take)
                .into_iter()
                .map(|k| eligible[k])
                .collect()
        };
        students.push(Student {
            id: format!("s{:04}", i + 1),
            sex,
            choices,
            distances,
        });
    }
    LotteryInstance::new(config.schools.clone(), students)
}
