use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs::File;
use std::hash::{Hash, Hasher};
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Highest stated preference; every other eligible school is one rank below.
pub const MAX_CHOICES: usize = 3;
/// Rank given to eligible schools a student did not list.
pub const OTHERS_RANK: u32 = MAX_CHOICES as u32 + 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sex {
    Male,
    Female,
}

impl FromStr for Sex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "m" | "male" => Ok(Sex::Male),
            "f" | "female" => Ok(Sex::Female),
            other => Err(Error::Validation(format!("unknown sex `{other}`"))),
        }
    }
}

impl fmt::Display for Sex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sex::Male => "M",
            Sex::Female => "F",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct School {
    pub id: String,
    pub male_quota: u32,
    pub female_quota: u32,
}

impl School {
    pub fn new(id: impl Into<String>, male_quota: u32, female_quota: u32) -> Self {
        School {
            id: id.into(),
            male_quota,
            female_quota,
        }
    }

    pub fn quota(&self, sex: Sex) -> u32 {
        match sex {
            Sex::Male => self.male_quota,
            Sex::Female => self.female_quota,
        }
    }
}

/// A student with up to three ranked choices (school indices) and distances
/// in hundredths of a km, indexed by school.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Student {
    pub id: String,
    pub sex: Sex,
    pub choices: Vec<usize>,
    pub distances: Vec<Option<u64>>,
}

/// Validated schools and students.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LotteryInstance {
    schools: Vec<School>,
    students: Vec<Student>,
}

impl LotteryInstance {
    pub fn new(schools: Vec<School>, students: Vec<Student>) -> Result<Self> {
        let mut ids = HashSet::new();
        for school in &schools {
            if !ids.insert(school.id.as_str()) {
                return Err(Error::Validation(format!(
                    "duplicate school id `{}`",
                    school.id
                )));
            }
        }
        let mut ids = HashSet::new();
        for st in &students {
            if !ids.insert(st.id.as_str()) {
                return Err(Error::Validation(format!(
                    "duplicate student id `{}`",
                    st.id
                )));
            }
            validate_student(st, &schools)?;
        }
        Ok(LotteryInstance { schools, students })
    }

    pub fn schools(&self) -> &[School] {
        &self.schools
    }

    pub fn students(&self) -> &[Student] {
        &self.students
    }

    pub fn is_eligible(&self, student: usize, school: usize) -> bool {
        self.schools[school].quota(self.students[student].sex) > 0
    }

    /// Choice position + 1 for listed schools, [`OTHERS_RANK`] for other
    /// eligible schools, `None` when ineligible.
    pub fn rank(&self, student: usize, school: usize) -> Option<u32> {
        if !self.is_eligible(student, school) {
            return None;
        }
        let pos = self.students[student]
            .choices
            .iter()
            .position(|&c| c == school);
        Some(pos.map_or(OTHERS_RANK, |p| p as u32 + 1))
    }

    pub fn distance(&self, student: usize, school: usize) -> Option<u64> {
        if !self.is_eligible(student, school) {
            return None;
        }
        self.students[student].distances[school]
    }

    /// Largest distance over eligible student/school pairs.
    pub fn max_distance(&self) -> u64 {
        (0..self.students.len())
            .flat_map(|s| (0..self.schools.len()).filter_map(move |h| self.distance(s, h)))
            .max()
            .unwrap_or(0)
    }

    pub fn seat_count(&self, sex: Sex) -> u64 {
        self.schools.iter().map(|h| h.quota(sex) as u64).sum()
    }

    /// Content hash used to tell reports of different instances apart.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.schools.hash(&mut h);
        self.students.hash(&mut h);
        h.finish()
    }

    pub fn school_index(&self, id: &str) -> Option<usize> {
        self.schools.iter().position(|h| h.id == id)
    }

    /// Writes the schools CSV (`school_id,male_quota,female_quota`).
    pub fn write_schools_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["school_id", "male_quota", "female_quota"])?;
        for h in &self.schools {
            w.write_record([
                h.id.clone(),
                h.male_quota.to_string(),
                h.female_quota.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Writes the students CSV
    /// (`student_id,sex,choice1,choice2,choice3,dist_<school>...`).
    pub fn write_students_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["student_id".to_string(), "sex".to_string()];
        header.extend((1..=MAX_CHOICES).map(|k| format!("choice{k}")));
        header.extend(self.schools.iter().map(|h| format!("dist_{}", h.id)));
        w.write_record(&header)?;
        for (s, st) in self.students.iter().enumerate() {
            let mut row = vec![st.id.clone(), st.sex.to_string()];
            for k in 0..MAX_CHOICES {
                row.push(
                    st.choices
                        .get(k)
                        .map_or(String::new(), |&h| self.schools[h].id.clone()),
                );
            }
            for h in 0..self.schools.len() {
                row.push(self.distance(s, h).map_or(String::new(), |d| d.to_string()));
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn validate_student(st: &Student, schools: &[School]) -> Result<()> {
    let fail = |msg: String| Err(Error::Validation(format!("student `{}`: {msg}", st.id)));
    if st.choices.is_empty() || st.choices.len() > MAX_CHOICES {
        return fail(format!(
            "needs 1 to {MAX_CHOICES} choices, has {}",
            st.choices.len()
        ));
    }
    if st.distances.len() != schools.len() {
        return fail(format!(
            "{} distances for {} schools",
            st.distances.len(),
            schools.len()
        ));
    }
    let mut seen = HashSet::new();
    for &c in &st.choices {
        let Some(school) = schools.get(c) else {
            return fail(format!("choice index {c} out of range"));
        };
        if !seen.insert(c) {
            return fail(format!("school `{}` chosen twice", school.id));
        }
        if school.quota(st.sex) == 0 {
            return fail(format!(
                "chose `{}`, which has no seats for sex {}",
                school.id, st.sex
            ));
        }
    }
    for (h, school) in schools.iter().enumerate() {
        if school.quota(st.sex) > 0 && st.distances[h].is_none() {
            return fail(format!(
                "missing distance to eligible school `{}`",
                school.id
            ));
        }
    }
    Ok(())
}

fn line_of(record: &csv::StringRecord) -> usize {
    record.position().map_or(0, |p| p.line() as usize)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(input)
}

pub fn parse_schools<R: Read>(input: R) -> Result<Vec<School>> {
    let mut rdr = reader(input);
    let mut schools = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let line = line_of(&record);
        if record.len() != 3 {
            return Err(parse_err(
                line,
                "expected `school_id,male_quota,female_quota`",
            ));
        }
        let quota = |i: usize| {
            record[i]
                .parse::<u32>()
                .map_err(|_| parse_err(line, format!("invalid quota `{}`", &record[i])))
        };
        schools.push(School::new(&record[0], quota(1)?, quota(2)?));
    }
    Ok(schools)
}

pub fn parse_students<R: Read>(input: R, schools: &[School]) -> Result<Vec<Student>> {
    let mut rdr = reader(input);
    let headers = rdr.headers()?.clone();
    if headers.is_empty() {
        return Ok(Vec::new());
    }
    let column: HashMap<&str, usize> = headers.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let find = |name: &str| {
        column
            .get(name)
            .copied()
            .ok_or_else(|| parse_err(1, format!("missing column `{name}`")))
    };
    let id_col = find("student_id")?;
    let sex_col = find("sex")?;
    let choice_cols: Vec<usize> = (1..=MAX_CHOICES)
        .map(|k| find(&format!("choice{k}")))
        .collect::<Result<_>>()?;
    let dist_cols: Vec<usize> = schools
        .iter()
        .map(|h| find(&format!("dist_{}", h.id)))
        .collect::<Result<_>>()?;
    let index: HashMap<&str, usize> = schools
        .iter()
        .enumerate()
        .map(|(i, h)| (h.id.as_str(), i))
        .collect();

    let mut students = Vec::new();
    for record in rdr.records() {
        let record = record?;
        let line = line_of(&record);
        let field = |i: usize| record.get(i).unwrap_or("");
        let sex = field(sex_col)
            .parse()
            .map_err(|e: Error| parse_err(line, e.to_string()))?;
        let mut choices = Vec::new();
        for &c in &choice_cols {
            let id = field(c);
            if id.is_empty() {
                continue;
            }
            let h = index
                .get(id)
                .copied()
                .ok_or_else(|| parse_err(line, format!("unknown school `{id}`")))?;
            choices.push(h);
        }
        let distances = dist_cols
            .iter()
            .map(|&c| match field(c) {
                "" => Ok(None),
                d => d
                    .parse::<u64>()
                    .map(Some)
                    .map_err(|_| parse_err(line, format!("invalid distance `{d}`"))),
            })
            .collect::<Result<_>>()?;
        students.push(Student {
            id: field(id_col).to_string(),
            sex,
            choices,
            distances,
        });
    }
    Ok(students)
}

/// Parses and validates the two CSV inputs.
pub fn load_from_readers<R1: Read, R2: Read>(students: R1, schools: R2) -> Result<LotteryInstance> {
    let schools = parse_schools(schools)?;
    let students = parse_students(students, &schools)?;
    LotteryInstance::new(schools, students)
}

pub fn load(
    students_path: impl AsRef<Path>,
    schools_path: impl AsRef<Path>,
) -> Result<LotteryInstance> {
    load_from_readers(File::open(students_path)?, File::open(schools_path)?)
}
