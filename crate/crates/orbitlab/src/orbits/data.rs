//! Embedded weighted-Dynkin catalog for the exceptional algebras.
//!
//! Each record is one line `<type>;<label>;<m1,...,ml>`: the simple type,
//! the orbit's Bala–Carter label, and its weighted Dynkin marks on the
//! Bourbaki-ordered simple roots.  Blank lines and `#` comments are
//! ignored.  Setting the environment variable `ORBITLAB_ORBIT_DATA` to a
//! file path substitutes that file for the embedded table.

use crate::rootsys::SimpleType;
use crate::Error;

/// Name of the override environment variable.
pub const ORBIT_DATA_ENV: &str = "ORBITLAB_ORBIT_DATA";

static EMBEDDED: &str = include_str!("../../data/exceptional_orbits.txt");

/// One catalog record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub algebra: SimpleType,
    pub label: String,
    pub marks: Vec<i64>,
}

/// The raw catalog text: the `ORBITLAB_ORBIT_DATA` file if set, otherwise
/// the embedded table.
pub fn raw_data() -> Result<String, Error> {
    match std::env::var_os(ORBIT_DATA_ENV) {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => Ok(EMBEDDED.to_string()),
    }
}

fn parse_line(line: &str) -> Result<OrbitRecord, Error> {
    let mut fields = line.split(';');
    let (Some(ty), Some(label), Some(marks), None) =
        (fields.next(), fields.next(), fields.next(), fields.next())
    else {
        return Err(Error::Parse(format!("malformed orbit record: {line:?}")));
    };
    let algebra = SimpleType::parse(ty)?;
    let marks: Vec<i64> = marks
        .split(',')
        .map(|m| {
            m.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad mark {m:?} in {line:?}")))
        })
        .collect::<Result<_, _>>()?;
    if marks.len() != algebra.rank() {
        return Err(Error::Parse(format!(
            "{} marks for {algebra} in {line:?}",
            marks.len()
        )));
    }
    Ok(OrbitRecord {
        algebra,
        label: label.trim().to_string(),
        marks,
    })
}

/// Parse catalog text into records.
pub fn parse_records(text: &str) -> Result<Vec<OrbitRecord>, Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_line)
        .collect()
}

/// All records of the active catalog.
pub fn all_records() -> Result<Vec<OrbitRecord>, Error> {
    parse_records(&raw_data()?)
}

/// Records for one exceptional type.
pub fn records_for(st: SimpleType) -> Result<Vec<OrbitRecord>, Error> {
    let recs: Vec<OrbitRecord> = all_records()?
        .into_iter()
        .filter(|r| r.algebra == st)
        .collect();
    if recs.is_empty() {
        return Err(Error::Parse(format!("no orbit records for {st}")));
    }
    Ok(recs)
}
