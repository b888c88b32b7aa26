//! Reader and writer for the subset of the TSPLIB format used here: 2D node
//! coordinate instances (`EUC_2D`, `ATT`) and `.opt.tour` files.
//!
//! Node ids are 1-based in files and 0-based everywhere else.

use std::fmt::Write as _;
use std::fs::File;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::TsplibError;

/// `EDGE_WEIGHT_TYPE` values understood by the parser.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeWeightType {
    #[serde(rename = "EUC_2D")]
    Euc2d,
    #[serde(rename = "ATT")]
    Att,
    /// Unrounded Euclidean distances. Not a TSPLIB keyword; only produced by
    /// this crate's own writer.
    #[serde(rename = "EXACT_EUCLIDEAN")]
    ExactEuclidean,
}

impl EdgeWeightType {
    pub fn keyword(self) -> &'static str {
        match self {
            EdgeWeightType::Euc2d => "EUC_2D",
            EdgeWeightType::Att => "ATT",
            EdgeWeightType::ExactEuclidean => "EXACT_EUCLIDEAN",
        }
    }
}

impl FromStr for EdgeWeightType {
    type Err = TsplibError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "EUC_2D" => Ok(EdgeWeightType::Euc2d),
            "ATT" => Ok(EdgeWeightType::Att),
            "EXACT_EUCLIDEAN" => Ok(EdgeWeightType::ExactEuclidean),
            other => Err(TsplibError::UnsupportedFormat(format!(
                "EDGE_WEIGHT_TYPE {other}"
            ))),
        }
    }
}

/// A TSPLIB coordinate instance as it appears on disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawInstance {
    pub name: String,
    pub dimension: usize,
    pub edge_weight_type: EdgeWeightType,
    pub coords: Vec<(f64, f64)>,
}

impl RawInstance {
    /// Renders the instance as TSPLIB text that [`parse_instance_str`] reads back
    /// into an identical value.
    pub fn to_tsplib_string(&self) -> String {
        let mut out = String::new();
        // Writing into a String cannot fail.
        let _ = writeln!(out, "NAME : {}", self.name);
        let _ = writeln!(out, "TYPE : TSP");
        let _ = writeln!(out, "DIMENSION : {}", self.dimension);
        let _ = writeln!(
            out,
            "EDGE_WEIGHT_TYPE : {}",
            self.edge_weight_type.keyword()
        );
        let _ = writeln!(out, "NODE_COORD_SECTION");
        for (i, (x, y)) in self.coords.iter().enumerate() {
            let _ = writeln!(out, "{} {:?} {:?}", i + 1, x, y);
        }
        out.push_str("EOF\n");
        out
    }
}

/// An optimal (or any) tour read from a `.opt.tour` file, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptTour {
    pub instance_name: String,
    pub order: Vec<usize>,
}

impl OptTour {
    /// Renders a `TYPE : TOUR` file with one 1-based id per line.
    pub fn to_tsplib_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "NAME : {}", self.instance_name);
        let _ = writeln!(out, "TYPE : TOUR");
        let _ = writeln!(out, "DIMENSION : {}", self.order.len());
        out.push_str("TOUR_SECTION\n");
        for c in &self.order {
            let _ = writeln!(out, "{}", c + 1);
        }
        out.push_str("-1\nEOF\n");
        out
    }
}

/// Splits `KEY : VALUE` (also `KEY: VALUE` and `KEY:VALUE`). Lines without a
/// colon yield `(line, None)`.
fn split_header(line: &str) -> (&str, Option<&str>) {
    match line.split_once(':') {
        Some((key, value)) => (key.trim(), Some(value.trim())),
        None => (line.trim(), None),
    }
}

pub fn parse_instance<R: Read>(mut source: R) -> Result<RawInstance, TsplibError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_instance_str(&text)
}

pub fn read_instance<P: AsRef<Path>>(path: P) -> Result<RawInstance, TsplibError> {
    parse_instance(File::open(path)?)
}

pub fn parse_instance_str(text: &str) -> Result<RawInstance, TsplibError> {
    let mut name = None;
    let mut dimension = None;
    let mut edge_weight_type = None;
    let mut lines = text.lines().enumerate();
    let mut in_coords = false;

    for (idx, raw) in lines.by_ref() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = split_header(line);
        match (key, value) {
            ("NAME", Some(v)) => name = Some(v.to_string()),
            ("TYPE", Some(v)) => {
                if v != "TSP" {
                    return Err(TsplibError::UnsupportedFormat(format!("TYPE {v}")));
                }
            }
            ("COMMENT", _) => {}
            ("DIMENSION", Some(v)) => {
                let d = v
                    .parse::<usize>()
                    .map_err(|_| TsplibError::MalformedHeader {
                        line: idx + 1,
                        text: line.to_string(),
                    })?;
                dimension = Some(d);
            }
            ("EDGE_WEIGHT_TYPE", Some(v)) => edge_weight_type = Some(v.parse::<EdgeWeightType>()?),
            ("NODE_COORD_TYPE", Some(v)) => {
                if v != "TWOD_COORDS" {
                    return Err(TsplibError::UnsupportedFormat(format!(
                        "NODE_COORD_TYPE {v}"
                    )));
                }
            }
            ("DISPLAY_DATA_TYPE", Some(_)) => {}
            ("NODE_COORD_SECTION", None) => {
                in_coords = true;
                break;
            }
            ("EOF", None) => break,
            (
                "EDGE_WEIGHT_SECTION"
                | "DISPLAY_DATA_SECTION"
                | "FIXED_EDGES_SECTION"
                | "EDGE_WEIGHT_FORMAT"
                | "EDGE_DATA_FORMAT"
                | "EDGE_DATA_SECTION",
                _,
            ) => return Err(TsplibError::UnsupportedFormat(key.to_string())),
            _ => {
                return Err(TsplibError::MalformedHeader {
                    line: idx + 1,
                    text: line.to_string(),
                })
            }
        }
    }

    let name = name.ok_or(TsplibError::MissingKeyword("NAME"))?;
    let dimension = dimension.ok_or(TsplibError::MissingKeyword("DIMENSION"))?;
    let edge_weight_type =
        edge_weight_type.ok_or(TsplibError::MissingKeyword("EDGE_WEIGHT_TYPE"))?;
    if !in_coords {
        return Err(TsplibError::MissingKeyword("NODE_COORD_SECTION"));
    }
    if dimension < 3 {
        return Err(TsplibError::DimensionTooSmall(dimension));
    }

    let mut slots: Vec<Option<(f64, f64)>> = vec![None; dimension];
    let mut found = 0usize;
    for (idx, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "EOF" {
            break;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let malformed = || TsplibError::MalformedCoordinate {
            line: idx + 1,
            text: line.to_string(),
        };
        if fields.len() != 3 {
            // A trailing section we do not read.
            if fields[0].ends_with("_SECTION") {
                return Err(TsplibError::UnsupportedFormat(fields[0].to_string()));
            }
            return Err(malformed());
        }
        let id = fields[0].parse::<i64>().map_err(|_| malformed())?;
        let x = fields[1].parse::<f64>().map_err(|_| malformed())?;
        let y = fields[2].parse::<f64>().map_err(|_| malformed())?;
        found += 1;
        if id < 1 || id as usize > dimension {
            if found > dimension {
                continue;
            }
            return Err(TsplibError::NodeOutOfRange { id, dimension });
        }
        let slot = &mut slots[id as usize - 1];
        if slot.is_some() {
            return Err(TsplibError::DuplicateNode(id));
        }
        *slot = Some((x, y));
    }

    if found != dimension {
        return Err(TsplibError::CoordinateCountMismatch {
            expected: dimension,
            found,
        });
    }
    let coords = slots
        .into_iter()
        .map(|c| c.expect("every id seen once"))
        .collect();
    Ok(RawInstance {
        name,
        dimension,
        edge_weight_type,
        coords,
    })
}

pub fn parse_opt_tour<R: Read>(mut source: R) -> Result<OptTour, TsplibError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_opt_tour_str(&text)
}

pub fn read_opt_tour<P: AsRef<Path>>(path: P) -> Result<OptTour, TsplibError> {
    parse_opt_tour(File::open(path)?)
}

pub fn parse_opt_tour_str(text: &str) -> Result<OptTour, TsplibError> {
    let mut name = String::new();
    let mut dimension = None;
    let mut lines = text.lines().enumerate();
    let mut in_tour = false;

    for (idx, raw) in lines.by_ref() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = split_header(line);
        match (key, value) {
            ("NAME", Some(v)) => name = v.to_string(),
            ("TYPE", Some(v)) => {
                if v != "TOUR" {
                    return Err(TsplibError::UnsupportedFormat(format!("TYPE {v}")));
                }
            }
            ("COMMENT", _) => {}
            ("DIMENSION", Some(v)) => {
                dimension = Some(
                    v.parse::<usize>()
                        .map_err(|_| TsplibError::MalformedHeader {
                            line: idx + 1,
                            text: line.to_string(),
                        })?,
                );
            }
            ("TOUR_SECTION", None) => {
                in_tour = true;
                break;
            }
            _ => {
                return Err(TsplibError::MalformedHeader {
                    line: idx + 1,
                    text: line.to_string(),
                })
            }
        }
    }
    if !in_tour {
        return Err(TsplibError::MissingKeyword("TOUR_SECTION"));
    }

    let mut ids = Vec::new();
    let mut terminated = false;
    'rows: for (idx, raw) in lines {
        for token in raw.split_whitespace() {
            let id = token
                .parse::<i64>()
                .map_err(|_| TsplibError::MalformedCoordinate {
                    line: idx + 1,
                    text: raw.trim().to_string(),
                })?;
            if id == -1 {
                terminated = true;
                break 'rows;
            }
            ids.push(id);
        }
    }
    if !terminated {
        return Err(TsplibError::MissingTerminator);
    }

    let n = dimension.unwrap_or(ids.len());
    if ids.len() != n {
        return Err(TsplibError::TourLengthMismatch {
            expected: n,
            found: ids.len(),
        });
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for id in ids {
        if id < 1 || id as usize > n {
            return Err(TsplibError::NodeOutOfRange { id, dimension: n });
        }
        let city = id as usize - 1;
        if std::mem::replace(&mut seen[city], true) {
            return Err(TsplibError::DuplicateNode(id));
        }
        order.push(city);
    }
    Ok(OptTour {
        instance_name: name,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "NAME : tiny\nCOMMENT : four points\nTYPE : TSP\nDIMENSION : 4\n\
        EDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 0 10\n3 10 10\n4 10 0\nEOF\n";

    #[test]
    fn parses_small_instance() {
        let raw = parse_instance_str(SMALL).unwrap();
        assert_eq!(raw.name, "tiny");
        assert_eq!(raw.dimension, 4);
        assert_eq!(raw.edge_weight_type, EdgeWeightType::Euc2d);
        assert_eq!(raw.coords[2], (10.0, 10.0));
    }

    #[test]
    fn header_without_spaces_around_colon() {
        let text = SMALL.replace("DIMENSION : 4", "DIMENSION:4");
        assert_eq!(parse_instance_str(&text).unwrap().dimension, 4);
    }

    #[test]
    fn rejects_two_cities() {
        let text = "NAME: two\nTYPE: TSP\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EUC_2D\n\
            NODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n";
        assert_eq!(
            parse_instance_str(text),
            Err(TsplibError::DimensionTooSmall(2))
        );
    }

    #[test]
    fn rejects_explicit_matrices() {
        let text = SMALL.replace("EUC_2D", "EXPLICIT");
        assert!(matches!(
            parse_instance_str(&text),
            Err(TsplibError::UnsupportedFormat(_))
        ));
        let geo = SMALL.replace("EUC_2D", "GEO");
        assert!(matches!(
            parse_instance_str(&geo),
            Err(TsplibError::UnsupportedFormat(_))
        ));
    }

    #[test]
    fn rejects_unknown_keyword() {
        let text = SMALL.replace("COMMENT : four points", "FOO_BAR : 1");
        assert!(matches!(
            parse_instance_str(&text),
            Err(TsplibError::MalformedHeader { line: 2, .. })
        ));
    }

    #[test]
    fn coordinate_count_mismatch() {
        let text = SMALL.replace("4 10 0\n", "");
        assert_eq!(
            parse_instance_str(&text),
            Err(TsplibError::CoordinateCountMismatch {
                expected: 4,
                found: 3
            })
        );
        let extra = SMALL.replace("EOF", "5 3 3\nEOF");
        assert_eq!(
            parse_instance_str(&extra),
            Err(TsplibError::CoordinateCountMismatch {
                expected: 4,
                found: 5
            })
        );
    }

    #[test]
    fn missing_eof_is_fine() {
        let text = SMALL.replace("EOF\n", "");
        assert!(parse_instance_str(&text).is_ok());
    }

    #[test]
    fn render_round_trip() {
        let raw = RawInstance {
            name: "odd".into(),
            dimension: 3,
            edge_weight_type: EdgeWeightType::Att,
            coords: vec![(0.1, 1e-7), (123456.789, -2.5), (3.0, 4.0)],
        };
        assert_eq!(parse_instance_str(&raw.to_tsplib_string()).unwrap(), raw);
    }

    #[test]
    fn tour_with_space_separated_entries() {
        let text =
            "NAME : t.opt.tour\nTYPE : TOUR\nDIMENSION : 4\nTOUR_SECTION\n1 3 2\n4 -1\nEOF\n";
        let tour = parse_opt_tour_str(text).unwrap();
        assert_eq!(tour.order, vec![0, 2, 1, 3]);
        assert_eq!(tour.instance_name, "t.opt.tour");
        assert_eq!(parse_opt_tour_str(&tour.to_tsplib_string()).unwrap(), tour);
    }

    #[test]
    fn tour_rejects_node_zero() {
        let text = "NAME : t\nTYPE : TOUR\nDIMENSION : 3\nTOUR_SECTION\n0\n1\n2\n-1\n";
        assert_eq!(
            parse_opt_tour_str(text),
            Err(TsplibError::NodeOutOfRange {
                id: 0,
                dimension: 3
            })
        );
    }

    #[test]
    fn tour_rejects_duplicates_and_missing_terminator() {
        let dup = "NAME : t\nTYPE : TOUR\nDIMENSION : 3\nTOUR_SECTION\n1\n2\n2\n-1\n";
        assert_eq!(parse_opt_tour_str(dup), Err(TsplibError::DuplicateNode(2)));
        let open = "NAME : t\nTYPE : TOUR\nDIMENSION : 3\nTOUR_SECTION\n1\n2\n3\nEOF\n";
        assert!(parse_opt_tour_str(open).is_err());
        let open = "NAME : t\nTYPE : TOUR\nDIMENSION : 3\nTOUR_SECTION\n1\n2\n3\n";
        assert_eq!(
            parse_opt_tour_str(open),
            Err(TsplibError::MissingTerminator)
        );
    }
}
