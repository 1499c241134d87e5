use serde::{Deserialize, Serialize};

/// Whether a description regulates one lane or the whole road.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Lane,
    Road,
}

impl std::fmt::Display for Subject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Subject::Lane => "lane",
            Subject::Road => "road",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Allowed,
    Prohibited,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension {
    Height,
    Width,
    Weight,
}

impl Dimension {
    pub fn word(self) -> &'static str {
        match self {
            Dimension::Height => "height",
            Dimension::Width => "width",
            Dimension::Weight => "weight",
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            Dimension::Height | Dimension::Width => "m",
            Dimension::Weight => "t",
        }
    }
}

/// The five fixed direction keywords.
///
/// Variants are declared in the lexicographic order of their surface forms so
/// that the derived `Ord` matches canonical keyword order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DirectionKeyword {
    Exit,
    Straight,
    TurnLeft,
    TurnRight,
    UTurn,
}

impl DirectionKeyword {
    pub const ALL: [DirectionKeyword; 5] = [
        DirectionKeyword::Exit,
        DirectionKeyword::Straight,
        DirectionKeyword::TurnLeft,
        DirectionKeyword::TurnRight,
        DirectionKeyword::UTurn,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DirectionKeyword::Exit => "exit",
            DirectionKeyword::Straight => "straight",
            DirectionKeyword::TurnLeft => "turn left",
            DirectionKeyword::TurnRight => "turn right",
            DirectionKeyword::UTurn => "u-turn",
        }
    }
}

impl std::fmt::Display for DirectionKeyword {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for DirectionKeyword {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        DirectionKeyword::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or(())
    }
}

impl Serialize for DirectionKeyword {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for DirectionKeyword {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| {
            serde::de::Error::custom(format!(
                "unknown direction keyword {s:?}; expected one of exit, straight, turn left, turn right, u-turn"
            ))
        })
    }
}

/// One sub-sentence of a description.
///
/// The bracketed kinds (DIRECTION, DESTINATION, VEHICLE_CLASS) carry a keyword
/// multiset whose internal order is free; the remaining kinds carry scalar
/// parameters and render in exactly one way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ClauseRepr", into = "ClauseRepr")]
pub enum Clause {
    Direction { keywords: Vec<DirectionKeyword> },
    Destination { keywords: Vec<String> },
    VehicleClass { polarity: Polarity, keywords: Vec<String> },
    SpeedRange { lo: Option<f64>, hi: f64 },
    DimensionLimit { dimension: Dimension, value: f64 },
    DistanceKeep { min_gap: f64 },
    FreeText { text: String },
}

impl Clause {
    pub fn kind(&self) -> ClauseKind {
        match self {
            Clause::Direction { .. } => ClauseKind::Direction,
            Clause::Destination { .. } => ClauseKind::Destination,
            Clause::VehicleClass { .. } => ClauseKind::VehicleClass,
            Clause::SpeedRange { .. } => ClauseKind::SpeedRange,
            Clause::DimensionLimit { .. } => ClauseKind::DimensionLimit,
            Clause::DistanceKeep { .. } => ClauseKind::DistanceKeep,
            Clause::FreeText { .. } => ClauseKind::FreeText,
        }
    }

    /// Number of freely permutable keywords; clauses without a bracket list
    /// count as 1 (they have exactly one rendering).
    pub fn keyword_count(&self) -> usize {
        match self {
            Clause::Direction { keywords } => keywords.len(),
            Clause::Destination { keywords } => keywords.len(),
            Clause::VehicleClass { keywords, .. } => keywords.len(),
            _ => 1,
        }
    }
}

/// Clause kinds in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClauseKind {
    Direction,
    Destination,
    VehicleClass,
    SpeedRange,
    DimensionLimit,
    DistanceKeep,
    FreeText,
}

impl ClauseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClauseKind::Direction => "DIRECTION",
            ClauseKind::Destination => "DESTINATION",
            ClauseKind::VehicleClass => "VEHICLE_CLASS",
            ClauseKind::SpeedRange => "SPEED_RANGE",
            ClauseKind::DimensionLimit => "DIMENSION_LIMIT",
            ClauseKind::DistanceKeep => "DISTANCE_KEEP",
            ClauseKind::FreeText => "FREE_TEXT",
        }
    }
}

// Wire form: {"kind": ..., "keywords": [...], "params": {...}}.
#[derive(Serialize, Deserialize)]
struct ClauseRepr {
    kind: String,
    #[serde(default)]
    keywords: Vec<String>,
    #[serde(default)]
    params: ParamsRepr,
}

#[derive(Serialize, Deserialize, Default)]
struct ParamsRepr {
    #[serde(skip_serializing_if = "Option::is_none")]
    lo: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dimension: Option<Dimension>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    min_gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    polarity: Option<Polarity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    text: Option<String>,
}

impl From<Clause> for ClauseRepr {
    fn from(c: Clause) -> Self {
        let kind = c.kind().as_str().to_owned();
        let mut keywords = Vec::new();
        let mut params = ParamsRepr::default();
        match c {
            Clause::Direction { keywords: kws } => {
                keywords = kws.iter().map(|k| k.as_str().to_owned()).collect();
            }
            Clause::Destination { keywords: kws } => keywords = kws,
            Clause::VehicleClass { polarity, keywords: kws } => {
                keywords = kws;
                params.polarity = Some(polarity);
            }
            Clause::SpeedRange { lo, hi } => {
                params.lo = lo;
                params.hi = Some(hi);
            }
            Clause::DimensionLimit { dimension, value } => {
                params.dimension = Some(dimension);
                params.value = Some(value);
            }
            Clause::DistanceKeep { min_gap } => params.min_gap = Some(min_gap),
            Clause::FreeText { text } => params.text = Some(text),
        }
        ClauseRepr { kind, keywords, params }
    }
}

impl TryFrom<ClauseRepr> for Clause {
    type Error = String;
    fn try_from(r: ClauseRepr) -> Result<Self, String> {
        let p = r.params;
        match r.kind.as_str() {
            "DIRECTION" => {
                let keywords = r
                    .keywords
                    .iter()
                    .map(|s| s.parse().map_err(|_| format!("unknown direction keyword {s:?}")))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Clause::Direction { keywords })
            }
            "DESTINATION" => Ok(Clause::Destination { keywords: r.keywords }),
            "VEHICLE_CLASS" => Ok(Clause::VehicleClass {
                polarity: p.polarity.ok_or("VEHICLE_CLASS requires params.polarity")?,
                keywords: r.keywords,
            }),
            "SPEED_RANGE" => Ok(Clause::SpeedRange {
                lo: p.lo,
                hi: p.hi.ok_or("SPEED_RANGE requires params.hi")?,
            }),
            "DIMENSION_LIMIT" => Ok(Clause::DimensionLimit {
                dimension: p.dimension.ok_or("DIMENSION_LIMIT requires params.dimension")?,
                value: p.value.ok_or("DIMENSION_LIMIT requires params.value")?,
            }),
            "DISTANCE_KEEP" => Ok(Clause::DistanceKeep {
                min_gap: p.min_gap.ok_or("DISTANCE_KEEP requires params.min_gap")?,
            }),
            "FREE_TEXT" => Ok(Clause::FreeText {
                text: p.text.ok_or("FREE_TEXT requires params.text")?,
            }),
            other => Err(format!("unknown clause kind {other:?}")),
        }
    }
}

/// A full sign-unit description: subject plus one or more clauses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructuredDescription {
    #[serde(default)]
    pub id: String,
    pub subject: Subject,
    pub clauses: Vec<Clause>,
}

impl StructuredDescription {
    pub fn new(id: impl Into<String>, subject: Subject, clauses: Vec<Clause>) -> Self {
        Self {
            id: id.into(),
            subject,
            clauses,
        }
    }

    pub fn clauses_of_kind(&self, kind: ClauseKind) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(move |c| c.kind() == kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_json_shape() {
        let c = Clause::SpeedRange { lo: Some(90.0), hi: 120.0 };
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["kind"], "SPEED_RANGE");
        assert_eq!(json["keywords"].as_array().unwrap().len(), 0);
        assert_eq!(json["params"]["lo"], 90.0);
        assert_eq!(json["params"]["hi"], 120.0);
        let back: Clause = serde_json::from_value(json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn direction_keywords_checked_on_read() {
        let bad = r#"{"kind": "DIRECTION", "keywords": ["sideways"], "params": {}}"#;
        assert!(serde_json::from_str::<Clause>(bad).is_err());
        let good = r#"{"kind": "DIRECTION", "keywords": ["turn left", "straight"], "params": {}}"#;
        let c: Clause = serde_json::from_str(good).unwrap();
        assert_eq!(c.keyword_count(), 2);
    }

    #[test]
    fn direction_keyword_order_is_lexicographic() {
        let mut sorted = DirectionKeyword::ALL;
        sorted.sort();
        let strings: Vec<_> = sorted.iter().map(|k| k.as_str()).collect();
        let mut by_str = strings.clone();
        by_str.sort();
        assert_eq!(strings, by_str);
    }

    #[test]
    fn description_json_round_trip() {
        let d = StructuredDescription::new(
            "d0",
            Subject::Road,
            vec![Clause::Destination {
                keywords: vec!["Beijing".into(), "Tianjin".into()],
            }],
        );
        let json = serde_json::to_string(&d).unwrap();
        let back: StructuredDescription = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
