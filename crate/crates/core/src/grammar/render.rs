use super::{validate, Clause, InvalidDescription, StructuredDescription, Subject};

/// Renders a number without trailing zeros, with a decimal point only when
/// the value is fractional (`90` not `90.0`, `4.5` as-is). The shortest
/// round-trip form keeps serialize/parse bit-exact.
pub fn format_number(v: f64) -> String {
    format!("{v}")
}

/// Renders one clause. Total; does not check invariants.
pub fn render_clause(clause: &Clause) -> String {
    match clause {
        Clause::Direction { keywords } => {
            let kws: Vec<&str> = keywords.iter().map(|k| k.as_str()).collect();
            format!("allows driving [{}]", kws.join(", "))
        }
        Clause::Destination { keywords } => format!("heading to [{}]", keywords.join(", ")),
        Clause::VehicleClass { polarity, keywords } => {
            let head = match polarity {
                super::Polarity::Allowed => "restricted to",
                super::Polarity::Prohibited => "prohibited for",
            };
            format!("{head} [{}]", keywords.join(", "))
        }
        Clause::SpeedRange { lo: Some(lo), hi } => format!(
            "with speed limited from {} to {} km/h",
            format_number(*lo),
            format_number(*hi)
        ),
        Clause::SpeedRange { lo: None, hi } => {
            format!("with speed limited to {} km/h", format_number(*hi))
        }
        Clause::DimensionLimit { dimension, value } => format!(
            "with {} limited to {} {}",
            dimension.word(),
            format_number(*value),
            dimension.unit()
        ),
        Clause::DistanceKeep { min_gap } => {
            format!("keeping distance over {} m", format_number(*min_gap))
        }
        Clause::FreeText { text } => text.clone(),
    }
}

/// Renders a whole description. Total; does not check invariants.
pub fn render_description(desc: &StructuredDescription) -> String {
    let subject = match desc.subject {
        Subject::Lane => "this lane",
        Subject::Road => "this road",
    };
    let clauses: Vec<String> = desc.clauses.iter().map(render_clause).collect();
    format!("{subject} {}.", clauses.join(", "))
}

/// Validates and renders; the template inverse of [`super::parse_description`].
pub fn serialize(desc: &StructuredDescription) -> Result<String, InvalidDescription> {
    let violations = validate(desc);
    if !violations.is_empty() {
        return Err(InvalidDescription { violations });
    }
    Ok(render_description(desc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{Dimension, DirectionKeyword, Polarity};

    #[test]
    fn speed_range_template() {
        let d = StructuredDescription::new(
            "",
            Subject::Lane,
            vec![Clause::SpeedRange { lo: Some(90.0), hi: 120.0 }],
        );
        assert_eq!(
            serialize(&d).unwrap(),
            "this lane with speed limited from 90 to 120 km/h."
        );
    }

    #[test]
    fn destination_template() {
        let d = StructuredDescription::new(
            "",
            Subject::Road,
            vec![Clause::Destination {
                keywords: vec!["Beijing".into(), "Tianjin".into()],
            }],
        );
        assert_eq!(serialize(&d).unwrap(), "this road heading to [Beijing, Tianjin].");
    }

    #[test]
    fn two_clause_join() {
        let d = StructuredDescription::new(
            "",
            Subject::Lane,
            vec![
                Clause::Direction { keywords: vec![DirectionKeyword::TurnLeft] },
                Clause::Destination { keywords: vec!["Xi'an".into()] },
            ],
        );
        assert_eq!(
            serialize(&d).unwrap(),
            "this lane allows driving [turn left], heading to [Xi'an]."
        );
    }

    #[test]
    fn remaining_templates() {
        assert_eq!(
            render_clause(&Clause::SpeedRange { lo: None, hi: 60.0 }),
            "with speed limited to 60 km/h"
        );
        assert_eq!(
            render_clause(&Clause::DimensionLimit {
                dimension: Dimension::Height,
                value: 4.5
            }),
            "with height limited to 4.5 m"
        );
        assert_eq!(
            render_clause(&Clause::DimensionLimit {
                dimension: Dimension::Weight,
                value: 30.0
            }),
            "with weight limited to 30 t"
        );
        assert_eq!(
            render_clause(&Clause::DistanceKeep { min_gap: 100.0 }),
            "keeping distance over 100 m"
        );
        assert_eq!(
            render_clause(&Clause::VehicleClass {
                polarity: Polarity::Prohibited,
                keywords: vec!["truck".into()]
            }),
            "prohibited for [truck]"
        );
    }

    #[test]
    fn invalid_description_is_rejected() {
        let d = StructuredDescription::new(
            "",
            Subject::Lane,
            vec![Clause::SpeedRange { lo: Some(120.0), hi: 90.0 }],
        );
        assert!(serialize(&d).is_err());
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(90.0), "90");
        assert_eq!(format_number(4.5), "4.5");
        assert_eq!(format_number(0.25), "0.25");
        assert_eq!(format_number(120.0), "120");
    }
}
