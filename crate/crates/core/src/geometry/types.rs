use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Serialize, Serializer};

use super::{fit_line, GeometryError};
use crate::scalar::Real;

/// Image-plane point; `x` grows rightward, `y` grows downward.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2D<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point2D<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }
}

// Points travel as `[x, y]` pairs on the wire.
impl<T: Serialize> Serialize for Point2D<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&self.x)?;
        tup.serialize_element(&self.y)?;
        tup.end()
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Point2D<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PointVisitor<T>(std::marker::PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for PointVisitor<T> {
            type Value = Point2D<T>;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a [x, y] pair")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let x = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let y = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<serde::de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Ok(Point2D { x, y })
            }
        }
        deserializer.deserialize_seq(PointVisitor(std::marker::PhantomData))
    }
}

/// Ordered polyline of a lane or road boundary, top to bottom.
///
/// At least 2 points; y strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryLine<T> {
    pub points: Vec<Point2D<T>>,
}

impl<T> BoundaryLine<T> {
    pub fn new(points: Vec<Point2D<T>>) -> Self {
        Self { points }
    }
}

/// Axis-aligned sign-unit box carrying a reference to its description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SignBoxRepr<T>", into = "SignBoxRepr<T>")]
#[serde(bound(
    serialize = "T: Serialize + Clone",
    deserialize = "T: serde::de::DeserializeOwned + PartialOrd + Copy"
))]
pub struct SignBox<T> {
    pub id: String,
    pub x_min: T,
    pub y_min: T,
    pub x_max: T,
    pub y_max: T,
    pub description_id: String,
}

impl<T: Real> SignBox<T> {
    /// x-axis midpoint of the box.
    pub fn x_mid(&self) -> T {
        (self.x_min + self.x_max).half()
    }
}

#[derive(Serialize, Deserialize)]
struct SignBoxRepr<T> {
    id: String,
    bbox: [T; 4],
    description_id: String,
}

impl<T: Clone> From<SignBox<T>> for SignBoxRepr<T> {
    fn from(b: SignBox<T>) -> Self {
        SignBoxRepr {
            id: b.id,
            bbox: [b.x_min, b.y_min, b.x_max, b.y_max],
            description_id: b.description_id,
        }
    }
}

impl<T: PartialOrd + Copy> TryFrom<SignBoxRepr<T>> for SignBox<T> {
    type Error = String;
    fn try_from(r: SignBoxRepr<T>) -> Result<Self, String> {
        let [x_min, y_min, x_max, y_max] = r.bbox;
        if !(x_min < x_max) || !(y_min < y_max) {
            return Err(format!("box {:?} has an empty bbox", r.id));
        }
        Ok(SignBox {
            id: r.id,
            x_min,
            y_min,
            x_max,
            y_max,
            description_id: r.description_id,
        })
    }
}

/// Whether the boundary lines of a scene delimit lanes or whole roads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    Lane,
    Road,
}

/// One localization input: frame size, boundary lines sorted left to right
/// by their fitted x at two-thirds image height, and sign boxes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize + Clone",
    deserialize = "T: serde::de::DeserializeOwned + PartialOrd + Copy"
))]
pub struct SceneGeometry<T> {
    pub width: u32,
    pub height: u32,
    pub granularity: Granularity,
    pub lines: Vec<BoundaryLine<T>>,
    #[serde(default = "Vec::new")]
    pub boxes: Vec<SignBox<T>>,
}

impl<T: Real> SceneGeometry<T> {
    /// The reference height for anchors and ordering: y = 2H/3.
    pub fn anchor_y(&self) -> T {
        T::from_u32(2 * self.height).expect("height fits scalar") / T::of(3.0)
    }

    /// Checks the structural invariants every consumer of a scene relies on.
    pub fn validate(&self) -> Result<(), GeometryError> {
        if self.width == 0 || self.height == 0 {
            return Err(GeometryError::InvalidScene(
                "frame dimensions must be positive".into(),
            ));
        }
        for (i, line) in self.lines.iter().enumerate() {
            if line.points.len() < 2 {
                return Err(GeometryError::InvalidScene(format!(
                    "line {i} has fewer than 2 points"
                )));
            }
            for pair in line.points.windows(2) {
                if !(pair[0].y < pair[1].y) {
                    return Err(GeometryError::InvalidScene(format!(
                        "line {i} is not strictly increasing in y"
                    )));
                }
            }
            for p in &line.points {
                if !p.x.is_finite() || !p.y.is_finite() {
                    return Err(GeometryError::InvalidScene(format!(
                        "line {i} contains a non-finite coordinate"
                    )));
                }
            }
        }
        let y = self.anchor_y();
        let mut prev: Option<T> = None;
        for (i, line) in self.lines.iter().enumerate() {
            let x = fit_line(line)?.x_at(y);
            if let Some(p) = prev {
                if !(p < x) {
                    return Err(GeometryError::InvalidScene(format!(
                        "lines are not sorted left to right at y = 2H/3 (line {i})"
                    )));
                }
            }
            prev = Some(x);
        }
        for b in &self.boxes {
            let finite =
                [b.x_min, b.y_min, b.x_max, b.y_max].iter().all(|v| v.is_finite());
            if !finite || !(b.x_min < b.x_max) || !(b.y_min < b.y_max) {
                return Err(GeometryError::InvalidScene(format!(
                    "box {:?} has an empty or non-finite bbox",
                    b.id
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scene_json_round_trip() {
        let json = r#"{
            "width": 1920, "height": 1080, "granularity": "lane",
            "lines": [[[600, 400], [500, 700]], [[700, 400], [800, 700]]],
            "boxes": [{"id": "b0", "bbox": [540, 120, 660, 220], "description_id": "d0"}]
        }"#;
        let scene: SceneGeometry<f64> = serde_json::from_str(json).unwrap();
        assert_eq!(scene.lines.len(), 2);
        assert_eq!(scene.boxes[0].x_mid(), 600.0);
        let back = serde_json::to_string(&scene).unwrap();
        let again: SceneGeometry<f64> = serde_json::from_str(&back).unwrap();
        assert_eq!(scene, again);
    }

    #[test]
    fn empty_bbox_rejected_on_read() {
        let json = r#"{"id": "b0", "bbox": [540, 220, 660, 220], "description_id": "d0"}"#;
        assert!(serde_json::from_str::<SignBox<f64>>(json).is_err());
    }

    #[test]
    fn anchor_y_is_two_thirds_height() {
        let scene = SceneGeometry::<f64> {
            width: 1920,
            height: 1080,
            granularity: Granularity::Road,
            lines: vec![],
            boxes: vec![],
        };
        assert_eq!(scene.anchor_y(), 720.0);
    }
}
