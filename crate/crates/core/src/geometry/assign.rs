use serde::{Deserialize, Serialize};

use super::{fit_line, EgoLayout, SceneGeometry};
use crate::scalar::Real;

/// Egocentric region label of a sign box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RegionLabel {
    L,
    C,
    R,
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RegionLabel::L => "L",
            RegionLabel::C => "C",
            RegionLabel::R => "R",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxLabel {
    pub id: String,
    pub label: RegionLabel,
}

/// Per-box region labels, in the same order as `scene.boxes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct BoxAssignment {
    pub labels: Vec<BoxLabel>,
}

impl BoxAssignment {
    pub fn label_of(&self, id: &str) -> Option<RegionLabel> {
        self.labels.iter().find(|b| b.id == id).map(|b| b.label)
    }
}

/// The x anchor of a region at y = 2H/3.
///
/// Current: midpoint of the two ego boundary lines. Left/right: midpoint of
/// the ego boundary and the adjacent line outward of it; when no such line
/// exists the anchor is the boundary shifted outward by one ego-lane width.
///
/// `layout` must come from [`split_regions`](super::split_regions) on the
/// same scene; the line fits are guaranteed non-degenerate in that case.
pub fn region_anchor_x<T: Real>(
    scene: &SceneGeometry<T>,
    layout: &EgoLayout<T>,
    region: RegionLabel,
) -> T {
    let y = scene.anchor_y();
    let x_at = |i: usize| {
        fit_line(&scene.lines[i])
            .expect("layout implies fittable lines")
            .x_at(y)
    };
    let (lo, hi) = layout.ego_pair;
    let (x_lo, x_hi) = (x_at(lo), x_at(hi));
    match region {
        RegionLabel::C => (x_lo + x_hi).half(),
        RegionLabel::L => {
            if lo >= 1 {
                (x_at(lo - 1) + x_lo).half()
            } else {
                x_lo - (x_hi - x_lo)
            }
        }
        RegionLabel::R => {
            if hi + 1 < scene.lines.len() {
                (x_hi + x_at(hi + 1)).half()
            } else {
                x_hi + (x_hi - x_lo)
            }
        }
    }
}

/// Labels every box with the region whose anchor is nearest to the box
/// x-midpoint. Ties resolve L over C over R.
pub fn assign_sign_boxes<T: Real>(
    scene: &SceneGeometry<T>,
    layout: &EgoLayout<T>,
) -> BoxAssignment {
    let anchor_l = region_anchor_x(scene, layout, RegionLabel::L);
    let anchor_c = region_anchor_x(scene, layout, RegionLabel::C);
    let anchor_r = region_anchor_x(scene, layout, RegionLabel::R);
    let labels = scene
        .boxes
        .iter()
        .map(|b| {
            let mid = b.x_mid();
            let d_l = (mid - anchor_l).abs();
            let d_c = (mid - anchor_c).abs();
            let d_r = (mid - anchor_r).abs();
            let label = if d_l <= d_c && d_l <= d_r {
                RegionLabel::L
            } else if d_c <= d_r {
                RegionLabel::C
            } else {
                RegionLabel::R
            };
            BoxLabel {
                id: b.id.clone(),
                label,
            }
        })
        .collect();
    BoxAssignment { labels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{
        split_regions, BoundaryLine, Granularity, LocalizeOptions, Point2D, SignBox,
    };

    /// Lines crossing x = 300/500/700/900 at y = 600 (H = 900), the left two
    /// leaning left and the right two leaning right.
    fn four_line_scene(boxes: &[f64]) -> SceneGeometry<f64> {
        let mk = |x: f64, lean: f64| {
            BoundaryLine::new(vec![
                Point2D::new(x - lean, 300.0),
                Point2D::new(x + lean, 900.0),
            ])
        };
        SceneGeometry {
            width: 1600,
            height: 900,
            granularity: Granularity::Lane,
            lines: vec![
                mk(300.0, -20.0),
                mk(500.0, -10.0),
                mk(700.0, 10.0),
                mk(900.0, 20.0),
            ],
            boxes: boxes
                .iter()
                .enumerate()
                .map(|(i, &mid)| SignBox {
                    id: format!("b{i}"),
                    x_min: mid - 40.0,
                    y_min: 120.0,
                    x_max: mid + 40.0,
                    y_max: 200.0,
                    description_id: format!("d{i}"),
                })
                .collect(),
        }
    }

    #[test]
    fn anchors_for_full_layout() {
        let scene = four_line_scene(&[]);
        let layout = split_regions(&scene, LocalizeOptions::default()).unwrap();
        assert_eq!(layout.ego_pair, (1, 2));
        assert_eq!(region_anchor_x(&scene, &layout, RegionLabel::C), 600.0);
        assert_eq!(region_anchor_x(&scene, &layout, RegionLabel::L), 400.0);
        assert_eq!(region_anchor_x(&scene, &layout, RegionLabel::R), 800.0);
    }

    #[test]
    fn synthetic_anchor_when_no_outward_line() {
        // Two lines only: ego boundaries at 500 and 700, lane width 200.
        let mk = |x: f64, lean: f64| {
            BoundaryLine::new(vec![
                Point2D::new(x - lean, 300.0),
                Point2D::new(x + lean, 900.0),
            ])
        };
        let scene = SceneGeometry {
            width: 1600,
            height: 900,
            granularity: Granularity::Lane,
            lines: vec![mk(500.0, -10.0), mk(700.0, 10.0)],
            boxes: vec![],
        };
        let layout = split_regions(&scene, LocalizeOptions::default()).unwrap();
        assert_eq!(region_anchor_x(&scene, &layout, RegionLabel::L), 300.0);
        assert_eq!(region_anchor_x(&scene, &layout, RegionLabel::R), 900.0);
    }

    #[test]
    fn nearest_anchor_wins_with_left_tie_priority() {
        // Anchors are L = 400, C = 600, R = 800.
        let scene = four_line_scene(&[590.0, 500.0, 1000.0]);
        let layout = split_regions(&scene, LocalizeOptions::default()).unwrap();
        let a = assign_sign_boxes(&scene, &layout);
        assert_eq!(a.labels[0].label, RegionLabel::C);
        // 500 is equidistant to L and C; the chain prefers L.
        assert_eq!(a.labels[1].label, RegionLabel::L);
        assert_eq!(a.labels[2].label, RegionLabel::R);
    }

    #[test]
    fn center_tie_prefers_c_over_r() {
        // 700 is equidistant to C (600) and R (800).
        let scene = four_line_scene(&[700.0]);
        let layout = split_regions(&scene, LocalizeOptions::default()).unwrap();
        let a = assign_sign_boxes(&scene, &layout);
        assert_eq!(a.labels[0].label, RegionLabel::C);
    }
}
