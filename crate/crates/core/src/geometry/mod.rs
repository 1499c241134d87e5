//! Egocentric lane/road localization.
//!
//! Boundary lines are fitted as `x = a*y + b` (lane lines are near-vertical
//! in image space, so x(y) avoids infinite slopes) and reduced to an angle
//! `theta = 90deg - atan(a)` in (0deg, 180deg). Lines leaning left as they
//! approach the image bottom have `theta > 90deg`, lines leaning right have
//! `theta <= 90deg`, and the ego boundary pair sits at the sign change. Sign
//! boxes are then labeled `L`/`C`/`R` by comparing their x-midpoint against
//! one anchor per region, all evaluated at two-thirds image height.

mod assign;
mod fit;
mod layout;
mod types;

pub use assign::{assign_sign_boxes, region_anchor_x, BoxAssignment, BoxLabel, RegionLabel};
pub use fit::{fit_line, fit_line_angle, LineFit};
pub use layout::{split_regions, EgoLayout, LocalizeOptions, SplitMode};
pub use types::{BoundaryLine, Granularity, Point2D, SceneGeometry, SignBox};

use crate::scalar::Real;

#[derive(Debug, Clone, thiserror::Error)]
pub enum GeometryError {
    /// The line has no y extent, so `x = a*y + b` cannot be fitted.
    #[error("degenerate line: all points share one y coordinate")]
    DegenerateLine,
    /// No ego boundary pair can be chosen under the requested options.
    #[error("cannot localize: {0}")]
    CannotLocalize(String),
    #[error("invalid scene: {0}")]
    InvalidScene(String),
}

/// Full localization pass: validate, split regions, assign boxes.
///
/// Runs identically for lane- and road-granularity scenes.
pub fn localize<T: Real>(
    scene: &SceneGeometry<T>,
    options: LocalizeOptions,
) -> Result<(EgoLayout<T>, BoxAssignment), GeometryError> {
    scene.validate()?;
    let layout = split_regions(scene, options)?;
    let assignment = assign_sign_boxes(scene, &layout);
    Ok((layout, assignment))
}
