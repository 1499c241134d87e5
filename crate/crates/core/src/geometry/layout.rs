use serde::{Deserialize, Serialize};

use super::{fit_line_angle, GeometryError, SceneGeometry};
use crate::scalar::Real;

/// How the ego boundary pair is selected from the line angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitMode {
    /// Ego pair = (last line with angle > 90, first line with angle <= 90).
    #[default]
    Geometric,
    /// Compatibility mode reproducing the published loop literally: scan
    /// consecutive pairs and stop at the first whose angles are both <= 90,
    /// falling back to the rightmost pair. On the canonical scene
    /// [130, 110, 85, 60] this picks the pair one lane to the right of the
    /// geometric answer.
    Alg1Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalizeOptions {
    /// Error on degenerate scenes (all lines leaning one way) instead of
    /// clamping to the outermost pair.
    pub strict: bool,
    pub mode: SplitMode,
}

impl Default for LocalizeOptions {
    fn default() -> Self {
        Self {
            strict: true,
            mode: SplitMode::Geometric,
        }
    }
}

/// Region decomposition of the boundary lines.
///
/// `left_lines` and `right_lines` are half-open `[start, end)` index ranges;
/// together with `ego_pair` they cover every line, and each side range shares
/// exactly one boundary line with the ego pair (the left range ends with the
/// ego-left boundary, the right range starts with the ego-right boundary). A
/// side holds an actual lane only when its range spans at least two lines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EgoLayout<T> {
    pub left_lines: (usize, usize),
    pub ego_pair: (usize, usize),
    pub right_lines: (usize, usize),
    /// Fitted angle per line, degrees in (0, 180).
    pub angles: Vec<T>,
}

impl<T> EgoLayout<T> {
    /// True when at least one line lies outward of the ego-left boundary.
    pub fn has_left_lane(&self) -> bool {
        self.left_lines.1 - self.left_lines.0 >= 2
    }

    pub fn has_right_lane(&self) -> bool {
        self.right_lines.1 - self.right_lines.0 >= 2
    }
}

/// Splits the scene's lines into left/ego/right regions.
///
/// The boundary index `t` is the first line with angle <= 90 degrees; the ego
/// pair is `(t - 1, t)`. Degenerate scenes (no such `t`, or `t = 0`) error in
/// strict mode and clamp to the outermost consecutive pair otherwise.
pub fn split_regions<T: Real>(
    scene: &SceneGeometry<T>,
    options: LocalizeOptions,
) -> Result<EgoLayout<T>, GeometryError> {
    let n = scene.lines.len();
    if n < 2 {
        return Err(GeometryError::CannotLocalize(format!(
            "scene has {n} boundary lines; need at least 2"
        )));
    }
    let angles = scene
        .lines
        .iter()
        .map(fit_line_angle)
        .collect::<Result<Vec<T>, _>>()?;
    let ninety = T::of(90.0);
    let all_right = angles.iter().all(|&a| a <= ninety);
    let all_left = angles.iter().all(|&a| a > ninety);
    if options.strict && (all_right || all_left) {
        let lean = if all_right { "right (<= 90)" } else { "left (> 90)" };
        return Err(GeometryError::CannotLocalize(format!(
            "all {n} lines lean {lean}; no ego boundary pair"
        )));
    }

    let t = match options.mode {
        SplitMode::Geometric => match angles.iter().position(|&a| a <= ninety) {
            // A leading <= 90 line leaves nothing to its left: clamp leftmost.
            Some(0) | None if options.strict => {
                return Err(GeometryError::CannotLocalize(
                    "no line with angle > 90 precedes the first line with angle <= 90".into(),
                ))
            }
            Some(0) => 1,
            None => n - 1,
            Some(t) => t,
        },
        SplitMode::Alg1Literal => {
            let mut t = n - 1;
            for i in 1..n {
                if angles[i - 1] <= ninety && angles[i] <= ninety {
                    t = i;
                    break;
                }
            }
            t
        }
    };

    Ok(EgoLayout {
        left_lines: (0, t),
        ego_pair: (t - 1, t),
        right_lines: (t, n),
        angles,
    })
}
