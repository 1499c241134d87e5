use super::{BoundaryLine, GeometryError};
use crate::scalar::Real;

/// Degree-1 least-squares fit of x as a function of y: `x = slope * y + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit<T> {
    pub slope: T,
    pub intercept: T,
}

impl<T: Real> LineFit<T> {
    pub fn x_at(&self, y: T) -> T {
        self.slope * y + self.intercept
    }

    /// Line angle in degrees, mapped to (0, 180).
    ///
    /// `90 - atan(slope)`: left-leaning lines (x decreasing toward the image
    /// bottom) give angles above 90, right-leaning below, vertical exactly 90.
    pub fn angle_deg(&self) -> T {
        T::of(90.0) - self.slope.atan().to_degrees()
    }
}

/// Fits a boundary line by least squares over all of its points.
pub fn fit_line<T: Real>(line: &BoundaryLine<T>) -> Result<LineFit<T>, GeometryError> {
    let n = line.points.len();
    if n < 2 {
        return Err(GeometryError::DegenerateLine);
    }
    let count = T::from_usize(n).expect("point count fits scalar");
    let mut sx = T::zero();
    let mut sy = T::zero();
    for p in &line.points {
        sx = sx + p.x;
        sy = sy + p.y;
    }
    let mean_x = sx / count;
    let mean_y = sy / count;
    let mut sxy = T::zero();
    let mut syy = T::zero();
    for p in &line.points {
        let dy = p.y - mean_y;
        sxy = sxy + dy * (p.x - mean_x);
        syy = syy + dy * dy;
    }
    if syy == T::zero() {
        return Err(GeometryError::DegenerateLine);
    }
    let slope = sxy / syy;
    Ok(LineFit {
        slope,
        intercept: mean_x - slope * mean_y,
    })
}

/// Angle of the fitted line in degrees, in (0, 180).
pub fn fit_line_angle<T: Real>(line: &BoundaryLine<T>) -> Result<T, GeometryError> {
    fit_line(line).map(|f| f.angle_deg())
}
