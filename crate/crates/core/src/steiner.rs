//! Steiner symmetrization with respect to the x-axis.
//!
//! The symmetral of a convex polygon is computed exactly: its vertical chord
//! length is piecewise linear in x with breakpoints only at vertex
//! abscissae, so evaluating the chord at every breakpoint and emitting the
//! pair (x, ±chord/2) reproduces the symmetral vertex for vertex. Rotated
//! regular polygons additionally get a closed-form vertex list.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::Error;
use crate::geom::{ConvexPolygon, Point, RegularPolygonSpec, EPS_GEOM};
use crate::math;

/// Slack accepted beyond nominal angle interval endpoints.
const RANGE_SLACK: f64 = 1e-12;

/// Result of a Steiner symmetrization: the symmetral itself plus the
/// abscissae where its chord-length function changes slope.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrizedPolygon {
    polygon: ConvexPolygon,
    breakpoints: Vec<f64>,
}

impl SymmetrizedPolygon {
    /// The symmetral, symmetric about the x-axis and area-preserving.
    pub fn polygon(&self) -> &ConvexPolygon {
        &self.polygon
    }

    pub fn into_polygon(self) -> ConvexPolygon {
        self.polygon
    }

    /// Sorted abscissae of the chord-length breakpoints (the source
    /// polygon's distinct vertex x-coordinates).
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }
}

/// Length of the intersection of `k` with the vertical line at `x`;
/// zero outside the x-extent of `k`.
pub fn chord_length(k: &ConvexPolygon, x: f64) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (a, b) in k.edges() {
        let (xmin, xmax) = if a.x <= b.x { (a.x, b.x) } else { (b.x, a.x) };
        if x < xmin - EPS_GEOM || x > xmax + EPS_GEOM {
            continue;
        }
        if xmax - xmin <= 1e-12 {
            lo = lo.min(a.y.min(b.y));
            hi = hi.max(a.y.max(b.y));
        } else {
            let t = ((x - a.x) / (b.x - a.x)).clamp(0.0, 1.0);
            let y = a.y + t * (b.y - a.y);
            lo = lo.min(y);
            hi = hi.max(y);
        }
    }
    if hi > lo {
        hi - lo
    } else {
        0.0
    }
}

/// Steiner symmetrization of an arbitrary convex polygon.
pub fn symmetrize(k: &ConvexPolygon) -> Result<SymmetrizedPolygon, Error> {
    if k.area() <= EPS_GEOM {
        return Err(Error::DegenerateBody);
    }
    let mut xs: Vec<f64> = k.vertices().iter().map(|v| v.x).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|a, b| *a - *b <= EPS_GEOM);
    let chords: Vec<f64> = xs.iter().map(|&x| chord_length(k, x)).collect();
    let polygon = polygon_from_chords(&xs, &chords)?;
    debug_assert!((polygon.area() - k.area()).abs() <= 1e-9 * k.area().max(1.0));
    Ok(SymmetrizedPolygon {
        polygon,
        breakpoints: xs,
    })
}

/// Steiner symmetrization of the rotated regular polygon with `sides`
/// vertices on the unit circle, the first at angle `theta`.
///
/// For `theta` up to half the admissible range the symmetral's vertices are
/// produced in closed form: with m = `sides` and a = 2πj/m, the chords of
/// the rotated m-gon at the vertex abscissae cos(θ ∓ a) have half-lengths
/// sin(a ∓ π/m)·sin(a)/sin(a ∓ π/m ± θ). Beyond that angle the ordering
/// assumptions behind the formula are unchecked, so the general chord
/// algorithm takes over; both paths agree on the boundary.
pub fn symmetrize_regular(sides: u32, theta: f64) -> Result<SymmetrizedPolygon, Error> {
    if sides < 4 || sides % 2 != 0 {
        return Err(Error::InvalidParameter(
            "symmetrize_regular needs an even vertex count of at least 4",
        ));
    }
    if !theta.is_finite() {
        return Err(Error::InvalidParameter("theta must be finite"));
    }
    let hi = PI / sides as f64;
    if !(-RANGE_SLACK..=hi + RANGE_SLACK).contains(&theta) {
        return Err(Error::ThetaOutOfRange { theta, lo: 0.0, hi });
    }
    let theta = theta.clamp(0.0, hi);
    if theta <= 0.5 * hi + RANGE_SLACK {
        regular_closed_form(sides, theta)
    } else {
        let spec = RegularPolygonSpec::new(sides, 1.0, theta)?;
        symmetrize(&ConvexPolygon::regular(spec))
    }
}

fn regular_closed_form(sides: u32, theta: f64) -> Result<SymmetrizedPolygon, Error> {
    let m = sides as usize;
    let step = PI / sides as f64;
    let mut entries: Vec<(f64, f64)> = Vec::with_capacity(m + 1);
    entries.push((math::cos(theta), 0.0));
    for j in 1..=m / 2 {
        let a = 2.0 * step * j as f64;
        let h1 = math::sin(a - step) * math::sin(a) / math::sin(a - step + theta);
        entries.push((math::cos(theta - a), (2.0 * h1).max(0.0)));
        let h2 = math::sin(a) * math::sin(a + step) / math::sin(a + step - theta);
        entries.push((math::cos(theta + a), (2.0 * h2).max(0.0)));
    }
    entries.sort_by(|p, q| f64::total_cmp(&p.0, &q.0));
    // Coincident abscissae describe the same chord twice; keep one entry.
    let mut xs: Vec<f64> = Vec::with_capacity(entries.len());
    let mut chords: Vec<f64> = Vec::with_capacity(entries.len());
    for (x, c) in entries {
        match xs.last() {
            Some(&last) if x - last <= EPS_GEOM => {
                let kept = chords.last_mut().unwrap();
                if c > *kept {
                    *kept = c;
                }
            }
            _ => {
                xs.push(x);
                chords.push(c);
            }
        }
    }
    let polygon = polygon_from_chords(&xs, &chords)?;
    Ok(SymmetrizedPolygon {
        polygon,
        breakpoints: xs,
    })
}

/// Assembles the x-axis-symmetric polygon with the given chord length at
/// each breakpoint: bottom chain left to right, then top chain right to
/// left. A vanishing chord at either end is a tip shared by both chains;
/// a vanishing chord in the interior pinches the body.
fn polygon_from_chords(xs: &[f64], chords: &[f64]) -> Result<ConvexPolygon, Error> {
    debug_assert_eq!(xs.len(), chords.len());
    let n = xs.len();
    if n < 2 {
        return Err(Error::DegenerateBody);
    }
    let mut vertices = Vec::with_capacity(2 * n);
    if chords[0] <= EPS_GEOM {
        vertices.push(Point::new(xs[0], 0.0));
    }
    for i in 0..n {
        if chords[i] > EPS_GEOM {
            vertices.push(Point::new(xs[i], -0.5 * chords[i]));
        } else if i != 0 && i != n - 1 {
            return Err(Error::DegenerateBody);
        }
    }
    if chords[n - 1] <= EPS_GEOM {
        vertices.push(Point::new(xs[n - 1], 0.0));
    }
    for i in (0..n).rev() {
        if chords[i] > EPS_GEOM {
            vertices.push(Point::new(xs[i], 0.5 * chords[i]));
        }
    }
    ConvexPolygon::new(vertices).map_err(|_| Error::DegenerateBody)
}
