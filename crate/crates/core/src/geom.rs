//! Convex polygon kernel: points, validated polygons, gauge evaluation,
//! containment and symmetry predicates.
//!
//! All tolerances are absolute in lattice units; the bodies handled by this
//! crate have diameter of order 1.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::math;

/// Absolute tolerance, in lattice units, for the geometric predicates.
pub const EPS_GEOM: f64 = 1e-9;

/// Point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        math::sqrt(self.x * self.x + self.y * self.y)
    }

    pub fn rotated(self, theta: f64) -> Point {
        let (s, c) = (math::sin(theta), math::cos(theta));
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Parameters of a regular polygon: `n` vertices on a circle of radius
/// `scale`, the first vertex at angle `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularPolygonSpec {
    pub n: u32,
    pub scale: f64,
    pub theta: f64,
}

impl RegularPolygonSpec {
    pub fn new(n: u32, scale: f64, theta: f64) -> Result<RegularPolygonSpec, Error> {
        if n < 3 {
            return Err(Error::InvalidParameter(
                "a regular polygon needs at least 3 vertices",
            ));
        }
        if !scale.is_finite() || scale <= 0.0 {
            return Err(Error::InvalidParameter("scale must be positive and finite"));
        }
        if !theta.is_finite() {
            return Err(Error::InvalidParameter("theta must be finite"));
        }
        Ok(RegularPolygonSpec { n, scale, theta })
    }
}

/// Strictly convex polygon with vertices in counterclockwise order.
///
/// Validation rejects chains with fewer than three vertices, non-finite or
/// duplicate vertices, right turns or collinear turns (within [`EPS_GEOM`]),
/// and chains winding around more than once. Instances are immutable; every
/// operation returns a new polygon.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

fn validate(vertices: &[Point], eps: f64) -> Result<(), Error> {
    if vertices.len() < 3 {
        return Err(Error::TooFewVertices {
            got: vertices.len(),
        });
    }
    for v in vertices {
        if !v.is_finite() {
            return Err(Error::NonFiniteCoordinate);
        }
    }
    let n = vertices.len();
    for i in 0..n {
        if (vertices[(i + 1) % n] - vertices[i]).norm() <= eps {
            return Err(Error::DuplicateVertex { index: i });
        }
    }
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = vertices[(i + 2) % n];
        if (b - a).cross(c - b) <= eps {
            return Err(Error::NotConvex { index: (i + 1) % n });
        }
    }
    // All turns are left turns; ensure the edge directions wrap around
    // exactly once (rules out star polygons traversed with winding > 1).
    let mut wraps = 0usize;
    let mut prev = {
        let e = vertices[1] - vertices[0];
        math::atan2(e.y, e.x)
    };
    for i in 1..=n {
        let e = vertices[(i + 1) % n] - vertices[i % n];
        let dir = math::atan2(e.y, e.x);
        if dir < prev {
            wraps += 1;
        }
        prev = dir;
    }
    if wraps != 1 {
        return Err(Error::NotConvex { index: 0 });
    }
    Ok(())
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<ConvexPolygon, Error> {
        validate(&vertices, EPS_GEOM)?;
        Ok(ConvexPolygon { vertices })
    }

    /// Constructor for vertex chains produced by operations that preserve
    /// validity (rotation, scaling, reflection); checked only in debug builds
    /// at a relaxed tolerance, since rigid motions perturb cross products by
    /// rounding only.
    pub(crate) fn from_vertices_unchecked(vertices: Vec<Point>) -> ConvexPolygon {
        debug_assert!(validate(&vertices, EPS_GEOM / 4.0).is_ok());
        ConvexPolygon { vertices }
    }

    pub fn regular(spec: RegularPolygonSpec) -> ConvexPolygon {
        let n = spec.n as usize;
        let mut vertices = Vec::with_capacity(n);
        for k in 0..n {
            let ang = spec.theta + 2.0 * PI * k as f64 / n as f64;
            vertices.push(Point::new(
                spec.scale * math::cos(ang),
                spec.scale * math::sin(ang),
            ));
        }
        ConvexPolygon::from_vertices_unchecked(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn rotate(&self, theta: f64) -> ConvexPolygon {
        let (s, c) = (math::sin(theta), math::cos(theta));
        ConvexPolygon::from_vertices_unchecked(
            self.vertices
                .iter()
                .map(|v| Point::new(c * v.x - s * v.y, s * v.x + c * v.y))
                .collect(),
        )
    }

    pub fn translate(&self, t: Point) -> ConvexPolygon {
        ConvexPolygon::from_vertices_unchecked(self.vertices.iter().map(|&v| v + t).collect())
    }

    /// Scales about the origin by a positive factor.
    pub fn scale(&self, factor: f64) -> ConvexPolygon {
        debug_assert!(factor.is_finite() && factor > 0.0);
        ConvexPolygon::from_vertices_unchecked(
            self.vertices.iter().map(|&v| v * factor).collect(),
        )
    }

    /// Point reflection through the origin, `-K`. This is the rotation by
    /// half a turn, so the chain stays counterclockwise.
    pub fn reflect_origin(&self) -> ConvexPolygon {
        ConvexPolygon::from_vertices_unchecked(self.vertices.iter().map(|&v| -v).collect())
    }

    /// Reflection through the diagonal `{x = y}` (coordinate swap).
    pub fn mirror_diag(&self) -> ConvexPolygon {
        ConvexPolygon::from_vertices_unchecked(
            self.vertices
                .iter()
                .rev()
                .map(|v| Point::new(v.y, v.x))
                .collect(),
        )
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut twice = 0.0;
        for i in 0..n {
            twice += self.vertices[i].cross(self.vertices[(i + 1) % n]);
        }
        0.5 * twice
    }

    /// Axis-aligned bounding box as `(min, max)` corners.
    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo = Point::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }

    /// True when the origin lies strictly inside (distance above tolerance
    /// from every edge line).
    pub fn origin_interior(&self) -> bool {
        self.edges().all(|(a, b)| {
            let e = b - a;
            e.cross(-a) > EPS_GEOM * e.norm()
        })
    }

    /// Containment with boundary tolerance: accepts points up to [`EPS_GEOM`]
    /// outside an edge line.
    pub fn contains_point(&self, p: Point) -> bool {
        self.edges().all(|(a, b)| {
            let e = b - a;
            e.cross(p - a) >= -EPS_GEOM * e.norm()
        })
    }

    /// True when every vertex of `other` lies in `self` (sufficient for
    /// polygon inclusion by convexity).
    pub fn contains_polygon(&self, other: &ConvexPolygon) -> bool {
        other.vertices.iter().all(|&v| self.contains_point(v))
    }

    /// Distance from the origin to the nearest edge line; requires the
    /// origin strictly inside.
    pub fn inradius(&self) -> Result<f64, Error> {
        if !self.origin_interior() {
            return Err(Error::OriginNotInterior);
        }
        let mut r = f64::INFINITY;
        for (a, b) in self.edges() {
            let e = b - a;
            let d = e.cross(-a) / e.norm();
            r = r.min(d);
        }
        Ok(r)
    }

    /// Gauge (Minkowski functional) `min { t > 0 : v ∈ tK }`; requires the
    /// origin strictly inside. Exact for polygons: the gauge is the maximum
    /// of the supporting edge functionals, attained on the edge crossed by
    /// the ray from the origin through `v`.
    pub fn gauge(&self, v: Point) -> Result<f64, Error> {
        Ok(GaugeFn::new(self)?.eval(v))
    }

    /// True when `K = -K`: the antipode of each vertex is the vertex half a
    /// cycle further along the chain.
    pub fn is_origin_symmetric(&self) -> bool {
        let n = self.vertices.len();
        if n % 2 != 0 {
            return false;
        }
        let h = n / 2;
        (0..h).all(|i| (self.vertices[i] + self.vertices[i + h]).norm() <= EPS_GEOM)
    }

    /// True when `K` is symmetric about both coordinate axes.
    pub fn is_doubly_symmetric(&self) -> bool {
        self.reflection_symmetric(|p| Point::new(p.x, -p.y))
            && self.reflection_symmetric(|p| Point::new(-p.x, p.y))
    }

    fn reflection_symmetric(&self, f: impl Fn(Point) -> Point) -> bool {
        let reflected: Vec<Point> = self.vertices.iter().map(|&v| f(v)).collect();
        set_equals(&self.vertices, &reflected, EPS_GEOM)
    }

    /// True when some reflection fixing `Z^2` (either axis or either
    /// diagonal) maps the vertex set to itself.
    pub(crate) fn has_lattice_mirror_symmetry(&self) -> bool {
        self.reflection_symmetric(|p| Point::new(p.x, -p.y))
            || self.reflection_symmetric(|p| Point::new(-p.x, p.y))
            || self.reflection_symmetric(|p| Point::new(p.y, p.x))
            || self.reflection_symmetric(|p| Point::new(-p.y, -p.x))
    }

    /// Largest `d` such that rotation by `2π/d` maps the vertex set to
    /// itself; always a divisor of the vertex count, and at least 1.
    pub fn rotational_symmetry_order(&self) -> u32 {
        let n = self.vertices.len();
        for d in (2..=n).rev() {
            if n % d != 0 {
                continue;
            }
            let shift = n / d;
            let ang = 2.0 * PI / d as f64;
            let (s, c) = (math::sin(ang), math::cos(ang));
            let ok = (0..n).all(|i| {
                let v = self.vertices[i];
                let r = Point::new(c * v.x - s * v.y, s * v.x + c * v.y);
                (r - self.vertices[(i + shift) % n]).norm() <= EPS_GEOM
            });
            if ok {
                return d as u32;
            }
        }
        1
    }
}

/// Convenience constructor for `regular` with inline parameters.
pub fn regular_polygon(n: u32, scale: f64, theta: f64) -> Result<ConvexPolygon, Error> {
    Ok(ConvexPolygon::regular(RegularPolygonSpec::new(
        n, scale, theta,
    )?))
}

/// True when both polygons have the same vertices up to `tol`, in any order.
pub fn same_vertex_set(a: &ConvexPolygon, b: &ConvexPolygon, tol: f64) -> bool {
    set_equals(a.vertices(), b.vertices(), tol)
}

fn set_equals(a: &[Point], b: &[Point], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = alloc::vec![false; b.len()];
    'outer: for &va in a {
        for (j, &vb) in b.iter().enumerate() {
            if !used[j] && (va - vb).norm() <= tol {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Precomputed gauge evaluator for a polygon with the origin in its
/// interior. With edge lines `n_i · x = c_i`, `c_i > 0`, the gauge is
/// `max_i (n_i · v) / c_i`.
#[derive(Debug, Clone)]
pub struct GaugeFn {
    coeffs: Vec<(f64, f64)>,
    r_max: f64,
}

impl GaugeFn {
    pub fn new(k: &ConvexPolygon) -> Result<GaugeFn, Error> {
        if !k.origin_interior() {
            return Err(Error::OriginNotInterior);
        }
        let coeffs = k
            .edges()
            .map(|(a, b)| {
                let e = b - a;
                let n = Point::new(e.y, -e.x); // outward normal for ccw chains
                let c = n.dot(a);
                (n.x / c, n.y / c)
            })
            .collect();
        let r_max = k
            .vertices()
            .iter()
            .map(|v| v.norm())
            .fold(0.0_f64, f64::max);
        Ok(GaugeFn { coeffs, r_max })
    }

    pub fn eval(&self, v: Point) -> f64 {
        let mut g = 0.0;
        for &(ax, ay) in &self.coeffs {
            let t = ax * v.x + ay * v.y;
            if t > g {
                g = t;
            }
        }
        g
    }

    /// Largest vertex norm of the underlying polygon. Since `K` is contained
    /// in the disc of this radius, `eval(v) >= |v| / max_vertex_norm()`.
    pub fn max_vertex_norm(&self) -> f64 {
        self.r_max
    }
}
