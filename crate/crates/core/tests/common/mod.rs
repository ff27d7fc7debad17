//! Seeded random bodies and placement sampling shared by the integration
//! tests. Everything is deterministic given the seed.
//!
//! Not every test target uses every helper.
#![allow(dead_code)]

use latcover::geom::{ConvexPolygon, Point};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Monotone-chain convex hull, dropping collinear points so the result is
/// strictly convex.
pub fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup_by(|a, b| (*a - *b).norm() < 1e-12);
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: Point, a: Point, b: Point| (a - o).cross(b - o);
    let chain = |iter: &mut dyn Iterator<Item = Point>| {
        let mut out: Vec<Point> = Vec::new();
        for p in iter {
            while out.len() >= 2 && cross(out[out.len() - 2], out[out.len() - 1], p) <= 1e-12 {
                out.pop();
            }
            out.push(p);
        }
        out.pop();
        out
    };
    let mut hull = chain(&mut pts.iter().copied());
    hull.extend(chain(&mut pts.iter().rev().copied()));
    hull
}

/// Random strictly convex polygon in general position, area at least 0.1.
pub fn random_convex_polygon(rng: &mut ChaCha8Rng) -> ConvexPolygon {
    loop {
        let n = rng.gen_range(6..25);
        let cx = rng.gen_range(-1.0..1.0);
        let cy = rng.gen_range(-1.0..1.0);
        let rx = rng.gen_range(0.4..1.5);
        let ry = rng.gen_range(0.4..1.5);
        let pts: Vec<Point> = (0..n)
            .map(|_| {
                Point::new(cx + rx * rng.gen_range(-1.0..1.0), cy + ry * rng.gen_range(-1.0..1.0))
            })
            .collect();
        let hull = convex_hull(pts);
        if hull.len() < 4 {
            continue;
        }
        if let Ok(k) = ConvexPolygon::new(hull) {
            if k.area() > 0.1 {
                return k;
            }
        }
    }
}

/// Random origin-symmetric strictly convex polygon with inradius at least
/// 0.25 and circumradius at most about 1.4.
pub fn random_symmetric_polygon(rng: &mut ChaCha8Rng) -> ConvexPolygon {
    loop {
        let m = rng.gen_range(3..9);
        let mut pts = Vec::with_capacity(2 * m);
        for _ in 0..m {
            let a = rng.gen_range(0.0..TAU);
            let r = rng.gen_range(0.5..1.4);
            let p = Point::new(r * a.cos(), r * a.sin());
            pts.push(p);
            pts.push(-p);
        }
        let hull = convex_hull(pts);
        if hull.len() < 4 {
            continue;
        }
        if let Ok(k) = ConvexPolygon::new(hull) {
            if k.is_origin_symmetric() && k.inradius().map(|r| r > 0.25).unwrap_or(false) {
                return k;
            }
        }
    }
}

/// Random polygon symmetric about both coordinate axes.
pub fn random_doubly_symmetric_polygon(rng: &mut ChaCha8Rng) -> ConvexPolygon {
    loop {
        let m = rng.gen_range(2..7);
        let mut pts = Vec::with_capacity(4 * m);
        for _ in 0..m {
            let x = rng.gen_range(0.1..1.3);
            let y = rng.gen_range(0.1..1.3);
            pts.push(Point::new(x, y));
            pts.push(Point::new(-x, y));
            pts.push(Point::new(x, -y));
            pts.push(Point::new(-x, -y));
        }
        let hull = convex_hull(pts);
        if hull.len() < 4 {
            continue;
        }
        if let Ok(k) = ConvexPolygon::new(hull) {
            if k.is_doubly_symmetric() && k.inradius().map(|r| r > 0.2).unwrap_or(false) {
                return k;
            }
        }
    }
}

/// Inscribed n-gon of the ellipse with the given semi axes, rotated by phi.
pub fn ellipse_polygon(alpha: f64, beta: f64, phi: f64, n: usize) -> ConvexPolygon {
    let (c, s) = (phi.cos(), phi.sin());
    ConvexPolygon::new(
        (0..n)
            .map(|k| {
                let t = TAU * k as f64 / n as f64;
                let (x, y) = (alpha * t.cos(), beta * t.sin());
                Point::new(c * x - s * y, s * x + c * y)
            })
            .collect(),
    )
    .expect("ellipse polygon is convex")
}

/// Triangle with side lengths a, b, c (a <= b <= c), centered at its
/// centroid, longest side parallel to the x axis.
pub fn triangle_polygon(a: f64, b: f64, c: f64) -> ConvexPolygon {
    let x = (b * b + c * c - a * a) / (2.0 * c);
    let y = (b * b - x * x).max(0.0).sqrt();
    let verts = [Point::new(0.0, 0.0), Point::new(c, 0.0), Point::new(x, y)];
    let centroid = Point::new((verts[0].x + verts[1].x + verts[2].x) / 3.0, y / 3.0);
    ConvexPolygon::new(verts.iter().map(|v| *v - centroid).collect()).expect("valid triangle")
}

/// Parallelogram with distances a and b between its two pairs of opposite
/// sides and interior angle gamma, centered at the origin.
pub fn parallelogram_polygon(a: f64, b: f64, gamma: f64) -> ConvexPolygon {
    let sg = gamma.sin();
    let u = Point::new(b / sg, 0.0);
    let v = Point::new(a / sg * gamma.cos(), a / sg * sg);
    let h = Point::new((u.x + v.x) / 2.0, (u.y + v.y) / 2.0);
    ConvexPolygon::new(vec![
        Point::new(-h.x, -h.y),
        Point::new(u.x - h.x, u.y - h.y),
        Point::new(u.x + v.x - h.x, u.y + v.y - h.y),
        Point::new(v.x - h.x, v.y - h.y),
    ])
    .expect("valid parallelogram")
}

/// One random placement: a rotation and a translation of the unit cell.
/// Mixes uniform placements with strip placements that rest an edge just
/// above a lattice line, where lattice-free placements of near-critical
/// bodies concentrate.
pub fn sample_placement(rng: &mut ChaCha8Rng, body: &ConvexPolygon) -> ConvexPolygon {
    let mode = rng.gen_range(0u32..10);
    if mode < 4 {
        let theta = rng.gen_range(0.0..TAU);
        let t = Point::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        return body.rotate(theta).translate(t);
    }
    if mode < 6 {
        // random rotation, translation concentrated near the cell center
        let theta = rng.gen_range(0.0..TAU);
        let t = Point::new(rng.gen_range(0.3..0.7), rng.gen_range(0.3..0.7));
        return body.rotate(theta).translate(t);
    }
    // strip placement: put a random edge just above a lattice line
    let verts = body.vertices();
    let i = rng.gen_range(0..verts.len());
    let e = verts[(i + 1) % verts.len()] - verts[i];
    let jitter = if mode < 8 { 0.0 } else { rng.gen_range(-0.03..0.03) };
    let theta = -e.y.atan2(e.x) + jitter;
    let rotated = body.rotate(theta);
    let (lo, _) = rotated.bbox();
    let lift = rng.gen_range(1e-4..0.12);
    let t = Point::new(rng.gen_range(0.0..1.0), -lo.y + lift);
    rotated.translate(t)
}
