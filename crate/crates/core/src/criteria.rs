//! Closed-form critical scales, classical covering criteria, and the
//! inequality battery backing the regular-polygon results.
//!
//! The critical scale Z(K) of a body K is the least r such that rK
//! contains a lattice point in every position (every rotation and
//! translation). For regular polygons with 4n, 6, or 10 sides Z has a
//! closed form; the 6- and 10-gon values hinge on diagonal section
//! functions of the Steiner symmetral whose extremality is guarded by the
//! inequalities in [`verify_appendix`].

use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

use crate::error::Error;
use crate::math;

const SQRT2_2: f64 = SQRT_2 / 2.0;
/// Slack accepted on interval endpoints of the diagonal section functions.
const RANGE_SLACK: f64 = 1e-12;

fn sq(x: f64) -> f64 {
    x * x
}

fn check_range(theta: f64, lo: f64, hi: f64) -> Result<(), Error> {
    if !theta.is_finite() || theta < lo - RANGE_SLACK || theta > hi + RANGE_SLACK {
        return Err(Error::ThetaOutOfRange { theta, lo, hi });
    }
    Ok(())
}

/// Critical scale of the regular polygon with 4n sides: the polygon covers
/// in every position exactly when its inradius reaches √2/2, so
/// Z = (√2/2) / cos(π/(4n)).
pub fn z_regular_4n(n: u32) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("side count 4n requires n >= 1"));
    }
    Ok(SQRT2_2 / math::cos(PI / (4.0 * n as f64)))
}

/// Critical scale of the regular hexagon, (3 + √3)/6 ≈ 0.788675.
pub fn z_hexagon() -> f64 {
    (3.0 + math::sqrt(3.0)) / 6.0
}

/// Critical scale of the regular decagon, ≈ 0.734342. The worst rotation
/// is the vertex-on-axis one (θ = 0), where the diagonal section function
/// attains its minimum.
pub fn z_decagon() -> f64 {
    1.0 / (2.0 * decagon_diagonal(0.0).expect("0 is in range"))
}

/// Angle at which the diagonal x = y leaves the first edge of the rotated
/// hexagon's Steiner symmetral for the second, arcsin(3^(1/4)/2) - π/6.
pub fn hexagon_diagonal_split() -> f64 {
    math::asin(math::sqrt(math::sqrt(3.0)) / 2.0) - PI / 6.0
}

/// Diagonal section function of the rotated hexagon on the first edge:
/// (f, f) with f = hexagon_diagonal_edge1(θ) lies on the boundary of the
/// Steiner symmetral of the hexagon rotated by θ. Valid on [0, split].
pub fn hexagon_diagonal_edge1(theta: f64) -> Result<f64, Error> {
    check_range(theta, 0.0, hexagon_diagonal_split())?;
    let c = math::cos(theta);
    let s6 = math::sin(theta + PI / 6.0);
    let primary = math::sin(PI / 3.0) * c / (math::sin(PI / 3.0) - 2.0 * sq(s6) + 2.0 * c * s6);
    let reduced = math::sqrt(3.0) * c / (math::sqrt(3.0) - 3.0 + 4.0 * c * c);
    debug_assert!((primary - reduced).abs() <= 1e-12);
    Ok(primary)
}

/// Diagonal section function of the rotated hexagon on the second edge,
/// valid on [split, π/6]. Continuous with edge 1 at the split angle.
pub fn hexagon_diagonal_edge2(theta: f64) -> Result<f64, Error> {
    check_range(theta, hexagon_diagonal_split(), PI / 6.0)?;
    let r3 = math::sqrt(3.0);
    let s6 = math::sin(theta + PI / 6.0);
    let primary = (2.0 * r3 * s6 + r3 * math::cos(theta + PI / 3.0))
        / (4.0 * math::cos(theta) * s6 + r3);
    let s3 = math::sin(theta + PI / 3.0);
    let reduced = 3.0 * s3 / (4.0 * sq(s3) + r3 - 1.0);
    debug_assert!((primary - reduced).abs() <= 1e-12);
    Ok(primary)
}

/// Piecewise diagonal section function of the rotated hexagon on
/// [0, π/6]. Its minimum over the interval, attained at both endpoints,
/// is 1/(2 Z(hexagon)).
pub fn hexagon_diagonal(theta: f64) -> Result<f64, Error> {
    check_range(theta, 0.0, PI / 6.0)?;
    if theta <= hexagon_diagonal_split() {
        hexagon_diagonal_edge1(theta)
    } else {
        hexagon_diagonal_edge2(theta)
    }
}

/// Diagonal section function of the rotated decagon on [0, π/20]. The
/// debug build checks that (f, f) stays collinear with the symmetral edge
/// it is derived from.
pub fn decagon_diagonal(theta: f64) -> Result<f64, Error> {
    check_range(theta, 0.0, PI / 20.0)?;
    let c = math::cos(theta);
    let t = 2.0 * math::sin(3.0 * PI / 10.0) * math::cos(PI / 10.0) * c
        / (2.0 * c * c + math::sin(3.0 * PI / 5.0) - math::cos(3.0 * PI / 5.0) - 1.0);
    #[cfg(debug_assertions)]
    {
        let a = math::sin(3.0 * PI / 10.0) * math::sin(2.0 * PI / 5.0)
            / math::sin(3.0 * PI / 10.0 + theta);
        let b = math::cos(theta - 2.0 * PI / 5.0);
        let cc = math::sin(PI / 5.0) * math::sin(3.0 * PI / 10.0)
            / math::sin(3.0 * PI / 10.0 - theta);
        let d = math::cos(theta + PI / 5.0);
        let residual = ((t - a) * (d - b) - (cc - a) * (t - b)).abs();
        debug_assert!(residual <= 1e-10, "collinearity residual {residual}");
    }
    Ok(t)
}

/// Quadric criterion: the ellipsoid with these semi axes contains a
/// lattice point in every position exactly when Σ 1/αᵢ² ≤ 4.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipsoidSpec {
    /// Semi axes, validated positive and finite by [`EllipsoidSpec::new`].
    pub semi_axes: Vec<f64>,
}

impl EllipsoidSpec {
    pub fn new(semi_axes: Vec<f64>) -> Result<Self, Error> {
        if semi_axes.is_empty() {
            return Err(Error::InvalidParameter("an ellipsoid needs at least one semi axis"));
        }
        if semi_axes.iter().any(|a| !a.is_finite() || *a <= 0.0) {
            return Err(Error::InvalidParameter("semi axes must be positive and finite"));
        }
        Ok(EllipsoidSpec { semi_axes })
    }

    /// Signed slack of the criterion, (4 - Σ 1/αᵢ²)/4.
    pub fn margin(&self) -> f64 {
        let sum: f64 = self.semi_axes.iter().map(|a| 1.0 / (a * a)).sum();
        (4.0 - sum) / 4.0
    }

    pub fn covers(&self) -> bool {
        self.margin() >= 0.0
    }
}

/// Triangle criterion: with sides a ≤ b ≤ c and area Δ, the triangle
/// contains a lattice point in every position exactly when
/// 2Δ(c - 1) ≥ c².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleSpec {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleSpec {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, Error> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a <= 0.0 {
            return Err(Error::InvalidParameter("triangle sides must be positive and finite"));
        }
        if !(a <= b && b <= c) {
            return Err(Error::InvalidParameter("triangle sides must satisfy a <= b <= c"));
        }
        if a + b <= c {
            return Err(Error::InvalidParameter("triangle sides violate the triangle inequality"));
        }
        Ok(TriangleSpec { a, b, c })
    }

    /// Area by Heron's formula.
    pub fn area(&self) -> f64 {
        let s = 0.5 * (self.a + self.b + self.c);
        math::sqrt(s * (s - self.a) * (s - self.b) * (s - self.c))
    }

    /// Signed slack, (2Δ(c - 1) - c²)/c².
    pub fn margin(&self) -> f64 {
        let c = self.c;
        (2.0 * self.area() * (c - 1.0) - c * c) / (c * c)
    }

    pub fn covers(&self) -> bool {
        self.margin() >= 0.0
    }
}

/// Parallelogram criterion: a ≤ b are the distances between the two pairs
/// of opposite sides and γ ∈ (0, π/2] the interior angle. The body
/// contains a lattice point in every position exactly when a ≥ 1 and
/// additionally b ≥ √2, or else α + β + γ ≤ π/2 with α = arccos(a/√2),
/// β = arccos(b/√2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParallelogramSpec {
    pub a: f64,
    pub b: f64,
    pub gamma: f64,
}

impl ParallelogramSpec {
    pub fn new(a: f64, b: f64, gamma: f64) -> Result<Self, Error> {
        if !(a.is_finite() && b.is_finite() && gamma.is_finite()) || a <= 0.0 {
            return Err(Error::InvalidParameter(
                "parallelogram distances must be positive and finite",
            ));
        }
        if a > b {
            return Err(Error::InvalidParameter("parallelogram distances must satisfy a <= b"));
        }
        if gamma <= 0.0 || gamma > PI / 2.0 {
            return Err(Error::InvalidParameter(
                "parallelogram angle must lie in (0, pi/2]",
            ));
        }
        Ok(ParallelogramSpec { a, b, gamma })
    }

    pub fn covers(&self) -> bool {
        if self.a < 1.0 {
            return false;
        }
        if self.b >= SQRT_2 {
            return true;
        }
        let alpha = math::acos(self.a / SQRT_2);
        let beta = math::acos(self.b / SQRT_2);
        alpha + beta + self.gamma <= PI / 2.0
    }

    /// Signed slack agreeing with [`ParallelogramSpec::covers`] in sign:
    /// min(a - 1, max(b - √2, π/2 - (α + β + γ))), with the angle term
    /// dropped once b exceeds √2.
    pub fn margin(&self) -> f64 {
        let side = self.a - 1.0;
        let diag = self.b - SQRT_2;
        let branch = if self.b <= SQRT_2 {
            let alpha = math::acos(self.a / SQRT_2);
            let beta = math::acos(self.b / SQRT_2);
            let angles = PI / 2.0 - (alpha + beta + self.gamma);
            if angles > diag {
                angles
            } else {
                diag
            }
        } else {
            diag
        };
        if side < branch {
            side
        } else {
            branch
        }
    }
}

/// Labels for the inequalities underpinning the hexagon and decagon
/// critical scales.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropositionId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A2Monotone,
    A3Monotone,
    A4Monotone,
}

impl PropositionId {
    pub const ALL: [PropositionId; 11] = [
        PropositionId::A1,
        PropositionId::A2,
        PropositionId::A3,
        PropositionId::A4,
        PropositionId::A5,
        PropositionId::A6,
        PropositionId::A7,
        PropositionId::A8,
        PropositionId::A2Monotone,
        PropositionId::A3Monotone,
        PropositionId::A4Monotone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropositionId::A1 => "A1",
            PropositionId::A2 => "A2",
            PropositionId::A3 => "A3",
            PropositionId::A4 => "A4",
            PropositionId::A5 => "A5",
            PropositionId::A6 => "A6",
            PropositionId::A7 => "A7",
            PropositionId::A8 => "A8",
            PropositionId::A2Monotone => "A2-monotone",
            PropositionId::A3Monotone => "A3-monotone",
            PropositionId::A4Monotone => "A4-monotone",
        }
    }
}

/// Worst signed margin of an inequality over its sample grid. The
/// inequality is confirmed (numerically) when the margin stays strictly
/// positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub id: PropositionId,
    pub grid: usize,
    pub worst_margin: f64,
    pub passed: bool,
}

/// Evaluates every inequality in [`PropositionId::ALL`] on grids of the
/// given size, in that order. The extremality inequalities A2 to A4 hold
/// with equality at one interval endpoint; that anchor point is excluded
/// from their grids and covered instead by the monotonicity checks, whose
/// margin is the smallest directed step difference.
pub fn verify_appendix(grid: usize) -> Result<Vec<InequalityReport>, Error> {
    if grid < 100 {
        return Err(Error::InvalidParameter("appendix grid must be at least 100"));
    }
    let split = hexagon_diagonal_split();
    let s0 = hexagon_diagonal_edge1(0.0)?;
    let t_end = hexagon_diagonal_edge2(PI / 6.0)?;
    let d0 = decagon_diagonal(0.0)?;

    let mut out = Vec::with_capacity(PropositionId::ALL.len());
    let mut push = |id: PropositionId, worst: f64| {
        out.push(InequalityReport {
            id,
            grid,
            worst_margin: worst,
            passed: worst > 0.0,
        });
    };

    let at = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / grid as f64;
    let min_over = |lo: f64, hi: f64, range: core::ops::RangeInclusive<usize>, f: &dyn Fn(f64) -> f64| {
        let mut worst = f64::INFINITY;
        for i in range {
            let m = f(at(lo, hi, i));
            if m < worst {
                worst = m;
            }
        }
        worst
    };

    push(
        PropositionId::A1,
        min_over(0.0, PI / 12.0, 0..=grid, &|t| {
            math::sqrt(3.0) / (2.0 * math::cos(t)) - math::cos(t + PI / 3.0)
        }),
    );
    push(
        PropositionId::A2,
        min_over(0.0, split, 1..=grid, &|t| {
            hexagon_diagonal_edge1(t).expect("in range") - s0
        }),
    );
    push(
        PropositionId::A3,
        min_over(split, PI / 6.0, 0..=grid - 1, &|t| {
            hexagon_diagonal_edge2(t).expect("in range") - t_end
        }),
    );
    push(
        PropositionId::A4,
        min_over(0.0, PI / 20.0, 1..=grid, &|t| {
            decagon_diagonal(t).expect("in range") - d0
        }),
    );
    push(
        PropositionId::A5,
        min_over(0.0, PI / 20.0, 0..=grid, &|t| {
            math::cos(t - PI / 5.0)
                - math::sin(PI / 10.0) * math::sin(PI / 5.0) / math::sin(PI / 10.0 + t)
        }),
    );
    push(
        PropositionId::A6,
        min_over(0.0, PI / 20.0, 0..=grid, &|t| {
            math::cos(t + PI / 5.0)
                - math::sin(PI / 5.0) * math::sin(3.0 * PI / 10.0) / math::sin(3.0 * PI / 10.0 - t)
        }),
    );
    push(
        PropositionId::A7,
        min_over(0.0, PI / 20.0, 0..=grid, &|t| {
            math::sin(3.0 * PI / 10.0) * math::sin(2.0 * PI / 5.0) / math::sin(3.0 * PI / 10.0 + t)
                - math::cos(t - 2.0 * PI / 5.0)
        }),
    );
    push(
        PropositionId::A8,
        min_over(0.0, PI / 20.0, 0..=grid, &|t| {
            math::sin(2.0 * PI / 5.0) / math::cos(t) - math::cos(t + 2.0 * PI / 5.0)
        }),
    );

    let min_step = |lo: f64, hi: f64, f: &dyn Fn(f64) -> f64, sign: f64| {
        let mut worst = f64::INFINITY;
        let mut prev = f(lo);
        for i in 1..=grid {
            let next = f(at(lo, hi, i));
            let step = sign * (next - prev);
            if step < worst {
                worst = step;
            }
            prev = next;
        }
        worst
    };

    push(
        PropositionId::A2Monotone,
        min_step(0.0, split, &|t| hexagon_diagonal_edge1(t).expect("in range"), 1.0),
    );
    push(
        PropositionId::A3Monotone,
        min_step(split, PI / 6.0, &|t| hexagon_diagonal_edge2(t).expect("in range"), -1.0),
    );
    push(
        PropositionId::A4Monotone,
        min_step(0.0, PI / 20.0, &|t| decagon_diagonal(t).expect("in range"), 1.0),
    );

    Ok(out)
}
