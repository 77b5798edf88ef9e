//! Trigonometry of the two-dimensional model plane of constant curvature k.
//!
//! Side and angle solvers for comparison triangles, valid for any real k.
//! All formulas are written in factored half-angle form, e.g.
//! `sin^2(a/2) = sin((a+b-c)/2) sin((a-b+c)/2) / ...`, which avoids the
//! cancellation of the raw law of cosines near degenerate triangles. The
//! k -> 0 limits of the curved formulas agree with the Euclidean ones to
//! machine precision, with an explicit crossover for extremely small |k|.

use crate::error::{GeomError, Result};

/// Kernel-wide tolerance for analytic trigonometry.
pub const ANGLE_TOL: f64 = 1e-9;

/// Rounding-noise budget: factor overshoots below this are clamped to the
/// valid range, larger ones are rejected as genuinely invalid input.
pub const CLAMP_TOL: f64 = 1e-12;

/// Below this value of `sqrt(|k|) * scale` the curvature correction is under
/// 1e-16 relative and the Euclidean formulas are used verbatim.
const FLAT_CROSSOVER: f64 = 1e-8;

/// Lower curvature bound; the curvature of the comparison plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvatureBound {
    pub k: f64,
}

impl CurvatureBound {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(GeomError::OutOfRange { what: "curvature", value: k });
        }
        Ok(CurvatureBound { k })
    }

    /// Maximal side length pi/sqrt(k), or infinity for k <= 0.
    pub fn side_limit(&self) -> f64 {
        if self.k > 0.0 {
            std::f64::consts::PI / self.k.sqrt()
        } else {
            f64::INFINITY
        }
    }
}

/// Side lengths of a comparison triangle: `a` opposite the apex vertex,
/// `b` and `c` adjacent to it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComparisonTriangle {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ComparisonTriangle {
    /// Checks nonnegativity, the triangle inequality and, for k > 0, the
    /// side and perimeter bounds of the sphere of curvature k.
    pub fn validate(&self, k: CurvatureBound) -> Result<()> {
        let (a, b, c) = (self.a, self.b, self.c);
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a < 0.0 || b < 0.0 || c < 0.0 {
            return Err(GeomError::InvalidTriangle { a, b, c, k: k.k });
        }
        let scale = a.max(b).max(c).max(1.0);
        let tol = CLAMP_TOL * scale;
        if a > b + c + tol || b > a + c + tol || c > a + b + tol {
            return Err(GeomError::InvalidTriangle { a, b, c, k: k.k });
        }
        if k.k > 0.0 {
            let limit = k.side_limit();
            for side in [a, b, c] {
                if side > limit + tol {
                    return Err(GeomError::SideTooLong { side, limit, k: k.k });
                }
            }
            let perimeter = a + b + c;
            if perimeter > 2.0 * limit + tol {
                return Err(GeomError::PerimeterTooLong { perimeter, limit: 2.0 * limit });
            }
        }
        Ok(())
    }
}

fn check_angle(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha < -CLAMP_TOL || alpha > std::f64::consts::PI + CLAMP_TOL {
        return Err(GeomError::OutOfRange { what: "angle", value: alpha });
    }
    Ok(alpha.clamp(0.0, std::f64::consts::PI))
}

/// Clamps rounding noise in a quantity that is nonnegative for valid input.
fn clamp_factor(x: f64, scale: f64) -> Result<f64> {
    if x < -CLAMP_TOL * scale.max(1.0) {
        Err(GeomError::OutOfRange { what: "triangle factor", value: x })
    } else {
        Ok(x.max(0.0))
    }
}

/// Side opposite `alpha` in the triangle with adjacent sides `b`, `c` in the
/// model plane of curvature `k` (law of cosines, solved for the side).
///
/// Continuous in all arguments; `alpha = 0` gives `|b - c|` and `alpha = pi`
/// gives the geodesic "sum" length (wrapping around the sphere when k > 0
/// and b + c exceeds pi/sqrt(k)).
pub fn side_from_angle(k: CurvatureBound, b: f64, c: f64, alpha: f64) -> Result<f64> {
    let alpha = check_angle(alpha)?;
    if !(b.is_finite() && c.is_finite()) || b < 0.0 || c < 0.0 {
        return Err(GeomError::OutOfRange { what: "side", value: if b < 0.0 { b } else { c } });
    }
    if k.k > 0.0 {
        let limit = k.side_limit();
        for side in [b, c] {
            if side > limit + CLAMP_TOL * limit {
                return Err(GeomError::SideTooLong { side, limit, k: k.k });
            }
        }
    }
    // Exact endpoints. Reproducing fl(|b - c|) and fl(b + c) bitwise here is
    // what makes the comparison-angle round trip exact at alpha in {0, pi}.
    if alpha < 1e-12 {
        return Ok((b - c).abs());
    }
    if alpha > std::f64::consts::PI - 1e-12 {
        return Ok(if k.k > 0.0 {
            let wrap = 2.0 * k.side_limit() - (b + c);
            if wrap < b + c {
                wrap
            } else {
                b + c
            }
        } else {
            b + c
        });
    }
    let (sh, ch) = ((alpha / 2.0).sin(), (alpha / 2.0).cos());
    if k.k > 0.0 {
        let s = k.k.sqrt();
        if s * (b + c) < FLAT_CROSSOVER {
            return Ok(euclidean_side(b, c, sh, ch));
        }
        // sin^2(s a / 2) = sin^2(s(b-c)/2) cos^2(alpha/2) + sin^2(s(b+c)/2) sin^2(alpha/2)
        // and the complementary identity for cos^2; both are sums of
        // nonnegative terms, so there is no cancellation anywhere.
        let (d, t) = ((s * (b - c) / 2.0), (s * (b + c) / 2.0));
        let u = (d.sin() * ch).powi(2) + (t.sin() * sh).powi(2);
        let v = (d.cos() * ch).powi(2) + (t.cos() * sh).powi(2);
        Ok(2.0 / s * u.sqrt().atan2(v.sqrt()))
    } else if k.k < 0.0 {
        let s = (-k.k).sqrt();
        if s * (b + c) < FLAT_CROSSOVER {
            return Ok(euclidean_side(b, c, sh, ch));
        }
        let (d, t) = ((s * (b - c) / 2.0), (s * (b + c) / 2.0));
        let u = (d.sinh() * ch).powi(2) + (t.sinh() * sh).powi(2);
        Ok(2.0 / s * u.sqrt().asinh())
    } else {
        Ok(euclidean_side(b, c, sh, ch))
    }
}

fn euclidean_side(b: f64, c: f64, sin_half: f64, cos_half: f64) -> f64 {
    let x = (b - c) * cos_half;
    let y = (b + c) * sin_half;
    (x * x + y * y).sqrt()
}

/// Comparison angle at the apex: the angle opposite `qr` in the model-plane
/// triangle with sides `pq`, `pr`, `qr`, for curvature `k`.
///
/// Inverse of [`side_from_angle`]. When k > 0 and the perimeter equals
/// 2*pi/sqrt(k) the triangle is degenerate (the vertices lie on a geodesic
/// of length pi/sqrt(k)) and the angle is read off that collinear
/// configuration.
pub fn comparison_angle(k: CurvatureBound, pq: f64, pr: f64, qr: f64) -> Result<f64> {
    let tri = ComparisonTriangle { a: qr, b: pq, c: pr };
    tri.validate(k)?;
    let scale = pq.max(pr).max(qr).max(1.0);
    if pq < CLAMP_TOL * scale || pr < CLAMP_TOL * scale {
        return Err(GeomError::OutOfRange { what: "apex side", value: pq.min(pr) });
    }
    if qr <= ANGLE_TOL * scale * 1e-3 && (pq - pr).abs() <= ANGLE_TOL * scale {
        return Ok(0.0);
    }

    if k.k > 0.0 {
        let s = k.k.sqrt();
        let limit = k.side_limit();
        // Degenerate perimeter: the vertices lie on a geodesic of length
        // pi/sqrt(k) and the angle is read off the collinear configuration.
        let deg = ANGLE_TOL * limit.max(1.0);
        if 2.0 * limit - (pq + pr + qr) <= deg {
            if (pq + qr - pr).abs() <= deg || (pr + qr - pq).abs() <= deg {
                // q or r sits between p and the vertex antipodal to it
                return Ok(0.0);
            }
            return Ok(std::f64::consts::PI);
        }
        if s * (pq + pr + qr) < FLAT_CROSSOVER {
            return euclidean_angle(half_factors(pq, pr, qr), scale);
        }
        let f = |x: f64| (s * x).sin();
        let hf = half_factors(pq, pr, qr);
        let a_num = clamp_factor(f(hf[0]) * f(hf[1]), 1.0)?;
        let b_num = clamp_factor(f(hf[2]) * f(hf[3]), 1.0)?;
        Ok(2.0 * a_num.sqrt().atan2(b_num.sqrt()))
    } else if k.k < 0.0 {
        let s = (-k.k).sqrt();
        if s * (pq + pr + qr) < FLAT_CROSSOVER {
            return euclidean_angle(half_factors(pq, pr, qr), scale);
        }
        let f = |x: f64| (s * x).sinh();
        let hf = half_factors(pq, pr, qr);
        let a_num = clamp_factor(f(hf[0]) * f(hf[1]), scale)?;
        let b_num = clamp_factor(f(hf[2]) * f(hf[3]), scale)?;
        Ok(2.0 * a_num.sqrt().atan2(b_num.sqrt()))
    } else {
        euclidean_angle(half_factors(pq, pr, qr), scale)
    }
}

/// The four half-sum factors of the factored law of cosines.
///
/// The difference factors are computed as `qr - (pr - pq)` rather than
/// `qr + pq - pr`: when `qr` was itself produced as fl(|pq - pr|) the
/// subtraction cancels bitwise and the recovered angle is exactly 0, and
/// symmetrically for fl(pq + pr) and angle pi.
fn half_factors(pq: f64, pr: f64, qr: f64) -> [f64; 4] {
    [
        (qr - (pr - pq)) / 2.0,
        (qr - (pq - pr)) / 2.0,
        ((pq + pr) + qr) / 2.0,
        ((pq + pr) - qr) / 2.0,
    ]
}

fn euclidean_angle(hf: [f64; 4], scale: f64) -> Result<f64> {
    let a_num = clamp_factor(hf[0] * hf[1], scale * scale)?;
    let b_num = clamp_factor(hf[2] * hf[3], scale * scale)?;
    Ok(2.0 * a_num.sqrt().atan2(b_num.sqrt()))
}

/// Tests `cos|eta zeta| >= cos|eta xi| * cos|zeta xi| - tol`, the spherical
/// right-angle bound. Equivalent to asking that the comparison angle at xi
/// in the unit sphere is at most pi/2.
pub fn right_angle_bound_check(eta_zeta: f64, eta_xi: f64, zeta_xi: f64, tol: f64) -> Result<bool> {
    let ez = check_angle(eta_zeta)?;
    let ex = check_angle(eta_xi)?;
    let zx = check_angle(zeta_xi)?;
    Ok(ez.cos() >= ex.cos() * zx.cos() - tol)
}

/// Ordering of the straightened angle against the glued one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HingeRelation {
    StraightNotAbove,
    Equal,
    StraightNotBelow,
}

/// Measured angles of an Alexandrov-lemma configuration.
#[derive(Clone, Copy, Debug)]
pub struct HingeComparison {
    /// Angle of the first glued comparison triangle at the first endpoint,
    /// between the segment back to the hinge and the one to the shared vertex.
    pub glued: f64,
    /// Angle at the same vertex of the straightened comparison triangle.
    pub straight: f64,
    pub relation: HingeRelation,
}

/// Alexandrov's lemma, measured numerically.
///
/// At a hinge vertex three segments of lengths `to_first`, `to_shared`,
/// `to_third` emanate; `split_angles` holds the angles (first, shared) and
/// (shared, third). Two comparison triangles glued along the shared segment
/// are compared with the triangle whose long side straightens the broken
/// path first-hinge-third while the two sides to the shared vertex keep
/// their glued lengths. At the first endpoint the dichotomy holds: when the
/// split angles sum to at most pi the straightened angle is <= the glued
/// one, when they sum to at least pi it is >=, with equality at exactly pi.
pub fn alexandrov_lemma_compare(
    k: CurvatureBound,
    hinge_sides: (f64, f64, f64),
    split_angles: (f64, f64),
) -> Result<HingeComparison> {
    let (to_first, to_shared, to_third) = hinge_sides;
    let a1 = check_angle(split_angles.0)?;
    let a2 = check_angle(split_angles.1)?;
    let first_to_shared = side_from_angle(k, to_first, to_shared, a1)?;
    let third_to_shared = side_from_angle(k, to_third, to_shared, a2)?;
    let glued = comparison_angle(k, to_first, first_to_shared, to_shared)?;
    let straight = comparison_angle(
        k,
        to_first + to_third,
        first_to_shared,
        third_to_shared,
    )?;
    let relation = if (glued - straight).abs() <= 8.0 * ANGLE_TOL {
        HingeRelation::Equal
    } else if straight < glued {
        HingeRelation::StraightNotAbove
    } else {
        HingeRelation::StraightNotBelow
    };
    Ok(HingeComparison { glued, straight, relation })
}
