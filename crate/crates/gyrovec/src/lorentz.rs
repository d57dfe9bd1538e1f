//! 4x4 Lorentz boosts, their action on spacetime events, the spacetime
//! gyration Gyr, and numeric verification of the boost composition
//! factorizations `B(u)B(v) = B(u (+) v) Gyr[u,v] = Gyr[u,v] B(v (+) u)`.

use crate::ball::{self, BallVec};
use crate::error::Result;
use crate::gyration::{gyr_closed_form, Rotation3};
use crate::vec3::{self, Vec3};

pub type Mat4 = [[f64; 4]; 4];

pub fn mat4_identity() -> Mat4 {
    let mut m = [[0.0; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut p = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            p[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    p
}

pub fn mat4_max_abs_diff(a: &Mat4, b: &Mat4) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            d = d.max((a[i][j] - b[i][j]).abs());
        }
    }
    d
}

/// A spacetime event: time plus an unrestricted spatial 3-vector, laid out
/// as the column (t, x1, x2, x3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimeEvent {
    pub t: f64,
    pub x: Vec3,
}

impl SpacetimeEvent {
    pub fn new(t: f64, x: Vec3) -> Self {
        Self { t, x }
    }

    pub fn column(&self) -> [f64; 4] {
        [self.t, self.x[0], self.x[1], self.x[2]]
    }

    pub fn from_column(col: [f64; 4]) -> Self {
        Self {
            t: col[0],
            x: [col[1], col[2], col[3]],
        }
    }

    /// Minkowski quadratic form `c^2 t^2 - |x|^2`.
    pub fn minkowski_form(&self, c: f64) -> f64 {
        c * c * self.t * self.t - vec3::norm_sq(self.x)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.t - other.t)
            .abs()
            .max(vec3::max_abs_diff(self.x, other.x))
    }
}

/// A 4x4 Lorentz boost with its generating velocity.
#[derive(Debug, Clone, Copy)]
pub struct Boost4 {
    m: Mat4,
    v: BallVec,
}

impl Boost4 {
    pub fn matrix(&self) -> Mat4 {
        self.m
    }

    pub fn velocity(&self) -> BallVec {
        self.v
    }

    pub fn apply(&self, e: &SpacetimeEvent) -> SpacetimeEvent {
        let col = e.column();
        let mut out = [0.0; 4];
        for (i, row) in self.m.iter().enumerate() {
            out[i] = (0..4).map(|k| row[k] * col[k]).sum();
        }
        SpacetimeEvent::from_column(out)
    }
}

/// The boost matrix: first row `(g, g v_j / c^2)`, first column `(g, g v_i)`,
/// spatial block `I + (g^2 / (g + 1)) v_i v_j / c^2`.
pub fn boost_matrix(v: &BallVec) -> Boost4 {
    let g = ball::gamma(v).value();
    let c2 = v.radius() * v.radius();
    let vv = v.components();
    let mut m = [[0.0; 4]; 4];
    m[0][0] = g;
    for i in 0..3 {
        m[0][i + 1] = g * vv[i] / c2;
        m[i + 1][0] = g * vv[i];
        for j in 0..3 {
            let id = if i == j { 1.0 } else { 0.0 };
            m[i + 1][j + 1] = id + (g * g / (g + 1.0)) * vv[i] * vv[j] / c2;
        }
    }
    Boost4 { m, v: *v }
}

/// Boost application in vector form,
/// `B(u)(t, x) = (g (t + u.x / c^2), g u t + x + (g^2/(1+g)) (u.x) u / c^2)`.
pub fn boost_apply(u: &BallVec, e: &SpacetimeEvent) -> SpacetimeEvent {
    let g = ball::gamma(u).value();
    let c2 = u.radius() * u.radius();
    let ux = vec3::dot(u.components(), e.x);
    let t_out = g * (e.t + ux / c2);
    let x_out = vec3::add(
        vec3::add(vec3::scale(g * e.t, u.components()), e.x),
        vec3::scale(g * g / (1.0 + g) * ux / c2, u.components()),
    );
    SpacetimeEvent::new(t_out, x_out)
}

/// Spacetime gyration: time fixed, spatial part rotated by `gyr[u, v]`.
pub fn spacetime_gyr(u: &BallVec, v: &BallVec, e: &SpacetimeEvent) -> Result<SpacetimeEvent> {
    let rot = gyr_closed_form(u, v)?;
    Ok(SpacetimeEvent::new(e.t, rot.apply(e.x)))
}

/// Embed a space rotation as the block-diagonal 4x4 matrix `diag(1, R)`.
pub fn embed_rotation(r: &Rotation3) -> Mat4 {
    let mut m = mat4_identity();
    let e = r.entries();
    for i in 0..3 {
        for j in 0..3 {
            m[i + 1][j + 1] = e[i][j];
        }
    }
    m
}

/// Max-norm residuals of the two boost composition factorizations:
/// left, `B(u)B(v) - B(u (+) v) Gyr[u,v]`, and
/// right, `B(u)B(v) - Gyr[u,v] B(v (+) u)`.
pub fn boost_composition_check(u: &BallVec, v: &BallVec) -> Result<(f64, f64)> {
    let product = mat4_mul(&boost_matrix(u).matrix(), &boost_matrix(v).matrix());

    let gyr_uv = embed_rotation(&gyr_closed_form(u, v)?);

    let uv = ball::einstein_add(u, v)?;
    let left = mat4_mul(&boost_matrix(&uv).matrix(), &gyr_uv);

    let vu = ball::einstein_add(v, u)?;
    let right = mat4_mul(&gyr_uv, &boost_matrix(&vu).matrix());

    Ok((
        mat4_max_abs_diff(&product, &left),
        mat4_max_abs_diff(&product, &right),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec3::max_abs_diff;

    fn bv(x: f64, y: f64, z: f64) -> BallVec {
        BallVec::new(x, y, z, 1.0).unwrap()
    }

    #[test]
    fn zero_boost_is_identity() {
        let b = boost_matrix(&BallVec::zero(1.0));
        assert_eq!(b.matrix(), mat4_identity());
    }

    #[test]
    fn boost_first_row() {
        let b = boost_matrix(&bv(0.6, 0.0, 0.0));
        assert!((b.matrix()[0][0] - 1.25).abs() < 1e-15);
        assert!((b.matrix()[0][1] - 0.75).abs() < 1e-15);
        assert_eq!(b.matrix()[0][2], 0.0);
        assert_eq!(b.matrix()[0][3], 0.0);
    }

    #[test]
    fn boost_preserves_minkowski_form() {
        let b = boost_matrix(&bv(0.6, -0.3, 0.2));
        let e = SpacetimeEvent::new(1.0, [0.2, 0.3, 0.1]);
        let before = e.minkowski_form(1.0);
        let after = b.apply(&e).minkowski_form(1.0);
        assert!((before - after).abs() < 1e-13);
    }

    #[test]
    fn apply_matches_matrix() {
        let u = bv(0.4, 0.2, -0.5);
        let e = SpacetimeEvent::new(0.7, [1.5, -2.0, 0.3]);
        let via_vector = boost_apply(&u, &e);
        let via_matrix = boost_matrix(&u).apply(&e);
        assert!(via_vector.max_abs_diff(&via_matrix) < 1e-13);
    }

    #[test]
    fn apply_trivial_and_rest_event() {
        let e = SpacetimeEvent::new(1.0, [0.0; 3]);
        let same = boost_apply(&BallVec::zero(1.0), &e);
        assert_eq!(same, e);
        let boosted = boost_apply(&bv(0.6, 0.0, 0.0), &e);
        assert!((boosted.t - 1.25).abs() < 1e-15);
        assert!(max_abs_diff(boosted.x, [0.75, 0.0, 0.0]) < 1e-15);
    }

    #[test]
    fn boost_reveals_einstein_addition() {
        // B(u)(t, vt) = (g_{u(+)v}/g_v) (t, (u (+) v) t)
        let u = bv(0.6, 0.0, 0.0);
        let v = bv(0.0, 0.6, 0.0);
        let t = 1.0;
        let e = SpacetimeEvent::new(t, v.components());
        let out = boost_apply(&u, &e);
        let uv = ball::einstein_add(&u, &v).unwrap();
        let factor = ball::gamma(&uv).value() / ball::gamma(&v).value();
        assert!((out.t - factor * t).abs() < 1e-13);
        assert!(max_abs_diff(out.x, vec3::scale(factor * t, uv.components())) < 1e-13);
    }

    #[test]
    fn spacetime_gyr_fixes_time_and_norm() {
        let u = bv(0.5, 0.1, 0.0);
        let v = bv(-0.2, 0.4, 0.3);
        let e = SpacetimeEvent::new(2.5, [0.3, -0.6, 0.1]);
        let out = spacetime_gyr(&u, &v, &e).unwrap();
        assert_eq!(out.t, e.t);
        assert!((vec3::norm(out.x) - vec3::norm(e.x)).abs() < 1e-14);
        // parallel arguments: trivial
        let same = spacetime_gyr(&bv(0.3, 0.0, 0.0), &bv(0.6, 0.0, 0.0), &e).unwrap();
        assert!(same.max_abs_diff(&e) < 1e-15);
    }

    #[test]
    fn composition_trivial_cases() {
        let u = bv(0.5, 0.2, -0.1);
        let (l, r) = boost_composition_check(&u, &BallVec::zero(1.0)).unwrap();
        assert!(l < 1e-15 && r < 1e-15);
        let (l, r) = boost_composition_check(&bv(0.3, 0.0, 0.0), &bv(0.6, 0.0, 0.0)).unwrap();
        assert!(l < 1e-14 && r < 1e-14);
    }

    #[test]
    fn composition_theorem_orthogonal_case() {
        let (l, r) = boost_composition_check(&bv(0.6, 0.0, 0.0), &bv(0.0, 0.6, 0.0)).unwrap();
        assert!(l <= 1e-12, "left residual {l}");
        assert!(r <= 1e-12, "right residual {r}");
    }

    #[test]
    fn boosts_alone_do_not_compose_to_a_boost() {
        let u = bv(0.6, 0.0, 0.0);
        let v = bv(0.0, 0.6, 0.0);
        let product = mat4_mul(&boost_matrix(&u).matrix(), &boost_matrix(&v).matrix());
        for w in [
            ball::einstein_add(&u, &v).unwrap(),
            ball::einstein_add(&v, &u).unwrap(),
        ] {
            let gap = mat4_max_abs_diff(&product, &boost_matrix(&w).matrix());
            assert!(gap > 1e-2, "gap {gap}");
        }
    }
}
