//! Numeric audit of the gyrogroup laws and the cross-module identities:
//! each law is evaluated over seeded random samples and reported as a
//! max-absolute-residual row with its pass threshold.

use crate::ball::{self, BallVec};
use crate::gyration::{
    alpha_beta, gyr_closed_form, gyr_definitional, gyr_matrix_form, precession_angles, Rotation3,
};
use crate::hyperbolic::{defect_from_gammas, metric_tensor};
use crate::lorentz::{boost_composition_check, boost_matrix, SpacetimeEvent};
use crate::sampling::{rng_from_seed, sample_ball};
use crate::vec3;
use rand::Rng;

/// One audited law: its worst residual over the sample set and the
/// threshold it must stay under.
#[derive(Debug, Clone)]
pub struct LawResidual {
    pub law: &'static str,
    pub max_residual: f64,
    pub samples: usize,
    pub tol: f64,
}

impl LawResidual {
    pub fn pass(&self) -> bool {
        self.max_residual <= self.tol
    }
}

#[derive(Debug, Clone, Default)]
pub struct AuditReport {
    pub rows: Vec<LawResidual>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(LawResidual::pass)
    }

    pub fn worst(&self) -> Option<&LawResidual> {
        self.rows.iter().max_by(|a, b| {
            (a.max_residual / a.tol)
                .partial_cmp(&(b.max_residual / b.tol))
                .unwrap()
        })
    }
}

struct Auditor {
    triples: Vec<(BallVec, BallVec, BallVec)>,
    rows: Vec<LawResidual>,
    tol: f64,
}

impl Auditor {
    fn law<F>(&mut self, name: &'static str, f: F)
    where
        F: Fn(&BallVec, &BallVec, &BallVec) -> f64,
    {
        self.law_with_tol(name, self.tol, f)
    }

    fn law_with_tol<F>(&mut self, name: &'static str, tol: f64, f: F)
    where
        F: Fn(&BallVec, &BallVec, &BallVec) -> f64,
    {
        let max_residual = self
            .triples
            .iter()
            .map(|(u, v, w)| f(u, v, w))
            .fold(0.0, f64::max);
        self.rows.push(LawResidual {
            law: name,
            max_residual,
            samples: self.triples.len(),
            tol,
        });
    }
}

fn ball_diff(a: &BallVec, b: &BallVec) -> f64 {
    vec3::max_abs_diff(a.components(), b.components())
}

/// Audit of the gyrogroup laws, the gyration automorphism/isometry
/// properties, and the numerically meaningful first gyrogroup properties.
///
/// `samples == 0` yields an empty report.
pub fn gyro_law_audit(samples: usize, seed: u64, max_speed: f64, c: f64, tol: f64) -> AuditReport {
    if samples == 0 {
        return AuditReport::default();
    }
    let mut rng = rng_from_seed(seed);
    let triples: Vec<_> = (0..samples)
        .map(|_| {
            (
                sample_ball(&mut rng, c, max_speed),
                sample_ball(&mut rng, c, max_speed),
                sample_ball(&mut rng, c, max_speed),
            )
        })
        .collect();
    let mut a = Auditor {
        triples,
        rows: Vec::new(),
        tol,
    };
    let zero = BallVec::zero(c);

    a.law("closure", |u, v, _| {
        let sum = ball::einstein_add(u, v).unwrap();
        (sum.norm() / c - 1.0).max(0.0)
    });
    a.law("gamma identity", |u, v, _| {
        let direct = ball::gamma(&ball::einstein_add(u, v).unwrap()).value();
        (direct - ball::gamma_identity(u, v).unwrap().value()).abs()
    });
    a.law("gyrotriangle inequality", |u, v, _| {
        let lhs = ball::einstein_add(u, v).unwrap().norm();
        (lhs - ball::scalar_einstein_add(u.norm(), v.norm(), c)).max(0.0)
    });
    a.law("automorphic inverse property", |u, v, _| {
        ball_diff(
            &ball::einstein_add(u, v).unwrap().neg(),
            &ball::einstein_add(&u.neg(), &v.neg()).unwrap(),
        )
    });
    a.law("gyrocommutative law", |u, v, _| {
        let lhs = ball::einstein_add(u, v).unwrap();
        let vu = ball::einstein_add(v, u).unwrap();
        let rhs = gyr_closed_form(u, v).unwrap().apply_ball(&vu);
        ball_diff(&lhs, &rhs)
    });
    a.law("left gyroassociative law", |u, v, w| {
        let lhs = ball::einstein_add(u, &ball::einstein_add(v, w).unwrap()).unwrap();
        let uv = ball::einstein_add(u, v).unwrap();
        let gw = gyr_closed_form(u, v).unwrap().apply_ball(w);
        ball_diff(&lhs, &ball::einstein_add(&uv, &gw).unwrap())
    });
    a.law("right gyroassociative law", |u, v, w| {
        let lhs = ball::einstein_add(&ball::einstein_add(u, v).unwrap(), w).unwrap();
        let gw = gyr_closed_form(v, u).unwrap().apply_ball(w);
        let rhs = ball::einstein_add(u, &ball::einstein_add(v, &gw).unwrap()).unwrap();
        ball_diff(&lhs, &rhs)
    });
    a.law("gyration left loop property", |u, v, _| {
        let uv = ball::einstein_add(u, v).unwrap();
        gyr_closed_form(&uv, v)
            .unwrap()
            .max_abs_diff(&gyr_closed_form(u, v).unwrap())
    });
    a.law("gyration right loop property", |u, v, _| {
        let vu = ball::einstein_add(v, u).unwrap();
        gyr_closed_form(u, &vu)
            .unwrap()
            .max_abs_diff(&gyr_closed_form(u, v).unwrap())
    });
    a.law("gyration even property", |u, v, _| {
        gyr_closed_form(&u.neg(), &v.neg())
            .unwrap()
            .max_abs_diff(&gyr_closed_form(u, v).unwrap())
    });
    a.law("gyration inversion law", |u, v, _| {
        gyr_closed_form(u, v)
            .unwrap()
            .compose(&gyr_closed_form(v, u).unwrap())
            .max_abs_diff(&Rotation3::identity())
    });
    a.law("gyration inner product invariance", |u, v, w| {
        let g = gyr_closed_form(u, v).unwrap();
        let gu2 = g.apply(w.components());
        let gv2 = g.apply(v.components());
        (vec3::dot(gu2, gv2) - vec3::dot(w.components(), v.components())).abs()
    });
    a.law("gyration norm invariance", |u, v, w| {
        let g = gyr_closed_form(u, v).unwrap();
        (vec3::norm(g.apply(w.components())) - w.norm()).abs()
    });
    a.law("gyration automorphism property", |u, v, w| {
        let g = gyr_closed_form(u, v).unwrap();
        let lhs = g.apply_ball(&ball::einstein_add(v, w).unwrap());
        let rhs = ball::einstein_add(&g.apply_ball(v), &g.apply_ball(w)).unwrap();
        ball_diff(&lhs, &rhs)
    });
    a.law("gyration linearity", |u, v, w| {
        let g = gyr_closed_form(u, v).unwrap();
        let combo = vec3::add(
            vec3::scale(0.4, w.components()),
            vec3::scale(-1.7, v.components()),
        );
        let lhs = g.apply(combo);
        let rhs = vec3::add(
            vec3::scale(0.4, g.apply(w.components())),
            vec3::scale(-1.7, g.apply(v.components())),
        );
        vec3::max_abs_diff(lhs, rhs)
    });
    a.law("oracle equivalence: definitional vs closed form", |u, v, w| {
        let by_def = gyr_definitional(u, v, w).unwrap();
        let by_matrix = gyr_closed_form(u, v).unwrap().apply(w.components());
        vec3::max_abs_diff(by_def.components(), by_matrix)
    });
    a.law("oracle equivalence: closed form vs omega form", |u, v, _| {
        gyr_closed_form(u, v)
            .unwrap()
            .max_abs_diff(&gyr_matrix_form(u, v).unwrap())
    });
    a.law("trace identity", |u, v, _| {
        gyr_closed_form(u, v).unwrap().trace_identity_residual()
    });
    a.law("rotation axis fixing", |u, v, _| {
        let axis = vec3::cross(u.components(), v.components());
        vec3::max_abs_diff(gyr_closed_form(u, v).unwrap().apply(axis), axis)
    });
    a.law("alpha beta constraint", |u, v, _| {
        let (alpha, beta) = alpha_beta(u, v).unwrap();
        if alpha >= 0.0 || beta <= 0.0 {
            return 1.0;
        }
        let uv = vec3::dot(u.components(), v.components());
        (alpha * alpha + (u.norm_sq() * v.norm_sq() - uv * uv) * beta * beta - 2.0 * beta).abs()
    });
    a.law("sign opposition", |u, v, _| {
        let angles = precession_angles(u, v).unwrap();
        if angles.degenerate {
            return 0.0;
        }
        if angles.epsilon.sin().signum() == -angles.theta.sin().signum() {
            0.0
        } else {
            1.0
        }
    });

    // First gyrogroup properties (the numerically meaningful ones).
    a.law("left identity", |_, _, w| {
        ball_diff(&ball::einstein_add(&zero, w).unwrap(), w)
    });
    a.law("right identity", |_, _, w| {
        ball_diff(&ball::einstein_add(w, &zero).unwrap(), w)
    });
    a.law("left inverse", |_, _, w| {
        ball::einstein_add(&w.neg(), w).unwrap().norm()
    });
    a.law("right inverse", |_, _, w| {
        ball::einstein_sub(w, w).unwrap().norm()
    });
    a.law("gyr[0,a] = I", |_, _, w| {
        gyr_closed_form(&zero, w)
            .unwrap()
            .max_abs_diff(&Rotation3::identity())
    });
    a.law("gyr[a,a] = I", |_, _, w| {
        gyr_closed_form(w, w)
            .unwrap()
            .max_abs_diff(&Rotation3::identity())
    });
    a.law("gyr[a,0] = I", |_, _, w| {
        gyr_closed_form(w, &zero)
            .unwrap()
            .max_abs_diff(&Rotation3::identity())
    });
    a.law("left cancellation", |u, v, _| {
        let uv = ball::einstein_add(u, v).unwrap();
        ball_diff(&ball::einstein_add(&u.neg(), &uv).unwrap(), v)
    });
    a.law("gyrator identity", |u, v, w| {
        // gyr[a,b]x = -(a (+) b) (+) {a (+) (b (+) x)} against the matrix path
        let by_def = gyr_definitional(u, v, w).unwrap();
        vec3::max_abs_diff(
            by_def.components(),
            gyr_matrix_form(u, v).unwrap().apply(w.components()),
        )
    });
    a.law("gyr[a,b]0 = 0", |u, v, _| {
        vec3::norm(gyr_closed_form(u, v).unwrap().apply([0.0; 3]))
    });
    a.law("gyr[a,b](-x) = -gyr[a,b]x", |u, v, w| {
        let by_def = gyr_definitional(u, v, &w.neg()).unwrap();
        let negated = gyr_definitional(u, v, w).unwrap().neg();
        ball_diff(&by_def, &negated)
    });

    AuditReport { rows: a.rows }
}

/// Full audit: gyrogroup laws plus boost composition, Minkowski form
/// preservation, the defect-gyration identity, and the metric-tensor
/// finite-difference check, each at its own threshold.
pub fn full_audit(samples: usize, seed: u64, max_speed: f64, c: f64, tol: f64) -> AuditReport {
    let mut report = gyro_law_audit(samples, seed, max_speed, c, tol);
    if samples == 0 {
        return report;
    }
    let mut rng = rng_from_seed(seed.wrapping_add(1));

    // boost composition residuals grow near the ball boundary; audited at
    // speeds capped to 0.9c
    let boost_speed = max_speed.min(0.9);
    let boost_samples: Vec<_> = (0..samples)
        .map(|_| {
            (
                sample_ball(&mut rng, c, boost_speed),
                sample_ball(&mut rng, c, boost_speed),
            )
        })
        .collect();
    let mut left_max: f64 = 0.0;
    let mut right_max: f64 = 0.0;
    let mut minkowski_max: f64 = 0.0;
    for (u, v) in &boost_samples {
        let (l, r) = boost_composition_check(u, v).unwrap();
        left_max = left_max.max(l);
        right_max = right_max.max(r);
        let e = SpacetimeEvent::new(
            rng.gen::<f64>() * 2.0 - 1.0,
            [
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
                rng.gen::<f64>() * 2.0 - 1.0,
            ],
        );
        let boosted = boost_matrix(u).apply(&e);
        minkowski_max = minkowski_max.max((boosted.minkowski_form(c) - e.minkowski_form(c)).abs());
    }
    report.rows.push(LawResidual {
        law: "boost composition (left factorization)",
        max_residual: left_max,
        samples,
        tol: 1e-12,
    });
    report.rows.push(LawResidual {
        law: "boost composition (right factorization)",
        max_residual: right_max,
        samples,
        tol: 1e-12,
    });
    report.rows.push(LawResidual {
        law: "minkowski form preservation",
        max_residual: minkowski_max,
        samples,
        tol: 1e-12,
    });

    // defect-gyration identity over random side-gyrovector pairs
    let mut defect_max: f64 = 0.0;
    for _ in 0..samples {
        let u = sample_ball(&mut rng, c, max_speed);
        let v = sample_ball(&mut rng, c, max_speed);
        let axis = vec3::cross(u.components(), v.neg().components());
        if vec3::norm(axis) < 1e-10 {
            continue;
        }
        let g = gyr_closed_form(&u, &v.neg()).unwrap();
        let eps = crate::gyration::rotation_angle_about_axis(&g, axis, 1e-8).unwrap();
        let gu = ball::gamma(&u).value();
        let gv = ball::gamma(&v).value();
        let gw = ball::gamma(&ball::einstein_add(&u.neg(), &v).unwrap()).value();
        let delta = defect_from_gammas(gu, gv, gw).unwrap();
        defect_max = defect_max.max(((eps / 2.0).tan().powi(2) - (delta / 2.0).tan().powi(2)).abs());
    }
    report.rows.push(LawResidual {
        law: "defect-gyration identity",
        max_residual: defect_max,
        samples,
        tol: 1e-9,
    });

    // metric finite-difference consistency on an interior grid
    let mut metric_max: f64 = 0.0;
    let step = 1e-4 * c;
    let grid = 9;
    for i in -grid..=grid {
        for j in -grid..=grid {
            let x1 = i as f64 / grid as f64 * 0.9 * c / f64::sqrt(2.0);
            let x2 = j as f64 / grid as f64 * 0.9 * c / f64::sqrt(2.0);
            let m = metric_tensor(x1, x2, c).unwrap();
            let x = BallVec::new(x1, x2, 0.0, c).unwrap();
            let fwd = BallVec::new(x1 + step, x2 + step, 0.0, c).unwrap();
            let bwd = BallVec::new(x1 - step, x2 - step, 0.0, c).unwrap();
            // symmetric average kills the odd-order term of the expansion
            let exact = 0.5
                * (ball::einstein_sub(&fwd, &x).unwrap().norm_sq()
                    + ball::einstein_sub(&bwd, &x).unwrap().norm_sq());
            let quad = m.quadratic_form(step, step);
            metric_max = metric_max.max((exact - quad).abs() / exact);
        }
    }
    report.rows.push(LawResidual {
        law: "metric finite-difference consistency",
        max_residual: metric_max,
        samples: ((2 * grid + 1) * (2 * grid + 1)) as usize,
        tol: 1e-4,
    });

    report
}
