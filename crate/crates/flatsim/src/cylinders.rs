//! Maximal flat cylinders with waist length up to a bound.
//!
//! Every boundary circle of a cylinder is a union of saddle connections
//! parallel to the waist, so a geodesic flow seeded just off the midpoint
//! of each saddle connection, on both sides, detects every cylinder: a
//! first return within the bound means the seed lies on a closed geodesic,
//! and the return time is the waist length. All closed geodesics in the
//! interior of one cylinder cross the same cyclic sequence of triangulation
//! edges, so that sequence (up to rotation and direction reversal) is the
//! cylinder's identity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::search::{saddle_connections_up_to, SaddleConnectionRecord};
use crate::surface::TranslationSurface;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Cylinder {
    /// Waist holonomy, canonical sign (`y > 0`, or `y = 0, x > 0`).
    pub holonomy: Vec2,
    /// Transversal height.
    pub height: f64,
}

/// A point on the surface: a triangle and a position in its chart.
#[derive(Debug, Clone, Copy)]
struct SurfacePoint {
    tri: usize,
    pos: Vec2,
}

/// Advances `point` by the displacement `disp`, crossing charts. When
/// `watch_return` is set, stops early if the moving point comes back to its
/// start, and reports the distance traveled plus the crossing signature.
fn walk(
    surface: &TranslationSurface,
    start: SurfacePoint,
    disp: Vec2,
    watch_return: bool,
) -> Result<(SurfacePoint, Option<(f64, Vec<(usize, usize)>)>)> {
    let eps = surface.epsilon;
    let tris = surface.triangles();
    let total = disp.norm();
    let step = disp.scale(1.0 / total);
    let mut tri = start.tri;
    let mut pos = start.pos;
    let mut traveled = 0.0;
    let mut crossings: Vec<(usize, usize)> = Vec::new();
    loop {
        let verts = &tris[tri];
        let mut exit: Option<(f64, usize)> = None;
        for e in 0..3 {
            let a = verts[e];
            let b = verts[(e + 1) % 3];
            let edge = b - a;
            let denom = step.cross(edge);
            if denom.abs() < 1e-300 {
                continue;
            }
            let t_ray = (a - pos).cross(edge) / denom;
            let s_edge = (a - pos).cross(step) / denom;
            if t_ray > eps && (-0.25..=1.25).contains(&s_edge) {
                if !(eps..=1.0 - eps).contains(&s_edge) {
                    if s_edge > -eps && s_edge < 1.0 + eps {
                        return Err(Error::ToleranceBreach(
                            "flow passes within tolerance of a vertex".to_string(),
                        ));
                    }
                    continue;
                }
                if exit.map_or(true, |(t0, _)| t_ray < t0) {
                    exit = Some((t_ray, e));
                }
            }
        }
        let remaining = total - traveled;
        if watch_return && tri == start.tri {
            let d = start.pos - pos;
            let along = d.dot(step);
            let exit_t = exit.map_or(f64::INFINITY, |(t, _)| t);
            if along > eps
                && along < exit_t
                && along <= remaining
                && (d - step.scale(along)).norm() <= 1e-7
            {
                return Ok((
                    SurfacePoint {
                        tri,
                        pos: pos + step.scale(along),
                    },
                    Some((traveled + along, crossings)),
                ));
            }
        }
        match exit {
            Some((t_exit, exit_edge)) if t_exit < remaining => {
                let exit_point = pos + step.scale(t_exit);
                let (t2, e2) = surface.opposite((tri, exit_edge));
                let b = verts[(exit_edge + 1) % 3];
                let shift = tris[t2][e2] - b;
                pos = exit_point + shift;
                crossings.push((tri, exit_edge));
                tri = t2;
                traveled += t_exit;
            }
            _ => {
                return Ok((
                    SurfacePoint {
                        tri,
                        pos: pos + step.scale(remaining),
                    },
                    None,
                ));
            }
        }
    }
}

/// A point at displacement `dev` from the given corner, in whichever chart
/// around the corner contains it. `dev` must be small compared to the
/// corner's triangles.
fn seed_near_corner(
    surface: &TranslationSurface,
    placement: (usize, usize),
    dev: Vec2,
) -> Option<SurfacePoint> {
    let (t, corner) = placement;
    let tris = surface.triangles();
    let mut candidates: Vec<SurfacePoint> = vec![SurfacePoint {
        tri: t,
        pos: tris[t][corner] + dev,
    }];
    // the corner also lives on the two neighboring triangles across its
    // incident edges
    let (t2, e2) = surface.opposite((t, corner));
    candidates.push(SurfacePoint {
        tri: t2,
        pos: tris[t2][(e2 + 1) % 3] + dev,
    });
    let (t3, e3) = surface.opposite((t, (corner + 2) % 3));
    candidates.push(SurfacePoint {
        tri: t3,
        pos: tris[t3][e3] + dev,
    });
    candidates.into_iter().find(|&p| point_in_tri(surface, p))
}

fn min_rotation(sig: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let n = sig.len();
    (0..n)
        .map(|k| (0..n).map(|i| sig[(i + k) % n]).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn canonical_signature(forward: &[(usize, usize)], surface: &TranslationSurface) -> Vec<(usize, usize)> {
    let reversed: Vec<(usize, usize)> = forward
        .iter()
        .rev()
        .map(|&e| surface.opposite(e))
        .collect();
    min_rotation(forward).min(min_rotation(&reversed))
}

/// All maximal cylinders of waist length at most `max_len`, each reported
/// once.
pub fn cylinders_up_to(surface: &TranslationSurface, max_len: f64) -> Result<Vec<Cylinder>> {
    let records = saddle_connections_up_to(surface, max_len);
    cylinders_from_records(surface, &records, max_len)
}

pub(crate) fn cylinders_from_records(
    surface: &TranslationSurface,
    records: &[SaddleConnectionRecord],
    max_len: f64,
) -> Result<Vec<Cylinder>> {
    let offset = 1e-6;
    let cap = max_len * (1.0 + 1e-9) + 10.0 * surface.epsilon;
    let mut seen: std::collections::BTreeSet<Vec<(usize, usize)>> = Default::default();
    let mut out = Vec::new();

    for r in records {
        let hol = r.holonomy;
        let dir = hol.normalized();
        let normal = Vec2::new(-dir.y, dir.x);
        for side in [1.0, -1.0] {
            // a seed a small step along the connection, displaced to one
            // side; flowing from it stays parallel to the connection
            let mut detection = None;
            for delta in [4.0 * offset, 16.0 * offset, 64.0 * offset] {
                let dev = dir.scale(delta) + normal.scale(side * offset);
                let Some(seed) = seed_near_corner(surface, r.placement, dev) else {
                    continue;
                };
                match walk(surface, seed, dir.scale(cap), true) {
                    Ok((_, Some((len, sig)))) => {
                        detection = Some((seed, len, sig));
                        break;
                    }
                    Ok((_, None)) => {
                        detection = None;
                        break;
                    }
                    Err(Error::ToleranceBreach(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            let Some((seed, len, sig)) = detection else {
                continue;
            };
            if len > max_len {
                continue;
            }
            let key = canonical_signature(&sig, surface);
            if !seen.insert(key) {
                continue;
            }
            let height = cylinder_height(surface, seed, hol.normalized(), len, &sig)?;
            let canonical = if hol.y > 0.0 || (hol.y == 0.0 && hol.x > 0.0) {
                hol.normalized().scale(len)
            } else {
                hol.normalized().scale(-len)
            };
            out.push(Cylinder {
                holonomy: canonical,
                height,
            });
        }
    }
    Ok(out)
}

/// Total transversal extent over which the flow still closes with the same
/// crossing signature.
fn cylinder_height(
    surface: &TranslationSurface,
    seed: SurfacePoint,
    dir: Vec2,
    waist: f64,
    signature: &[(usize, usize)],
) -> Result<f64> {

    let normal = Vec2::new(-dir.y, dir.x);
    let cap = waist * (1.0 + 1e-7);
    // a cylinder of this waist cannot be taller than area / waist; when the
    // transversal sweep wraps all the way around (the cylinder is glued to
    // itself along its boundary, as on the torus) that value is the height
    let h_max = surface.area() / waist;
    let reference = min_rotation(signature);
    let closes = |t: f64| -> bool {
        // reach the probe by walking transversally from the seed; parallel
        // geodesics inside one cylinder share the crossing sequence up to
        // the starting phase
        let probe = match walk(surface, seed, normal.scale(t), false) {
            Ok((p, _)) => p,
            Err(_) => return false,
        };
        matches!(
            walk(surface, probe, dir.scale(cap), true),
            Ok((_, Some((_, sig)))) if min_rotation(&sig) == reference
        )
    };
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        let mut good: f64 = 0.0;
        let mut step = 1e-4;
        while good + step <= 1.25 * h_max && closes(sign * (good + step)) {
            good += step;
            step *= 2.0;
        }
        if good + step > 1.25 * h_max {
            return Ok(h_max);
        }
        let mut bad = good + step;
        for _ in 0..50 {
            let mid = 0.5 * (good + bad);
            if closes(sign * mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        total += good;
    }
    Ok(total.min(h_max))
}

fn point_in_tri(surface: &TranslationSurface, p: SurfacePoint) -> bool {
    let v = &surface.triangles()[p.tri];
    for e in 0..3 {
        let a = v[e];
        let b = v[(e + 1) % 3];
        if (b - a).cross(p.pos - a) < 0.0 {
            return false;
        }
    }
    true
}
