//! Complete saddle-connection enumeration up to a length bound, by
//! breadth-first development of triangle chains from each cone point.
//!
//! Each search state carries an angular wedge of directions still under
//! consideration and the developed edge about to be crossed. Crossing the
//! edge exposes one vertex of the next triangle: a vertex strictly inside
//! the wedge is a saddle connection (nothing can hide it, by induction) and
//! splits the wedge; a vertex on or beyond a wedge boundary is occluded and
//! the wedge passes on unchanged.

use serde::{Deserialize, Serialize};

use crate::geom::{segment_dist2_origin, Vec2};
use crate::surface::TranslationSurface;

/// One saddle connection, recorded once per unoriented segment: endpoints
/// are cone-point classes with `from <= to`, and closed connections carry
/// the holonomy with `y > 0` (or `y = 0, x > 0`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SaddleConnectionRecord {
    pub holonomy: Vec2,
    pub from_zero: usize,
    pub to_zero: usize,
    pub is_closed: bool,
    /// Corner (triangle, vertex index) at which the segment starts: the
    /// developed segment from that corner with vector `holonomy` is the
    /// connection.
    pub placement: (usize, usize),
}

/// All saddle connections of length at most `max_len`.
pub fn saddle_connections_up_to(
    surface: &TranslationSurface,
    max_len: f64,
) -> Vec<SaddleConnectionRecord> {
    let mut records = Vec::new();
    for t in 0..surface.triangles().len() {
        for corner in 0..3 {
            search_from_corner(surface, t, corner, max_len, &mut records);
        }
    }
    // keep one record per unoriented segment: oriented records come in
    // (from, v) / (to, -v) pairs
    records.retain(|r| {
        if r.from_zero < r.to_zero {
            true
        } else if r.from_zero > r.to_zero {
            false
        } else {
            r.holonomy.y > 0.0 || (r.holonomy.y == 0.0 && r.holonomy.x > 0.0)
        }
    });
    records
}

struct State {
    /// Open angular wedge still to be explored; `cross(lo, hi) > 0`.
    lo: Vec2,
    hi: Vec2,
    /// Triangle beyond the next crossing edge; its edge `edge` lies on the
    /// crossing segment with `v[edge]` at the hi end and `v[edge+1]` at the
    /// lo end.
    tri: usize,
    edge: usize,
    /// Translation from that triangle's chart into the developed plane.
    offset: Vec2,
}

fn search_from_corner(
    surface: &TranslationSurface,
    t: usize,
    corner: usize,
    max_len: f64,
    records: &mut Vec<SaddleConnectionRecord>,
) {
    let eps = surface.epsilon;
    let tris = surface.triangles();
    let origin_class = surface.corner_class(t, corner);
    let origin = tris[t][corner];
    let pa = tris[t][(corner + 1) % 3] - origin;
    let pb = tris[t][(corner + 2) % 3] - origin;
    // the first boundary edge of the corner sector belongs to this corner;
    // the closing one is recorded by the neighboring corner around the
    // vertex
    if pa.norm() <= max_len {
        records.push(SaddleConnectionRecord {
            holonomy: pa,
            from_zero: origin_class,
            to_zero: surface.corner_class(t, (corner + 1) % 3),
            is_closed: origin_class == surface.corner_class(t, (corner + 1) % 3),
            placement: (t, corner),
        });
    }

    let portal_edge = (corner + 1) % 3;
    let (t2, e2) = surface.opposite((t, portal_edge));
    let mut stack = vec![State {
        lo: pa,
        hi: pb,
        tri: t2,
        edge: e2,
        offset: pb - tris[t2][e2],
    }];

    while let Some(state) = stack.pop() {
        let tri = &tris[state.tri];
        let w = tri[state.edge] + state.offset; // hi end of the crossing edge
        let u = tri[(state.edge + 1) % 3] + state.offset; // lo end
        if segment_dist2_origin(u, w) > max_len * max_len {
            continue;
        }
        let third = (state.edge + 2) % 3;
        let c = tri[third] + state.offset;
        let cross_lo = state.lo.cross(c);
        let cross_hi = c.cross(state.hi);
        let tol_lo = eps * (state.lo.norm() * c.norm()).max(f64::MIN_POSITIVE);
        let tol_hi = eps * (state.hi.norm() * c.norm()).max(f64::MIN_POSITIVE);
        let inside_lo = cross_lo > tol_lo;
        let inside_hi = cross_hi > tol_hi;

        if inside_lo && inside_hi {
            // visible vertex: record and split the wedge
            if c.norm() <= max_len {
                let to = surface.corner_class(state.tri, third);
                records.push(SaddleConnectionRecord {
                    holonomy: c,
                    from_zero: origin_class,
                    to_zero: to,
                    is_closed: origin_class == to,
                    placement: (t, corner),
                });
            }
            let edge = (state.edge + 1) % 3; // from the lo end to c
            let (t3, e3) = surface.opposite((state.tri, edge));
            stack.push(State {
                lo: state.lo,
                hi: c,
                tri: t3,
                edge: e3,
                offset: c - tris[t3][e3],
            });
            let edge = (state.edge + 2) % 3; // from c to the hi end
            let (t3, e3) = surface.opposite((state.tri, edge));
            stack.push(State {
                lo: c,
                hi: state.hi,
                tri: t3,
                edge: e3,
                offset: w - tris[t3][e3],
            });
        } else if !inside_lo {
            // c occluded at or beyond the lo boundary: the whole wedge
            // continues across the edge from c to the hi end
            let edge = (state.edge + 2) % 3;
            let (t3, e3) = surface.opposite((state.tri, edge));
            stack.push(State {
                lo: state.lo,
                hi: state.hi,
                tri: t3,
                edge: e3,
                offset: w - tris[t3][e3],
            });
        } else {
            // c occluded at or beyond the hi boundary
            let edge = (state.edge + 1) % 3;
            let (t3, e3) = surface.opposite((state.tri, edge));
            stack.push(State {
                lo: state.lo,
                hi: state.hi,
                tri: t3,
                edge: e3,
                offset: c - tris[t3][e3],
            });
        }
    }
}

/// Groups the records by holonomy vector (up to sign, within tolerance) and
/// returns the group sizes. Diagnostic only: tolerance can conflate
/// near-equal vectors on non-generic surfaces.
pub fn holonomy_multiplicity_groups(
    records: &[SaddleConnectionRecord],
    eps: f64,
) -> Vec<(Vec2, usize)> {
    let canon = |v: Vec2| -> Vec2 {
        if v.y > 0.0 || (v.y == 0.0 && v.x > 0.0) {
            v
        } else {
            -v
        }
    };
    let mut groups: Vec<(Vec2, usize)> = Vec::new();
    for r in records {
        let v = canon(r.holonomy);
        match groups
            .iter_mut()
            .find(|(g, _)| (*g - v).norm() <= eps * (1.0 + v.norm()))
        {
            Some((_, count)) => *count += 1,
            None => groups.push((v, 1)),
        }
    }
    groups.sort_by(|a, b| b.1.cmp(&a.1));
    groups
}
