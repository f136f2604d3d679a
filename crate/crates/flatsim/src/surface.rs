//! Triangulated translation surfaces.
//!
//! A surface is a list of Euclidean triangles, each in its own planar chart,
//! with a fixed-point-free pairing of directed edges: paired edges carry
//! opposite vectors, so every transition between charts is a translation.
//! All triangulation vertices are distinguished points; a vertex class with
//! total angle 2pi is a marked point (zero of order 0).

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geom::Vec2;

/// Identifies a directed edge: triangle index and corner index 0..3.
/// Edge `e` of triangle `t` runs from vertex `e` to vertex `e + 1 (mod 3)`.
pub type EdgeRef = (usize, usize);

#[derive(Debug, Clone)]
pub struct ConePoint {
    /// Total cone angle, a positive multiple of 2pi.
    pub angle: f64,
    /// Zero order `k`, with angle `2pi (k+1)`; 0 for a marked point.
    pub order: u32,
}

#[derive(Debug, Clone)]
pub struct TranslationSurface {
    /// Vertex coordinates of each triangle in its own chart, counterclockwise.
    tris: Vec<[Vec2; 3]>,
    /// `opp[t][e]` is the directed edge glued to edge `e` of triangle `t`.
    opp: Vec<[EdgeRef; 3]>,
    /// Cone-point class of each corner.
    corner_class: Vec<[usize; 3]>,
    cone_points: Vec<ConePoint>,
    area: f64,
    /// Geometric tolerance used by all searches.
    pub epsilon: f64,
}

impl TranslationSurface {
    /// Builds a surface from raw triangles and an edge pairing. Validates
    /// that paired edges carry opposite vectors and that every cone angle is
    /// a multiple of 2pi (within tolerance).
    pub fn from_triangles(
        tris: Vec<[Vec2; 3]>,
        pairing: Vec<(EdgeRef, EdgeRef)>,
    ) -> Result<TranslationSurface> {
        let n = tris.len();
        let epsilon = 1e-9;
        let mut opp = vec![[(usize::MAX, usize::MAX); 3]; n];
        for &(a, b) in &pairing {
            for e in [a, b] {
                if e.0 >= n || e.1 >= 3 {
                    return Err(Error::BadGluing(format!("edge {e:?} out of range")));
                }
            }
            if opp[a.0][a.1] != (usize::MAX, usize::MAX) || opp[b.0][b.1] != (usize::MAX, usize::MAX)
            {
                return Err(Error::BadGluing(format!("edge glued twice: {a:?} or {b:?}")));
            }
            opp[a.0][a.1] = b;
            opp[b.0][b.1] = a;
        }
        for t in 0..n {
            let verts = &tris[t];
            if (verts[1] - verts[0]).cross(verts[2] - verts[0]) <= 0.0 {
                return Err(Error::BadGluing(format!(
                    "triangle {t} is degenerate or clockwise"
                )));
            }
            for e in 0..3 {
                let (t2, e2) = opp[t][e];
                if t2 == usize::MAX {
                    return Err(Error::BadGluing(format!("edge ({t},{e}) is unglued")));
                }
                let v = edge_vector(&tris, (t, e));
                let w = edge_vector(&tris, (t2, e2));
                if (v + w).norm() > 1e-7 * (v.norm() + 1.0) {
                    return Err(Error::BadGluing(format!(
                        "edges ({t},{e}) and ({t2},{e2}) are not opposite vectors"
                    )));
                }
            }
        }

        // vertex classes: crossing edge (t,e) identifies its start corner
        // with the end corner of the partner edge and vice versa
        let mut uf: Vec<usize> = (0..3 * n).collect();
        fn find(uf: &mut Vec<usize>, mut i: usize) -> usize {
            while uf[i] != i {
                uf[i] = uf[uf[i]];
                i = uf[i];
            }
            i
        }
        let union = |uf: &mut Vec<usize>, a: usize, b: usize| {
            let ra = find(uf, a);
            let rb = find(uf, b);
            if ra != rb {
                uf[ra] = rb;
            }
        };
        for t in 0..n {
            for e in 0..3 {
                let (t2, e2) = opp[t][e];
                union(&mut uf, 3 * t + e, 3 * t2 + (e2 + 1) % 3);
                union(&mut uf, 3 * t + (e + 1) % 3, 3 * t2 + e2);
            }
        }
        let mut class_ids = std::collections::HashMap::new();
        let mut corner_class = vec![[0usize; 3]; n];
        let mut angles: Vec<f64> = Vec::new();
        for t in 0..n {
            for e in 0..3 {
                let root = find(&mut uf, 3 * t + e);
                let next = class_ids.len();
                let id = *class_ids.entry(root).or_insert(next);
                corner_class[t][e] = id;
                if id == angles.len() {
                    angles.push(0.0);
                }
                let a = tris[t][(e + 1) % 3] - tris[t][e];
                let b = tris[t][(e + 2) % 3] - tris[t][e];
                angles[id] += Vec2::angle_between(a, b);
            }
        }
        let mut cone_points = Vec::with_capacity(angles.len());
        for (id, &angle) in angles.iter().enumerate() {
            let turns = angle / TAU;
            let k = turns.round() as i64 - 1;
            if k < 0 || (turns - turns.round()).abs() > 1e-6 {
                return Err(Error::BadGluing(format!(
                    "cone point {id} has angle {angle} not a positive multiple of 2pi"
                )));
            }
            cone_points.push(ConePoint {
                angle,
                order: k as u32,
            });
        }
        let area = tris
            .iter()
            .map(|v| 0.5 * (v[1] - v[0]).cross(v[2] - v[0]))
            .sum();
        let surface = TranslationSurface {
            tris,
            opp,
            corner_class,
            cone_points,
            area,
            epsilon,
        };
        // total angle is determined by the genus
        let orders: u32 = surface.cone_points.iter().map(|c| c.order).sum();
        let expected = 2.0 * TAU * orders as f64 / 2.0
            + TAU * surface.cone_points.len() as f64;
        let total: f64 = surface.cone_points.iter().map(|c| c.angle).sum();
        if (total - expected).abs() > 1e-6 * expected.max(1.0) {
            return Err(Error::BadGluing(
                "total cone angle does not match the zero orders".to_string(),
            ));
        }
        Ok(surface)
    }

    pub fn triangles(&self) -> &[[Vec2; 3]] {
        &self.tris
    }

    pub fn opposite(&self, e: EdgeRef) -> EdgeRef {
        self.opp[e.0][e.1]
    }

    pub fn corner_class(&self, t: usize, e: usize) -> usize {
        self.corner_class[t][e]
    }

    pub fn cone_points(&self) -> &[ConePoint] {
        &self.cone_points
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Zero orders as a sorted partition (marked points included as 0).
    pub fn zero_orders(&self) -> Vec<u32> {
        let mut orders: Vec<u32> = self.cone_points.iter().map(|c| c.order).collect();
        orders.sort_unstable_by(|a, b| b.cmp(a));
        orders
    }

    pub fn genus(&self) -> u32 {
        let sum: u32 = self.cone_points.iter().map(|c| c.order).sum();
        sum / 2 + 1
    }

    /// Rescales so the total area is 1.
    pub fn normalize_area(&mut self) {
        let s = 1.0 / self.area.sqrt();
        for tri in &mut self.tris {
            for v in tri.iter_mut() {
                *v = v.scale(s);
            }
        }
        self.area = 1.0;
    }
}

pub(crate) fn edge_vector(tris: &[[Vec2; 3]], e: EdgeRef) -> Vec2 {
    tris[e.0][(e.1 + 1) % 3] - tris[e.0][e.1]
}

// ---------------------------------------------------------------------------
// Polygon specifications.
// ---------------------------------------------------------------------------

/// One polygon of a gluing specification: vertices in order, plus pairs of
/// global side indexes (sides are numbered consecutively across the polygon
/// list; side `i` of a polygon runs from vertex `i` to vertex `i+1`). The
/// `pairs` lists of all polygons are concatenated.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonSpec {
    pub vertices: Vec<[f64; 2]>,
    #[serde(default)]
    pub pairs: Vec<[usize; 2]>,
}

/// Builds a surface from glued polygons. Each polygon is ear-clipped into
/// triangles; paired sides must be opposite vectors.
pub fn build_from_polygons(polygons: &[PolygonSpec]) -> Result<TranslationSurface> {
    let mut tris: Vec<[Vec2; 3]> = Vec::new();
    let mut pairing: Vec<(EdgeRef, EdgeRef)> = Vec::new();
    // the triangulation edge carrying each global polygon side
    let mut side_edge: Vec<EdgeRef> = Vec::new();

    for poly in polygons {
        let verts: Vec<Vec2> = poly.vertices.iter().map(|&[x, y]| Vec2::new(x, y)).collect();
        if verts.len() < 3 {
            return Err(Error::BadGluing("polygon with fewer than 3 vertices".into()));
        }
        let signed: f64 = (0..verts.len())
            .map(|i| {
                let a = verts[i];
                let b = verts[(i + 1) % verts.len()];
                a.cross(b)
            })
            .sum();
        if signed <= 0.0 {
            return Err(Error::BadGluing(
                "polygon vertices must be listed counterclockwise".into(),
            ));
        }
        let (new_tris, sides, internal) = ear_clip(&verts)?;
        let base = tris.len();
        tris.extend(new_tris);
        for (t, e) in sides {
            side_edge.push((base + t, e));
        }
        for ((t1, e1), (t2, e2)) in internal {
            pairing.push(((base + t1, e1), (base + t2, e2)));
        }
    }
    for poly in polygons {
        for &[i, j] in &poly.pairs {
            if i >= side_edge.len() || j >= side_edge.len() {
                return Err(Error::BadGluing(format!("side pair [{i},{j}] out of range")));
            }
            pairing.push((side_edge[i], side_edge[j]));
        }
    }
    TranslationSurface::from_triangles(tris, pairing)
}

/// Parses the JSON polygon-spec format: either a list of polygon objects or
/// `{"polygons": [...]}`.
pub fn parse_polygon_spec(json: &str) -> Result<Vec<PolygonSpec>> {
    #[derive(Deserialize)]
    struct Wrapper {
        polygons: Vec<PolygonSpec>,
    }
    if let Ok(w) = serde_json::from_str::<Wrapper>(json) {
        return Ok(w.polygons);
    }
    if let Ok(list) = serde_json::from_str::<Vec<PolygonSpec>>(json) {
        return Ok(list);
    }
    serde_json::from_str::<PolygonSpec>(json)
        .map(|p| vec![p])
        .map_err(|e| Error::BadGluing(format!("bad polygon spec: {e}")))
}

/// Ear-clips a simple counterclockwise polygon. Returns the triangles, the
/// triangulation edge of each polygon side, and the internal diagonal pairs.
#[allow(clippy::type_complexity)]
fn ear_clip(
    verts: &[Vec2],
) -> Result<(Vec<[Vec2; 3]>, Vec<EdgeRef>, Vec<(EdgeRef, EdgeRef)>)> {
    let n = verts.len();
    let mut ring: Vec<usize> = (0..n).collect();
    let mut tris: Vec<[Vec2; 3]> = Vec::new();
    // for each oriented boundary/diagonal segment (i, j): where it ended up
    let mut seg_edge: std::collections::HashMap<(usize, usize), EdgeRef> =
        std::collections::HashMap::new();
    let mut diagonals: Vec<(usize, usize)> = Vec::new();

    while ring.len() > 3 {
        let m = ring.len();
        let mut clipped = false;
        for k in 0..m {
            let ia = ring[(k + m - 1) % m];
            let ib = ring[k];
            let ic = ring[(k + 1) % m];
            let (a, b, c) = (verts[ia], verts[ib], verts[ic]);
            if (b - a).cross(c - b) <= 1e-12 {
                continue; // reflex or flat corner
            }
            let mut ear = true;
            for &other in &ring {
                if other == ia || other == ib || other == ic {
                    continue;
                }
                if point_in_triangle(verts[other], a, b, c) {
                    ear = false;
                    break;
                }
            }
            if !ear {
                continue;
            }
            let t = tris.len();
            tris.push([a, b, c]);
            seg_edge.insert((ia, ib), (t, 0));
            seg_edge.insert((ib, ic), (t, 1));
            seg_edge.insert((ic, ia), (t, 2));
            diagonals.push((ic, ia));
            ring.remove(k);
            clipped = true;
            break;
        }
        if !clipped {
            return Err(Error::BadGluing(
                "polygon could not be triangulated (not simple?)".into(),
            ));
        }
    }
    let (ia, ib, ic) = (ring[0], ring[1], ring[2]);
    let t = tris.len();
    tris.push([verts[ia], verts[ib], verts[ic]]);
    seg_edge.insert((ia, ib), (t, 0));
    seg_edge.insert((ib, ic), (t, 1));
    seg_edge.insert((ic, ia), (t, 2));

    let mut sides = Vec::with_capacity(n);
    for i in 0..n {
        let key = (i, (i + 1) % n);
        sides.push(*seg_edge.get(&key).expect("boundary side triangulated"));
    }
    let mut internal = Vec::new();
    for (i, j) in diagonals {
        if let (Some(&e1), Some(&e2)) = (seg_edge.get(&(i, j)), seg_edge.get(&(j, i))) {
            internal.push((e1, e2));
        }
    }
    Ok((tris, sides, internal))
}

fn point_in_triangle(p: Vec2, a: Vec2, b: Vec2, c: Vec2) -> bool {
    let d1 = (b - a).cross(p - a);
    let d2 = (c - b).cross(p - b);
    let d3 = (a - c).cross(p - c);
    d1 >= -1e-12 && d2 >= -1e-12 && d3 >= -1e-12
}

// ---------------------------------------------------------------------------
// Bundled fixtures.
// ---------------------------------------------------------------------------

/// The regular octagon with opposite sides identified: genus 2, a single
/// cone point of angle 6pi (stratum H(2)). Oriented with one pair of sides
/// vertical; circumradius 1.
pub fn regular_octagon() -> TranslationSurface {
    let vertices: Vec<[f64; 2]> = (0..8)
        .map(|k| {
            let theta = TAU * (k as f64 + 0.5) / 8.0;
            [theta.cos(), theta.sin()]
        })
        .collect();
    let pairs = vec![[0, 4], [1, 5], [2, 6], [3, 7]];
    build_from_polygons(&[PolygonSpec { vertices, pairs }]).expect("octagon fixture")
}

/// A square-tiled surface from a pair of permutations: the right side of
/// square `i` is glued to the left side of `h[i]`, the top of `i` to the
/// bottom of `v[i]`.
pub fn origami(h: &[usize], v: &[usize]) -> Result<TranslationSurface> {
    let n = h.len();
    if v.len() != n {
        return Err(Error::BadGluing("permutation lengths differ".into()));
    }
    let square = |i: usize| -> Vec<[f64; 2]> {
        let x0 = 1.5 * i as f64; // charts are independent; keep squares apart
        vec![[x0, 0.0], [x0 + 1.0, 0.0], [x0 + 1.0, 1.0], [x0, 1.0]]
    };
    // local sides: 0 bottom, 1 right, 2 top, 3 left; global 4i + k
    let mut pairs = Vec::new();
    for i in 0..n {
        pairs.push([4 * i + 1, 4 * h[i] + 3]);
        pairs.push([4 * i + 2, 4 * v[i]]);
    }
    let mut polygons: Vec<PolygonSpec> = (0..n)
        .map(|i| PolygonSpec {
            vertices: square(i),
            pairs: vec![],
        })
        .collect();
    polygons[0].pairs = pairs;
    build_from_polygons(&polygons)
}

/// The four-square surface of genus 2 in H(1,1): two cone points of angle
/// 4pi, two horizontal cylinders of circumference 1 (plus one of
/// circumference 2), and the vertical vector (0,1) realized by four
/// distinct saddle connections.
pub fn four_square_surface() -> TranslationSurface {
    // h = (1 2), v = (0 2)(1 3): the commutator has cycle type (2,2)
    origami(&[0, 2, 1, 3], &[2, 3, 0, 1]).expect("four-square fixture")
}

/// Unit square torus with a single marked point (stratum H(0)).
pub fn square_torus() -> TranslationSurface {
    let polygons = vec![PolygonSpec {
        vertices: vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
        pairs: vec![[0, 2], [1, 3]],
    }];
    build_from_polygons(&polygons).expect("torus fixture")
}

/// Unit square torus with two marked points: one at the corner, one at the
/// interior offset `(a, b)` with `0 < a, b < 1`.
pub fn torus_two_marked(a: f64, b: f64) -> TranslationSurface {
    assert!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0);
    let p = Vec2::new(a, b);
    let corners = [
        Vec2::new(0.0, 0.0),
        Vec2::new(1.0, 0.0),
        Vec2::new(1.0, 1.0),
        Vec2::new(0.0, 1.0),
    ];
    // fan of four triangles around the interior point
    let tris: Vec<[Vec2; 3]> = (0..4)
        .map(|i| [corners[i], corners[(i + 1) % 4], p])
        .collect();
    let pairing = vec![
        // outer sides: bottom-top, right-left
        ((0, 0), (2, 0)),
        ((1, 0), (3, 0)),
        // fan diagonals
        ((0, 1), (1, 2)),
        ((1, 1), (2, 2)),
        ((2, 1), (3, 2)),
        ((3, 1), (0, 2)),
    ];
    TranslationSurface::from_triangles(tris, pairing).expect("two-marked torus fixture")
}
