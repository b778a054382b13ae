//! Triangulated capsule generation.
//!
//! Every body segment is one capsule meshed at a fixed resolution of
//! 12 radial x 6 axial segments: two pole fans plus four quad bands
//! (hemisphere ring, lower cylinder, upper cylinder, hemisphere ring).

use crate::vec3::{self, Vec3};

pub const RADIAL_SEGMENTS: usize = 12;

/// Orthonormal frame (u, v) perpendicular to the capsule axis w, chosen
/// deterministically so identical inputs always mesh identically.
fn radial_frame(w: Vec3) -> (Vec3, Vec3) {
    let up = [0.0, 0.0, 1.0];
    let u = if w[2].abs() < 0.999 {
        let c = vec3::cross(w, up);
        vec3::scale(c, 1.0 / vec3::norm(c))
    } else {
        [1.0, 0.0, 0.0]
    };
    let v = vec3::cross(w, u);
    (u, v)
}

/// Append a capsule from `p0` to `p1` with the given radius to the
/// vertex/triangle buffers. Millimeters in, f32 vertices out.
pub fn append_capsule(
    p0: Vec3,
    p1: Vec3,
    radius: f64,
    vertices: &mut Vec<[f32; 3]>,
    triangles: &mut Vec<[u32; 3]>,
) {
    let axis = vec3::sub(p1, p0);
    let len = vec3::norm(axis);
    debug_assert!(len > 1e-9, "capsule axis must have positive length");
    debug_assert!(radius > 0.0, "capsule radius must be positive");
    let w = vec3::scale(axis, 1.0 / len);
    let (u, v) = radial_frame(w);
    let mid = vec3::scale(vec3::add(p0, p1), 0.5);

    let base = vertices.len() as u32;

    // Latitude stations from bottom pole to top pole. Each ring entry is
    // (axial center, ring radius, offset of the ring plane along w).
    let half = std::f64::consts::FRAC_1_SQRT_2; // sin/cos of 45 degrees
    let rings: [(Vec3, f64, f64); 5] = [
        (p0, radius * half, -radius * half), // bottom hemisphere at -45 deg
        (p0, radius, 0.0),                   // cylinder bottom
        (mid, radius, 0.0),                  // cylinder middle
        (p1, radius, 0.0),                   // cylinder top
        (p1, radius * half, radius * half),  // top hemisphere at +45 deg
    ];

    vertices.push(vec3::narrow(vec3::add(p0, vec3::scale(w, -radius))));
    for &(center, ring_r, along) in &rings {
        let ring_center = vec3::add(center, vec3::scale(w, along));
        for k in 0..RADIAL_SEGMENTS {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / RADIAL_SEGMENTS as f64;
            let radial = vec3::add(
                vec3::scale(u, libm::cos(ang)),
                vec3::scale(v, libm::sin(ang)),
            );
            vertices.push(vec3::narrow(vec3::add(
                ring_center,
                vec3::scale(radial, ring_r),
            )));
        }
    }
    vertices.push(vec3::narrow(vec3::add(p1, vec3::scale(w, radius))));

    let n = RADIAL_SEGMENTS as u32;
    let bottom_pole = base;
    let ring_start = |i: u32| base + 1 + i * n;
    let top_pole = base + 1 + 5 * n;

    for k in 0..n {
        let k1 = (k + 1) % n;
        triangles.push([bottom_pole, ring_start(0) + k1, ring_start(0) + k]);
    }
    for band in 0..4u32 {
        let lo = ring_start(band);
        let hi = ring_start(band + 1);
        for k in 0..n {
            let k1 = (k + 1) % n;
            triangles.push([lo + k, lo + k1, hi + k1]);
            triangles.push([lo + k, hi + k1, hi + k]);
        }
    }
    for k in 0..n {
        let k1 = (k + 1) % n;
        triangles.push([top_pole, ring_start(4) + k, ring_start(4) + k1]);
    }
}
