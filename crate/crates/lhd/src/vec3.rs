//! Minimal fixed-size vector helpers used by the geometry paths.
//!
//! All intersection and lattice math runs in f64; mesh and tensor storage
//! stays f32. Keeping these helpers local (instead of pulling a linear
//! algebra crate) makes every floating-point operation on the deterministic
//! paths explicit.

pub type Vec3 = [f64; 3];

#[inline]
pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

#[inline]
pub fn widen(a: [f32; 3]) -> Vec3 {
    [a[0] as f64, a[1] as f64, a[2] as f64]
}

#[inline]
pub fn narrow(a: Vec3) -> [f32; 3] {
    [a[0] as f32, a[1] as f32, a[2] as f32]
}
