//! Virtual spinning-LiDAR scan lattice and depth/point conversions.
//!
//! The sensor fires one ray per (ring, column) cell. Rings are fixed
//! elevation channels, ring 0 topmost; columns sweep azimuth in fixed steps
//! centered on the +x axis. Depth is range along the ray in millimeters,
//! stored as f32 with 0.0 as the hole sentinel (no return).

use crate::error::{Error, Result};
use crate::vec3::{self, Vec3};

/// Spherical ray lattice of the virtual LiDAR.
///
/// Defaults model an HDL-32E-class sensor: 32 rings over +10.67..-30.67
/// degrees elevation, 1024 columns at 0.2 degrees, centered on +x.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanGrid {
    rings: usize,
    columns: usize,
    vertical_max_deg: f64,
    vertical_min_deg: f64,
    horizontal_step_deg: f64,
    horizontal_center_deg: f64,
}

impl Default for ScanGrid {
    fn default() -> Self {
        Self::new(32, 1024, 10.67, -30.67, 0.2, 0.0).expect("default grid is valid")
    }
}

impl ScanGrid {
    pub fn new(
        rings: usize,
        columns: usize,
        vertical_max_deg: f64,
        vertical_min_deg: f64,
        horizontal_step_deg: f64,
        horizontal_center_deg: f64,
    ) -> Result<Self> {
        if rings < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2 rings, got {rings}")));
        }
        if columns < 1 {
            return Err(Error::InvalidGrid("need at least 1 column".into()));
        }
        if !(vertical_max_deg > vertical_min_deg) {
            return Err(Error::InvalidGrid(format!(
                "vertical_max ({vertical_max_deg}) must exceed vertical_min ({vertical_min_deg})"
            )));
        }
        if !(horizontal_step_deg > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "horizontal step must be positive, got {horizontal_step_deg}"
            )));
        }
        let span = columns as f64 * horizontal_step_deg;
        if span > 360.0 {
            return Err(Error::InvalidGrid(format!(
                "columns x horizontal_step = {span} exceeds 360 degrees"
            )));
        }
        Ok(ScanGrid {
            rings,
            columns,
            vertical_max_deg,
            vertical_min_deg,
            horizontal_step_deg,
            horizontal_center_deg,
        })
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn vertical_max_deg(&self) -> f64 {
        self.vertical_max_deg
    }

    pub fn vertical_min_deg(&self) -> f64 {
        self.vertical_min_deg
    }

    pub fn horizontal_step_deg(&self) -> f64 {
        self.horizontal_step_deg
    }

    pub fn horizontal_center_deg(&self) -> f64 {
        self.horizontal_center_deg
    }

    pub fn cell_count(&self) -> usize {
        self.rings * self.columns
    }

    /// Elevation spacing between adjacent rings, derived exactly from the
    /// endpoints rather than any rounded nominal resolution.
    pub fn vertical_step_deg(&self) -> f64 {
        (self.vertical_max_deg - self.vertical_min_deg) / (self.rings as f64 - 1.0)
    }

    /// Elevation of a ring; ring 0 is the topmost.
    pub fn elevation_deg(&self, ring: usize) -> f64 {
        self.vertical_max_deg - ring as f64 * self.vertical_step_deg()
    }

    /// Azimuth of a column; the lattice is symmetric about the center.
    pub fn azimuth_deg(&self, col: usize) -> f64 {
        self.horizontal_center_deg
            + (col as f64 - (self.columns as f64 - 1.0) / 2.0) * self.horizontal_step_deg
    }

    /// Half horizontal field of view in degrees.
    pub fn horizontal_half_span_deg(&self) -> f64 {
        self.columns as f64 * self.horizontal_step_deg / 2.0
    }

    fn check_index(&self, ring: usize, col: usize) -> Result<()> {
        if ring >= self.rings || col >= self.columns {
            return Err(Error::IndexOutOfRange {
                ring,
                col,
                rings: self.rings,
                columns: self.columns,
            });
        }
        Ok(())
    }

    /// Unit direction of the ray fired from cell (ring, col).
    pub fn ray_direction(&self, ring: usize, col: usize) -> Result<Vec3> {
        self.check_index(ring, col)?;
        let phi = self.elevation_deg(ring).to_radians();
        let theta = self.azimuth_deg(col).to_radians();
        let (cos_phi, sin_phi) = (libm::cos(phi), libm::sin(phi));
        let (cos_theta, sin_theta) = (libm::cos(theta), libm::sin(theta));
        Ok([cos_phi * cos_theta, cos_phi * sin_theta, sin_phi])
    }
}

/// Placement of the virtual sensor: world-frame origin in millimeters,
/// above the ground plane z = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensorPose {
    origin: Vec3,
}

impl Default for SensorPose {
    fn default() -> Self {
        SensorPose {
            origin: [0.0, 0.0, 800.0],
        }
    }
}

impl SensorPose {
    pub fn new(origin: Vec3) -> Result<Self> {
        if !(origin[2] > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "sensor origin z must be positive, got {}",
                origin[2]
            )));
        }
        Ok(SensorPose { origin })
    }

    /// Sensor mounted on the z axis at the given height.
    pub fn at_height(z_mm: f64) -> Result<Self> {
        Self::new([0.0, 0.0, z_mm])
    }

    pub fn origin(&self) -> Vec3 {
        self.origin
    }
}

/// Range image: one f32 range in millimeters per lattice cell, row-major
/// ring-then-column. 0.0 marks a hole.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthMap {
    rings: usize,
    cols: usize,
    data: Vec<f32>,
}

impl DepthMap {
    /// All-hole map.
    pub fn new_holes(rings: usize, cols: usize) -> Self {
        DepthMap {
            rings,
            cols,
            data: vec![0.0; rings * cols],
        }
    }

    pub fn from_data(rings: usize, cols: usize, data: Vec<f32>) -> Result<Self> {
        if data.len() != rings * cols {
            return Err(Error::DimensionMismatch {
                expected_rings: rings,
                expected_cols: cols,
                rings: data.len() / cols.max(1),
                cols,
            });
        }
        Ok(DepthMap { rings, cols, data })
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, ring: usize, col: usize) -> f32 {
        self.data[ring * self.cols + col]
    }

    pub fn set(&mut self, ring: usize, col: usize, value: f32) {
        self.data[ring * self.cols + col] = value;
    }

    pub fn is_hole(&self, ring: usize, col: usize) -> bool {
        self.get(ring, col) == 0.0
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn valid_count(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0.0).count()
    }

    pub fn hole_count(&self) -> usize {
        self.data.iter().filter(|&&v| v == 0.0).count()
    }

    pub fn matches_grid(&self, grid: &ScanGrid) -> bool {
        self.rings == grid.rings() && self.cols == grid.columns()
    }

    /// Every value must be 0.0 (hole) or strictly positive and finite.
    pub fn validate(&self) -> std::result::Result<(), String> {
        for r in 0..self.rings {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !(v == 0.0 || (v > 0.0 && v.is_finite())) {
                    return Err(format!("value {v} at ring {r}, col {c}"));
                }
            }
        }
        Ok(())
    }
}

/// Per-cell world-frame xyz in millimeters; holes carry (0, 0, 0).
#[derive(Debug, Clone, PartialEq)]
pub struct XyzMap {
    rings: usize,
    cols: usize,
    data: Vec<[f32; 3]>,
}

impl XyzMap {
    pub fn new_zeros(rings: usize, cols: usize) -> Self {
        XyzMap {
            rings,
            cols,
            data: vec![[0.0; 3]; rings * cols],
        }
    }

    pub fn from_data(rings: usize, cols: usize, data: Vec<[f32; 3]>) -> Result<Self> {
        if data.len() != rings * cols {
            return Err(Error::DimensionMismatch {
                expected_rings: rings,
                expected_cols: cols,
                rings: data.len() / cols.max(1),
                cols,
            });
        }
        Ok(XyzMap { rings, cols, data })
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, ring: usize, col: usize) -> [f32; 3] {
        self.data[ring * self.cols + col]
    }

    pub fn set(&mut self, ring: usize, col: usize, value: [f32; 3]) {
        self.data[ring * self.cols + col] = value;
    }

    pub fn data(&self) -> &[[f32; 3]] {
        &self.data
    }
}

/// Per-cell binary human label (1 = human).
#[derive(Debug, Clone, PartialEq)]
pub struct LabelMap {
    rings: usize,
    cols: usize,
    data: Vec<u8>,
}

impl LabelMap {
    pub fn new_zeros(rings: usize, cols: usize) -> Self {
        LabelMap {
            rings,
            cols,
            data: vec![0; rings * cols],
        }
    }

    pub fn from_data(rings: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rings * cols {
            return Err(Error::DimensionMismatch {
                expected_rings: rings,
                expected_cols: cols,
                rings: data.len() / cols.max(1),
                cols,
            });
        }
        Ok(LabelMap { rings, cols, data })
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, ring: usize, col: usize) -> u8 {
        self.data[ring * self.cols + col]
    }

    pub fn set(&mut self, ring: usize, col: usize, value: u8) {
        self.data[ring * self.cols + col] = value;
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn positive_count(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }
}

/// Per-cell mesh-instance identity from a render; None where the ray missed.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceMap {
    rings: usize,
    cols: usize,
    data: Vec<Option<u32>>,
}

impl InstanceMap {
    pub fn new_empty(rings: usize, cols: usize) -> Self {
        InstanceMap {
            rings,
            cols,
            data: vec![None; rings * cols],
        }
    }

    pub fn rings(&self) -> usize {
        self.rings
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, ring: usize, col: usize) -> Option<u32> {
        self.data[ring * self.cols + col]
    }

    pub fn set(&mut self, ring: usize, col: usize, value: Option<u32>) {
        self.data[ring * self.cols + col] = value;
    }

    pub fn data(&self) -> &[Option<u32>] {
        &self.data
    }
}

/// World-frame point of one valid depth reading.
///
/// Holes (depth <= 0) have no point; callers emit (0,0,0) in xyz maps.
pub fn depth_to_point(
    grid: &ScanGrid,
    pose: &SensorPose,
    ring: usize,
    col: usize,
    depth_mm: f64,
) -> Result<Vec3> {
    if !(depth_mm > 0.0) || !depth_mm.is_finite() {
        return Err(Error::HoleDepth(depth_mm as f32));
    }
    let dir = grid.ray_direction(ring, col)?;
    Ok(vec3::add(pose.origin(), vec3::scale(dir, depth_mm)))
}

/// Expand a depth map into the xyz map; hole pixels emit (0,0,0).
pub fn depthmap_to_xyzmap(grid: &ScanGrid, pose: &SensorPose, depth: &DepthMap) -> Result<XyzMap> {
    if !depth.matches_grid(grid) {
        return Err(Error::DimensionMismatch {
            expected_rings: grid.rings(),
            expected_cols: grid.columns(),
            rings: depth.rings(),
            cols: depth.cols(),
        });
    }
    let mut xyz = XyzMap::new_zeros(grid.rings(), grid.columns());
    for ring in 0..grid.rings() {
        for col in 0..grid.columns() {
            let d = depth.get(ring, col);
            if d != 0.0 {
                let p = depth_to_point(grid, pose, ring, col, d as f64)?;
                xyz.set(ring, col, vec3::narrow(p));
            }
        }
    }
    Ok(xyz)
}

/// Nearest lattice cell with ties toward the lower index: maps x to the
/// integer i with i - 0.5 < x <= i + 0.5.
fn nearest_index(x: f64) -> i64 {
    libm::ceil(x - 0.5) as i64
}

fn wrap_deg(mut d: f64) -> f64 {
    while d <= -180.0 {
        d += 360.0;
    }
    while d > 180.0 {
        d -= 360.0;
    }
    d
}

/// Nearest lattice cell of a world point, or None when the point lies
/// outside the sensor field of view.
pub fn point_to_pixel(
    grid: &ScanGrid,
    pose: &SensorPose,
    point: Vec3,
) -> Result<Option<(usize, usize)>> {
    let v = vec3::sub(point, pose.origin());
    let n = vec3::norm(v);
    if n < 1e-9 {
        return Err(Error::ZeroDirection);
    }
    let elevation = libm::asin((v[2] / n).clamp(-1.0, 1.0)).to_degrees();
    let azimuth = libm::atan2(v[1], v[0]).to_degrees();

    let ring_pos = (grid.vertical_max_deg() - elevation) / grid.vertical_step_deg();
    let col_pos = wrap_deg(azimuth - grid.horizontal_center_deg()) / grid.horizontal_step_deg()
        + (grid.columns() as f64 - 1.0) / 2.0;

    let ring = nearest_index(ring_pos);
    let col = nearest_index(col_pos);
    if ring < 0 || ring >= grid.rings() as i64 || col < 0 || col >= grid.columns() as i64 {
        return Ok(None);
    }
    Ok(Some((ring as usize, col as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn default_grid_matches_sensor_datasheet() {
        let g = ScanGrid::default();
        assert_eq!(g.rings(), 32);
        assert_eq!(g.columns(), 1024);
        assert_close(g.vertical_max_deg(), 10.67, 0.0);
        assert_close(g.vertical_min_deg(), -30.67, 0.0);
        assert_close(g.horizontal_step_deg(), 0.2, 0.0);
        assert_close(g.columns() as f64 * g.horizontal_step_deg(), 204.8, 1e-12);
    }

    #[test]
    fn ray_direction_frozen_values() {
        let g = ScanGrid::default();
        // Trigonometric evaluation at phi=+10.67deg, theta=+0.1deg.
        let d = g.ray_direction(0, 512).unwrap();
        assert_close(d[0], 0.982708379904868, 1e-9);
        assert_close(d[1], 0.001715151423178, 1e-9);
        assert_close(d[2], 0.185152095101151, 1e-9);
        // phi=-30.67deg, theta=-102.3deg.
        let d = g.ray_direction(31, 0).unwrap();
        assert_close(d[0], -0.183231583653507, 1e-9);
        assert_close(d[1], -0.840375924936550, 1e-9);
        assert_close(d[2], -0.510092630351456, 1e-9);
    }

    #[test]
    fn ray_direction_out_of_range() {
        let g = ScanGrid::default();
        assert!(matches!(
            g.ray_direction(32, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            g.ray_direction(0, 1024),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn every_ray_is_unit_length() {
        let g = ScanGrid::default();
        for ring in 0..g.rings() {
            for col in 0..g.columns() {
                let d = g.ray_direction(ring, col).unwrap();
                assert!((vec3::norm(d) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn lattice_spacing_is_exact() {
        let g = ScanGrid::default();
        let dphi = g.vertical_step_deg();
        assert_close(dphi, 41.34 / 31.0, 1e-12);
        for ring in 1..g.rings() {
            assert_close(
                g.elevation_deg(ring - 1) - g.elevation_deg(ring),
                dphi,
                1e-12,
            );
        }
        for col in 1..g.columns() {
            assert_close(
                g.azimuth_deg(col) - g.azimuth_deg(col - 1),
                g.horizontal_step_deg(),
                1e-12,
            );
        }
    }

    #[test]
    fn grid_validation_rejects_bad_parameters() {
        assert!(ScanGrid::new(1, 1024, 10.0, -30.0, 0.2, 0.0).is_err());
        assert!(ScanGrid::new(32, 1024, -30.0, 10.0, 0.2, 0.0).is_err());
        assert!(ScanGrid::new(32, 1024, 10.0, -30.0, 0.0, 0.0).is_err());
        assert!(ScanGrid::new(32, 2048, 10.0, -30.0, 0.2, 0.0).is_err()); // 409.6 deg
    }

    #[test]
    fn depth_to_point_rejects_holes() {
        let g = ScanGrid::default();
        let p = SensorPose::default();
        assert!(matches!(
            depth_to_point(&g, &p, 3, 7, 0.0),
            Err(Error::HoleDepth(_))
        ));
        assert!(depth_to_point(&g, &p, 3, 7, -5.0).is_err());
    }

    #[test]
    fn depth_to_point_axis_aligned() {
        // Grid crafted so cell (1,1) fires exactly along +x.
        let g = ScanGrid::new(3, 3, 10.0, -10.0, 1.0, 0.0).unwrap();
        let pose = SensorPose::default();
        let d = g.ray_direction(1, 1).unwrap();
        assert_eq!(d, [1.0, 0.0, 0.0]);
        let p = depth_to_point(&g, &pose, 1, 1, 1000.0).unwrap();
        assert_eq!(p, [1000.0, 0.0, 800.0]);
    }

    #[test]
    fn depth_to_point_frozen_value() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let p = depth_to_point(&g, &pose, 0, 512, 2000.0).unwrap();
        assert_close(p[0], 1965.416759809736, 1e-6);
        assert_close(p[1], 3.430302846357, 1e-6);
        assert_close(p[2], 1170.304190202301, 1e-6);
    }

    #[test]
    fn depth_to_point_distance_equals_depth() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let ring = rng.random_range(0..g.rings());
            let col = rng.random_range(0..g.columns());
            let depth = 100.0 + rng.random::<f64>() * 24900.0;
            let p = depth_to_point(&g, &pose, ring, col, depth).unwrap();
            let dist = vec3::norm(vec3::sub(p, pose.origin()));
            assert!((dist - depth).abs() / depth < 1e-6);
        }
    }

    #[test]
    fn xyzmap_all_holes_is_all_zeros() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let depth = DepthMap::new_holes(32, 1024);
        let xyz = depthmap_to_xyzmap(&g, &pose, &depth).unwrap();
        assert!(xyz.data().iter().all(|&p| p == [0.0; 3]));
    }

    #[test]
    fn xyzmap_single_valid_pixel() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let mut depth = DepthMap::new_holes(32, 1024);
        depth.set(17, 300, 4321.0);
        let xyz = depthmap_to_xyzmap(&g, &pose, &depth).unwrap();
        let mut nonzero = 0;
        for r in 0..32 {
            for c in 0..1024 {
                if xyz.get(r, c) != [0.0; 3] {
                    nonzero += 1;
                    assert_eq!((r, c), (17, 300));
                }
            }
        }
        assert_eq!(nonzero, 1);
    }

    #[test]
    fn xyzmap_preserves_hole_set_and_distances() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut depth = DepthMap::new_holes(32, 1024);
        for r in 0..32 {
            for c in 0..1024 {
                if rng.random::<f64>() < 0.5 {
                    depth.set(r, c, (100.0 + rng.random::<f64>() * 24900.0) as f32);
                }
            }
        }
        let xyz = depthmap_to_xyzmap(&g, &pose, &depth).unwrap();
        let origin = pose.origin();
        for r in 0..32 {
            for c in 0..1024 {
                let p = xyz.get(r, c);
                if depth.is_hole(r, c) {
                    assert_eq!(p, [0.0; 3]);
                } else {
                    assert_ne!(p, [0.0; 3]);
                    let d = depth.get(r, c) as f64;
                    let dist = vec3::norm(vec3::sub(vec3::widen(p), origin));
                    assert!((dist - d).abs() / d < 1e-5);
                }
            }
        }
    }

    #[test]
    fn xyzmap_dimension_mismatch() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let depth = DepthMap::new_holes(16, 1024);
        assert!(matches!(
            depthmap_to_xyzmap(&g, &pose, &depth),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn point_to_pixel_round_trip_on_lattice() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        for &depth in &[100.0, 797.0, 5000.0, 25000.0] {
            for ring in 0..g.rings() {
                for col in (0..g.columns()).step_by(7) {
                    let p = depth_to_point(&g, &pose, ring, col, depth).unwrap();
                    let back = point_to_pixel(&g, &pose, p).unwrap();
                    assert_eq!(back, Some((ring, col)), "depth {depth} ring {ring} col {col}");
                }
            }
        }
    }

    #[test]
    fn point_behind_sensor_is_out_of_fov() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let p = [-5000.0, 0.0, 800.0];
        assert_eq!(point_to_pixel(&g, &pose, p).unwrap(), None);
    }

    #[test]
    fn point_at_origin_is_an_error() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        assert!(matches!(
            point_to_pixel(&g, &pose, pose.origin()),
            Err(Error::ZeroDirection)
        ));
    }

    #[test]
    fn point_to_pixel_matches_brute_force_nearest_cell() {
        let g = ScanGrid::default();
        let pose = SensorPose::default();
        let dphi = g.vertical_step_deg();
        let dtheta = g.horizontal_step_deg();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..300 {
            let p = [
                rng.random_range(-30000.0..30000.0),
                rng.random_range(-30000.0..30000.0),
                rng.random_range(-20000.0..20000.0),
            ];
            let v = vec3::sub(p, pose.origin());
            let n = vec3::norm(v);
            if n < 1.0 {
                continue;
            }
            let elevation = (v[2] / n).asin().to_degrees();
            let azimuth = v[1].atan2(v[0]).to_degrees();

            // Exhaustive nearest-by-angle search per axis, ties to lower index.
            let mut best_ring = 0usize;
            for r in 0..g.rings() {
                if (g.elevation_deg(r) - elevation).abs()
                    < (g.elevation_deg(best_ring) - elevation).abs()
                {
                    best_ring = r;
                }
            }
            let mut best_col = 0usize;
            for c in 0..g.columns() {
                if wrap_deg(g.azimuth_deg(c) - azimuth).abs()
                    < wrap_deg(g.azimuth_deg(best_col) - azimuth).abs()
                {
                    best_col = c;
                }
            }
            let in_fov = (g.elevation_deg(best_ring) - elevation).abs() <= dphi / 2.0
                && wrap_deg(g.azimuth_deg(best_col) - azimuth).abs() <= dtheta / 2.0;

            let got = point_to_pixel(&g, &pose, p).unwrap();
            if in_fov {
                assert_eq!(got, Some((best_ring, best_col)), "point {p:?}");
            } else {
                assert_eq!(got, None, "point {p:?}");
            }
        }
    }
}
