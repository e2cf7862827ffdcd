//! 2-D unit-square worlds with randomized walls forming narrow corridors.
//!
//! Obstacles are closed sets: a point on a wall or blob boundary counts as
//! a collision. Walls span the full square in one axis except for a single
//! gap of a requested width; blob discs model unseen corruption at test
//! time. A generated world remembers the free corridor box of every wall
//! (`gaps`) so corruption can be rejection-sampled without closing any
//! corridor.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rng::SeedStream;
use crate::{Error, Result};

/// Wall thickness used by the generator (unit-square coordinates).
pub const WALL_THICKNESS: f64 = 0.06;
/// Inflation of the stored corridor box beyond the wall band, along the
/// crossing axis. Keeps blob rejection conservative around gap approaches.
pub const GAP_MARGIN: f64 = 0.05;
/// Default sampling step for segment collision checks.
pub const DEFAULT_SEGMENT_STEP: f64 = 0.01;

/// Axis-aligned closed rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Rect {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl Rect {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Self {
        Rect { xmin, ymin, xmax, ymax }
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        p[0] >= self.xmin && p[0] <= self.xmax && p[1] >= self.ymin && p[1] <= self.ymax
    }

    pub fn center(&self) -> [f64; 2] {
        [0.5 * (self.xmin + self.xmax), 0.5 * (self.ymin + self.ymax)]
    }

    /// Squared distance from a point to this rectangle (0 inside).
    pub fn dist2(&self, p: [f64; 2]) -> f64 {
        let dx = (self.xmin - p[0]).max(0.0).max(p[0] - self.xmax);
        let dy = (self.ymin - p[1]).max(0.0).max(p[1] - self.ymax);
        dx * dx + dy * dy
    }
}

impl From<[f64; 4]> for Rect {
    fn from(v: [f64; 4]) -> Self {
        Rect::new(v[0], v[1], v[2], v[3])
    }
}

impl From<Rect> for [f64; 4] {
    fn from(r: Rect) -> Self {
        [r.xmin, r.ymin, r.xmax, r.ymax]
    }
}

/// Closed disc obstacle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Disc {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl Disc {
    pub fn new(cx: f64, cy: f64, r: f64) -> Self {
        Disc { cx, cy, r }
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        let dx = p[0] - self.cx;
        let dy = p[1] - self.cy;
        dx * dx + dy * dy <= self.r * self.r
    }
}

impl From<[f64; 3]> for Disc {
    fn from(v: [f64; 3]) -> Self {
        Disc::new(v[0], v[1], v[2])
    }
}

impl From<Disc> for [f64; 3] {
    fn from(d: Disc) -> Self {
        [d.cx, d.cy, d.r]
    }
}

/// A unit-square world: wall rectangles, blob discs, and the free corridor
/// box of each generated wall. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct World2D {
    pub walls: Vec<Rect>,
    pub blobs: Vec<Disc>,
    #[serde(default)]
    pub gaps: Vec<Rect>,
}

impl World2D {
    pub fn empty() -> Self {
        World2D::default()
    }

    fn check_bounds(p: [f64; 2]) -> Result<()> {
        if !(0.0..=1.0).contains(&p[0]) || !(0.0..=1.0).contains(&p[1]) {
            return Err(Error::domain(format!(
                "point ({}, {}) outside [0,1]^2",
                p[0], p[1]
            )));
        }
        Ok(())
    }

    /// True iff `p` lies in no wall rectangle and no blob disc.
    ///
    /// Obstacles are closed, so boundary points are in collision.
    pub fn is_free(&self, p: [f64; 2]) -> Result<bool> {
        Self::check_bounds(p)?;
        Ok(self.free_unchecked(p))
    }

    /// Collision predicate without the bounds check. Callers must ensure
    /// `p` is in `[0,1]^2`.
    pub fn free_unchecked(&self, p: [f64; 2]) -> bool {
        !self.walls.iter().any(|w| w.contains(p)) && !self.blobs.iter().any(|b| b.contains(p))
    }

    /// True iff every point sampled at spacing <= `step` along `[a, b]`,
    /// including both endpoints, is free.
    pub fn segment_free(&self, a: [f64; 2], b: [f64; 2], step: f64) -> Result<bool> {
        Self::check_bounds(a)?;
        Self::check_bounds(b)?;
        if step <= 0.0 {
            return Err(Error::domain("segment step must be positive"));
        }
        Ok(self.segment_free_unchecked(a, b, step))
    }

    pub fn segment_free_unchecked(&self, a: [f64; 2], b: [f64; 2], step: f64) -> bool {
        let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
        if len == 0.0 {
            return self.free_unchecked(a);
        }
        let n = (len / step).ceil() as usize;
        for i in 0..=n {
            let t = i as f64 / n as f64;
            let p = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
            if !self.free_unchecked(p) {
                return false;
            }
        }
        true
    }
}

/// Generate a world of `n_walls` parallel walls, each spanning the square
/// in one axis except for a single gap of width exactly `corridor_width`
/// at a seeded random offset. Equal seeds and parameters produce
/// bit-identical worlds.
pub fn generate_world(seed: u64, n_walls: usize, corridor_width: f64) -> Result<World2D> {
    if !(corridor_width > 0.0 && corridor_width < 1.0) {
        return Err(Error::domain("corridor_width must lie in (0, 1)"));
    }
    let mut rng = SeedStream::root(seed).stream("world-gen").rng();
    let mut world = World2D::empty();
    if n_walls == 0 {
        return Ok(world);
    }

    // Walls are parallel so every corridor stays reachable: free space is a
    // sequence of slabs joined only through the gaps.
    let vertical = rng.gen::<bool>();
    let mut positions: Vec<f64> = Vec::with_capacity(n_walls);
    let mut tries = 0;
    while positions.len() < n_walls {
        tries += 1;
        if tries > 1000 {
            return Err(Error::generation(format!(
                "could not place {} separated walls",
                n_walls
            )));
        }
        let c = rng.gen_range(0.15..0.85);
        if positions.iter().all(|&p| (p - c).abs() >= 0.1) {
            positions.push(c);
        }
    }

    let half_gap = corridor_width / 2.0;
    let lo = half_gap + 0.05;
    let hi = 1.0 - half_gap - 0.05;
    if lo >= hi {
        return Err(Error::domain("corridor_width too large for the unit square"));
    }
    for &c in &positions {
        let gap_center = rng.gen_range(lo..hi);
        let (b0, b1) = (c - WALL_THICKNESS / 2.0, c + WALL_THICKNESS / 2.0);
        let (g0, g1) = (gap_center - half_gap, gap_center + half_gap);
        if vertical {
            world.walls.push(Rect::new(b0, 0.0, b1, g0));
            world.walls.push(Rect::new(b0, g1, b1, 1.0));
            world
                .gaps
                .push(Rect::new((b0 - GAP_MARGIN).max(0.0), g0, (b1 + GAP_MARGIN).min(1.0), g1));
        } else {
            world.walls.push(Rect::new(0.0, b0, g0, b1));
            world.walls.push(Rect::new(g1, b0, 1.0, b1));
            world
                .gaps
                .push(Rect::new(g0, (b0 - GAP_MARGIN).max(0.0), g1, (b1 + GAP_MARGIN).min(1.0)));
        }
    }
    Ok(world)
}

/// Add `n_blobs` random discs with radii in `(0, r_max]`, rejection-sampled
/// so no disc touches any corridor box. The input world is unchanged;
/// corruption returns a new world.
pub fn corrupt_with_blobs(
    world: &World2D,
    seed: u64,
    n_blobs: usize,
    r_max: f64,
) -> Result<World2D> {
    if r_max <= 0.0 {
        return Err(Error::domain("r_max must be positive"));
    }
    let mut rng = SeedStream::root(seed).stream("blobs").rng();
    let mut out = world.clone();
    for i in 0..n_blobs {
        let mut placed = false;
        for _ in 0..200 {
            let c = [rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)];
            let r = rng.gen_range(0.0..r_max).max(r_max * 1e-3);
            let clear = out.gaps.iter().all(|g| g.dist2(c) > r * r);
            if clear {
                out.blobs.push(Disc::new(c[0], c[1], r));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::generation(format!(
                "rejection budget exhausted placing blob {} of {}",
                i + 1,
                n_blobs
            )));
        }
    }
    Ok(out)
}

/// A motion planning problem: free space plus start and goal points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanningProblem {
    pub world: World2D,
    pub x_init: [f64; 2],
    pub x_goal: [f64; 2],
}

impl PlanningProblem {
    /// Construct after validating that both endpoints are collision-free.
    pub fn new(world: World2D, x_init: [f64; 2], x_goal: [f64; 2]) -> Result<Self> {
        if !world.is_free(x_init)? {
            return Err(Error::domain("x_init is not collision-free"));
        }
        if !world.is_free(x_goal)? {
            return Err(Error::domain("x_goal is not collision-free"));
        }
        Ok(PlanningProblem { world, x_init, x_goal })
    }

    /// Sample a free point by rejection.
    pub fn sample_free(world: &World2D, rng: &mut impl Rng) -> Result<[f64; 2]> {
        for _ in 0..10_000 {
            let p = [rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)];
            if world.free_unchecked(p) {
                return Ok(p);
            }
        }
        Err(Error::generation("could not sample a free point"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_world_all_free() {
        let w = generate_world(11, 0, 0.1).unwrap();
        assert!(w.walls.is_empty());
        assert!(w.is_free([0.3, 0.8]).unwrap());
        assert!(w.is_free([0.0, 0.0]).unwrap());
    }

    #[test]
    fn single_wall_gap_is_free_wall_is_not() {
        let w = generate_world(5, 1, 0.1).unwrap();
        assert_eq!(w.walls.len(), 2);
        assert_eq!(w.gaps.len(), 1);
        let gap = w.gaps[0].center();
        assert!(w.is_free(gap).unwrap(), "gap center must be free");
        // A point on the wall band but outside the gap.
        let wall_pt = w.walls[0].center();
        assert!(!w.is_free(wall_pt).unwrap());
    }

    #[test]
    fn equal_seeds_equal_worlds() {
        let a = generate_world(42, 3, 0.12).unwrap();
        let b = generate_world(42, 3, 0.12).unwrap();
        assert_eq!(a, b);
        let c = generate_world(43, 3, 0.12).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn wall_center_is_collision() {
        let mut w = World2D::empty();
        w.walls.push(Rect::new(0.4, 0.0, 0.5, 1.0));
        assert!(!w.is_free([0.45, 0.5]).unwrap());
        assert!(w.is_free([0.2, 0.5]).unwrap());
    }

    #[test]
    fn blob_boundary_convention() {
        let mut w = World2D::empty();
        w.blobs.push(Disc::new(0.5, 0.5, 0.1));
        // On the boundary: closed set, in collision.
        assert!(!w.is_free([0.6, 0.5]).unwrap());
        // Just outside.
        assert!(w.is_free([0.6 + 1e-9, 0.5]).unwrap());
    }

    #[test]
    fn out_of_bounds_is_domain_error() {
        let w = World2D::empty();
        assert!(w.is_free([1.5, 0.5]).is_err());
        assert!(w.segment_free([0.0, 0.0], [1.2, 0.0], 0.01).is_err());
    }

    #[test]
    fn zero_length_segment() {
        let w = World2D::empty();
        assert!(w.segment_free([0.3, 0.3], [0.3, 0.3], 0.01).unwrap());
    }

    #[test]
    fn segment_through_wall_vs_gap() {
        // Deterministic single-gap wall: vertical band x in [0.47, 0.53],
        // gap y in [0.45, 0.55].
        let mut w = World2D::empty();
        w.walls.push(Rect::new(0.47, 0.0, 0.53, 0.45));
        w.walls.push(Rect::new(0.47, 0.55, 0.53, 1.0));
        w.gaps.push(Rect::new(0.42, 0.45, 0.58, 0.55));

        // Crossing away from the gap: blocked. Oracle: the segment's y stays
        // at 0.2 < 0.45 while x sweeps the band, so it must intersect.
        assert!(!w.segment_free([0.1, 0.2], [0.9, 0.2], 0.01).unwrap());
        // Through the gap center with step = gap/10.
        assert!(w.segment_free([0.1, 0.5], [0.9, 0.5], 0.01).unwrap());
    }

    #[test]
    fn corrupt_zero_blobs_is_identity() {
        let w = generate_world(3, 1, 0.1).unwrap();
        let c = corrupt_with_blobs(&w, 9, 0, 0.05).unwrap();
        assert_eq!(w, c);
    }

    #[test]
    fn corrupt_adds_exact_count_and_keeps_gap_open() {
        let w = generate_world(3, 2, 0.12).unwrap();
        let c = corrupt_with_blobs(&w, 9, 8, 0.06).unwrap();
        assert_eq!(c.blobs.len(), 8);
        assert_eq!(c.walls, w.walls);
        for g in &c.gaps {
            assert!(c.is_free(g.center()).unwrap(), "corridor center stays free");
        }
    }

    #[test]
    fn corrupt_determinism() {
        let w = generate_world(3, 1, 0.1).unwrap();
        let a = corrupt_with_blobs(&w, 9, 5, 0.05).unwrap();
        let b = corrupt_with_blobs(&w, 9, 5, 0.05).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn problem_requires_free_endpoints() {
        let mut w = World2D::empty();
        w.walls.push(Rect::new(0.4, 0.4, 0.6, 0.6));
        assert!(PlanningProblem::new(w.clone(), [0.5, 0.5], [0.9, 0.9]).is_err());
        assert!(PlanningProblem::new(w, [0.1, 0.1], [0.9, 0.9]).is_ok());
    }

    proptest! {
        #[test]
        fn adding_obstacles_never_frees_a_point(
            px in 0.0f64..1.0, py in 0.0f64..1.0,
            cx in 0.0f64..1.0, cy in 0.0f64..1.0, r in 0.01f64..0.3,
        ) {
            let base = generate_world(17, 2, 0.15).unwrap();
            let mut bigger = base.clone();
            bigger.blobs.push(Disc::new(cx, cy, r));
            let before = base.free_unchecked([px, py]);
            let after = bigger.free_unchecked([px, py]);
            // monotone: free can only shrink
            prop_assert!(!(!before && after));
        }

        #[test]
        fn segment_free_is_symmetric(
            ax in 0.0f64..1.0, ay in 0.0f64..1.0,
            bx in 0.0f64..1.0, by in 0.0f64..1.0,
        ) {
            let w = generate_world(23, 2, 0.1).unwrap();
            let f = w.segment_free([ax, ay], [bx, by], 0.01).unwrap();
            let g = w.segment_free([bx, by], [ax, ay], 0.01).unwrap();
            prop_assert_eq!(f, g);
        }
    }
}
