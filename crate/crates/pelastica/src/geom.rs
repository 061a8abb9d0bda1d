//! Small 2-D vector type and polygon primitives shared by the curve modules.

use serde::{Deserialize, Serialize};

/// Point / vector in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Unit vector at angle `theta` from the x-axis.
    pub fn dir(theta: f64) -> Self {
        Vec2::new(theta.cos(), theta.sin())
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    /// Counterclockwise rotation by 90 degrees.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn rotate(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Sign of the signed area of triangle (a, b, c): positive for a left turn.
pub fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b - a).cross(c - a)
}

/// Proper or improper intersection test for closed segments [a1,a2] and [b1,b2].
/// Shared endpoints count as intersections; the caller excludes adjacency.
pub fn segments_intersect(a1: Vec2, a2: Vec2, b1: Vec2, b2: Vec2) -> bool {
    let d1 = orient(b1, b2, a1);
    let d2 = orient(b1, b2, a2);
    let d3 = orient(a1, a2, b1);
    let d4 = orient(a1, a2, b2);

    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    // Collinear / endpoint-touching cases.
    (d1 == 0.0 && on_segment(b1, b2, a1))
        || (d2 == 0.0 && on_segment(b1, b2, a2))
        || (d3 == 0.0 && on_segment(a1, a2, b1))
        || (d4 == 0.0 && on_segment(a1, a2, b2))
}

fn on_segment(a: Vec2, b: Vec2, p: Vec2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Shoelace signed area of a closed polygon (positive for counterclockwise).
pub fn polygon_signed_area(pts: &[Vec2]) -> f64 {
    let n = pts.len();
    let mut acc = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        acc += pts[i].cross(pts[j]);
    }
    0.5 * acc
}

/// Area-weighted centroid of a closed polygon.
pub fn polygon_centroid(pts: &[Vec2]) -> Vec2 {
    let n = pts.len();
    let mut a = 0.0;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for i in 0..n {
        let j = (i + 1) % n;
        let w = pts[i].cross(pts[j]);
        a += w;
        cx += (pts[i].x + pts[j].x) * w;
        cy += (pts[i].y + pts[j].y) * w;
    }
    Vec2::new(cx / (3.0 * a), cy / (3.0 * a))
}

/// Perimeter of a closed polygon.
pub fn polygon_perimeter(pts: &[Vec2]) -> f64 {
    let n = pts.len();
    (0..n).map(|i| (pts[(i + 1) % n] - pts[i]).norm()).sum()
}

/// Convex hull by Andrew's monotone chain, counterclockwise, no duplicate
/// endpoint. Collinear points on the hull boundary are dropped.
pub fn convex_hull(pts: &[Vec2]) -> Vec<Vec2> {
    let mut p: Vec<Vec2> = pts.to_vec();
    p.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    p.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    if p.len() < 3 {
        return p;
    }
    let chain = |iter: &mut dyn Iterator<Item = &Vec2>| -> Vec<Vec2> {
        let mut half: Vec<Vec2> = Vec::new();
        for &pt in iter {
            while half.len() >= 2 && orient(half[half.len() - 2], half[half.len() - 1], pt) <= 0.0 {
                half.pop();
            }
            half.push(pt);
        }
        half
    };
    let mut lower = chain(&mut p.iter());
    let mut upper = chain(&mut p.iter().rev());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Diameter of a point set: max pairwise distance over hull vertices.
pub fn hull_diameter(hull: &[Vec2]) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..hull.len() {
        for j in (i + 1)..hull.len() {
            best = best.max((hull[j] - hull[i]).norm());
        }
    }
    best
}

/// Width of a convex polygon: min over edge directions of the support-slab
/// thickness (max vertex distance from the edge line).
pub fn hull_width(hull: &[Vec2]) -> f64 {
    let n = hull.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let a = hull[i];
        let e = hull[(i + 1) % n] - a;
        let len = e.norm();
        if len == 0.0 {
            continue;
        }
        let mut far: f64 = 0.0;
        for &v in hull {
            far = far.max(e.cross(v - a).abs() / len);
        }
        best = best.min(far);
    }
    best
}

/// Even-odd point-in-polygon test (boundary points unspecified).
pub fn point_in_polygon(pts: &[Vec2], q: Vec2) -> bool {
    let n = pts.len();
    let mut inside = false;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        if (a.y > q.y) != (b.y > q.y) {
            let t = (q.y - a.y) / (b.y - a.y);
            if q.x < a.x + t * (b.x - a.x) {
                inside = !inside;
            }
        }
    }
    inside
}

/// Distance from point `q` to closed segment [a, b].
pub fn point_segment_distance(q: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sq();
    if len2 == 0.0 {
        return (q - a).norm();
    }
    let t = ((q - a).dot(ab) / len2).clamp(0.0, 1.0);
    (q - (a + ab * t)).norm()
}
