//! Exact planar convex geometry: hulls, normalized areas, Minkowski sums,
//! and mixed areas.
//!
//! Areas are *normalized*: in the plane the normalized area is twice the
//! Lebesgue area (the absolute shoelace sum without the 1/2 factor), so the
//! unit square has normalized area 2 and the standard triangle has
//! normalized area 1. The mixed area of `P` and `Q` is then
//! `(narea(P + Q) - narea(P) - narea(Q)) / 2`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Point of the rational plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(Rational::from_int(x), Rational::from_int(y))
    }

    fn add(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x + &other.x, &self.y + &other.y)
    }
}

/// Cross product (b - a) x (c - a); positive for a left turn.
fn cross(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    let v1x = &b.x - &a.x;
    let v1y = &b.y - &a.y;
    let v2x = &c.x - &a.x;
    let v2y = &c.y - &a.y;
    &v1x * &v2y - &v1y * &v2x
}

/// Convex polygon in canonical form: extreme points only, counterclockwise,
/// starting at the lexicographically smallest vertex. A single point and a
/// segment (two lexicographically ordered endpoints) are the allowed
/// degenerate ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Convex hull of a nonempty point set, via the monotone chain with
    /// exact cross-product orientation. Collinear and interior points are
    /// discarded.
    pub fn hull(points: &[Point2]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            return Ok(ConvexPolygon { vertices: pts });
        }

        let mut lower: Vec<Point2> = Vec::new();
        for p in &pts {
            while lower.len() >= 2
                && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p)
                    .cmp(&Rational::zero())
                    != Ordering::Greater
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Point2> = Vec::new();
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p)
                    .cmp(&Rational::zero())
                    != Ordering::Greater
            {
                upper.pop();
            }
            upper.push(p.clone());
        }

        if lower.len() == 2 && upper.len() == 2 {
            // Collinear input: keep the extreme endpoints in lex order.
            return Ok(ConvexPolygon { vertices: lower });
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Ok(ConvexPolygon { vertices: lower })
    }

    pub fn point(p: Point2) -> Self {
        ConvexPolygon { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Normalized area: twice the Lebesgue area; zero on points and
    /// segments.
    pub fn normalized_area(&self) -> Rational {
        if self.vertices.len() < 3 {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        let n = self.vertices.len();
        for i in 0..n {
            let p = &self.vertices[i];
            let q = &self.vertices[(i + 1) % n];
            acc += &(&(&p.x * &q.y) - &(&q.x * &p.y));
        }
        acc.abs()
    }

    /// Minkowski sum as the hull of pairwise vertex sums; equal to the
    /// geometric sum for convex inputs.
    pub fn minkowski_sum(&self, other: &ConvexPolygon) -> ConvexPolygon {
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for p in &self.vertices {
            for q in &other.vertices {
                sums.push(p.add(q));
            }
        }
        ConvexPolygon::hull(&sums).expect("nonempty sum")
    }

    /// Mixed area via polarization of the normalized area; symmetric and
    /// nonnegative.
    pub fn mixed_area(&self, other: &ConvexPolygon) -> Rational {
        let sum = self.minkowski_sum(other);
        (sum.normalized_area() - self.normalized_area() - other.normalized_area())
            / Rational::from_int(2)
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> ConvexPolygon {
        // Translation preserves canonical order.
        ConvexPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|p| Point2::new(&p.x + dx, &p.y + dy))
                .collect(),
        }
    }

    pub fn scale(&self, t: &Rational) -> ConvexPolygon {
        let scaled: Vec<Point2> = self
            .vertices
            .iter()
            .map(|p| Point2::new(&p.x * t, &p.y * t))
            .collect();
        ConvexPolygon::hull(&scaled).expect("nonempty")
    }
}
