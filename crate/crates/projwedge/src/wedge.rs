//! Four-dimensional polytopes, coordinate projections, the projection
//! mixed-area vector `A ∧ B`, and the symmetry group action.
//!
//! Index convention, fixed throughout the crate: the entry `p_ij` of a wedge
//! vector is the mixed area of the projections that *delete* coordinates `i`
//! and `j` (the projection onto the plane orthogonal to `e_i` and `e_j`,
//! keeping the complementary two coordinates in increasing order). With this
//! convention the group element `(λ, c, σ)` multiplies `p_ij` by `λ c_i c_j`
//! and corresponds on bodies to coordinate permutation by `σ`, diagonal
//! scaling by `c^-1`, and a homothety of the second body by `λ c_1 c_2 c_3
//! c_4`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{is_rational_square, Rational};
use crate::polygon::{ConvexPolygon, Point2};

/// The six coordinate pairs in the fixed order of a wedge vector.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Index of the complementary pair: `{1,2} <-> {3,4}`, `{1,3} <-> {2,4}`,
/// `{1,4} <-> {2,3}`.
pub const COMPLEMENT: [usize; 6] = [5, 4, 3, 2, 1, 0];

/// Position of the (unordered, 1-based) pair `{i, j}` in [`PAIRS`].
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    match (i, j) {
        (1, 2) => 0,
        (1, 3) => 1,
        (1, 4) => 2,
        (2, 3) => 3,
        (2, 4) => 4,
        (3, 4) => 5,
        _ => panic!("bad pair ({i},{j})"),
    }
}

/// Ordered sextuple `(p12, p13, p14, p23, p24, p34)` of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeVector(pub [Rational; 6]);

impl WedgeVector {
    pub fn zero() -> Self {
        WedgeVector(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn from_ints(v: [i64; 6]) -> Self {
        WedgeVector(v.map(Rational::from_int))
    }

    pub fn entries(&self) -> &[Rational; 6] {
        &self.0
    }

    /// Entry for the unordered pair `{i, j}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[pair_index(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| !e.is_negative())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|e| e.is_positive())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|e| e.is_integer())
    }

    pub fn has_zero_entry(&self) -> bool {
        self.0.iter().any(|e| e.is_zero())
    }

    /// Indices (into [`PAIRS`]) of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..6).filter(|&k| !self.0[k].is_zero()).collect()
    }

    pub fn add(&self, other: &WedgeVector) -> WedgeVector {
        WedgeVector(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }

    pub fn sub(&self, other: &WedgeVector) -> WedgeVector {
        WedgeVector(std::array::from_fn(|k| &self.0[k] - &other.0[k]))
    }

    pub fn scale(&self, t: &Rational) -> WedgeVector {
        WedgeVector(std::array::from_fn(|k| &self.0[k] * t))
    }

    /// The three pairing products `(p12*p34, p13*p24, p14*p23)`.
    pub fn symmetric_products(&self) -> SymmetricTriple {
        SymmetricTriple {
            a: &self.0[0] * &self.0[5],
            b: &self.0[1] * &self.0[4],
            c: &self.0[2] * &self.0[3],
        }
    }
}

impl fmt::Display for WedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for WedgeVector {
    type Err = Error;

    /// Comma-separated rationals in the fixed order `p12,p13,p14,p23,p24,p34`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected 6 comma-separated entries, got {}",
                parts.len()
            )));
        }
        let mut out = WedgeVector::zero();
        for (k, part) in parts.iter().enumerate() {
            out.0[k] = part.parse()?;
        }
        Ok(out)
    }
}

/// The products of complementary entries, in the fixed slot order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricTriple {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl SymmetricTriple {
    pub fn as_array(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// Permutation of `{1, 2, 3, 4}`, stored as 0-based images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perm([usize; 4]);

impl Perm {
    pub fn identity() -> Self {
        Perm([0, 1, 2, 3])
    }

    /// Builds from 1-based images `sigma(1..=4)`.
    pub fn from_images(images: [usize; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &v in &images {
            if !(1..=4).contains(&v) || seen[v - 1] {
                return Err(Error::Parse(format!("invalid permutation {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm(images.map(|v| v - 1)))
    }

    pub fn transposition(i: usize, j: usize) -> Self {
        let mut images = [0, 1, 2, 3];
        images.swap(i - 1, j - 1);
        Perm(images)
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn images(&self) -> [usize; 4] {
        [1, 2, 3, 4].map(|i| self.apply(i))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = [0usize; 4];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Perm(inv)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(std::array::from_fn(|i| self.0[other.0[i]]))
    }

    pub fn is_identity(&self) -> bool {
        self.0 == [0, 1, 2, 3]
    }

    /// All 24 permutations, in lexicographic order of their image tuples.
    pub fn all() -> Vec<Perm> {
        let mut out = Vec::with_capacity(24);
        let mut items = [1usize, 2, 3, 4];
        permute(&mut items, 0, &mut out);
        out.sort_by_key(|p| p.images());
        out
    }
}

fn permute(items: &mut [usize; 4], k: usize, out: &mut Vec<Perm>) {
    if k == 4 {
        out.push(Perm::from_images(*items).unwrap());
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = <[usize; 4]>::deserialize(d)?;
        Perm::from_images(images).map_err(serde::de::Error::custom)
    }
}

/// Group element `(λ, c1..c4, σ)` of `Q+ × Q+^4 ⋊ S4` acting on wedge
/// vectors and on pairs of bodies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutedScaling {
    pub lambda: Rational,
    pub scale: [Rational; 4],
    pub perm: Perm,
}

impl PermutedScaling {
    pub fn identity() -> Self {
        PermutedScaling {
            lambda: Rational::one(),
            scale: std::array::from_fn(|_| Rational::one()),
            perm: Perm::identity(),
        }
    }

    pub fn new(lambda: Rational, scale: [Rational; 4], perm: Perm) -> Result<Self> {
        if !lambda.is_positive() || scale.iter().any(|c| !c.is_positive()) {
            return Err(Error::NegativeInput);
        }
        Ok(PermutedScaling {
            lambda,
            scale,
            perm,
        })
    }

    pub fn scaling_only(lambda: Rational, scale: [Rational; 4]) -> Result<Self> {
        PermutedScaling::new(lambda, scale, Perm::identity())
    }

    /// Action on a wedge vector: permute indices by `σ`, then multiply the
    /// entry at `{i, j}` by `λ c_i c_j`.
    pub fn act(&self, p: &WedgeVector) -> WedgeVector {
        let inv = self.perm.inverse();
        WedgeVector(std::array::from_fn(|k| {
            let (i, j) = PAIRS[k];
            let src = pair_index(inv.apply(i), inv.apply(j));
            &(&self.lambda * &self.scale[i - 1]) * &(&self.scale[j - 1] * &p.0[src])
        }))
    }

    /// Composition: `compose(g, h).act(p) == g.act(&h.act(p))`.
    pub fn compose(&self, other: &PermutedScaling) -> PermutedScaling {
        let inv = self.perm.inverse();
        PermutedScaling {
            lambda: &self.lambda * &other.lambda,
            scale: std::array::from_fn(|i| {
                &self.scale[i] * &other.scale[inv.apply(i + 1) - 1]
            }),
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self) -> PermutedScaling {
        PermutedScaling {
            lambda: self.lambda.recip(),
            scale: std::array::from_fn(|i| self.scale[self.perm.apply(i + 1) - 1].recip()),
            perm: self.perm.inverse(),
        }
    }
}

/// Finite generating point set in `Q^4`; the represented body is the convex
/// hull of the generators, and the list need not be minimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polytope4 {
    generators: Vec<[Rational; 4]>,
}

impl Polytope4 {
    pub fn new(mut generators: Vec<[Rational; 4]>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        generators.sort();
        generators.dedup();
        Ok(Polytope4 { generators })
    }

    pub fn from_ints(points: &[[i64; 4]]) -> Self {
        Polytope4::new(points.iter().map(|p| p.map(Rational::from_int)).collect())
            .expect("nonempty")
    }

    pub fn origin() -> Self {
        Polytope4::from_ints(&[[0, 0, 0, 0]])
    }

    pub fn generators(&self) -> &[[Rational; 4]] {
        &self.generators
    }

    /// Deletes coordinates `i` and `j` (1-based, `i < j`) from every
    /// generator and returns the 2D hull of the images.
    pub fn project(&self, i: usize, j: usize) -> Result<ConvexPolygon> {
        if !(1 <= i && i < j && j <= 4) {
            return Err(Error::BadIndexPair);
        }
        let kept: Vec<usize> = (1..=4).filter(|&t| t != i && t != j).collect();
        let pts: Vec<Point2> = self
            .generators
            .iter()
            .map(|g| Point2::new(g[kept[0] - 1].clone(), g[kept[1] - 1].clone()))
            .collect();
        ConvexPolygon::hull(&pts)
    }

    /// Projection mixed-area vector of two bodies.
    pub fn wedge(&self, other: &Polytope4) -> WedgeVector {
        WedgeVector(std::array::from_fn(|k| {
            let (i, j) = PAIRS[k];
            let pa = self.project(i, j).expect("valid pair");
            let pb = other.project(i, j).expect("valid pair");
            pa.mixed_area(&pb)
        }))
    }

    /// Minkowski sum as pairwise generator sums (no 4D hull is taken).
    pub fn minkowski(&self, other: &Polytope4) -> Polytope4 {
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(std::array::from_fn(|t| &a[t] + &b[t]));
            }
        }
        Polytope4::new(sums).expect("nonempty")
    }

    pub fn scale(&self, t: &Rational) -> Polytope4 {
        Polytope4::new(
            self.generators
                .iter()
                .map(|g| std::array::from_fn(|k| &g[k] * t))
                .collect(),
        )
        .expect("nonempty")
    }

    pub fn translate(&self, d: &[Rational; 4]) -> Polytope4 {
        Polytope4::new(
            self.generators
                .iter()
                .map(|g| std::array::from_fn(|k| &g[k] + &d[k]))
                .collect(),
        )
        .expect("nonempty")
    }

    pub fn diag_scale(&self, c: &[Rational; 4]) -> Polytope4 {
        Polytope4::new(
            self.generators
                .iter()
                .map(|g| std::array::from_fn(|k| &g[k] * &c[k]))
                .collect(),
        )
        .expect("nonempty")
    }

    /// Coordinate permutation: the new coordinate `σ(i)` carries the old
    /// coordinate `i`, so that the wedge vector of the result is the
    /// σ-permuted wedge vector.
    pub fn coord_permute(&self, perm: &Perm) -> Polytope4 {
        let inv = perm.inverse();
        Polytope4::new(
            self.generators
                .iter()
                .map(|g| std::array::from_fn(|k| g[inv.apply(k + 1) - 1].clone()))
                .collect(),
        )
        .expect("nonempty")
    }

    /// Drops generators that are redundant in all six coordinate
    /// projections, keeping one representative per projection-hull vertex.
    /// The six projections of the result equal those of the input exactly,
    /// so every wedge vector against any body is preserved; the generator
    /// list shrinks to at most six times the 2D hull sizes.
    pub fn prune_to_projection_support(&self) -> Polytope4 {
        if self.generators.len() <= 16 {
            return self.clone();
        }
        let mut keep = vec![false; self.generators.len()];
        for (i, j) in PAIRS {
            let kept: Vec<usize> = (1..=4).filter(|&t| t != i && t != j).collect();
            let pts: Vec<Point2> = self
                .generators
                .iter()
                .map(|g| Point2::new(g[kept[0] - 1].clone(), g[kept[1] - 1].clone()))
                .collect();
            let hull = ConvexPolygon::hull(&pts).expect("nonempty");
            let mut representative: BTreeMap<&Point2, usize> = BTreeMap::new();
            for (idx, p) in pts.iter().enumerate() {
                representative.entry(p).or_insert(idx);
            }
            for v in hull.vertices() {
                if let Some(&idx) = representative.get(v) {
                    keep[idx] = true;
                }
            }
        }
        let gens: Vec<[Rational; 4]> = self
            .generators
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(g, _)| g.clone())
            .collect();
        Polytope4::new(gens).expect("hull vertices remain")
    }
}

/// Free-function form of [`Polytope4::wedge`].
pub fn wedge(a: &Polytope4, b: &Polytope4) -> WedgeVector {
    a.wedge(b)
}

/// Transforms a pair of bodies so that the wedge vector of the result is
/// `g.act(wedge(a, b))`, exactly: coordinate permutation by `σ`, diagonal
/// scaling by `c^-1` on both bodies, and a homothety by `λ c1 c2 c3 c4` on
/// the second body.
pub fn act_on_pair(g: &PermutedScaling, a: &Polytope4, b: &Polytope4) -> (Polytope4, Polytope4) {
    let inv_scale: [Rational; 4] = std::array::from_fn(|i| g.scale[i].recip());
    let homothety = g
        .scale
        .iter()
        .fold(g.lambda.clone(), |acc, c| acc * c);
    let a2 = a.coord_permute(&g.perm).diag_scale(&inv_scale);
    let b2 = b
        .coord_permute(&g.perm)
        .diag_scale(&inv_scale)
        .scale(&homothety);
    (a2, b2)
}

/// Solves `target_k = λ c_i c_j base_k` on the common support, returning a
/// positive rational `(λ, c)` when one exists. Both vectors must be
/// nonnegative with identical support.
fn solve_scaling_on_support(
    base: &WedgeVector,
    target: &WedgeVector,
) -> Option<(Rational, [Rational; 4])> {
    let edges: Vec<usize> = base.support();
    if edges.is_empty() {
        return Some((Rational::one(), std::array::from_fn(|_| Rational::one())));
    }
    let ratio = |k: usize| &target.0[k] / &base.0[k];
    let has_edge = |i: usize, j: usize| !base.get(i, j).is_zero();

    let mut c: [Option<Rational>; 4] = [None, None, None, None];
    let mut lambda: Option<Rational> = None;

    // A triangle in the support pins λ relative to its own gauge; at most
    // one component can contain one, so handle it first.
    'triangle: for i in 1..=4 {
        for j in (i + 1)..=4 {
            for k in (j + 1)..=4 {
                if has_edge(i, j) && has_edge(i, k) && has_edge(j, k) {
                    let rij = ratio(pair_index(i, j));
                    let rik = ratio(pair_index(i, k));
                    let rjk = ratio(pair_index(j, k));
                    let l = &(&rij * &rik) / &rjk;
                    c[i - 1] = Some(Rational::one());
                    c[j - 1] = Some(&rij / &l);
                    c[k - 1] = Some(&rik / &l);
                    lambda = Some(l);
                    break 'triangle;
                }
            }
        }
    }

    // Propagate along edges; start fresh components with a free gauge.
    loop {
        let mut progressed = false;
        for &e in &edges {
            let (i, j) = PAIRS[e];
            match (c[i - 1].clone(), c[j - 1].clone()) {
                (Some(ci), None) => {
                    let l = lambda.clone().expect("set with first assignment");
                    c[j - 1] = Some(&ratio(e) / &(&l * &ci));
                    progressed = true;
                }
                (None, Some(cj)) => {
                    let l = lambda.clone().expect("set with first assignment");
                    c[i - 1] = Some(&ratio(e) / &(&l * &cj));
                    progressed = true;
                }
                _ => {}
            }
        }
        if progressed {
            continue;
        }
        // Seed the next untouched component, if any.
        let seed = edges
            .iter()
            .copied()
            .find(|&e| c[PAIRS[e].0 - 1].is_none() && c[PAIRS[e].1 - 1].is_none());
        match seed {
            Some(e) => {
                let (i, j) = PAIRS[e];
                c[i - 1] = Some(Rational::one());
                match &lambda {
                    Some(l) => c[j - 1] = Some(&ratio(e) / l),
                    None => {
                        lambda = Some(ratio(e));
                        c[j - 1] = Some(Rational::one());
                    }
                }
            }
            None => break,
        }
    }

    let lambda = lambda.unwrap_or_else(Rational::one);
    let c: [Rational; 4] = std::array::from_fn(|i| c[i].clone().unwrap_or_else(Rational::one));
    if !lambda.is_positive() || c.iter().any(|v| !v.is_positive()) {
        return None;
    }
    // Non-tree edges impose the consistency relations; verify all of them.
    for &e in &edges {
        let (i, j) = PAIRS[e];
        if &(&lambda * &c[i - 1]) * &(&c[j - 1] * &base.0[e]) != target.0[e] {
            return None;
        }
    }
    Some((lambda, c))
}

/// Finds a witness `g` with `g.act(p) = q`, when the two nonnegative
/// vectors are in the same orbit of `Q+ × Q+^4 ⋊ S4`.
///
/// All 24 permutations are tried in a fixed order and the first witness
/// wins. For strictly positive vectors the entrywise ratios must have equal
/// pairing products; the per-coordinate scalings are then recovered through
/// the square roots of `s_i = r_ij r_ik / r_jk`, which the product relations
/// force to be rational squares. Vectors with zero entries are matched
/// support-by-support.
pub fn equivalent_over_q(p: &WedgeVector, q: &WedgeVector) -> Result<Option<PermutedScaling>> {
    if !p.is_nonnegative() || !q.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    // The all-zero vector is equivalent only to itself.
    if p.is_zero() || q.is_zero() {
        return Ok(if p.is_zero() && q.is_zero() {
            Some(PermutedScaling::identity())
        } else {
            None
        });
    }

    let positive = p.is_strictly_positive();
    if positive != q.is_strictly_positive() {
        return Ok(None);
    }

    for perm in Perm::all() {
        let g_perm = PermutedScaling {
            lambda: Rational::one(),
            scale: std::array::from_fn(|_| Rational::one()),
            perm,
        };
        let moved = g_perm.act(p);

        let witness = if positive {
            let r: [Rational; 6] = std::array::from_fn(|k| &q.0[k] / &moved.0[k]);
            let m = &r[0] * &r[5];
            if &r[1] * &r[4] != m || &r[2] * &r[3] != m {
                continue;
            }
            // s_i = λ c_i^2, built from the star of i with the two smallest
            // partners.
            let s = |i: usize| -> Rational {
                let others: Vec<usize> = (1..=4).filter(|&t| t != i).collect();
                let (j, k, l) = (others[0], others[1], others[2]);
                let _ = l;
                &(&r[pair_index(i, j)] * &r[pair_index(i, k)]) / &r[pair_index(j, k)]
            };
            let s1 = s(1);
            let mut scale = [
                Rational::one(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ];
            let mut ok = true;
            for i in 2..=4 {
                match is_rational_square(&(&s(i) / &s1))? {
                    Some(root) => scale[i - 1] = root,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            Some((s1, scale))
        } else {
            if moved.support() != q.support() {
                continue;
            }
            solve_scaling_on_support(&moved, q)
        };

        if let Some((lambda, scale)) = witness {
            let g = PermutedScaling {
                lambda,
                scale,
                perm,
            };
            if &g.act(p) == q {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

/// Equivalence over the reals: for strictly positive vectors the symmetric
/// triples must be proportional up to a permutation (the connected group
/// scales the triple uniformly and `S4` permutes the three pairings); for
/// vectors with zeros the orbits coincide with the rational ones.
pub fn equivalent_over_r(p: &WedgeVector, q: &WedgeVector) -> Result<bool> {
    if !p.is_nonnegative() || !q.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    if p.is_zero() || q.is_zero() {
        return Ok(p.is_zero() && q.is_zero());
    }
    if p.is_strictly_positive() && q.is_strictly_positive() {
        let tp = p.symmetric_products();
        let tq = q.symmetric_products();
        let pa = tp.as_array();
        let qa = tq.as_array();
        for ordering in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let mu = qa[0] / pa[ordering[0]];
            if qa[1] == &(pa[ordering[1]] * &mu) && qa[2] == &(pa[ordering[2]] * &mu) {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    Ok(equivalent_over_q(p, q)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(v: [i64; 6]) -> WedgeVector {
        WedgeVector::from_ints(v)
    }

    fn seg(a: [i64; 4], b: [i64; 4]) -> Polytope4 {
        Polytope4::from_ints(&[a, b])
    }

    fn d12_34() -> Polytope4 {
        seg([1, 1, 0, 0], [0, 0, 1, 1])
    }

    fn d13_24() -> Polytope4 {
        seg([1, 0, 1, 0], [0, 1, 0, 1])
    }

    fn d14_23() -> Polytope4 {
        seg([1, 0, 0, 1], [0, 1, 1, 0])
    }

    struct Lcg(u64);

    impl Lcg {
        fn next(&mut self) -> u64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            self.0
        }

        fn rational(&mut self, lo: i64, hi: i64, den: i64) -> Rational {
            let span = (hi - lo) as u64 * den as u64 + 1;
            Rational::ratio(lo * den + ((self.next() >> 17) % span) as i64, den)
        }

        fn positive_rational(&mut self) -> Rational {
            Rational::ratio(1 + ((self.next() >> 17) % 24) as i64, 1 + ((self.next() >> 13) % 4) as i64)
        }

        fn group_element(&mut self) -> PermutedScaling {
            let perms = Perm::all();
            let perm = perms[(self.next() % 24) as usize];
            PermutedScaling::new(
                self.positive_rational(),
                std::array::from_fn(|_| self.positive_rational()),
                perm,
            )
            .unwrap()
        }

        fn polytope(&mut self, max_pts: usize) -> Polytope4 {
            let n = 1 + (self.next() as usize) % max_pts;
            let pts: Vec<[Rational; 4]> = (0..n)
                .map(|_| std::array::from_fn(|_| self.rational(-3, 3, 2)))
                .collect();
            Polytope4::new(pts).unwrap()
        }
    }

    #[test]
    fn project_examples() {
        let a7 = Polytope4::from_ints(&[[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let tri = a7.project(1, 2).unwrap();
        assert_eq!(
            tri.vertices(),
            &[
                Point2::from_ints(0, 0),
                Point2::from_ints(1, 0),
                Point2::from_ints(0, 1)
            ]
        );

        let pt = Polytope4::from_ints(&[[3, 1, 4, 1]]);
        assert!(pt.project(2, 4).unwrap().is_point());

        let s = d12_34().project(1, 4).unwrap();
        assert_eq!(
            s.vertices(),
            &[Point2::from_ints(0, 1), Point2::from_ints(1, 0)]
        );

        assert_eq!(d12_34().project(2, 2), Err(Error::BadIndexPair));
    }

    #[test]
    fn wedge_segment_table() {
        assert_eq!(d12_34().wedge(&d13_24()), wv([2, 2, 0, 0, 2, 2]));
        assert_eq!(d12_34().wedge(&d14_23()), wv([2, 0, 2, 2, 0, 2]));
        assert_eq!(d13_24().wedge(&d14_23()), wv([0, 2, 2, 2, 2, 0]));
        for d in [d12_34(), d13_24(), d14_23()] {
            assert!(d.wedge(&d).is_zero());
        }
    }

    #[test]
    fn wedge_point_and_self_examples() {
        let a7 = Polytope4::from_ints(&[[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(a7.wedge(&a7), wv([1, 0, 0, 0, 0, 0]));
        let pt = Polytope4::from_ints(&[[1, 2, 3, 4]]);
        assert!(pt.wedge(&d12_34()).is_zero());
    }

    #[test]
    fn wedge_symmetry_and_bilinearity() {
        let mut rng = Lcg(11);
        let t = Rational::ratio(3, 2);
        for _ in 0..12 {
            let a1 = rng.polytope(5);
            let a2 = rng.polytope(5);
            let b = rng.polytope(5);
            assert_eq!(a1.wedge(&b), b.wedge(&a1));
            assert_eq!(
                a1.minkowski(&a2).wedge(&b),
                a1.wedge(&b).add(&a2.wedge(&b))
            );
            assert_eq!(a1.scale(&t).wedge(&b), a1.wedge(&b).scale(&t));
        }
    }

    #[test]
    fn act_examples() {
        let p = wv([1, 1, 1, 1, 1, 1]);
        assert_eq!(PermutedScaling::identity().act(&p), p);

        let g = PermutedScaling::scaling_only(
            Rational::from_int(2),
            [
                Rational::from_int(1),
                Rational::from_int(2),
                Rational::from_int(3),
                Rational::ratio(1, 2),
            ],
        )
        .unwrap();
        assert_eq!(
            g.act(&p),
            WedgeVector([
                Rational::from_int(4),
                Rational::from_int(6),
                Rational::from_int(1),
                Rational::from_int(12),
                Rational::from_int(2),
                Rational::from_int(3),
            ])
        );

        let pure = PermutedScaling::scaling_only(
            Rational::from_int(3),
            std::array::from_fn(|_| Rational::one()),
        )
        .unwrap();
        let q = wv([1, 2, 3, 4, 5, 6]);
        assert_eq!(pure.act(&q), q.scale(&Rational::from_int(3)));
    }

    #[test]
    fn act_is_group_action() {
        let mut rng = Lcg(23);
        for _ in 0..30 {
            let g = rng.group_element();
            let h = rng.group_element();
            let p = WedgeVector(std::array::from_fn(|_| rng.rational(0, 6, 4)));
            assert_eq!(g.compose(&h).act(&p), g.act(&h.act(&p)));
            assert_eq!(g.inverse().act(&g.act(&p)), p);
            let id = g.compose(&g.inverse());
            assert_eq!(id.act(&p), p);
        }
    }

    #[test]
    fn act_on_pair_identity_and_metamorphic() {
        let a = Polytope4::from_ints(&[[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]);
        let b = d12_34();
        let (a2, b2) = act_on_pair(&PermutedScaling::identity(), &a, &b);
        assert_eq!(a2, a);
        assert_eq!(b2, b);

        let mut rng = Lcg(5);
        for _ in 0..100 {
            let g = rng.group_element();
            let x = rng.polytope(4);
            let y = rng.polytope(4);
            let (x2, y2) = act_on_pair(&g, &x, &y);
            assert_eq!(x2.wedge(&y2), g.act(&x.wedge(&y)));
        }
    }

    #[test]
    fn act_on_pair_transposition_permutes_entries() {
        let g = PermutedScaling {
            lambda: Rational::one(),
            scale: std::array::from_fn(|_| Rational::one()),
            perm: Perm::transposition(1, 2),
        };
        let a = Polytope4::from_ints(&[[0, 0, 0, 0], [2, 0, 1, 0], [0, 1, 0, 3]]);
        let b = Polytope4::from_ints(&[[0, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1]]);
        let (a2, b2) = act_on_pair(&g, &a, &b);
        let before = a.wedge(&b);
        let after = a2.wedge(&b2);
        // Swapping 1 and 2 fixes p12 and p34, and swaps p13<->p23, p14<->p24.
        assert_eq!(after.0[0], before.0[0]);
        assert_eq!(after.0[5], before.0[5]);
        assert_eq!(after.0[1], before.0[3]);
        assert_eq!(after.0[3], before.0[1]);
        assert_eq!(after.0[2], before.0[4]);
        assert_eq!(after.0[4], before.0[2]);
    }

    #[test]
    fn symmetric_products_examples() {
        assert_eq!(
            wv([1, 1, 1, 1, 1, 1]).symmetric_products().as_array(),
            [&Rational::one(), &Rational::one(), &Rational::one()]
        );
        let t = wv([1, 1, 1, 1, 1, 4]).symmetric_products();
        assert_eq!(
            t.as_array(),
            [
                &Rational::from_int(4),
                &Rational::one(),
                &Rational::one()
            ]
        );
        let t = wv([2, 2, 0, 0, 2, 2]).symmetric_products();
        assert_eq!(
            t.as_array(),
            [
                &Rational::from_int(4),
                &Rational::from_int(4),
                &Rational::zero()
            ]
        );
    }

    #[test]
    fn symmetric_products_scale_uniformly_under_action() {
        let mut rng = Lcg(99);
        for _ in 0..40 {
            let g = rng.group_element();
            let p = WedgeVector(std::array::from_fn(|_| rng.rational(0, 5, 3)));
            let factor = {
                let prod = g
                    .scale
                    .iter()
                    .fold(&g.lambda * &g.lambda, |acc, c| acc * c);
                prod
            };
            let before: Vec<Rational> = p
                .symmetric_products()
                .as_array()
                .iter()
                .map(|r| (*r) * &factor)
                .collect();
            let after = g.act(&p).symmetric_products();
            let mut lhs: Vec<Rational> = after.as_array().into_iter().cloned().collect();
            let mut rhs = before;
            lhs.sort();
            rhs.sort();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn equivalence_over_q_round_trip() {
        let mut rng = Lcg(314);
        for _ in 0..40 {
            let p = WedgeVector(std::array::from_fn(|_| rng.rational(1, 8, 2)));
            let g = rng.group_element();
            let q = g.act(&p);
            let w = equivalent_over_q(&p, &q).unwrap().expect("same orbit");
            assert_eq!(w.act(&p), q);
        }
    }

    #[test]
    fn equivalence_over_q_examples() {
        assert!(equivalent_over_q(&wv([1, 1, 1, 1, 1, 1]), &wv([1, 1, 1, 1, 1, 2]))
            .unwrap()
            .is_none());
        let target = WedgeVector([
            Rational::from_int(4),
            Rational::from_int(6),
            Rational::from_int(1),
            Rational::from_int(12),
            Rational::from_int(2),
            Rational::from_int(3),
        ]);
        let w = equivalent_over_q(&wv([1, 1, 1, 1, 1, 1]), &target)
            .unwrap()
            .expect("inverse of the act example");
        assert_eq!(w.act(&wv([1, 1, 1, 1, 1, 1])), target);
        assert_eq!(
            equivalent_over_q(&wv([-1, 0, 0, 0, 0, 0]), &wv([1, 0, 0, 0, 0, 0])),
            Err(Error::NegativeEntry)
        );
    }

    #[test]
    fn equivalence_over_q_zero_entries() {
        // Same orbit: both scale out of (1,0,0,0,0,0).
        let w = equivalent_over_q(&wv([5, 0, 0, 0, 0, 0]), &wv([7, 0, 0, 0, 0, 0]))
            .unwrap()
            .expect("single-edge supports");
        assert_eq!(w.act(&wv([5, 0, 0, 0, 0, 0])), wv([7, 0, 0, 0, 0, 0]));
        // Different zero patterns are never equivalent.
        assert!(equivalent_over_q(&wv([1, 1, 0, 1, 0, 0]), &wv([1, 1, 1, 0, 0, 0]))
            .unwrap()
            .is_none());
        // Zero vector is equivalent only to itself.
        assert!(equivalent_over_q(&WedgeVector::zero(), &WedgeVector::zero())
            .unwrap()
            .is_some());
        assert!(equivalent_over_q(&WedgeVector::zero(), &wv([1, 0, 0, 0, 0, 0]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn equivalence_over_q_zero_round_trip() {
        let reps = [
            wv([1, 1, 1, 1, 1, 0]),
            wv([1, 1, 0, 1, 0, 0]),
            wv([0, 1, 1, 1, 1, 0]),
            wv([1, 1, 1, 0, 0, 0]),
            wv([1, 1, 0, 0, 0, 0]),
            wv([1, 0, 0, 0, 0, 0]),
        ];
        let mut rng = Lcg(2718);
        for rep in &reps {
            for _ in 0..8 {
                let g = rng.group_element();
                let q = g.act(rep);
                let w = equivalent_over_q(rep, &q).unwrap().expect("same orbit");
                assert_eq!(w.act(rep), q);
            }
        }
    }

    #[test]
    fn equivalence_over_r_examples() {
        let p = wv([1, 2, 3, 4, 5, 6]);
        assert!(equivalent_over_r(&p, &p.scale(&Rational::from_int(7))).unwrap());
        assert!(equivalent_over_r(&wv([1, 1, 1, 1, 1, 3]), &wv([3, 1, 1, 1, 1, 1])).unwrap());
        assert!(!equivalent_over_r(&wv([1, 1, 1, 1, 1, 1]), &wv([1, 1, 1, 1, 1, 2])).unwrap());
    }

    #[test]
    fn pruning_preserves_projections() {
        let mut rng = Lcg(77);
        for _ in 0..10 {
            let a = rng.polytope(8);
            let b = rng.polytope(8);
            let sum = a.minkowski(&b).minkowski(&rng.polytope(6));
            let pruned = sum.prune_to_projection_support();
            assert!(pruned.generators().len() <= sum.generators().len());
            for (i, j) in PAIRS {
                assert_eq!(pruned.project(i, j).unwrap(), sum.project(i, j).unwrap());
            }
        }
    }

    #[test]
    fn wedge_vector_parse_display_round_trip() {
        let p: WedgeVector = "1,1/2,0,7/3,-2,4".parse().unwrap();
        assert_eq!(p.to_string(), "1,1/2,0,7/3,-2,4");
        assert!("1,2,3".parse::<WedgeVector>().is_err());
    }
}
