//! Constructive realization: explicit rational polytope pairs `(A, B)` with
//! `A ∧ B = p` for any admissible target, and self-realizations `A ∧ A` for
//! interior and boundary targets.
//!
//! Every pair certificate recomputes its wedge vector exactly before it is
//! returned; the self-realization paths emit dyadic-vertex polytopes whose
//! wedge vectors are recomputed exactly, so the reported residuals hold
//! unconditionally.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::membership::{classify_zero_orbit, t2_membership, Status};
use crate::wedge::{
    act_on_pair, Perm, PermutedScaling, Polytope4, WedgeVector,
};

/// Exact pair witness: `wedge(a, b) == target`, always.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub target: WedgeVector,
    pub a: Polytope4,
    pub b: Polytope4,
    /// Wedge vector of `(a, b)`, recomputed from scratch during
    /// construction; equals `target` entry by entry.
    pub recomputed: WedgeVector,
    /// Always true for this certificate type.
    pub exact: bool,
}

/// Self-realization witness with dyadic-rational vertices. `recomputed` is
/// the exact wedge vector of the emitted polytope; `residual` is the
/// largest relative entrywise error of `recomputed` against the reference
/// vector of the construction (the target itself, or `proportionality *
/// target` when a proportional realization is exact).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCertificate {
    pub target: WedgeVector,
    pub a: Polytope4,
    pub recomputed: WedgeVector,
    pub residual: Rational,
    /// Present exactly when `recomputed == proportionality * target` holds
    /// exactly.
    pub proportionality: Option<Rational>,
}

/// The fixed polytopes behind every construction in this module.
pub mod blocks {
    use super::*;

    fn pts(raw: &[[i64; 4]]) -> Polytope4 {
        Polytope4::from_ints(raw)
    }

    /// Segment from `e1+e2` to `e3+e4`.
    pub fn d12_34() -> Polytope4 {
        pts(&[[1, 1, 0, 0], [0, 0, 1, 1]])
    }

    /// Segment from `e1+e3` to `e2+e4`.
    pub fn d13_24() -> Polytope4 {
        pts(&[[1, 0, 1, 0], [0, 1, 0, 1]])
    }

    /// Segment from `e1+e4` to `e2+e3`.
    pub fn d14_23() -> Polytope4 {
        pts(&[[1, 0, 0, 1], [0, 1, 1, 0]])
    }

    /// `P = D_{13|24} + D_{14|23}`; `P ∧ D_{12|34} = (4,2,2,2,2,4)`.
    pub fn p_block() -> Polytope4 {
        d13_24().minkowski(&d14_23())
    }

    /// `Q = D_{13|24}`; `Q ∧ D_{12|34} = (2,2,0,0,2,2)`.
    pub fn q_block() -> Polytope4 {
        d13_24()
    }

    /// `R = conv(e1,e2) + conv(e3,e4)`; `R ∧ D_{12|34} = (2,2,2,2,2,2)`.
    pub fn r_block() -> Polytope4 {
        pts(&[[1, 0, 0, 0], [0, 1, 0, 0]]).minkowski(&pts(&[[0, 0, 1, 0], [0, 0, 0, 1]]))
    }

    /// The six cone generators: `cone_block(k) ∧ D_{12|34}` is the all-ones
    /// vector with a zero at slot `k` (slots in the fixed pair order).
    ///
    /// The four-point bodies share the endpoints `u = e1+e2`, `v = e3+e4`;
    /// the cross-pair blocks take the two basis vectors of the
    /// complementary pair.
    pub fn cone_block(slot: usize) -> Polytope4 {
        let u = [1, 1, 0, 0];
        let v = [0, 0, 1, 1];
        match slot {
            0 => pts(&[u, v, [1, 0, 0, 0], [0, 0, 0, 0]]),
            1 => pts(&[u, v, [0, 1, 0, 0], [0, 0, 0, 1]]),
            2 => pts(&[u, v, [0, 1, 0, 0], [0, 0, 1, 0]]),
            3 => pts(&[u, v, [1, 0, 0, 0], [0, 0, 0, 1]]),
            4 => pts(&[u, v, [1, 0, 0, 0], [0, 0, 1, 0]]),
            5 => pts(&[u, v, [0, 0, 1, 0], [0, 0, 0, 0]]),
            _ => panic!("slot out of range"),
        }
    }

    /// Self-realizing lattice polytopes for the six canonical zero-entry
    /// orbit representatives, in the representative order.
    pub fn zero_orbit_block(index: usize) -> Polytope4 {
        match index {
            0 => pts(&[[1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
            1 => pts(&[[0, 0, 0, 0], [1, 1, 1, 0], [0, 0, 0, 1]]),
            2 => pts(&[[0, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1]]),
            3 => pts(&[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
            4 => pts(&[[0, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]),
            5 => pts(&[[0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
            _ => panic!("index out of range"),
        }
    }

    /// Base vertex matrix of the boundary family (16 columns).
    pub const BOUNDARY_L: [[i64; 16]; 4] = [
        [0, -1, 0, -1, -1, 0, 0, 0, 1, 1, 1, 0, 0, -1, 1, 0],
        [0, -1, 0, 1, 1, 0, 0, 0, 1, 1, -1, 0, 0, -1, -1, 0],
        [1, 0, -1, 0, 0, -1, -1, 1, 0, 0, 0, 1, -1, 0, 0, 1],
        [1, 0, -1, 0, 0, 1, 1, 1, 0, 0, 0, -1, -1, 0, 0, -1],
    ];

    /// Perturbation matrix of the boundary family (16 columns).
    pub const BOUNDARY_M: [[i64; 16]; 4] = [
        [0, 0, 0, 0, 1, 0, -1, -1, -1, 0, 0, 1, 1, 1, -1, 0],
        [-2, 0, 0, -2, -1, 0, -1, -1, -1, -2, 0, -1, -1, -1, -1, -2],
        [0, 0, 0, 0, -1, 0, 1, -1, -1, 0, 0, -1, 1, 1, 1, 0],
        [-2, 0, 0, 0, -1, -2, -1, -1, -1, -2, -2, -1, -1, -1, -1, 0],
    ];

    /// Candidate facet normal directions of the boundary family
    /// (16 columns; outer normals lie among the columns and their
    /// negatives).
    pub const NORMAL_N: [[i64; 16]; 4] = [
        [1, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1, -1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1, -1],
        [1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0],
        [0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1],
    ];

    /// Convex hull of the 16 columns of `L + c M`; for `c*c = 1 - 1/s` its
    /// self-wedge is `(8-4c^2, 4, 4-4c^2, 4-4c^2, 4, 8-4c^2)`.
    pub fn boundary_polytope(c: &Rational) -> Polytope4 {
        let columns: Vec<[Rational; 4]> = (0..16)
            .map(|col| {
                std::array::from_fn(|row| {
                    Rational::from_int(BOUNDARY_L[row][col])
                        + Rational::from_int(BOUNDARY_M[row][col]) * c
                })
            })
            .collect();
        Polytope4::new(columns).expect("sixteen columns")
    }

    /// Right-hand sides `a_i` of the halfspace description
    /// `<x, n_i> >= a_i` of the boundary family, `n_i` the columns of
    /// [`NORMAL_N`].
    pub fn boundary_support_values(c: &Rational) -> [Rational; 16] {
        let one = Rational::one();
        let two_c = Rational::from_int(2) * c;
        let plus = &one + &two_c;
        let minus = &one - &two_c;
        let raw = [
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            plus.clone(),
            one.clone(),
            minus.clone(),
            one.clone(),
            plus.clone(),
            plus.clone(),
            one.clone(),
            one.clone(),
            one.clone(),
            minus.clone(),
            minus.clone(),
        ];
        raw.map(|v| -v)
    }
}

/// Permutation-only group element.
fn perm_element(perm: Perm) -> PermutedScaling {
    PermutedScaling {
        lambda: Rational::one(),
        scale: std::array::from_fn(|_| Rational::one()),
        perm,
    }
}

/// First permutation (in the fixed enumeration order) whose action
/// rearranges the pairing products of `p` into the order selected by `pick`.
fn permutation_sorting_products(
    p: &WedgeVector,
    pick: impl Fn(&[Rational; 3]) -> bool,
) -> PermutedScaling {
    for perm in Perm::all() {
        let g = perm_element(perm);
        let t = g.act(p).symmetric_products();
        if pick(&[t.a, t.b, t.c]) {
            return g;
        }
    }
    unreachable!("S4 induces all permutations of the three pairing slots")
}

fn verified_pair(target: &WedgeVector, a: Polytope4, b: Polytope4) -> Result<PairCertificate> {
    let recomputed = a.wedge(&b);
    if &recomputed != target {
        return Err(Error::Internal("certificate recomputation mismatch"));
    }
    Ok(PairCertificate {
        target: target.clone(),
        a,
        b,
        recomputed,
        exact: true,
    })
}

/// Realizes a nonzero target of Δ(T₂) with a zero entry (or the zero
/// target) as a pair built from the canonical lattice blocks.
pub fn realize_zero_entry(p: &WedgeVector) -> Result<PairCertificate> {
    if p.is_zero() {
        return verified_pair(p, Polytope4::origin(), Polytope4::origin());
    }
    let class = classify_zero_orbit(p)?;
    let reps = crate::membership::zero_orbit_representatives();
    let index = reps
        .iter()
        .position(|r| *r == class.representative)
        .expect("canonical representative");
    let block = blocks::zero_orbit_block(index);
    let witness = class.witness.expect("nonzero input");
    let (a, b) = act_on_pair(&witness, &block, &block);
    verified_pair(p, a, b)
}

/// Symmetric cover: the polytope `x P + y Q + z R` pairs with `D_{12|34}`
/// to give the symmetric vector `(r1, r2, r3, r3, r2, r1)` when
/// `x = (r1-r2)/2`, `y = (r2-r3)/2`, `z = (r2+r3-r1)/2`.
fn symmetric_cover(x: &Rational, y: &Rational, z: &Rational) -> Polytope4 {
    let mut acc = Polytope4::origin();
    for (coeff, block) in [
        (x, blocks::p_block()),
        (y, blocks::q_block()),
        (z, blocks::r_block()),
    ] {
        if coeff.is_positive() {
            acc = acc.minkowski(&block.scale(coeff));
        }
    }
    acc
}

/// Realizes a strictly positive boundary target exactly.
///
/// The tight triangle identity is moved to the `{1,3}|{2,4}` slot, the
/// `{1,4}` and `{2,3}` entries are normalized to 1, and squaring the tight
/// identity forces the square root of the remaining product to be rational.
/// The symmetrized vector is then covered by `x P + y Q + z R` against
/// `D_{12|34}` and everything is pulled back through the group.
pub fn realize_boundary_positive(p: &WedgeVector) -> Result<PairCertificate> {
    if !p.is_strictly_positive() {
        return Err(Error::NotAllPositive);
    }
    if t2_membership(p).status != Status::Boundary {
        return Err(Error::NotOnBoundary);
    }

    // Move the tight product (the long side) to the middle slot.
    let g_sort = permutation_sorting_products(p, |prods| {
        let root_sum =
            crate::exact::cmp_sqrt_sum(&prods[0], &prods[2], &prods[1]).expect("nonnegative");
        root_sum == std::cmp::Ordering::Equal
    });
    let moved = g_sort.act(p);

    // Normalize the {1,4} and {2,3} entries to 1.
    let g_norm = PermutedScaling::scaling_only(
        Rational::one(),
        [
            Rational::one(),
            Rational::one(),
            moved.get(2, 3).recip(),
            moved.get(1, 4).recip(),
        ],
    )?;
    let q = g_norm.act(&moved);

    // Tightness now reads sqrt(q12*q34) + 1 = sqrt(q13*q24), so the square
    // root on the left is rational.
    let alpha = crate::exact::is_rational_square(&(q.get(1, 2) * q.get(3, 4)))?
        .ok_or(Error::Internal("tight boundary product is not a rational square"))?;
    let beta = &alpha + &Rational::one();
    if q.get(1, 3) * q.get(2, 4) != &beta * &beta {
        return Err(Error::Internal("tight identity failed to square"));
    }

    // The degenerate-case symmetrizer, entirely rational.
    let c1 = &alpha * &beta;
    let c2 = q.get(1, 3) * &alpha;
    let c3 = q.get(1, 2) * &beta;
    let c4 = q.get(1, 2) * q.get(1, 3);
    let lambda = (&c1 * &c4).recip();
    let g_sym = PermutedScaling::scaling_only(lambda, [c1, c2, c3, c4])?;
    let sym = g_sym.act(&q);

    // Sort the symmetric profile decreasingly and cover it.
    let g_desc = permutation_sorting_products(&sym, |prods| {
        prods[0] >= prods[1] && prods[1] >= prods[2]
    });
    let target = g_desc.act(&sym);
    let r1 = target.get(1, 2).clone();
    let r2 = target.get(1, 3).clone();
    let r3 = target.get(1, 4).clone();
    let two = Rational::from_int(2);
    let x = (&r1 - &r2) / &two;
    let y = (&r2 - &r3) / &two;
    let z = (&(&r2 + &r3) - &r1) / &two;
    let a_sym = symmetric_cover(&x, &y, &z);
    let b_sym = blocks::d12_34();

    let total = g_desc
        .compose(&g_sym)
        .compose(&g_norm)
        .compose(&g_sort);
    let (a, b) = act_on_pair(&total.inverse(), &a_sym, &b_sym);
    verified_pair(p, a, b)
}

/// Realizes an interior target exactly by the precision-escalation cone
/// construction.
///
/// Round `k`: the symmetrizer is approximated by `k`-bit dyadic square
/// roots, giving a rational group element `g` and a nearly symmetric
/// `p' = g(p)`; a symmetric rational `r` slightly inside `p'` is chosen and
/// the residue `v = p' - r` is expressed in the cone generators through the
/// closed-form inversion `c_kl = (Σv)/5 - v_kl`. The round is accepted only
/// if all acceptance inequalities hold exactly; acceptance is guaranteed
/// for large `k` because the constraints are open and satisfied in the
/// limit.
pub fn realize_interior(p: &WedgeVector) -> Result<PairCertificate> {
    if t2_membership(p).status != Status::Interior {
        return Err(Error::NotInterior);
    }

    // Sort the pairing products decreasingly once and for all.
    let g_sort = permutation_sorting_products(p, |prods| {
        prods[0] >= prods[1] && prods[1] >= prods[2]
    });
    let sorted = g_sort.act(p);

    let mut bits = 24u32;
    while bits <= 3072 {
        if let Some(cert) = try_interior_round(p, &g_sort, &sorted, bits)? {
            return Ok(cert);
        }
        bits *= 2;
    }
    Err(Error::Internal("interior cone construction did not converge"))
}

fn try_interior_round(
    p: &WedgeVector,
    g_sort: &PermutedScaling,
    sorted: &WedgeVector,
    bits: u32,
) -> Result<Option<PairCertificate>> {
    // Dyadic approximation of the symmetrizer of the sorted vector.
    let e = sorted.entries();
    let star = |i: usize, j: usize, k: usize| {
        (sorted.get(i, j) * sorted.get(i, k)).sqrt_dyadic_floor(bits)
    };
    let c_approx = [
        (sorted.get(2, 3) * &(sorted.get(2, 4) * sorted.get(3, 4))).sqrt_dyadic_floor(bits)?,
        (sorted.get(1, 3) * &(sorted.get(1, 4) * sorted.get(3, 4))).sqrt_dyadic_floor(bits)?,
        (sorted.get(1, 2) * &(sorted.get(1, 4) * sorted.get(2, 4))).sqrt_dyadic_floor(bits)?,
        (sorted.get(1, 2) * &(sorted.get(1, 3) * sorted.get(2, 3))).sqrt_dyadic_floor(bits)?,
    ];
    let _ = star;
    let total: Rational = e.iter().fold(Rational::one(), |acc, v| acc * v);
    let lambda_approx = total.recip().sqrt_dyadic_floor(bits)?;
    if !lambda_approx.is_positive() || c_approx.iter().any(|c| !c.is_positive()) {
        return Ok(None);
    }

    let g_sym = PermutedScaling::scaling_only(lambda_approx, c_approx)?;
    let total_g = g_sym.compose(g_sort);
    let near = g_sym.act(sorted);

    // Symmetric reference point strictly inside the profile of p'.
    let m = [
        near.get(1, 2).clone().min(near.get(3, 4).clone()),
        near.get(1, 3).clone().min(near.get(2, 4).clone()),
        near.get(1, 4).clone().min(near.get(2, 3).clone()),
    ];
    let eps_scale = m[0].clone().max(m[1].clone()).max(m[2].clone());
    let eps = eps_scale
        * Rational::from_bigint(num_bigint::BigInt::from(1) << (bits / 2) as usize).recip();
    let mut r = [&m[0] - &eps, &m[1] - &eps, &m[2] - &eps];
    r.sort_by(|a, b| b.cmp(a));
    let [r1, r2, r3] = r;

    // Acceptance: r strictly positive, symmetric-region inequalities, and
    // strictly positive cone coefficients.
    if !r3.is_positive() || &r2 + &r3 < r1 {
        return Ok(None);
    }
    let r_vec = WedgeVector([
        r1.clone(),
        r2.clone(),
        r3.clone(),
        r3.clone(),
        r2.clone(),
        r1.clone(),
    ]);
    let v = near.sub(&r_vec);
    let v_sum: Rational = v.entries().iter().sum();
    let share = &v_sum / &Rational::from_int(5);
    let coeffs: [Rational; 6] = std::array::from_fn(|k| &share - &v.entries()[k]);
    if coeffs.iter().any(|c| !c.is_positive()) {
        return Ok(None);
    }

    // Assemble A = (xP + yQ + zR) + Σ c_kl R_kl, pruning as the sum grows.
    let two = Rational::from_int(2);
    let x = (&r1 - &r2) / &two;
    let y = (&r2 - &r3) / &two;
    let z = (&(&r2 + &r3) - &r1) / &two;
    let mut a_sym = symmetric_cover(&x, &y, &z);
    for (slot, coeff) in coeffs.iter().enumerate() {
        a_sym = a_sym
            .minkowski(&blocks::cone_block(slot).scale(coeff))
            .prune_to_projection_support();
    }
    let b_sym = blocks::d12_34();
    if a_sym.wedge(&b_sym) != near {
        return Err(Error::Internal("cone inversion produced a wrong wedge"));
    }

    let (a, b) = act_on_pair(&total_g.inverse(), &a_sym, &b_sym);
    Ok(Some(verified_pair(p, a, b)?))
}

/// Realizes any rational target of Δ(T₂) as an exact pair, dispatching on
/// the stratum of the target.
pub fn realize_pair(p: &WedgeVector) -> Result<PairCertificate> {
    let verdict = t2_membership(p);
    match verdict.status {
        Status::Outside => Err(Error::OutsideT2),
        _ if p.has_zero_entry() || p.is_zero() => realize_zero_entry(p),
        Status::Boundary => realize_boundary_positive(p),
        Status::Interior => realize_interior(p),
    }
}

/// Self-realization of an interior target by a three-segment zonotope,
/// computed at escalating dyadic precision until the exact wedge of the
/// snapped polytope meets the tolerance.
pub fn realize_self_interior(p: &WedgeVector, tolerance: &Rational) -> Result<SelfCertificate> {
    if !tolerance.is_positive() {
        return Err(Error::ToleranceNotPositive);
    }
    if t2_membership(p).status != Status::Interior {
        return Err(Error::NotInterior);
    }

    let g_sort = permutation_sorting_products(p, |prods| {
        prods[0] >= prods[1] && prods[1] >= prods[2]
    });
    let sorted = g_sort.act(p);
    let back = g_sort.perm.inverse();

    let mut bits = 32u32;
    while bits <= 16_384 {
        if let Some(cert) = try_self_interior_round(p, &sorted, &back, bits, tolerance)? {
            return Ok(cert);
        }
        bits *= 2;
    }
    Err(Error::Internal("self-realization did not reach tolerance"))
}

fn try_self_interior_round(
    p: &WedgeVector,
    sorted: &WedgeVector,
    back: &Perm,
    bits: u32,
    tolerance: &Rational,
) -> Result<Option<SelfCertificate>> {
    let t = sorted.symmetric_products();
    let q1 = t.a.sqrt_dyadic_floor(bits)?;
    let q2 = t.b.sqrt_dyadic_floor(bits)?;
    let q3 = t.c.sqrt_dyadic_floor(bits)?;

    // Zonotope system: xy = u, xz = v, yz = w.
    let four = Rational::from_int(4);
    let a = &q1 - &q2;
    let b = &q2 - &q3;
    let d = (&(&q2 + &q3) - &q1) / &Rational::from_int(2);
    if a.is_negative() || b.is_negative() || !d.is_positive() {
        return Ok(None);
    }
    let u = (&(&a + &b) + &d) / &four;
    let v = (&a + &d) / &four;
    let w = &d / &four;
    let x = (&(&u * &v) / &w).sqrt_dyadic_floor(bits)?;
    let y = (&(&u * &w) / &v).sqrt_dyadic_floor(bits)?;
    let z = (&(&v * &w) / &u).sqrt_dyadic_floor(bits)?;
    if !x.is_positive() || !y.is_positive() || !z.is_positive() {
        return Ok(None);
    }

    let zonotope = blocks::d12_34()
        .scale(&x)
        .minkowski(&blocks::d13_24().scale(&y))
        .minkowski(&blocks::d14_23().scale(&z));

    // Pull back with the real scaling: diag(c*) and the square root of
    // 1/(λ* Π c*), all approximated dyadically.
    let c_approx: [Rational; 4] = [
        (sorted.get(2, 3) * &(sorted.get(2, 4) * sorted.get(3, 4))).sqrt_dyadic_floor(bits)?,
        (sorted.get(1, 3) * &(sorted.get(1, 4) * sorted.get(3, 4))).sqrt_dyadic_floor(bits)?,
        (sorted.get(1, 2) * &(sorted.get(1, 4) * sorted.get(2, 4))).sqrt_dyadic_floor(bits)?,
        (sorted.get(1, 2) * &(sorted.get(1, 3) * sorted.get(2, 3))).sqrt_dyadic_floor(bits)?,
    ];
    if c_approx.iter().any(|c| !c.is_positive()) {
        return Ok(None);
    }
    let total: Rational = sorted.entries().iter().fold(Rational::one(), |acc, e| acc * e);
    let lambda_approx = total.recip().sqrt_dyadic_floor(bits)?;
    if !lambda_approx.is_positive() {
        return Ok(None);
    }
    let prod_c = c_approx.iter().fold(Rational::one(), |acc, c| acc * c);
    let factor = (&lambda_approx * &prod_c).recip().sqrt_dyadic_floor(bits)?;
    if !factor.is_positive() {
        return Ok(None);
    }

    let body = zonotope
        .diag_scale(&c_approx)
        .scale(&factor)
        .coord_permute(back);

    // Snap to dyadic vertices and measure the exact residual.
    let snapped = Polytope4::new(
        body.generators()
            .iter()
            .map(|g| std::array::from_fn(|k| g[k].dyadic_round(bits)))
            .collect(),
    )
    .expect("nonempty");
    let recomputed = snapped.wedge(&snapped);
    let residual = recomputed
        .entries()
        .iter()
        .zip(p.entries())
        .map(|(got, want)| (&(got - want) / want).abs())
        .max()
        .expect("six entries");
    if residual > *tolerance {
        return Ok(None);
    }
    Ok(Some(SelfCertificate {
        target: p.clone(),
        a: snapped,
        recomputed,
        residual,
        proportionality: None,
    }))
}

/// Self-realization of the boundary family member `(s+1, s, 1, 1, s, s+1)`.
///
/// When `1 - 1/s` is a rational square the vertex matrix `L + cM` is exact
/// and the recomputed wedge equals `(4/s) * (s+1, s, 1, 1, s, s+1)` with a
/// zero residual; otherwise `c` is snapped to dyadic rationals at
/// escalating precision until the residual against the proportional target
/// meets the tolerance. With `rescale` the body is additionally scaled by a
/// dyadic approximation of `sqrt(s)/2`, so the wedge approximates the
/// target itself.
pub fn realize_self_boundary(
    s: &Rational,
    tolerance: &Rational,
    rescale: bool,
) -> Result<SelfCertificate> {
    if *s < Rational::one() {
        return Err(Error::SLessThanOne);
    }
    if !tolerance.is_positive() {
        return Err(Error::ToleranceNotPositive);
    }
    let one = Rational::one();
    let target = WedgeVector([
        s + &one,
        s.clone(),
        one.clone(),
        one.clone(),
        s.clone(),
        s + &one,
    ]);
    let c_squared = &one - &s.recip();
    let mu = &Rational::from_int(4) / s;

    let exact_c = crate::exact::is_rational_square(&c_squared)?;
    let exact_root_s = crate::exact::is_rational_square(s)?;

    let mut bits = 16u32;
    loop {
        let c = match &exact_c {
            Some(c) => c.clone(),
            None => c_squared.sqrt_dyadic_floor(bits)?,
        };
        let mut body = blocks::boundary_polytope(&c);
        let reference = if rescale {
            let half_root_s = match &exact_root_s {
                Some(r) => r / &Rational::from_int(2),
                None => s.sqrt_dyadic_floor(bits)? / Rational::from_int(2),
            };
            body = body.scale(&half_root_s);
            target.clone()
        } else {
            target.scale(&mu)
        };
        let recomputed = body.wedge(&body);
        let residual = recomputed
            .entries()
            .iter()
            .zip(reference.entries())
            .map(|(got, want)| (&(got - want) / want).abs())
            .max()
            .expect("six entries");
        if residual.is_zero() || residual <= *tolerance {
            let proportionality = if residual.is_zero() {
                Some(if rescale { Rational::one() } else { mu.clone() })
            } else {
                None
            };
            return Ok(SelfCertificate {
                target,
                a: body,
                recomputed,
                residual,
                proportionality,
            });
        }
        if exact_c.is_some() && (exact_root_s.is_some() || !rescale) {
            return Err(Error::Internal("exact boundary family wedge mismatch"));
        }
        bits *= 2;
        if bits > 16_384 {
            return Err(Error::Internal("boundary snapping did not reach tolerance"));
        }
    }
}
