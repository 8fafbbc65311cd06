//! Decision procedures for the regions Δ(T₂) and Δ(T₁), zero-entry orbit
//! canonicalization, the integral realizability obstruction, and seeded
//! samplers for test corpora.
//!
//! Δ(T₂) is the set of nonnegative sextuples whose three pairing products
//! `(p12*p34, p13*p24, p14*p23)` have square roots forming the side lengths
//! of a (possibly degenerate) triangle; Δ(T₁) is the analogue with plain
//! products. Both are decided exactly.
//!
//! Samplers draw from a fixed 64-bit linear congruential stream
//! (`x <- 6364136223846793005 * x + 1442695040888963407`, top bits used), so
//! every corpus is reproducible from its seed.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{cmp_sqrt_sum, Rational, SymMatrix};
use crate::wedge::{pair_index, Perm, PermutedScaling, WedgeVector, COMPLEMENT, PAIRS};

/// Which region a verdict speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    T2,
    T1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Interior,
    Boundary,
    Outside,
}

/// The tight or violated constraint backing a non-interior verdict.
///
/// Triangle constraints are named by the pairing slot whose product is the
/// long side: slot 0 is `{1,2}|{3,4}`, slot 1 is `{1,3}|{2,4}`, slot 2 is
/// `{1,4}|{2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintWitness {
    NegativeEntry(usize),
    ZeroEntry(usize),
    TightTriangle(usize),
    ViolatedTriangle(usize),
}

impl ConstraintWitness {
    fn slot_pairs(slot: usize) -> ((usize, usize), (usize, usize), (usize, usize)) {
        match slot {
            0 => ((1, 2), (3, 4), (1, 3)),
            1 => ((1, 3), (2, 4), (1, 2)),
            _ => ((1, 4), (2, 3), (1, 2)),
        }
    }
}

impl fmt::Display for ConstraintWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintWitness::NegativeEntry(k) => {
                let (i, j) = PAIRS[*k];
                write!(f, "entry p{i}{j} is negative")
            }
            ConstraintWitness::ZeroEntry(k) => {
                let (i, j) = PAIRS[*k];
                write!(f, "entry p{i}{j} is zero")
            }
            ConstraintWitness::TightTriangle(slot) => {
                let ((i, j), (k, l), _) = ConstraintWitness::slot_pairs(*slot);
                write!(f, "triangle constraint with long side p{i}{j}*p{k}{l} is tight")
            }
            ConstraintWitness::ViolatedTriangle(slot) => {
                let ((i, j), (k, l), _) = ConstraintWitness::slot_pairs(*slot);
                write!(
                    f,
                    "triangle constraint with long side p{i}{j}*p{k}{l} is violated"
                )
            }
        }
    }
}

impl Serialize for ConstraintWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipVerdict {
    pub region: Region,
    pub status: Status,
    pub witness: Option<ConstraintWitness>,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        self.status != Status::Outside
    }
}

/// Shared scaffolding for the two membership tests. `cmp(x, y, z)` decides
/// `side(x) + side(y)` versus `side(z)` for the relevant notion of side.
fn membership_with(
    region: Region,
    p: &WedgeVector,
    cmp: impl Fn(&Rational, &Rational, &Rational) -> Ordering,
) -> MembershipVerdict {
    for k in 0..6 {
        if p.entries()[k].is_negative() {
            return MembershipVerdict {
                region,
                status: Status::Outside,
                witness: Some(ConstraintWitness::NegativeEntry(k)),
            };
        }
    }
    let t = p.symmetric_products();
    let prods = [t.a.clone(), t.b.clone(), t.c.clone()];
    let mut tight = None;
    for slot in 0..3 {
        let x = &prods[(slot + 1) % 3];
        let y = &prods[(slot + 2) % 3];
        let z = &prods[slot];
        match cmp(x, y, z) {
            Ordering::Less => {
                return MembershipVerdict {
                    region,
                    status: Status::Outside,
                    witness: Some(ConstraintWitness::ViolatedTriangle(slot)),
                }
            }
            Ordering::Equal => tight = Some(slot),
            Ordering::Greater => {}
        }
    }
    if let Some(slot) = tight {
        return MembershipVerdict {
            region,
            status: Status::Boundary,
            witness: Some(ConstraintWitness::TightTriangle(slot)),
        };
    }
    if let Some(k) = (0..6).find(|&k| p.entries()[k].is_zero()) {
        return MembershipVerdict {
            region,
            status: Status::Boundary,
            witness: Some(ConstraintWitness::ZeroEntry(k)),
        };
    }
    MembershipVerdict {
        region,
        status: Status::Interior,
        witness: None,
    }
}

/// Membership in Δ(T₂): all entries nonnegative and, for each pairing slot,
/// the square root of its product is at most the sum of the other two
/// square roots. Decided exactly through [`cmp_sqrt_sum`].
pub fn t2_membership(p: &WedgeVector) -> MembershipVerdict {
    membership_with(Region::T2, p, |x, y, z| {
        cmp_sqrt_sum(x, y, z).expect("products of nonnegative entries")
    })
}

/// Membership in Δ(T₁): the same scheme with plain products, i.e.
/// `p_ij p_kl + p_ik p_jl >= p_il p_jk` for all labelings.
pub fn t1_membership(p: &WedgeVector) -> MembershipVerdict {
    membership_with(Region::T1, p, |x, y, z| (x + y).cmp(z))
}

/// The symmetric 4x4 matrix with zero diagonal and off-diagonal entries
/// `p_ij`.
pub fn lorentz_matrix(p: &WedgeVector) -> SymMatrix {
    let mut m = SymMatrix::zero(4);
    for (k, (i, j)) in PAIRS.iter().enumerate() {
        m.set(i - 1, j - 1, p.entries()[k].clone());
    }
    m
}

/// Canonical representative of the orbit of a nonzero vector of Δ(T₂) with
/// a zero entry, together with a witness carrying the representative to the
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroOrbitClass {
    pub representative: WedgeVector,
    /// `act(witness, representative) == input`, exactly. Absent only for
    /// the zero vector, which the classifier itself rejects.
    pub witness: Option<PermutedScaling>,
}

/// The six canonical zero-entry representatives, in the fixed order used
/// for classification.
pub fn zero_orbit_representatives() -> [WedgeVector; 6] {
    [
        WedgeVector::from_ints([1, 1, 1, 1, 1, 0]),
        WedgeVector::from_ints([1, 1, 0, 1, 0, 0]),
        WedgeVector::from_ints([0, 1, 1, 1, 1, 0]),
        WedgeVector::from_ints([1, 1, 1, 0, 0, 0]),
        WedgeVector::from_ints([1, 1, 0, 0, 0, 0]),
        WedgeVector::from_ints([1, 0, 0, 0, 0, 0]),
    ]
}

/// Classifies a nonzero vector of Δ(T₂) with a zero entry onto exactly one
/// of the six canonical representatives and produces an exact rational
/// witness.
///
/// The representative is determined by the support pattern alone: the six
/// canonical supports (one edge short of complete, a four-cycle, a
/// triangle, a star, a two-edge path, a single edge) are exactly the
/// supports that occur inside Δ(T₂).
pub fn classify_zero_orbit(p: &WedgeVector) -> Result<ZeroOrbitClass> {
    if p.is_zero() {
        return Err(Error::NotApplicable("zero vector"));
    }
    if p.is_strictly_positive() {
        return Err(Error::NotApplicable("no zero entry"));
    }
    if t2_membership(p).status == Status::Outside {
        return Err(Error::NotApplicable("outside the T2 region"));
    }
    for rep in zero_orbit_representatives() {
        if let Some(witness) = crate::wedge::equivalent_over_q(&rep, p)? {
            debug_assert_eq!(witness.act(&rep), *p);
            return Ok(ZeroOrbitClass {
                representative: rep,
                witness: Some(witness),
            });
        }
    }
    Err(Error::Internal(
        "zero-entry vector in the T2 region matched no canonical support",
    ))
}

/// Integral realizability obstruction: for every labeling with `p_ij > 0`,
/// reports the quadruple `(i, j, k, l)` whenever
/// `p_kl > p_ik p_jl + p_il p_jk`. An empty list means no obstruction from
/// this criterion (which is necessary, not sufficient).
pub fn z_obstruction(p: &WedgeVector) -> Result<Vec<[usize; 4]>> {
    if p.entries().iter().any(|e| e.is_negative()) {
        return Err(Error::NegativeEntry);
    }
    if !p.is_integral() {
        return Err(Error::NonIntegerInput);
    }
    let mut out = Vec::new();
    for k in 0..6 {
        if !p.entries()[k].is_positive() {
            continue;
        }
        let (i, j) = PAIRS[k];
        let (kk, ll) = PAIRS[COMPLEMENT[k]];
        let bound = &(p.get(i, kk) * p.get(j, ll)) + &(p.get(i, ll) * p.get(j, kk));
        if p.entries()[COMPLEMENT[k]] > bound {
            out.push([i, j, kk, ll]);
        }
    }
    Ok(out)
}

/// Strata of Δ(T₂) that the sampler can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stratum {
    Interior,
    Boundary,
    ZeroEntry,
}

impl std::str::FromStr for Stratum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interior" => Ok(Stratum::Interior),
            "boundary" => Ok(Stratum::Boundary),
            "zero-entry" => Ok(Stratum::ZeroEntry),
            other => Err(Error::Parse(format!("unknown stratum `{other}`"))),
        }
    }
}

/// Deterministic 64-bit linear congruential generator; the single source of
/// randomness for samplers and seeded tests.
#[derive(Debug, Clone)]
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    /// Uniform in `0..n` (top bits; `n` is tiny here so bias is immaterial).
    pub fn below(&mut self, n: u64) -> u64 {
        (self.next_u64() >> 16) % n
    }

    /// Rational in `[0, 10]` with denominator 16.
    pub fn entry(&mut self) -> Rational {
        Rational::ratio(self.below(161) as i64, 16)
    }

    /// Rational in `(0, 10]` with denominator 16.
    pub fn positive_entry(&mut self) -> Rational {
        Rational::ratio(1 + self.below(160) as i64, 16)
    }

    /// Small positive rational for group elements.
    pub fn group_scalar(&mut self) -> Rational {
        Rational::ratio(1 + self.below(12) as i64, 1 + self.below(4) as i64)
    }

    pub fn group_element(&mut self) -> PermutedScaling {
        let perms = Perm::all();
        let perm = perms[self.below(24) as usize];
        PermutedScaling::new(
            self.group_scalar(),
            std::array::from_fn(|_| self.group_scalar()),
            perm,
        )
        .expect("positive scalars")
    }
}

/// Deterministic pseudo-random vectors in the requested stratum of Δ(T₂).
///
/// Interior samples are drawn by rejection; boundary samples are built by
/// making one triangle identity tight with rational square products and
/// then acting by a random group element; zero-entry samples act on the
/// canonical representatives.
pub fn sample_t2(seed: u64, count: usize, stratum: Stratum) -> Vec<WedgeVector> {
    let mut rng = Lcg(seed ^ 0xd1b54a32d192ed03);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let candidate = match stratum {
            Stratum::Interior => {
                let p = WedgeVector(std::array::from_fn(|_| rng.positive_entry()));
                if t2_membership(&p).status != Status::Interior {
                    continue;
                }
                p
            }
            Stratum::Boundary => {
                // sqrt products (u, v, u+v) make the slot with (u+v)^2 tight.
                let u = rng.group_scalar();
                let v = rng.group_scalar();
                let squares = [&u * &u, &v * &v, (&u + &v) * (&u + &v)];
                let order = rng.below(3) as usize;
                let mut p = WedgeVector::zero();
                for slot in 0..3 {
                    let product = squares[(slot + order) % 3].clone();
                    let first = rng.positive_entry();
                    let second = &product / &first;
                    let (ka, kb) = match slot {
                        0 => (0, 5),
                        1 => (1, 4),
                        _ => (2, 3),
                    };
                    p.0[ka] = first;
                    p.0[kb] = second;
                }
                let p = rng.group_element().act(&p);
                debug_assert_eq!(t2_membership(&p).status, Status::Boundary);
                p
            }
            Stratum::ZeroEntry => {
                let reps = zero_orbit_representatives();
                let rep = reps[rng.below(6) as usize].clone();
                let p = rng.group_element().act(&rep);
                debug_assert_eq!(t2_membership(&p).status, Status::Boundary);
                p
            }
        };
        out.push(candidate);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn wv(v: [i64; 6]) -> WedgeVector {
        WedgeVector::from_ints(v)
    }

    #[test]
    fn t2_examples() {
        assert_eq!(t2_membership(&wv([1, 1, 1, 1, 1, 3])).status, Status::Interior);
        assert_eq!(t2_membership(&wv([1, 1, 1, 1, 1, 4])).status, Status::Boundary);
        assert_eq!(t2_membership(&wv([1, 1, 1, 1, 1, 5])).status, Status::Outside);
    }

    #[test]
    fn t2_outside_witness_reevaluates() {
        let p = wv([1, 1, 1, 1, 1, 5]);
        let v = t2_membership(&p);
        let Some(ConstraintWitness::ViolatedTriangle(slot)) = v.witness else {
            panic!("expected a violated triangle, got {:?}", v.witness);
        };
        let t = p.symmetric_products();
        let prods = [t.a, t.b, t.c];
        assert_eq!(
            cmp_sqrt_sum(
                &prods[(slot + 1) % 3],
                &prods[(slot + 2) % 3],
                &prods[slot]
            )
            .unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn t2_zero_entry_is_boundary() {
        let verdict = t2_membership(&wv([1, 1, 0, 1, 0, 0]));
        assert_eq!(verdict.status, Status::Boundary);
        let verdict = t2_membership(&wv([2, 3, 1, 1, 3, 2]));
        assert_eq!(verdict.status, Status::Interior);
    }

    #[test]
    fn t1_examples() {
        assert_eq!(t1_membership(&wv([1, 1, 1, 1, 1, 1])).status, Status::Interior);
        let p = WedgeVector([
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::ratio(39, 10),
        ]);
        assert_eq!(t1_membership(&p).status, Status::Outside);
        assert_eq!(t1_membership(&WedgeVector::zero()).status, Status::Boundary);
    }

    #[test]
    fn t2_vs_t1_paper_pair() {
        let a = wv([1, 1, 1, 1, 1, 3]);
        assert!(t2_membership(&a).is_member());
        assert!(t1_membership(&a).is_member());
        let b = WedgeVector([
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::ratio(39, 10),
        ]);
        assert!(t2_membership(&b).status == Status::Interior);
        assert!(!t1_membership(&b).is_member());
    }

    #[test]
    fn lorentz_matrix_layout() {
        let m = lorentz_matrix(&wv([1, 2, 3, 4, 5, 6]));
        let expect = SymMatrix::from_rows(vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 4, 5],
            vec![2, 4, 0, 6],
            vec![3, 5, 6, 0],
        ]
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_int).collect())
        .collect())
        .unwrap();
        assert_eq!(m, expect);
        assert!(lorentz_matrix(&WedgeVector::zero())
            .rows()
            .iter()
            .flatten()
            .all(|e| e.is_zero()));
    }

    #[test]
    fn lorentzian_iff_t2_on_examples() {
        // J - I: interior point (1,...,1).
        assert!(lorentz_matrix(&wv([1, 1, 1, 1, 1, 1])).is_lorentzian());
        assert!(lorentz_matrix(&wv([1, 1, 1, 1, 1, 3])).is_lorentzian());
        assert!(!lorentz_matrix(&wv([1, 1, 1, 1, 1, 5])).is_lorentzian());
        // Boundary point: determinant vanishes, still Lorentzian.
        let m = lorentz_matrix(&wv([1, 1, 1, 1, 1, 4]));
        assert!(m.is_lorentzian());
        assert_eq!(m.inertia().n_zero, 1);
    }

    #[test]
    fn inertia_of_boundary_point() {
        let m = lorentz_matrix(&wv([1, 1, 1, 1, 1, 4]));
        let i = m.inertia();
        assert_eq!((i.n_plus, i.n_minus, i.n_zero), (1, 2, 1));
    }

    #[test]
    fn classify_zero_orbit_examples() {
        let c = classify_zero_orbit(&wv([0, 1, 1, 1, 1, 0])).unwrap();
        assert_eq!(c.representative, wv([0, 1, 1, 1, 1, 0]));
        let w = c.witness.unwrap();
        assert_eq!(w.act(&c.representative), wv([0, 1, 1, 1, 1, 0]));

        let c = classify_zero_orbit(&wv([5, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(c.representative, wv([1, 0, 0, 0, 0, 0]));
        assert_eq!(
            c.witness.unwrap().act(&c.representative),
            wv([5, 0, 0, 0, 0, 0])
        );

        assert_eq!(
            classify_zero_orbit(&wv([0, 2, 1, 1, 2, 0])),
            Err(Error::NotApplicable("outside the T2 region"))
        );
        assert!(classify_zero_orbit(&wv([1, 1, 1, 1, 1, 1])).is_err());
        assert!(classify_zero_orbit(&WedgeVector::zero()).is_err());
    }

    #[test]
    fn classify_zero_orbit_round_trip_on_samples() {
        for p in sample_t2(31, 40, Stratum::ZeroEntry) {
            let c = classify_zero_orbit(&p).unwrap();
            assert_eq!(c.witness.unwrap().act(&c.representative), p);
        }
    }

    #[test]
    fn z_obstruction_examples() {
        let flagged = z_obstruction(&wv([1, 1, 1, 1, 1, 3])).unwrap();
        assert!(flagged.contains(&[1, 2, 3, 4]), "{flagged:?}");
        assert!(z_obstruction(&wv([2, 2, 2, 2, 2, 8])).unwrap().is_empty());
        assert!(z_obstruction(&wv([1, 1, 1, 1, 1, 1])).unwrap().is_empty());
        let half = WedgeVector([
            Rational::ratio(1, 2),
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
        ]);
        assert_eq!(z_obstruction(&half), Err(Error::NonIntegerInput));
    }

    #[test]
    fn samplers_hit_their_strata() {
        for p in sample_t2(1, 10, Stratum::Interior) {
            assert_eq!(t2_membership(&p).status, Status::Interior);
        }
        for p in sample_t2(2, 5, Stratum::Boundary) {
            assert_eq!(t2_membership(&p).status, Status::Boundary);
            assert!(p.is_strictly_positive());
        }
        for p in sample_t2(3, 5, Stratum::ZeroEntry) {
            assert_eq!(t2_membership(&p).status, Status::Boundary);
            assert!(p.has_zero_entry());
        }
        assert!(sample_t2(1, 0, Stratum::Interior).is_empty());
    }

    #[test]
    fn samplers_are_deterministic() {
        assert_eq!(
            sample_t2(99, 7, Stratum::Boundary),
            sample_t2(99, 7, Stratum::Boundary)
        );
    }

    #[test]
    fn membership_invariant_under_group_action() {
        let mut rng = Lcg(555);
        let points = [
            wv([1, 1, 1, 1, 1, 3]),
            wv([1, 1, 1, 1, 1, 4]),
            wv([1, 1, 1, 1, 1, 5]),
            wv([0, 1, 1, 1, 1, 0]),
            wv([2, 3, 5, 7, 11, 13]),
        ];
        for p in &points {
            let s2 = t2_membership(p).status;
            let s1 = t1_membership(p).status;
            for _ in 0..10 {
                let g = rng.group_element();
                let q = g.act(p);
                assert_eq!(t2_membership(&q).status, s2, "{p} vs {q}");
                assert_eq!(t1_membership(&q).status, s1, "{p} vs {q}");
            }
        }
    }
}
