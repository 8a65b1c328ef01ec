//! Shared test support: seeded generators and an evaluation-sample-set
//! equivalence oracle that is independent of `canonicalize`.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tropval::poly::{expand, poly_eval, CanonicalPoly, LinearFactorization, TropPoly};
use tropval::ratfunc::TropRational;
use tropval::scalar::{Rat, TropScalar};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(
        BigInt::from(rng.gen_range(-20i64..=20)),
        BigInt::from(rng.gen_range(1i64..=6)),
    )
}

/// Random scalar, `Bottom` with probability 1/5.
pub fn rand_scalar(rng: &mut ChaCha8Rng) -> TropScalar {
    if rng.gen_range(0..5) == 0 {
        TropScalar::Bottom
    } else {
        TropScalar::Finite(rand_rat(rng))
    }
}

/// Random nonzero raw polynomial with up to `max_len` coefficients,
/// interior coefficients `Bottom` with probability 1/4.
pub fn rand_poly(rng: &mut ChaCha8Rng, max_len: usize) -> TropPoly {
    let len = rng.gen_range(1..=max_len);
    let mut coeffs: Vec<TropScalar> = (0..len)
        .map(|_| {
            if rng.gen_range(0..4) == 0 {
                TropScalar::Bottom
            } else {
                TropScalar::Finite(rand_rat(rng))
            }
        })
        .collect();
    if coeffs.iter().all(|c| c.is_bottom()) {
        let fix = rng.gen_range(0..len);
        coeffs[fix] = TropScalar::Finite(rand_rat(rng));
    }
    TropPoly::new(coeffs)
}

/// Random factorization with degree (t-power plus root count) ≤ `max_deg`;
/// roots are repeated with some probability so canonical forms have
/// straight (non-vertex) segments.
pub fn rand_factorization(rng: &mut ChaCha8Rng, max_deg: usize) -> LinearFactorization {
    let t_power = rng.gen_range(0..=max_deg.min(2));
    let n_roots = rng.gen_range(0..=(max_deg - t_power));
    let mut roots = Vec::with_capacity(n_roots);
    while roots.len() < n_roots {
        let r = rand_rat(rng);
        roots.push(r.clone());
        // Duplicate with probability 1/3 to exercise multiplicities.
        if roots.len() < n_roots && rng.gen_range(0..3) == 0 {
            roots.push(r);
        }
    }
    LinearFactorization::new(TropScalar::Finite(rand_rat(rng)), t_power, roots)
        .expect("finite unit")
}

/// Random nonzero canonical polynomial of degree ≤ `max_deg`.
pub fn rand_canonical(rng: &mut ChaCha8Rng, max_deg: usize) -> CanonicalPoly {
    expand(&rand_factorization(rng, max_deg))
}

/// Random fraction built from nonzero numerator and denominator
/// polynomials (small degrees keep arithmetic fast).
pub fn rand_frac(rng: &mut ChaCha8Rng, max_len: usize) -> TropRational {
    let num = rand_poly(rng, max_len);
    let den = rand_poly(rng, max_len);
    TropRational::new(&num, &den).expect("nonzero denominator")
}

/// Functional-equivalence oracle, independent of canonicalization.
///
/// Each polynomial is the pointwise max of the lines y = a_i + i·x over
/// its support. Any breakpoint of either function is an intersection of
/// two lines from the merged line set, so the two functions are equal on
/// all of Q_max iff they agree at Bottom, at every pairwise intersection,
/// at midpoints between consecutive intersections, and at two points
/// beyond each extreme (which pin down the unbounded tails).
pub fn equiv_oracle(f: &TropPoly, g: &TropPoly) -> bool {
    let mut lines: Vec<(i64, Rat)> = Vec::new();
    for p in [f, g] {
        for (i, c) in p.coeffs().iter().enumerate() {
            if let Some(a) = c.as_rat() {
                lines.push((i as i64, a.clone()));
            }
        }
    }

    let mut xs: Vec<Rat> = Vec::new();
    for (k, (i, a)) in lines.iter().enumerate() {
        for (j, b) in &lines[k + 1..] {
            if i != j {
                xs.push((a - b) / Rat::from_integer(BigInt::from(j - i)));
            }
        }
    }
    xs.sort();
    xs.dedup();

    let one = Rat::from_integer(BigInt::from(1));
    let two = Rat::from_integer(BigInt::from(2));
    let mut points: Vec<TropScalar> = vec![
        TropScalar::Bottom,
        TropScalar::int(-1),
        TropScalar::int(0),
        TropScalar::int(1),
    ];
    for w in xs.windows(2) {
        points.push(TropScalar::Finite((&w[0] + &w[1]) / &two));
    }
    if let (Some(lo), Some(hi)) = (xs.first(), xs.last()) {
        points.push(TropScalar::Finite(lo - &one));
        points.push(TropScalar::Finite(lo - &two));
        points.push(TropScalar::Finite(hi + &one));
        points.push(TropScalar::Finite(hi + &two));
    }
    points.extend(xs.into_iter().map(TropScalar::Finite));

    points.iter().all(|x| poly_eval(f, x) == poly_eval(g, x))
}

/// Lower (or drop) non-vertex interior coefficients of a canonical form,
/// producing a functionally equivalent raw representative. Vertices and
/// the support endpoints are untouched — lowering an interpolated
/// coefficient never changes the max, because the corresponding line is a
/// convex combination of its neighbors.
pub fn perturb_preserving(rng: &mut ChaCha8Rng, c: &CanonicalPoly) -> TropPoly {
    let coeffs = c.coeffs();
    let mut out: Vec<TropScalar> = coeffs.to_vec();
    let lo = coeffs.iter().position(|x| !x.is_bottom());
    let (Some(lo), true) = (lo, coeffs.len() >= 3) else {
        return c.as_poly();
    };
    let hi = coeffs.len() - 1;
    for i in (lo + 1)..hi {
        let (a, b, d) = (
            coeffs[i - 1].as_rat().expect("canonical interior"),
            coeffs[i].as_rat().expect("canonical interior"),
            coeffs[i + 1].as_rat().expect("canonical interior"),
        );
        let is_vertex = (b - a) != (d - b);
        if is_vertex {
            continue;
        }
        match rng.gen_range(0..4) {
            0 => out[i] = TropScalar::Bottom,
            1 | 2 => {
                let drop = Rat::new(
                    BigInt::from(rng.gen_range(1i64..=9)),
                    BigInt::from(rng.gen_range(1i64..=3)),
                );
                out[i] = TropScalar::Finite(b - drop);
            }
            _ => {}
        }
    }
    TropPoly::new(out)
}
