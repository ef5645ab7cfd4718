//! Seeded randomized checks of the exact-arithmetic kernel.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CheckReport;
use crate::error::Result;
use crate::exactalg::dense::{Shape, TruncSeries};
use crate::exactalg::{LaurentEps, MultiPoly, QSeries, Rational, UniSeries};

/// Property families, cycled through by case index.
pub const KERNEL_FAMILIES: [&str; 6] = [
    "ring_laws",
    "series_inverse",
    "reversion",
    "lagrange_burmann",
    "laurent_inverse",
    "dense_exp",
];

fn rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn poly(rng: &mut ChaCha8Rng) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let vars = [
            ("y", rng.gen_range(0..=2)),
            ("x1", rng.gen_range(0..=1)),
            ("t", rng.gen_range(0..=2)),
        ];
        let used: Vec<(&str, u32)> = vars.into_iter().filter(|v| v.1 > 0).collect();
        p = p.add(&MultiPoly::monomial(rational(rng), &used));
    }
    p
}

fn uni(rng: &mut ChaCha8Rng, order: usize, c0: Rational) -> UniSeries {
    let mut c = vec![c0];
    c.extend((1..=order).map(|_| rational(rng)));
    UniSeries::from_coeffs(c, order)
}

fn ring_laws(rng: &mut ChaCha8Rng) -> (String, String) {
    let (a, b, c) = (poly(rng), poly(rng), poly(rng));
    let lhs = [
        a.add(&b).mul(&c),
        a.mul(&b),
        a.mul(&b).mul(&c),
        a.sub(&a),
        a.add(&b).pow(2),
    ];
    let rhs = [
        a.mul(&c).add(&b.mul(&c)),
        b.mul(&a),
        a.mul(&b.mul(&c)),
        MultiPoly::zero(),
        a.mul(&a).add(&a.mul(&b).scale(&Rational::from(2))).add(&b.mul(&b)),
    ];
    (join(&lhs), join(&rhs))
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ; ")
}

fn series_inverse(rng: &mut ChaCha8Rng) -> Result<(String, String)> {
    let order = rng.gen_range(2..=7);
    let c0 = nonzero_rational(rng);
    let s = uni(rng, order, c0);
    let n = rng.gen_range(-3..=3i64);
    let u = s.mul(&s.inv()?);
    let p = s.pow(n)?.mul(&s.pow(-n)?);
    // a q-series with polynomial coefficients
    let dq = rng.gen_range(1..=4);
    let mut coeffs = vec![MultiPoly::constant(nonzero_rational(rng))];
    coeffs.extend((1..=dq).map(|_| poly(rng)));
    let q = QSeries::from_coeffs(coeffs, dq);
    let qu = q.mul(&q.inv()?);
    let lhs = format!("{u} ; {p} ; {qu}");
    let one = UniSeries::one(order);
    let rhs = format!("{one} ; {one} ; {}", QSeries::one(dq));
    Ok((lhs, rhs))
}

fn reversion(rng: &mut ChaCha8Rng) -> Result<(String, String)> {
    let order = rng.gen_range(2..=7);
    let mut s = uni(rng, order, Rational::zero());
    let mut c = s.coeffs().to_vec();
    c[1] = nonzero_rational(rng);
    s = UniSeries::from_coeffs(c, order);
    let r = s.revert()?;
    let z = UniSeries::identity(order);
    Ok((
        format!("{} ; {}", s.compose(&r)?, r.compose(&s)?),
        format!("{z} ; {z}"),
    ))
}

/// `Σ_d z^d [t^d] Φ^d Ψ = (Ψ/Φ)(t(z)) · t'(z)` for `z = t/Φ(t)`.
fn lagrange_burmann(rng: &mut ChaCha8Rng) -> Result<(String, String)> {
    let order = rng.gen_range(2..=6);
    let big = order + 1;
    let c0 = nonzero_rational(rng);
    let phi = uni(rng, big, c0);
    let c1 = rational(rng);
    let psi = uni(rng, big, c1);
    let lhs = UniSeries::from_coeffs(
        (0..=order)
            .map(|d| phi.pow(d as i64).map(|p| p.mul(&psi).coeff(d)))
            .collect::<Result<Vec<_>>>()?,
        order,
    );
    let z_of_t = UniSeries::identity(big).mul(&phi.inv()?);
    let t_of_z = z_of_t.revert()?;
    let rhs = psi
        .mul(&phi.inv()?)
        .compose(&t_of_z)?
        .truncate(order)
        .mul(&t_of_z.derivative().truncate(order));
    Ok((lhs.to_string(), rhs.to_string()))
}

fn laurent_inverse(rng: &mut ChaCha8Rng) -> Result<(String, String)> {
    let v = rng.gen_range(-1..=1i64);
    let mut terms = vec![(v, MultiPoly::constant(nonzero_rational(rng)))];
    for j in 1..=3 {
        terms.push((v + j, poly(rng).truncate_in("t", 0)));
    }
    let a = LaurentEps::exact(-4, 4, terms);
    let inv = a.inv_leading()?;
    let prod = a.mul(&inv)?;
    let known = prod.known_hi();
    let lhs = (-4..=known)
        .map(|e| prod.coeff(e).map(|c| c.to_string()))
        .collect::<Result<Vec<_>>>()?
        .join(",");
    let rhs = (-4..=known)
        .map(|e| if e == 0 { "1" } else { "0" })
        .collect::<Vec<_>>()
        .join(",");
    Ok((lhs, rhs))
}

fn dense_exp(rng: &mut ChaCha8Rng) -> Result<(String, String)> {
    let shape = Shape::new(&[rng.gen_range(1..=3), rng.gen_range(1..=3)]);
    let mut random = |c0: Rational| {
        let mut terms = vec![(vec![0, 0], c0)];
        for _ in 0..4 {
            let e = vec![rng.gen_range(0..=3), rng.gen_range(0..=3)];
            if e != [0, 0] {
                terms.push((e, rational(rng)));
            }
        }
        TruncSeries::from_terms(&shape, terms)
    };
    let a = random(Rational::zero());
    let b = random(Rational::zero());
    let s = random(Rational::from(1) + Rational::new(1, 2));
    let text = |t: &TruncSeries| format!("{:?}", t.nonzero_terms());
    let lhs = format!("{} ; {}", text(&a.add(&b).exp()?), text(&s.mul(&s.inv()?)));
    let rhs = format!(
        "{} ; {}",
        text(&a.exp()?.mul(&b.exp()?)),
        text(&TruncSeries::one(&shape))
    );
    Ok((lhs, rhs))
}

/// Run `cases` randomized checks from `seed`, cycling through
/// [`KERNEL_FAMILIES`].
pub fn kernel_property_suite(seed: u64, cases: usize) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(cases);
    for i in 0..cases {
        let start = Instant::now();
        let family = KERNEL_FAMILIES[i % KERNEL_FAMILIES.len()];
        let (lhs, rhs) = match family {
            "ring_laws" => ring_laws(&mut rng),
            "series_inverse" => series_inverse(&mut rng)?,
            "reversion" => reversion(&mut rng)?,
            "lagrange_burmann" => lagrange_burmann(&mut rng)?,
            "laurent_inverse" => laurent_inverse(&mut rng)?,
            _ => dense_exp(&mut rng)?,
        };
        let params = [("seed", seed as i64), ("case", i as i64)];
        out.push(CheckReport::compare(family, &params, lhs, rhs, start));
    }
    Ok(out)
}
