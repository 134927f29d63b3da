//! Worked-example checks run by `ballmag verify`.

use ballmag::engine::{ball_magnitude, bessel_capacity};
use ballmag::exact::{laurent_at_infinity, Poly, RatFunc, Rational};
use ballmag::radial::{ball_alphas, build_boundary_system};
use ballmag::Error;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero")
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::normalize(Poly::from_ints(num), Poly::from_ints(den)).expect("nonzero")
}

fn vol(n: u32) -> RatFunc {
    let f: i64 = (1..=n as i64).product();
    RatFunc::monomial(q(1, f), n as i64)
}

fn phi(j: usize) -> RatFunc {
    let terms: [&[(i64, i64)]; 5] = [
        &[(0, 1)],
        &[(1, 1)],
        &[(2, 1), (3, 1)],
        &[(3, 1), (4, 3), (5, 3)],
        &[(4, 1), (5, 6), (6, 15), (7, 15)],
    ];
    terms[j].iter().fold(RatFunc::zero(), |acc, &(k, c)| {
        &acc + &RatFunc::monomial(Rational::from(c), -k)
    })
}

fn compare(name: &str, got: &RatFunc, want: &RatFunc) -> Check {
    let passed = got == want;
    Check {
        name: name.to_string(),
        passed,
        detail: if passed {
            got.to_text()
        } else {
            format!("got {}, expected {}", got, want)
        },
    }
}

fn boxed_formulas() -> Result<Vec<Check>, Error> {
    let seven_tail = RatFunc::normalize(
        Poly::new(vec![
            q(60, 1),
            q(240, 1),
            q(360, 1),
            q(1165, 4),
            q(145, 1),
            q(189, 4),
            q(31, 3),
            q(3, 2),
            q(2, 15),
            q(1, 180),
        ]),
        Poly::from_ints(&[60, 48, 12, 1]),
    )?;
    let expected = [
        (1, rf(&[1, 1], &[1])),
        (3, rf(&[6, 12, 6, 1], &[6])),
        (5, &vol(5) + &rf(&[72, 216, 216, 105, 27, 3], &[72, 24])),
        (7, &vol(7) + &seven_tail),
    ];
    expected
        .iter()
        .map(|(n, want)| {
            let got = ball_magnitude(*n)?;
            Ok(compare(&format!("magnitude n={n}"), &got.magnitude, want))
        })
        .collect()
}

fn alphas() -> Result<Vec<Check>, Error> {
    let d3 = [360, 288, 72, 6];
    let d1 = [120, 96, 24, 2];
    let table: Vec<(u32, Vec<RatFunc>)> = vec![
        (3, vec![rf(&[1, 1], &[1]), rf(&[0, 0, -1], &[1])]),
        (
            5,
            vec![
                rf(&[6, 12, 6, 1], &[6, 2]),
                rf(&[0, 0, -12, -9, -2], &[6, 2]),
                rf(&[0, 0, 0, 0, 2, 1], &[6, 2]),
            ],
        ),
        (
            7,
            vec![
                rf(&[360, 1080, 1080, 525, 135, 18, 1], &d3),
                rf(&[0, 0, -360, -555, -345, -105, -16, -1], &d1),
                rf(&[0, 0, 0, 0, 120, 150, 66, 13, 1], &d1),
                rf(&[0, 0, 0, 0, 0, 0, -24, -27, -9, -1], &d3),
            ],
        ),
    ];
    let mut out = Vec::new();
    for (n, want) in table {
        let got = ball_alphas(n)?;
        for (j, (g, w)) in got.reduced_alphas.iter().zip(&want).enumerate() {
            out.push(compare(&format!("alpha_{j} n={n}"), g, w));
        }
    }
    Ok(out)
}

fn systems() -> Result<Vec<Check>, Error> {
    let s = |c: i64, j: usize| phi(j).scale(&Rational::from(c));
    let table: Vec<(u32, Vec<Vec<RatFunc>>)> = vec![
        (3, vec![vec![phi(0), phi(1)], vec![phi(1), phi(2)]]),
        (
            5,
            vec![
                vec![phi(0), phi(1), phi(2)],
                vec![phi(1), phi(2), phi(3)],
                vec![s(4, 1), s(2, 2), RatFunc::zero()],
            ],
        ),
        (
            7,
            vec![
                vec![phi(0), phi(1), phi(2), phi(3)],
                vec![phi(1), phi(2), phi(3), phi(4)],
                vec![s(6, 1), s(4, 2), s(2, 3), RatFunc::zero()],
                vec![s(6, 2), s(4, 3), s(2, 4), RatFunc::zero()],
            ],
        ),
    ];
    let mut out = Vec::new();
    for (n, want) in table {
        let sys = build_boundary_system(n, n.div_ceil(2))?;
        let rhs_ok = sys
            .rhs
            .iter()
            .enumerate()
            .all(|(i, b)| *b == Rational::from(if i % 2 == 0 { 1 } else { 0 }));
        let passed = rhs_ok && sys.matrix == want;
        out.push(Check {
            name: format!("boundary system n={n}"),
            passed,
            detail: format!("{} conditions", sys.size()),
        });
    }
    Ok(out)
}

fn fluxes() -> Result<Vec<Check>, Error> {
    let m = ball_magnitude(7)?;
    let second = rf(&[4320, 9405, 8820, 4545, 1380, 246, 24, 1], &[0, 0, 0, 0, 120, 96, 24, 2])
        .scale(&Rational::from(8));
    let third = rf(
        &[10800, 43200, 82080, 90045, 61380, 26685, 7380, 1254, 120, 5],
        &[0, 0, 0, 0, 0, 0, 360, 288, 72, 6],
    )
    .scale(&Rational::from(24));
    let get = |j: u32| m.fluxes.get(&j).cloned().unwrap_or_default();
    Ok(vec![
        compare("flux (Δ²u)'(R) n=7", &get(3), &second),
        compare("flux (Δ³u)'(R) n=7", &get(4), &third),
    ])
}

fn expansion() -> Result<Vec<Check>, Error> {
    let m = ball_magnitude(5)?;
    let e = laurent_at_infinity(&m.magnitude, 6)?;
    let want = vec![q(1, 120), q(1, 8), q(3, 4), q(17, 8), q(21, 8), q(9, 8)];
    Ok(vec![Check {
        name: "expansion at infinity n=5".into(),
        passed: e.top_degree == 5 && e.coeffs == want,
        detail: e.to_text(),
    }])
}

fn capacity() -> Result<Vec<Check>, Error> {
    // C_1(B_R, 1) = 4π(R³/3 + R + 1), i.e. R³ + 3R + 3 after dividing by ω₃.
    let c = bessel_capacity(3, 1, &Rational::one())?;
    Ok(vec![compare("capacity m=1 n=3", &c.value, &rf(&[3, 3, 0, 1], &[1]))])
}

pub fn run() -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    for group in [systems, boxed_formulas, alphas, fluxes, expansion, capacity] {
        checks.extend(group()?);
    }
    Ok(checks)
}
