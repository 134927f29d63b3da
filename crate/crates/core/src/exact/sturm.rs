//! Real-root counting on `(0, ∞)` with Sturm sequences.

use super::Poly;
use crate::error::Error;

/// Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let prev = seq.last().expect("nonempty");
        let (_, rem) = prev.div_rem(&next).expect("nonzero divisor");
        seq.push(next);
        next = -rem;
    }
    seq
}

fn sign_changes(signs: impl IntoIterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `p` in the open interval `(0, ∞)`.
pub fn count_positive_roots(p: &Poly) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // Roots at zero are outside the open interval; remove them so the
    // left endpoint is not a root.
    let p = p.unshift(p.low_order());
    let seq = sturm_sequence(&p);
    let at_zero = sign_changes(seq.iter().map(|q| q.coeff(0).signum()));
    let at_inf = sign_changes(seq.iter().map(Poly::sign_at_infinity));
    Ok(at_zero - at_inf)
}
