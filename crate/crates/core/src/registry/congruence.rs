//! Congruences as identities: Σ_k (value(step·k + residue) mod m) q^k = 0,
//! for every argument up to the enumeration bound.

use crate::partitions::{aggregates, congruences, Congruence};
use crate::series::LaurentSeries;

use super::{sequence_series, Identity, Tag};

/// Largest partition argument checked.
pub const NMAX: u32 = 60;

fn entry(id: &'static str, formula: &'static str, c: Congruence) -> Identity {
    let cap = c.arguments(NMAX).count() as i64;
    let Congruence {
        step,
        residue,
        modulus,
        value,
        ..
    } = c;
    Identity::new(
        id,
        "partition congruence checked by enumeration",
        formula,
        move |n| {
            Ok(sequence_series(n, |k| {
                let arg = (step as i64 * k + residue as i64) as u32;
                value(&aggregates(arg)).rem_euclid(modulus as i64)
            }))
        },
        |n| Ok(LaurentSeries::zero(n)),
    )
    .tag(Tag::Congruence)
    .capped(cap)
}

pub(super) fn identities() -> Vec<Identity> {
    let ids = [
        ("RAM5", "p(5n+4) ≡ 0 (mod 5)"),
        ("RAM7", "p(7n+5) ≡ 0 (mod 7)"),
        ("RAM11", "p(11n+6) ≡ 0 (mod 11)"),
        ("BECK5-1", "Σ_{m=1}^4 m NT(m,5,5n+1) ≡ 0 (mod 5)"),
        ("BECK5-4", "Σ_{m=1}^4 m NT(m,5,5n+4) ≡ 0 (mod 5)"),
        ("BECK7-1", "NT(1,7,7n+1) - NT(6,7,7n+1) + NT(2,7,7n+1) - NT(5,7,7n+1) - NT(3,7,7n+1) + NT(4,7,7n+1) ≡ 0 (mod 7)"),
        ("BECK7-5", "NT(1,7,7n+5) - NT(6,7,7n+5) + NT(2,7,7n+5) - NT(5,7,7n+5) - NT(3,7,7n+5) + NT(4,7,7n+5) ≡ 0 (mod 7)"),
    ];
    let all = congruences();
    assert_eq!(all.len(), ids.len());
    ids.into_iter()
        .zip(all)
        .map(|((id, formula), c)| entry(id, formula, c))
        .collect()
}
