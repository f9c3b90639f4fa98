//! Oracle harness: compares the tree enumeration, pruned at a hypotenuse
//! bound, against an independent brute-force scan over generating pairs.

use std::collections::BTreeSet;
use std::io::Write;

use num_bigint::BigInt;
use pytree_core::triples_with_hypotenuse_at_most;

use crate::Failure;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every primitive triple with hypotenuse at most `bound`, from the
/// classical parameterization: coprime `m > n >= 1` of opposite parity.
fn scan(bound: u64) -> BTreeSet<(u64, u64, u64)> {
    let mut out = BTreeSet::new();
    let mut m = 2u64;
    while m * m < bound {
        for n in 1..m {
            if (m + n) % 2 == 1 && gcd(m, n) == 1 && m * m + n * n <= bound {
                out.insert((m * m - n * n, 2 * m * n, m * m + n * n));
            }
        }
        m += 1;
    }
    out
}

pub fn run(bound: u64, out: &mut impl Write) -> Result<(), Failure> {
    let expected = scan(bound);
    let mut from_tree = BTreeSet::new();
    let mut tree_count = 0usize;
    for t in triples_with_hypotenuse_at_most(&BigInt::from(bound)) {
        tree_count += 1;
        let val = |v: &BigInt| u64::try_from(v).expect("bounded by max-n");
        from_tree.insert((val(t.s()), val(t.c()), val(t.n())));
    }
    writeln!(
        out,
        "tree enumeration: {tree_count} triples with hypotenuse <= {bound}"
    )?;
    writeln!(
        out,
        "parameter scan:   {} triples with hypotenuse <= {bound}",
        expected.len()
    )?;
    if tree_count == from_tree.len() && from_tree == expected {
        writeln!(out, "match")?;
        return Ok(());
    }
    let mut message = String::from("enumeration mismatch");
    if tree_count != from_tree.len() {
        message.push_str(&format!(
            "\n  tree emitted {} duplicates",
            tree_count - from_tree.len()
        ));
    }
    for t in expected.difference(&from_tree) {
        message.push_str(&format!("\n  missing from tree: {t:?}"));
    }
    for t in from_tree.difference(&expected) {
        message.push_str(&format!("\n  not a scan triple: {t:?}"));
    }
    Err(Failure::new(5, message))
}
