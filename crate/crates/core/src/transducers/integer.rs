use num_bigint::BigInt;

use super::{strip_leading_zeros, Transducer, TransducerKind};
use crate::error::Result;
use crate::words::{Digit, FiniteWord};

/// Right sequential converter from base `b` to base `-b` on two-letter
/// blocks. State 0 carries nothing; state 1 adds one unit to the next
/// block, paid by the final output `1` if the input ends there. In state 1
/// a block `dc` with `d >= 1` stands for `db + c + 1`, written
/// `(b-d)(c+1)` when `c < b-1` and `(b-d-1)0` when `c = b-1`.
pub fn build_int_converter(b: u32) -> Transducer {
    assert!(b >= 2, "base must be at least 2");
    let b = b as Digit;
    let mut t = Transducer::new(TransducerKind::RightSequential);
    let zero = t.add_state("0", None);
    let one = t.add_state("1", None);
    t.set_initial(vec![zero]);
    t.set_final(zero, Vec::new());
    t.set_final(one, vec![1]);
    for c in 0..b {
        t.add_edge(zero, vec![0, c], vec![0, c], zero);
    }
    for d in 1..b {
        for c in 0..b {
            t.add_edge(zero, vec![d, c], vec![b - d, c], one);
            let out = if c < b - 1 { vec![b - d, c + 1] } else { vec![b - d - 1, 0] };
            t.add_edge(one, vec![d, c], out, one);
        }
    }
    for e in 0..=b - 2 {
        t.add_edge(one, vec![0, e], vec![0, e + 1], zero);
    }
    t.add_edge(one, vec![0, b - 1], vec![b - 1, 0], one);
    t
}

/// Runs `conv` on the base-`b` digits of a nonnegative integer, most
/// significant first, and returns its (-b)-representation.
pub fn int_convert(conv: &Transducer, digits: &[Digit]) -> Result<FiniteWord> {
    let mut padded = digits.to_vec();
    if padded.len() % 2 == 1 {
        padded.insert(0, 0);
    }
    let mut s = conv.initial()[0];
    let mut blocks = Vec::new();
    for chunk in padded.chunks(2).rev() {
        let e = conv.step(s, chunk)?;
        blocks.push(e.output.clone());
        s = e.to;
    }
    let mut out = conv.final_output(s).to_vec();
    for blk in blocks.into_iter().rev() {
        out.extend(blk);
    }
    Ok(strip_leading_zeros(&out))
}

/// Base-`b` digits of `n >= 0`, most significant first.
pub fn positive_digits(n: &BigInt, b: u32) -> Vec<Digit> {
    if n.sign() == num_bigint::Sign::NoSign {
        return vec![0];
    }
    n.to_radix_be(b).1.into_iter().map(Digit::from).collect()
}
