use super::{Transducer, TransducerKind};
use crate::error::Result;
use crate::words::{Digit, EpWord};

/// Left sequential converter from base `beta` to base `-beta` for
/// `beta^2 = a beta + 1`, on blocks `x_{2k} x_{2k+1}` of a word read as
/// `x_0 . x_1 x_2 ...`. State `-1` owes one unit at the head of the next
/// block. A block `a e` with `e >= 1` is not admissible and has no edge.
pub fn build_quadratic_converter(a: u32) -> Transducer {
    assert!(a >= 1, "a must be positive");
    let a = a as Digit;
    let mut t = Transducer::new(TransducerKind::LeftSequential);
    let zero = t.add_state("0", None);
    let owe = t.add_state("-1", None);
    t.set_initial(vec![zero]);
    t.set_final(zero, Vec::new());
    t.set_final(owe, Vec::new());
    for d in 0..=a {
        t.add_edge(zero, vec![d, 0], vec![d, 0], zero);
    }
    for c in 0..a {
        for e in 1..=a {
            t.add_edge(zero, vec![c, e], vec![c + 1, a - e], owe);
        }
    }
    for e in 1..=a {
        t.add_edge(owe, vec![e, 0], vec![e - 1, 0], zero);
    }
    t.add_edge(owe, vec![0, 0], vec![0, a], owe);
    for d in 0..=a {
        for e in 1..=a {
            t.add_edge(owe, vec![d, e], vec![d, a - e], owe);
        }
    }
    t
}

/// Converts `x_0 . x_1 x_2 ...` in base `beta` to `y_0 . y_1 y_2 ...` in
/// base `-beta`.
pub fn quadratic_convert(conv: &Transducer, x: &EpWord) -> Result<EpWord> {
    conv.run_left_ep(x, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::{FieldElement, IntPolynomial, NumberField};
    use crate::words::{eval_ep, BaseSign};

    fn field(a: i64) -> NumberField {
        NumberField::new(IntPolynomial::from_i64(&[-1, -a, 1]).unwrap()).unwrap()
    }

    /// Value of `w_0 . w_1 w_2 ...`.
    fn point_value(w: &EpWord, sign: BaseSign, f: &NumberField) -> FieldElement {
        f.mul(&sign.base(f), &eval_ep(w, sign, f))
    }

    #[test]
    fn golden_examples() {
        let t = build_quadratic_converter(1);
        assert!(t.is_input_deterministic());
        let f = field(1);
        for s in ["1(0)", "(0)", "01(0)", "0(10)", "1(01)", "(01)", "0(001)"] {
            let x: EpWord = s.parse().unwrap();
            let y = quadratic_convert(&t, &x).unwrap();
            assert_eq!(point_value(&x, BaseSign::Positive, &f), point_value(&y, BaseSign::Negative, &f), "{s} -> {y}");
        }
        let one: EpWord = "1(0)".parse().unwrap();
        assert_eq!(quadratic_convert(&t, &one).unwrap(), one);
        assert_eq!(quadratic_convert(&t, &EpWord::zero()).unwrap(), EpWord::zero());
    }

    #[test]
    fn rejects_forbidden_block() {
        let t = build_quadratic_converter(2);
        let x: EpWord = "21(0)".parse().unwrap();
        assert_eq!(quadratic_convert(&t, &x).unwrap_err().name(), "InvalidBlock");
    }

    #[test]
    fn outputs_stay_in_alphabet() {
        for a in 1..=3 {
            let t = build_quadratic_converter(a);
            for e in t.edges() {
                assert!(e.output.iter().all(|&d| (0..=a as Digit).contains(&d)));
            }
        }
    }
}
