//! JSON and LaTeX renderings of field and algebra elements.
//!
//! JSON is the stable surface: a field element is
//! `{"num": [[coef, qExp, kExp…]…], "den": […]}` and an algebra element is
//! `{"terms": [{"f": […], "c": <field element>, "e": […]}…]}`, with every
//! exact rational written as the string `"p/r"`.

use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::coeff::{FieldElement, Poly, Q};
use crate::ncalg::AlgebraElement;

/// An exact rational as `"p/r"`.
pub fn rat_string(c: &Q) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn half_string(doubled: i32) -> String {
    if doubled % 2 == 0 {
        format!("{}/1", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

fn poly_json(p: &Poly, rank: usize) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let mut row = vec![Value::from(rat_string(c))];
            for &e in m.iter().take(rank + 1) {
                row.push(Value::from(half_string(e)));
            }
            Value::from(row)
        })
        .collect();
    Value::from(terms)
}

pub fn field_json(c: &FieldElement, rank: usize) -> Value {
    json!({ "num": poly_json(c.num(), rank), "den": poly_json(&c.den_poly(), rank) })
}

pub fn algebra_json(x: &AlgebraElement, rank: usize) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(f, c, e)| json!({ "f": f, "c": field_json(c, rank), "e": e }))
        .collect();
    json!({ "terms": terms })
}

fn latex_exp(base: &str, doubled: i32) -> String {
    match doubled {
        0 => String::new(),
        2 => base.to_string(),
        _ if doubled % 2 == 0 => format!("{base}^{{{}}}", doubled / 2),
        _ => format!("{base}^{{{}/2}}", doubled),
    }
}

fn latex_rat(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// A polynomial in `q` and `K_i = q^{h_{ε_i}}`, highest terms first.
pub fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (k, (m, c)) in terms.iter().rev().enumerate() {
        let mono: String = std::iter::once(latex_exp("q", m[0]))
            .chain(m.iter().enumerate().skip(1).map(|(i, &e)| latex_exp(&format!("K_{{{i}}}"), e)))
            .collect();
        let a = c.abs();
        if c.is_negative() {
            out.push_str(if k == 0 { "-" } else { " - " });
        } else if k > 0 {
            out.push_str(" + ");
        }
        if mono.is_empty() {
            out.push_str(&latex_rat(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&latex_rat(&a));
            out.push_str(&mono);
        }
    }
    out
}

pub fn field_latex(c: &FieldElement) -> String {
    if c.den_atoms().is_empty() {
        poly_latex(c.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_latex(c.num()), poly_latex(&c.den_poly()))
    }
}

fn word_latex(letter: &str, w: &[u8]) -> String {
    w.iter().map(|l| format!("{letter}_{{{l}}}")).collect::<Vec<_>>().join(" ")
}

pub fn algebra_latex(x: &AlgebraElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (f, c, e) in x.terms() {
        let (sign, coef) = if c.is_one() {
            ("", String::new())
        } else if c.neg().is_one() {
            ("-", String::new())
        } else {
            ("", format!("\\left({}\\right)", field_latex(c)))
        };
        let pieces: Vec<String> =
            [word_latex("f", f), coef, word_latex("e", e)].into_iter().filter(|s| !s.is_empty()).collect();
        let body = if pieces.is_empty() { "1".to_string() } else { pieces.join(" ") };
        parts.push(format!("{sign}{body}"));
    }
    parts.join(" + ").replace("+ -", "- ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::q_int;

    #[test]
    fn json_shapes() {
        let two = q_int(2);
        let v = field_json(&two, 2);
        assert_eq!(v["den"], json!([["1/1", "0/1", "0/1", "0/1"]]));
        assert_eq!(v["num"].as_array().unwrap().len(), 2);
        let x = AlgebraElement::term(vec![1, 2], two, vec![]);
        let j = algebra_json(&x, 2);
        assert_eq!(j["terms"][0]["f"], json!([1, 2]));
    }

    #[test]
    fn latex_words() {
        let x = AlgebraElement::fword(&[1]);
        assert_eq!(algebra_latex(&x), "f_{1}");
        let y = AlgebraElement::term(vec![2, 1], FieldElement::int(-1), vec![]);
        assert_eq!(algebra_latex(&x.add(&y)), "f_{1} - f_{2} f_{1}");
        let qq = FieldElement::q_half_pow(2).sub(&FieldElement::one());
        assert_eq!(field_latex(&qq), "q - 1");
    }
}
