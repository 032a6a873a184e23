//! Pretty and JSON renderings of superpolynomials.
//!
//! JSON form: a list of `{"thetas":[1,2],"exps":[3,1,0],"coeff":"3/(2*a+1)"}`
//! with 1-based `θ` indices in increasing order.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{theta_word_sign, Monomial, SuperPoly};
use crate::coeffring::{parse_alpha_rational, parse_rational, AlphaRational, BigRational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub thetas: Vec<usize>,
    pub exps: Vec<u16>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermFormatError {
    #[error("term {index}: {message}")]
    BadTerm { index: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Coefficients with a text form.
pub trait TextCoeff: Ring + fmt::Display {
    fn parse_text(s: &str) -> Result<Self, String>;
}

impl TextCoeff for AlphaRational {
    fn parse_text(s: &str) -> Result<Self, String> {
        parse_alpha_rational(s).map_err(|e| e.to_string())
    }
}

impl TextCoeff for BigRational {
    fn parse_text(s: &str) -> Result<Self, String> {
        parse_rational(s).map_err(|e| e.to_string())
    }
}

impl<C: TextCoeff> SuperPoly<C> {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .map(|(m, c)| JsonTerm {
                thetas: m.theta_list().iter().map(|i| i + 1).collect(),
                exps: m.exps.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("serializable")
    }

    /// Reads terms; `nvars` defaults to the length of the exponent vectors.
    pub fn from_json_terms(terms: &[JsonTerm], nvars: Option<usize>) -> Result<Self, TermFormatError> {
        let n = nvars.or_else(|| terms.first().map(|t| t.exps.len())).unwrap_or(0);
        let mut out = SuperPoly::zero(n);
        for (index, t) in terms.iter().enumerate() {
            let bad = |message: String| TermFormatError::BadTerm { index, message };
            if t.exps.len() != n {
                return Err(bad(format!("expected {n} exponents, got {}", t.exps.len())));
            }
            if t.thetas.iter().any(|&i| i == 0 || i > n) {
                return Err(bad("theta index out of range".into()));
            }
            let word: Vec<usize> = t.thetas.iter().map(|i| i - 1).collect();
            let (sign, mask) = theta_word_sign(&word);
            if sign == 0 {
                return Err(bad("repeated theta index".into()));
            }
            let c = C::parse_text(&t.coeff).map_err(bad)?;
            let c = if sign < 0 { c.neg_ref() } else { c };
            out.add_term(Monomial::new(mask, t.exps.clone()), c);
        }
        Ok(out)
    }

    pub fn from_json(s: &str, nvars: Option<usize>) -> Result<Self, TermFormatError> {
        let terms: Vec<JsonTerm> = serde_json::from_str(s).map_err(|e| TermFormatError::Json(e.to_string()))?;
        Self::from_json_terms(&terms, nvars)
    }
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts: Vec<String> = m.theta_list().iter().map(|i| format!("t{}", i + 1)).collect();
    for (i, &e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{e}", i + 1)),
        }
    }
    parts.join("*")
}

fn needs_parens(c: &str) -> bool {
    c.char_indices().any(|(i, ch)| i > 0 && (ch == '+' || ch == '-'))
}

/// `3/(a*(2*a+1))*t1*x1^2 - x2*x3`
impl<C: TextCoeff> fmt::Display for SuperPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &C)> = self.terms().collect();
        terms.sort_by(|a, b| a.0.thetas.cmp(&b.0.thetas).then(b.0.exps.cmp(&a.0.exps)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mono = monomial_text(m);
            let mut cs = c.to_string();
            let neg = cs.starts_with('-') && !needs_parens(&cs[1..]);
            if neg {
                cs.remove(0);
            }
            let body = match (mono.is_empty(), cs.as_str()) {
                (true, _) => cs.clone(),
                (false, "1") => mono,
                (false, _) if needs_parens(&cs) => format!("({cs})*{mono}"),
                (false, _) => format!("{cs}*{mono}"),
            };
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::rat;

    #[test]
    fn json_round_trip() {
        let p = SuperPoly::<AlphaRational>::from_term(3, &[1, 0], &[3, 1, 0], "3/(2*a+1)".parse().unwrap());
        let s = p.to_json();
        assert_eq!(s, r#"[{"thetas":[1,2],"exps":[3,1,0],"coeff":"-3/(2*a+1)"}]"#);
        assert_eq!(SuperPoly::<AlphaRational>::from_json(&s, None).unwrap(), p);
        let swapped = r#"[{"thetas":[2,1],"exps":[3,1,0],"coeff":"3/(2*a+1)"}]"#;
        assert_eq!(SuperPoly::<AlphaRational>::from_json(swapped, None).unwrap(), p);
        assert!(SuperPoly::<AlphaRational>::from_json(r#"[{"thetas":[1,1],"exps":[0,0],"coeff":"1"}]"#, None).is_err());
    }

    #[test]
    fn pretty() {
        let p = SuperPoly::<BigRational>::from_term(2, &[0], &[2, 0], rat(1, 1))
            .add(&SuperPoly::from_term(2, &[], &[1, 1], rat(-3, 2)));
        assert_eq!(p.to_string(), "-3/2*x1*x2 + t1*x1^2");
    }
}
