//! Action of `p̃_0, q, q⊥, Q, Q⊥` on Jack superpolynomials: hook-ratio
//! closed forms and the direct computation they are checked against.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{jack_expand, jack_symbolic, JackError};
use crate::coeffring::{AlphaPoly, AlphaRational, Field};
use crate::ops::{apply, Operator};
use crate::spart::{SuperPartition, SurgeryKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PieriOp {
    PTilde0,
    SmallQ,
    SmallQPerp,
    BigQ,
    BigQPerp,
}

impl PieriOp {
    pub const ALL: [PieriOp; 5] =
        [PieriOp::PTilde0, PieriOp::SmallQ, PieriOp::SmallQPerp, PieriOp::BigQ, PieriOp::BigQPerp];

    pub fn operator(self) -> Operator {
        match self {
            PieriOp::PTilde0 => Operator::MulPTilde(0),
            PieriOp::SmallQ => Operator::SmallQ,
            PieriOp::SmallQPerp => Operator::SmallQPerp,
            PieriOp::BigQ => Operator::BigQ,
            PieriOp::BigQPerp => Operator::BigQPerp,
        }
    }

    fn surgery(self) -> SurgeryKind {
        match self {
            PieriOp::PTilde0 | PieriOp::BigQ => SurgeryKind::AddCircle,
            PieriOp::BigQPerp => SurgeryKind::RemoveCircle,
            PieriOp::SmallQ => SurgeryKind::SquareToCircle,
            PieriOp::SmallQPerp => SurgeryKind::CircleToSquare,
        }
    }
}

impl fmt::Display for PieriOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieriOp::PTilde0 => "pt0",
            PieriOp::SmallQ => "q",
            PieriOp::SmallQPerp => "q_perp",
            PieriOp::BigQ => "Q",
            PieriOp::BigQPerp => "Q_perp",
        })
    }
}

impl FromStr for PieriOp {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "pt0" | "p0" => PieriOp::PTilde0,
            "q" => PieriOp::SmallQ,
            "q_perp" => PieriOp::SmallQPerp,
            "Q" => PieriOp::BigQ,
            "Q_perp" => PieriOp::BigQPerp,
            _ => return Err(format!("unknown Pieri operator {s:?}; expected pt0, q, q_perp, Q or Q_perp")),
        })
    }
}

fn ratio(num: AlphaPoly, den: AlphaPoly) -> AlphaRational {
    AlphaRational::new(num, den)
}

/// Coefficients of `υ P_Λ` on the Jack basis from the hook-ratio formulas.
pub fn pieri_formula(op: PieriOp, label: &SuperPartition, nvars: usize) -> BTreeMap<SuperPartition, AlphaRational> {
    let mut out = BTreeMap::new();
    for s in label.surgeries(nvars) {
        if s.kind != op.surgery() {
            continue;
        }
        let om = &s.result;
        let (i, j) = s.cell;
        let circles_above = om.rows()[..i - 1].iter().filter(|r| r.circled).count();
        let sign = if circles_above % 2 == 0 { 1 } else { -1 };
        let col: Vec<(usize, usize)> = (1..i).map(|r| (r, j)).collect();
        let row: Vec<(usize, usize)> = (1..j).map(|c| (i, c)).collect();
        let prod = |cells: &[(usize, usize)], f: &dyn Fn(&SuperPartition, (usize, usize)) -> AlphaPoly, top: &SuperPartition, bottom: &SuperPartition| {
            let mut num = AlphaPoly::linear(1, 0);
            let mut den = AlphaPoly::linear(1, 0);
            for &c in cells {
                num = &num * &f(top, c);
                den = &den * &f(bottom, c);
            }
            ratio(num, den)
        };
        let upper = |l: &SuperPartition, c| l.upper_hook(c);
        let lower = |l: &SuperPartition, c| l.lower_hook(c);
        let content = AlphaRational::linear(nvars as i64 + 1 - i as i64, j as i64 - 1);
        let mut c = match op {
            PieriOp::PTilde0 => prod(&col, &upper, label, om),
            PieriOp::BigQ => (&prod(&col, &upper, label, om) * &content).div_ref(&AlphaRational::alpha()),
            PieriOp::BigQPerp => &prod(&row, &lower, om, label) * &content,
            PieriOp::SmallQ => prod(&row, &upper, label, om),
            PieriOp::SmallQPerp => prod(&col, &lower, om, label),
        };
        if sign < 0 {
            c = -c;
        }
        if !c.is_zero() {
            out.insert(om.clone(), c);
        }
    }
    out
}

/// `υ P_Λ` computed by applying the operator and re-expanding.
pub fn pieri_direct(
    op: PieriOp,
    label: &SuperPartition,
    nvars: usize,
) -> Result<BTreeMap<SuperPartition, AlphaRational>, JackError> {
    let p = jack_symbolic(label, nvars)?.to_poly();
    let g = apply(&op.operator(), &p, &AlphaRational::alpha()).map_err(|e| JackError::Coefficient(e.to_string()))?;
    let mvec = g.to_mbasis().map_err(|e| JackError::Coefficient(e.to_string()))?;
    jack_expand(&mvec, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        SuperPartition::parse(s).unwrap()
    }

    #[test]
    fn worked_ptilde_example() {
        let got = pieri_formula(PieriOp::PTilde0, &sp("1;2,2"), 4);
        assert_eq!(got.len(), 2);
        assert_eq!(got[&sp("2,1;2")], AlphaRational::from_i64(1));
        let expect: AlphaRational = "-(2+2a)*(1+2a)*a/((3+2a)*(2+2a)*(1+a))".parse().unwrap();
        assert_eq!(got[&sp("1,0;2,2")], expect);
    }

    #[test]
    fn closed_forms_match_direct_small() {
        for s in ["0;", ";1", "1;", "0;1", "1,0;", ";2", "1;1", ";1,1"] {
            for op in PieriOp::ALL {
                for n in [2, 3] {
                    let l = sp(s);
                    if l.len() > n {
                        continue;
                    }
                    assert_eq!(pieri_formula(op, &l, n), pieri_direct(op, &l, n).unwrap(), "{op} on {s} N={n}");
                }
            }
        }
    }
}
