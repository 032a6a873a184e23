//! Operator identities as data: super-commutators of the generators,
//! the super-Virasoro half, Hecke relations, and a checker that evaluates
//! both sides on test inputs.

use super::{apply_word, OpError, Operator};
use crate::coeffring::Ring;
use crate::par;
use crate::spart::SuperPartition;
use crate::superpoly::{monomial_symmetric, Monomial, SuperPoly};

/// `c · N^n_power · α^(-inv_alpha_power) · word`, with `c = num/den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub num: i64,
    pub den: i64,
    pub n_power: u32,
    pub inv_alpha_power: u32,
    pub word: Vec<Operator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OpExpr {
    pub terms: Vec<Term>,
}

impl OpExpr {
    pub fn zero() -> Self {
        OpExpr::default()
    }

    pub fn word(word: Vec<Operator>) -> Self {
        OpExpr { terms: vec![Term { num: 1, den: 1, n_power: 0, inv_alpha_power: 0, word }] }
    }

    pub fn op(op: Operator) -> Self {
        Self::word(vec![op])
    }

    pub fn scaled(mut self, num: i64, den: i64) -> Self {
        for t in &mut self.terms {
            t.num *= num;
            t.den *= den;
        }
        self
    }

    /// Multiplies every term by `N^n / α^k`.
    pub fn times_n_over_alpha(mut self, n: u32, k: u32) -> Self {
        for t in &mut self.terms {
            t.n_power += n;
            t.inv_alpha_power += k;
        }
        self
    }

    pub fn plus(mut self, o: OpExpr) -> Self {
        self.terms.extend(o.terms);
        self
    }

    pub fn minus(self, o: OpExpr) -> Self {
        self.plus(o.scaled(-1, 1))
    }

    /// `[a, b}` for single operators.
    pub fn bracket(a: Operator, b: Operator) -> Self {
        let sign = if a.is_odd() && b.is_odd() { 1 } else { -1 };
        Self::word(vec![a.clone(), b.clone()]).plus(Self::word(vec![b, a]).scaled(sign, 1))
    }

    /// `[x, y}` for expressions; parity taken from the first words.
    pub fn bracket_expr(x: &OpExpr, y: &OpExpr, odd: bool) -> Self {
        let sign = if odd { 1 } else { -1 };
        let mut out = OpExpr::zero();
        for s in &x.terms {
            for t in &y.terms {
                let combine = |first: &Term, second: &Term, sg: i64| Term {
                    num: first.num * second.num * sg,
                    den: first.den * second.den,
                    n_power: first.n_power + second.n_power,
                    inv_alpha_power: first.inv_alpha_power + second.inv_alpha_power,
                    word: first.word.iter().chain(&second.word).cloned().collect(),
                };
                out.terms.push(combine(s, t, 1));
                out.terms.push(combine(t, s, sign));
            }
        }
        out
    }

    pub fn eval<C: Ring>(&self, f: &SuperPoly<C>, alpha: &C) -> Result<SuperPoly<C>, OpError> {
        let n = f.nvars();
        let inv_alpha = alpha.try_inv();
        let mut out = SuperPoly::zero(n);
        for t in &self.terms {
            let mut c = C::from_int(t.num)
                .mul_ref(&C::from_int(t.den).try_inv().ok_or_else(|| OpError::NeedsInverse(format!("1/{}", t.den)))?);
            c = c.mul_ref(&C::from_int((n as i64).pow(t.n_power)));
            for _ in 0..t.inv_alpha_power {
                let ia = inv_alpha.as_ref().ok_or_else(|| OpError::NeedsInverse("1/alpha".into()))?;
                c = c.mul_ref(ia);
            }
            if c.is_zero() {
                continue;
            }
            out.add_scaled(&apply_word(&t.word, f, alpha)?, &c);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub lhs: OpExpr,
    pub rhs: OpExpr,
    /// Only claimed on symmetric inputs.
    pub symmetric_only: bool,
}

#[derive(Debug, Clone)]
pub struct RelationFailure {
    pub relation: String,
    pub witness: String,
    pub message: String,
}

fn rel(name: impl Into<String>, lhs: OpExpr, rhs: OpExpr) -> Relation {
    Relation { name: name.into(), lhs, rhs, symmetric_only: false }
}

/// Super-commutators among `∇, ∇⊥, q, q⊥, Q, Q⊥, E, 𝓔`.
pub fn algebra_relations() -> Vec<Relation> {
    use Operator::*;
    let gens = [E, CalE, SmallQ, SmallQPerp, BigQ, BigQPerp, Nabla, NablaPerp];
    let table: Vec<(Operator, Operator, OpExpr)> = vec![
        (E, SmallQ, OpExpr::op(SmallQ).scaled(-1, 1)),
        (E, SmallQPerp, OpExpr::op(SmallQPerp)),
        (E, Nabla, OpExpr::op(Nabla).scaled(-1, 1)),
        (E, NablaPerp, OpExpr::op(NablaPerp)),
        (CalE, BigQ, OpExpr::op(BigQ)),
        (CalE, BigQPerp, OpExpr::op(BigQPerp).scaled(-1, 1)),
        (CalE, Nabla, OpExpr::op(Nabla).scaled(-1, 1)),
        (CalE, NablaPerp, OpExpr::op(NablaPerp)),
        (SmallQ, SmallQPerp, OpExpr::op(CalE)),
        (SmallQ, BigQPerp, OpExpr::op(Nabla)),
        (SmallQ, NablaPerp, OpExpr::op(BigQ)),
        (BigQ, SmallQPerp, OpExpr::op(NablaPerp)),
        (BigQ, BigQPerp, OpExpr::op(E)),
        (BigQ, Nabla, OpExpr::op(SmallQ).scaled(-1, 1)),
        (SmallQPerp, Nabla, OpExpr::op(BigQPerp).scaled(-1, 1)),
        (BigQPerp, NablaPerp, OpExpr::op(SmallQPerp)),
        (Nabla, NablaPerp, OpExpr::op(E).plus(OpExpr::op(CalE))),
    ];
    let mut out = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            if a == b && !a.is_odd() {
                continue;
            }
            let found = table.iter().find_map(|(x, y, r)| {
                if x == a && y == b {
                    Some(r.clone())
                } else if x == b && y == a {
                    let s = if a.is_odd() && b.is_odd() { 1 } else { -1 };
                    Some(r.clone().scaled(s, 1))
                } else {
                    None
                }
            });
            out.push(rel(format!("[{a},{b}]"), OpExpr::bracket(a.clone(), b.clone()), found.unwrap_or_default()));
        }
    }
    out
}

fn half_str(k: i32) -> String {
    format!("{k}/2")
}

/// `[L_n, L_m] = (n-m) L_{n+m}`, `[L_n, G_r] = (n/2 - r) G_{n+r}`,
/// `{G_r, G_s} = 2 L_{r+s}` for modes down to `lowest`, together with the
/// identifications of the low modes with the generators.
pub fn virasoro_relations(lowest: i32) -> Vec<Relation> {
    use Operator::*;
    let ls: Vec<i32> = (lowest..=1).rev().collect();
    let gs: Vec<i32> = (2 * lowest - 1..=1).rev().filter(|k| k % 2 != 0).collect();
    let mut out = Vec::new();
    for (i, &n) in ls.iter().enumerate() {
        for &m in &ls[i + 1..] {
            let rhs = if n + m >= lowest { OpExpr::op(L(n + m)).scaled((n - m) as i64, 1) } else { continue };
            out.push(rel(format!("[L{n},L{m}]"), OpExpr::bracket(L(n), L(m)), rhs));
        }
        for &k in &gs {
            // (n/2 - k/2) G_{(2n+k)/2}
            let c = (n - k) as i64;
            let t = 2 * n + k;
            if t > 1 || t < 2 * lowest - 1 {
                continue;
            }
            let rhs = if c == 0 { OpExpr::zero() } else { OpExpr::op(G(t)).scaled(c, 2) };
            out.push(rel(format!("[L{n},G{}]", half_str(k)), OpExpr::bracket(L(n), G(k)), rhs));
        }
    }
    for (i, &r) in gs.iter().enumerate() {
        for &s in &gs[i..] {
            let t = (r + s) / 2;
            if t < lowest {
                continue;
            }
            out.push(rel(
                format!("{{G{},G{}}}", half_str(r), half_str(s)),
                OpExpr::bracket(G(r), G(s)),
                OpExpr::op(L(t)).scaled(2, 1),
            ));
        }
    }
    out.push(rel("L1=nabla", OpExpr::op(L(1)), OpExpr::op(Nabla)));
    out.push(rel(
        "L-1=nabla_perp-N/a p1",
        OpExpr::op(L(-1)),
        OpExpr::op(NablaPerp).minus(OpExpr::op(MulP(1)).times_n_over_alpha(1, 1)),
    ));
    out.push(rel(
        "L0=(calE+E)/2-N^2/(2a)",
        OpExpr::op(L(0)),
        OpExpr::op(CalE)
            .plus(OpExpr::op(E))
            .scaled(1, 2)
            .minus(OpExpr::op(Identity).scaled(1, 2).times_n_over_alpha(2, 1)),
    ));
    out.push(rel("G1/2=q+Q_perp", OpExpr::op(G(1)), OpExpr::op(SmallQ).plus(OpExpr::op(BigQPerp))));
    out.push(rel(
        "G-1/2=Q+q_perp-N/a pt0",
        OpExpr::op(G(-1)),
        OpExpr::op(BigQ)
            .plus(OpExpr::op(SmallQPerp))
            .minus(OpExpr::op(MulPTilde(0)).times_n_over_alpha(1, 1)),
    ));
    out
}

/// Identities with multiplication operators and the eigenoperators.
pub fn global_relations(max_n: usize) -> Vec<Relation> {
    use Operator::*;
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(rel(
            format!("[nabla_perp,p{n}]"),
            OpExpr::bracket(NablaPerp, MulP(n)),
            OpExpr::op(MulP(n + 1)).scaled(n as i64, 1),
        ));
        out.push(rel(
            format!("[q,p{n}]"),
            OpExpr::bracket(SmallQ, MulP(n)),
            OpExpr::op(MulPTilde(n - 1)).scaled(n as i64, 1),
        ));
    }
    out.push(rel("{pt0,q_perp}", OpExpr::bracket(MulPTilde(0), SmallQPerp), OpExpr::op(MulP(1))));
    let p1sq = OpExpr::word(vec![MulP(1), MulP(1)]);
    out.push(Relation {
        name: "L-2 from D, Delta".into(),
        lhs: OpExpr::op(L(-2)),
        rhs: OpExpr::bracket(Delta, MulP(2))
            .scaled(3, 4)
            .times_n_over_alpha(0, 1)
            .plus(OpExpr::bracket(D, MulP(2)).scaled(1, 2).times_n_over_alpha(0, 1))
            .minus(OpExpr::op(MulP(2)).scaled(1, 2))
            .minus(p1sq.minus(OpExpr::op(MulP(2))).scaled(1, 2).times_n_over_alpha(0, 1)),
        symmetric_only: true,
    });
    out
}

/// Hecke relations and commutativity of the Dunkl-Cherednik operators.
pub fn cherednik_relations(nvars: usize) -> Vec<Relation> {
    use Operator::*;
    let mut out = Vec::new();
    for i in 1..=nvars {
        for j in i + 1..=nvars {
            out.push(rel(format!("[D{i},D{j}]"), OpExpr::bracket(Cherednik(i), Cherednik(j)), OpExpr::zero()));
        }
        for j in 1..nvars {
            let k = SwapX(j, j + 1);
            if i == j {
                out.push(rel(
                    format!("D{i}K{j}-K{j}D{}", i + 1),
                    OpExpr::word(vec![Cherednik(i), k.clone()]).minus(OpExpr::word(vec![k, Cherednik(i + 1)])),
                    OpExpr::op(Identity),
                ));
            } else if i != j + 1 {
                out.push(rel(format!("[D{i},K{j}]"), OpExpr::bracket(Cherednik(i), k), OpExpr::zero()));
            }
        }
    }
    out
}

/// Every monomial `θ_S x^e` in `nvars` variables with `|e| ≤ max_degree`.
pub fn homogeneous_basis<C: Ring>(nvars: usize, max_degree: usize) -> Vec<SuperPoly<C>> {
    fn exps_upto(n: usize, d: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=d {
            cur.push(e as u16);
            exps_upto(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut exps = Vec::new();
    exps_upto(nvars, max_degree, &mut Vec::new(), &mut exps);
    let mut out = Vec::new();
    for mask in 0..(1u32 << nvars) {
        for e in &exps {
            out.push(SuperPoly::from_monomial(Monomial::new(mask, e.clone()), C::one(), nvars));
        }
    }
    out
}

/// Monomial symmetric functions of total degree at most `max_degree`.
pub fn symmetric_basis<C: Ring>(nvars: usize, max_degree: usize) -> Vec<SuperPoly<C>> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for m in 0..=nvars {
            for lab in SuperPartition::enumerate(n, m, nvars) {
                out.push(monomial_symmetric(&lab, nvars));
            }
        }
    }
    out
}

/// Evaluates each relation on the inputs and reports the first failing
/// input per relation. Symmetric-only relations use `symmetric_inputs`.
pub fn check_relations<C: Ring>(
    relations: &[Relation],
    inputs: &[SuperPoly<C>],
    symmetric_inputs: &[SuperPoly<C>],
    alpha: &C,
) -> Vec<RelationFailure> {
    let results = par::map(relations, |r| {
        let set = if r.symmetric_only { symmetric_inputs } else { inputs };
        for f in set {
            let outcome = r.lhs.eval(f, alpha).and_then(|l| Ok(l.sub(&r.rhs.eval(f, alpha)?)));
            match outcome {
                Ok(d) if d.is_zero() => {}
                Ok(d) => {
                    return Some(RelationFailure {
                        relation: r.name.clone(),
                        witness: format!("{f:?}"),
                        message: format!("lhs - rhs = {d:?}"),
                    })
                }
                Err(e) => {
                    return Some(RelationFailure {
                        relation: r.name.clone(),
                        witness: format!("{f:?}"),
                        message: e.to_string(),
                    })
                }
            }
        }
        None
    });
    results.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{rat, AlphaRational, BigRational};

    fn report(f: &[RelationFailure]) -> String {
        f.iter().map(|x| format!("{}: {} on {}", x.relation, x.message, x.witness)).collect::<Vec<_>>().join("\n")
    }

    #[test]
    fn algebra_table_holds() {
        let basis = homogeneous_basis::<AlphaRational>(3, 2);
        let fails = check_relations(&algebra_relations(), &basis, &[], &AlphaRational::alpha());
        assert!(fails.is_empty(), "{}", report(&fails));
        assert_eq!(algebra_relations().len(), 8 * 7 / 2 + 4);
    }

    #[test]
    fn virasoro_half_holds() {
        let basis = homogeneous_basis::<BigRational>(3, 2);
        let fails = check_relations(&virasoro_relations(-3), &basis, &[], &rat(7, 3));
        assert!(fails.is_empty(), "{}", report(&fails));
    }

    #[test]
    fn global_identities_hold() {
        let basis = homogeneous_basis::<BigRational>(3, 2);
        let sym = symmetric_basis::<BigRational>(3, 3);
        let fails = check_relations(&global_relations(3), &basis, &sym, &rat(5, 2));
        assert!(fails.is_empty(), "{}", report(&fails));
    }

    #[test]
    fn hecke_relations_hold() {
        let basis = homogeneous_basis::<BigRational>(3, 3);
        let fails = check_relations(&cherednik_relations(3), &basis, &[], &rat(-3, 2));
        assert!(fails.is_empty(), "{}", report(&fails));
    }

    #[test]
    fn l_minus_two_needs_half_coefficient() {
        use Operator::*;
        let literal = OpExpr::bracket(Delta, MulP(2))
            .scaled(3, 4)
            .times_n_over_alpha(0, 1)
            .plus(OpExpr::bracket(D, MulP(2)).scaled(1, 2).times_n_over_alpha(0, 1))
            .minus(OpExpr::op(MulP(2)).scaled(1, 2))
            .minus(OpExpr::word(vec![MulP(1), MulP(1)]).minus(OpExpr::op(MulP(2))).times_n_over_alpha(0, 1));
        let r = Relation { name: "literal".into(), lhs: OpExpr::op(L(-2)), rhs: literal, symmetric_only: true };
        let sym = symmetric_basis::<BigRational>(3, 2);
        assert_eq!(check_relations(&[r], &[], &sym, &rat(5, 2)).len(), 1);
    }

    #[test]
    fn broken_relation_is_reported() {
        let bad = vec![rel("bogus", OpExpr::op(Operator::Nabla), OpExpr::zero())];
        let basis = homogeneous_basis::<BigRational>(2, 1);
        assert_eq!(check_relations(&bad, &basis, &[], &rat(1, 1)).len(), 1);
    }
}
