//! The spaces spanned by admissible Jack superpolynomials at `α = α_{k,r}`
//! and the space of symmetric superpolynomials vanishing when `k+1`
//! variables coincide: bases, membership, stability under the
//! super-Virasoro generators, characters, vanishing and clustering.
//!
//! `I_{N,m}^{(k,r)}` is spanned by the `P_Λ^{(α_{k,r})}` with `Λ`
//! `(k,r,N)`-admissible and `m` circles; `𝓘_N^{(k,r)}` is their sum over
//! `m`.

mod characters;
mod cluster;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::coeffring::{rat, BigRational, FieldMatrix};
use crate::jack::{jack_symbolic, sector, JackError};
use crate::ops::{apply, supercommutator, OpError, Operator};
use crate::par;
use crate::spart::{alpha_kr, SpartError, SuperPartition};
use crate::superpoly::{SuperPoly, SuperPolyError};

pub use characters::{char_f, char_i, dim_f, CharacterSeries};
pub use cluster::{
    cluster_multiplicity, conjecture_clustering, conjecture_i_eq_f, prescribed_jack_at, prescribed_vanish_check,
    vanish_check, CharComparison, ClusterRecord, ClusterResult, ClusterSweep, DegreeVerdict,
};

#[derive(Debug, Error)]
pub enum IdealError {
    #[error(transparent)]
    Spart(#[from] SpartError),
    #[error(transparent)]
    Jack(#[from] JackError),
    #[error(transparent)]
    Poly(#[from] SuperPolyError),
    #[error(transparent)]
    Op(#[from] OpError),
    #[error("not in the span of the basis; leftover leading term m_{witness} with coefficient {coeff}")]
    NotInSpan { witness: String, coeff: String, residual: BTreeMap<SuperPartition, BigRational> },
    #[error("degree ({n}|{m}) lies outside the basis range n <= {nmax}")]
    OutOfRange { n: usize, m: usize, nmax: usize },
    #[error("not homogeneous")]
    NotHomogeneous,
    #[error("the specialized polynomial vanishes identically")]
    ZeroPolynomial,
    #[error("{0}")]
    BadParameters(String),
}

/// `α_{k,r} = -(k+1)/(r-1)`.
pub fn alpha_value(k: usize, r: usize) -> BigRational {
    let (p, q) = alpha_kr(k, r);
    rat(p, q)
}

/// One basis vector `P_Λ^{(α_{k,r})}` on the monomial basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub label: SuperPartition,
    pub mbasis: BTreeMap<SuperPartition, BigRational>,
}

impl BasisElement {
    pub fn poly(&self, nvars: usize) -> SuperPoly<BigRational> {
        SuperPoly::from_mbasis(&self.mbasis, nvars)
    }
}

/// Admissible Jack superpolynomials at `α_{k,r}`, grouped by degree `(n|m)`.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    pub k: usize,
    pub r: usize,
    pub nvars: usize,
    pub nmax: usize,
    pub alpha: BigRational,
    degrees: BTreeMap<(usize, usize), Vec<BasisElement>>,
    index: HashMap<SuperPartition, ((usize, usize), usize)>,
}

/// Coefficients of `f = Σ c_Λ P_Λ`, keyed by label.
pub type Membership = BTreeMap<SuperPartition, BigRational>;

impl GradedBasis {
    pub fn degree(&self, n: usize, m: usize) -> &[BasisElement] {
        self.degrees.get(&(n, m)).map_or(&[], |v| v.as_slice())
    }

    pub fn dim(&self, n: usize, m: usize) -> usize {
        self.degree(n, m).len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = ((usize, usize), &[BasisElement])> {
        self.degrees.iter().map(|(d, v)| (*d, v.as_slice()))
    }

    pub fn elements(&self) -> impl Iterator<Item = &BasisElement> {
        self.degrees.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn get(&self, label: &SuperPartition) -> Option<&BasisElement> {
        self.index.get(label).map(|(d, i)| &self.degrees[d][*i])
    }

    /// Writes `f` (homogeneous, given on the monomial basis) in the basis.
    /// Every `P_Λ` is `m_Λ` plus lower terms, so the leading term of what
    /// is left always names the next basis vector.
    pub fn membership_mbasis(&self, f: &BTreeMap<SuperPartition, BigRational>) -> Result<Membership, IdealError> {
        let mut rest: BTreeMap<SuperPartition, BigRational> =
            f.iter().filter(|(_, c)| !num_traits::Zero::is_zero(*c)).map(|(k, v)| (k.clone(), v.clone())).collect();
        let mut degs = rest.keys().map(|l| l.degree());
        if let Some(d) = degs.next() {
            if degs.any(|e| e != d) {
                return Err(IdealError::NotHomogeneous);
            }
            if d.0 > self.nmax {
                return Err(IdealError::OutOfRange { n: d.0, m: d.1, nmax: self.nmax });
            }
        }
        let mut out = BTreeMap::new();
        while let Some(top) = rest.keys().max_by(|a, b| a.cmp_lex(b)).cloned() {
            let c = rest[&top].clone();
            let Some(b) = self.get(&top) else {
                return Err(IdealError::NotInSpan { witness: top.to_string(), coeff: c.to_string(), residual: rest });
            };
            for (om, v) in &b.mbasis {
                let e = rest.entry(om.clone()).or_insert_with(|| rat(0, 1));
                *e -= &c * v;
            }
            rest.retain(|_, x| !num_traits::Zero::is_zero(x));
            out.insert(top, c);
        }
        Ok(out)
    }

    pub fn membership(&self, f: &SuperPoly<BigRational>) -> Result<Membership, IdealError> {
        if f.nvars() != self.nvars {
            return Err(IdealError::BadParameters(format!(
                "polynomial in {} variables, basis in {}",
                f.nvars(),
                self.nvars
            )));
        }
        self.membership_mbasis(&f.to_mbasis()?)
    }
}

fn check_coprime(k: usize, r: usize) -> Result<(), IdealError> {
    SuperPartition::enumerate_admissible(k, r, 1, 0)?;
    Ok(())
}

/// `P_Λ^{(α_{k,r})}` for every `(k,r,N)`-admissible `Λ` with `|Λ| ≤ nmax`
/// (bosonic degree). A pole is reported as an error: admissible labels are
/// regular at `α_{k,r}`.
pub fn ideal_basis(k: usize, r: usize, nvars: usize, nmax: usize) -> Result<GradedBasis, IdealError> {
    let labels = SuperPartition::enumerate_admissible(k, r, nvars, nmax)?;
    let alpha = alpha_value(k, r);
    let degs: BTreeSet<(usize, usize)> = labels.iter().map(|l| l.degree()).collect();
    for &(n, m) in &degs {
        sector(n, m, nvars);
    }
    let built = par::map(&labels, |l| -> Result<BasisElement, IdealError> {
        let j = jack_symbolic(l, nvars)?;
        Ok(BasisElement { label: l.clone(), mbasis: j.at(&alpha)? })
    });
    let mut degrees: BTreeMap<(usize, usize), Vec<BasisElement>> = BTreeMap::new();
    for b in built {
        let b = b?;
        degrees.entry(b.label.degree()).or_default().push(b);
    }
    let mut index = HashMap::new();
    for (d, v) in degrees.iter_mut() {
        v.sort_by(|a, b| b.label.cmp_lex(&a.label));
        for (i, b) in v.iter().enumerate() {
            index.insert(b.label.clone(), (*d, i));
        }
    }
    Ok(GradedBasis { k, r, nvars, nmax, alpha, degrees, index })
}

/// `L_{-2}` written through `D`, `Δ` and power sums:
/// `3/(4α)[Δ,p_2] + 1/(2α)[D,p_2] - p_2/2 - (p_1² - p_2)/(2α)`.
pub fn l_minus_two_combination(f: &SuperPoly<BigRational>, alpha: &BigRational) -> Result<SuperPoly<BigRational>, OpError> {
    let p2 = Operator::MulP(2);
    let p1 = Operator::MulP(1);
    let inv = alpha.recip();
    let a = supercommutator(&Operator::Delta, &p2, f, alpha)?.scale(&(rat(3, 4) * &inv));
    let b = supercommutator(&Operator::D, &p2, f, alpha)?.scale(&(rat(1, 2) * &inv));
    let p2f = apply(&p2, f, alpha)?;
    let p11f = apply(&p1, &apply(&p1, f, alpha)?, alpha)?;
    let c = p11f.sub(&p2f).scale(&(rat(1, 2) * &inv));
    Ok(a.add(&b).sub(&p2f.scale(&rat(1, 2))).sub(&c))
}

/// The checks run by [`stability_suite`], in report order.
pub const STABILITY_CHECKS: [&str; 11] =
    ["pt0", "q", "q_perp", "Q", "Q_perp", "p1", "p2", "L(-2)", "L(-2) via D and Delta", "restrict x", "restrict theta"];

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub check: String,
    pub label: SuperPartition,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub k: usize,
    pub r: usize,
    pub nvars: usize,
    pub nmax: usize,
    /// Number of images tested per check.
    pub tested: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn restrictions(f: &SuperPoly<BigRational>) -> (Vec<SuperPoly<BigRational>>, Vec<SuperPoly<BigRational>>) {
    let last = f.nvars() - 1;
    let top = f.terms().map(|(m, _)| m.exps[last]).max().unwrap_or(0);
    let mut xs = Vec::new();
    let mut ts = Vec::new();
    let mut g = f.clone();
    let mut h = f.deriv_theta(last);
    for _ in 0..=top {
        xs.push(g.drop_variable(last));
        ts.push(h.drop_variable(last));
        g = g.deriv_x(last);
        h = h.deriv_x(last);
    }
    (xs, ts)
}

/// Applies the five Pieri generators, multiplication by `p_1`, `p_2`,
/// `L_{-2}` (directly and through `D`, `Δ`) and the restrictions
/// `[∂^j_{x_N} P]_0`, `[∂_{θ_N}∂^j_{x_N} P]_0` to every basis element of
/// bosonic degree `≤ nmax`, and tests membership of each image.
pub fn stability_suite(k: usize, r: usize, nvars: usize, nmax: usize) -> Result<StabilityReport, IdealError> {
    let big = ideal_basis(k, r, nvars, nmax + 2)?;
    let small = if nvars >= 2 { Some(ideal_basis(k, r, nvars - 1, nmax)?) } else { None };
    let alpha = big.alpha.clone();
    let sources: Vec<&BasisElement> = big.elements().filter(|b| b.label.n() <= nmax).collect();
    let ops: [(&str, Operator); 8] = [
        ("pt0", Operator::MulPTilde(0)),
        ("q", Operator::SmallQ),
        ("q_perp", Operator::SmallQPerp),
        ("Q", Operator::BigQ),
        ("Q_perp", Operator::BigQPerp),
        ("p1", Operator::MulP(1)),
        ("p2", Operator::MulP(2)),
        ("L(-2)", Operator::L(-2)),
    ];
    let results = par::map(&sources, |b| -> Result<Vec<(&'static str, Option<String>)>, IdealError> {
        let f = b.poly(nvars);
        let mut out = Vec::new();
        let mut test = |name: &'static str, g: &SuperPoly<BigRational>, basis: &GradedBasis| {
            match basis.membership(g) {
                Ok(_) => out.push((name, None)),
                Err(IdealError::OutOfRange { .. }) => {}
                Err(e) => out.push((name, Some(e.to_string()))),
            }
        };
        for (name, op) in &ops {
            test(name, &apply(op, &f, &alpha)?, &big);
        }
        test("L(-2) via D and Delta", &l_minus_two_combination(&f, &alpha)?, &big);
        if let Some(small) = &small {
            let (xs, ts) = restrictions(&f);
            for g in &xs {
                test("restrict x", g, small);
            }
            for g in &ts {
                test("restrict theta", g, small);
            }
        }
        Ok(out)
    });
    let mut tested: BTreeMap<String, usize> = STABILITY_CHECKS.iter().map(|c| (c.to_string(), 0)).collect();
    let mut violations = Vec::new();
    for (b, res) in sources.iter().zip(results) {
        for (name, err) in res? {
            *tested.get_mut(name).expect("known check") += 1;
            if let Some(detail) = err {
                violations.push(Violation { check: name.to_string(), label: b.label.clone(), detail });
            }
        }
    }
    Ok(StabilityReport { k, r, nvars, nmax, tested, violations })
}

/// The cochain maps `q = Σ θ_i ∂_{x_i}` and `q̃ = Σ θ_i x_i ∂_{x_i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Differential {
    Q,
    QTilde,
}

impl Differential {
    fn operator(self) -> Operator {
        match self {
            Differential::Q => Operator::SmallQ,
            Differential::QTilde => Operator::QTilde,
        }
    }

    /// Bosonic degree change.
    fn shift(self) -> isize {
        match self {
            Differential::Q => -1,
            Differential::QTilde => 0,
        }
    }
}

impl std::str::FromStr for Differential {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "q" => Ok(Differential::Q),
            "q_tilde" | "qt" => Ok(Differential::QTilde),
            _ => Err(format!("unknown differential {s:?}; expected q or q_tilde")),
        }
    }
}

impl std::fmt::Display for Differential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Differential::Q => "q",
            Differential::QTilde => "q_tilde",
        })
    }
}

/// Dimension bookkeeping at one spot `I_{(n|m)}` of the complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainSpot {
    pub n: usize,
    pub m: usize,
    pub dim: usize,
    pub dim_ker: usize,
    /// Rank of the incoming map, counting the inclusion of constants at
    /// `(0|0)`.
    pub dim_im: usize,
}

impl CochainSpot {
    pub fn exact(&self) -> bool {
        self.dim_ker == self.dim_im
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CochainReport {
    pub d: Differential,
    pub spots: Vec<CochainSpot>,
    pub violations: Vec<Violation>,
}

impl CochainReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.spots.iter().all(CochainSpot::exact)
    }
}

fn image_matrix(
    basis: &GradedBasis,
    d: Differential,
    n: usize,
    m: usize,
    violations: &mut Vec<Violation>,
) -> Result<Option<usize>, IdealError> {
    let src = basis.degree(n, m);
    let tn = n as isize + d.shift();
    if src.is_empty() || tn < 0 {
        return Ok(Some(0));
    }
    let (tn, tm) = (tn as usize, m + 1);
    if tn > basis.nmax {
        return Ok(None);
    }
    let targets: Vec<&SuperPartition> = basis.degree(tn, tm).iter().map(|b| &b.label).collect();
    let col: HashMap<&SuperPartition, usize> = targets.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let images = par::map(src, |b| -> Result<(SuperPoly<BigRational>, SuperPoly<BigRational>), IdealError> {
        let f = b.poly(basis.nvars);
        let g = apply(&d.operator(), &f, &basis.alpha)?;
        let gg = apply(&d.operator(), &g, &basis.alpha)?;
        Ok((g, gg))
    });
    let mut rows = Vec::new();
    for (b, im) in src.iter().zip(images) {
        let (g, gg) = im?;
        if !gg.is_zero() {
            violations.push(Violation { check: format!("{d}∘{d}"), label: b.label.clone(), detail: "nonzero".into() });
        }
        match basis.membership(&g) {
            Ok(c) => {
                let mut row = vec![rat(0, 1); targets.len()];
                for (l, v) in c {
                    row[col[&l]] = v;
                }
                rows.push(row);
            }
            Err(e) => {
                violations.push(Violation { check: d.to_string(), label: b.label.clone(), detail: e.to_string() })
            }
        }
    }
    if targets.is_empty() {
        return Ok(Some(0));
    }
    Ok(Some(FieldMatrix::from_rows(rows, targets.len()).rank()))
}

/// Checks that `d` maps `I_{N,m}` into `I_{N,m+1}`, that `d∘d = 0`, and
/// compares `dim ker` with the rank of the incoming arrow at every spot
/// whose neighbours lie in the computed range.
pub fn cochain_check(k: usize, r: usize, nvars: usize, nmax: usize, d: Differential) -> Result<CochainReport, IdealError> {
    check_coprime(k, r)?;
    let extra = if d == Differential::Q { 1 } else { 0 };
    let basis = ideal_basis(k, r, nvars, nmax + extra)?;
    let mut violations = Vec::new();
    let mut ranks: BTreeMap<(usize, usize), Option<usize>> = BTreeMap::new();
    for n in 0..=basis.nmax {
        for m in 0..=nvars {
            ranks.insert((n, m), image_matrix(&basis, d, n, m, &mut violations)?);
        }
    }
    let mut spots = Vec::new();
    for n in 0..=nmax {
        for m in 0..=nvars {
            let dim = basis.dim(n, m);
            let Some(out_rank) = ranks[&(n, m)] else { continue };
            let dim_im = if m == 0 {
                usize::from(n == 0 && dim > 0)
            } else {
                let sn = n as isize - d.shift();
                match ranks.get(&(sn as usize, m - 1)) {
                    Some(Some(r)) => *r,
                    _ => continue,
                }
            };
            spots.push(CochainSpot { n, m, dim, dim_ker: dim - out_rank, dim_im });
        }
    }
    Ok(CochainReport { d, spots, violations })
}
