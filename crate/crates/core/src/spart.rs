//! Superpartitions `Λ = (Λᵃ; Λˢ)`, their diagrams, dominance order,
//! conjugation, hook lengths and `(k,r,N)`-admissibility.
//!
//! Text forms accepted by [`SuperPartition::parse`]:
//!
//! - `3,1,0;5,3,3` or `(3,1,0;5,3,3)`: antisymmetric parts, then symmetric
//!   parts. Zeros among the symmetric parts are padding and are dropped.
//! - `(5o,4,3o,3,1o,0o,0)`: the rows of `Λ*`, a trailing `o` marking a
//!   circled row.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::coeffring::AlphaPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpartError {
    #[error("cannot parse superpartition {input:?}: {message}")]
    Parse { input: String, message: String },
    #[error("antisymmetric parts must be strictly decreasing: {0:?}")]
    NotStrict(Vec<usize>),
    #[error("symmetric parts must be weakly decreasing: {0:?}")]
    NotWeak(Vec<usize>),
    #[error("({circ:?}, {star:?}) is not a valid (Λ⊛, Λ*) pair")]
    InvalidPair { circ: Vec<usize>, star: Vec<usize> },
    #[error("admissibility needs gcd(k+1, r-1) = 1, got k = {k}, r = {r}")]
    NotCoprime { k: usize, r: usize },
    #[error("invalid admissibility parameters k = {k}, r = {r}")]
    BadParameters { k: usize, r: usize },
}

/// A superpartition. `antisym` is strictly decreasing (may end in 0),
/// `sym` is weakly decreasing with positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperPartition {
    antisym: Vec<usize>,
    sym: Vec<usize>,
}

/// One row of the diagram: the length of the row of `Λ*` and whether it
/// ends with a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Row {
    pub len: usize,
    pub circled: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurgeryKind {
    AddCircle,
    RemoveCircle,
    SquareToCircle,
    CircleToSquare,
}

/// A diagram modification: `result` differs from the source in the single
/// marked cell `(row, col)` (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surgery {
    pub kind: SurgeryKind,
    pub result: SuperPartition,
    pub cell: (usize, usize),
}

pub fn conjugate_partition(p: &[usize]) -> Vec<usize> {
    let first = p.first().copied().unwrap_or(0);
    (1..=first).map(|j| p.iter().filter(|&&x| x >= j).count()).collect()
}

/// `Σ (i-1) λ_i`
pub fn b_statistic(p: &[usize]) -> usize {
    p.iter().enumerate().map(|(i, &x)| i * x).sum()
}

/// Dominance order on partitions of equal size.
pub fn partition_dominated(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

fn nonzero_sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.retain(|&x| x > 0);
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn pad(p: &[usize], n: usize) -> Vec<usize> {
    let mut v = p.to_vec();
    if v.len() < n {
        v.resize(n, 0);
    }
    v
}

/// Partitions of `n` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// Strictly decreasing sequences of `m` non-negative integers summing to `n`.
fn strict_sequences(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, m: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // parts are distinct and the smallest m-1 parts sum to at least C(m-1, 2)
        for p in (m - 1..=bound.min(n)).rev() {
            cur.push(p);
            if p > 0 || m == 1 {
                rec(n - p, m - 1, p.saturating_sub(1), cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, n, &mut Vec::new(), &mut out);
    out
}

impl SuperPartition {
    pub fn new(antisym: Vec<usize>, sym: Vec<usize>) -> Result<Self, SpartError> {
        if antisym.windows(2).any(|w| w[0] <= w[1]) {
            return Err(SpartError::NotStrict(antisym));
        }
        if sym.windows(2).any(|w| w[0] < w[1]) {
            return Err(SpartError::NotWeak(sym));
        }
        let sym = sym.into_iter().filter(|&x| x > 0).collect();
        Ok(SuperPartition { antisym, sym })
    }

    /// Panicking constructor for literals in tests and tables.
    pub fn from_parts(antisym: &[usize], sym: &[usize]) -> Self {
        Self::new(antisym.to_vec(), sym.to_vec()).expect("valid superpartition")
    }

    /// Builds `Λ` from `(Λ⊛, Λ*)`.
    pub fn from_star_pair(circ: &[usize], star: &[usize]) -> Result<Self, SpartError> {
        let bad = || SpartError::InvalidPair { circ: circ.to_vec(), star: star.to_vec() };
        let n = circ.len().max(star.len());
        let (c, s) = (pad(circ, n), pad(star, n));
        let mut antisym = Vec::new();
        let mut sym = Vec::new();
        for i in 0..n {
            match c[i].checked_sub(s[i]) {
                Some(0) => sym.push(s[i]),
                Some(1) => antisym.push(s[i]),
                _ => return Err(bad()),
            }
        }
        if c.windows(2).any(|w| w[0] < w[1]) || s.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Self::new(antisym, sym).map_err(|_| bad())
    }

    pub fn parse(input: &str) -> Result<Self, SpartError> {
        let err = |m: &str| SpartError::Parse { input: input.to_string(), message: m.to_string() };
        let mut s = input.trim();
        if let Some(inner) = s.strip_prefix('(') {
            s = inner.strip_suffix(')').ok_or_else(|| err("unbalanced parenthesis"))?;
        }
        let nums = |part: &str| -> Result<Vec<usize>, SpartError> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| err("expected non-negative integers")))
                .collect()
        };
        if let Some((a, b)) = s.split_once(';') {
            let antisym = nums(a)?;
            let mut sym = nums(b)?;
            sym.retain(|&x| x > 0);
            return Self::new(antisym, sym).map_err(|e| err(&e.to_string()));
        }
        let mut rows = Vec::new();
        for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (num, circled) = match t.strip_suffix('o').or_else(|| t.strip_suffix('°')) {
                Some(n) => (n, true),
                None => (t, false),
            };
            let len: usize = num.trim().parse().map_err(|_| err("expected row lengths"))?;
            rows.push(Row { len, circled });
        }
        Self::from_rows(&rows).map_err(|e| err(&e.to_string()))
    }

    /// Builds `Λ` from diagram rows (lengths of `Λ*` with circle flags).
    pub fn from_rows(rows: &[Row]) -> Result<Self, SpartError> {
        let star: Vec<usize> = rows.iter().map(|r| r.len).collect();
        let circ: Vec<usize> = rows.iter().map(|r| r.len + r.circled as usize).collect();
        let sp = Self::from_star_pair(&circ, &star)?;
        if sp.rows().len() != rows.iter().filter(|r| r.len > 0 || r.circled).count() {
            return Err(SpartError::InvalidPair { circ, star });
        }
        Ok(sp)
    }

    pub fn antisym(&self) -> &[usize] {
        &self.antisym
    }

    pub fn sym(&self) -> &[usize] {
        &self.sym
    }

    /// Fermionic degree `m`.
    pub fn m(&self) -> usize {
        self.antisym.len()
    }

    /// Bosonic degree `n = |Λᵃ| + |Λˢ|`.
    pub fn n(&self) -> usize {
        self.antisym.iter().sum::<usize>() + self.sym.iter().sum::<usize>()
    }

    pub fn degree(&self) -> (usize, usize) {
        (self.n(), self.m())
    }

    /// `ℓ(Λ) = ℓ(Λ⊛) = m + ℓ(Λˢ)`
    pub fn len(&self) -> usize {
        self.antisym.len() + self.sym.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Λ*`, positive parts only.
    pub fn star(&self) -> Vec<usize> {
        nonzero_sorted(self.antisym.iter().chain(&self.sym).copied().collect())
    }

    /// `Λ⊛`
    pub fn circ(&self) -> Vec<usize> {
        nonzero_sorted(self.antisym.iter().map(|x| x + 1).chain(self.sym.iter().copied()).collect())
    }

    pub fn star_padded(&self, n: usize) -> Vec<usize> {
        pad(&self.star(), n)
    }

    pub fn circ_padded(&self, n: usize) -> Vec<usize> {
        pad(&self.circ(), n)
    }

    /// Diagram rows from top to bottom. Among rows of equal length the
    /// circled one comes first. A circled row of length 0 is included.
    pub fn rows(&self) -> Vec<Row> {
        let mut rows: Vec<Row> = self
            .antisym
            .iter()
            .map(|&len| Row { len, circled: true })
            .chain(self.sym.iter().map(|&len| Row { len, circled: false }))
            .collect();
        rows.sort_by(|a, b| b.len.cmp(&a.len).then(b.circled.cmp(&a.circled)));
        rows
    }

    /// The composition `(Λ_m, …, Λ_1, Λ_N, …, Λ_{m+1})` with `Λˢ` padded to
    /// `N - m` parts.
    pub fn tilde_composition(&self, n: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.antisym.iter().rev().copied().collect();
        let s = pad(&self.sym, n - self.m());
        v.extend(s.iter().rev());
        v
    }

    pub fn conjugate(&self) -> SuperPartition {
        let circ = conjugate_partition(&self.circ());
        let star = conjugate_partition(&self.star());
        Self::from_star_pair(&circ, &star).expect("conjugate of a superpartition")
    }

    /// `self ≤ other` in the dominance order.
    pub fn dominated_by(&self, other: &SuperPartition) -> bool {
        self.degree() == other.degree()
            && partition_dominated(&self.star(), &other.star())
            && partition_dominated(&self.circ(), &other.circ())
    }

    /// Total order refining dominance: compares `(Λ⊛, Λ*)` lexicographically.
    pub fn cmp_lex(&self, other: &SuperPartition) -> Ordering {
        self.circ().cmp(&other.circ()).then_with(|| self.star().cmp(&other.star()))
    }

    /// `(k,r,N)`-admissibility: `Λ⊛_i - Λ*_{i+k} ≥ r` for `1 ≤ i ≤ N - k`.
    pub fn is_admissible(&self, k: usize, r: usize, n: usize) -> Result<bool, SpartError> {
        check_kr(k, r)?;
        if self.len() > n {
            return Ok(false);
        }
        let circ = self.circ_padded(n);
        let star = self.star_padded(n + k);
        Ok((0..n.saturating_sub(k)).all(|i| circ[i] >= star[i + k] + r))
    }

    /// The overpartition obtained from `Λ⊛` by overlining the parts whose
    /// row ends with a circle.
    pub fn to_overpartition(&self) -> Vec<(usize, bool)> {
        self.rows().iter().map(|r| (r.len + r.circled as usize, r.circled)).collect()
    }

    /// Diagram cells of `Λ*` as 1-based `(row, col)`.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let star = self.star();
        let mut out = Vec::new();
        for (i, &len) in star.iter().enumerate() {
            for j in 1..=len {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Cells of `Λ*` not lying both in a circled row and a circled column.
    pub fn bulk_cells(&self) -> Vec<(usize, usize)> {
        let rows = self.rows();
        self.cells()
            .into_iter()
            .filter(|&(i, j)| !(rows[i - 1].circled && self.antisym.contains(&(j - 1))))
            .collect()
    }

    /// `h^{(α)}(s) = l_{Λ⊛}(s) + α (a_{Λ*}(s) + 1)`, as a linear polynomial in `α`.
    pub fn upper_hook(&self, cell: (usize, usize)) -> AlphaPoly {
        let (star, circ) = (self.star(), self.circ());
        AlphaPoly::linear(leg(&circ, cell), arm(&star, cell) + 1)
    }

    /// `h_{(α)}(s) = l_{Λ*}(s) + 1 + α a_{Λ⊛}(s)`
    pub fn lower_hook(&self, cell: (usize, usize)) -> AlphaPoly {
        let (star, circ) = (self.star(), self.circ());
        AlphaPoly::linear(leg(&star, cell) + 1, arm(&circ, cell))
    }

    pub fn upper_hook_product(&self) -> AlphaPoly {
        self.bulk_cells().into_iter().fold(AlphaPoly::linear(1, 0), |acc, s| &acc * &self.upper_hook(s))
    }

    pub fn lower_hook_product(&self) -> AlphaPoly {
        self.bulk_cells().into_iter().fold(AlphaPoly::linear(1, 0), |acc, s| &acc * &self.lower_hook(s))
    }

    /// `e_{Λ*} = α b(Λ*') - b(Λ*)`, eigenvalue of `D` on `P_Λ`.
    pub fn d_eigenvalue(&self) -> AlphaPoly {
        let star = self.star();
        AlphaPoly::linear(
            -(b_statistic(&star) as i64),
            b_statistic(&conjugate_partition(&star)) as i64,
        )
    }

    /// `ẽ_Λ = α|Λᵃ| - |Λ'ᵃ|`, eigenvalue of `Δ` on `P_Λ`.
    pub fn delta_eigenvalue(&self) -> AlphaPoly {
        let conj: usize = self.conjugate().antisym.iter().sum();
        AlphaPoly::linear(-(conj as i64), self.antisym.iter().sum::<usize>() as i64)
    }

    /// `∏ n_i!` over the multiplicities of the parts of `Λˢ` padded with
    /// zeros to `N - m` parts.
    pub fn sym_multiplicity_factorial(&self, n: usize) -> u128 {
        multiplicity_factorial(&pad(&self.sym, n - self.m()))
    }

    /// All superpartitions of degree `(n|m)` with `ℓ(Λ⊛) ≤ max_len`, in
    /// decreasing order of `(Λ⊛, Λ*)`.
    pub fn enumerate(n: usize, m: usize, max_len: usize) -> Vec<SuperPartition> {
        if m > max_len {
            return Vec::new();
        }
        let mut out = Vec::new();
        let min_a = m * m.saturating_sub(1) / 2;
        for a in min_a..=n {
            for antisym in strict_sequences(a, m) {
                for sym in partitions(n - a, max_len - m) {
                    out.push(SuperPartition { antisym: antisym.clone(), sym });
                }
            }
        }
        out.sort_by(|a, b| b.cmp_lex(a));
        out
    }

    /// `(k,r,N)`-admissible superpartitions of bosonic degree at most `nmax`.
    pub fn enumerate_admissible(k: usize, r: usize, n: usize, nmax: usize) -> Result<Vec<SuperPartition>, SpartError> {
        check_kr(k, r)?;
        let mut out = Vec::new();
        for deg in 0..=nmax {
            for m in 0..=n {
                for sp in Self::enumerate(deg, m, n) {
                    if sp.is_admissible(k, r, n)? {
                        out.push(sp);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The single-cell diagram modifications of `Λ`, restricted to results
    /// with at most `max_len` rows.
    pub fn surgeries(&self, max_len: usize) -> Vec<Surgery> {
        let rows = self.rows();
        let mut out = Vec::new();
        let mut push = |kind, antisym: Vec<usize>, sym: Vec<usize>, cell| {
            let mut antisym = antisym;
            antisym.sort_unstable_by(|a, b| b.cmp(a));
            let result = SuperPartition::new(antisym, nonzero_sorted(sym)).expect("surgery result");
            if result.len() <= max_len {
                out.push(Surgery { kind, result, cell });
            }
        };
        let without = |v: &[usize], x: usize| -> Vec<usize> {
            let mut v = v.to_vec();
            let p = v.iter().position(|&y| y == x).expect("part present");
            v.remove(p);
            v
        };
        let with = |v: &[usize], x: usize| -> Vec<usize> {
            let mut v = v.to_vec();
            v.push(x);
            v
        };
        let mut rows_ext = rows.clone();
        rows_ext.push(Row { len: 0, circled: false });
        for (idx, row) in rows_ext.iter().enumerate() {
            let i = idx + 1;
            let v = row.len;
            if row.circled {
                push(SurgeryKind::RemoveCircle, without(&self.antisym, v), with(&self.sym, v), (i, v + 1));
                push(SurgeryKind::CircleToSquare, without(&self.antisym, v), with(&self.sym, v + 1), (i, v + 1));
                continue;
            }
            let top_of_block = idx == 0 || rows_ext[idx - 1].len != v || rows_ext[idx - 1].circled;
            if top_of_block && !self.antisym.contains(&v) {
                let sym = if v > 0 { without(&self.sym, v) } else { self.sym.clone() };
                push(SurgeryKind::AddCircle, with(&self.antisym, v), sym, (i, v + 1));
            }
            let bottom_of_block = rows_ext.get(idx + 1).is_none_or(|r| r.len != v);
            if v > 0 && bottom_of_block && !self.antisym.contains(&(v - 1)) {
                push(SurgeryKind::SquareToCircle, with(&self.antisym, v - 1), without(&self.sym, v), (i, v));
            }
        }
        out
    }

    /// Superpartitions obtained by one of the four surgeries, as used by
    /// almost-admissibility.
    pub fn almost_admissible_variants(&self, max_len: usize) -> Vec<SuperPartition> {
        let mut v: Vec<SuperPartition> = self.surgeries(max_len).into_iter().map(|s| s.result).collect();
        v.sort_by(|a, b| b.cmp_lex(a));
        v.dedup();
        v
    }

    /// `Λ*` rows with circle markers, e.g. `(5o,4,3o,3,1o,0o)`.
    pub fn to_circled_string(&self) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| if r.circled { format!("{}o", r.len) } else { r.len.to_string() })
            .collect();
        format!("({})", rows.join(","))
    }

    /// `3,1,0;5,3,3`, the form used in keys and on the command line.
    pub fn key(&self) -> String {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("{};{}", j(&self.antisym), j(&self.sym))
    }
}

fn check_kr(k: usize, r: usize) -> Result<(), SpartError> {
    if k == 0 || r < 2 {
        return Err(SpartError::BadParameters { k, r });
    }
    if (k + 1).gcd(&(r - 1)) != 1 {
        return Err(SpartError::NotCoprime { k, r });
    }
    Ok(())
}

/// `α_{k,r} = -(k+1)/(r-1)` as `(numerator, denominator)`.
pub fn alpha_kr(k: usize, r: usize) -> (i64, i64) {
    (-(k as i64 + 1), r as i64 - 1)
}

fn multiplicity_factorial(parts: &[usize]) -> u128 {
    let mut out = 1u128;
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        out *= (1..=(j - i) as u128).product::<u128>();
        i = j;
    }
    out
}

/// `z_λ = ∏ i^{n_i} n_i!` over positive parts.
pub fn z_factor(parts: &[usize]) -> u128 {
    let pos: Vec<usize> = parts.iter().copied().filter(|&x| x > 0).collect();
    multiplicity_factorial(&pos) * pos.iter().map(|&x| x as u128).product::<u128>()
}

/// `a_λ(s) = λ_i - j`, possibly negative outside the diagram.
pub fn arm(p: &[usize], (i, j): (usize, usize)) -> i64 {
    p.get(i - 1).copied().unwrap_or(0) as i64 - j as i64
}

/// `l_λ(s) = λ'_j - i`, possibly negative outside the diagram.
pub fn leg(p: &[usize], (i, j): (usize, usize)) -> i64 {
    p.iter().filter(|&&x| x >= j).count() as i64 - i as i64
}

/// `d_η(s) = α(η_i - j + 1) + #{k<i : j ≤ η_k+1 ≤ η_i} + #{k>i : j ≤ η_k ≤ η_i} + 1`
pub fn composition_hook(eta: &[usize], (i, j): (usize, usize)) -> AlphaPoly {
    let ei = eta[i - 1];
    let before = eta[..i - 1].iter().filter(|&&e| j <= e + 1 && e < ei).count();
    let after = eta[i..].iter().filter(|&&e| j <= e && e <= ei).count();
    AlphaPoly::linear((before + after + 1) as i64, ei as i64 + 1 - j as i64)
}

/// Eigenvalues `η̄_i = αη_i - #{k<i : η_k ≥ η_i} - #{k>i : η_k > η_i}` of
/// the Cherednik operators on `E_η`.
pub fn composition_eigenvalues(eta: &[usize]) -> Vec<AlphaPoly> {
    (0..eta.len())
        .map(|i| {
            let c = eta[..i].iter().filter(|&&e| e >= eta[i]).count()
                + eta[i + 1..].iter().filter(|&&e| e > eta[i]).count();
            AlphaPoly::linear(-(c as i64), eta[i] as i64)
        })
        .collect()
}

/// Restricted-overpartition condition for `(k,2,N)`-admissibility:
/// `Ω_i - Ω_{i+k} ≥ 1` if `Ω_{i+k}` is overlined and `≥ 2` otherwise.
pub fn overpartition_condition(op: &[(usize, bool)], k: usize, n: usize) -> bool {
    let get = |i: usize| op.get(i).copied().unwrap_or((0, false));
    (0..n.saturating_sub(k)).all(|i| {
        let (a, _) = get(i);
        let (b, over) = get(i + k);
        a >= b + if over { 1 } else { 2 }
    })
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

impl fmt::Debug for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

impl FromStr for SuperPartition {
    type Err = SpartError;
    fn from_str(s: &str) -> Result<Self, SpartError> {
        Self::parse(s)
    }
}

impl PartialOrd for SuperPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(Λ⊛, Λ*)`, then on the defining parts.
impl Ord for SuperPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m()
            .cmp(&other.m())
            .then_with(|| self.n().cmp(&other.n()))
            .then_with(|| self.cmp_lex(other))
            .then_with(|| self.antisym.cmp(&other.antisym))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        SuperPartition::parse(s).unwrap()
    }

    #[test]
    fn star_and_circ() {
        let l = sp("3,1,0;5,3,3");
        assert_eq!(l.star(), vec![5, 3, 3, 3, 1]);
        assert_eq!(l.circ(), vec![5, 4, 3, 3, 2, 1]);
        assert_eq!(l.degree(), (15, 3));
        assert_eq!(l.len(), 6);
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(sp("(3,1,0;2,1)"), sp("(3o,2,1o,1,0o)"));
        assert_eq!(sp("3,1,0;2,1,0,0"), sp("3,1,0;2,1"));
        assert_eq!(sp("(5o,4,3o,3,1o,0o,0)").key(), "5,3,1,0;4,3");
        assert_eq!(sp(";").degree(), (0, 0));
        assert!(SuperPartition::parse("1,1;").is_err());
        assert!(SuperPartition::parse("1;1,2").is_err());
        assert!(SuperPartition::parse("(2o,2o)").is_err());
        assert!(SuperPartition::parse("x;").is_err());
    }

    #[test]
    fn overpartition_of_example() {
        let l = sp("3,1,0;2,1");
        assert_eq!(l.circ(), vec![4, 2, 2, 1, 1]);
        assert_eq!(
            l.to_overpartition(),
            vec![(4, true), (2, false), (2, true), (1, false), (1, true)]
        );
    }

    #[test]
    fn conjugation_examples() {
        let l = sp("3,1,0;2,1");
        let c = l.conjugate();
        assert_eq!(c.star(), conjugate_partition(&l.star()));
        assert_eq!(c.circ(), conjugate_partition(&l.circ()));
        let l = SuperPartition::from_star_pair(&[6, 4, 4, 3, 2, 1], &[5, 4, 3, 3, 1]).unwrap();
        let c = l.conjugate();
        assert_eq!(c.circ(), vec![6, 5, 4, 3, 1, 1]);
        assert_eq!(c.star(), vec![5, 4, 4, 2, 1]);
        assert_eq!(c.conjugate(), l);
        assert_eq!(sp("0;").conjugate(), sp("0;"));
        assert_eq!(sp(";3").conjugate(), sp(";1,1,1"));
    }

    #[test]
    fn admissibility_examples() {
        // (k,r,N) = (1,2,4): Λ⊛_i - Λ*_{i+1} ≥ 2
        assert!(sp("2,0;").is_admissible(1, 2, 2).unwrap());
        assert!(!sp("2,0;").is_admissible(1, 2, 4).unwrap());
        assert!(sp("1,0;").is_admissible(1, 2, 2).unwrap());
        assert!(!sp(";1,1").is_admissible(1, 2, 2).unwrap());
        assert!(sp(";4,2").is_admissible(2, 2, 3).unwrap());
        assert!(sp("3,1;3,1").is_admissible(1, 3, 4).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let v = SuperPartition::enumerate(2, 1, 10);
        let keys: Vec<String> = v.iter().map(|s| s.key()).collect();
        assert_eq!(keys, vec!["2;", "0;2", "1;1", "0;1,1"]);
        assert_eq!(SuperPartition::enumerate(3, 2, 10).len(), 5);
        assert!(SuperPartition::enumerate(0, 2, 10).is_empty());
        assert_eq!(SuperPartition::enumerate(1, 2, 10), vec![sp("1,0;")]);
    }

    #[test]
    fn bulk_excludes_fermionic_intersections() {
        // (1,0;): rows 1o, 0o; column 1 is circled (0 in Λᵃ), row 1 circled
        let l = sp("1,0;");
        assert_eq!(l.cells(), vec![(1, 1)]);
        assert!(l.bulk_cells().is_empty());
    }

    #[test]
    fn surgeries_of_small_diagram() {
        let l = sp("1;1");
        let mut kinds: Vec<(SurgeryKind, String)> =
            l.surgeries(10).into_iter().map(|s| (s.kind, s.result.key())).collect();
        kinds.sort();
        assert_eq!(
            kinds,
            vec![
                (SurgeryKind::AddCircle, "1,0;1".into()),
                (SurgeryKind::RemoveCircle, ";1,1".into()),
                (SurgeryKind::SquareToCircle, "1,0;".into()),
                (SurgeryKind::CircleToSquare, ";2,1".into()),
            ]
        );
    }
}
