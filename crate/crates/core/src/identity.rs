//! Both sides of each identity relating `a_{r,m}` or `s_m` to a partition
//! family, evaluated along two independent routes.
//!
//! An identity has the shape
//!
//! ```text
//!   Σ_j  c(j) · ε(j) · stat(n - shift(j))  =  Σ_{j≥0} w(j) · F(n - m·j - r)
//! ```
//!
//! where `stat` is `a_{r,m}` or `s_m`, `w(j)` is `m·j + r` (respectively `j`,
//! with no `r`), and `F` is one of the families in [`StatisticFamily`]. The
//! left side is described by a [`ShiftSequence`]; the two statements with no
//! shifted sum use `stat(n)` itself on the left.
//!
//! The [`Oracle`] evaluator answers every query by enumeration. The
//! [`SeriesTables`] evaluator computes `a` and `s` from `p` alone and reads
//! `F` from generating functions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::SeriesTables;
use crate::statistics::{self, SignedCounter, StatisticFamily};

/// Which sum-of-parts statistic an identity is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatKind {
    /// `a_{r,m}(n)`: distinct parts congruent to `r` mod `m`
    A,
    /// `s_m(n)`: distinct parts occurring at least `m` times
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftKind {
    /// `j²`
    Square,
    /// `2j²`
    TwiceSquare,
    /// `j(j+1)/2`
    Triangular,
    /// `j(3j+1)/2`
    Pentagonal,
    /// `3j(j+1)/2`
    TripleTriangular,
}

impl ShiftKind {
    pub fn shift(self, j: u64) -> u64 {
        match self {
            Self::Square => j * j,
            Self::TwiceSquare => 2 * j * j,
            Self::Triangular => j * (j + 1) / 2,
            Self::Pentagonal => j * (3 * j + 1) / 2,
            Self::TripleTriangular => 3 * j * (j + 1) / 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignRule {
    /// `(-1)^j`
    Alt,
    /// `(-1)^(j+1)`
    AltShift,
    /// `(-1)^(j(j+1)/2)`
    TriangularSign,
}

impl SignRule {
    pub fn sign(self, j: u64) -> i64 {
        let exponent = match self {
            Self::Alt => j,
            Self::AltShift => j + 1,
            Self::TriangularSign => j * (j + 1) / 2,
        };
        if exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRule {
    Unit,
    /// 1 for `j = 0`, 2 for `j > 0` (a two-sided theta sum folded onto `j ≥ 0`)
    TwoForPositiveJ,
}

/// The left-hand summand pattern `c(j) · ε(j) · stat(n - shift(j))`, `j ≥ j_start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShiftSequence {
    pub kind: ShiftKind,
    pub sign_rule: SignRule,
    pub j_start: u64,
    pub coefficient_rule: CoefficientRule,
}

impl ShiftSequence {
    const fn new(kind: ShiftKind, sign_rule: SignRule, j_start: u64) -> Self {
        Self {
            kind,
            sign_rule,
            j_start,
            coefficient_rule: CoefficientRule::Unit,
        }
    }

    const fn theta(kind: ShiftKind) -> Self {
        Self {
            kind,
            sign_rule: SignRule::Alt,
            j_start: 0,
            coefficient_rule: CoefficientRule::TwoForPositiveJ,
        }
    }

    /// `(shift, signed coefficient)` for every term with `shift <= n`.
    pub fn terms(&self, n: u32) -> Vec<(u32, i64)> {
        let mut out = Vec::new();
        for j in self.j_start.. {
            let shift = self.kind.shift(j);
            if shift > u64::from(n) {
                break;
            }
            let c = match self.coefficient_rule {
                CoefficientRule::TwoForPositiveJ if j > 0 => 2,
                _ => 1,
            };
            out.push((shift as u32, c * self.sign_rule.sign(j)));
        }
        out
    }
}

/// The family on the right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhsFamily {
    Family(StatisticFamily),
    /// `q(x/2)`, zero unless `x` is even
    HalfQ,
}

/// Everything needed to evaluate one statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Recipe {
    pub stat: StatKind,
    /// `None`: the left side is `stat(n)` itself.
    pub lhs: Option<ShiftSequence>,
    pub rhs: RhsFamily,
    /// Right side forced to 0 when `m ∤ n`.
    pub rhs_zero_unless_m_divides_n: bool,
}

impl Recipe {
    const fn new(stat: StatKind, lhs: Option<ShiftSequence>, rhs: RhsFamily) -> Self {
        Self {
            stat,
            lhs,
            rhs,
            rhs_zero_unless_m_divides_n: false,
        }
    }
}

use RhsFamily::{Family, HalfQ};
use ShiftKind::*;
use SignRule::*;
use StatKind::{A, S};
use StatisticFamily as F;

/// The eighteen identities checked by the verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    T13i,
    T13ii,
    C42,
    C44,
    C46,
    C47i,
    C49,
    C410,
    C52i,
    C52ii,
    C53i,
    C53ii,
    C62i,
    C62ii,
    C72i,
    C72ii,
    C73i,
    C73ii,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        Self::T13i,
        Self::T13ii,
        Self::C42,
        Self::C44,
        Self::C46,
        Self::C47i,
        Self::C49,
        Self::C410,
        Self::C52i,
        Self::C52ii,
        Self::C53i,
        Self::C53ii,
        Self::C62i,
        Self::C62ii,
        Self::C72i,
        Self::C72ii,
        Self::C73i,
        Self::C73ii,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::T13i => "T13i",
            Self::T13ii => "T13ii",
            Self::C42 => "C42",
            Self::C44 => "C44",
            Self::C46 => "C46",
            Self::C47i => "C47i",
            Self::C49 => "C49",
            Self::C410 => "C410",
            Self::C52i => "C52i",
            Self::C52ii => "C52ii",
            Self::C53i => "C53i",
            Self::C53ii => "C53ii",
            Self::C62i => "C62i",
            Self::C62ii => "C62ii",
            Self::C72i => "C72i",
            Self::C72ii => "C72ii",
            Self::C73i => "C73i",
            Self::C73ii => "C73ii",
        }
    }

    pub fn recipe(self) -> Recipe {
        let pent_alt = ShiftSequence::new(Pentagonal, Alt, 0);
        let pent_shift = ShiftSequence::new(Pentagonal, AltShift, 1);
        let eden = ShiftSequence::new(TripleTriangular, AltShift, 1);
        let tri_alt = ShiftSequence::new(Triangular, Alt, 0);
        let tri_shift = ShiftSequence::new(Triangular, AltShift, 1);
        let tri_sign = ShiftSequence::new(Triangular, TriangularSign, 0);
        let (stat, lhs, rhs) = match self {
            Self::T13i => (A, None, Family(F::P)),
            Self::T13ii => (S, None, Family(F::P)),
            Self::C42 => (A, Some(ShiftSequence::theta(Square)), Family(F::PEo)),
            Self::C44 => (S, Some(ShiftSequence::theta(Square)), Family(F::PEo)),
            Self::C46 => (A, Some(ShiftSequence::theta(TwiceSquare)), Family(F::QOdd)),
            Self::C47i => (S, Some(ShiftSequence::theta(TwiceSquare)), Family(F::QOdd)),
            Self::C49 => (A, Some(tri_sign), HalfQ),
            Self::C410 => (S, Some(tri_sign), HalfQ),
            Self::C52i => (A, Some(pent_alt), Family(F::NRank)),
            Self::C52ii => (A, Some(pent_shift), Family(F::RRank)),
            Self::C53i => (S, Some(pent_alt), Family(F::NRank)),
            Self::C53ii => (S, Some(pent_shift), Family(F::RRank)),
            Self::C62i => (A, Some(eden), Family(F::GEden)),
            Self::C62ii => (S, Some(eden), Family(F::GEden)),
            Self::C72i => (A, Some(tri_alt), Family(F::CCrank)),
            Self::C72ii => (A, Some(tri_shift), Family(F::CrankNegative)),
            Self::C73i => (S, Some(tri_alt), Family(F::CCrank)),
            Self::C73ii => (S, Some(tri_shift), Family(F::CrankNegative)),
        };
        Recipe::new(stat, lhs, rhs)
    }

    /// How this implementation reads a statement whose printed form is
    /// ambiguous or wrong, and the evidence for it.
    pub fn convention(self) -> Option<&'static str> {
        match self {
            Self::C47i => Some(
                "right side uses n - mj (s_m carries no residue r); printed shift n - mj - r is ill-defined",
            ),
            Self::C49 | Self::C410 => Some(
                "left sum starts at j = 0; the printed j = 1 start fails (see variants C49_printed, C410_printed)",
            ),
            Self::C62i => Some(
                "left sum starts at j = 1 with sign (-1)^(j+1); the printed j = 0 start fails (see variant C62i_printed)",
            ),
            Self::C72ii | Self::C73ii => Some(
                "right side counts partitions with negative crank; D(n) = #{crank > 0} differs from it at n = 1, \
                 so the printed form fails whenever some n - mj - r = 1 (see variants C72ii_printed, C73ii_printed)",
            ),
            _ => None,
        }
    }
}

/// Printed forms that do not hold, kept so the verifier can exhibit where
/// they fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    /// C49 with its left sum starting at `j = 1`
    C49Printed,
    /// C410 with its left sum starting at `j = 1`
    C410Printed,
    /// C410 with the right side set to 0 when `m ∤ n`
    C410Ms,
    /// C62i with its left sum starting at `j = 0`
    C62iPrinted,
    /// C72ii with `D(n) = #{crank > 0}` on the right
    C72iiPrinted,
    /// C73ii with `D(n) = #{crank > 0}` on the right
    C73iiPrinted,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Self::C49Printed,
        Self::C410Printed,
        Self::C410Ms,
        Self::C62iPrinted,
        Self::C72iiPrinted,
        Self::C73iiPrinted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::C49Printed => "C49_printed",
            Self::C410Printed => "C410_printed",
            Self::C410Ms => "C410_MS",
            Self::C62iPrinted => "C62i_printed",
            Self::C72iiPrinted => "C72ii_printed",
            Self::C73iiPrinted => "C73ii_printed",
        }
    }

    pub fn base(self) -> IdentityId {
        match self {
            Self::C49Printed => IdentityId::C49,
            Self::C410Printed | Self::C410Ms => IdentityId::C410,
            Self::C62iPrinted => IdentityId::C62i,
            Self::C72iiPrinted => IdentityId::C72ii,
            Self::C73iiPrinted => IdentityId::C73ii,
        }
    }

    pub fn recipe(self) -> Recipe {
        let mut recipe = self.base().recipe();
        match self {
            Self::C49Printed | Self::C410Printed => {
                recipe.lhs = Some(ShiftSequence::new(Triangular, TriangularSign, 1));
            }
            Self::C410Ms => recipe.rhs_zero_unless_m_divides_n = true,
            Self::C62iPrinted => {
                recipe.lhs = Some(ShiftSequence::new(TripleTriangular, AltShift, 0));
            }
            Self::C72iiPrinted | Self::C73iiPrinted => recipe.rhs = Family(F::DCrank),
        }
        recipe
    }
}

/// A statement the verifier can evaluate: a genuine identity or a printed
/// variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Identity(IdentityId),
    Variant(Variant),
}

impl Statement {
    pub fn all_identities() -> Vec<Statement> {
        IdentityId::ALL.into_iter().map(Statement::Identity).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Identity(id) => id.name(),
            Self::Variant(v) => v.name(),
        }
    }

    pub fn recipe(self) -> Recipe {
        match self {
            Self::Identity(id) => id.recipe(),
            Self::Variant(v) => v.recipe(),
        }
    }

    /// Genuine identities must hold; variants are expected to fail somewhere.
    pub fn is_genuine(self) -> bool {
        matches!(self, Self::Identity(_))
    }

    pub fn uses_residue(self) -> bool {
        self.recipe().stat == StatKind::A
    }

    pub fn convention(self) -> Option<&'static str> {
        match self {
            Self::Identity(id) => id.convention(),
            Self::Variant(_) => None,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(id) = IdentityId::ALL.into_iter().find(|id| id.name() == s) {
            return Ok(Self::Identity(id));
        }
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .map(Self::Variant)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Statement>()? {
            Statement::Identity(id) => Ok(id),
            Statement::Variant(_) => Err(Error::UnknownIdentity(s.to_string())),
        }
    }
}

/// A source of statistic values.
pub trait Evaluator: Sync {
    fn stat_a(&self, r: u32, m: u32, n: u32) -> Result<SignedCounter>;
    fn stat_s(&self, m: u32, n: u32) -> Result<SignedCounter>;
    fn family(&self, family: StatisticFamily, n: u32) -> Result<SignedCounter>;
}

impl Evaluator for SeriesTables {
    fn stat_a(&self, r: u32, m: u32, n: u32) -> Result<SignedCounter> {
        SeriesTables::stat_a(self, r, m, n).map(BigInt::from)
    }

    fn stat_s(&self, m: u32, n: u32) -> Result<SignedCounter> {
        SeriesTables::stat_s(self, m, n).map(BigInt::from)
    }

    fn family(&self, family: StatisticFamily, n: u32) -> Result<SignedCounter> {
        self.value(family, n).cloned()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum OracleKey {
    A(u32, u32, u32),
    S(u32, u32),
    Family(StatisticFamily, u32),
}

/// Enumeration-backed evaluator. Results are memoized; the cache is shared
/// between threads.
#[derive(Default)]
pub struct Oracle {
    cache: Mutex<HashMap<OracleKey, SignedCounter>>,
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    fn cached(&self, key: OracleKey, compute: impl FnOnce() -> Result<SignedCounter>) -> Result<SignedCounter> {
        if let Some(v) = self.cache.lock().expect("oracle cache").get(&key) {
            return Ok(v.clone());
        }
        let v = compute()?;
        self.cache
            .lock()
            .expect("oracle cache")
            .insert(key, v.clone());
        Ok(v)
    }
}

impl Evaluator for Oracle {
    fn stat_a(&self, r: u32, m: u32, n: u32) -> Result<SignedCounter> {
        self.cached(OracleKey::A(r, m, n), || {
            statistics::stat_a(r, m, n).map(BigInt::from)
        })
    }

    fn stat_s(&self, m: u32, n: u32) -> Result<SignedCounter> {
        self.cached(OracleKey::S(m, n), || statistics::stat_s(m, n).map(BigInt::from))
    }

    fn family(&self, family: StatisticFamily, n: u32) -> Result<SignedCounter> {
        self.cached(OracleKey::Family(family, n), || Ok(statistics::value(family, n)))
    }
}

fn check_params(recipe: &Recipe, m: u32, r: Option<u32>) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    match (recipe.stat, r) {
        (StatKind::A, Some(r)) if r < m => Ok(()),
        (StatKind::A, Some(r)) => Err(Error::ResidueOutOfRange { r, m }),
        (StatKind::A, None) => Err(Error::Precondition(
            "identity on a_{r,m} needs a residue r".into(),
        )),
        (StatKind::S, None) => Ok(()),
        (StatKind::S, Some(_)) => Err(Error::Precondition(
            "identity on s_m takes no residue".into(),
        )),
    }
}

fn stat_value(ev: &dyn Evaluator, recipe: &Recipe, m: u32, r: Option<u32>, n: u32) -> Result<SignedCounter> {
    match recipe.stat {
        StatKind::A => ev.stat_a(r.expect("checked"), m, n),
        StatKind::S => ev.stat_s(m, n),
    }
}

fn rhs_family_value(ev: &dyn Evaluator, rhs: RhsFamily, x: u32) -> Result<SignedCounter> {
    match rhs {
        Family(f) => ev.family(f, x),
        HalfQ if x.is_multiple_of(2) => ev.family(F::Q, x / 2),
        HalfQ => Ok(SignedCounter::zero()),
    }
}

/// Left side of `stmt` at `(m, r, n)`. Terms with a negative argument vanish.
pub fn lhs(ev: &dyn Evaluator, stmt: Statement, m: u32, r: Option<u32>, n: u32) -> Result<SignedCounter> {
    let recipe = stmt.recipe();
    check_params(&recipe, m, r)?;
    match recipe.lhs {
        None => stat_value(ev, &recipe, m, r, n),
        Some(seq) => {
            let mut acc = SignedCounter::zero();
            for (shift, c) in seq.terms(n) {
                acc += stat_value(ev, &recipe, m, r, n - shift)? * c;
            }
            Ok(acc)
        }
    }
}

/// `(weight, argument)` pairs of the right-hand sum, zero weights omitted:
/// `(mj + r, n - mj - r)` for `a_{r,m}`, `(j, n - mj)` for `s_m`.
pub fn rhs_terms(stmt: Statement, m: u32, r: Option<u32>, n: u32) -> Vec<(u32, u32)> {
    let recipe = stmt.recipe();
    let mut out = Vec::new();
    if recipe.rhs_zero_unless_m_divides_n && !n.is_multiple_of(m) {
        return out;
    }
    match recipe.stat {
        StatKind::A => {
            let mut part = r.unwrap_or(0);
            while part <= n {
                if part > 0 {
                    out.push((part, n - part));
                }
                part += m;
            }
        }
        StatKind::S => {
            let mut j = 1;
            while m * j <= n {
                out.push((j, n - m * j));
                j += 1;
            }
        }
    }
    out
}

/// Right side of `stmt` at `(m, r, n)`.
pub fn rhs(ev: &dyn Evaluator, stmt: Statement, m: u32, r: Option<u32>, n: u32) -> Result<SignedCounter> {
    let recipe = stmt.recipe();
    check_params(&recipe, m, r)?;
    let mut acc = SignedCounter::zero();
    for (weight, x) in rhs_terms(stmt, m, r, n) {
        acc += rhs_family_value(ev, recipe.rhs, x)? * weight;
    }
    Ok(acc)
}

/// Which route produced a report row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvalPath {
    Oracle,
    Fast,
    Both,
}

impl EvalPath {
    pub fn name(self) -> &'static str {
        match self {
            Self::Oracle => "ORACLE",
            Self::Fast => "FAST",
            Self::Both => "BOTH",
        }
    }
}

impl fmt::Display for EvalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One evaluated `(statement, m, r, n)` tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub statement: Statement,
    pub m: u32,
    pub r: Option<u32>,
    pub n: u32,
    /// Left side from the fast route when it ran, else from the oracle.
    pub lhs: SignedCounter,
    pub rhs: SignedCounter,
    /// Sides agree, and with `Both` the two routes also agree with each other.
    pub equal: bool,
    pub path: EvalPath,
    /// Oracle values when `path == Both`.
    pub oracle: Option<(SignedCounter, SignedCounter)>,
}

impl IdentityReport {
    pub fn row(&self) -> ReportRow {
        ReportRow {
            identity: self.statement.name().to_string(),
            m: self.m,
            r: self.r,
            n: self.n,
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            equal: self.equal,
            path: self.path.name().to_string(),
        }
    }
}

/// Flat serialization of a report: `identity,m,r,n,lhs,rhs,equal,path`.
/// Big integers are written as decimal strings; `r` is empty for `s_m`
/// identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub identity: String,
    pub m: u32,
    pub r: Option<u32>,
    pub n: u32,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub path: String,
}

/// Routes to run. The oracle only runs up to `oracle_cutoff`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathSelection {
    Fast,
    Oracle,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_min: u32,
    pub n_max: u32,
    pub m_min: u32,
    pub m_max: u32,
    /// restricts `a_{r,m}` identities to one residue
    pub r: Option<u32>,
    pub oracle_cutoff: u32,
    pub paths: PathSelection,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            n_min: 0,
            n_max: 40,
            m_min: 1,
            m_max: 5,
            r: None,
            oracle_cutoff: 35,
            paths: PathSelection::Both,
        }
    }
}

/// Evaluates one tuple along the requested routes. `fast` must cover `n`
/// when the fast route is requested.
#[allow(clippy::too_many_arguments)]
pub fn evaluate(
    stmt: Statement,
    m: u32,
    r: Option<u32>,
    n: u32,
    paths: PathSelection,
    oracle_cutoff: u32,
    fast: &SeriesTables,
    oracle: &Oracle,
) -> Result<IdentityReport> {
    let run_oracle = paths != PathSelection::Fast && n <= oracle_cutoff;
    let run_fast = paths != PathSelection::Oracle;
    let fast_sides = if run_fast {
        Some((lhs(fast, stmt, m, r, n)?, rhs(fast, stmt, m, r, n)?))
    } else {
        None
    };
    let oracle_sides = if run_oracle {
        Some((lhs(oracle, stmt, m, r, n)?, rhs(oracle, stmt, m, r, n)?))
    } else {
        None
    };
    let (path, lhs_v, rhs_v, equal, oracle_kept) = match (fast_sides, oracle_sides) {
        (Some((fl, fr)), Some((ol, or))) => {
            let equal = fl == fr && ol == or && fl == ol;
            (EvalPath::Both, fl, fr, equal, Some((ol, or)))
        }
        (Some((fl, fr)), None) => {
            let equal = fl == fr;
            (EvalPath::Fast, fl, fr, equal, None)
        }
        (None, Some((ol, or))) => {
            let equal = ol == or;
            (EvalPath::Oracle, ol, or, equal, None)
        }
        (None, None) => {
            return Err(Error::Precondition(format!(
                "oracle-only evaluation requested at n = {n} above the oracle cutoff {oracle_cutoff}"
            )))
        }
    };
    Ok(IdentityReport {
        statement: stmt,
        m,
        r,
        n,
        lhs: lhs_v,
        rhs: rhs_v,
        equal,
        path,
        oracle: oracle_kept,
    })
}

/// The `(m, r)` grid for one statement.
pub fn parameter_grid(stmt: Statement, config: &VerifyConfig) -> Vec<(u32, Option<u32>)> {
    let mut out = Vec::new();
    for m in config.m_min.max(1)..=config.m_max {
        if stmt.uses_residue() {
            match config.r {
                Some(r) if r < m => out.push((m, Some(r))),
                Some(_) => {}
                None => out.extend((0..m).map(|r| (m, Some(r)))),
            }
        } else {
            out.push((m, None));
        }
    }
    out
}

/// Every tuple of the sweep, in report order: statement order as given,
/// then `m`, `r`, `n` ascending.
pub fn sweep_tuples(statements: &[Statement], config: &VerifyConfig) -> Vec<(Statement, u32, Option<u32>, u32)> {
    let mut out = Vec::new();
    for &stmt in statements {
        for (m, r) in parameter_grid(stmt, config) {
            for n in config.n_min..=config.n_max {
                out.push((stmt, m, r, n));
            }
        }
    }
    out
}

/// Runs the sweep in parallel and returns reports in deterministic order.
/// Mismatches are reported as rows with `equal == false`.
pub fn verify(
    statements: &[Statement],
    config: &VerifyConfig,
    fast: &SeriesTables,
    oracle: &Oracle,
) -> Result<Vec<IdentityReport>> {
    if config.paths != PathSelection::Oracle && fast.n_max() < config.n_max {
        return Err(Error::OutOfRange(config.n_max, fast.n_max()));
    }
    sweep_tuples(statements, config)
        .into_par_iter()
        .map(|(stmt, m, r, n)| {
            evaluate(stmt, m, r, n, config.paths, config.oracle_cutoff, fast, oracle)
        })
        .collect()
}

/// Genuine-identity rows that failed.
pub fn failures(reports: &[IdentityReport]) -> impl Iterator<Item = &IdentityReport> {
    reports
        .iter()
        .filter(|r| r.statement.is_genuine() && !r.equal)
}
