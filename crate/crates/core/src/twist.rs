//! Sign functions on groups: the built-in twists and their recursive
//! definitions, axiom checkers, table materialization, and the pointwise
//! (abelian) product of twists.
//!
//! A twist sgn: G×G → {−1,+1} deforms the group algebra product via
//! i_p i_q = sgn(p,q) i_{pq}. The built-ins live on the XOR group; arbitrary
//! sign tables over any validated [`FiniteGroup`] are supported through the
//! `Table` kind.

use serde::{Deserialize, Serialize};

use crate::dyadic::{bit_and, bit_sum, parity_sign, GroupElement, Sign};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Dimension-exponent cap for materialized twist tables (4ⁿ entries).
pub const MAX_TABLE_EXP: u32 = 12;

/// Order cap for exhaustive property scans; the associativity loop is cubic.
pub const MAX_SCAN_ORDER: usize = 256;

/// Order cap for brute-force twist enumeration (2^(order²) candidates).
pub const MAX_ENUMERATE_ORDER: usize = 4;

/// The Cayley-Dickson sign, by structural recursion on the trailing bits of
/// the pair. The recursion, not a closed form, is the definition; the
/// independent pair-product oracle cross-checks it.
///
/// Rules, with p = 2r(+1), q = 2s(+1):
/// 1. cyd(0,0) = 1
/// 2. cyd(2r,2s) = cyd(r,s)
/// 3. cyd(2r,2s+1) = −cyd(r,s) for r ≠ 0
/// 4. cyd(0,2s+1) = cyd(0,s)
/// 5. cyd(2r+1,2s) = cyd(s,r)
/// 6. cyd(2r+1,2s+1) = cyd(s,r) for r ≠ 0
/// 7. cyd(1,2s+1) = −cyd(s,0)
///
/// The r = 0 rules (4 and 7) take precedence over rules 3 and 6.
pub fn cayley_dickson_sign(p: GroupElement, q: GroupElement) -> Sign {
    if p == 0 && q == 0 {
        return 1; // rule 1
    }
    match (p & 1, q & 1) {
        (0, 0) => cayley_dickson_sign(p >> 1, q >> 1), // rule 2
        (0, 1) => {
            if p == 0 {
                cayley_dickson_sign(0, q >> 1) // rule 4
            } else {
                -cayley_dickson_sign(p >> 1, q >> 1) // rule 3
            }
        }
        (1, 0) => cayley_dickson_sign(q >> 1, p >> 1), // rule 5
        (1, 1) => {
            if p == 1 {
                -cayley_dickson_sign(q >> 1, 0) // rule 7
            } else {
                cayley_dickson_sign(q >> 1, p >> 1) // rule 6
            }
        }
        _ => unreachable!(),
    }
}

/// The Clifford sign, by structural recursion:
/// clf(0,0) = 1; clf(2p,2q) = clf(2p+1,2q) = clf(p,q);
/// clf(2p,2q+1) = clf(2p+1,2q+1) = (−1)^⟨p⟩ clf(p,q).
pub fn clifford_sign(p: GroupElement, q: GroupElement) -> Sign {
    if p == 0 && q == 0 {
        return 1;
    }
    let rest = clifford_sign(p >> 1, q >> 1);
    if q & 1 == 1 {
        parity_sign(bit_sum(p >> 1)) * rest
    } else {
        rest
    }
}

/// A sign function given by a rule on the XOR group, or by an explicit
/// table over an arbitrary finite group.
#[derive(Debug, Clone, PartialEq)]
pub enum Twist {
    /// The Cayley-Dickson twist (ℂ, ℍ, 𝕆, sedenions, …).
    CayleyDickson,
    /// The Clifford twist of the all-positive signature.
    Clifford,
    /// (−1)^⟨p∧q⟩; its sign matrix is a Hadamard matrix.
    Hadamard,
    /// Constant +1; yields the dyadic convolution.
    Trivial,
    /// (−1)^(⟨p⟩⟨q⟩).
    GradeParity,
    /// (−1)^⟨p⊕q⟩; proper but not associative.
    XorParity,
    /// An explicit sign table over a finite group.
    Table(TableTwist),
}

/// A twist stored as an explicit row-major sign matrix over its group.
#[derive(Debug, Clone, PartialEq)]
pub struct TableTwist {
    group: FiniteGroup,
    signs: Vec<Sign>,
}

impl TableTwist {
    pub fn new(group: FiniteGroup, signs: Vec<Sign>) -> Result<Self> {
        let order = group.order();
        if signs.len() != order * order {
            return Err(Error::DimensionMismatch {
                left: signs.len(),
                right: order * order,
            });
        }
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::MalformedCsv {
                reason: format!("sign entry {bad} is not ±1"),
            });
        }
        Ok(TableTwist { group, signs })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn get(&self, p: GroupElement, q: GroupElement) -> Sign {
        self.signs[p as usize * self.group.order() + q as usize]
    }
}

impl Twist {
    /// Evaluates the sign at (p,q). For rule-based kinds the pair may be any
    /// non-negative integers; for `Table` both must index the carried group.
    #[inline]
    pub fn eval(&self, p: GroupElement, q: GroupElement) -> Sign {
        match self {
            Twist::CayleyDickson => cayley_dickson_sign(p, q),
            Twist::Clifford => clifford_sign(p, q),
            Twist::Hadamard => parity_sign(bit_sum(bit_and(p, q))),
            Twist::Trivial => 1,
            Twist::GradeParity => parity_sign(bit_sum(p) * bit_sum(q)),
            Twist::XorParity => parity_sign(bit_sum(p ^ q)),
            Twist::Table(t) => t.get(p, q),
        }
    }

    /// Short kind label, also accepted by [`Twist::parse_kind`].
    pub fn kind_name(&self) -> &'static str {
        match self {
            Twist::CayleyDickson => "cyd",
            Twist::Clifford => "clf",
            Twist::Hadamard => "hadamard",
            Twist::Trivial => "trivial",
            Twist::GradeParity => "grade-parity",
            Twist::XorParity => "xor-parity",
            Twist::Table(_) => "table",
        }
    }

    /// Parses a rule-based kind name.
    pub fn parse_kind(name: &str) -> Option<Twist> {
        match name {
            "cyd" => Some(Twist::CayleyDickson),
            "clf" => Some(Twist::Clifford),
            "hadamard" => Some(Twist::Hadamard),
            "trivial" => Some(Twist::Trivial),
            "grade-parity" => Some(Twist::GradeParity),
            "xor-parity" => Some(Twist::XorParity),
            _ => None,
        }
    }

    /// All rule-based twists, used by closure tests over the built-in set.
    pub fn builtins() -> [Twist; 6] {
        [
            Twist::CayleyDickson,
            Twist::Clifford,
            Twist::Hadamard,
            Twist::Trivial,
            Twist::GradeParity,
            Twist::XorParity,
        ]
    }
}

/// The five twist axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistProperty {
    Identive,
    Positive,
    Invertive,
    Associative,
    Proper,
}

/// Result of an exhaustive axiom scan, with the first counterexample (in
/// row-major (p,q) or (p,q,r) order) for each failed property.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub twist: String,
    pub group_order: usize,
    pub identive: bool,
    pub positive: bool,
    pub invertive: bool,
    pub associative: bool,
    pub proper: bool,
    /// First p with sgn(p,e) ≠ 1 or sgn(e,p) ≠ 1.
    pub identive_witness: Option<GroupElement>,
    /// First p with sgn(p,p⁻¹) ≠ sgn(p⁻¹,p).
    pub invertive_witness: Option<GroupElement>,
    /// First (p,q,r) violating sgn(p,q)sgn(pq,r) = sgn(p,qr)sgn(q,r).
    pub associative_witness: Option<(GroupElement, GroupElement, GroupElement)>,
    /// First (p,q) violating either cancellation law of a proper twist.
    pub proper_witness: Option<(GroupElement, GroupElement)>,
}

impl PropertyReport {
    pub fn has(&self, prop: TwistProperty) -> bool {
        match prop {
            TwistProperty::Identive => self.identive,
            TwistProperty::Positive => self.positive,
            TwistProperty::Invertive => self.invertive,
            TwistProperty::Associative => self.associative,
            TwistProperty::Proper => self.proper,
        }
    }

    pub fn render_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "twist {} on group of order {}\n",
            self.twist, self.group_order
        );
        out.push_str(&format!("  identive:    {}", yn(self.identive)));
        if let Some(p) = self.identive_witness {
            out.push_str(&format!("   (witness p={p})"));
        }
        out.push('\n');
        out.push_str(&format!("  positive:    {}\n", yn(self.positive)));
        out.push_str(&format!("  invertive:   {}", yn(self.invertive)));
        if let Some(p) = self.invertive_witness {
            out.push_str(&format!("   (witness p={p})"));
        }
        out.push('\n');
        out.push_str(&format!("  associative: {}", yn(self.associative)));
        if let Some((p, q, r)) = self.associative_witness {
            out.push_str(&format!("   (witness p={p} q={q} r={r})"));
        }
        out.push('\n');
        out.push_str(&format!("  proper:      {}", yn(self.proper)));
        if let Some((p, q)) = self.proper_witness {
            out.push_str(&format!("   (witness p={p} q={q})"));
        }
        out.push('\n');
        out
    }
}

/// Checks all five axioms of `twist` over `group` exhaustively.
///
/// A `Table` twist must carry the very group it is checked against.
pub fn check_properties(twist: &Twist, group: &FiniteGroup) -> Result<PropertyReport> {
    let order = group.order();
    if order > MAX_SCAN_ORDER {
        return Err(Error::GroupTooLarge {
            order,
            max: MAX_SCAN_ORDER,
        });
    }
    if let Twist::Table(t) = twist {
        if t.group() != group {
            return Err(Error::GroupMismatch);
        }
    }
    let signs: Vec<Sign> = (0..order as GroupElement)
        .flat_map(|p| (0..order as GroupElement).map(move |q| twist.eval(p, q)))
        .collect();
    Ok(report_for_signs(twist.kind_name(), &signs, group))
}

/// Axiom scan over an explicit row-major sign matrix.
fn report_for_signs(label: &str, signs: &[Sign], group: &FiniteGroup) -> PropertyReport {
    let order = group.order();
    let at = |p: GroupElement, q: GroupElement| signs[p as usize * order + q as usize];
    let e = group.identity();

    let positive = at(e, e) == 1;

    let mut identive = true;
    let mut identive_witness = None;
    for p in 0..order as GroupElement {
        if at(p, e) != 1 || at(e, p) != 1 {
            identive = false;
            identive_witness = Some(p);
            break;
        }
    }

    let mut invertive = true;
    let mut invertive_witness = None;
    for p in 0..order as GroupElement {
        let pi = group.inverse(p);
        if at(p, pi) != at(pi, p) {
            invertive = false;
            invertive_witness = Some(p);
            break;
        }
    }

    let mut associative = true;
    let mut associative_witness = None;
    'assoc: for p in 0..order as GroupElement {
        for q in 0..order as GroupElement {
            let pq = group.op(p, q);
            for r in 0..order as GroupElement {
                let qr = group.op(q, r);
                if at(p, q) * at(pq, r) != at(p, qr) * at(q, r) {
                    associative = false;
                    associative_witness = Some((p, q, r));
                    break 'assoc;
                }
            }
        }
    }

    let mut proper = true;
    let mut proper_witness = None;
    'proper: for p in 0..order as GroupElement {
        let pi = group.inverse(p);
        for q in 0..order as GroupElement {
            let qi = group.inverse(q);
            let law1 = at(p, q) * at(q, qi) == at(group.op(p, q), qi);
            let law2 = at(pi, p) * at(p, q) == at(pi, group.op(p, q));
            if !law1 || !law2 {
                proper = false;
                proper_witness = Some((p, q));
                break 'proper;
            }
        }
    }

    PropertyReport {
        twist: label.to_string(),
        group_order: order,
        identive,
        positive,
        invertive,
        associative,
        proper,
        identive_witness,
        invertive_witness,
        associative_witness,
        proper_witness,
    }
}

/// The abelian-group product of twists: (a·b)(p,q) = a(p,q)·b(p,q),
/// materialized over `group`.
///
/// Any `Table` operand must already live on `group`.
pub fn pointwise_product(a: &Twist, b: &Twist, group: &FiniteGroup) -> Result<Twist> {
    for t in [a, b] {
        if let Twist::Table(t) = t {
            if t.group() != group {
                return Err(Error::GroupMismatch);
            }
        }
    }
    let order = group.order();
    let mut signs = Vec::with_capacity(order * order);
    for p in 0..order as GroupElement {
        for q in 0..order as GroupElement {
            signs.push(a.eval(p, q) * b.eval(p, q));
        }
    }
    Ok(Twist::Table(TableTwist::new(group.clone(), signs)?))
}

/// Brute-force enumeration of every sign function on `group` satisfying all
/// of `required`, in lexicographic table order (+1 before −1, row-major).
///
/// There are 2^(order²) candidates, hence the hard cap at order 4.
pub fn enumerate_twists(group: &FiniteGroup, required: &[TwistProperty]) -> Result<Vec<Twist>> {
    let order = group.order();
    if order > MAX_ENUMERATE_ORDER {
        return Err(Error::GroupTooLarge {
            order,
            max: MAX_ENUMERATE_ORDER,
        });
    }
    let cells = order * order;
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << cells) {
        let signs: Vec<Sign> = (0..cells)
            .map(|k| {
                if mask >> (cells - 1 - k) & 1 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect();
        let report = report_for_signs("candidate", &signs, group);
        if required.iter().all(|&p| report.has(p)) {
            found.push(Twist::Table(TableTwist::new(group.clone(), signs)?));
        }
    }
    Ok(found)
}

/// A twist cached as a 2ⁿ×2ⁿ sign matrix over the dyadic group G_n.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistTable {
    kind: String,
    n: u32,
    signs: Vec<Sign>,
}

#[derive(Serialize, Deserialize)]
struct TwistTableJson {
    kind: String,
    n: u32,
    signs: Vec<Vec<Sign>>,
}

impl TwistTable {
    /// Evaluates `twist` on every pair of G_n. A `Table` twist must carry a
    /// group of order exactly 2ⁿ.
    pub fn materialize(twist: &Twist, n: u32) -> Result<Self> {
        crate::dyadic::check_dimension(n, MAX_TABLE_EXP)?;
        let dim = 1usize << n;
        if let Twist::Table(t) = twist {
            if t.group().order() != dim {
                return Err(Error::GroupMismatch);
            }
        }
        let mut signs = Vec::with_capacity(dim * dim);
        for p in 0..dim as GroupElement {
            for q in 0..dim as GroupElement {
                signs.push(twist.eval(p, q));
            }
        }
        Ok(TwistTable {
            kind: twist.kind_name().to_string(),
            n,
            signs,
        })
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        1usize << self.n
    }

    #[inline]
    pub fn get(&self, p: GroupElement, q: GroupElement) -> Sign {
        self.signs[((p as usize) << self.n) | q as usize]
    }

    /// CSV of ±1 integers: row p, column q.
    pub fn to_csv(&self) -> String {
        let dim = self.dim();
        let mut out = String::new();
        for p in 0..dim {
            let row: Vec<String> = (0..dim)
                .map(|q| self.signs[p * dim + q].to_string())
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses a square ±1 CSV matrix of size 2ⁿ×2ⁿ; the kind is recorded as
    /// `table`.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut signs = Vec::new();
        let mut rows = 0usize;
        let mut width = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<Sign> = line
                .split(',')
                .map(|cell| match cell.trim() {
                    "1" | "+1" => Ok(1),
                    "-1" => Ok(-1),
                    other => Err(Error::MalformedCsv {
                        reason: format!("line {}: `{other}` is not ±1", i + 1),
                    }),
                })
                .collect::<Result<_>>()?;
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::MalformedCsv {
                        reason: format!("line {}: ragged row", i + 1),
                    })
                }
                _ => {}
            }
            rows += 1;
            signs.extend(row);
        }
        let dim = rows;
        if width != Some(dim) || dim == 0 || !dim.is_power_of_two() {
            return Err(Error::MalformedCsv {
                reason: format!("expected a square 2ⁿ×2ⁿ matrix, got {rows}×{width:?}"),
            });
        }
        Ok(TwistTable {
            kind: "table".to_string(),
            n: dim.trailing_zeros(),
            signs,
        })
    }

    pub fn to_json(&self) -> String {
        let dim = self.dim();
        let doc = TwistTableJson {
            kind: self.kind.clone(),
            n: self.n,
            signs: (0..dim)
                .map(|p| self.signs[p * dim..(p + 1) * dim].to_vec())
                .collect(),
        };
        serde_json::to_string(&doc).expect("twist table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TwistTableJson = serde_json::from_str(text)?;
        let dim = 1usize << doc.n;
        let mut signs = Vec::with_capacity(dim * dim);
        if doc.signs.len() != dim {
            return Err(Error::DimensionMismatch {
                left: doc.signs.len(),
                right: dim,
            });
        }
        for row in &doc.signs {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: row.len(),
                    right: dim,
                });
            }
            for &s in row {
                if s != 1 && s != -1 {
                    return Err(Error::MalformedCsv {
                        reason: format!("sign entry {s} is not ±1"),
                    });
                }
                signs.push(s);
            }
        }
        Ok(TwistTable {
            kind: doc.kind,
            n: doc.n,
            signs,
        })
    }

    /// Rebuilds a [`Twist::Table`] over the dyadic group of this table.
    pub fn to_twist(&self) -> Result<Twist> {
        let group = FiniteGroup::dyadic(self.n)?;
        Ok(Twist::Table(TableTwist::new(group, self.signs.clone())?))
    }
}
