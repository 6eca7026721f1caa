//! Small finite groups given by an explicit Cayley table, so twist axioms
//! stated for arbitrary groups can be instantiated beyond the dyadic case.

use crate::dyadic::{self, GroupElement};
use crate::error::{Error, Result};

/// Order cap for table-backed groups; the associativity check at
/// construction is O(order³).
pub const MAX_TABLE_ORDER: usize = 256;

/// Dimension-exponent cap for materialized dyadic groups.
pub const MAX_DYADIC_EXP: u32 = 16;

/// A finite group, either backed by a validated Cayley table or the dyadic
/// group G_n whose product is computed on the fly.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    repr: Repr,
}

#[derive(Debug, Clone)]
enum Repr {
    Table {
        order: usize,
        table: Vec<GroupElement>,
        identity: GroupElement,
        inverse: Vec<GroupElement>,
    },
    /// G_n under XOR: identity 0, every element self-inverse. Associativity
    /// holds by construction, so no table is materialized.
    Dyadic { n: u32 },
}

impl FiniteGroup {
    /// The one-element group.
    pub fn trivial() -> Self {
        FiniteGroup {
            repr: Repr::Dyadic { n: 0 },
        }
    }

    /// The dyadic group G_n of order 2ⁿ.
    pub fn dyadic(n: u32) -> Result<Self> {
        dyadic::check_dimension(n, MAX_DYADIC_EXP)?;
        Ok(FiniteGroup {
            repr: Repr::Dyadic { n },
        })
    }

    /// Validates a Cayley table and builds the group.
    ///
    /// Checks, in order: squareness and entry range, Latin-square rows and
    /// columns, a two-sided identity, two-sided inverses, and associativity
    /// over all triples.
    pub fn from_table(table: &[Vec<GroupElement>]) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::NotAGroup {
                reason: "empty table".into(),
            });
        }
        if order > MAX_TABLE_ORDER {
            return Err(Error::GroupTooLarge {
                order,
                max: MAX_TABLE_ORDER,
            });
        }
        for (p, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup {
                    reason: format!("row {p} has length {}, expected {order}", row.len()),
                });
            }
            for (q, &v) in row.iter().enumerate() {
                if v as usize >= order {
                    return Err(Error::NotAGroup {
                        reason: format!("entry ({p},{q}) = {v} out of range"),
                    });
                }
            }
        }
        let flat: Vec<GroupElement> = table.iter().flatten().copied().collect();
        let at = |p: usize, q: usize| flat[p * order + q];

        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; order];
        for p in 0..order {
            seen.fill(false);
            for q in 0..order {
                let v = at(p, q) as usize;
                if seen[v] {
                    return Err(Error::NotAGroup {
                        reason: format!("row {p} repeats element {v}"),
                    });
                }
                seen[v] = true;
            }
        }
        for q in 0..order {
            seen.fill(false);
            for p in 0..order {
                let v = at(p, q) as usize;
                if seen[v] {
                    return Err(Error::NotAGroup {
                        reason: format!("column {q} repeats element {v}"),
                    });
                }
                seen[v] = true;
            }
        }

        // Two-sided identity.
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|q| at(e, q) == q as GroupElement && at(q, e) == q as GroupElement)
            })
            .ok_or_else(|| Error::NotAGroup {
                reason: "no identity element".into(),
            })?;

        // Two-sided inverses.
        let inverse = (0..order)
            .map(|p| {
                (0..order)
                    .find(|&q| {
                        at(p, q) == identity as GroupElement && at(q, p) == identity as GroupElement
                    })
                    .map(|q| q as GroupElement)
                    .ok_or_else(|| Error::NotAGroup {
                        reason: format!("element {p} has no two-sided inverse"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;

        // Associativity over all triples; O(order³), hence the order cap.
        for p in 0..order {
            for q in 0..order {
                let pq = at(p, q) as usize;
                for r in 0..order {
                    if at(pq, r) != at(p, at(q, r) as usize) {
                        return Err(Error::NotAGroup {
                            reason: format!("associativity fails at ({p},{q},{r})"),
                        });
                    }
                }
            }
        }

        Ok(FiniteGroup {
            repr: Repr::Table {
                order,
                table: flat,
                identity: identity as GroupElement,
                inverse,
            },
        })
    }

    pub fn order(&self) -> usize {
        match &self.repr {
            Repr::Table { order, .. } => *order,
            Repr::Dyadic { n } => 1usize << n,
        }
    }

    /// The group product of elements `p` and `q` (both must be in range).
    #[inline]
    pub fn op(&self, p: GroupElement, q: GroupElement) -> GroupElement {
        match &self.repr {
            Repr::Table { order, table, .. } => table[p as usize * order + q as usize],
            Repr::Dyadic { .. } => p ^ q,
        }
    }

    #[inline]
    pub fn identity(&self) -> GroupElement {
        match &self.repr {
            Repr::Table { identity, .. } => *identity,
            Repr::Dyadic { .. } => 0,
        }
    }

    #[inline]
    pub fn inverse(&self, p: GroupElement) -> GroupElement {
        match &self.repr {
            Repr::Table { inverse, .. } => inverse[p as usize],
            Repr::Dyadic { .. } => p,
        }
    }

    /// True when this group is a dyadic group representation.
    pub fn is_dyadic(&self) -> bool {
        matches!(self.repr, Repr::Dyadic { .. })
    }

    /// The Cayley table as CSV: one row per left factor, entries comma
    /// separated.
    pub fn to_csv(&self) -> String {
        let order = self.order();
        let mut out = String::new();
        for p in 0..order as GroupElement {
            let row: Vec<String> = (0..order as GroupElement)
                .map(|q| self.op(p, q).to_string())
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses a Cayley table from CSV and validates it via [`from_table`].
    ///
    /// [`from_table`]: FiniteGroup::from_table
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut table = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: Vec<GroupElement> = line
                .split(',')
                .map(|cell| {
                    cell.trim().parse().map_err(|_| Error::MalformedCsv {
                        reason: format!("line {}: `{}` is not an integer", i + 1, cell.trim()),
                    })
                })
                .collect::<Result<_>>()?;
            table.push(row);
        }
        Self::from_table(&table)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        match (&self.repr, &other.repr) {
            (Repr::Dyadic { n: a }, Repr::Dyadic { n: b }) => a == b,
            _ => {
                // Table-backed groups are capped at 256 elements, so an
                // entry-wise comparison is always affordable here.
                let order = self.order();
                if order != other.order() {
                    return false;
                }
                (0..order as GroupElement)
                    .all(|p| (0..order as GroupElement).all(|q| self.op(p, q) == other.op(p, q)))
            }
        }
    }
}

impl Eq for FiniteGroup {}
