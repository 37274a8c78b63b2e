//! Exact optimal values and complete optimal families for every variant.
//!
//! Two independent engines share one contract: [`brute_force_optimal`]
//! scans subsets by cardinality, [`bb_optimal`] searches with propagation
//! and bounds. Both return the family sorted by bitmask, so their outputs can
//! be compared with `==`.

mod bb;
mod brute;
mod minimal;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};
use crate::variants::{has_twins, DomVariant};

pub use bb::bb_optimal;
pub use brute::{brute_force_optimal, for_each_subset_of_size, BRUTE_FORCE_SOFT_LIMIT};
pub use minimal::{enumerate_minimal_dominating, MINIMAL_ENUMERATION_SOFT_LIMIT};

/// Value of a domination parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamValue {
    Finite(usize),
    /// γ^ID of a graph with twins.
    Infinite,
    /// No feasible set: isolated vertices for the total variants, a
    /// disconnected (or empty) graph for γ_c.
    Undefined,
}

impl ParamValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            ParamValue::Finite(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Finite(k) => write!(f, "{k}"),
            ParamValue::Infinite => f.write_str("infinity"),
            ParamValue::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ParamValue::Finite(k) => s.serialize_u64(*k as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// Duplicate-free family of vertex sets in ascending bitmask order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SetFamily {
    sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(mut sets: Vec<VertexSet>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        SetFamily { sets }
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn position(&self, s: VertexSet) -> Option<usize> {
        self.sets.binary_search(&s).ok()
    }

    /// Common cardinality, when every member has the same size.
    pub fn cardinality(&self) -> Option<usize> {
        let k = self.sets.first()?.len();
        self.sets.iter().all(|s| s.len() == k).then_some(k)
    }

    /// Members of the largest cardinality.
    pub fn largest(&self) -> SetFamily {
        let k = self.sets.iter().map(|s| s.len()).max().unwrap_or(0);
        SetFamily {
            sets: self.sets.iter().copied().filter(|s| s.len() == k).collect(),
        }
    }
}

impl From<Vec<VertexSet>> for SetFamily {
    fn from(sets: Vec<VertexSet>) -> Self {
        SetFamily::new(sets)
    }
}

/// Optimal value together with every set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub value: ParamValue,
    pub family: SetFamily,
}

impl Optimum {
    fn infeasible(value: ParamValue) -> Self {
        Optimum {
            value,
            family: SetFamily::default(),
        }
    }

    fn from_sets(sets: Vec<VertexSet>) -> Self {
        let family = SetFamily::new(sets);
        match family.cardinality() {
            Some(k) => Optimum {
                value: ParamValue::Finite(k),
                family,
            },
            None => Optimum::infeasible(ParamValue::Undefined),
        }
    }
}

/// Outcomes decided before any search runs.
pub(crate) fn guard(g: &Graph, variant: DomVariant) -> Option<ParamValue> {
    match variant {
        DomVariant::Total | DomVariant::Paired | DomVariant::LocTotal if g.has_isolated_vertex() => {
            Some(ParamValue::Undefined)
        }
        DomVariant::Connected if g.n() == 0 || !g.is_connected() => Some(ParamValue::Undefined),
        DomVariant::IdCode if has_twins(g) => Some(ParamValue::Infinite),
        _ => None,
    }
}

/// Parameter value of `variant` on `g`.
pub fn parameter(g: &Graph, variant: DomVariant) -> ParamValue {
    match guard(g, variant) {
        Some(v) => v,
        None => bb_optimal(g, variant).value,
    }
}

#[cfg(test)]
mod tests;
