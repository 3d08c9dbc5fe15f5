//! Presentations and closed forms for the braid-like groups.

mod closed;
mod group;
mod quadratic;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use closed::{
    chen_generating_function, closed_chen, closed_hilbert, closed_lcs_series, stirling2,
    vp_plus_printed_hilbert, ChenGeneratingFunction, ClosedChen, ClosedSeries, Provenance,
};
pub use group::{abelianize, free_reduce, group_presentation, GroupPresentation, GroupWord};
pub use quadratic::{
    cohomology_presentation, gr_presentation, symmetric_grading, Flavor, QuadRelation,
    QuadraticAlgebraPresentation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Free,
    PureBraid,
    WeldedPure,
    WeldedPurePlus,
    VirtualPure,
    VirtualPurePlus,
    ProductOfFree,
}

/// A group of the catalog: a family and its index `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    pub family: Family,
    pub n: usize,
}

impl GroupId {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "group index must be at least 1".into(),
            ));
        }
        Ok(GroupId { family, n })
    }

    pub fn free(n: usize) -> Self {
        GroupId {
            family: Family::Free,
            n,
        }
    }

    pub fn pure_braid(n: usize) -> Self {
        GroupId {
            family: Family::PureBraid,
            n,
        }
    }

    pub fn welded(n: usize) -> Self {
        GroupId {
            family: Family::WeldedPure,
            n,
        }
    }

    pub fn welded_plus(n: usize) -> Self {
        GroupId {
            family: Family::WeldedPurePlus,
            n,
        }
    }

    pub fn virtual_pure(n: usize) -> Self {
        GroupId {
            family: Family::VirtualPure,
            n,
        }
    }

    pub fn virtual_plus(n: usize) -> Self {
        GroupId {
            family: Family::VirtualPurePlus,
            n,
        }
    }

    pub fn product_of_free(n: usize) -> Self {
        GroupId {
            family: Family::ProductOfFree,
            n,
        }
    }

    /// Index data of the degree-one generators, in catalog order.
    ///
    /// Pair families use lexicographically ordered pairs `(i, j)` (1-based).
    /// `Free` uses `(i, 0)`; `ProductOfFree` uses `(factor, position)`.
    pub fn generator_indices(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        match self.family {
            Family::Free => (1..=n).map(|i| (i, 0)).collect(),
            Family::PureBraid | Family::WeldedPurePlus | Family::VirtualPurePlus => (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect(),
            Family::WeldedPure | Family::VirtualPure => (1..=n)
                .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
                .collect(),
            Family::ProductOfFree => (1..n).flat_map(|m| (1..=m).map(move |r| (m, r))).collect(),
        }
    }

    /// First Betti number.
    pub fn b1(&self) -> usize {
        self.generator_indices().len()
    }

    /// Generator labels with the given letter, e.g. `x12` or `x3,10`.
    pub fn labels(&self, letter: &str) -> Vec<String> {
        let wide = self.n >= 10;
        self.generator_indices()
            .into_iter()
            .map(|(i, j)| match self.family {
                Family::Free => format!("{letter}{i}"),
                Family::ProductOfFree => format!("{letter}{i}_{j}"),
                _ if wide => format!("{letter}{i},{j}"),
                _ => format!("{letter}{i}{j}"),
            })
            .collect()
    }

    /// Position of the pair generator `(i, j)`, if it exists.
    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.generator_indices().iter().position(|&p| p == (i, j))
    }

    /// Whether the cohomology ring is Koszul.
    pub fn is_koszul(&self) -> bool {
        !(self.family == Family::WeldedPure && self.n >= 4)
    }

    /// Whether the group is 1-formal.
    pub fn is_one_formal(&self) -> bool {
        match self.family {
            Family::VirtualPure | Family::VirtualPurePlus => self.n <= 3,
            _ => true,
        }
    }

    /// Whether relators of the catalog presentation all lie in the
    /// commutator subgroup.
    pub fn has_group_presentation(&self) -> bool {
        !matches!(self.family, Family::PureBraid | Family::ProductOfFree)
    }

    /// Typeset-style name, e.g. `wP4+`.
    pub fn name(&self) -> String {
        let n = self.n;
        match self.family {
            Family::Free => format!("F{n}"),
            Family::PureBraid => format!("P{n}"),
            Family::WeldedPure => format!("wP{n}"),
            Family::WeldedPurePlus => format!("wP{n}+"),
            Family::VirtualPure => format!("vP{n}"),
            Family::VirtualPurePlus => format!("vP{n}+"),
            Family::ProductOfFree => format!("Pi{n}"),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.family {
            Family::Free => "F",
            Family::PureBraid => "P",
            Family::WeldedPure => "wP",
            Family::WeldedPurePlus => "wP+",
            Family::VirtualPure => "vP",
            Family::VirtualPurePlus => "vP+",
            Family::ProductOfFree => "Pi",
        };
        write!(f, "{tag}:{}", self.n)
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Parses `F:n`, `P:n`, `wP:n`, `wP+:n`, `vP:n`, `vP+:n` or `Pi:n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse group `{s}`"));
        let (tag, n) = s.trim().split_once(':').ok_or_else(bad)?;
        let family = match tag {
            "F" => Family::Free,
            "P" => Family::PureBraid,
            "wP" => Family::WeldedPure,
            "wP+" => Family::WeldedPurePlus,
            "vP" => Family::VirtualPure,
            "vP+" => Family::VirtualPurePlus,
            "Pi" => Family::ProductOfFree,
            _ => return Err(bad()),
        };
        let n: usize = n.parse().map_err(|_| bad())?;
        GroupId::new(family, n)
    }
}

impl Serialize for GroupId {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Every family at the given index.
pub fn all_families() -> [Family; 7] {
    [
        Family::Free,
        Family::PureBraid,
        Family::WeldedPure,
        Family::WeldedPurePlus,
        Family::VirtualPure,
        Family::VirtualPurePlus,
        Family::ProductOfFree,
    ]
}
