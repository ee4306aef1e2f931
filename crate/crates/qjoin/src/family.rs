//! Symbolic apex-join families K1 v (C_{s_1} u ... u C_{s_t} u P_{l_1} u ... ).
//!
//! The realized graph places path vertices first (each path in natural order,
//! in declaration order), then cycle vertices, and the apex last. That fixed
//! ordering keeps the Perron-vector and eigenvector-shape checks deterministic.

use crate::error::{Error, Result};
use crate::graph::{apex_join, build_atom, disjoint_union, AtomKind, Multigraph};

/// A family K1 v (cycles u paths). Cycle lengths of 2 denote digons; path
/// length 2 is a K2 component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ApexFamily {
    pub cycles: Vec<usize>,
    pub paths: Vec<usize>,
}

impl ApexFamily {
    pub fn new(cycles: Vec<usize>, paths: Vec<usize>) -> Result<Self> {
        if let Some(&s) = cycles.iter().find(|&&s| s < 2) {
            return Err(Error::Domain(format!("cycle length {s} below 2")));
        }
        if let Some(&l) = paths.iter().find(|&&l| l < 2) {
            return Err(Error::Domain(format!("path length {l} below 2")));
        }
        Ok(ApexFamily { cycles, paths })
    }

    /// Order of the realized graph, 1 + sum of component sizes.
    pub fn order(&self) -> usize {
        1 + self.cycles.iter().sum::<usize>() + self.paths.iter().sum::<usize>()
    }

    /// Number of K2 components (paths of length exactly 2).
    pub fn matching_count(&self) -> usize {
        self.paths.iter().filter(|&&l| l == 2).count()
    }

    /// Number of cycle components (digons included).
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn has_digon(&self) -> bool {
        self.cycles.iter().any(|&s| s == 2)
    }

    /// True for the theorem-side shape: at least one cycle, every cycle
    /// simple, and every path a K2.
    pub fn is_cycles_plus_matching(&self) -> bool {
        !self.cycles.is_empty()
            && self.cycles.iter().all(|&s| s >= 3)
            && self.paths.iter().all(|&l| l == 2)
            && self.matching_count() >= 1
    }

    /// Realizes the family as a multigraph (digons permitted).
    pub fn realize(&self) -> Multigraph {
        let mut base = Multigraph::empty(0);
        for &l in &self.paths {
            base = disjoint_union(&base, &build_atom(AtomKind::Path, l).unwrap());
        }
        for &s in &self.cycles {
            base = disjoint_union(&base, &build_atom(AtomKind::Cycle, s).unwrap());
        }
        apex_join(&base)
    }

    /// Realizes the family, rejecting digons.
    pub fn realize_simple(&self) -> Result<Multigraph> {
        if self.has_digon() {
            return Err(Error::Mode(
                "family contains a digon; simple realization impossible".into(),
            ));
        }
        Ok(self.realize())
    }

    /// Index of the apex vertex in the realized graph.
    pub fn apex_index(&self) -> usize {
        self.order() - 1
    }

    /// Vertex range `start..start + l` of the path at `path_index`.
    pub fn path_span(&self, path_index: usize) -> Result<std::ops::Range<usize>> {
        if path_index >= self.paths.len() {
            return Err(Error::Domain(format!("no path at index {path_index}")));
        }
        let start: usize = self.paths[..path_index].iter().sum();
        Ok(start..start + self.paths[path_index])
    }

    /// Vertex range of the cycle at `cycle_index` (cycles follow all paths).
    pub fn cycle_span(&self, cycle_index: usize) -> Result<std::ops::Range<usize>> {
        if cycle_index >= self.cycles.len() {
            return Err(Error::Domain(format!("no cycle at index {cycle_index}")));
        }
        let paths_total: usize = self.paths.iter().sum();
        let start = paths_total + self.cycles[..cycle_index].iter().sum::<usize>();
        Ok(start..start + self.cycles[cycle_index])
    }

    /// Sorted-component copy: a canonical representative of the isomorphism
    /// class of the realized graph.
    pub fn normalized(&self) -> ApexFamily {
        let mut cycles = self.cycles.clone();
        let mut paths = self.paths.clone();
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        paths.sort_unstable_by(|a, b| b.cmp(a));
        ApexFamily { cycles, paths }
    }
}

impl std::fmt::Display for ApexFamily {
    /// Family-spec string: cycles, then paths of length >= 3, then `K2*q`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut atoms: Vec<String> = Vec::new();
        for &s in &self.cycles {
            atoms.push(format!("C{s}"));
        }
        for &l in self.paths.iter().filter(|&&l| l >= 3) {
            atoms.push(format!("P{l}"));
        }
        let q = self.matching_count();
        if q > 0 {
            atoms.push(format!("K2*{q}"));
        }
        if atoms.is_empty() {
            atoms.push("K1".into());
        }
        write!(f, "{}", atoms.join("+"))
    }
}
