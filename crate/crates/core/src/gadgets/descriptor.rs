use std::fmt::{self, Write as _};

use crate::hypercore::{Edge, Hypergraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    FullStar,
    StarPlus,
    Hkl,
    HprimeKl,
    ExampleARk,
    ExampleARk1,
    ExampleB,
    Construction64,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::FullStar => "star",
            GadgetKind::StarPlus => "star-plus",
            GadgetKind::Hkl => "hkl",
            GadgetKind::HprimeKl => "hkl-prime",
            GadgetKind::ExampleARk => "example-a-r-eq-k",
            GadgetKind::ExampleARk1 => "example-a-r-eq-k-plus-1",
            GadgetKind::ExampleB => "example-b",
            GadgetKind::Construction64 => "c64",
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer parameters a generator was called with. Unused ones stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GadgetParams {
    pub n: usize,
    pub k: usize,
    pub l: Option<usize>,
    pub r: Option<usize>,
    pub c: Option<usize>,
    pub d: Option<usize>,
    pub k_prime: Option<usize>,
    pub r_prime: Option<usize>,
    pub seed: Option<u64>,
}

/// Structure of a generated hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetDescriptor {
    pub kind: GadgetKind,
    pub center: Option<Vertex>,
    /// The apex `y` of the second star in the two-star construction.
    pub second_center: Option<Vertex>,
    pub stationary_parts: Vec<Vec<Vertex>>,
    pub dynamic_pairs: Vec<(Vertex, Vertex)>,
    /// The vertices `x_1..x_c` every edge of the transversal family meets once.
    pub transversal: Vec<Vertex>,
    pub added_edge: Option<Edge>,
    pub removed_edge: Option<Edge>,
    pub params: GadgetParams,
}

impl GadgetDescriptor {
    pub(crate) fn new(kind: GadgetKind, params: GadgetParams) -> GadgetDescriptor {
        GadgetDescriptor {
            kind,
            center: None,
            second_center: None,
            stationary_parts: Vec::new(),
            dynamic_pairs: Vec::new(),
            transversal: Vec::new(),
            added_edge: None,
            removed_edge: None,
            params,
        }
    }

    fn dynamic_vertices(&self) -> Vec<Vertex> {
        self.dynamic_pairs.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Checks the descriptor's own invariants and that it matches `h`.
    pub fn validate(&self, h: &Hypergraph) -> Result<(), String> {
        let disjoint = |a: &[Vertex], b: &[Vertex]| a.iter().all(|v| !b.contains(v));
        let dynamic = self.dynamic_vertices();
        {
            let mut sorted = dynamic.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != dynamic.len() {
                return Err("dynamic pairs overlap".into());
            }
        }
        for part in &self.stationary_parts {
            if !disjoint(part, &dynamic) {
                return Err("stationary part meets a dynamic vertex".into());
            }
        }
        let k = self.params.k;
        match self.kind {
            GadgetKind::Hkl | GadgetKind::HprimeKl => {
                let l = self.params.l.ok_or("missing l")?;
                let want = if self.kind == GadgetKind::Hkl { 2 } else { 4 };
                if self.stationary_parts.len() != want {
                    return Err(format!("expected {want} stationary parts"));
                }
                if self.stationary_parts.iter().any(|p| p.len() != k - l) {
                    return Err("stationary part of the wrong size".into());
                }
                if self.dynamic_pairs.len() != l {
                    return Err("wrong number of dynamic pairs".into());
                }
                let [a, b] = [&self.stationary_parts[0], &self.stationary_parts[1]];
                if !disjoint(a, b) {
                    return Err("A and B intersect".into());
                }
                if self.kind == GadgetKind::HprimeKl {
                    let [c, d] = [&self.stationary_parts[2], &self.stationary_parts[3]];
                    if !disjoint(c, d) {
                        return Err("C and D intersect".into());
                    }
                    let mut ab: Vec<Vertex> = a.iter().chain(b).copied().collect();
                    let mut cd: Vec<Vertex> = c.iter().chain(d).copied().collect();
                    ab.sort_unstable();
                    cd.sort_unstable();
                    if ab != cd {
                        return Err("A ∪ B differs from C ∪ D".into());
                    }
                    let mut parts = self.stationary_parts.clone();
                    parts.sort();
                    parts.dedup();
                    if parts.len() != 4 {
                        return Err("stationary parts are not distinct".into());
                    }
                }
                if h.n() != 2 * k {
                    return Err("gadget must have 2k vertices".into());
                }
            }
            GadgetKind::ExampleB => {
                if self.transversal.len() != self.params.c.unwrap_or(0) {
                    return Err("transversal size differs from c".into());
                }
                if h.edges()
                    .iter()
                    .any(|e| self.transversal.iter().filter(|&&x| e.contains(x)).count() != 1)
                {
                    return Err("edge does not meet the transversal exactly once".into());
                }
            }
            _ => {}
        }
        if let Some(c) = self.center {
            if c >= h.n() {
                return Err("center out of range".into());
            }
        }
        if let Some(e) = &self.added_edge {
            if !h.contains_edge(e) {
                return Err("added edge missing from hypergraph".into());
            }
        }
        if let Some(e) = &self.removed_edge {
            if h.contains_edge(e) {
                return Err("removed edge still present".into());
            }
        }
        if h.uniformity().is_some_and(|u| u != k) {
            return Err("hypergraph uniformity differs from k".into());
        }
        Ok(())
    }

    /// Sidecar `.desc` text: one `key value...` line per field that is set.
    pub fn to_desc_string(&self) -> String {
        let mut out = String::new();
        let join = |v: &mut dyn Iterator<Item = Vertex>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(out, "kind {}", self.kind).unwrap();
        let p = &self.params;
        let mut params = format!("n={} k={}", p.n, p.k);
        for (name, value) in [
            ("l", p.l),
            ("r", p.r),
            ("c", p.c),
            ("d", p.d),
            ("k'", p.k_prime),
            ("r'", p.r_prime),
        ] {
            if let Some(v) = value {
                write!(params, " {name}={v}").unwrap();
            }
        }
        if let Some(s) = p.seed {
            write!(params, " seed={s}").unwrap();
        }
        writeln!(out, "params {params}").unwrap();
        if let Some(c) = self.center {
            writeln!(out, "center {c}").unwrap();
        }
        if let Some(c) = self.second_center {
            writeln!(out, "second-center {c}").unwrap();
        }
        for part in &self.stationary_parts {
            writeln!(out, "part {}", join(&mut part.iter().copied())).unwrap();
        }
        for &(u, v) in &self.dynamic_pairs {
            writeln!(out, "pair {u} {v}").unwrap();
        }
        if !self.transversal.is_empty() {
            writeln!(out, "transversal {}", join(&mut self.transversal.iter().copied())).unwrap();
        }
        if let Some(e) = &self.added_edge {
            writeln!(out, "added {e}").unwrap();
        }
        if let Some(e) = &self.removed_edge {
            writeln!(out, "removed {e}").unwrap();
        }
        out
    }
}
