//! `F_r`, `Ψ_F(r)` and minimal forbidden families of monotone predicates.

use super::coloring::chromatic_number;
use super::family::{ForbiddenFamily, NamedFamily};
use crate::error::{Error, Result};
use crate::graph::enumerate::{graphs_up_to, MAX_ENUMERATION_ORDER};
use crate::graph::Graph;

/// Graphs on at most `r` vertices (one per isomorphism class) that receive a
/// homomorphism from some member.
pub fn family_restriction(fam: &ForbiddenFamily, r: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for g in graphs_up_to(r)? {
        if fam.min_member_mapping_into(g)?.is_some() {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// `max` over `R ∈ F_r` of the smallest member order mapping into `R`,
/// 0 when `F_r` is empty.
pub fn psi(fam: &ForbiddenFamily, r: usize) -> Result<usize> {
    match fam {
        ForbiddenFamily::Named(NamedFamily::OddCycles) => Ok(match r {
            0..=2 => 0,
            r if r % 2 == 1 => r,
            r => r - 1,
        }),
        ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s)) => Ok(if r >= *s { *s } else { 0 }),
        ForbiddenFamily::Named(NamedFamily::SingleGraph(h)) => {
            Ok(if r >= chromatic_number(h) { h.n() } else { 0 })
        }
        ForbiddenFamily::Explicit(_) => psi_by_enumeration(fam, r),
    }
}

/// `Ψ_F(r)` straight from the definition; the named closed forms are
/// checked against this.
pub fn psi_by_enumeration(fam: &ForbiddenFamily, r: usize) -> Result<usize> {
    let mut best = 0;
    for g in graphs_up_to(r)? {
        if let Some(s) = fam.min_member_mapping_into(g)? {
            best = best.max(s);
        }
    }
    Ok(best)
}

/// All graphs on at most `max_size` vertices that violate `holds` while
/// every single-edge and single-vertex deletion satisfies it.
///
/// Monotonicity is checked on every enumerated graph; a satisfying graph
/// with a violating one-step subgraph is a contract violation.
pub fn minimal_forbidden_family(
    holds: &dyn Fn(&Graph) -> bool,
    max_size: usize,
) -> Result<Vec<Graph>> {
    if max_size > MAX_ENUMERATION_ORDER {
        return Err(Error::size(
            "enumeration order",
            max_size,
            MAX_ENUMERATION_ORDER,
        ));
    }
    let mut out = Vec::new();
    for g in graphs_up_to(max_size)? {
        let sat = holds(g);
        let subs_ok = one_step_subgraphs(g).all(|h| holds(&h));
        if sat && !subs_ok {
            return Err(Error::Contract(format!(
                "predicate is not monotone: it holds on {g:?} but fails on a subgraph"
            )));
        }
        if !sat && subs_ok {
            out.push(g.clone());
        }
    }
    Ok(out)
}

fn one_step_subgraphs(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let by_edge = g.edges().into_iter().map(move |e| g.without_edges(&[e]));
    let by_vertex = (0..g.n()).map(move |v| g.without_vertex(v));
    by_edge.chain(by_vertex)
}
