//! Forbidden families: explicit finite lists or named infinite families with
//! closed-form membership, homomorphism and `Ψ` oracles.

use serde::{Deserialize, Serialize};

use super::embed::{find_embedding, find_homomorphism};
use crate::error::{Error, Result};
use crate::graph::construct::complete;
use crate::graph::io::{read_edge_list, write_edge_list};
use crate::graph::Graph;

/// Largest member order the embedding oracles accept by default.
pub const DEFAULT_PATTERN_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    /// All odd cycles; `G` is free iff bipartite.
    OddCycles,
    /// All cliques `K_t` with `t ≥ s`; free iff clique number `< s`.
    CliqueAtLeast(usize),
    /// The single graph `H`.
    SingleGraph(Graph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenFamily {
    Explicit(Vec<Graph>),
    Named(NamedFamily),
}

impl ForbiddenFamily {
    /// Builds an explicit family, dropping isomorphic duplicates and members
    /// that contain another member as a subgraph.
    pub fn explicit(graphs: Vec<Graph>) -> Result<Self> {
        if graphs.is_empty() {
            return Err(Error::precondition(
                "explicit family needs at least one member",
            ));
        }
        for g in &graphs {
            check_member(g)?;
        }
        // smaller members first so containment only needs one direction
        let mut sorted = graphs;
        sorted.sort_by_key(|g| (g.n(), g.edge_count()));
        let mut kept: Vec<Graph> = Vec::new();
        for g in sorted {
            if kept.iter().any(|k| find_embedding(&g, k).is_some()) {
                continue;
            }
            kept.push(g);
        }
        Ok(ForbiddenFamily::Explicit(kept))
    }

    pub fn odd_cycles() -> Self {
        ForbiddenFamily::Named(NamedFamily::OddCycles)
    }

    pub fn clique_at_least(s: usize) -> Self {
        ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s))
    }

    pub fn single(h: Graph) -> Result<Self> {
        check_member(&h)?;
        Ok(ForbiddenFamily::Named(NamedFamily::SingleGraph(h)))
    }

    /// Finite member list when one exists. `CliqueAtLeast(s)` reduces to `{K_s}`
    /// for subgraph and homomorphism questions.
    pub fn finite_members(&self) -> Option<Vec<Graph>> {
        match self {
            ForbiddenFamily::Explicit(gs) => Some(gs.clone()),
            ForbiddenFamily::Named(NamedFamily::SingleGraph(h)) => Some(vec![h.clone()]),
            ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s)) => Some(vec![complete(*s)]),
            ForbiddenFamily::Named(NamedFamily::OddCycles) => None,
        }
    }

    /// Largest member order, or `None` for unbounded families.
    pub fn max_member_order(&self) -> Option<usize> {
        self.finite_members()
            .map(|ms| ms.iter().map(Graph::n).max().unwrap_or(0))
    }

    /// True when every graph on `n` vertices, including the edgeless one,
    /// contains a member.
    pub fn forbids_edgeless(&self, n: usize) -> bool {
        match self {
            ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s)) => *s <= 1 && n >= *s,
            _ => false,
        }
    }

    /// True when the single edge `K_2` is (contained in) a member-minimal
    /// obstruction, i.e. every edge must go.
    pub fn forbids_single_edge(&self) -> bool {
        match self {
            ForbiddenFamily::Named(NamedFamily::OddCycles) => false,
            ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s)) => *s == 2,
            _ => self
                .finite_members()
                .unwrap()
                .iter()
                .any(|g| g.n() == 2 && g.edge_count() == 1),
        }
    }

    /// True when no member is bipartite, so bipartite hosts are automatically free.
    pub fn all_members_non_bipartite(&self) -> bool {
        match self {
            ForbiddenFamily::Named(NamedFamily::OddCycles) => true,
            ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s)) => *s >= 3,
            _ => self
                .finite_members()
                .unwrap()
                .iter()
                .all(|g| !g.is_bipartite()),
        }
    }

    /// Bipartite members, for the sparse-regime estimator.
    pub fn bipartite_members(&self) -> Vec<Graph> {
        match self {
            ForbiddenFamily::Named(NamedFamily::OddCycles) => vec![],
            _ => self
                .finite_members()
                .unwrap()
                .into_iter()
                .filter(|g| g.is_bipartite())
                .collect(),
        }
    }

    /// Whether `g` contains a member as a subgraph; returns that member's
    /// index and embedding (index 0 with the cycle for odd cycles).
    pub fn find_copy(&self, g: &Graph) -> Result<Option<(usize, Vec<usize>)>> {
        match self {
            ForbiddenFamily::Named(NamedFamily::OddCycles) => {
                Ok(shortest_odd_cycle(g).map(|c| (0, c)))
            }
            _ => {
                for (i, f) in self.finite_members().unwrap().iter().enumerate() {
                    if f.n() > DEFAULT_PATTERN_CAP {
                        return Err(Error::size(
                            "pattern vertex count",
                            f.n(),
                            DEFAULT_PATTERN_CAP,
                        ));
                    }
                    if let Some(m) = find_embedding(g, f) {
                        return Ok(Some((i, m)));
                    }
                }
                Ok(None)
            }
        }
    }

    pub fn is_free(&self, g: &Graph) -> Result<bool> {
        Ok(self.find_copy(g)?.is_none())
    }

    /// `F ↛ R` for every member `F` (Definition of homomorphism-freeness).
    pub fn is_hom_free(&self, r: &Graph) -> Result<bool> {
        Ok(self.min_member_mapping_into(r)?.is_none())
    }

    /// Smallest order of a member admitting a homomorphism into `r`.
    pub fn min_member_mapping_into(&self, r: &Graph) -> Result<Option<usize>> {
        match self {
            ForbiddenFamily::Named(NamedFamily::OddCycles) => Ok(r.odd_girth()),
            ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s)) => {
                // K_t maps into R iff R contains K_t, and K_s is the smallest.
                if *s > DEFAULT_PATTERN_CAP {
                    return Err(Error::size("clique order", *s, DEFAULT_PATTERN_CAP));
                }
                Ok(find_embedding(r, &complete(*s)).map(|_| *s))
            }
            _ => {
                let mut best: Option<usize> = None;
                for f in self.finite_members().unwrap() {
                    if best.is_some_and(|b| b <= f.n()) {
                        continue;
                    }
                    if f.n() > DEFAULT_PATTERN_CAP {
                        return Err(Error::size(
                            "pattern vertex count",
                            f.n(),
                            DEFAULT_PATTERN_CAP,
                        ));
                    }
                    if find_homomorphism(&f, r).is_some() {
                        best = Some(f.n());
                    }
                }
                Ok(best)
            }
        }
    }

    pub fn to_spec(&self) -> FamilySpec {
        match self {
            ForbiddenFamily::Named(NamedFamily::OddCycles) => FamilySpec::Named {
                named: NamedSpec::Plain("odd-cycles".into()),
            },
            ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(s)) => FamilySpec::Named {
                named: NamedSpec::Clique(CliqueSpec {
                    clique_at_least: *s,
                }),
            },
            ForbiddenFamily::Named(NamedFamily::SingleGraph(h)) => FamilySpec::Named {
                named: NamedSpec::Single(SingleSpec {
                    single_graph: write_edge_list(h),
                }),
            },
            ForbiddenFamily::Explicit(gs) => FamilySpec::Graphs {
                graphs: gs.iter().map(write_edge_list).collect(),
            },
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: FamilySpec =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("family spec: {e}")))?;
        spec.into_family()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("family spec serializes")
    }
}

fn check_member(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::precondition("family member with no vertices"));
    }
    if g.edge_count() == 0 {
        return Err(Error::precondition(
            "family member with no edges (every graph would contain it)",
        ));
    }
    Ok(())
}

/// Vertices of a shortest odd cycle in cyclic order.
pub(crate) fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if dist[v] == dist[u] && u < v {
                    let len = 2 * dist[u] + 1;
                    if best.as_ref().is_some_and(|b| b.len() <= len) {
                        continue;
                    }
                    // walk both tree paths back to their meeting point
                    let path_to_root = |mut x: usize| {
                        let mut p = vec![x];
                        while x != s {
                            x = parent[x];
                            p.push(x);
                        }
                        p
                    };
                    let pu = path_to_root(u);
                    let pv = path_to_root(v);
                    let mut cut = 0;
                    while cut + 1 < pu.len() && pu[pu.len() - 2 - cut] == pv[pv.len() - 2 - cut] {
                        cut += 1;
                    }
                    let mut cyc: Vec<usize> = pu[..pu.len() - cut].to_vec();
                    cyc.extend(pv[..pv.len() - 1 - cut].iter().rev());
                    if cyc.len() % 2 == 1 && best.as_ref().is_none_or(|b| b.len() > cyc.len()) {
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    best
}

/// On-disk family description (JSON): `{"named": …}` or `{"graphs": […]}`
/// with each graph an edge-list text block.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum FamilySpec {
    Named { named: NamedSpec },
    Graphs { graphs: Vec<String> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum NamedSpec {
    Plain(String),
    Clique(CliqueSpec),
    Single(SingleSpec),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CliqueSpec {
    #[serde(rename = "clique-at-least")]
    pub clique_at_least: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SingleSpec {
    #[serde(rename = "single-graph")]
    pub single_graph: String,
}

impl FamilySpec {
    pub fn into_family(self) -> Result<ForbiddenFamily> {
        match self {
            FamilySpec::Named {
                named: NamedSpec::Plain(name),
            } => match name.as_str() {
                "odd-cycles" => Ok(ForbiddenFamily::odd_cycles()),
                other => Err(Error::parse(format!("unknown named family {other:?}"))),
            },
            FamilySpec::Named {
                named: NamedSpec::Clique(c),
            } => Ok(ForbiddenFamily::clique_at_least(c.clique_at_least)),
            FamilySpec::Named {
                named: NamedSpec::Single(s),
            } => ForbiddenFamily::single(read_edge_list(&s.single_graph)?),
            FamilySpec::Graphs { graphs } => ForbiddenFamily::explicit(
                graphs
                    .iter()
                    .map(|t| read_edge_list(t))
                    .collect::<Result<Vec<_>>>()?,
            ),
        }
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_spec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ForbiddenFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FamilySpec::deserialize(d)?
            .into_family()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;

    #[test]
    fn explicit_is_antichain_normalized() {
        let fam = ForbiddenFamily::explicit(vec![complete(4), complete(3), cycle(5), complete(3)])
            .unwrap();
        match fam {
            ForbiddenFamily::Explicit(gs) => {
                assert_eq!(gs.len(), 2);
                assert_eq!(gs[0], complete(3));
                assert_eq!(gs[1], cycle(5));
            }
            _ => unreachable!(),
        }
        assert!(ForbiddenFamily::explicit(vec![Graph::empty(3)]).is_err());
        assert!(ForbiddenFamily::explicit(vec![]).is_err());
    }

    #[test]
    fn json_forms() {
        let odd = serde_json::from_str::<ForbiddenFamily>(r#"{"named": "odd-cycles"}"#).unwrap();
        assert_eq!(odd, ForbiddenFamily::odd_cycles());
        let k4 = serde_json::from_str::<ForbiddenFamily>(r#"{"named": {"clique-at-least": 4}}"#)
            .unwrap();
        assert_eq!(k4, ForbiddenFamily::clique_at_least(4));
        let tri = ForbiddenFamily::from_json(r#"{"graphs": ["3 3\n0 1\n0 2\n1 2\n"]}"#).unwrap();
        assert_eq!(tri, ForbiddenFamily::explicit(vec![complete(3)]).unwrap());
        for fam in [odd, k4, tri, ForbiddenFamily::single(cycle(4)).unwrap()] {
            assert_eq!(ForbiddenFamily::from_json(&fam.to_json()).unwrap(), fam);
        }
        assert!(ForbiddenFamily::from_json(r#"{"named": "even-cycles"}"#).is_err());
    }

    #[test]
    fn hom_freeness_closed_forms() {
        let odd = ForbiddenFamily::odd_cycles();
        assert!(odd.is_hom_free(&cycle(6)).unwrap());
        assert_eq!(odd.min_member_mapping_into(&petersen()).unwrap(), Some(5));
        let tri = ForbiddenFamily::clique_at_least(3);
        assert!(tri.is_hom_free(&cycle(5)).unwrap());
        assert!(!tri.is_hom_free(&complete(4)).unwrap());
        let c5 = ForbiddenFamily::single(cycle(5)).unwrap();
        assert_eq!(c5.min_member_mapping_into(&complete(3)).unwrap(), Some(5));
    }

    #[test]
    fn shortest_odd_cycle_is_a_cycle() {
        for g in [
            petersen(),
            cycle(7),
            complete(5),
            blowup(&cycle(5), 2).unwrap(),
        ] {
            let c = shortest_odd_cycle(&g).unwrap();
            assert_eq!(Some(c.len()), g.odd_girth());
            for i in 0..c.len() {
                assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
            }
            let distinct: std::collections::HashSet<_> = c.iter().collect();
            assert_eq!(distinct.len(), c.len());
        }
        assert!(shortest_odd_cycle(&cycle(8)).is_none());
    }
}
