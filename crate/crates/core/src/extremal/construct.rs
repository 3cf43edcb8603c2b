//! Constructed families and the textual family grammar.
//!
//! Labellings:
//! - `diam2(a)`: independent `X = 0..a`, clique `Y = a..a + a(a-1)/2`; the pair
//!   `{x_i, x_j}` (`i < j`) is joined to the Y vertex at its colexicographic
//!   rank `(0,1), (0,2), (1,2), (0,3), ...`.
//! - `prescribed(a, 2a)`: paths `x_i y_i z_i` at `3i, 3i+1, 3i+2` with the
//!   spine `y_i ~ y_{i+1}`.
//! - `prescribed(a, a+r)`, `r < a`: star centre `0` with leaves `v_i = i`
//!   (`1..=a`), pendants `w_i = a + i` at `v_i` for `i < a`, and second
//!   pendants `w'_i = 2a + i - 1` at `v_i` for `i < r`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::ExtremalError;
use crate::families;
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

/// Largest `a` whose diameter-two construction fits in 64 vertices.
pub const DIAM2_MAX_A: usize = 10;

/// Diameter-two graph with `L_2 = a`.
pub fn construct_diam2(a: usize) -> Result<Graph, ExtremalError> {
    if a < 2 {
        return Err(ExtremalError::InvalidParams(format!(
            "diam2 needs a >= 2, got {a}"
        )));
    }
    let order = a + a * (a - 1) / 2;
    if order > MAX_VERTICES {
        return Err(ExtremalError::InvalidParams(format!(
            "diam2 with a = {a} needs {order} vertices, more than {MAX_VERTICES}"
        )));
    }
    let mut g = Graph::empty(order)?;
    let y_count = order - a;
    for i in 0..y_count {
        for j in i + 1..y_count {
            g.add_edge(a + i, a + j)?;
        }
    }
    let mut y = a;
    for j in 1..a {
        for i in 0..j {
            g.add_edge(i, y)?;
            g.add_edge(j, y)?;
            y += 1;
        }
    }
    Ok(g)
}

/// Tree with `ρ⁰ = L_1 = a` and `L_2 = b`, for `a >= 2` and `a < b <= 2a`.
pub fn construct_tree_prescribed(a: usize, b: usize) -> Result<Graph, ExtremalError> {
    if a < 2 || b <= a || b > 2 * a {
        return Err(ExtremalError::InvalidParams(format!(
            "prescribed tree needs a >= 2 and a + 1 <= b <= 2a, got a = {a}, b = {b}"
        )));
    }
    let r = b - a;
    let order = if r == a { 3 * a } else { 2 * a + r - 1 };
    if order > MAX_VERTICES {
        return Err(ExtremalError::InvalidParams(format!(
            "prescribed tree ({a}, {b}) needs {order} vertices, more than {MAX_VERTICES}"
        )));
    }
    let mut edges = Vec::with_capacity(order - 1);
    if r == a {
        for i in 0..a {
            edges.push((3 * i, 3 * i + 1));
            edges.push((3 * i + 1, 3 * i + 2));
            if i + 1 < a {
                edges.push((3 * i + 1, 3 * i + 4));
            }
        }
    } else {
        edges.extend((1..=a).map(|i| (0, i)));
        edges.extend((1..a).map(|i| (i, a + i)));
        edges.extend((1..r).map(|i| (i, 2 * a + i - 1)));
    }
    Ok(Graph::from_edges(order, edges)?)
}

/// A named family with its parameters, as written in the `name:params` grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Spider(usize, usize),
    CompleteMinusEdge(usize),
    Diam2(usize),
    Prescribed(usize, usize),
    Petersen,
    Empty(usize),
}

impl FamilySpec {
    pub fn build(self) -> Result<Graph, ExtremalError> {
        let order_ok = |n: usize| {
            if n > MAX_VERTICES {
                Err(ExtremalError::InvalidParams(format!(
                    "{self} has {n} vertices, more than {MAX_VERTICES}"
                )))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            FamilySpec::Path(n) => families::try_path(n)?,
            FamilySpec::Cycle(n) => families::cycle(n)?,
            FamilySpec::Complete(n) => families::try_complete(n)?,
            FamilySpec::CompleteBipartite(m, n) => {
                order_ok(m.saturating_add(n))?;
                families::complete_bipartite(m, n)?
            }
            FamilySpec::Star(n) => families::star(n)?,
            FamilySpec::Spider(t, s) => {
                order_ok(t.saturating_mul(2).saturating_add(s).saturating_add(1))?;
                families::spider(t, s)?
            }
            FamilySpec::CompleteMinusEdge(n) => families::complete_minus_edge(n)?,
            FamilySpec::Diam2(a) => construct_diam2(a)?,
            FamilySpec::Prescribed(a, b) => construct_tree_prescribed(a, b)?,
            FamilySpec::Petersen => families::petersen(),
            FamilySpec::Empty(n) => Graph::empty(n)?,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Spider(t, s) => write!(f, "spider:{t},{s}"),
            FamilySpec::CompleteMinusEdge(n) => write!(f, "kminuse:{n}"),
            FamilySpec::Diam2(a) => write!(f, "diam2:{a}"),
            FamilySpec::Prescribed(a, b) => write!(f, "prescribed:{a},{b}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FamilySpec {
    type Err = ExtremalError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| ExtremalError::Parse {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (name, params) = match spec.trim().split_once(':') {
            Some((name, params)) => (name.trim(), Some(params)),
            None => (spec.trim(), None),
        };
        let nums: Vec<usize> = match params {
            Some(p) => p
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| fail(&format!("bad number ({e})")))?,
            None => Vec::new(),
        };
        let one = || match nums[..] {
            [x] => Ok(x),
            _ => Err(fail("expected one parameter")),
        };
        let two = || match nums[..] {
            [x, y] => Ok((x, y)),
            _ => Err(fail("expected two parameters")),
        };
        Ok(match name {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "bipartite" | "complete_bipartite" => {
                let (m, n) = two()?;
                FamilySpec::CompleteBipartite(m, n)
            }
            "star" => FamilySpec::Star(one()?),
            "spider" => {
                let (t, s) = two()?;
                FamilySpec::Spider(t, s)
            }
            "kminuse" | "complete_minus_edge" => FamilySpec::CompleteMinusEdge(one()?),
            "diam2" => FamilySpec::Diam2(one()?),
            "prescribed" => {
                let (a, b) = two()?;
                FamilySpec::Prescribed(a, b)
            }
            "petersen" if nums.is_empty() => FamilySpec::Petersen,
            "petersen" => return Err(fail("petersen takes no parameters")),
            "empty" => FamilySpec::Empty(one()?),
            _ => return Err(fail("unknown family")),
        })
    }
}

/// Parses a family spec such as `spider:3,2` and builds the graph.
pub fn construct_family(spec: &str) -> Result<Graph, ExtremalError> {
    spec.parse::<FamilySpec>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6;
    use crate::profile::{diameter, Length};
    use crate::solvers::{limited_packing_number, open_packing_number};

    #[test]
    fn diam2_small_cases() {
        let g = construct_diam2(2).unwrap();
        assert_eq!(graph6::emit(&g), "BW");
        for (a, order) in [(3, 6), (4, 10), (6, 21)] {
            let g = construct_diam2(a).unwrap();
            assert_eq!(g.n(), order);
            assert_eq!(diameter(&g), Length::Finite(2));
            assert_eq!(limited_packing_number(&g, 2).value, a);
        }
        assert!(construct_diam2(1).is_err());
        assert!(construct_diam2(10).is_ok());
        assert!(construct_diam2(11).is_err());
    }

    #[test]
    fn prescribed_trees() {
        let check = |a: usize, b: usize, order: usize| {
            let t = construct_tree_prescribed(a, b).unwrap();
            assert_eq!(t.n(), order, "({a},{b})");
            assert!(t.is_connected() && t.edge_count() == order - 1);
            assert_eq!(open_packing_number(&t).value, a, "({a},{b})");
            assert_eq!(limited_packing_number(&t, 1).value, a, "({a},{b})");
            assert_eq!(limited_packing_number(&t, 2).value, b, "({a},{b})");
        };
        check(2, 4, 6);
        check(3, 4, 6);
        check(8, 12, 19);
        for (a, b) in [(1, 2), (3, 3), (3, 7)] {
            assert!(construct_tree_prescribed(a, b).is_err());
        }
    }

    #[test]
    fn grammar_round_trips() {
        for text in [
            "path:7",
            "cycle:5",
            "complete:4",
            "bipartite:2,3",
            "star:6",
            "spider:3,2",
            "kminuse:5",
            "diam2:4",
            "prescribed:8,12",
            "petersen",
            "empty:3",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            spec.build().unwrap();
        }
        assert_eq!(
            "complete_minus_edge:5".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteMinusEdge(5)
        );
    }

    #[test]
    fn grammar_examples() {
        let sp = construct_family("spider:3,2").unwrap();
        assert_eq!((sp.n(), sp.max_degree()), (9, 5));
        let g = construct_family("kminuse:5").unwrap();
        assert_eq!(limited_packing_number(&g, 1).value, 1);
        assert_eq!(limited_packing_number(&g.complement(), 1).value, 4);
        assert_eq!(
            construct_family("star:6").unwrap(),
            families::complete_bipartite(1, 5).unwrap()
        );
    }

    #[test]
    fn grammar_errors() {
        for bad in [
            "",
            "path",
            "path:x",
            "spider:3",
            "cycle:2",
            "hypercube:3",
            "petersen:1",
            "complete:65",
            "spider:40,0",
        ] {
            assert!(construct_family(bad).is_err(), "{bad}");
        }
    }
}
