use std::fmt;

use crate::error::Result;
use crate::graph::Graph;
use crate::solver::{z_number, zq_number, Q};

use super::comb::{comb_decompose, require_connected, CombDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Path,
    /// Reported for `q = 0` with value 1.
    Tree,
    Comb,
    /// Connected, not a path, `Z = 2`.
    Zigzag,
    /// One-oracle value 2 that is neither a tree nor has `Z = 2`.
    PickComb,
    Other,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Path => "path",
            Label::Tree => "tree",
            Label::Comb => "comb",
            Label::Zigzag => "zigzag",
            Label::PickComb => "pick-comb",
            Label::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    ZqValue { q: Q, value: u32 },
    ZValue(u32),
    Comb(CombDecomposition),
    /// The initial pair the two tokens are spent on.
    InitialPair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub q: Q,
    pub value: u32,
    pub label: Label,
    pub witnesses: Vec<Witness>,
}

/// Computes `Z_q(G)` for a connected graph and labels it with the family
/// that explains small values.
pub fn classify(g: &Graph, q: Q) -> Result<Classification> {
    require_connected(g, "classify")?;
    let value = zq_number(g, q)?;
    let mut witnesses = vec![Witness::ZqValue { q, value }];
    let label = match (value, q) {
        (1, Q::Finite(0)) => Label::Tree,
        (1, _) => Label::Path,
        (2, Q::Finite(1)) if g.is_tree() => match comb_decompose(g)? {
            Some(d) => {
                if let Some(&(u, v)) = d.initial_pairs.first() {
                    witnesses.push(Witness::InitialPair(u, v));
                }
                witnesses.push(Witness::Comb(d));
                Label::Comb
            }
            None => Label::Other,
        },
        (2, Q::Finite(1)) => {
            let z = z_number(g)?;
            witnesses.push(Witness::ZValue(z));
            if z == 2 {
                Label::Zigzag
            } else {
                Label::PickComb
            }
        }
        (2, Q::Finite(0)) => Label::Other,
        (2, _) => {
            let z = z_number(g)?;
            witnesses.push(Witness::ZValue(z));
            if z == 2 {
                Label::Zigzag
            } else {
                Label::Other
            }
        }
        _ => Label::Other,
    };
    Ok(Classification {
        q,
        value,
        label,
        witnesses,
    })
}

impl Classification {
    /// Whether the label agrees with the recorded witnesses.
    pub fn is_consistent(&self) -> bool {
        let z = self.witnesses.iter().find_map(|w| match w {
            Witness::ZValue(z) => Some(*z),
            _ => None,
        });
        match self.label {
            Label::Path | Label::Tree => self.value == 1,
            Label::Comb => {
                self.value == 2
                    && self.witnesses.iter().any(|w| matches!(w, Witness::Comb(_)))
            }
            Label::Zigzag => self.value == 2 && z == Some(2),
            Label::PickComb => self.value == 2 && z.is_some_and(|z| z > 2),
            Label::Other => true,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ZqValue { q, value } => write!(f, "Z_{q} = {value}"),
            Witness::ZValue(z) => write!(f, "Z = {z}"),
            Witness::Comb(d) => {
                write!(f, "comb spine {:?}", d.spine)?;
                for t in &d.teeth {
                    write!(f, ", tooth at {}: {:?}", t.anchor, t.vertices)?;
                }
                Ok(())
            }
            Witness::InitialPair(u, v) => write!(f, "initial pair ({u}, {v})"),
        }
    }
}

/// One `key: value` line each for the value, the label and every witness.
impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q: {}", self.q)?;
        writeln!(f, "value: {}", self.value)?;
        writeln!(f, "label: {}", self.label)?;
        for w in &self.witnesses {
            writeln!(f, "witness: {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::generators::{cycle_graph, gen_spider, path_graph};

    #[test]
    fn labels() {
        let c = classify(&gen_spider(1).unwrap(), Q::Finite(0)).unwrap();
        assert_eq!((c.value, c.label), (1, Label::Tree));
        let c = classify(&path_graph(7), Q::Finite(3)).unwrap();
        assert_eq!((c.value, c.label), (1, Label::Path));
        let c = classify(&cycle_graph(5).unwrap(), Q::Finite(2)).unwrap();
        assert_eq!((c.value, c.label), (2, Label::Zigzag));
        let c = classify(&gen_spider(1).unwrap(), Q::Finite(1)).unwrap();
        assert_eq!((c.value, c.label), (2, Label::Comb));
        assert!(c.witnesses.contains(&Witness::InitialPair(2, 5)));
        assert!(c.is_consistent());
    }

    #[test]
    fn disconnected_is_rejected() {
        assert!(classify(&Graph::empty(2), Q::Finite(1)).is_err());
    }
}
