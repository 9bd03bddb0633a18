//! Solution trees grown by breadth-first mutation from the fundamental
//! solution.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::family::{Family, Tuple};
use crate::matrix::format::{int_from_json, int_to_json};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionNode {
    pub tuple: Tuple,
    /// Index of the node this one was first reached from.
    pub parent: Option<usize>,
    /// Direction of the edge from the parent.
    pub dir: Option<usize>,
    /// `(direction, node index)` of children first reached from here.
    pub children: Vec<(usize, usize)>,
}

/// A mutation leaving the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrunedEdge {
    pub parent: usize,
    pub dir: usize,
    pub tuple: Tuple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTree {
    pub family: Family,
    pub k: u64,
    pub bound: BigInt,
    pub nodes: Vec<SolutionNode>,
    pub pruned: Vec<PrunedEdge>,
}

impl SolutionTree {
    pub fn root(&self) -> &Tuple {
        &self.nodes[0].tuple
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn tuples(&self) -> impl Iterator<Item = &Tuple> {
        self.nodes.iter().map(|n| &n.tuple)
    }

    /// Tuples sorted lexicographically.
    pub fn sorted_tuples(&self) -> Vec<Tuple> {
        let mut v: Vec<Tuple> = self.tuples().cloned().collect();
        v.sort();
        v
    }

    /// Distinct multisets, each as a descending tuple, sorted.
    pub fn sorted_view(&self) -> Vec<Tuple> {
        let mut v: Vec<Tuple> = self
            .tuples()
            .map(|t| {
                let mut s = t.clone();
                s.sort_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Path of directions from the root to `idx`.
    pub fn word(&self, mut idx: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let (Some(p), Some(d)) = (self.nodes[idx].parent, self.nodes[idx].dir) {
            w.push(d);
            idx = p;
        }
        w.reverse();
        w
    }

    pub fn to_json(&self) -> Value {
        let tup = |t: &Tuple| Value::Array(t.iter().map(int_to_json).collect());
        json!({
            "family": self.family.to_string(),
            "k": self.k,
            "bound": int_to_json(&self.bound),
            "root": tup(self.root()),
            "nodes": self.nodes.iter().map(|n| json!({"t": tup(&n.tuple), "parent": n.parent, "dir": n.dir})).collect::<Vec<_>>(),
            "pruned": self.pruned.iter().map(|e| json!({"t": tup(&e.tuple), "parent": e.parent, "dir": e.dir})).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let bad = |what: &str| Error::Parse(format!("tree JSON: {what}"));
        let family: Family = v["family"]
            .as_str()
            .ok_or_else(|| bad("missing family"))?
            .parse()?;
        let k = v["k"].as_u64().ok_or_else(|| bad("missing k"))?;
        let bound: BigInt = int_from_json(&v["bound"])?;
        let tup = |t: &Value| -> Result<Tuple, Error> {
            t.as_array()
                .ok_or_else(|| bad("tuple must be an array"))?
                .iter()
                .map(int_from_json)
                .collect()
        };
        let idx = |x: &Value| -> Result<Option<usize>, Error> {
            match x {
                Value::Null => Ok(None),
                other => other
                    .as_u64()
                    .map(|u| Some(u as usize))
                    .ok_or_else(|| bad("index must be an integer")),
            }
        };
        let mut nodes = Vec::new();
        for n in v["nodes"].as_array().ok_or_else(|| bad("missing nodes"))? {
            nodes.push(SolutionNode {
                tuple: tup(&n["t"])?,
                parent: idx(&n["parent"])?,
                dir: idx(&n["dir"])?,
                children: Vec::new(),
            });
        }
        for i in 0..nodes.len() {
            if let (Some(p), Some(d)) = (nodes[i].parent, nodes[i].dir) {
                let parent = nodes.get_mut(p).ok_or_else(|| bad("parent out of range"))?;
                parent.children.push((d, i));
            }
        }
        let mut pruned = Vec::new();
        for e in v["pruned"]
            .as_array()
            .map(Vec::as_slice)
            .unwrap_or_default()
        {
            let parent = idx(&e["parent"])?.ok_or_else(|| bad("pruned edge without parent"))?;
            let dir = idx(&e["dir"])?.ok_or_else(|| bad("pruned edge without direction"))?;
            pruned.push(PrunedEdge {
                parent,
                dir,
                tuple: tup(&e["t"])?,
            });
        }
        if nodes.is_empty() {
            return Err(bad("empty tree"));
        }
        Ok(SolutionTree {
            family,
            k,
            bound,
            nodes,
            pruned,
        })
    }
}

/// All solutions reachable from the fundamental solution through tuples
/// whose maximum coordinate stays `<= bound`.
///
/// Levels are expanded in parallel and merged in parent order, children in
/// direction order, so the output is deterministic. Every solution of an
/// admissible level is reachable this way (each one descends to the root
/// through tuples with smaller maximum), so the tree covers the box.
pub fn enumerate_tree(family: Family, k: u64, bound: &BigInt) -> Result<SolutionTree, Error> {
    let root = family.fundamental(k).ok_or_else(|| {
        Error::Domain(format!(
            "{family} with k = {k} has no positive integer solutions"
        ))
    })?;
    if root.iter().max().expect("nonempty") > bound {
        return Err(Error::Domain(format!(
            "bound {bound} is below the fundamental solution"
        )));
    }
    let mut nodes = vec![SolutionNode {
        tuple: root.clone(),
        parent: None,
        dir: None,
        children: Vec::new(),
    }];
    let mut index: HashMap<Tuple, usize> = HashMap::from([(root, 0)]);
    let mut pruned = Vec::new();
    let mut level = vec![0usize];
    while !level.is_empty() {
        let expanded: Vec<Vec<(usize, usize, Tuple)>> = level
            .par_iter()
            .map(|&p| {
                (1..=family.rank())
                    .map(|d| {
                        let y = family
                            .mutate_solution(&nodes[p].tuple, k, d)
                            .expect("tree nodes are solutions");
                        (p, d, y)
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (p, d, y) in expanded.into_iter().flatten() {
            if index.contains_key(&y) {
                continue;
            }
            if y.iter().max().expect("nonempty") > bound {
                pruned.push(PrunedEdge {
                    parent: p,
                    dir: d,
                    tuple: y,
                });
                continue;
            }
            let i = nodes.len();
            index.insert(y.clone(), i);
            nodes.push(SolutionNode {
                tuple: y,
                parent: Some(p),
                dir: Some(d),
                children: Vec::new(),
            });
            nodes[p].children.push((d, i));
            next.push(i);
        }
        level = next;
    }
    Ok(SolutionTree {
        family,
        k,
        bound: bound.clone(),
        nodes,
        pruned,
    })
}
