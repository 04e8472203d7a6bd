//! The graph of a family of ideals: one vertex per ideal, an edge whenever
//! two ideals share exactly one variable.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::VariableSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// The unique shared variable.
    pub variable: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertex indices in increasing order.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    pub is_tree: bool,
    /// Vertices of one cycle, in traversal order, when the component is not
    /// a tree.
    pub cycle: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFamilyGraph {
    names: Vec<String>,
    vars: Vec<VariableSet>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    components: Vec<Component>,
}

impl IdealFamilyGraph {
    /// Builds the graph, rejecting any pair of ideals that shares two or
    /// more variables (the first such pair in index order is reported).
    pub fn build(ideals: &[(String, VariableSet)]) -> Result<Self> {
        let k = ideals.len();
        for (i, (name, _)) in ideals.iter().enumerate() {
            if ideals[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); k];
        for i in 0..k {
            for j in i + 1..k {
                let shared = ideals[i].1.intersection(&ideals[j].1);
                match shared.len() {
                    0 => {}
                    1 => {
                        adjacency[i].push(edges.len());
                        adjacency[j].push(edges.len());
                        edges.push(Edge {
                            a: i,
                            b: j,
                            variable: shared[0].clone(),
                        });
                    }
                    _ => {
                        return Err(Error::TooManyShared {
                            first: ideals[i].0.clone(),
                            second: ideals[j].0.clone(),
                            shared,
                        })
                    }
                }
            }
        }
        let mut graph = Self {
            names: ideals.iter().map(|(n, _)| n.clone()).collect(),
            vars: ideals.iter().map(|(_, v)| v.clone()).collect(),
            edges,
            adjacency,
            components: Vec::new(),
        };
        graph.components = graph.compute_components();
        Ok(graph)
    }

    fn compute_components(&self) -> Vec<Component> {
        let k = self.names.len();
        let mut label = vec![usize::MAX; k];
        let mut components = Vec::new();
        for start in 0..k {
            if label[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            let mut vertices = Vec::new();
            label[start] = id;
            while let Some(v) = stack.pop() {
                vertices.push(v);
                for (w, _) in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        stack.push(w);
                    }
                }
            }
            vertices.sort_unstable();
            let edge_count = self
                .edges
                .iter()
                .filter(|e| label[e.a] == id)
                .count();
            let is_tree = edge_count + 1 == vertices.len();
            let cycle = (!is_tree).then(|| self.find_cycle(start));
            components.push(Component {
                vertices,
                edge_count,
                is_tree,
                cycle,
            });
        }
        components
    }

    /// Depth-first search from `start` until an edge closes a cycle; returns
    /// the vertices on that cycle.
    fn find_cycle(&self, start: usize) -> Vec<usize> {
        let k = self.names.len();
        let mut on_path = vec![false; k];
        let mut visited = vec![false; k];
        // (vertex, incoming edge, next adjacency slot)
        let mut path: Vec<(usize, Option<usize>, usize)> = vec![(start, None, 0)];
        visited[start] = true;
        on_path[start] = true;
        while let Some(&mut (v, incoming, ref mut slot)) = path.last_mut() {
            if *slot == self.adjacency[v].len() {
                on_path[v] = false;
                path.pop();
                continue;
            }
            let e = self.adjacency[v][*slot];
            *slot += 1;
            if Some(e) == incoming {
                continue;
            }
            let edge = &self.edges[e];
            let w = if edge.a == v { edge.b } else { edge.a };
            if on_path[w] {
                let from = path.iter().position(|&(u, _, _)| u == w).expect("w on path");
                return path[from..].iter().map(|&(u, _, _)| u).collect();
            }
            if !visited[w] {
                visited[w] = true;
                on_path[w] = true;
                path.push((w, Some(e), 0));
            }
        }
        Vec::new()
    }

    /// `k`, the number of ideals.
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// `r`, the number of connected components.
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vars(&self, v: usize) -> &VariableSet {
        &self.vars[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Neighbours of `v` with the shared variable.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, &str)> + '_ {
        self.adjacency[v].iter().map(move |&e| {
            let edge = &self.edges[e];
            let w = if edge.a == v { edge.b } else { edge.a };
            (w, edge.variable.as_str())
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_forest(&self) -> bool {
        self.components.iter().all(|c| c.is_tree)
    }

    /// The first non-tree component as a [`Error::Cycle`].
    pub fn check_forest(&self) -> Result<()> {
        match self.components.iter().find_map(|c| c.cycle.as_ref()) {
            Some(cycle) => Err(Error::Cycle {
                vertices: cycle.iter().map(|&v| self.names[v].to_string()).collect(),
            }),
            None => Ok(()),
        }
    }
}
