//! Blocks and separating vertices via low-point DFS on the support graph.
//!
//! Parallel edges never create a separating vertex, so working on the simple
//! graph of positive multiplicities gives the multigraph's blocks directly.

use super::Multigraph;
use crate::vertex_set::VertexSet;

struct Dfs<'a> {
    g: &'a Multigraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Dfs<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for w in self.g.neighbors(v) {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(v);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

fn run(g: &Multigraph) -> Dfs<'_> {
    let n = g.order();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            if g.neighbors(v).is_empty() {
                dfs.disc[v] = usize::MAX;
                dfs.blocks.push(VertexSet::singleton(v));
            } else {
                dfs.visit(v, None);
            }
        }
    }
    dfs
}

pub(super) fn blocks(g: &Multigraph) -> Vec<VertexSet> {
    let mut blocks = run(g).blocks;
    blocks.sort_by_key(|b| b.to_vec());
    blocks
}

pub(super) fn cut_vertices(g: &Multigraph) -> VertexSet {
    run(g).cuts
}
