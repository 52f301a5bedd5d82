//! BBMC: the MCSa search tree over bit strings. Vertices are renamed so
//! that renamed index i is the i-th vertex of the style order, which makes
//! the static colouring order the natural ascending bit order.

use crate::bitset::{BitString, Word};
use crate::colour::ColourResult;
use crate::graph::Graph;
use crate::ordering::{order_by_style, OrderingStyle, VertexRecord};
use crate::search::{SearchBudget, SearchOutcome, SearchState};

/// Renamed adjacency rows as bit strings, plus their complements and the
/// renaming map back to original vertex ids. Built once per search.
pub struct BitNeighbourhoods<W: Word = u64> {
    pub n: Vec<BitString<W>>,
    pub inv_n: Vec<BitString<W>>,
    pub renaming: Vec<VertexRecord>,
}

/// Rename vertices into style order and encode each neighbourhood as a
/// bit string: bit j of `n[i]` is set iff the originals behind renamed i
/// and j are adjacent. `inv_n[i]` is the complement (so its diagonal bit
/// is set).
pub fn build_bit_neighbourhoods<W: Word>(g: &Graph, style: OrderingStyle) -> BitNeighbourhoods<W> {
    let renaming = order_by_style(g, style);
    let nv = g.n();
    let mut n: Vec<BitString<W>> = (0..nv).map(|_| BitString::new(nv)).collect();
    for i in 0..nv {
        for j in 0..nv {
            if g.adjacent(renaming[i].index, renaming[j].index) {
                n[i].set(j);
            }
        }
    }
    let inv_n = n.iter().map(|row| row.complement()).collect();
    BitNeighbourhoods { n, inv_n, renaming }
}

/// Colour the candidates in `p` from the colour-class perspective: open a
/// class, seed Q with the remaining candidates, and repeatedly take the
/// lowest set bit v of Q, emit it, and shrink Q to v's non-neighbours
/// (Q = Q ∧ invN[v]). Because candidates are consumed in ascending renamed
/// order, the output is the same first-fit colouring as `number_sort` on
/// the equivalent order, already sorted by colour.
pub fn bb_colour<W: Word>(p: &BitString<W>, nbhd: &BitNeighbourhoods<W>) -> ColourResult {
    let m = p.cardinality();
    let mut ordered = Vec::with_capacity(m);
    let mut colour = Vec::with_capacity(m);
    let mut remaining = p.clone();
    let mut colour_class = 0;
    while !remaining.is_empty() {
        colour_class += 1;
        let mut q = remaining.clone();
        while let Some(v) = q.first_set() {
            remaining.clear_bit(v);
            q.clear_bit(v);
            q.and_assign(&nbhd.inv_n[v]);
            ordered.push(v);
            colour.push(colour_class);
        }
    }
    ColourResult {
        ordered,
        colour,
        colours_used: colour_class,
    }
}

struct BbSearch<'a, W: Word> {
    nbhd: &'a BitNeighbourhoods<W>,
    state: SearchState,
}

impl<'a, W: Word> BbSearch<'a, W> {
    /// `c` holds renamed ids; solutions are translated back on save.
    fn expand(&mut self, c: &mut Vec<usize>, p: &mut BitString<W>) {
        if self.state.out_of_time() {
            return;
        }
        self.state.nodes += 1;
        let cr = bb_colour(p, self.nbhd);
        for i in (0..cr.ordered.len()).rev() {
            if cr.colour[i] + c.len() <= self.state.max_size {
                return;
            }
            let v = cr.ordered[i];
            c.push(v);
            let mut new_p = p.clone();
            new_p.and_assign(&self.nbhd.n[v]);
            if new_p.is_empty() && c.len() > self.state.max_size {
                let original: Vec<usize> = c.iter().map(|&r| self.nbhd.renaming[r].index).collect();
                self.state.save_solution(&original);
            }
            if !new_p.is_empty() {
                self.expand(c, &mut new_p);
            }
            c.pop();
            p.clear_bit(v);
        }
    }
}

/// BBMC over an explicit word type; observable results (nodes, solution,
/// clique size) are word-size independent.
pub fn bbmc_search_with_word<W: Word>(
    g: &Graph,
    style: OrderingStyle,
    budget: SearchBudget,
) -> SearchOutcome {
    let state = SearchState::start(budget);
    let nbhd = build_bit_neighbourhoods::<W>(g, style);
    let mut search = BbSearch { nbhd: &nbhd, state };
    let mut p = BitString::full(g.n());
    search.expand(&mut Vec::with_capacity(g.n()), &mut p);
    search.state.finish()
}

/// BBMC with the default 64-bit words.
pub fn bbmc_search(g: &Graph, style: OrderingStyle, budget: SearchBudget) -> SearchOutcome {
    bbmc_search_with_word::<u64>(g, style, budget)
}
