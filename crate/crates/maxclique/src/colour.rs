//! Colour-bounded solvers: MCQ (styles 1-3), MCSa (static colour order)
//! and MCSb (static order plus colour repair), built on greedy sequential
//! colouring (`number_sort`).

use crate::graph::Graph;
use crate::ordering::{order_by_style, OrderingStyle};
use crate::search::{SearchBudget, SearchOutcome, SearchState};

/// Candidate vertices sorted into non-decreasing colour order.
///
/// `colour` is positional: `colour[i]` is the (1-based) colour of
/// `ordered[i]`, and it never decreases with `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColourResult {
    pub ordered: Vec<usize>,
    pub colour: Vec<usize>,
    pub colours_used: usize,
}

/// Colour classes under construction: `classes()[c]` holds the vertices of
/// colour `c + 1` in insertion order. Classes are pairwise disjoint
/// independent sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColourClasses {
    classes: Vec<Vec<usize>>,
}

fn conflicts(g: &Graph, v: usize, class: &[usize]) -> bool {
    class.iter().any(|&w| g.adjacent(v, w))
}

/// The unique member of `class` adjacent to `v`, if exactly one exists.
/// Zero or two-plus conflicts both yield `None`.
pub fn get_single_conflict_vertex(g: &Graph, v: usize, class: &[usize]) -> Option<usize> {
    let mut found = None;
    for &w in class {
        if g.adjacent(v, w) {
            if found.is_some() {
                return None;
            }
            found = Some(w);
        }
    }
    found
}

impl ColourClasses {
    pub fn new() -> Self {
        ColourClasses::default()
    }

    /// Build from explicit classes (used to set up repair scenarios in
    /// tests). Callers are responsible for the class invariants.
    pub fn from_classes(classes: Vec<Vec<usize>>) -> Self {
        ColourClasses { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    fn clear(&mut self) {
        for class in &mut self.classes {
            class.clear();
        }
    }

    /// First-fit placement: `v` joins the lowest class it does not
    /// conflict with. Returns the class index.
    fn place(&mut self, g: &Graph, v: usize) -> usize {
        let mut k = 0;
        while k < self.classes.len() && conflicts(g, v, &self.classes[k]) {
            k += 1;
        }
        if k == self.classes.len() {
            self.classes.push(Vec::new());
        }
        self.classes[k].push(v);
        k
    }

    /// Try to empty class `k` by relocating its sole member `v`: find a
    /// class `i < k - 1` whose only conflict with `v` is some `w`, and a
    /// class `j` with `i < j < k` where `w` is conflict-free; then move
    /// `v` to `i` and `w` to `j`. Classes `i` ascending, then `j`
    /// ascending; the first feasible pair wins. Returns whether the
    /// exchange happened; on `false` the classes are untouched.
    pub fn repair(&mut self, g: &Graph, v: usize, k: usize) -> bool {
        for i in 0..k.saturating_sub(1) {
            let Some(w) = get_single_conflict_vertex(g, v, &self.classes[i]) else {
                continue;
            };
            for j in i + 1..k {
                if !conflicts(g, w, &self.classes[j]) {
                    let vp = self.classes[k].iter().position(|&x| x == v).unwrap();
                    self.classes[k].remove(vp);
                    let wp = self.classes[i].iter().position(|&x| x == w).unwrap();
                    self.classes[i].remove(wp);
                    self.classes[i].push(v);
                    self.classes[j].push(w);
                    return true;
                }
            }
        }
        false
    }
}

/// Greedy sequential colouring of `col_ord` (first-fit), flattened class
/// by class into non-decreasing colour order (a pigeonhole sort).
///
/// When `repair_bound` is `Some(delta)`, a vertex that has just opened
/// class `k` with `k + 1 > delta` triggers a repair attempt; success frees
/// the top class and lowers the colour count by one. `delta` is signed
/// because the solvers pass `maxSize - |C|`, which can be negative early
/// in search.
pub fn number_sort_into(
    g: &Graph,
    col_ord: &[usize],
    repair_bound: Option<i64>,
    classes: &mut ColourClasses,
) -> ColourResult {
    classes.clear();
    let mut colours = 0usize;
    for &v in col_ord {
        let k = classes.place(g, v);
        colours = colours.max(k + 1);
        if let Some(delta) = repair_bound {
            if k as i64 + 1 > delta && classes.classes[k].len() == 1 && classes.repair(g, v, k) {
                colours -= 1;
            }
        }
    }
    // Only the top class can be emptied by repair, so the first `colours`
    // classes hold everything.
    debug_assert!(classes.classes[colours..].iter().all(|c| c.is_empty()));
    let mut ordered = Vec::with_capacity(col_ord.len());
    let mut colour = Vec::with_capacity(col_ord.len());
    for (ci, class) in classes.classes.iter().take(colours).enumerate() {
        for &w in class {
            ordered.push(w);
            colour.push(ci + 1);
        }
    }
    ColourResult {
        ordered,
        colour,
        colours_used: colours,
    }
}

/// `number_sort_into` with a fresh scratch structure.
pub fn number_sort(g: &Graph, col_ord: &[usize], repair_bound: Option<i64>) -> ColourResult {
    let mut classes = ColourClasses::new();
    number_sort_into(g, col_ord, repair_bound, &mut classes)
}

struct ColourSearch<'a> {
    g: &'a Graph,
    state: SearchState,
    classes: ColourClasses,
    repair: bool,
}

impl<'a> ColourSearch<'a> {
    /// MCQ: the candidate set is re-coloured in its own current order at
    /// every node and replaced by the colour order.
    fn expand_mcq(&mut self, c: &mut Vec<usize>, p: &[usize]) {
        if self.state.out_of_time() {
            return;
        }
        self.state.nodes += 1;
        let cr = number_sort_into(self.g, p, None, &mut self.classes);
        for i in (0..cr.ordered.len()).rev() {
            if cr.colour[i] + c.len() <= self.state.max_size {
                return;
            }
            let v = cr.ordered[i];
            c.push(v);
            let new_p: Vec<usize> = cr.ordered[..i]
                .iter()
                .copied()
                .filter(|&w| self.g.adjacent(v, w))
                .collect();
            if new_p.is_empty() && c.len() > self.state.max_size {
                self.state.save_solution(c);
            }
            if !new_p.is_empty() {
                self.expand_mcq(c, &new_p);
            }
            c.pop();
        }
    }

    /// MCSa/MCSb: colouring always happens in `col_ord`, the adjunct
    /// ordered set filtered (never re-sorted) down the recursion, so every
    /// node colours its candidates in the initial style order.
    fn expand_mcs(&mut self, c: &mut Vec<usize>, col_ord: &mut Vec<usize>) {
        if self.state.out_of_time() {
            return;
        }
        self.state.nodes += 1;
        let bound = self
            .repair
            .then(|| self.state.max_size as i64 - c.len() as i64);
        let cr = number_sort_into(self.g, col_ord, bound, &mut self.classes);
        for i in (0..cr.ordered.len()).rev() {
            if cr.colour[i] + c.len() <= self.state.max_size {
                return;
            }
            let v = cr.ordered[i];
            c.push(v);
            // The surviving candidates adjacent to v, in static order;
            // col_ord still holds v here but adjacency excludes it.
            let mut new_col_ord: Vec<usize> = col_ord
                .iter()
                .copied()
                .filter(|&w| self.g.adjacent(v, w))
                .collect();
            if new_col_ord.is_empty() && c.len() > self.state.max_size {
                self.state.save_solution(c);
            }
            if !new_col_ord.is_empty() {
                self.expand_mcs(c, &mut new_col_ord);
            }
            c.pop();
            let pos = col_ord.iter().position(|&u| u == v).unwrap();
            col_ord.remove(pos);
        }
    }
}

fn styled_indices(g: &Graph, style: OrderingStyle) -> Vec<usize> {
    order_by_style(g, style)
        .into_iter()
        .map(|r| r.index)
        .collect()
}

/// MCQ: greedy-colouring bound with the candidate set kept in colour
/// order. Style 3 is the MCR variant.
pub fn mcq_search(g: &Graph, style: OrderingStyle, budget: SearchBudget) -> SearchOutcome {
    let mut search = ColourSearch {
        g,
        state: SearchState::start(budget),
        classes: ColourClasses::new(),
        repair: false,
    };
    let p = styled_indices(g, style);
    search.expand_mcq(&mut Vec::with_capacity(g.n()), &p);
    search.state.finish()
}

fn mcs_search(
    g: &Graph,
    style: OrderingStyle,
    budget: SearchBudget,
    repair: bool,
) -> SearchOutcome {
    let mut search = ColourSearch {
        g,
        state: SearchState::start(budget),
        classes: ColourClasses::new(),
        repair,
    };
    let mut col_ord = styled_indices(g, style);
    search.expand_mcs(&mut Vec::with_capacity(g.n()), &mut col_ord);
    search.state.finish()
}

/// MCSa: MCQ plus a static colouring order.
pub fn mcsa_search(g: &Graph, style: OrderingStyle, budget: SearchBudget) -> SearchOutcome {
    mcs_search(g, style, budget, false)
}

/// MCSb: MCSa plus colour repair in the colouring step.
pub fn mcsb_search(g: &Graph, style: OrderingStyle, budget: SearchBudget) -> SearchOutcome {
    mcs_search(g, style, budget, true)
}
