//! Exact minimum set cover by branch and bound.
//!
//! Candidates are identified by index; each universe element is the set of
//! candidates covering it. The search branches on an uncovered element with
//! the fewest remaining candidates, propagates forced choices, and prunes with
//! two lower bounds: a packing of pairwise disjoint elements, and the vertex
//! cover of the graph formed by elements with exactly two remaining
//! candidates (estimated through a greedy clique partition).
//!
//! The returned witness is the lexicographically least optimal cover in
//! candidate order.

use std::time::Instant;

use crate::error::{domain, Result};

/// Maximum number of candidates the solver supports.
pub const MAX_CANDIDATES: usize = 256;

/// Result of a cover search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    /// Size of the best cover found.
    pub size: usize,
    /// Candidate indices of the best cover, ascending.
    pub witness: Vec<usize>,
    /// True when `size` is proven minimal (and `witness` lexicographically least).
    pub certified: bool,
    /// A proven lower bound on the minimum; equals `size` when certified.
    pub lower_bound: usize,
    /// Search nodes visited.
    pub nodes: u64,
}

/// An uncoverable element, reported by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Uncoverable(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Mask<const W: usize>([u64; W]);

impl<const W: usize> Mask<W> {
    const EMPTY: Self = Mask([0; W]);

    fn from_indices(ix: &[usize]) -> Self {
        let mut m = Self::EMPTY;
        for &i in ix {
            m.set(i);
        }
        m
    }
    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    #[inline]
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    #[inline]
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    #[inline]
    fn and(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= o.0[i];
        }
        r
    }
    #[inline]
    fn and_not(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] &= !o.0[i];
        }
        r
    }
    #[inline]
    fn or(self, o: Self) -> Self {
        let mut r = self;
        for i in 0..W {
            r.0[i] |= o.0[i];
        }
        r
    }
    #[inline]
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    #[inline]
    fn intersects(&self, o: &Self) -> bool {
        (0..W).any(|i| self.0[i] & o.0[i] != 0)
    }
    #[inline]
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    #[inline]
    fn subset_of(&self, o: &Self) -> bool {
        (0..W).all(|i| self.0[i] & !o.0[i] == 0)
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..W).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }
}

/// Options controlling a search.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    /// Abort once this instant passes; the result is then uncertified.
    pub deadline: Option<Instant>,
}

/// Solves min set cover for `num_candidates` candidates and the given elements
/// (each listed as the candidates that cover it).
pub fn solve_min_cover(
    num_candidates: usize,
    elements: &[Vec<usize>],
    limits: SearchLimits,
) -> Result<std::result::Result<CoverSolution, Uncoverable>> {
    if num_candidates > MAX_CANDIDATES {
        return Err(domain(format!(
            "{num_candidates} candidates exceed the solver limit of {MAX_CANDIDATES}"
        )));
    }
    if let Some(bad) = elements.iter().flatten().find(|&&c| c >= num_candidates) {
        return Err(domain(format!("candidate index {bad} out of range")));
    }
    if let Some(i) = elements.iter().position(|e| e.is_empty()) {
        return Ok(Err(Uncoverable(i)));
    }
    Ok(Ok(if num_candidates <= 64 {
        Solver::<1>::new(num_candidates, elements, limits).run()
    } else if num_candidates <= 128 {
        Solver::<2>::new(num_candidates, elements, limits).run()
    } else {
        Solver::<4>::new(num_candidates, elements, limits).run()
    }))
}

struct Solver<const W: usize> {
    num_candidates: usize,
    elements: Vec<Mask<W>>,
    /// Elements containing each candidate.
    occurrences: Vec<Vec<u32>>,
    limits: SearchLimits,
    nodes: u64,
    aborted: bool,
    state: State<W>,
}

/// Incremental search state with an undo trail.
struct State<const W: usize> {
    chosen: Mask<W>,
    excluded: Mask<W>,
    chosen_count: usize,
    /// Non-excluded candidates per element.
    free: Vec<u8>,
    /// Chosen candidates per element.
    covering: Vec<u16>,
    open: usize,
    trail: Vec<Step>,
    /// Elements whose free count dropped to one or zero, in order.
    pending: Vec<u32>,
    buckets: Vec<Vec<u32>>,
}

#[derive(Clone, Copy)]
enum Step {
    Choose(usize),
    /// Excluded candidate and the pending length before the exclusion.
    Exclude(usize, usize),
}

/// Outcome of a bounded search.
enum Found<const W: usize> {
    Cover(Mask<W>),
    None,
}

impl<const W: usize> Solver<W> {
    fn new(num_candidates: usize, elements: &[Vec<usize>], limits: SearchLimits) -> Self {
        let mut masks: Vec<Mask<W>> = elements.iter().map(|e| Mask::from_indices(e)).collect();
        masks.sort_by_key(|m| (m.count(), *m));
        masks.dedup();
        // An element whose candidate set contains another element's is implied.
        let mut kept: Vec<Mask<W>> = Vec::with_capacity(masks.len());
        for m in masks {
            if !kept.iter().any(|k| k.subset_of(&m)) {
                kept.push(m);
            }
        }
        let mut occurrences = vec![Vec::new(); num_candidates];
        for (i, m) in kept.iter().enumerate() {
            for c in m.iter() {
                occurrences[c].push(i as u32);
            }
        }
        let state = State {
            chosen: Mask::EMPTY,
            excluded: Mask::EMPTY,
            chosen_count: 0,
            free: kept.iter().map(|m| m.count().min(255) as u8).collect(),
            covering: vec![0; kept.len()],
            open: kept.len(),
            trail: Vec::new(),
            pending: Vec::new(),
            buckets: vec![Vec::new(); num_candidates + 1],
        };
        Solver {
            num_candidates,
            elements: kept,
            occurrences,
            limits,
            nodes: 0,
            aborted: false,
            state,
        }
    }

    fn run(mut self) -> CoverSolution {
        let greedy = self.greedy();
        let root_lb = self.bound_and_pivot(usize::MAX).0;
        // Phase 1: the optimum value.
        let mut best = greedy;
        let mut proven_lower = root_lb;
        loop {
            let target = best.count() as usize;
            if target <= proven_lower {
                break;
            }
            // Look for a cover strictly smaller than the incumbent.
            match self.search_bounded(Mask::EMPTY, Mask::EMPTY, target - 1) {
                Found::Cover(c) => best = c,
                Found::None => {
                    if !self.aborted {
                        proven_lower = target;
                    }
                    break;
                }
            }
            if self.aborted {
                break;
            }
        }
        if self.aborted {
            return self.finish(best, false, proven_lower);
        }
        // Phase 2: the lexicographically least cover of optimal size.
        let size = best.count() as usize;
        let mut include = Mask::<W>::EMPTY;
        let mut exclude = Mask::<W>::EMPTY;
        let mut current = best;
        for c in 0..self.num_candidates {
            if self.covers_all(include) {
                current = include;
                break;
            }
            let mut with_c = include;
            with_c.set(c);
            if current.get(c) {
                include = with_c;
                continue;
            }
            match self.search_bounded(with_c, exclude, size) {
                Found::Cover(cov) => {
                    include = with_c;
                    current = cov;
                }
                Found::None => {
                    if self.aborted {
                        return self.finish(best, false, size);
                    }
                    exclude.set(c);
                }
            }
        }
        self.finish(current, true, size)
    }

    fn finish(&self, cover: Mask<W>, certified: bool, lower: usize) -> CoverSolution {
        CoverSolution {
            size: cover.count() as usize,
            witness: cover.iter().collect(),
            certified,
            lower_bound: if certified {
                cover.count() as usize
            } else {
                lower
            },
            nodes: self.nodes,
        }
    }

    fn covers_all(&self, chosen: Mask<W>) -> bool {
        self.elements.iter().all(|e| e.intersects(&chosen))
    }

    /// Greedy cover with redundant members removed afterwards.
    fn greedy(&self) -> Mask<W> {
        let mut chosen = Mask::<W>::EMPTY;
        let mut uncovered: Vec<Mask<W>> = self.elements.clone();
        while !uncovered.is_empty() {
            let mut counts = vec![0u32; self.num_candidates];
            for e in &uncovered {
                for c in e.iter() {
                    counts[c] += 1;
                }
            }
            let best = (0..self.num_candidates)
                .max_by_key(|&c| (counts[c], std::cmp::Reverse(c)))
                .expect("candidates");
            chosen.set(best);
            uncovered.retain(|e| !e.get(best));
        }
        for c in chosen.iter().collect::<Vec<_>>().into_iter().rev() {
            let mut without = chosen;
            without.0[c / 64] &= !(1 << (c % 64));
            if self.covers_all(without) {
                chosen = without;
            }
        }
        chosen
    }

    fn choose(&mut self, c: usize) {
        let st = &mut self.state;
        st.chosen.set(c);
        st.chosen_count += 1;
        for &e in &self.occurrences[c] {
            let k = &mut st.covering[e as usize];
            if *k == 0 {
                st.open -= 1;
            }
            *k += 1;
        }
        st.trail.push(Step::Choose(c));
    }

    fn exclude(&mut self, c: usize) {
        let st = &mut self.state;
        st.excluded.set(c);
        st.trail.push(Step::Exclude(c, st.pending.len()));
        for &e in &self.occurrences[c] {
            let f = &mut st.free[e as usize];
            *f -= 1;
            if *f <= 1 && st.covering[e as usize] == 0 {
                st.pending.push(e);
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.state.trail.len() > mark {
            let st = &mut self.state;
            match st.trail.pop().expect("trail") {
                Step::Choose(c) => {
                    st.chosen.0[c / 64] &= !(1 << (c % 64));
                    st.chosen_count -= 1;
                    for &e in &self.occurrences[c] {
                        let k = &mut st.covering[e as usize];
                        *k -= 1;
                        if *k == 0 {
                            st.open += 1;
                        }
                    }
                }
                Step::Exclude(c, len) => {
                    st.pending.truncate(len);
                    st.excluded.0[c / 64] &= !(1 << (c % 64));
                    for &e in &self.occurrences[c] {
                        st.free[e as usize] += 1;
                    }
                }
            }
        }
    }

    /// Finds a cover of size at most `limit` extending `include` and avoiding
    /// `exclude`, or proves there is none.
    fn search_bounded(&mut self, include: Mask<W>, exclude: Mask<W>, limit: usize) -> Found<W> {
        if include.intersects(&exclude) || include.count() as usize > limit {
            return Found::None;
        }
        for c in include.iter() {
            self.choose(c);
        }
        for c in exclude.iter() {
            self.exclude(c);
        }
        // Elements already down to one candidate before any exclusion.
        for (e, m) in self.elements.iter().enumerate() {
            if m.count() == 1 && self.state.covering[e] == 0 {
                self.state.pending.push(e as u32);
            }
        }
        let found = if self.dfs(limit, 0) {
            Found::Cover(self.state.chosen)
        } else {
            Found::None
        };
        self.undo_to(0);
        self.state.pending.clear();
        found
    }

    /// Depth-first search from the current state. On success the state holds
    /// the cover; the caller unwinds it.
    /// `start` indexes the first pending element not yet handled by an ancestor.
    fn dfs(&mut self, limit: usize, start: usize) -> bool {
        if self.aborted {
            return false;
        }
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.limits.deadline {
                if Instant::now() >= d {
                    self.aborted = true;
                    return false;
                }
            }
        }
        let mark = self.state.trail.len();
        if !self.propagate(limit, start) {
            self.undo_to(mark);
            return false;
        }
        if self.state.open == 0 {
            return true;
        }
        let have = self.state.chosen_count;
        let cursor = self.state.pending.len();
        let (bound, pivot) = self.bound_and_pivot(limit - have);
        if have + bound <= limit {
            let free = self.elements[pivot as usize].and_not(self.state.excluded);
            for c in free.iter() {
                let before = self.state.trail.len();
                self.choose(c);
                if self.dfs(limit, cursor) {
                    return true;
                }
                self.undo_to(before);
                if self.aborted {
                    break;
                }
                self.exclude(c);
            }
        }
        self.undo_to(mark);
        false
    }

    /// Chooses the only remaining candidate of every pending open element;
    /// false on an element with none or when exceeding `limit`.
    fn propagate(&mut self, limit: usize, start: usize) -> bool {
        let mut i = start;
        while i < self.state.pending.len() {
            let e = self.state.pending[i] as usize;
            i += 1;
            let st = &self.state;
            if st.covering[e] > 0 {
                continue;
            }
            match st.free[e] {
                0 => return false,
                1 => {
                    let c = self.elements[e]
                        .and_not(st.excluded)
                        .iter()
                        .next()
                        .expect("one free");
                    self.choose(c);
                    if self.state.chosen_count > limit {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    /// Lower bound on the candidates still needed for the open elements, and
    /// the open element with the fewest free candidates. Stops refining once
    /// the bound exceeds `budget`.
    fn bound_and_pivot(&mut self, budget: usize) -> (usize, u32) {
        let nc = self.num_candidates;
        let st = &mut self.state;
        let mut buckets = std::mem::take(&mut st.buckets);
        for b in buckets.iter_mut() {
            b.clear();
        }
        for (e, (&f, &k)) in st.free.iter().zip(&st.covering).enumerate() {
            if k == 0 {
                buckets[f as usize].push(e as u32);
            }
        }
        let excluded = st.excluded;
        let pivot = buckets.iter().find_map(|b| b.first().copied()).unwrap_or(0);

        // Disjoint packing in order of increasing freedom.
        let mut used = Mask::<W>::EMPTY;
        let mut best = 0;
        for &i in buckets.iter().flatten() {
            let f = self.elements[i as usize].and_not(excluded);
            if !f.intersects(&used) {
                used = used.or(f);
                best += 1;
            }
        }

        // Vertex cover of the two-candidate graph, plus a packing outside it.
        if best <= budget && buckets.len() > 2 && !buckets[2].is_empty() {
            let mut adj = vec![Mask::<W>::EMPTY; nc];
            let mut vertices = Mask::<W>::EMPTY;
            for &i in &buckets[2] {
                let f = self.elements[i as usize].and_not(excluded);
                let mut it = f.iter();
                let (a, b) = (it.next().unwrap(), it.next().unwrap());
                adj[a].set(b);
                adj[b].set(a);
                vertices = vertices.or(f);
            }
            let mut extra = 0;
            let mut used = vertices;
            for &i in buckets[3..].iter().flatten() {
                let f = self.elements[i as usize].and_not(excluded);
                if !f.intersects(&used) {
                    used = used.or(f);
                    extra += 1;
                }
            }
            // Only whether the total exceeds the budget matters.
            let cap = budget.saturating_add(1).saturating_sub(extra);
            let with_pairs = min_vertex_cover(&adj, vertices, cap) + extra;
            best = best.max(with_pairs);
        }
        self.state.buckets = buckets;
        (best, pivot)
    }
}

/// Minimum vertex cover of the graph induced on `alive`, capped at `cap`:
/// returns `min(cover size, cap)`.
fn min_vertex_cover<const W: usize>(adj: &[Mask<W>], alive: Mask<W>, cap: usize) -> usize {
    let mut alive = alive;
    let mut taken = 0;
    // Reductions: isolated vertices, pendant vertices, degree-2 vertices in triangles.
    loop {
        if taken >= cap {
            return cap;
        }
        let mut changed = false;
        for v in alive.iter().collect::<Vec<_>>() {
            if !alive.get(v) {
                continue;
            }
            let nb = adj[v].and(alive);
            match nb.count() {
                0 => {
                    alive.clear(v);
                    changed = true;
                }
                1 => {
                    alive.clear(v);
                    alive = alive.and_not(nb);
                    taken += 1;
                    changed = true;
                }
                2 => {
                    let mut it = nb.iter();
                    let (a, b) = (it.next().unwrap(), it.next().unwrap());
                    if adj[a].get(b) {
                        alive.clear(v);
                        alive = alive.and_not(nb);
                        taken += 2;
                        changed = true;
                    } else {
                        if taken + 1 >= cap {
                            return cap;
                        }
                        // Fold v, a, b into a: some optimal cover takes v alone
                        // or both a and b.
                        let mut folded = adj.to_vec();
                        let merged = adj[a].or(adj[b]).and(alive);
                        alive.clear(v);
                        alive.clear(b);
                        for u in adj[b].and(alive).iter() {
                            folded[u].clear(b);
                            folded[u].set(a);
                        }
                        folded[a] = merged.and(alive);
                        folded[a].clear(a);
                        return taken + 1 + min_vertex_cover(&folded, alive, cap - taken - 1);
                    }
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    if taken >= cap || alive.is_empty() {
        return taken.min(cap);
    }
    // Split into connected components.
    let start = alive.iter().next().expect("nonempty");
    let mut comp = Mask::EMPTY;
    comp.set(start);
    let mut frontier = comp;
    while !frontier.is_empty() {
        let mut next = Mask::EMPTY;
        for v in frontier.iter() {
            next = next.or(adj[v]);
        }
        frontier = next.and(alive).and_not(comp);
        comp = comp.or(frontier);
    }
    let rest = alive.and_not(comp);
    if !rest.is_empty() {
        let first = min_vertex_cover(adj, comp, cap - taken);
        if taken + first >= cap {
            return cap;
        }
        return taken + first + min_vertex_cover(adj, rest, cap - taken - first);
    }
    let room = cap - taken;
    let lb = clique_partition_bound(adj, alive).max(matching_bound(adj, alive));
    if lb >= room {
        return cap;
    }
    // Branch on a vertex of maximum degree: take it, or take its neighbourhood.
    let v = alive
        .iter()
        .max_by_key(|&v| adj[v].and(alive).count())
        .expect("nonempty");
    let nb = adj[v].and(alive);
    let mut without_v = alive;
    without_v.clear(v);
    let mut best = 1 + min_vertex_cover(adj, without_v, room - 1);
    let k = nb.count() as usize;
    if k < best {
        best = best.min(k + min_vertex_cover(adj, without_v.and_not(nb), best - k));
    }
    taken + best
}

/// Ceiling of the LP relaxation of vertex cover on a connected graph: half
/// the maximum matching of its bipartite double cover.
fn matching_bound<const W: usize>(adj: &[Mask<W>], alive: Mask<W>) -> usize {
    const NONE: usize = usize::MAX;
    let n = adj.len();
    let mut match_right = vec![NONE; n];
    fn augment<const W: usize>(
        u: usize,
        adj: &[Mask<W>],
        alive: Mask<W>,
        seen: &mut Mask<W>,
        match_right: &mut [usize],
    ) -> bool {
        for w in adj[u].and(alive).and_not(*seen).iter() {
            seen.set(w);
            if match_right[w] == usize::MAX
                || augment(match_right[w], adj, alive, seen, match_right)
            {
                match_right[w] = u;
                return true;
            }
        }
        false
    }
    let mut size = 0usize;
    for u in alive.iter() {
        let mut seen = Mask::EMPTY;
        if augment(u, adj, alive, &mut seen, &mut match_right) {
            size += 1;
        }
    }
    size.div_ceil(2)
}

/// `|V|` minus the number of cliques in a greedy clique partition.
fn clique_partition_bound<const W: usize>(adj: &[Mask<W>], alive: Mask<W>) -> usize {
    let mut order: Vec<(u32, usize)> = alive
        .iter()
        .map(|v| (adj[v].and(alive).count(), v))
        .collect();
    order.sort_unstable_by(|a, b| b.cmp(a));
    let mut cliques: Vec<Mask<W>> = Vec::new();
    for (_, v) in order {
        match cliques.iter_mut().find(|q| q.subset_of(&adj[v])) {
            Some(q) => q.set(v),
            None => {
                let mut q = Mask::EMPTY;
                q.set(v);
                cliques.push(q);
            }
        }
    }
    alive.count() as usize - cliques.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(c: usize, e: &[Vec<usize>]) -> CoverSolution {
        solve_min_cover(c, e, SearchLimits::default())
            .unwrap()
            .unwrap()
    }

    #[test]
    fn toy_instance() {
        // universe {a, b}; A -> {a}, B -> {b}, C -> {a, b}
        let s = solve(3, &[vec![0, 2], vec![1, 2]]);
        assert_eq!((s.size, s.witness.clone(), s.certified), (1, vec![2], true));
    }

    #[test]
    fn infeasible_reported() {
        let r = solve_min_cover(2, &[vec![0], vec![]], SearchLimits::default()).unwrap();
        assert_eq!(r, Err(Uncoverable(1)));
        assert!(solve_min_cover(2, &[vec![3]], SearchLimits::default()).is_err());
    }

    #[test]
    fn lexicographically_least_witness() {
        // Elements {0,1}, {2,3}: optimum 2, lex-least {0,2}.
        let s = solve(4, &[vec![1, 0], vec![3, 2]]);
        assert_eq!(s.witness, vec![0, 2]);
    }

    /// Exhaustive oracle over all subsets.
    fn brute(c: usize, e: &[Vec<usize>]) -> (usize, Vec<usize>) {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for mask in 0u32..(1 << c) {
            let set: Vec<usize> = (0..c).filter(|&i| mask >> i & 1 == 1).collect();
            if e.iter().all(|el| el.iter().any(|x| set.contains(x))) {
                let cand = (set.len(), set);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let c = rng.gen_range(1..=12);
            let ne = rng.gen_range(1..=20);
            let elements: Vec<Vec<usize>> = (0..ne)
                .map(|_| {
                    let k = rng.gen_range(1..=c.min(4));
                    let mut v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..c)).collect();
                    v.sort_unstable();
                    v.dedup();
                    v
                })
                .collect();
            let s = solve(c, &elements);
            let (size, witness) = brute(c, &elements);
            assert_eq!(s.size, size, "{elements:?}");
            assert_eq!(s.witness, witness, "{elements:?}");
            assert!(s.certified);
        }
    }

    #[test]
    fn vertex_cover_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..300 {
            let nv = rng.gen_range(1..=14);
            let p = rng.gen_range(0.05..0.6);
            let mut adj = vec![Mask::<1>::EMPTY; nv];
            for a in 0..nv {
                for b in a + 1..nv {
                    if rng.gen_bool(p) {
                        adj[a].set(b);
                        adj[b].set(a);
                    }
                }
            }
            let mut best = nv;
            for s in 0u32..(1 << nv) {
                let ok = (0..nv).all(|a| s >> a & 1 == 1 || adj[a].iter().all(|b| s >> b & 1 == 1));
                if ok {
                    best = best.min(s.count_ones() as usize);
                }
            }
            let all = Mask::from_indices(&(0..nv).collect::<Vec<_>>());
            assert_eq!(min_vertex_cover(&adj, all, nv + 1), best);
            for cap in 0..=best {
                assert_eq!(min_vertex_cover(&adj, all, cap), cap);
            }
        }
    }

    #[test]
    fn wide_masks() {
        // 150 candidates; element i covered by candidates {i, i+1}.
        let e: Vec<Vec<usize>> = (0..149).map(|i| vec![i, i + 1]).collect();
        let s = solve(150, &e);
        assert_eq!(s.size, 74 + 1);
        assert!(s.certified);
    }
}
