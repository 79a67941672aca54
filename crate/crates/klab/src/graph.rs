//! Small undirected simple graphs stored as adjacency bitmasks.
//!
//! Everything in this crate works on graphs with at most 64 vertices; the
//! sweep never goes past 7 and the join family example has 23.

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "graphs are limited to 64 vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Connected component of `start` inside the vertex set `within`.
    pub fn component_of(&self, start: usize, within: u64) -> u64 {
        debug_assert!(within >> start & 1 == 1);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & within & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the induced subgraph on `within`.
    pub fn components(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.component_of(v, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0, self.full_mask()) == self.full_mask()
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.adj[v] & mask != mask & !(1 << v) {
                return false;
            }
        }
        true
    }

    /// All triangles as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let above_u = self.adj[u] >> (u + 1) << (u + 1);
            let mut mv = above_u;
            while mv != 0 {
                let v = mv.trailing_zeros() as usize;
                mv &= mv - 1;
                let mut mw = self.adj[v] & above_u & !((1u64 << (v + 1)) - 1);
                while mw != 0 {
                    let w = mw.trailing_zeros() as usize;
                    mw &= mw - 1;
                    if self.has_edge(u, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// All K4 subgraphs as sorted vertex quadruples.
    pub fn k4s(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for t in self.triangles() {
            let [u, v, w] = t;
            let mut m = self.adj[u] & self.adj[v] & self.adj[w] & !((1u64 << (w + 1)) - 1);
            while m != 0 {
                let x = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push([u, v, w, x]);
            }
        }
        out
    }

    /// Induced subgraph on the vertices of `mask`; vertex i of the result is
    /// the i-th lowest bit of the mask.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = mask_bits(mask).collect();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union of `self` and `other` plus all edges in between.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n)
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// Wheel on 5 vertices: rim 4-cycle 0-1-2-3 plus hub 4.
    pub fn wheel5() -> Graph {
        let mut w = Graph::new(5);
        for v in 0..4 {
            w.add_edge(v, (v + 1) % 4);
            w.add_edge(v, 4);
        }
        w
    }

    /// Exact chromatic number by DSATUR branch and bound with a greedy clique
    /// lower bound.
    pub fn chromatic_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        if self.edge_count() == 0 {
            return 1;
        }
        let clique = self.greedy_clique();
        let mut best = self.greedy_coloring();
        let lower = clique.count_ones() as usize;
        if lower == best {
            return best;
        }
        let mut colors = vec![usize::MAX; self.n];
        // Seed with the clique to cut symmetry.
        let mut seeded = 0;
        for (c, v) in mask_bits(clique).enumerate() {
            colors[v] = c;
            seeded = seeded.max(c + 1);
        }
        self.dsatur(&mut colors, seeded, lower, &mut best);
        best
    }

    fn dsatur(&self, colors: &mut [usize], used: usize, lower: usize, best: &mut usize) {
        if used >= *best {
            return;
        }
        // Pick the uncolored vertex with maximum saturation, tie-break on degree.
        let mut pick = None;
        let mut pick_key = (0usize, 0usize);
        for v in 0..self.n {
            if colors[v] != usize::MAX {
                continue;
            }
            let mut sat = 0u64;
            for u in mask_bits(self.adj[v]) {
                if colors[u] != usize::MAX {
                    sat |= 1 << colors[u];
                }
            }
            let key = (sat.count_ones() as usize, self.degree(v));
            if pick.is_none() || key > pick_key {
                pick = Some(v);
                pick_key = key;
            }
        }
        let v = match pick {
            Some(v) => v,
            None => {
                *best = (*best).min(used);
                return;
            }
        };
        let mut forbidden = 0u64;
        for u in mask_bits(self.adj[v]) {
            if colors[u] != usize::MAX {
                forbidden |= 1 << colors[u];
            }
        }
        for c in 0..=used.min(*best - 1) {
            if c >= *best {
                break;
            }
            if forbidden >> c & 1 == 1 {
                continue;
            }
            colors[v] = c;
            self.dsatur(colors, used.max(c + 1), lower, best);
            colors[v] = usize::MAX;
            if *best == lower {
                return;
            }
        }
    }

    fn greedy_coloring(&self) -> usize {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut colors = vec![usize::MAX; self.n];
        let mut used = 0;
        for &v in &order {
            let mut forbidden = 0u64;
            for u in mask_bits(self.adj[v]) {
                if colors[u] != usize::MAX {
                    forbidden |= 1 << colors[u];
                }
            }
            let c = (!forbidden).trailing_zeros() as usize;
            colors[v] = c;
            used = used.max(c + 1);
        }
        used
    }

    fn greedy_clique(&self) -> u64 {
        let mut best = 0u64;
        for start in 0..self.n {
            let mut clique = 1u64 << start;
            let mut cand = self.adj[start];
            while cand != 0 {
                // Pick the candidate with the most neighbors among the candidates.
                let mut pick = None;
                let mut pick_deg = 0;
                for v in mask_bits(cand) {
                    let d = (self.adj[v] & cand).count_ones();
                    if pick.is_none() || d > pick_deg {
                        pick = Some(v);
                        pick_deg = d;
                    }
                }
                let v = pick.unwrap();
                clique |= 1 << v;
                cand &= self.adj[v];
            }
            if clique.count_ones() > best.count_ones() {
                best = clique;
            }
        }
        best
    }

    /// Search for a 5-vertex subset inducing the wheel W5 (4-cycle plus a
    /// dominating hub). Returns the witness vertices (rim then hub).
    pub fn induced_wheel5(&self) -> Option<[usize; 5]> {
        // Hub candidates: vertices of degree >= 4.
        for hub in 0..self.n {
            if self.degree(hub) < 4 {
                continue;
            }
            let nb: Vec<usize> = mask_bits(self.adj[hub]).collect();
            let m = nb.len();
            for a in 0..m {
                for b in a + 1..m {
                    for c in b + 1..m {
                        for d in c + 1..m {
                            let quad = [nb[a], nb[b], nb[c], nb[d]];
                            if let Some(rim) = self.rim_cycle(quad) {
                                return Some([rim[0], rim[1], rim[2], rim[3], hub]);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Does the quadruple induce a 4-cycle? Returns the cycle order if so.
    fn rim_cycle(&self, q: [usize; 4]) -> Option<[usize; 4]> {
        let degs: Vec<usize> = q
            .iter()
            .map(|&v| q.iter().filter(|&&u| self.has_edge(u, v)).count())
            .collect();
        if degs != vec![2, 2, 2, 2] {
            return None;
        }
        // Induced 2-regular graph on 4 vertices is a 4-cycle (two disjoint
        // edges would give degree 1).
        let a = q[0];
        let nbrs: Vec<usize> = q[1..].iter().copied().filter(|&v| self.has_edge(a, v)).collect();
        let opposite = q[1..].iter().copied().find(|&v| !self.has_edge(a, v))?;
        Some([a, nbrs[0], opposite, nbrs[1]])
    }

    /// Upper-triangle adjacency encoding under the identity labeling.
    pub fn adjacency_code(&self) -> u64 {
        let mut code = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    /// Relabel vertices: vertex v of the result is `perm[v]` of self.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            let pu = perm.iter().position(|&x| x == u).unwrap();
            let pv = perm.iter().position(|&x| x == v).unwrap();
            g.add_edge(pu, pv);
        }
        g
    }
}

/// Iterate the set bit positions of a mask, lowest first.
pub fn mask_bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(
        if mask == 0 { None } else { Some((mask.trailing_zeros() as usize, mask)) },
        |&(_, m)| {
            let m = m & (m - 1);
            if m == 0 {
                None
            } else {
                Some((m.trailing_zeros() as usize, m))
            }
        },
    )
    .map(|(v, _)| v)
}

/// Iterate all subsets of size `size` of the set bits of `mask`, as masks.
pub fn subsets_of_size(mask: u64, size: usize) -> Vec<u64> {
    let bits: Vec<usize> = mask_bits(mask).collect();
    let mut out = Vec::new();
    if size > bits.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << bits[i]));
        // Advance the combination.
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + bits.len() - size {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let g = Graph::complete(4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_connected());
        assert_eq!(g.triangles().len(), 4);
        assert_eq!(g.k4s().len(), 1);
        let c4 = Graph::cycle(4);
        assert_eq!(c4.triangles().len(), 0);
        assert_eq!(c4.edge_count(), 4);
    }

    #[test]
    fn components_split() {
        let mut g = Graph::new(5);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        let comps = g.components(g.full_mask());
        assert_eq!(comps.len(), 3);
        assert!(!g.is_connected());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(Graph::complete(4).chromatic_number(), 4);
        assert_eq!(Graph::cycle(5).chromatic_number(), 3);
        assert_eq!(Graph::cycle(6).chromatic_number(), 2);
        assert_eq!(Graph::edgeless(3).chromatic_number(), 1);
        assert_eq!(Graph::wheel5().chromatic_number(), 3);
        // Petersen-ish stress: K3,3 is bipartite.
        let k33 = Graph::edgeless(3).join(&Graph::edgeless(3));
        assert_eq!(k33.chromatic_number(), 2);
    }

    #[test]
    fn wheel5_detection() {
        assert!(Graph::wheel5().induced_wheel5().is_some());
        assert!(Graph::complete(5).induced_wheel5().is_none());
        assert!(Graph::complete(6).induced_wheel5().is_none());
        // W5 joined with extra dominating vertices still contains an induced W5.
        let g = Graph::wheel5().join(&Graph::complete(2));
        let w = g.induced_wheel5().expect("induced W5 survives a join");
        let mask = w.iter().fold(0u64, |m, &v| m | 1 << v);
        let ind = g.induced(mask);
        assert_eq!(ind.edge_count(), 8);
    }

    #[test]
    fn join_counts() {
        // Edgeless(2) + K1 is the 2-edge star.
        let g = Graph::edgeless(2).join(&Graph::complete(1));
        assert_eq!(g.edge_count(), 2);
        let fam = Graph::edgeless(4).join(&Graph::complete(14)).join(&Graph::wheel5());
        assert_eq!(fam.n(), 23);
        assert_eq!(fam.edge_count(), 245);
    }

    #[test]
    fn brute_force_chromatic_agreement() {
        // Exhaustive check against brute force on all graphs with 5 vertices.
        fn brute2(g: &Graph) -> usize {
            for c in 1..=g.n() {
                let mut assign = vec![0usize; g.n()];
                'search: loop {
                    if g.edges().iter().all(|&(u, v)| assign[u] != assign[v]) {
                        return c;
                    }
                    let mut i = 0;
                    while i < g.n() {
                        assign[i] += 1;
                        if assign[i] < c {
                            continue 'search;
                        }
                        assign[i] = 0;
                        i += 1;
                    }
                    break;
                }
            }
            g.n()
        }
        for code in 0u64..1 << 10 {
            let mut g = Graph::new(5);
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if code >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    bit += 1;
                }
            }
            assert_eq!(g.chromatic_number(), brute2(&g), "code {code}");
        }
    }
}
