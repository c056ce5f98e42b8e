//! Brute-force solvers for the source problems of the constructions.
//! All of them work on `u64` vertex masks and refuse graphs above 64
//! vertices.

use crate::error::{contract, Result};
use crate::graph::Graph;

/// Largest source graph the brute forces accept.
pub const MAX_SOURCE_VERTICES: usize = 64;

fn masks(g: &Graph) -> Result<Vec<u64>> {
    if g.n() > MAX_SOURCE_VERTICES {
        return Err(contract(format!(
            "source brute force supports at most {MAX_SOURCE_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
        .collect())
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

fn mis(adj: &[u64], cand: u64) -> u64 {
    if cand == 0 {
        return 0;
    }
    // a vertex of degree <= 1 inside `cand` is always safe to take
    let mut rest = cand;
    let mut best_v = usize::MAX;
    let mut best_deg = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d <= 1 {
            return (1 << v) | mis(adj, cand & !(adj[v] | 1 << v));
        }
        if best_v == usize::MAX || d > best_deg {
            best_v = v;
            best_deg = d;
        }
    }
    let v = best_v;
    let with = (1 << v) | mis(adj, cand & !(adj[v] | 1 << v));
    let without = mis(adj, cand & !(1 << v));
    if with.count_ones() >= without.count_ones() {
        with
    } else {
        without
    }
}

/// A maximum independent set, ascending.
pub fn max_independent_set(g: &Graph) -> Result<Vec<usize>> {
    let adj = masks(g)?;
    Ok(bits(mis(&adj, full(g.n()))))
}

/// A minimum vertex cover, ascending.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    let keep = max_independent_set(g)?;
    Ok((0..g.n()).filter(|v| keep.binary_search(v).is_err()).collect())
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let adj = masks(g)?;
    let all = full(g.n());
    let co: Vec<u64> = adj.iter().enumerate().map(|(v, &m)| !m & all & !(1 << v)).collect();
    Ok(mis(&co, all).count_ones() as usize)
}

/// Partition of the vertex set into triangles of `g`, if one exists.
pub fn triangle_partition(g: &Graph) -> Result<Option<Vec<[usize; 3]>>> {
    let adj = masks(g)?;
    if !g.n().is_multiple_of(3) {
        return Ok(None);
    }
    fn go(adj: &[u64], left: u64, out: &mut Vec<[usize; 3]>) -> bool {
        if left == 0 {
            return true;
        }
        let a = left.trailing_zeros() as usize;
        let rest = left & !(1 << a);
        for b in bits(adj[a] & rest) {
            for c in bits(adj[a] & adj[b] & rest) {
                if c > b {
                    out.push([a, b, c]);
                    if go(adj, rest & !(1 << b) & !(1 << c), out) {
                        return true;
                    }
                    out.pop();
                }
            }
        }
        false
    }
    let mut out = Vec::new();
    Ok(go(&adj, full(g.n()), &mut out).then_some(out))
}

/// Triples of item indices, each summing to `b` and together using every
/// item once, if such a grouping exists.
pub fn three_partition(items: &[usize], b: usize) -> Option<Vec<[usize; 3]>> {
    if !items.len().is_multiple_of(3) {
        return None;
    }
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(items[i]));
    fn go(items: &[usize], order: &[usize], used: &mut [bool], b: usize, out: &mut Vec<[usize; 3]>) -> bool {
        let Some(pos) = (0..order.len()).find(|&p| !used[p]) else {
            return true;
        };
        used[pos] = true;
        let first = order[pos];
        for p in pos + 1..order.len() {
            if used[p] || items[first] + items[order[p]] >= b {
                continue;
            }
            // skip a partner equal to an earlier rejected one
            if (pos + 1..p).any(|q| !used[q] && items[order[q]] == items[order[p]]) {
                continue;
            }
            used[p] = true;
            let need = b - items[first] - items[order[p]];
            for q in p + 1..order.len() {
                if !used[q] && items[order[q]] == need {
                    used[q] = true;
                    out.push([first, order[p], order[q]]);
                    if go(items, order, used, b, out) {
                        return true;
                    }
                    out.pop();
                    used[q] = false;
                    break;
                }
            }
            used[p] = false;
        }
        used[pos] = false;
        false
    }
    let mut used = vec![false; items.len()];
    let mut out = Vec::new();
    go(items, &order, &mut used, b, &mut out).then(|| {
        for t in out.iter_mut() {
            t.sort_unstable();
        }
        out.sort_unstable();
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    #[test]
    fn independence_numbers() {
        assert_eq!(max_independent_set(&complete_bipartite(3, 3)).unwrap().len(), 3);
        assert_eq!(max_independent_set(&cube()).unwrap().len(), 4);
        assert_eq!(max_independent_set(&petersen()).unwrap().len(), 4);
        assert_eq!(max_independent_set(&mobius_kantor()).unwrap().len(), 8);
        assert_eq!(min_vertex_cover(&complete(4)).unwrap().len(), 3);
        assert_eq!(min_vertex_cover(&Graph::empty(0)).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&complete(5)).unwrap(), 5);
        assert_eq!(clique_number(&cycle(6)).unwrap(), 2);
        assert_eq!(clique_number(&prism()).unwrap(), 3);
        assert_eq!(clique_number(&Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn triangle_partitions() {
        assert_eq!(triangle_partition(&complete(3)).unwrap(), Some(vec![[0, 1, 2]]));
        assert!(triangle_partition(&prism()).unwrap().is_some());
        assert!(triangle_partition(&cycle(6)).unwrap().is_none());
        assert!(triangle_partition(&Graph::empty(3)).unwrap().is_none());
        assert!(triangle_partition(&complete(4)).unwrap().is_none());
    }

    #[test]
    fn three_partitions() {
        assert_eq!(
            three_partition(&[1, 1, 1, 1, 1, 1], 3),
            Some(vec![[0, 1, 2], [3, 4, 5]])
        );
        assert!(three_partition(&[4, 4, 5, 4, 4, 5], 13).is_some());
        assert!(three_partition(&[4, 4, 4, 4, 4, 6], 13).is_none());
    }

    fn brute_three_partition(items: &[usize], b: usize) -> bool {
        fn go(items: &mut Vec<usize>, b: usize) -> bool {
            if items.is_empty() {
                return true;
            }
            let a = items.remove(0);
            for i in 0..items.len() {
                for j in i + 1..items.len() {
                    if a + items[i] + items[j] == b {
                        let mut rest = items.clone();
                        rest.remove(j);
                        rest.remove(i);
                        if go(&mut rest, b) {
                            return true;
                        }
                    }
                }
            }
            false
        }
        go(&mut items.to_vec(), b)
    }

    proptest! {
        #[test]
        fn three_partition_matches_naive(items in proptest::collection::vec(1usize..7, 0..4).prop_map(|v| v.repeat(3)), shuffle in any::<u64>()) {
            let mut items = items;
            let len = items.len();
            if len > 1 {
                items.rotate_left((shuffle as usize) % len);
            }
            let total: usize = items.iter().sum();
            let n = len / 3;
            if n > 0 && total.is_multiple_of(n) {
                let b = total / n;
                let got = three_partition(&items, b);
                prop_assert_eq!(got.is_some(), brute_three_partition(&items, b));
                if let Some(ts) = got {
                    let mut seen: Vec<usize> = ts.iter().flatten().copied().collect();
                    seen.sort_unstable();
                    prop_assert_eq!(seen, (0..len).collect::<Vec<_>>());
                    prop_assert!(ts.iter().all(|t| t.iter().map(|&i| items[i]).sum::<usize>() == b));
                }
            }
        }

        #[test]
        fn mis_matches_subset_scan(n in 1usize..11, bits in proptest::collection::vec(any::<bool>(), 45)) {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] { g.add_edge(u, v); }
                    i += 1;
                }
            }
            let best = (0u32..1 << n)
                .filter(|m| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
                .map(u32::count_ones)
                .max()
                .unwrap() as usize;
            let got = max_independent_set(&g).unwrap();
            prop_assert_eq!(got.len(), best);
            prop_assert!(got.iter().all(|&u| got.iter().all(|&v| !g.has_edge(u, v))));
        }
    }
}
