//! Quadratic kernel for 2-EEA and an exact solver for cluster graphs.
//!
//! After completing every component to a clique (RR1), edge addition to a
//! uniform cluster graph means merging cliques into groups of equal total
//! order. Rules RR2 to RR4 then settle or shrink the instance.

use crate::error::Result;
use crate::graph::{ClusterProfile, Graph};
use crate::oracle::solve_exhaustive;
use crate::problem::{Instance, Kind, Outcome, Solution};
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    Rr1,
    Rr2,
    Rr3,
    Rr4,
    /// Once RR4 fixes the target at `x_t`, the merge cost is determined;
    /// an over-budget cost is a NO.
    Rr4Cost,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Rr1 => "RR1",
            Rule::Rr2 => "RR2",
            Rule::Rr3 => "RR3",
            Rule::Rr4 => "RR4",
            Rule::Rr4Cost => "RR4-cost",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub rule: Rule,
    pub detail: String,
    pub budget_delta: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No,
    Reduced,
}

#[derive(Clone, Debug)]
pub struct KernelTrace {
    pub rules_applied: Vec<RuleApplication>,
    pub verdict: Verdict,
    /// Budget after RR1; may be negative.
    pub final_budget: i64,
    /// Remaining cluster instance; `None` once the budget is negative.
    pub final_instance: Option<Instance>,
    /// Original index of every vertex of the final instance.
    pub map: Vec<usize>,
    /// Edges added by RR1, in original labels.
    pub completion: Vec<(usize, usize)>,
    pub original_k: usize,
}

impl KernelTrace {
    /// `4k^2 + 2k + 1` for the original budget.
    pub fn size_bound(&self) -> usize {
        let k = self.original_k;
        4 * k * k + 2 * k + 1
    }

    pub fn kernel_vertices(&self) -> usize {
        self.final_instance.as_ref().map_or(0, |i| i.graph.n())
    }

    pub fn within_bound(&self) -> bool {
        self.verdict != Verdict::Reduced || self.kernel_vertices() <= self.size_bound()
    }
}

/// Applies RR1 to RR4 in order.
pub fn kernelize_2eea(g: &Graph, k: usize) -> KernelTrace {
    let mut rules = Vec::new();
    let mut completed = g.clone();
    let mut completion = Vec::new();
    let comps = g.connected_components();
    for comp in &comps {
        let mut added = 0usize;
        for (i, &u) in comp.iter().enumerate() {
            for &v in &comp[i + 1..] {
                if completed.add_edge(u, v) {
                    completion.push((u, v));
                    added += 1;
                }
            }
        }
        if added > 0 {
            rules.push(RuleApplication {
                rule: Rule::Rr1,
                detail: format!("completed component of {} vertices starting at {}", comp.len(), comp[0]),
                budget_delta: -(added as i64),
            });
        }
    }
    let budget = k as i64 - completion.len() as i64;
    let mut trace = KernelTrace {
        rules_applied: rules,
        verdict: Verdict::Reduced,
        final_budget: budget,
        final_instance: None,
        map: Vec::new(),
        completion,
        original_k: k,
    };
    let settle = |trace: &mut KernelTrace, rule: Rule, verdict: Verdict, detail: String| {
        trace.rules_applied.push(RuleApplication {
            rule,
            detail,
            budget_delta: 0,
        });
        trace.verdict = verdict;
    };
    if budget < 0 {
        settle(
            &mut trace,
            Rule::Rr2,
            Verdict::No,
            format!("budget {budget} is negative"),
        );
        return trace;
    }
    let kk = budget as usize;
    // comps are cliques of `completed` now
    let mut classes: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &comps {
        *classes.entry(c.len()).or_default() += 1;
    }
    let finish = |trace: &mut KernelTrace, keep: &[&Vec<usize>]| {
        let mut verts: Vec<usize> = keep.iter().flat_map(|c| c.iter().copied()).collect();
        verts.sort_unstable();
        let h = completed.induced_subgraph(&verts);
        trace.final_instance = Some(Instance::new(Kind::Eea, 2, kk, h).expect("r = 2"));
        trace.map = verts;
    };
    let all: Vec<&Vec<usize>> = comps.iter().collect();
    if classes.len() <= 1 {
        settle(
            &mut trace,
            Rule::Rr2,
            Verdict::Yes,
            "all cliques have the same size".into(),
        );
        finish(&mut trace, &all);
        return trace;
    }
    if kk == 0 {
        settle(
            &mut trace,
            Rule::Rr2,
            Verdict::No,
            format!("{} clique sizes and no budget", classes.len()),
        );
        finish(&mut trace, &all);
        return trace;
    }
    let (&xt, &nt) = classes.iter().next_back().unwrap();
    for (&x, &cnt) in classes.iter().take(classes.len() - 1) {
        if cnt * x > 2 * kk {
            settle(
                &mut trace,
                Rule::Rr3,
                Verdict::No,
                format!("{cnt} cliques of size {x} exceed 2k={}", 2 * kk),
            );
            finish(&mut trace, &all);
            return trace;
        }
    }
    if nt * xt > 2 * kk {
        let cost: usize = comps
            .iter()
            .filter(|c| c.len() < xt)
            .map(|c| c.len() * (xt - c.len()))
            .sum::<usize>()
            / 2;
        if cost > kk {
            settle(
                &mut trace,
                Rule::Rr4Cost,
                Verdict::No,
                format!("target fixed at {xt}; merging the smaller cliques costs {cost} > {kk}"),
            );
            finish(&mut trace, &all);
            return trace;
        }
        let keep_count = (2 * kk + 1).div_ceil(xt);
        let mut kept_large = 0;
        let keep: Vec<&Vec<usize>> = comps
            .iter()
            .filter(|c| {
                if c.len() < xt {
                    return true;
                }
                kept_large += 1;
                kept_large <= keep_count
            })
            .collect();
        trace.rules_applied.push(RuleApplication {
            rule: Rule::Rr4,
            detail: format!("kept {keep_count} of {nt} cliques of size {xt}"),
            budget_delta: 0,
        });
        finish(&mut trace, &keep);
    } else {
        finish(&mut trace, &all);
    }
    trace
}

/// Cheapest way to merge cliques into groups of a common total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grouping {
    pub x: usize,
    pub cost: usize,
    /// Indices into the profile's size list.
    pub groups: Vec<Vec<usize>>,
}

/// Minimum-cost grouping with cost at most `k`.
///
/// For a target `x` dividing the total `N`, any grouping costs
/// `(N x - sum s^2) / 2`, which grows with `x`. So the first feasible `x`
/// from the largest size upward is optimal, and the scan stops as soon as
/// the cost exceeds `k`.
pub fn min_merge_grouping(profile: &ClusterProfile, k: usize) -> Option<Grouping> {
    let sizes = profile.sizes();
    if sizes.is_empty() {
        return Some(Grouping {
            x: 0,
            cost: 0,
            groups: Vec::new(),
        });
    }
    let total: usize = sizes.iter().sum();
    let squares: usize = sizes.iter().map(|s| s * s).sum();
    let xmax = *sizes.iter().max().unwrap();
    for x in xmax..=total {
        if !total.is_multiple_of(x) {
            continue;
        }
        let cost = (total * x - squares) / 2;
        if cost > k {
            return None;
        }
        if let Some(groups) = partition_exact(sizes, x) {
            return Some(Grouping { x, cost, groups });
        }
    }
    None
}

/// Splits `sizes` into groups summing to exactly `x` each.
fn partition_exact(sizes: &[usize], x: usize) -> Option<Vec<Vec<usize>>> {
    // distinct sizes descending with multiplicities
    let mut distinct: Vec<usize> = sizes.to_vec();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let mut counts: Vec<usize> = distinct
        .iter()
        .map(|d| sizes.iter().filter(|&s| s == d).count())
        .collect();
    let mut failed: HashSet<Vec<usize>> = HashSet::new();
    let mut bins: Vec<Vec<usize>> = Vec::new();
    if !fill_bins(&distinct, &mut counts, x, &mut bins, &mut failed) {
        return None;
    }
    // assign concrete clique indices per size in index order
    let mut pools: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &s) in sizes.iter().enumerate().rev() {
        pools.entry(s).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = bins
        .into_iter()
        .map(|bin| {
            let mut g: Vec<usize> = bin
                .iter()
                .map(|&d| pools.get_mut(&distinct[d]).unwrap().pop().unwrap())
                .collect();
            g.sort_unstable();
            g
        })
        .collect();
    groups.sort();
    Some(groups)
}

fn fill_bins(
    distinct: &[usize],
    counts: &mut Vec<usize>,
    x: usize,
    bins: &mut Vec<Vec<usize>>,
    failed: &mut HashSet<Vec<usize>>,
) -> bool {
    if counts.iter().all(|&c| c == 0) {
        return true;
    }
    if failed.contains(counts) {
        return false;
    }
    // the largest remaining item anchors the next bin
    let first = counts.iter().position(|&c| c > 0).unwrap();
    counts[first] -= 1;
    let mut bin = vec![first];
    let ok = fill_one(distinct, counts, x - distinct[first], first, &mut bin, x, bins, failed);
    counts[first] += 1;
    if !ok {
        failed.insert(counts.clone());
    }
    ok
}

#[allow(clippy::too_many_arguments)]
fn fill_one(
    distinct: &[usize],
    counts: &mut Vec<usize>,
    room: usize,
    from: usize,
    bin: &mut Vec<usize>,
    x: usize,
    bins: &mut Vec<Vec<usize>>,
    failed: &mut HashSet<Vec<usize>>,
) -> bool {
    if room == 0 {
        bins.push(bin.clone());
        if fill_bins(distinct, counts, x, bins, failed) {
            return true;
        }
        bins.pop();
        return false;
    }
    for d in from..distinct.len() {
        if counts[d] == 0 || distinct[d] > room {
            continue;
        }
        counts[d] -= 1;
        bin.push(d);
        let ok = fill_one(distinct, counts, room - distinct[d], d, bin, x, bins, failed);
        bin.pop();
        counts[d] += 1;
        if ok {
            return true;
        }
    }
    false
}

/// Exact 2-EEA on a cluster graph: the cheapest merge within budget.
pub fn solve_kernel_2eea(g: &Graph, k: usize) -> Option<Solution> {
    let cliques = g.cluster_components().expect("kernel instances are cluster graphs");
    let profile = ClusterProfile::new(cliques.iter().map(Vec::len).collect());
    let grouping = min_merge_grouping(&profile, k)?;
    let mut adds = Vec::new();
    for group in &grouping.groups {
        for (i, &a) in group.iter().enumerate() {
            for &b in &group[i + 1..] {
                for &u in &cliques[a] {
                    for &v in &cliques[b] {
                        adds.push((u, v));
                    }
                }
            }
        }
    }
    Some(Solution::additions(adds))
}

/// How the kernel instance is finished.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelEngine {
    /// The merge solver above.
    Exact,
    /// Exhaustive search on the kernel.
    Oracle,
}

/// Kernelize, solve the kernel, and lift the answer to the input graph.
pub fn solve_2eea_via_kernel(g: &Graph, k: usize, engine: KernelEngine) -> Result<(Outcome, KernelTrace)> {
    let trace = kernelize_2eea(g, k);
    assert!(trace.within_bound(), "kernel exceeds 4k^2+2k+1 vertices");
    let lift = |kernel_sol: Option<Solution>| -> Option<Solution> {
        let sol = kernel_sol?;
        let Solution::Edits(edits) = sol else {
            unreachable!("EEA solutions are edits")
        };
        let mut adds = trace.completion.clone();
        adds.extend(edits.iter().map(|e| (trace.map[e.u], trace.map[e.v])));
        Some(Solution::additions(adds))
    };
    let outcome = match trace.verdict {
        Verdict::No => Outcome::No,
        Verdict::Yes => Outcome::Yes(Solution::additions(trace.completion.clone())),
        Verdict::Reduced => {
            let inst = trace.final_instance.as_ref().expect("reduced instances exist");
            let kernel_sol = match engine {
                KernelEngine::Exact => solve_kernel_2eea(&inst.graph, inst.k),
                KernelEngine::Oracle => solve_exhaustive(inst)?,
            };
            Outcome::from_option(lift(kernel_sol))
        }
    };
    Ok((outcome, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::verify;

    #[test]
    fn rr1_completes_components() {
        let t = kernelize_2eea(&path(3), 3);
        assert_eq!(t.rules_applied[0].rule, Rule::Rr1);
        assert_eq!(t.rules_applied[0].budget_delta, -1);
        assert_eq!(t.final_budget, 2);
        assert_eq!(t.verdict, Verdict::Yes);
    }

    #[test]
    fn rr3_example() {
        let t = kernelize_2eea(&cluster(&[2, 2, 2, 5]), 2);
        assert_eq!(t.verdict, Verdict::No);
        assert_eq!(t.rules_applied.last().unwrap().rule, Rule::Rr3);
        let inst = Instance::new(Kind::Eea, 2, 2, cluster(&[2, 2, 2, 5])).unwrap();
        assert_eq!(solve_exhaustive(&inst).unwrap(), None);
    }

    #[test]
    fn rr2_uniform() {
        let t = kernelize_2eea(&cluster(&[4, 4]), 0);
        assert_eq!(t.verdict, Verdict::Yes);
        assert_eq!(t.rules_applied.last().unwrap().rule, Rule::Rr2);
    }

    #[test]
    fn rr2_negative_budget() {
        let t = kernelize_2eea(&path(4), 1);
        assert_eq!(t.verdict, Verdict::No);
        assert!(t.final_instance.is_none());
    }

    #[test]
    fn rr4_keeps_rounded_up_count() {
        // k = 2: 2k+1 = 5 needs ceil(5/3) = 2 triangles; the K_2 and K_1 merge for 2
        let g = cluster(&[1, 2, 3, 3, 3, 3]);
        let t = kernelize_2eea(&g, 2);
        assert_eq!(t.verdict, Verdict::Reduced);
        assert_eq!(t.rules_applied.last().unwrap().rule, Rule::Rr4);
        assert_eq!(t.kernel_vertices(), 9);
        let (out, _) = solve_2eea_via_kernel(&g, 2, KernelEngine::Exact).unwrap();
        let inst = Instance::new(Kind::Eea, 2, 2, g).unwrap();
        assert!(verify(&inst, out.solution().unwrap()).unwrap().accepted);
    }

    #[test]
    fn rr4_cost_keeps_the_bound() {
        // plain rounding would keep 9 vertices for k = 1, over 4+2+1
        let t = kernelize_2eea(&cluster(&[1, 8]), 1);
        assert_eq!(t.verdict, Verdict::No);
        assert_eq!(t.rules_applied.last().unwrap().rule, Rule::Rr4Cost);
        assert!(t.within_bound());
    }

    #[test]
    fn kernel_solver_examples() {
        let sol = solve_kernel_2eea(&cluster(&[1, 1, 2]), 1).unwrap();
        assert_eq!(sol, Solution::additions([(0, 1)]));
        assert_eq!(solve_kernel_2eea(&cluster(&[3, 3]), 0), Some(Solution::Edits(vec![])));
        assert_eq!(solve_kernel_2eea(&cluster(&[1, 3]), 2), None);
    }

    #[test]
    fn grouping_prefers_smallest_target() {
        let g = min_merge_grouping(&ClusterProfile::new(vec![2, 2, 1, 1, 3, 3]), 10).unwrap();
        assert_eq!(g.x, 3);
        assert_eq!(g.cost, 4);
        let infeasible = min_merge_grouping(&ClusterProfile::new(vec![4, 3, 3, 2]), 100).unwrap();
        // 12 splits as 6+6 (4+2, 3+3)
        assert_eq!(infeasible.x, 6);
    }

    #[test]
    fn exact_and_oracle_pipelines_agree() {
        for sizes in [&[1, 1, 2][..], &[1, 3], &[2, 2, 1, 1], &[1, 2, 3], &[3, 1, 1, 1]] {
            let g = cluster(sizes);
            for k in 0..=4 {
                let (a, _) = solve_2eea_via_kernel(&g, k, KernelEngine::Exact).unwrap();
                let (b, _) = solve_2eea_via_kernel(&g, k, KernelEngine::Oracle).unwrap();
                let inst = Instance::new(Kind::Eea, 2, k, g.clone()).unwrap();
                let o = solve_exhaustive(&inst).unwrap();
                assert_eq!(
                    a.solution().map(Solution::len),
                    o.as_ref().map(Solution::len),
                    "{sizes:?} k={k}"
                );
                assert_eq!(
                    b.solution().map(Solution::len),
                    o.as_ref().map(Solution::len),
                    "{sizes:?} k={k}"
                );
            }
        }
    }
}
