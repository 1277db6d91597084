//! Exact search in any dimension by region splitting.
//!
//! Any box avoiding a point `s` in its open interior lies, along some
//! axis, entirely on one side of `s`. So a region with an interior point
//! `s` splits into `2d` overlapping children clipped at `s`, and a region
//! with no interior point is itself the largest empty box it contains.
//! Children are visited largest-first and pruned against the running best
//! (an empty box in a region can never exceed the region volume). Regions
//! reachable along several split sequences are deduplicated by their exact
//! bit patterns; skipping a revisit is sound because the best bound only
//! tightens over time.

use std::collections::HashSet;

use super::Best;
use crate::geometry::AxisBox;
use crate::linalg;

/// `blockers` must lie strictly inside `domain`.
pub(super) fn search(blockers: &[Vec<f64>], domain: &AxisBox) -> (f64, AxisBox) {
    let mut pts = blockers.to_vec();
    pts.sort_by(|a, b| linalg::lex_cmp(a, b));
    let mut ctx = Ctx {
        dim: domain.dim(),
        pts,
        best: Best::new(),
        memo: HashSet::new(),
    };
    let all: Vec<u32> = (0..ctx.pts.len() as u32).collect();
    ctx.recurse(domain.lower().to_vec(), domain.upper().to_vec(), &all);
    ctx.best.into_result()
}

struct Ctx {
    dim: usize,
    pts: Vec<Vec<f64>>,
    best: Best,
    memo: HashSet<Box<[u64]>>,
}

impl Ctx {
    /// `inside` indexes the points strictly inside the region.
    fn recurse(&mut self, lower: Vec<f64>, upper: Vec<f64>, inside: &[u32]) {
        let volume: f64 = lower.iter().zip(&upper).map(|(l, u)| u - l).product();
        if self.best.any && volume <= self.best.vol {
            return;
        }
        if inside.is_empty() {
            self.best.offer(volume, &lower, &upper);
            return;
        }
        let key: Box<[u64]> = lower
            .iter()
            .chain(upper.iter())
            .map(|v| v.to_bits())
            .collect();
        if !self.memo.insert(key) {
            return;
        }

        // Split at the interior point nearest the region center: it cuts
        // the children most evenly, which makes the volume prune bite.
        let mut pick = inside[0] as usize;
        let mut score = f64::INFINITY;
        for &i in inside {
            let p = &self.pts[i as usize];
            let d2: f64 = (0..self.dim)
                .map(|j| {
                    let c = 0.5 * (lower[j] + upper[j]);
                    (p[j] - c) * (p[j] - c)
                })
                .sum();
            if d2 < score {
                score = d2;
                pick = i as usize;
            }
        }
        let s = self.pts[pick].clone();

        let mut children: Vec<(f64, Vec<f64>, Vec<f64>)> = Vec::with_capacity(2 * self.dim);
        for j in 0..self.dim {
            let mut clipped = upper.clone();
            clipped[j] = s[j];
            let v: f64 = lower.iter().zip(&clipped).map(|(l, u)| u - l).product();
            children.push((v, lower.clone(), clipped));
            let mut clipped = lower.clone();
            clipped[j] = s[j];
            let v: f64 = clipped.iter().zip(&upper).map(|(l, u)| u - l).product();
            children.push((v, clipped, upper.clone()));
        }
        // Stable sort: ties keep axis order, so the traversal and with it
        // the reported witness are deterministic.
        children.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        for (v, clo, cup) in children {
            if self.best.any && v <= self.best.vol {
                continue;
            }
            let sub: Vec<u32> = inside
                .iter()
                .copied()
                .filter(|&i| {
                    let p = &self.pts[i as usize];
                    (0..self.dim).all(|j| p[j] > clo[j] && p[j] < cup[j])
                })
                .collect();
            self.recurse(clo, cup, &sub);
        }
    }
}
