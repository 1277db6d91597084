//! Exact planar search by anchored corridor sweeps.
//!
//! Every inclusion-maximal empty rectangle has each edge supported either
//! by the domain wall or by a point whose other coordinate lies strictly
//! inside the edge. That splits the candidates into three families:
//!
//! 1. left edge through a point `p`: sweep right from `p`, maintaining the
//!    widest vertical corridor around `p.y` that avoids the points passed
//!    so far; the corridor is flushed as a candidate each time it is about
//!    to shrink, and once more against the right wall;
//! 2. left edge on the wall, right edge through a point `q`: sweep points
//!    by `x`, keeping the sorted set of `y` values seen; the gap around
//!    `q.y` just before insertion is the candidate's vertical extent;
//! 3. both vertical edges on the walls: the gaps of the full `y` set.
//!
//! Points sharing an `x` coordinate need no special casing: the first
//! member of the group that lies strictly inside the corridor (or gap)
//! emits the full-height candidate before any member shrinks it, and the
//! later members' candidates are still genuinely empty because the group
//! sits on the candidate's closed right edge.

use super::Best;
use crate::geometry::AxisBox;

/// `blockers` must lie strictly inside `domain`.
pub(super) fn search(blockers: &[Vec<f64>], domain: &AxisBox) -> (f64, AxisBox) {
    let (x0, y0) = (domain.lower()[0], domain.lower()[1]);
    let (x1, y1) = (domain.upper()[0], domain.upper()[1]);
    let mut pts: Vec<(f64, f64)> = blockers.iter().map(|p| (p[0], p[1])).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut best = Best::new();

    // Family 1: anchored corridors.
    for (i, &(px, py)) in pts.iter().enumerate() {
        let (mut lo, mut hi) = (y0, y1);
        let mut open = true;
        for &(qx, qy) in &pts[i + 1..] {
            if qx == px {
                // Same plane as the anchor: on the boundary of every
                // rectangle with its left edge here, never inside.
                continue;
            }
            if qy > lo && qy < hi {
                best.offer((qx - px) * (hi - lo), &[px, lo], &[qx, hi]);
                if qy > py {
                    hi = qy;
                } else if qy < py {
                    lo = qy;
                } else {
                    // Exactly level with the anchor: nothing with the
                    // anchor strictly inside extends past this point.
                    open = false;
                    break;
                }
            }
        }
        if open {
            best.offer((x1 - px) * (hi - lo), &[px, lo], &[x1, hi]);
        }
    }

    // Family 2: wall-to-point rectangles. `ys` holds the distinct y values
    // of the points processed so far, sorted.
    let mut ys: Vec<f64> = Vec::with_capacity(pts.len());
    for &(qx, qy) in &pts {
        match ys.binary_search_by(|v| v.partial_cmp(&qy).unwrap()) {
            // A lower-x point at the same height already blocks every
            // rectangle this one would bound.
            Ok(_) => {}
            Err(k) => {
                let gap_lo = if k == 0 { y0 } else { ys[k - 1] };
                let gap_hi = if k == ys.len() { y1 } else { ys[k] };
                best.offer((qx - x0) * (gap_hi - gap_lo), &[x0, gap_lo], &[qx, gap_hi]);
                ys.insert(k, qy);
            }
        }
    }

    // Family 3: full-width gaps.
    let mut prev = y0;
    for k in 0..=ys.len() {
        let top = if k == ys.len() { y1 } else { ys[k] };
        if top > prev {
            best.offer((x1 - x0) * (top - prev), &[x0, prev], &[x1, top]);
        }
        prev = top;
    }

    if !best.any {
        // Only reachable when the domain is degenerate (zero height leaves
        // no gaps at all); the domain itself is then the empty box.
        best.offer(domain.volume(), domain.lower(), domain.upper());
    }
    best.into_result()
}
