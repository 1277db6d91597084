//! Conservative search over grid-aligned boxes.
//!
//! The domain is cut into `r` cells per axis. A point blocks every cell
//! whose closure contains it: one cell per axis in general, the two
//! adjacent cells when it sits exactly on an interior grid plane, nothing
//! at all on the domain wall. A box made of unblocked cells therefore
//! contains no point strictly inside, so the best grid box never exceeds
//! the true dispersion. Conversely a true empty box loses at most two cell
//! layers per axis (one to rounding, one to boundary points blocking
//! inward), which bounds the gap by `2 d vol(domain) / r`.
//!
//! Exact grid-plane hits are decided in floating point; a coordinate
//! within an ulp of a plane may block the neighbor cell instead, which
//! perturbs the result by a similarly negligible volume.

use super::Best;
use crate::geometry::AxisBox;

/// `blockers` must lie strictly inside `domain`; `r >= 1`.
pub(super) fn search(blockers: &[Vec<f64>], domain: &AxisBox, r: u32) -> (f64, AxisBox) {
    let dim = domain.dim();
    let r = r as usize;
    let mut best = Best::new();
    if domain.volume() == 0.0 {
        best.offer(0.0, domain.lower(), domain.lower());
        return best.into_result();
    }

    let cells: Vec<Vec<(usize, usize)>> = blockers
        .iter()
        .filter_map(|p| blocked_ranges(p, domain, r))
        .collect();

    match dim {
        1 => {
            let mut clear = vec![true; r];
            for c in &cells {
                clear[c[0].0..=c[0].1].fill(false);
            }
            let mut run = 0usize;
            for (k, open) in clear
                .iter()
                .copied()
                .chain(std::iter::once(false))
                .enumerate()
            {
                if open {
                    run += 1;
                } else if run > 0 {
                    offer_cells(&mut best, domain, r, &[(k - run, k)]);
                    run = 0;
                }
            }
            if !best.any {
                best.offer(0.0, domain.lower(), domain.lower());
            }
        }
        2 => {
            let mut clear = vec![true; r * r];
            for c in &cells {
                for iy in c[1].0..=c[1].1 {
                    clear[iy * r + c[0].0..=iy * r + c[0].1].fill(false);
                }
            }
            let mut heights = vec![0usize; r];
            let mut found = false;
            for iy in 0..r {
                for (h, &open) in heights.iter_mut().zip(&clear[iy * r..(iy + 1) * r]) {
                    *h = if open { *h + 1 } else { 0 };
                }
                max_rect_row(&heights, iy, &mut |c0, c1, r0, r1| {
                    found = true;
                    offer_cells(&mut best, domain, r, &[(c0, c1), (r0, r1)]);
                });
            }
            if !found {
                best.offer(0.0, domain.lower(), domain.lower());
            }
        }
        3 => {
            // Sparse per-layer blocks: the budgets keep point counts small,
            // so the AND-accumulated slab stays cheap even at high r.
            let mut layers: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); r];
            for c in &cells {
                for layer in &mut layers[c[2].0..=c[2].1] {
                    layer.push((c[0].0, c[0].1, c[1].0, c[1].1));
                }
            }
            let cell_vol = domain.volume() / (r * r * r) as f64;
            let mut found = false;
            for z1 in 0..r {
                if best.any && (r * r * (r - z1)) as f64 * cell_vol <= best.vol {
                    break;
                }
                let mut acc = vec![true; r * r];
                let mut heights = vec![0usize; r];
                for (z2, layer) in layers.iter().enumerate().skip(z1) {
                    for &(x0, x1, y0, y1) in layer {
                        for iy in y0..=y1 {
                            acc[iy * r + x0..=iy * r + x1].fill(false);
                        }
                    }
                    let mut layer_max = 0usize;
                    let thick = z2 - z1 + 1;
                    heights.fill(0);
                    for iy in 0..r {
                        for (h, &open) in heights.iter_mut().zip(&acc[iy * r..(iy + 1) * r]) {
                            *h = if open { *h + 1 } else { 0 };
                        }
                        max_rect_row(&heights, iy, &mut |c0, c1, r0, r1| {
                            found = true;
                            layer_max = layer_max.max((c1 - c0) * (r1 - r0));
                            offer_cells(
                                &mut best,
                                domain,
                                r,
                                &[(c0, c1), (r0, r1), (z1, z1 + thick)],
                            );
                        });
                    }
                    // The clear area only shrinks as the slab thickens; if
                    // even the full remaining thickness cannot beat the
                    // best, no deeper z2 can.
                    if layer_max * (r - z1) == 0
                        || (best.any && (layer_max * (r - z1)) as f64 * cell_vol <= best.vol)
                    {
                        break;
                    }
                }
            }
            if !found {
                best.offer(0.0, domain.lower(), domain.lower());
            }
        }
        _ => unreachable!("grid limits are validated by the caller"),
    }
    best.into_result()
}

/// Inclusive blocked cell index range per axis, or `None` when the point
/// blocks nothing (it sits on the domain wall).
fn blocked_ranges(p: &[f64], domain: &AxisBox, r: usize) -> Option<Vec<(usize, usize)>> {
    let mut ranges = Vec::with_capacity(p.len());
    for ((&pj, &lo), &up) in p.iter().zip(domain.lower()).zip(domain.upper()) {
        if pj <= lo || pj >= up {
            return None;
        }
        let f = ((pj - lo) * r as f64 / (up - lo)).clamp(0.0, r as f64);
        if f == 0.0 || f == r as f64 {
            return None;
        }
        let k = f.floor();
        if k == f {
            // Exactly on an interior plane: both neighbors.
            ranges.push((k as usize - 1, k as usize));
        } else {
            ranges.push(((k as usize).min(r - 1), (k as usize).min(r - 1)));
        }
    }
    Some(ranges)
}

/// Offers the box spanned by half-open cell ranges.
fn offer_cells(best: &mut Best, domain: &AxisBox, r: usize, ranges: &[(usize, usize)]) {
    let dim = ranges.len();
    let mut lower = Vec::with_capacity(dim);
    let mut upper = Vec::with_capacity(dim);
    for ((&(c0, c1), &lo), &up) in ranges.iter().zip(domain.lower()).zip(domain.upper()) {
        let h = (up - lo) / r as f64;
        lower.push((lo + c0 as f64 * h).min(up));
        upper.push((lo + c1 as f64 * h).min(up));
    }
    let vol: f64 = lower.iter().zip(&upper).map(|(l, u)| u - l).product();
    best.offer(vol, &lower, &upper);
}

/// One row of the histogram scan: emits every rectangle that is maximal
/// for the current heights, as half-open column/row cell ranges.
fn max_rect_row(heights: &[usize], row: usize, emit: &mut impl FnMut(usize, usize, usize, usize)) {
    // Stack of (start column, height), heights strictly increasing; a
    // sentinel height 0 flushes the stack at the end.
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for (col, h) in heights
        .iter()
        .copied()
        .chain(std::iter::once(0))
        .enumerate()
    {
        let mut start = col;
        while let Some(&(s, sh)) = stack.last() {
            if sh <= h {
                break;
            }
            stack.pop();
            emit(s, col, row + 1 - sh, row + 1);
            start = s;
        }
        if h > 0 && stack.last().is_none_or(|&(_, sh)| sh < h) {
            stack.push((start, h));
        }
    }
}
