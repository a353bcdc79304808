//! Decision-only solver over per-configuration robber masks.
//!
//! Cop positions are kept as ordered k-tuples in a dense `n^k` array. For each
//! tuple there are two masks: robber vertices from which the cops win with the
//! cops to move, and with the robber to move. A cop move is a product of
//! independent single-cop moves, so the union over all successors is taken
//! one coordinate at a time. Both masks only grow; iterating the two update
//! rules reaches the same fixed point as the retrograde table.

use crate::graph::{Graph, VertexSet};

pub(crate) fn decide(g: &Graph, k: usize) -> bool {
    let n = g.n();
    let full = g.vertices().bits();
    let closed: Vec<u16> = (0..n).map(|v| g.closed_neighbors(v).bits()).collect();
    let size = n.pow(k as u32);
    let strides: Vec<usize> = (0..k).map(|i| n.pow((k - 1 - i) as u32)).collect();

    // robber-to-move wins start as the captures: robber on some cop
    let mut rob = vec![0u16; size];
    for (idx, r) in rob.iter_mut().enumerate() {
        for &s in &strides {
            *r |= 1 << (idx / s % n);
        }
    }
    let mut cop = vec![0u16; size];
    let mut tmp = vec![0u16; size];
    loop {
        cop.copy_from_slice(&rob);
        for &s in &strides {
            for (idx, out) in tmp.iter_mut().enumerate() {
                let c = idx / s % n;
                let base = idx - c * s;
                let mut acc = 0;
                for v in VertexSet(closed[c]) {
                    acc |= cop[base + v * s];
                }
                *out = acc;
            }
            std::mem::swap(&mut cop, &mut tmp);
        }
        if cop.contains(&full) {
            return true;
        }
        let mut changed = false;
        for (r, &w) in rob.iter_mut().zip(&cop) {
            // robber loses where every option lies in the cop-to-move win set
            let mut reach = 0;
            for x in VertexSet(full & !w) {
                reach |= closed[x];
            }
            let next = *r | (full & !reach);
            if next != *r {
                *r = next;
                changed = true;
            }
        }
        if !changed {
            return false;
        }
    }
}
