//! Test-only helpers. The enumerator here shares no code with the library's
//! graph enumeration; it only borrows `canonical_form` to compare results.

#![allow(dead_code)]

use std::collections::BTreeSet;

use multicurve::graph::{canonical_form, CanonicalLabel, DecoratedGraph, MarkedGraph, Vertex};

/// (β_v, χ_v, n_v)
pub type Deco = (i64, i64, i64);
pub type Edge = (usize, usize);

/// Brute force for rank one, ω = id, ‖·‖ = |·|, C = 1. Admissible charges
/// are then exactly the nonnegative integers.
///
/// Bounds used, all elementary:
/// * every charged vertex has β_v ≥ 1, so at most β of them;
/// * 2(χ_v − n_v) − val_v is at most 2 when charged and at most −1 when
///   neutral and stable, and these sum to 2χ, so at most 2β − 2χ neutral;
/// * |E| = Σ(χ_v − n_v) − χ ≤ |V| − χ.
pub fn brute_force(beta: i64, chi: i64) -> Vec<(Vec<Deco>, Vec<Edge>)> {
    let max_charged = beta.max(0);
    let max_neutral = (2 * beta - 2 * chi).max(0);
    let max_v = (max_charged + max_neutral) as usize;
    let mut found = BTreeSet::new();
    for nv in 1..=max_v {
        let lo = chi - (nv as i64 - 1);
        let mut decos = Vec::new();
        for b in 0..=beta {
            for c in lo..=1 {
                for n in 0..=(c - lo) {
                    decos.push((b, c, n));
                }
            }
        }
        let mut chosen = Vec::new();
        pick_vertices(&decos, 0, nv, beta, chi, &mut chosen, &mut |vs| {
            let s: i64 = vs.iter().map(|d| d.1 - d.2).sum();
            let e = s - chi;
            if e < 0 {
                return;
            }
            for edges in edge_multisets(vs.len(), e as usize, vs) {
                if stable(vs, &edges) {
                    found.insert((vs.to_vec(), minimal_edges(vs, &edges)));
                }
            }
        });
    }
    found.into_iter().collect()
}

fn pick_vertices(
    decos: &[Deco],
    start: usize,
    left: usize,
    beta_left: i64,
    chi: i64,
    chosen: &mut Vec<Deco>,
    emit: &mut dyn FnMut(&[Deco]),
) {
    // slack = Σ 2(χ_v − n_v) − Σ (minimal valence), must end ≥ 2χ
    let slack: i64 = chosen.iter().map(|d| 2 * (d.1 - d.2) - min_valence(d)).sum();
    if slack + 2 * beta_left < 2 * chi {
        return;
    }
    if left == 0 {
        if beta_left == 0 {
            emit(chosen);
        }
        return;
    }
    for (i, d) in decos.iter().enumerate().skip(start) {
        if d.0 > beta_left {
            continue;
        }
        chosen.push(*d);
        pick_vertices(decos, i, left - 1, beta_left - d.0, chi, chosen, emit);
        chosen.pop();
    }
}

fn min_valence(d: &Deco) -> i64 {
    if d.0 == 0 { (2 * d.1 + 1).max(0) } else { 0 }
}

fn stable(vs: &[Deco], edges: &[(usize, usize)]) -> bool {
    let mut val = vec![0i64; vs.len()];
    for &(a, b) in edges {
        val[a] += 1;
        val[b] += 1;
    }
    vs.iter().zip(&val).all(|(d, &v)| d.0 != 0 || 2 * d.1 - v < 0)
}

fn edge_multisets(nv: usize, e: usize, vs: &[Deco]) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> =
        (0..nv).flat_map(|a| (a..nv).map(move |b| (a, b))).collect();
    let need: i64 = vs.iter().map(min_valence).sum();
    if need > 2 * e as i64 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        pairs: &[(usize, usize)],
        start: usize,
        e: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == e {
            out.push(cur.clone());
            return;
        }
        for i in start..pairs.len() {
            cur.push(pairs[i]);
            go(pairs, i, e, cur, out);
            cur.pop();
        }
    }
    go(&pairs, 0, e, &mut cur, &mut out);
    out
}

/// Smallest sorted edge list over vertex permutations that fix the
/// (sorted) decoration list.
fn minimal_edges(vs: &[Deco], edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let n = vs.len();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut perm, &mut |p| {
        if (0..n).any(|i| vs[p[i]] != vs[i]) {
            return;
        }
        let mut img: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
            .collect();
        img.sort();
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img);
        }
    });
    best.expect("identity is admissible")
}

fn heap_permute(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(p);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, p, f);
        if k.is_multiple_of(2) { p.swap(i, k - 1) } else { p.swap(0, k - 1) }
    }
    heap_permute(k - 1, p, f);
}

pub fn to_graph(vs: &[Deco], edges: &[(usize, usize)]) -> DecoratedGraph {
    let vertices = vs.iter().enumerate().map(|(i, d)| Vertex::new(i, vec![d.0], d.1, d.2)).collect();
    DecoratedGraph::from_edges(vertices, edges)
}

pub fn brute_force_labels(beta: i64, chi: i64) -> (usize, BTreeSet<CanonicalLabel>) {
    let raw = brute_force(beta, chi);
    let labels = raw
        .iter()
        .map(|(vs, es)| canonical_form(&MarkedGraph::bare(to_graph(vs, es))).unwrap().label)
        .collect();
    (raw.len(), labels)
}
