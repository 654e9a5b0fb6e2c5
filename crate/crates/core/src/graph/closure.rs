//! Hereditary and saturated closures of vertex sets.
//!
//! `H` is hereditary when `v in H` and `r(e) = v` imply `s(e) in H`, and
//! saturated when every vertex `v` with `0 < |r^{-1}(v)|` and
//! `s(r^{-1}(v)) ⊆ H` already lies in `H`.

use super::{Graph, GraphError, VertexId, VertexSet};

fn check_members(g: &Graph, vs: &VertexSet) -> Result<(), GraphError> {
    match vs.iter().find(|v| v.index() >= g.vertex_count()) {
        Some(v) => Err(GraphError::UnknownVertex(format!("#{}", v.index()))),
        None => Ok(()),
    }
}

fn hereditary_in_place(g: &Graph, h: &mut VertexSet, mut work: Vec<VertexId>) {
    while let Some(v) = work.pop() {
        for &e in g.in_edges(v) {
            let u = g.source(e);
            if h.insert(u) {
                work.push(u);
            }
        }
    }
}

/// Smallest hereditary set containing `vs`.
pub fn hereditary_closure(g: &Graph, vs: &VertexSet) -> Result<VertexSet, GraphError> {
    check_members(g, vs)?;
    let mut h = vs.clone();
    hereditary_in_place(g, &mut h, vs.iter().copied().collect());
    Ok(h)
}

/// `ΣH(vs)`: smallest saturated hereditary set containing `vs`.
pub fn saturated_hereditary_closure(g: &Graph, vs: &VertexSet) -> Result<VertexSet, GraphError> {
    let mut h = hereditary_closure(g, vs)?;
    loop {
        let added: Vec<VertexId> = g
            .vertices()
            .filter(|v| !h.contains(v))
            .filter(|&v| {
                let ins = g.in_edges(v);
                !ins.is_empty() && ins.iter().all(|&e| h.contains(&g.source(e)))
            })
            .collect();
        if added.is_empty() {
            return Ok(h);
        }
        h.extend(added.iter().copied());
        hereditary_in_place(g, &mut h, added);
    }
}

/// `vs` is full when its saturated hereditary closure is every vertex.
pub fn is_full(g: &Graph, vs: &VertexSet) -> Result<bool, GraphError> {
    Ok(saturated_hereditary_closure(g, vs)?.len() == g.vertex_count())
}

pub(crate) fn hereditary_violation(g: &Graph, h: &VertexSet) -> Option<VertexId> {
    h.iter().flat_map(|&v| g.in_edges(v).iter().map(|&e| g.source(e))).find(|u| !h.contains(u))
}

pub(crate) fn saturation_violation(g: &Graph, h: &VertexSet) -> Option<VertexId> {
    g.vertices().filter(|v| !h.contains(v)).find(|&v| {
        let ins = g.in_edges(v);
        !ins.is_empty() && ins.iter().all(|&e| h.contains(&g.source(e)))
    })
}

pub fn is_hereditary(g: &Graph, h: &VertexSet) -> bool {
    hereditary_violation(g, h).is_none()
}

pub fn is_saturated(g: &Graph, h: &VertexSet) -> bool {
    saturation_violation(g, h).is_none()
}
