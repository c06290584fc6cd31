//! JSON and DOT output for tilting quivers.
//!
//! A summand is written as its dimension vector, which names an indecomposable
//! uniquely over a Dynkin quiver. Reading a report back needs the [`IndTable`]
//! of the same quiver to turn dimension vectors into ids.

use serde::{Deserialize, Serialize};

use crate::bb::{b_tag, BModule, BTiltingQuiver, Tag, TiltData};
use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};
use crate::tilting::{hasse, IndTable, TiltingModule, TiltingQuiver};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverReport {
    pub algebra: Algebra,
    pub counts: Counts,
    pub vertices: Vec<VertexRecord>,
    pub arrows: Vec<ArrowRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Algebra {
    /// `"hereditary"` for the path algebra, `"tilted"` for `End(T₀)`.
    pub kind: String,
    pub quiver: Quiver,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t0: Option<Vec<DimVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bb_vertex: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub indecomposables: usize,
    pub tilting_modules: usize,
    pub arrows: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    /// Λ-side summands; for a `B₀`-module, the torsion part.
    pub summands: Vec<DimVector>,
    /// The torsion-free part of a `B₀`-module.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_summands: Option<Vec<DimVector>>,
    pub tags: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub from: usize,
    pub to: usize,
}

fn dims_of(tbl: &IndTable, ids: &[usize]) -> Vec<DimVector> {
    ids.iter().map(|&i| tbl.dims(i).to_vec()).collect()
}

fn ids_of(tbl: &IndTable, dims: &[DimVector]) -> Result<Vec<usize>> {
    dims.iter().map(|d| tbl.id_of_dims(d)).collect()
}

fn arrow_records(arrows: &[(usize, usize)]) -> Vec<ArrowRecord> {
    arrows
        .iter()
        .map(|&(from, to)| ArrowRecord { from, to })
        .collect()
}

fn arrow_pairs(r: &QuiverReport) -> Result<Vec<(usize, usize)>> {
    let n = r.vertices.len();
    if r.vertices.iter().enumerate().any(|(k, v)| v.id != k) {
        return Err(Error::Invariant("vertex ids must be 0, 1, 2, ...".into()));
    }
    r.arrows
        .iter()
        .map(|a| {
            if a.from < n && a.to < n {
                Ok((a.from, a.to))
            } else {
                Err(Error::Invariant(format!(
                    "arrow {} → {} out of range",
                    a.from, a.to
                )))
            }
        })
        .collect()
}

/// The Λ tilting quiver, tagged against `T₀` when one is given.
pub fn lambda_report(tbl: &IndTable, k: &TiltingQuiver, tilt: Option<&TiltData>) -> QuiverReport {
    let tags: Vec<String> = match tilt {
        Some(d) => k
            .vertices
            .iter()
            .map(|t| crate::bb::tag_of(t, &d.classes).to_string())
            .collect(),
        None => vec![String::new(); k.vertices.len()],
    };
    QuiverReport {
        algebra: Algebra {
            kind: "hereditary".into(),
            quiver: (**tbl.quiver()).clone(),
            t0: tilt.map(|d| dims_of(tbl, d.t0.ids())),
            bb_vertex: tilt.and_then(|d| d.bb.map(|b| b.vertex)),
        },
        counts: Counts {
            indecomposables: tbl.len(),
            tilting_modules: k.vertices.len(),
            arrows: k.arrows.len(),
        },
        vertices: k
            .vertices
            .iter()
            .zip(tags)
            .enumerate()
            .map(|(id, (t, tags))| VertexRecord {
                id,
                summands: dims_of(tbl, t.ids()),
                x_summands: None,
                tags,
            })
            .collect(),
        arrows: arrow_records(&k.arrows),
    }
}

/// Rebuilds a Λ tilting quiver; the order is recomputed from the summands.
pub fn lambda_from_report(tbl: &IndTable, r: &QuiverReport) -> Result<TiltingQuiver> {
    let vertices: Vec<TiltingModule> = r
        .vertices
        .iter()
        .map(|v| TiltingModule::new(tbl, ids_of(tbl, &v.summands)?))
        .collect::<Result<_>>()?;
    let leq = hasse(tbl, &vertices).leq;
    let mut arrows = arrow_pairs(r)?;
    arrows.sort_unstable();
    Ok(TiltingQuiver {
        vertices,
        arrows,
        leq,
    })
}

/// The `B₀` tilting quiver. The count of indecomposables is that of `B₀`.
pub fn b_report(tbl: &IndTable, d: &TiltData, bk: &BTiltingQuiver) -> QuiverReport {
    QuiverReport {
        algebra: Algebra {
            kind: "tilted".into(),
            quiver: (**tbl.quiver()).clone(),
            t0: Some(dims_of(tbl, d.t0.ids())),
            bb_vertex: d.bb.map(|b| b.vertex),
        },
        counts: Counts {
            indecomposables: crate::bb::b_symbols(tbl, d).len(),
            tilting_modules: bk.vertices.len(),
            arrows: bk.arrows.len(),
        },
        vertices: bk
            .vertices
            .iter()
            .enumerate()
            .map(|(id, b)| VertexRecord {
                id,
                summands: dims_of(tbl, &b.y_part),
                x_summands: Some(dims_of(tbl, &b.x_part)),
                tags: bk.tags[id].to_string(),
            })
            .collect(),
        arrows: arrow_records(&bk.arrows),
    }
}

pub fn b_from_report(tbl: &IndTable, r: &QuiverReport) -> Result<BTiltingQuiver> {
    let vertices: Vec<BModule> = r
        .vertices
        .iter()
        .map(|v| {
            let x = v.x_summands.as_deref().unwrap_or_default();
            Ok(BModule::new(ids_of(tbl, &v.summands)?, ids_of(tbl, x)?))
        })
        .collect::<Result<_>>()?;
    let mut arrows = arrow_pairs(r)?;
    arrows.sort_unstable();
    Ok(BTiltingQuiver {
        tags: vertices.iter().map(b_tag).collect(),
        vertices,
        arrows,
    })
}

pub fn to_json(r: &QuiverReport) -> String {
    serde_json::to_string_pretty(r).expect("reports serialize")
}

pub fn from_json(text: &str) -> Result<QuiverReport> {
    serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        message: e.to_string(),
    })
}

fn dims_text(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Stable node name: summand dimension vectors, then `|` and the
/// torsion-free part for `B₀`-modules.
pub fn node_name(v: &VertexRecord) -> String {
    let mut name: Vec<String> = v.summands.iter().map(|d| dims_text(d)).collect();
    if let Some(x) = &v.x_summands {
        if !x.is_empty() {
            name.push("|".into());
            name.extend(x.iter().map(|d| dims_text(d)));
        }
    }
    name.join(" ")
}

pub fn to_dot(r: &QuiverReport) -> String {
    let mut s = String::from("digraph tilting {\n");
    for v in &r.vertices {
        if v.tags.is_empty() {
            s.push_str(&format!("  \"{}\";\n", node_name(v)));
        } else {
            s.push_str(&format!("  \"{}\" [class=\"{}\"];\n", node_name(v), v.tags));
        }
    }
    for a in &r.arrows {
        s.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            node_name(&r.vertices[a.from]),
            node_name(&r.vertices[a.to])
        ));
    }
    s.push_str("}\n");
    s
}

/// One line per vertex (`id: summands [tags]`) and one per arrow.
pub fn to_text(r: &QuiverReport) -> String {
    let mut s = format!(
        "{} tilting modules, {} arrows\n",
        r.counts.tilting_modules, r.counts.arrows
    );
    for v in &r.vertices {
        if v.tags.is_empty() {
            s.push_str(&format!("T{}: {}\n", v.id, node_name(v)));
        } else {
            s.push_str(&format!("T{}: {}  {}\n", v.id, node_name(v), v.tags));
        }
    }
    for a in &r.arrows {
        s.push_str(&format!("T{} -> T{}\n", a.from, a.to));
    }
    s
}

/// Tags of `k`'s vertices against `d`.
pub fn tags(k: &TiltingQuiver, d: &TiltData) -> Vec<Tag> {
    crate::bb::partition_tilting(&k.vertices, &d.classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bb::{b_hasse, make_bb_tilt};
    use crate::quiver::parse_quiver;
    use crate::tilting::{build_ind_table, enumerate_tilting};
    use std::sync::Arc;

    fn a4() -> IndTable {
        let q = parse_quiver("vertices 4\narrow a 1 2\narrow b 2 3\narrow c 3 4").unwrap();
        build_ind_table(&Arc::new(q)).unwrap()
    }

    #[test]
    fn lambda_round_trip() {
        let t = a4();
        let k = hasse(&t, &enumerate_tilting(&t));
        let r = lambda_report(&t, &k, None);
        assert_eq!(r.counts.tilting_modules, r.vertices.len());
        assert_eq!(r.counts.arrows, r.arrows.len());
        let back = from_json(&to_json(&r)).unwrap();
        assert_eq!(back, r);
        assert_eq!(lambda_from_report(&t, &back).unwrap(), k);
    }

    #[test]
    fn b_round_trip() {
        let t = a4();
        let d = make_bb_tilt(&t, 2).unwrap();
        let bk = b_hasse(&t, &d);
        let r = b_report(&t, &d, &bk);
        let back = from_json(&to_json(&r)).unwrap();
        assert_eq!(back, r);
        assert_eq!(b_from_report(&t, &back).unwrap(), bk);
    }

    #[test]
    fn dot_is_balanced_and_stable() {
        let t = a4();
        let k = hasse(&t, &enumerate_tilting(&t));
        let dot = to_dot(&lambda_report(&t, &k, None));
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
        assert_eq!(dot.matches('"').count() % 2, 0);
        assert!(dot.contains("\"[0,0,0,1] [0,0,1,1] [0,1,1,1] [1,1,1,1]\""));
        assert_eq!(
            dot,
            to_dot(&lambda_report(&t, &hasse(&t, &enumerate_tilting(&t)), None))
        );
    }

    #[test]
    fn malformed_reports_are_rejected() {
        assert!(matches!(from_json("{"), Err(Error::Syntax { .. })));
        let t = a4();
        let k = hasse(&t, &enumerate_tilting(&t));
        let mut r = lambda_report(&t, &k, None);
        r.arrows.push(ArrowRecord { from: 0, to: 99 });
        assert!(lambda_from_report(&t, &r).is_err());
        let mut r = lambda_report(&t, &k, None);
        r.vertices[0].summands[0] = vec![9, 9, 9, 9];
        assert!(lambda_from_report(&t, &r).is_err());
    }
}
