//! JSON and OFF serialisation of polytopes. Output is deterministic: vertices
//! are always written in lexicographic order.

use std::fmt::Write;

use serde::Serialize;

use super::point::{cross, dot, LatticePoint};
use super::polytope::Polytope;

#[derive(Serialize)]
struct VerticesJson<'a> {
    vertices: &'a [LatticePoint],
}

pub fn to_json(p: &Polytope) -> String {
    serde_json::to_string(&VerticesJson { vertices: p.vertices() }).expect("vertex list serialises")
}

/// Vertex indices of each facet, counter-clockwise seen from outside.
pub fn facets(p: &Polytope) -> Vec<Vec<usize>> {
    if p.dim() < 2 {
        return Vec::new();
    }
    let vs = p.vertices();
    let mut out = Vec::new();
    for h in p.halfspaces() {
        let tight: Vec<usize> = (0..vs.len()).filter(|&i| h.is_tight(&vs[i])).collect();
        if p.dim() == 3 && tight.len() < 3 {
            continue;
        }
        if p.dim() == 2 && tight.len() != vs.len() {
            continue;
        }
        let k = tight.len() as i64;
        let mut sum = [0i64; 3];
        for &i in &tight {
            for m in 0..3 {
                sum[m] += vs[i].0[m];
            }
        }
        let rel = |i: usize| -> [i64; 3] { [0, 1, 2].map(|m| k * vs[i].0[m] - sum[m]) };
        let n = h.normal;
        let r = rel(tight[0]);
        let half = |w: [i64; 3]| -> u8 {
            let s = dot(n, cross(r, w));
            if s > 0 || (s == 0 && dot(r, w) > 0) {
                0
            } else {
                1
            }
        };
        let mut order = tight.clone();
        order.sort_by(|&a, &b| {
            let (wa, wb) = (rel(a), rel(b));
            half(wa).cmp(&half(wb)).then_with(|| 0.cmp(&dot(n, cross(wa, wb))))
        });
        if p.dim() == 2 {
            out.push(order);
            break;
        }
        out.push(order);
    }
    out
}

pub fn to_off(p: &Polytope) -> String {
    let fs = facets(p);
    let mut s = String::from("OFF\n");
    writeln!(s, "{} {} 0", p.vertices().len(), fs.len()).unwrap();
    for v in p.vertices() {
        writeln!(s, "{} {} {}", v.0[0], v.0[1], v.0[2]).unwrap();
    }
    for f in &fs {
        write!(s, "{}", f.len()).unwrap();
        for i in f {
            write!(s, " {i}").unwrap();
        }
        s.push('\n');
    }
    s
}

/// Several polytopes in one OFF file, vertex lists concatenated.
pub fn many_to_off(polys: &[&Polytope], comment: Option<&str>) -> String {
    let mut verts: Vec<LatticePoint> = Vec::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for p in polys {
        let base = verts.len();
        verts.extend_from_slice(p.vertices());
        faces.extend(facets(p).into_iter().map(|f| f.into_iter().map(|i| i + base).collect()));
    }
    let mut s = String::from("OFF\n");
    if let Some(c) = comment {
        writeln!(s, "# {c}").unwrap();
    }
    writeln!(s, "{} {} 0", verts.len(), faces.len()).unwrap();
    for v in &verts {
        writeln!(s, "{} {} {}", v.0[0], v.0[1], v.0[2]).unwrap();
    }
    for f in &faces {
        let idx: Vec<String> = f.iter().map(|i| i.to_string()).collect();
        writeln!(s, "{} {}", f.len(), idx.join(" ")).unwrap();
    }
    s
}
