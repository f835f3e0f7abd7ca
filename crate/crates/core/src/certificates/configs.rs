//! Certificates for every `d ≥ 5` and for the catalog blocks.

use super::certificate::{Certificate, Provenance};
use super::expected::expected_dimension;
use super::frozen;
use super::unit::{Unit, UnitKind};
use crate::degeneration::blocks::prism;
use crate::degeneration::wedge::{layout, middle_sequence, wedge_to_global, Piece};
use crate::degeneration::{build_block, build_layer, build_standard_subdivision, BlockName, Subdivision};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::lattice::{corner, LatticePoint};

type LocalUnits = Vec<(UnitKind, Vec<LatticePoint>)>;

/// Accumulates regions and units in global coordinates.
#[derive(Default)]
struct Assembly {
    regions: Vec<Subdivision>,
    units: Vec<Unit>,
}

impl Assembly {
    /// Adds `region` (local coordinates) with `units` mapped by `frame`.
    fn place(&mut self, region: &Subdivision, units: &LocalUnits, frame: &Frame) -> Result<()> {
        let idx = self.regions.len();
        for (kind, verts) in units {
            let cell = region
                .cell_containing(verts)
                .ok_or_else(|| Error::Packing(format!("{}: no cell holds a {kind} unit", region.name)))?;
            let mapped = verts.iter().map(|v| frame.apply(v)).collect();
            self.units.push(Unit::new(*kind, idx, cell, mapped));
        }
        self.regions.push(region.transformed(frame));
        Ok(())
    }

    /// Adds the regions and units of a finished certificate, moved by `frame`.
    fn absorb(&mut self, c: Certificate, frame: &Frame) {
        let base = self.regions.len();
        self.regions.extend(c.regions.iter().map(|r| r.transformed(frame)));
        self.units.extend(c.units.into_iter().map(|u| {
            let verts = u.vertices.iter().map(|v| frame.apply(v)).collect();
            Unit::new(u.kind, u.region + base, u.cell, verts)
        }));
    }

    fn finish(self, d: Option<i64>, claimed_k: i64, builder: String) -> Certificate {
        Certificate { d, regions: self.regions, units: self.units, claimed_k, provenance: Provenance { builder, seed: 0 } }
    }
}

fn frozen_units(name: &str) -> Result<LocalUnits> {
    Ok(frozen::placement(name)?.iter().map(|u| (u.kind, u.vertices.clone())).collect())
}

fn shift(units: &LocalUnits, v: LatticePoint) -> LocalUnits {
    units.iter().map(|(k, vs)| (*k, vs.iter().map(|p| *p + v).collect())).collect()
}

/// Cubes at `(2a, 2b, 0)` with `a + b ≤ (k−3)/2` and the corner tetrahedra
/// at `(2a, 2b, 0)` with `a + b = (k−1)/2`.
fn odd_layer_units(k: i64) -> LocalUnits {
    let m = (k - 1) / 2;
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m - a {
            let anchor = LatticePoint::new(2 * a, 2 * b, 0);
            if a + b < m {
                out.push((UnitKind::SegreCubePair, (0..8).map(|c| anchor + corner(c)).collect()));
            } else {
                out.push((UnitKind::TangentTetra, [0, 1, 2, 4].iter().map(|&c| anchor + corner(c)).collect()));
            }
        }
    }
    out
}

/// The odd layers of `Δ_d` (d odd), stacked from `S¹_d` at the bottom.
fn odd_simplex_units(d: i64) -> LocalUnits {
    let mut out = Vec::new();
    for k in (1..=d).rev().step_by(2) {
        out.extend(shift(&odd_layer_units(k), LatticePoint::new(0, 0, d - k)));
    }
    out
}

pub fn odd_layer_config(k: i64) -> Result<Certificate> {
    if k < 1 || k % 2 == 0 {
        return Err(Error::UnsupportedDegree(k, "odd layer sizes only"));
    }
    let mut a = Assembly::default();
    a.place(&build_layer(k)?, &odd_layer_units(k), &Frame::IDENTITY)?;
    Ok(a.finish(None, (k + 1) * (k + 1) / 4 - 1, format!("odd-layer:{k}")))
}

pub fn odd_config(d: i64) -> Result<Certificate> {
    if d < 5 || d % 2 == 0 {
        return Err(Error::UnsupportedDegree(d, "odd configurations need odd d >= 5"));
    }
    let mut a = Assembly::default();
    a.place(&build_standard_subdivision(d)?, &odd_simplex_units(d), &Frame::IDENTITY)?;
    Ok(a.finish(Some(d), expected_dimension(d).n_d, "odd".into()))
}

/// `Δ_6` on top, then `S¹_8`, `S¹_10`, `S¹_12` downwards as far as `d` allows.
fn even_base_units(d: i64) -> Result<LocalUnits> {
    let mut out = shift(&frozen_units("D_6")?, LatticePoint::new(0, 0, d - 6));
    for m in (8..=d).step_by(2) {
        out.extend(shift(&frozen_units(&format!("S1_{m}"))?, LatticePoint::new(0, 0, d - m)));
    }
    Ok(out)
}

pub fn even_base_config(d: i64) -> Result<Certificate> {
    if !matches!(d, 6 | 8 | 10 | 12) {
        return Err(Error::UnsupportedDegree(d, "even base configurations exist for d in {6, 8, 10, 12}"));
    }
    let mut a = Assembly::default();
    a.place(&build_standard_subdivision(d)?, &even_base_units(d)?, &Frame::IDENTITY)?;
    Ok(a.finish(Some(d), expected_dimension(d).n_d, "even-base".into()))
}

/// Column units over the footprint of a height-7 region whose base sits at
/// `z = 0`: whole cubes over unit squares, six tetrahedra over half squares.
fn column_units(region: &Subdivision) -> Result<LocalUnits> {
    let pts = region.lattice_points();
    let base: std::collections::BTreeSet<(i64, i64)> =
        pts.iter().filter(|p| p.0[2] == 0).map(|p| (p.0[0], p.0[1])).collect();
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for &(x, y) in &base {
        let (sx, sy) = (x - x.rem_euclid(2), y - y.rem_euclid(2));
        if !seen.insert((sx, sy)) {
            continue;
        }
        let has = |dx: i64, dy: i64| base.contains(&(sx + dx, sy + dy));
        let at = |dx: i64, dy: i64, z: i64| LatticePoint::new(sx + dx, sy + dy, z);
        match (has(0, 0), has(1, 0), has(0, 1), has(1, 1)) {
            (true, true, true, true) => {
                for z in [0, 2, 4, 6] {
                    out.push((UnitKind::SegreCubePair, (0..8).map(|c| at(0, 0, z) + corner(c)).collect()));
                }
            }
            (true, true, true, false) => {
                for z in [0i64, 4] {
                    let (r, a, b) = (|h: i64| at(0, 0, z + h), |h: i64| at(1, 0, z + h), |h: i64| at(0, 1, z + h));
                    out.push((UnitKind::TangentTetra, vec![a(0), b(0), r(0), r(1)]));
                    out.push((UnitKind::LimitTetraInSemicube, vec![a(1), b(1), r(2), a(2)]));
                    out.push((UnitKind::TangentTetra, vec![b(2), r(3), a(3), b(3)]));
                }
            }
            _ => {
                return Err(Error::Packing(format!("{}: footprint square at ({sx},{sy}) cannot be filled", region.name)))
            }
        }
    }
    Ok(out)
}

fn piece_units(p: Piece) -> Result<LocalUnits> {
    match p {
        Piece::T5 => Ok(odd_simplex_units(5)),
        Piece::T6 | Piece::Delta6 => frozen_units("D_6"),
        Piece::TStar(m) => frozen_units(&format!("T*_{m}")),
    }
}

fn place_pieces(a: &mut Assembly, pieces: &[Piece], to_global: &Frame) -> Result<()> {
    for (piece, frame) in layout(pieces) {
        a.place(&piece.model()?, &piece_units(piece)?, &to_global.compose(&frame))?;
    }
    Ok(())
}

/// `Δ_{d−8}` lifted by 8, over the height-7 slab `S⁷_d` cut into a prism,
/// two corner simplices and the sheared middle slabs.
pub fn recursive_config(d: i64) -> Result<Certificate> {
    if d < 14 || d % 2 != 0 {
        return Err(Error::UnsupportedDegree(d, "recursive configurations need even d >= 14"));
    }
    let mut a = Assembly::default();
    a.absorb(config_for(d - 8)?, &Frame::translation(LatticePoint::new(0, 0, 8)));
    let pr = Subdivision::grid(format!("P_{}", d - 7), prism(d - 7), Vec::new());
    a.place(&pr, &column_units(&pr)?, &Frame::IDENTITY)?;
    let d6 = build_standard_subdivision(6)?;
    let d6_units = frozen_units("D_6")?;
    a.place(&d6, &d6_units, &Frame::translation(LatticePoint::new(d - 6, 0, 0)))?;
    a.place(&d6, &d6_units, &Frame::translation(LatticePoint::new(0, d - 6, 0)))?;
    place_pieces(&mut a, &middle_sequence(d), &wedge_to_global(d))?;
    Ok(a.finish(Some(d), expected_dimension(d).n_d, "recursive".into()))
}

/// The shipped certificate for `Sec_{n_d}(V_{3,d})`.
pub fn config_for(d: i64) -> Result<Certificate> {
    match d {
        _ if d >= 5 && d % 2 == 1 => odd_config(d),
        6 | 8 | 10 | 12 => even_base_config(d),
        _ if d >= 14 && d % 2 == 0 => recursive_config(d),
        _ => Err(Error::UnsupportedDegree(d, "certificates exist for d >= 5")),
    }
}

/// A verified-ready certificate for a catalog block, claiming its total.
pub fn block_certificate(name: &BlockName) -> Result<Certificate> {
    let block = build_block(name)?;
    let mut a = Assembly::default();
    let id = Frame::IDENTITY;
    match *name {
        BlockName::Delta1 => a.place(&block.regions[0], &odd_simplex_units(1), &id)?,
        BlockName::Cube => a.place(&block.regions[0], &column_cube(), &id)?,
        BlockName::Delta6 => a.place(&block.regions[0], &frozen_units("D_6")?, &id)?,
        BlockName::T5 => place_pieces(&mut a, &[Piece::T5], &id)?,
        BlockName::T6 => place_pieces(&mut a, &[Piece::T6], &id)?,
        BlockName::TStar(m) => place_pieces(&mut a, &[Piece::TStar(m)], &id)?,
        BlockName::B(m) => place_pieces(&mut a, &[Piece::T6, Piece::TStar(m - 1)], &id)?,
        BlockName::Gamma7 | BlockName::P(_) | BlockName::C7 | BlockName::H9 | BlockName::A { .. } => {
            let r = &block.regions[0];
            a.place(r, &column_units(r)?, &id)?;
        }
        BlockName::Xi => {
            let r = &block.regions[0];
            a.place(r, &column_units(r)?, &id)?;
            place_pieces(&mut a, &[Piece::T5, Piece::T6], &wedge_to_global(14))?;
        }
    }
    let total: i64 = a.units.iter().map(|u| u.contribution() as i64).sum();
    Ok(a.finish(None, total - 1, format!("block:{name}")))
}

fn column_cube() -> LocalUnits {
    vec![(UnitKind::SegreCubePair, (0..8).map(corner).collect())]
}

/// The block totals as stated in the source construction (`k_i + 1`).
pub fn stated_block_value(name: &BlockName) -> i64 {
    match *name {
        BlockName::Delta1 => 1,
        BlockName::Cube => 2,
        BlockName::Gamma7 => 6,
        BlockName::Delta6 | BlockName::T6 => 21,
        BlockName::T5 => 14,
        BlockName::P(m) => (m + 1) * (m + 2),
        BlockName::C7 => 128,
        BlockName::H9 => 198,
        BlockName::TStar(m) => 28 + 7 * (m - 7),
        BlockName::B(m) => 21 + 28 + 7 * (m - 8),
        BlockName::A { k, family } => super::identities::alpha_plus_one(k, family),
        BlockName::Xi => 72 + 14 + 21,
    }
}

/// Verified total of a block's certificate.
pub fn block_contribution(name: &BlockName) -> Result<i64> {
    let c = block_certificate(name)?;
    let rep = c.verify();
    match rep.failure {
        None => Ok(rep.contribution),
        Some(f) => Err(Error::Packing(format!("{name}: {}", f.reason))),
    }
}

#[derive(serde::Deserialize)]
struct UnitRecord {
    kind: UnitKind,
    region: usize,
    cell: usize,
    vertices: Vec<LatticePoint>,
}

#[derive(serde::Deserialize)]
struct CertificateRecord {
    d: Option<i64>,
    claimed_k: i64,
    units: Vec<UnitRecord>,
    provenance: Provenance,
}

/// Reads a certificate file. Regions are rebuilt from the builder named in
/// the provenance; the units are taken verbatim and left for `verify`.
pub fn load_certificate(json: &str) -> Result<Certificate> {
    let rec: CertificateRecord = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let builder = rec.provenance.builder.as_str();
    let skeleton = match (builder, rec.d) {
        ("odd" | "even-base" | "recursive", Some(d)) => config_for(d)?,
        _ => match builder.split_once(':') {
            Some(("odd-layer", k)) => odd_layer_config(k.parse().map_err(|_| Error::Parse(builder.into()))?)?,
            Some(("block", name)) => block_certificate(&name.parse()?)?,
            _ => return Err(Error::Parse(format!("unknown builder {builder:?}"))),
        },
    };
    let units = rec.units.into_iter().map(|u| Unit::new(u.kind, u.region, u.cell, u.vertices)).collect();
    Ok(Certificate {
        d: rec.d,
        regions: skeleton.regions,
        units,
        claimed_k: rec.claimed_k,
        provenance: rec.provenance,
    })
}
