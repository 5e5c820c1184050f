//! On-disk point tables: `<stem>.points.csv` plus `<stem>.meta.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{enumerate_points, AffinePoint, Budget, CurveDescriptor, CurveError, CurveSpec, PointSet};
use crate::gf::ContextDescriptor;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "HERMQ_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheMeta {
    pub context: ContextDescriptor,
    pub curve: CurveDescriptor,
    pub sha256: String,
    pub count: u64,
    pub cleared_locus: Vec<[String; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CacheStatus {
    Hit,
    Miss,
    /// Table existed but did not match its metadata.
    Stale,
}

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

pub fn file_stem(spec: &CurveSpec) -> String {
    format!("{}_p{}_h{}_d{}", spec.family.name(), spec.p, spec.h, spec.d.unwrap_or(0))
}

fn paths(dir: &Path, spec: &CurveSpec) -> (PathBuf, PathBuf) {
    let stem = file_stem(spec);
    (dir.join(format!("{stem}.points.csv")), dir.join(format!("{stem}.meta.json")))
}

fn io_err(e: impl std::fmt::Display) -> CurveError {
    CurveError::Cache(e.to_string())
}

fn encode(spec: &CurveSpec, points: &[AffinePoint]) -> Result<Vec<u8>, CurveError> {
    let f = &*spec.field;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["x", "y"]).map_err(io_err)?;
    for pt in points {
        w.write_record([f.format(pt.x), f.format(pt.y)]).map_err(io_err)?;
    }
    w.into_inner().map_err(io_err)
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn save(dir: &Path, spec: &CurveSpec, set: &PointSet) -> Result<(), CurveError> {
    fs::create_dir_all(dir).map_err(io_err)?;
    let (csv_path, meta_path) = paths(dir, spec);
    let bytes = encode(spec, &set.points)?;
    let f = &*spec.field;
    let meta = CacheMeta {
        context: f.descriptor(),
        curve: spec.descriptor(),
        sha256: sha256_hex(&bytes),
        count: set.points.len() as u64,
        cleared_locus: set.cleared_locus.iter().map(|pt| [f.format(pt.x), f.format(pt.y)]).collect(),
    };
    fs::write(&csv_path, &bytes).map_err(io_err)?;
    let json = serde_json::to_string_pretty(&meta).map_err(io_err)?;
    fs::write(&meta_path, json).map_err(io_err)
}

/// `Ok(None)` when the table is missing or disagrees with its metadata
/// (context, curve, hash or count).
pub fn load(dir: &Path, spec: &CurveSpec) -> Result<Option<PointSet>, CurveError> {
    let (csv_path, meta_path) = paths(dir, spec);
    if !csv_path.exists() || !meta_path.exists() {
        return Ok(None);
    }
    let bytes = fs::read(&csv_path).map_err(io_err)?;
    let meta: CacheMeta = match serde_json::from_slice(&fs::read(&meta_path).map_err(io_err)?) {
        Ok(m) => m,
        Err(_) => return Ok(None),
    };
    let f = &*spec.field;
    if meta.context != f.descriptor() || meta.curve != spec.descriptor() || meta.sha256 != sha256_hex(&bytes) {
        return Ok(None);
    }
    let mut reader = csv::Reader::from_reader(bytes.as_slice());
    let mut points = Vec::with_capacity(meta.count as usize);
    for rec in reader.records() {
        let rec = rec.map_err(io_err)?;
        let x = f.parse(&rec[0])?;
        let y = f.parse(&rec[1])?;
        points.push(AffinePoint::new(x, y));
    }
    if points.len() as u64 != meta.count {
        return Ok(None);
    }
    let cleared_locus = meta
        .cleared_locus
        .iter()
        .map(|[x, y]| Ok(AffinePoint::new(f.parse(x)?, f.parse(y)?)))
        .collect::<Result<Vec<_>, CurveError>>()?;
    Ok(Some(PointSet { points, cleared_locus }))
}

pub fn load_or_enumerate(dir: &Path, spec: &CurveSpec, budget: &Budget) -> Result<(PointSet, CacheStatus), CurveError> {
    let (csv_path, _) = paths(dir, spec);
    let existed = csv_path.exists();
    if let Some(set) = load(dir, spec)? {
        return Ok((set, CacheStatus::Hit));
    }
    let set = enumerate_points(spec, budget)?;
    save(dir, spec, &set)?;
    let status = if existed { CacheStatus::Stale } else { CacheStatus::Miss };
    Ok((set, status))
}
