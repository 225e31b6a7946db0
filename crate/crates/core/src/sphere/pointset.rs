use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{check_dim, UnitVector};
use crate::error::{Error, Result};

/// Where a point set came from: a whitespace-free generator descriptor and a seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: String,
    pub seed: u64,
}

impl Provenance {
    pub fn new(generator: impl Into<String>, seed: u64) -> Self {
        let generator: String = generator
            .into()
            .chars()
            .map(|c| if c.is_whitespace() { '_' } else { c })
            .collect();
        Self { generator, seed }
    }
}

/// An ordered prefix u_1, …, u_N of a sequence on S^{n−1}.
///
/// Coordinates are stored row-major in one buffer; [`PointSet::point`]
/// borrows a row.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
    provenance: Provenance,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<UnitVector>, provenance: Provenance) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidParameter(format!(
                "point set dimension {dim} < 2"
            )));
        }
        let mut coords = Vec::with_capacity(dim * points.len());
        for p in points {
            check_dim(dim, p.dim())?;
            coords.extend(p.into_inner());
        }
        Ok(Self {
            dim,
            coords,
            provenance,
        })
    }

    /// Points on S¹ from polar angles.
    pub fn from_angles(angles: &[f64], provenance: Provenance) -> Self {
        let coords = angles.iter().flat_map(|t| [t.cos(), t.sin()]).collect();
        Self {
            dim: 2,
            coords,
            provenance,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn to_vectors(&self) -> Vec<UnitVector> {
        self.iter()
            .map(|p| UnitVector::new(p.to_vec()).expect("stored points are unit"))
            .collect()
    }

    /// First `n` points, keeping provenance.
    pub fn prefix(&self, n: usize) -> PointSet {
        let n = n.min(self.len());
        Self {
            dim: self.dim,
            coords: self.coords[..n * self.dim].to_vec(),
            provenance: self.provenance.clone(),
        }
    }

    /// Polar angles in [0, 2π) of points on S¹.
    pub fn angles(&self) -> Result<Vec<f64>> {
        check_dim(2, self.dim)?;
        Ok(self
            .iter()
            .map(|p| super::canonical_angle(p[1].atan2(p[0])))
            .collect())
    }

    /// CSV text: a `# dim=… generator=… seed=…` header, then one point per
    /// line with 17 significant digits per coordinate.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.coords.len() * 25 + 64);
        let _ = writeln!(
            out,
            "# dim={} generator={} seed={}",
            self.dim, self.provenance.generator, self.provenance.seed
        );
        for p in self.iter() {
            for (i, x) in p.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{x:.16e}");
            }
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, w: &mut impl Write) -> Result<()> {
        w.write_all(self.to_csv().as_bytes())?;
        Ok(())
    }

    pub fn save_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_csv(&mut f)?;
        f.flush()?;
        Ok(())
    }

    pub fn load_csv(path: impl AsRef<Path>) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read_csv(std::io::BufReader::new(f))
    }

    pub fn read_csv(r: impl BufRead) -> Result<Self> {
        let mut dim = None;
        let mut provenance = Provenance::new("unknown", 0);
        let mut points = Vec::new();
        for (idx, line) in r.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(header) = line.strip_prefix('#') {
                if dim.is_some() || !points.is_empty() {
                    continue;
                }
                for token in header.split_whitespace() {
                    let Some((key, value)) = token.split_once('=') else {
                        continue;
                    };
                    let bad = |what: &str| Error::Parse {
                        line: line_no,
                        msg: format!("bad {what} value {value:?}"),
                    };
                    match key {
                        "dim" => dim = Some(value.parse::<usize>().map_err(|_| bad("dim"))?),
                        "generator" => provenance.generator = value.to_string(),
                        "seed" => provenance.seed = value.parse().map_err(|_| bad("seed"))?,
                        _ => {}
                    }
                }
                continue;
            }
            let n = dim.ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "missing `# dim=<n>` header".into(),
            })?;
            let coords = line
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse {
                    line: line_no,
                    msg: e.to_string(),
                })?;
            if coords.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {n} coordinates, found {}", coords.len()),
                });
            }
            let v = UnitVector::new(coords).map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
            points.push(v);
        }
        let dim = dim.ok_or(Error::Parse {
            line: 0,
            msg: "missing `# dim=<n>` header".into(),
        })?;
        Self::new(dim, points, provenance)
    }
}
