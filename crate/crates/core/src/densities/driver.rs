use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lowdisc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DriverKind {
    /// Base-2 radical inverse; one-dimensional only.
    #[serde(rename = "van_der_corput_base2")]
    VanDerCorput,
    /// Halton point in bases (2, 3).
    #[serde(rename = "halton_2_3")]
    Halton23,
    /// {jφ} in one dimension, ({j/ρ}, {j/ρ²}) in two (ρ the plastic number).
    KroneckerGolden,
}

impl DriverKind {
    pub fn name(self) -> &'static str {
        match self {
            DriverKind::VanDerCorput => "van_der_corput_base2",
            DriverKind::Halton23 => "halton_2_3",
            DriverKind::KroneckerGolden => "kronecker_golden",
        }
    }
}

impl fmt::Display for DriverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DriverKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "van_der_corput_base2" | "van_der_corput" | "vdc" => Ok(DriverKind::VanDerCorput),
            "halton_2_3" | "halton" => Ok(DriverKind::Halton23),
            "kronecker_golden" | "kronecker" => Ok(DriverKind::KroneckerGolden),
            other => Err(Error::InvalidParameter(format!("unknown driver {other:?}"))),
        }
    }
}

/// Low-discrepancy source in [0, 1)^m, m ∈ {1, 2}. Element j is computed
/// from index `offset + j` alone, so any chunking of j gives the same output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Driver {
    kind: DriverKind,
    offset: u64,
}

impl Driver {
    pub fn new(kind: DriverKind, offset: u64) -> Self {
        Self { kind, offset }
    }

    pub fn kind(&self) -> DriverKind {
        self.kind
    }

    pub fn offset(&self) -> u64 {
        self.offset
    }

    pub fn coord1(&self, j: u64) -> f64 {
        let i = self.offset + j;
        match self.kind {
            DriverKind::VanDerCorput | DriverKind::Halton23 => lowdisc::van_der_corput(i),
            DriverKind::KroneckerGolden => lowdisc::kronecker_golden(i),
        }
    }

    pub fn coord2(&self, j: u64) -> Result<[f64; 2]> {
        let i = self.offset + j;
        match self.kind {
            DriverKind::VanDerCorput => Err(Error::InvalidParameter(
                "van_der_corput_base2 is one-dimensional; use halton_2_3 or kronecker_golden"
                    .into(),
            )),
            DriverKind::Halton23 => Ok([
                lowdisc::radical_inverse(2, i),
                lowdisc::radical_inverse(3, i),
            ]),
            DriverKind::KroneckerGolden => Ok(lowdisc::kronecker_golden_2d(i)),
        }
    }
}
