use std::fmt;
use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use capfreak::cap_transform::{default_order, funk_hecke_lambda_with_order};
use capfreak::densities::{
    generate_qud, positivity_margin, zonal_cap_probability, Density, Driver, DriverKind,
    PlanarRationalDensity, ZonalDensity,
};
use capfreak::discrepancy::{
    arc_discrepancy_fixed_length, cap_directions, cap_discrepancy_fixed_height, circle_discrepancy,
    telescoping_check,
};
use capfreak::orthopoly::freak_heights;
use capfreak::sphere::{cap_measure, generate_uniform, Cap, PointSet, UniformMethod, UnitVector};

use crate::config::{
    Command, DensityKind, DiscArgs, DriverArg, EigenArgs, ExperimentConfig, Family, FreakArgs,
    GenArgs, MethodArg, VerifyArgs,
};

/// A run that could not produce a result: bad parameters or I/O.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<capfreak::Error> for ConfigError {
    fn from(e: capfreak::Error) -> Self {
        ConfigError(e.to_string())
    }
}

impl From<std::io::Error> for ConfigError {
    fn from(e: std::io::Error) -> Self {
        ConfigError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, ConfigError>;

pub struct RunOutput {
    pub result: Value,
    /// Whether a verification passed; `None` for commands that verify nothing.
    pub verified: Option<bool>,
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("result types serialize")
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| ConfigError(format!("--{flag} is required for --family {family}")))
}

fn axis_or_pole(axis: &Option<Vec<f64>>, n: usize) -> Result<UnitVector> {
    Ok(match axis {
        Some(a) => UnitVector::new(a.clone())?,
        None => UnitVector::basis(n, n - 1)?,
    })
}

pub fn run(cfg: &ExperimentConfig, stdout: &mut impl Write) -> Result<RunOutput> {
    match &cfg.command {
        Command::Gen(a) => gen(a, cfg, stdout),
        Command::FreakHeights(a) => freak(a),
        Command::Eigenvalue(a) => eigenvalue(a),
        Command::Disc(a) => disc(a),
        Command::VerifyCaps(a) => verify(a),
    }
}

fn driver_kind(arg: Option<DriverArg>, fallback: DriverKind) -> DriverKind {
    match arg {
        None => fallback,
        Some(DriverArg::Vdc) => DriverKind::VanDerCorput,
        Some(DriverArg::Halton) => DriverKind::Halton23,
        Some(DriverArg::Kronecker) => DriverKind::KroneckerGolden,
    }
}

fn gen(a: &GenArgs, cfg: &ExperimentConfig, stdout: &mut impl Write) -> Result<RunOutput> {
    let (points, positivity): (PointSet, Option<f64>) = match a.density {
        DensityKind::Uniform => {
            let method = match a.method {
                MethodArg::Random => UniformMethod::Random,
                MethodArg::Fibonacci => UniformMethod::FibonacciS2,
                MethodArg::Kronecker => UniformMethod::KroneckerS1,
                MethodArg::Halton => UniformMethod::HaltonInverse,
            };
            (generate_uniform(a.n, a.count, method, a.seed)?, None)
        }
        DensityKind::Planar => {
            let d: Density = PlanarRationalDensity::new(a.p, a.q)?.into();
            let drv = Driver::new(driver_kind(a.driver, DriverKind::VanDerCorput), a.seed);
            (
                generate_qud(&d, a.count, &drv)?,
                Some(positivity_margin(&d)),
            )
        }
        DensityKind::Zonal => {
            let d: Density = ZonalDensity::new(a.n, a.k, a.c, axis_or_pole(&a.axis, a.n)?)?.into();
            let drv = Driver::new(driver_kind(a.driver, DriverKind::Halton23), a.seed);
            (
                generate_qud(&d, a.count, &drv)?,
                Some(positivity_margin(&d)),
            )
        }
    };
    let mut summary = json!({
        "points": points.len(),
        "dim": points.dim(),
        "generator": points.provenance().generator,
        "seed": points.provenance().seed,
    });
    if let Some(m) = positivity {
        summary["positivity_margin"] = json!(m);
    }
    match &cfg.out {
        Some(path) => {
            points.save_csv(path)?;
            summary["path"] = json!(path.display().to_string());
        }
        // Without --out the CSV itself is the output.
        None => points.write_csv(stdout)?,
    }
    Ok(RunOutput {
        result: summary,
        verified: None,
    })
}

fn freak(a: &FreakArgs) -> Result<RunOutput> {
    let fh = freak_heights(a.n, a.max_degree)?;
    Ok(RunOutput {
        result: to_value(&fh.heights),
        verified: None,
    })
}

fn eigenvalue(a: &EigenArgs) -> Result<RunOutput> {
    let order = a.order.unwrap_or_else(|| default_order(a.k));
    let lambda = funk_hecke_lambda_with_order(a.n, a.k, a.s, order)?;
    Ok(RunOutput {
        result: json!({ "n": a.n, "k": a.k, "s": a.s, "order": order, "lambda": lambda }),
        verified: None,
    })
}

fn disc(a: &DiscArgs) -> Result<RunOutput> {
    let ps = PointSet::load_csv(&a.input)?;
    let result = match a.family {
        Family::ArcFixed => to_value(arc_discrepancy_fixed_length(
            &ps,
            require(a.a, "a", "arc-fixed")?,
        )?),
        Family::CapFixed => to_value(cap_discrepancy_fixed_height(
            &ps,
            require(a.s, "s", "cap-fixed")?,
            a.directions,
            a.refine,
        )?),
        Family::Circle => to_value(circle_discrepancy(&ps)?),
        Family::Telescope => to_value(telescoping_check(
            &ps,
            require(a.a, "a", "telescope")?,
            require(a.m, "m", "telescope")?,
        )?),
    };
    Ok(RunOutput {
        result,
        verified: None,
    })
}

fn verify(a: &VerifyArgs) -> Result<RunOutput> {
    let d = ZonalDensity::new(a.n, a.k, a.c, axis_or_pole(&a.axis, a.n)?)?;
    let target = cap_measure(a.n, a.s)?;
    let mut worst = (0.0f64, 0usize);
    let dirs = cap_directions(a.n, a.directions)?;
    for (i, u) in dirs.iter().enumerate() {
        let q = zonal_cap_probability(&d, &Cap::new(u.clone(), a.s)?)?;
        let dev = (q - target).abs();
        if dev > worst.0 {
            worst = (dev, i);
        }
    }
    let passed = worst.0 <= a.tol;
    Ok(RunOutput {
        result: json!({
            "n": a.n,
            "k": a.k,
            "c": a.c,
            "s": a.s,
            "directions": dirs.len(),
            "cap_measure": target,
            "max_deviation": worst.0,
            "worst_direction": dirs[worst.1].as_slice(),
            "tol": a.tol,
            "passed": passed,
        }),
        verified: Some(passed),
    })
}
