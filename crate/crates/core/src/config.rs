//! Run configuration and its flat text format.
//!
//! ```text
//! # comment
//! [units]
//! preset = custom        # natural | custom
//! hbar = 1.0
//! mass = 1.0
//! half_width = 1.0
//! charge = 1.0           # magnitude e; the Landau particle carries -e
//! light_speed = 1.0
//!
//! [field]
//! strength = 1.0
//! lx = 10.0
//! ly = 10.0
//!
//! [output]
//! dir = out
//! digits = 12
//! ```
//!
//! Under `preset = natural` the five unit constants are 1 and may not be set.
//! Unknown sections or keys are errors. Floats are written with their shortest
//! round-tripping representation, so `parse(render(c)) == c`.

use std::fmt::{self, Display};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::landau::LandauSpec;
use crate::report::DEFAULT_DIGITS;
use crate::well::WellSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Units {
    Natural,
    Custom,
}

impl Units {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "natural" => Some(Units::Natural),
            "custom" => Some(Units::Custom),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Units::Natural => "natural",
            Units::Custom => "custom",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub units: Units,
    pub hbar: f64,
    pub mass: f64,
    pub half_width: f64,
    pub charge: f64,
    pub light_speed: f64,
    pub field: f64,
    pub lx: f64,
    pub ly: f64,
    pub out_dir: PathBuf,
    pub digits: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            units: Units::Natural,
            hbar: 1.0,
            mass: 1.0,
            half_width: 1.0,
            charge: 1.0,
            light_speed: 1.0,
            field: 1.0,
            lx: 10.0,
            ly: 10.0,
            out_dir: PathBuf::from("out"),
            digits: DEFAULT_DIGITS,
        }
    }
}

const UNIT_KEYS: [&str; 5] = ["hbar", "mass", "half_width", "charge", "light_speed"];

/// Largest accepted digit count; beyond this the output is noise.
pub const MAX_DIGITS: usize = 17;

fn config_err(line: usize, message: impl Into<String>) -> Error {
    Error::Config {
        line,
        message: message.into(),
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        let mut section = String::new();
        let mut unit_lines: Vec<(usize, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                section = name.trim().to_owned();
                if !matches!(section.as_str(), "units" | "field" | "output") {
                    return Err(config_err(line_no, format!("unknown section [{section}]")));
                }
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| config_err(line_no, "expected key = value"))?;
            let real = || {
                value
                    .parse::<f64>()
                    .map_err(|_| config_err(line_no, format!("{key}: not a number: {value}")))
            };
            match (section.as_str(), key) {
                ("units", "preset") => {
                    cfg.units = Units::parse(value)
                        .ok_or_else(|| config_err(line_no, format!("preset must be natural or custom, got {value}")))?
                }
                ("units", k) if UNIT_KEYS.contains(&k) => {
                    let v = real()?;
                    unit_lines.push((line_no, k));
                    match k {
                        "hbar" => cfg.hbar = v,
                        "mass" => cfg.mass = v,
                        "half_width" => cfg.half_width = v,
                        "charge" => cfg.charge = v,
                        _ => cfg.light_speed = v,
                    }
                }
                ("field", "strength") => cfg.field = real()?,
                ("field", "lx") => cfg.lx = real()?,
                ("field", "ly") => cfg.ly = real()?,
                ("output", "dir") => cfg.out_dir = PathBuf::from(value),
                ("output", "digits") => {
                    cfg.digits = value
                        .parse()
                        .map_err(|_| config_err(line_no, format!("digits: not an integer: {value}")))?
                }
                ("", _) => return Err(config_err(line_no, format!("key {key} outside a section"))),
                (s, k) => return Err(config_err(line_no, format!("unknown key {k} in [{s}]"))),
            }
        }
        if cfg.units == Units::Natural {
            if let Some(&(line, key)) = unit_lines.first() {
                return Err(config_err(line, format!("{key} cannot be set with preset = natural")));
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Switches the unit preset; `Natural` resets the unit constants to 1.
    pub fn set_units(&mut self, units: Units) {
        self.units = units;
        if units == Units::Natural {
            let d = Self::default();
            (self.hbar, self.mass, self.half_width, self.charge, self.light_speed) =
                (d.hbar, d.mass, d.half_width, d.charge, d.light_speed);
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("hbar", self.hbar),
            ("mass", self.mass),
            ("half_width", self.half_width),
            ("charge", self.charge),
            ("light_speed", self.light_speed),
            ("field", self.field),
            ("lx", self.lx),
            ("ly", self.ly),
        ];
        for (name, value) in positive {
            crate::error::require_positive(name, value)?;
        }
        if self.digits == 0 || self.digits > MAX_DIGITS {
            return Err(Error::InvalidParameter {
                name: "digits",
                value: self.digits as f64,
                reason: "must lie in 1..=17",
            });
        }
        Ok(())
    }

    pub fn well(&self) -> Result<WellSpec> {
        WellSpec::new(self.half_width, self.mass, self.hbar)
    }

    pub fn landau(&self) -> Result<LandauSpec> {
        LandauSpec::new(
            self.field,
            -self.charge,
            self.mass,
            self.light_speed,
            self.hbar,
            self.lx,
            self.ly,
        )
    }
}

impl Display for RunConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[units]")?;
        writeln!(f, "preset = {}", self.units.as_str())?;
        if self.units == Units::Custom {
            writeln!(f, "hbar = {:?}", self.hbar)?;
            writeln!(f, "mass = {:?}", self.mass)?;
            writeln!(f, "half_width = {:?}", self.half_width)?;
            writeln!(f, "charge = {:?}", self.charge)?;
            writeln!(f, "light_speed = {:?}", self.light_speed)?;
        }
        writeln!(f, "\n[field]")?;
        writeln!(f, "strength = {:?}", self.field)?;
        writeln!(f, "lx = {:?}", self.lx)?;
        writeln!(f, "ly = {:?}", self.ly)?;
        writeln!(f, "\n[output]")?;
        writeln!(f, "dir = {}", self.out_dir.display())?;
        writeln!(f, "digits = {}", self.digits)
    }
}
