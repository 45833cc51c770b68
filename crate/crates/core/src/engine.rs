//! Interchangeable symmetric-power engines, looked up by name.
//!
//! Two routes compute `Sym^n` of a diamond: multiplying out the symmetric
//! algebra's generating series, or walking Macdonald's product
//! coefficientwise. They must agree on every input, which the pipeline and
//! the tests use as a cross-check; the CLI exposes the choice through
//! `--engine`.

use crate::diamond::HodgeDiamond;
use crate::error::{HodgeError, Result};
use crate::series;
use crate::symfunc;

pub trait SymPowerEngine: Send + Sync {
    fn name(&self) -> &'static str;

    fn sym_power(&self, v: &HodgeDiamond, n: usize) -> Result<HodgeDiamond>;
}

/// Truncated products of geometric series.
#[derive(Debug, Default, Clone, Copy)]
pub struct GeneratingSeries;

impl SymPowerEngine for GeneratingSeries {
    fn name(&self) -> &'static str {
        "series"
    }

    fn sym_power(&self, v: &HodgeDiamond, n: usize) -> Result<HodgeDiamond> {
        Ok(symfunc::sym_power(v, n))
    }
}

/// Coefficientwise expansion of Macdonald's product.
#[derive(Debug, Default, Clone, Copy)]
pub struct Macdonald;

impl SymPowerEngine for Macdonald {
    fn name(&self) -> &'static str {
        "macdonald"
    }

    fn sym_power(&self, v: &HodgeDiamond, n: usize) -> Result<HodgeDiamond> {
        series::macdonald_sym(v, n)
    }
}

pub struct EngineRegistry {
    engines: Vec<Box<dyn SymPowerEngine>>,
}

impl EngineRegistry {
    pub fn empty() -> Self {
        Self { engines: Vec::new() }
    }

    /// Registers an engine; a later registration under the same name wins.
    pub fn register(&mut self, engine: Box<dyn SymPowerEngine>) {
        self.engines.retain(|e| e.name() != engine.name());
        self.engines.push(engine);
    }

    pub fn get(&self, name: &str) -> Result<&dyn SymPowerEngine> {
        self.engines
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| HodgeError::UnknownEngine(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.engines.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn SymPowerEngine> {
        self.engines.iter().map(|e| e.as_ref())
    }
}

impl Default for EngineRegistry {
    fn default() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(GeneratingSeries));
        registry.register(Box::new(Macdonald));
        registry
    }
}

pub const DEFAULT_ENGINE: &str = "series";
