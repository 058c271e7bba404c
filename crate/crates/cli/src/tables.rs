use clap::ValueEnum;
use rayon::prelude::*;

use repcontain_core::chartab::{character_table_generic, character_table_gl2_on, CharacterTable};
use repcontain_core::groups::{Group, GroupKind};

use crate::descriptor::parse_group;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    #[default]
    Generic,
    ClosedForm,
}

/// Resource bounds and the seed shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub seed: u64,
    pub max_order: usize,
    pub max_classes: usize,
}

pub const DEFAULT_SEED: u64 = 20_260_101;

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            max_order: repcontain_core::groups::DEFAULT_MAX_ORDER,
            max_classes: repcontain_core::chartab::DEFAULT_MAX_CLASSES,
        }
    }
}

pub fn build_table(g: &Group, method: Method, cfg: &Config) -> Result<CharacterTable> {
    match method {
        Method::Generic => Ok(character_table_generic(g, cfg.max_classes)?),
        Method::ClosedForm => match g.kind() {
            GroupKind::Gl2(_) => Ok(character_table_gl2_on(g)?),
            _ => Err(CliError::usage("--method closed-form is only available for gl2:Q")),
        },
    }
}

pub fn table_for(desc: &str, method: Method, cfg: &Config) -> Result<CharacterTable> {
    build_table(&parse_group(desc, cfg.max_order)?, method, cfg)
}

/// Generic tables for several descriptors, built in parallel, in input order.
pub fn tables_for(descs: &[&str], cfg: &Config) -> Result<Vec<CharacterTable>> {
    descs.par_iter().map(|d| table_for(d, Method::Generic, cfg)).collect()
}
