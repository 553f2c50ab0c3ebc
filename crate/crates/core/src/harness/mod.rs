//! Verification suites that check the structural results about essential
//! subgroups on every catalog group, and the reports they produce.
//!
//! Each suite instantiates one statement on finite inputs. A case passes when
//! the statement holds for it; failing cases carry a witness (group specs and
//! subgroup generators) that is enough to re-check by hand. Cases that need
//! a group beyond the configured bounds are skipped with a reason.

mod catalog;
mod report;
mod suites;

use std::time::Instant;

use rayon::prelude::*;

pub use catalog::{catalog, catalog_names, CatalogEntry};
pub use report::{CaseReport, SkipReason, Status, Summary, VerificationReport};
pub use suites::essential_by_closures;

use crate::error::{GroupError, Result};
use crate::limits::Limits;

/// Every suite name accepted by [`run_suite`] besides `all`.
pub const SUITES: &[&str] = &[
    "kk",
    "sk",
    "pm",
    "jj",
    "nbk",
    "khma",
    "babcho",
    "malnormal",
    "sym",
    "ma",
    "abelian_ext",
    "bchche",
    "hol_remark",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Catalog groups above this order are left out.
    pub max_order: usize,
    /// Cases needing automorphisms of a larger group are skipped.
    pub aut_cap: usize,
    /// Include the expensive cases.
    pub slow: bool,
    pub parallel: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_order: 200,
            aut_cap: Limits::current().aut_cap,
            slow: false,
            parallel: true,
        }
    }
}

impl SuiteOptions {
    pub(crate) fn map<T: Sync, R: Send>(
        &self,
        items: &[T],
        f: impl Fn(usize, &T) -> R + Sync,
    ) -> Vec<R> {
        if self.parallel {
            items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect()
        } else {
            items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
        }
    }
}

fn cases_of(name: &str, opts: &SuiteOptions) -> Result<Vec<CaseReport>> {
    Ok(match name {
        "kk" => suites::kk(opts),
        "sk" => suites::sk(opts),
        "pm" => suites::pm(opts),
        "jj" => suites::jj(opts),
        "nbk" => suites::nbk(opts),
        "khma" => suites::khma(opts),
        "babcho" => suites::babcho(opts),
        "malnormal" => suites::malnormal(opts),
        "sym" => suites::sym(opts),
        "ma" => suites::ma(opts),
        "abelian_ext" => suites::abelian_ext(opts),
        "bchche" => suites::bchche(opts),
        "hol_remark" => suites::hol_remark(opts),
        _ => return Err(GroupError::UnknownSuite(name.to_string())),
    })
}

/// Runs one suite, or every suite in [`SUITES`] order for `all`.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let cases = if name == "all" {
        let mut all = Vec::new();
        for suite in SUITES {
            all.extend(cases_of(suite, opts)?);
        }
        all
    } else {
        cases_of(name, opts)?
    };
    Ok(VerificationReport::new(
        name,
        cases,
        start.elapsed().as_secs_f64(),
    ))
}
