//! Library side of the `ncfactor` command: request handling and report
//! rendering, kept separate from argument parsing so it can be tested
//! directly.

mod parse;
mod report;

use std::sync::Arc;

use ncfactor::factor::Budget;
use ncfactor::{factor_all, factor_bidegree, factor_completely, Alphabet, DegreeSplit, FactorOptions, Field};
use thiserror::Error;

pub use parse::{identifiers, parse_expression, ParseError};
pub use report::{render_json, render_text, ChainReport, FactorizationReport, Report, SolutionReport, SplitReport};

/// One factorization request.
#[derive(Clone, Debug)]
pub struct Request {
    pub expression: String,
    pub field: Field,
    /// Letters of the algebra; defaults to the sorted identifiers of the
    /// expression.
    pub vars: Option<Vec<String>>,
    pub degrees: Option<(usize, usize)>,
    pub knapsack: bool,
    pub groebner: bool,
    pub complete: bool,
    pub max_solutions: Option<usize>,
    pub budget: Option<u64>,
}

impl Request {
    pub fn new(expression: impl Into<String>, field: Field) -> Self {
        Request {
            expression: expression.into(),
            field,
            vars: None,
            degrees: None,
            knapsack: true,
            groebner: false,
            complete: false,
            max_solutions: None,
            budget: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Factor(#[from] ncfactor::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit code: 2 for malformed input, 1 for failures while
    /// factoring.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Factor(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
        }
    }
}

/// Parses and factors the request.
pub fn run(req: &Request) -> Result<Report, CliError> {
    let names = match &req.vars {
        Some(v) => v.clone(),
        None => {
            let found = identifiers(&req.expression)?;
            if found.is_empty() {
                vec!["x".to_string()]
            } else {
                found
            }
        }
    };
    let alphabet = Arc::new(Alphabet::new(names)?);
    let f = parse_expression(&req.expression, &alphabet, req.field)?;
    if f.is_zero() {
        return Err(CliError::Usage("the zero polynomial has no factorizations".into()));
    }
    let n = f.degree()?;
    let opts = FactorOptions {
        groebner: req.groebner,
        knapsack: req.knapsack,
        budget: req.budget.map(Budget::new),
        ..FactorOptions::default()
    };

    let mut splits = Vec::new();
    match req.degrees {
        Some((h, k)) => {
            if h == 0 || k == 0 || h + k != n {
                return Err(CliError::Usage(format!(
                    "degrees {h},{k} must be positive and add up to the degree {n}"
                )));
            }
            let s = DegreeSplit::new(h, k);
            splits.push(SplitReport::new(s, &factor_bidegree(&f, s, &opts)?, req.max_solutions));
        }
        None => {
            for (s, found) in factor_all(&f, &opts)? {
                splits.push(SplitReport::new(s, &found, req.max_solutions));
            }
        }
    }
    let chains = if req.complete {
        Some(factor_completely(&f, None, &opts)?.iter().map(ChainReport::new).collect())
    } else {
        None
    };
    let irreducible = splits.iter().all(|s| s.factorizations.is_empty());
    Ok(Report {
        input: f.to_string(),
        field: req.field.to_string(),
        splits,
        irreducible,
        chains,
    })
}
