use std::io::Read;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};
use ncfactor::Field;
use ncfactor_cli::{render_json, render_text, run, CliError, Request};

/// Factor polynomials in non-commuting variables over F_p or Q.
#[derive(Debug, Parser)]
#[command(name = "ncfactor", version, group(ArgGroup::new("coefficients").required(true).args(["field", "rationals"])))]
struct Args {
    /// Work over the prime field F_p.
    #[arg(long, value_name = "p")]
    field: Option<u32>,
    /// Work over the rational numbers.
    #[arg(long)]
    rationals: bool,
    /// Variables of the algebra, comma separated (default: the identifiers
    /// of the expression, sorted).
    #[arg(long, value_delimiter = ',', value_name = "x,y")]
    vars: Option<Vec<String>>,
    /// Only try the split deg G = h, deg H = k.
    #[arg(long, value_delimiter = ',', num_args = 1, value_name = "h,k")]
    degrees: Option<Vec<usize>>,
    /// Try every degree split, even those ruled out by the commutative image.
    #[arg(long)]
    no_knapsack: bool,
    /// Always print the reduced lexicographic Gröbner basis of each system.
    #[arg(long)]
    groebner: bool,
    /// Also list factorizations into irreducible factors.
    #[arg(long)]
    complete: bool,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Show at most N solutions per factorization.
    #[arg(long, value_name = "N")]
    max_solutions: Option<usize>,
    /// Stop after examining N candidate points in total.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    /// The polynomial, or `-` to read it from standard input.
    expression: String,
}

fn request(args: Args) -> Result<(Request, bool), CliError> {
    let field = match args.field {
        Some(p) => Field::prime(p).map_err(|e| CliError::Usage(e.to_string()))?,
        None => Field::Rational,
    };
    let expression = if args.expression == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        args.expression
    };
    let degrees = match args.degrees.as_deref() {
        None => None,
        Some(&[h, k]) => Some((h, k)),
        Some(_) => return Err(CliError::Usage("--degrees takes two numbers, h,k".into())),
    };
    let mut req = Request::new(expression, field);
    req.vars = args.vars;
    req.degrees = degrees;
    req.knapsack = !args.no_knapsack;
    req.groebner = args.groebner;
    req.complete = args.complete;
    req.max_solutions = args.max_solutions;
    req.budget = args.budget;
    Ok((req, args.json))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = request(args).and_then(|(req, json)| run(&req).map(|r| (r, json)));
    match result {
        Ok((report, json)) => {
            let text = if json { render_json(&report) } else { render_text(&report) };
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ncfactor: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
