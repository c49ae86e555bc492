//! Command-line front end for the octonion kernel: the basis
//! multiplication table, group actions on the ball, the dilation and
//! translation coordinates of a point, triality companions, and the
//! verification suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use cayley_plane::algebra::{Backend, Octonion, Scalar};
use cayley_plane::geometry::HPoint;
use cayley_plane::iwasawa::{an_coords, GroupElement};
use cayley_plane::triality::SpinWord;
use cayley_plane::verify::{run_suite, SuiteReport, SUITE_NAMES};
use cayley_plane::Result;

const GRAMMAR_HELP: &str = "\
LITERALS
  scalar    rational `p/q` or integer on the rational backend; any decimal on the float backend
  octonion  sum form `1/2 + 3 e1 - e7` over the basis 1, e1..e7, or the compact form of
            8 comma-separated scalars `1/2, 3, 0, 0, 0, 0, 0, -1`
  point     finite `(x1, x2)`; direction at infinity `(u)`; vertical limit `(inf)`
  line      oblique `[u, v]`; vertical `[u]`; line at infinity `[inf]`
  word      semicolon-separated unit-norm octonions, e.g. `e1; 3/5 + 4/5 e2`
  element   `a(s)` dilation with scale s > 0; `u(y; z)` translation with y imaginary;
            `z(y)` central translation; `m(word)` boundary-basepoint stabilizer;
            `*`-products apply right to left, e.g. `a(2) * u(e1; 0)`

EXAMPLES
  cayley-plane table
  cayley-plane act --element \"u(e1; 0)\" --point \"(1/2, 0)\"
  cayley-plane coords --point \"(1/3, 2/3 e2)\"
  cayley-plane triality --word \"e1; e2\" --x \"e3\" --y \"1/2 + 1/2 e1 + 1/2 e4 + 1/2 e7\"
  cayley-plane verify --suite all --seed 7 --trials 200
";

#[derive(Parser)]
#[command(
    name = "cayley-plane",
    version,
    about = "Exact computations in the octonion algebra and its hyperbolic plane",
    after_help = GRAMMAR_HELP,
    after_long_help = GRAMMAR_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 8x8 multiplication table of the octonion basis.
    Table,
    /// Apply a group element, or a `*`-product of them, to a ball point.
    Act {
        /// Group element literal, e.g. "a(2)", "u(e1; 0)", "a(2) * u(e1; 0)".
        #[arg(long)]
        element: String,
        /// Ball point literal "(x1, x2)".
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
    },
    /// Write a ball point as a dilation and a translation applied to the origin.
    Coords {
        /// Ball point literal "(x1, x2)".
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
    },
    /// Evaluate a rotation word and its two companions, and check the
    /// product relation R(xy) = R'(x)R''(y).
    Triality {
        /// Word literal: semicolon-separated unit octonions.
        #[arg(long)]
        word: String,
        /// Octonion fed to R and R'.
        #[arg(long)]
        x: String,
        /// Octonion fed to R''.
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
    },
    /// Run named verification suites with a deterministic seed.
    Verify {
        /// Suite name (algebra, triality, geometry, n-group-action, oracle,
        /// quaternion, m-stabilizer, dynamics, equivariance) or "all".
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, value_enum, default_value_t = BackendArg::Rational)]
        backend: BackendArg,
        /// Emit the reports as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Rational,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(arg: BackendArg) -> Backend {
        match arg {
            BackendArg::Rational => Backend::Rational,
            BackendArg::Float => Backend::Float,
        }
    }
}

/// Runs a closure on the scalar type selected by `--backend`.
macro_rules! with_backend {
    ($backend:expr, $name:ident => $body:expr) => {
        match $backend {
            BackendArg::Rational => {
                type $name = BigRational;
                $body
            }
            BackendArg::Float => {
                type $name = f64;
                $body
            }
        }
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table => {
            print_table();
            Ok(true)
        }
        Command::Act {
            element,
            point,
            backend,
        } => with_backend!(backend, S => run_act::<S>(&element, &point)),
        Command::Coords { point, backend } => {
            with_backend!(backend, S => run_coords::<S>(&point))
        }
        Command::Triality {
            word,
            x,
            y,
            backend,
        } => with_backend!(backend, S => run_triality::<S>(&word, &x, &y)),
        Command::Verify {
            suite,
            seed,
            trials,
            backend,
            json,
        } => run_verify(&suite, seed, trials, backend.into(), json),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn print_table() {
    let label = |i: usize| {
        if i == 0 {
            "1".to_string()
        } else {
            format!("e{i}")
        }
    };
    print!("{:>5}", "*");
    for j in 0..8 {
        print!("{:>5}", label(j));
    }
    println!();
    for i in 0..8 {
        print!("{:>5}", label(i));
        for j in 0..8 {
            let product = &Octonion::<BigRational>::basis(i) * &Octonion::basis(j);
            let k = (0..8)
                .find(|&k| !product.coeff(k).is_zero())
                .expect("basis products are nonzero");
            let signed = if product.coeff(k) < &BigRational::from_int(0) {
                format!("-{}", label(k))
            } else {
                label(k)
            };
            print!("{signed:>5}");
        }
        println!();
    }
}

fn run_act<S: Scalar>(element: &str, point: &str) -> Result<bool> {
    let product = GroupElement::<S>::parse_product(element)?;
    let p: HPoint<S> = point.parse()?;
    println!("{}", GroupElement::apply_product(&product, &p));
    Ok(true)
}

fn run_coords<S: Scalar>(point: &str) -> Result<bool> {
    let p: HPoint<S> = point.parse()?;
    let coords = an_coords(&p)?;
    let dilation = GroupElement::Dilation(coords.a_element());
    let translation = GroupElement::Nilpotent(coords.n_element());
    println!("{dilation} * {translation}");
    Ok(true)
}

fn run_triality<S: Scalar>(word: &str, x: &str, y: &str) -> Result<bool> {
    let word: SpinWord<S> = word.parse()?;
    let x: Octonion<S> = x.parse()?;
    let y: Octonion<S> = y.parse()?;
    let rotated_x = word.rotate(&x);
    let left_x = word.companion_left(&x);
    let right_y = word.companion_right(&y);
    let product_image = word.rotate(&(&x * &y));
    let companion_product = &left_x * &right_y;
    println!("R(x)        = {rotated_x}");
    println!("R'(x)       = {left_x}");
    println!("R''(y)      = {right_y}");
    println!("R(xy)       = {product_image}");
    println!("R'(x)R''(y) = {companion_product}");
    let holds = product_image.approx_eq(&companion_product);
    println!(
        "relation R(xy) = R'(x)R''(y): {}",
        if holds { "holds" } else { "VIOLATED" }
    );
    Ok(holds)
}

fn run_verify(suite: &str, seed: u64, trials: u64, backend: Backend, json: bool) -> Result<bool> {
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![suite]
    };
    let reports: Vec<SuiteReport> = names
        .into_iter()
        .map(|name| run_suite(name, seed, trials, backend))
        .collect::<Result<_>>()?;
    let all_passed = reports.iter().all(SuiteReport::passed);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    } else {
        for report in &reports {
            print!("{report}");
        }
        println!(
            "{}",
            if all_passed {
                "all suites passed"
            } else {
                "failures present"
            }
        );
    }
    Ok(all_passed)
}
