use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pinlift", version, about = "Pin-liftability and Stiefel-Whitney classes of orthogonal representations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a representation lifts to the Pin group.
    Check(RepArgs),
    /// First and second Stiefel-Whitney classes.
    Sw(RepArgs),
    /// Trace of the outer involution g0 on a representation.
    TwistedChar(RepArgs),
    /// Fold a root system along its diagram involution.
    Fold(GroupArgs),
    /// Character criterion from values at 1, d1, d2.
    CharCriterion(CharArgs),
    /// Sweep dominant weights up to a bound, one line per representation.
    Table(TableArgs),
    /// Run the built-in validation sweeps.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// O:<n>, SO:<n>, GL:<n> or G:<family><rank>xC2.
    #[arg(long)]
    pub group: String,

    /// Cocharacter generating the fundamental group (repeatable, comma-separated rationals).
    #[arg(long = "cochar", allow_hyphen_values = true)]
    pub cochar: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct RepArgs {
    #[command(flatten)]
    pub group: GroupArgs,

    /// Highest weight as comma-separated rationals; for O:2 one of 0, det or n >= 1.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,

    /// Extension sign for representations fixed by the outer involution.
    #[arg(long, value_parser = parse_sign)]
    pub sign: Option<char>,

    /// Character of the centre {+-I} for odd orthogonal groups.
    #[arg(long, value_enum)]
    pub rho: Option<Rho>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rho {
    Trivial,
    Sgn,
}

#[derive(Debug, Clone, Args)]
pub struct CharArgs {
    /// Raw character values chi(1),chi(d1),chi(d2).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["group", "weight"])]
    pub chars: Option<String>,

    #[arg(long, requires = "weight")]
    pub group: Option<String>,

    #[arg(long, allow_hyphen_values = true, requires = "group")]
    pub weight: Option<String>,

    #[arg(long, value_parser = parse_sign)]
    pub sign: Option<char>,

    #[arg(long, value_enum)]
    pub rho: Option<Rho>,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub group: GroupArgs,

    /// Largest coordinate (or Dynkin label for exceptional and type A groups).
    #[arg(long, default_value_t = 2)]
    pub bound: i64,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    /// Criteria to run, by number or keyword (comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}

fn parse_sign(s: &str) -> Result<char, String> {
    match s {
        "+" | "plus" => Ok('+'),
        "-" | "minus" => Ok('-'),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}
