use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use autocomm::cli::{self, Command, CommandRequest, OutputFormat};

#[derive(Parser)]
#[command(name = "autocomm", version)]
#[command(about = "Exact autocommuting probabilities of finite groups", long_about = None)]
#[command(after_help = "Group specs combine C<n>, D<n> (order 2n), Q8, S<n>/A<n> (n <= 5), and \
E<p>,<k> with `x` for direct products, e.g. C3xC4. A path to a Cayley-table \
file is accepted wherever a group spec is. Element labels: cyclic a^k, \
dihedral r^k / r^k s (r2 is read as r^2), quaternion i, -j, ..., products \
(x,y), permutations in cycle notation. AUTOCOMM_THREADS bounds parallelism.")]
struct Args {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the artifact to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Commands {
    /// Compute Pr_g(H, Aut(K)) for one instance
    Compute {
        /// Group spec for K (or a Cayley-table file path)
        #[arg(long)]
        group: String,
        /// Generator labels for H, whitespace-separated (default: H = K)
        #[arg(long)]
        subgroup: Option<String>,
        /// Element label for g (default: identity)
        #[arg(long)]
        g: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print the full distribution g -> Pr_g(H, Aut(K))
    Distribution {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the verification suite over the small-groups catalog
    Verify {
        /// Cap on the group orders verified (hard limit 48)
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Automorphism group order, with an optional generator listing
    Aut {
        #[arg(long)]
        group: String,
        /// Also list a generating set of automorphisms
        #[arg(long)]
        generators: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Search for an autoisoclinism between two subgroup pairs
    Autoiso {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long)]
        pair2_group: String,
        #[arg(long)]
        pair2_subgroup: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// List the default catalog with orders and automorphism counts
    Catalog {
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn build_request(args: Args) -> CommandRequest {
    match args.command {
        Commands::Compute {
            group,
            subgroup,
            g,
            common,
        } => {
            let mut req = CommandRequest::new(Command::Compute);
            req.group = Some(group);
            req.subgroup = subgroup;
            req.g = g;
            apply_common(&mut req, common);
            req
        }
        Commands::Distribution {
            group,
            subgroup,
            common,
        } => {
            let mut req = CommandRequest::new(Command::Distribution);
            req.group = Some(group);
            req.subgroup = subgroup;
            apply_common(&mut req, common);
            req
        }
        Commands::Verify { max_order, common } => {
            let mut req = CommandRequest::new(Command::Verify);
            req.max_order = max_order;
            apply_common(&mut req, common);
            req
        }
        Commands::Aut {
            group,
            generators,
            common,
        } => {
            let mut req = CommandRequest::new(Command::Aut);
            req.group = Some(group);
            req.generators = generators;
            apply_common(&mut req, common);
            req
        }
        Commands::Autoiso {
            group,
            subgroup,
            pair2_group,
            pair2_subgroup,
            common,
        } => {
            let mut req = CommandRequest::new(Command::Autoiso);
            req.group = Some(group);
            req.subgroup = subgroup;
            req.pair2_group = Some(pair2_group);
            req.pair2_subgroup = pair2_subgroup;
            apply_common(&mut req, common);
            req
        }
        Commands::Catalog { max_order, common } => {
            let mut req = CommandRequest::new(Command::Catalog);
            req.max_order = max_order;
            apply_common(&mut req, common);
            req
        }
    }
}

fn apply_common(req: &mut CommandRequest, common: CommonArgs) {
    req.format = common.format.into();
    req.out = common.out;
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("AUTOCOMM_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let args = Args::parse();
    let output = cli::run(&build_request(args));
    print!("{}", output.text);
    ExitCode::from(output.exit_code as u8)
}
