use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use essgroup::harness::{run_suite, SuiteOptions, SUITES};
use essgroup::{
    abelian_essential_extension, automorphism_group, center, e_of, essential_subgroups,
    essentialize, has_proper_essential, holomorph, is_complete, normal_complement,
    normal_subgroups, parse, socle, FiniteGroup, GroupError, GroupSpec, Limits, Subgroup,
};

#[derive(Parser)]
#[command(name = "essgroup")]
#[command(about = "Essential subgroups, socles and essential extensions of small finite groups")]
#[command(version)]
struct Cli {
    /// Largest group the library will enumerate
    #[arg(long, global = true)]
    max_group_order: Option<usize>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Summary of a group's normal structure
    Info { spec: String },

    /// Essential subgroups and e(G)
    Essential {
        spec: String,
        /// Print every essential subgroup
        #[arg(long)]
        list: bool,
    },

    /// A proper essential extension, when one exists
    Extend { spec: String },

    /// Holomorph and automorphism data
    Hol { spec: String },

    /// Run a verification suite
    Verify {
        /// Suite name, or `all`
        #[arg(long)]
        suite: String,

        /// Catalog groups above this order are skipped
        #[arg(long, default_value_t = 200)]
        max_order: usize,

        /// Largest group whose automorphisms are searched
        #[arg(long)]
        aut_cap: Option<usize>,

        #[arg(long)]
        json: bool,

        /// Include slow cases
        #[arg(long)]
        slow: bool,
    },
}

fn load(spec: &str) -> Result<FiniteGroup> {
    let ast = parse(spec).with_context(|| format!("cannot parse {spec:?}"))?;
    essgroup::evaluate(&ast).with_context(|| format!("cannot build {spec}"))
}

/// The subgroup written as a permutation literal on the parent's points.
fn as_spec(sub: &Subgroup) -> String {
    let parent = sub.parent();
    let mut generators: Vec<Vec<Vec<usize>>> = sub
        .generators()
        .iter()
        .map(|&g| parent.element(g).cycles())
        .collect();
    if generators.is_empty() {
        generators.push(Vec::new());
    }
    GroupSpec::PermLiteral {
        degree: parent.degree(),
        generators,
    }
    .to_string()
}

fn completeness(group: &FiniteGroup) -> String {
    match is_complete(group) {
        Ok(flag) => flag.to_string(),
        Err(GroupError::OrderBoundExceeded { .. }) => "unknown (over the automorphism cap)".into(),
        Err(e) => format!("error: {e}"),
    }
}

fn info(spec: &str) -> Result<()> {
    let g = load(spec)?;
    let lattice = normal_subgroups(&g)?;
    let soc = socle(&g)?;
    println!("group:              {spec}");
    println!("order:              {}", g.order());
    println!("center order:       {}", center(&g).order());
    println!("normal subgroups:   {}", lattice.len());
    println!(
        "socle:              {} (order {})",
        as_spec(&soc),
        soc.order()
    );
    println!("e(G) order:         {}", e_of(&g)?.order());
    println!("essential count:    {}", essential_subgroups(&g)?.len());
    println!("complete:           {}", completeness(&g));
    println!("proper essential:   {}", has_proper_essential(&g)?);
    Ok(())
}

fn essential(spec: &str, list: bool) -> Result<()> {
    let g = load(spec)?;
    let subs = essential_subgroups(&g)?;
    let e = e_of(&g)?;
    println!("essential subgroups: {}", subs.len());
    println!("e(G): {} (order {})", as_spec(&e), e.order());
    if list {
        for s in &subs {
            let tag = if s.is_whole() { " (whole group)" } else { "" };
            println!("  order {:>5}  {}{tag}", s.order(), as_spec(s));
        }
    }
    Ok(())
}

fn extend(spec: &str) -> Result<()> {
    let g = load(spec)?;
    if g.is_trivial() {
        println!("trivial group");
        return Ok(());
    }
    if g.is_abelian() {
        let ext = abelian_essential_extension(&g)?;
        println!(
            "extension: {} (order {})",
            ext.extension_spec(),
            ext.extension.order()
        );
        println!("image:     {}", as_spec(&ext.embedding.image()));
        return Ok(());
    }
    if is_complete(&g)? {
        println!("complete — none exists");
        return Ok(());
    }
    let hol = holomorph(&g)?;
    let ess = essentialize(&hol.base_embedding)?;
    if ess.is_proper() {
        println!(
            "extension: Hol({spec}) modulo a normal subgroup of order {} (order {})",
            ess.kernel.order(),
            ess.quotient.order()
        );
    } else {
        println!("not complete; the holomorph gives no proper essential extension");
    }
    Ok(())
}

fn hol(spec: &str) -> Result<()> {
    let g = load(spec)?;
    let aut = automorphism_group(&g)?;
    println!("|Aut(G)|:           {}", aut.order());
    println!("|Inn(G)|:           {}", aut.inner.order());
    println!("|Out(G)|:           {}", aut.out_order);
    let h = holomorph(&g)?;
    let factor = normal_complement(&h.group, &h.base_image())?;
    println!("|Hol(G)|:           {}", h.group.order());
    println!("G direct factor:    {}", factor.is_some());
    println!("proper essential:   {}", has_proper_essential(&h.group)?);
    Ok(())
}

fn verify(
    suite: &str,
    max_order: usize,
    aut_cap: Option<usize>,
    json: bool,
    slow: bool,
) -> Result<bool> {
    if let Some(cap) = aut_cap {
        Limits {
            aut_cap: cap,
            ..Limits::current()
        }
        .install();
    }
    let opts = SuiteOptions {
        max_order,
        aut_cap: Limits::current().aut_cap,
        slow,
        parallel: true,
    };
    let report =
        run_suite(suite, &opts).with_context(|| format!("suites: {}, all", SUITES.join(", ")))?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.is_success())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(order) = cli.max_group_order {
        Limits {
            max_order: order,
            ..Limits::current()
        }
        .install();
    }
    let result = match cli.command {
        Commands::Info { spec } => info(&spec).map(|_| true),
        Commands::Essential { spec, list } => essential(&spec, list).map(|_| true),
        Commands::Extend { spec } => extend(&spec).map(|_| true),
        Commands::Hol { spec } => hol(&spec).map(|_| true),
        Commands::Verify {
            suite,
            max_order,
            aut_cap,
            json,
            slow,
        } => verify(&suite, max_order, aut_cap, json, slow),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
