//! Command-line front end. See `quadset --help`.

use clap::{Parser, Subcommand};
use quadset::algebra::{self, poly_display};
use quadset::extensions::{self, ExtensionSpec, Partition};
use quadset::orbits;
use quadset::perm::Permutation;
use quadset::qset::{check_conditions, QuadraticSet};
use quadset::racks;
use quadset::search::{self, PropertyFlag, SearchFilter};
use quadset::solfile;
use std::io::Read;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "quadset", version, about = "Finite Yang-Baxter solutions and their algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a solution file and print its full property report.
    Check {
        /// Path to a solution file, or `-` for stdin.
        path: String,
        /// Emit a machine-readable JSON record instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Graded dimensions up to a degree bound.
    Dims {
        path: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = orbits::DEFAULT_ORBIT_BUDGET)]
        budget: usize,
    },
    /// Orbit census of words of one degree.
    Orbits {
        path: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = orbits::DEFAULT_ORBIT_BUDGET)]
        budget: usize,
    },
    /// Degree-bounded Groebner basis of the defining ideal.
    Groebner {
        path: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Generator enumeration, smallest first, e.g. "0,2,1".
        #[arg(long)]
        order: Option<String>,
    },
    /// Emit a standard quandle as a solution file on stdout.
    Quandle {
        #[command(subcommand)]
        family: QuandleFamily,
    },
    /// Build the two-part extension of two solution files.
    Extend {
        xpath: String,
        ypath: String,
        /// Cycle notation over the first part, e.g. "(0 1 2)".
        #[arg(long)]
        sigma: String,
        /// Cycle notation over the second part.
        #[arg(long)]
        tau: String,
    },
    /// Enumerate isomorphism classes of small solutions.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Property names to require; repeatable.
        #[arg(long)]
        require: Vec<String>,
        /// Property names to forbid; repeatable.
        #[arg(long)]
        forbid: Vec<String>,
        /// Keep only classes with the minimal degree-2 dimension 2n-1.
        #[arg(long)]
        minimal: bool,
    },
    /// Twisted-union checks for a block splitting of a solution.
    Stu {
        path: String,
        /// Blocks as semicolon-separated label lists, e.g. "0,3,6;2,5,7;1,4,8".
        #[arg(long)]
        blocks: String,
        /// Word length bound for the monoid-level check.
        #[arg(long, default_value_t = 3)]
        length: usize,
    },
}

#[derive(Subcommand)]
enum QuandleFamily {
    /// Dihedral quandle of the given order.
    Dihedral { order: usize },
    /// Affine quandle over Z/n with multiplier g.
    Affine { modulus: usize, unit: usize },
}

enum CmdError {
    Parse(String),
    Budget(String),
}

impl CmdError {
    fn code(&self) -> u8 {
        match self {
            CmdError::Parse(_) => EXIT_PARSE,
            CmdError::Budget(_) => EXIT_BUDGET,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Parse(m) | CmdError::Budget(m) => m,
        }
    }
}

fn parse_err(e: impl std::fmt::Display) -> CmdError {
    CmdError::Parse(e.to_string())
}

fn budget_err(e: impl std::fmt::Display) -> CmdError {
    CmdError::Budget(e.to_string())
}

fn load(path: &str) -> Result<QuadraticSet, CmdError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(parse_err)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(parse_err)?
    };
    solfile::read_qset(&text).map_err(parse_err)
}

fn main() -> ExitCode {
    // die quietly on closed pipes, like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.command {
        Command::Check { path, json } => cmd_check(&path, json),
        Command::Dims {
            path,
            max_degree,
            budget,
        } => cmd_dims(&path, max_degree, budget),
        Command::Orbits {
            path,
            degree,
            budget,
        } => cmd_orbits(&path, degree, budget),
        Command::Groebner {
            path,
            max_degree,
            order,
        } => cmd_groebner(&path, max_degree, order.as_deref()),
        Command::Quandle { family } => cmd_quandle(family),
        Command::Extend {
            xpath,
            ypath,
            sigma,
            tau,
        } => cmd_extend(&xpath, &ypath, &sigma, &tau),
        Command::Enumerate {
            n,
            require,
            forbid,
            minimal,
        } => cmd_enumerate(n, &require, &forbid, minimal),
        Command::Stu {
            path,
            blocks,
            length,
        } => cmd_stu(&path, &blocks, length),
    }
}

fn cmd_check(path: &str, json: bool) -> Result<(), CmdError> {
    let qs = load(path)?;
    let rep = check_conditions(&qs);
    if json {
        let record = serde_json::json!({
            "base": 0,
            "n": qs.n(),
            "order_of_r": qs.order_of_r(),
            "fixed_points": qs.fixed_points(),
            "flags": rep.to_record().flags,
        });
        println!("{record}");
        return Ok(());
    }
    println!("n = {} (letters printed 1-based)", qs.n());
    println!("order of r: {}", qs.order_of_r());
    let fixed: Vec<String> = qs
        .fixed_points()
        .iter()
        .map(|&(x, y)| format!("({},{})", x + 1, y + 1))
        .collect();
    println!("fixed pairs ({}): {}", fixed.len(), fixed.join(" "));
    for (name, flag) in rep.named_flags() {
        match (&flag.holds, &flag.witness) {
            (true, _) => println!("{name:18} yes"),
            (false, Some(w)) => {
                let w1: Vec<String> = w.iter().map(|v| (v + 1).to_string()).collect();
                println!("{name:18} no   witness ({})", w1.join(","));
            }
            (false, None) => println!("{name:18} no"),
        }
    }
    Ok(())
}

fn cmd_dims(path: &str, max_degree: usize, budget: usize) -> Result<(), CmdError> {
    let qs = load(path)?;
    let dims = orbits::graded_dims_budgeted(&qs, max_degree, budget).map_err(budget_err)?;
    println!(
        "{}",
        dims.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(())
}

fn cmd_orbits(path: &str, degree: usize, budget: usize) -> Result<(), CmdError> {
    let qs = load(path)?;
    let part = orbits::dm_orbits_budgeted(&qs, degree, budget).map_err(budget_err)?;
    println!(
        "degree {} orbits {} fixed {} nontrivial {}",
        degree,
        part.orbit_count(),
        part.fixed_count,
        part.nontrivial_count
    );
    let mut hist: Vec<(usize, usize)> = Vec::new();
    for &l in &part.lengths {
        match hist.iter_mut().find(|(len, _)| *len == l) {
            Some((_, c)) => *c += 1,
            None => hist.push((l, 1)),
        }
    }
    hist.sort_unstable();
    for (len, count) in hist {
        println!("length {len} count {count}");
    }
    Ok(())
}

fn parse_order(n: usize, text: &str) -> Result<Permutation, CmdError> {
    let images: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(parse_err))
        .collect::<Result<_, _>>()?;
    if images.len() != n {
        return Err(CmdError::Parse(format!(
            "ordering lists {} generators, the set has {n}",
            images.len()
        )));
    }
    Permutation::from_images(images).map_err(parse_err)
}

fn cmd_groebner(path: &str, max_degree: usize, order: Option<&str>) -> Result<(), CmdError> {
    let qs = load(path)?;
    let ordering = match order {
        Some(text) => parse_order(qs.n(), text)?,
        None => Permutation::identity(qs.n()),
    };
    let pres = algebra::reduced_relations(&qs, &ordering);
    let gb = algebra::groebner_basis(&pres, max_degree);
    println!(
        "relations {} basis {} max-degree {} complete-to {}{} (letters printed 1-based)",
        pres.s,
        gb.elements.len(),
        gb.max_degree,
        gb.complete_to_degree,
        if gb.fully_complete { " closed" } else { " open-above" },
    );
    for p in &gb.elements {
        println!("{}", poly_display(p, qs.n()));
    }
    Ok(())
}

fn cmd_quandle(family: QuandleFamily) -> Result<(), CmdError> {
    let (qs, name) = match family {
        QuandleFamily::Dihedral { order } => {
            if order < 2 {
                return Err(CmdError::Parse("dihedral order must be at least 2".into()));
            }
            (
                racks::dihedral_quandle(order).base,
                format!("dihedral-{order}"),
            )
        }
        QuandleFamily::Affine { modulus, unit } => (
            racks::affine_quandle(modulus, unit)
                .map_err(parse_err)?
                .base,
            format!("affine-{modulus}-{unit}"),
        ),
    };
    println!("{}", solfile::write_qset(&qs, Some(&name), None));
    Ok(())
}

fn cmd_extend(xpath: &str, ypath: &str, sigma: &str, tau: &str) -> Result<(), CmdError> {
    let xpart = load(xpath)?;
    let ypart = load(ypath)?;
    let sigma = Permutation::from_cycles(xpart.n(), sigma).map_err(parse_err)?;
    let tau = Permutation::from_cycles(ypart.n(), tau).map_err(parse_err)?;
    let spec = ExtensionSpec {
        xpart,
        ypart,
        sigma,
        tau,
    };
    let z = extensions::build_sigma_tau(&spec);
    let cond = extensions::check_extension_conditions(&spec);
    let prof = extensions::predicted_orbit_profile(&spec);
    println!("{}", solfile::write_qset(&z, Some("extension"), None));
    eprintln!(
        "order-of-r {} braided {} two-cancellative {} mixed-orbit-lengths {:?}",
        prof.actual_order, cond.direct_ybe, prof.actual_two_cancellative, prof.actual_mixed_lens
    );
    Ok(())
}

fn parse_flags(names: &[String]) -> Result<Vec<PropertyFlag>, CmdError> {
    names
        .iter()
        .map(|s| {
            PropertyFlag::parse(s)
                .ok_or_else(|| CmdError::Parse(format!("unknown property flag: {s}")))
        })
        .collect()
}

fn cmd_enumerate(
    n: usize,
    require: &[String],
    forbid: &[String],
    minimal: bool,
) -> Result<(), CmdError> {
    let filter = SearchFilter {
        require: parse_flags(require)?,
        forbid: parse_flags(forbid)?,
        minimality: minimal.then_some(true),
    };
    filter.validate().map_err(parse_err)?;
    let classes = search::enumerate(n, &filter).map_err(budget_err)?;
    for (i, qs) in classes.iter().enumerate() {
        let rep = check_conditions(qs);
        let dims = orbits::graded_dims(qs, 2).map_err(budget_err)?;
        let flags: Vec<&str> = rep
            .named_flags()
            .into_iter()
            .filter(|(_, f)| f.holds)
            .map(|(name, _)| name)
            .collect();
        let table: Vec<String> = qs
            .rmap()
            .iter()
            .map(|&(u, v)| format!("{u}{v}"))
            .collect();
        println!(
            "class {i} base 0 n {n} dimA2 {} rmap {} flags {}",
            dims[2],
            table.join(","),
            flags.join(",")
        );
    }
    eprintln!("classes: {}", classes.len());
    Ok(())
}

fn parse_blocks(n: usize, text: &str) -> Result<Partition, CmdError> {
    let blocks: Vec<Vec<usize>> = text
        .split(';')
        .map(|b| {
            b.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(parse_err))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    Partition::new(n, blocks).map_err(parse_err)
}

fn cmd_stu(path: &str, blocks: &str, length: usize) -> Result<(), CmdError> {
    let qs = load(path)?;
    let part = parse_blocks(qs.n(), blocks)?;
    let ground = extensions::is_generalized_stu(&qs, &part).map_err(parse_err)?;
    println!("ground-stu {}", if ground.holds { "yes" } else { "no" });
    for f in ground.failures.iter().take(4) {
        println!(
            "  fails {:?} blocks ({},{}) at {:?}",
            f.tag, f.base_block, f.actor_block, f.witness
        );
    }
    let braided = check_conditions(&qs).braided.holds;
    if braided && ground.holds {
        let word = extensions::stu_monoid_bounded(&qs, &part, length, orbits::DEFAULT_ORBIT_BUDGET)
            .map_err(budget_err)?;
        println!(
            "word-stu-to-length-{length} {} (checked {} triples)",
            if word.holds { "yes" } else { "no" },
            word.checked_pairs
        );
    } else {
        println!("word-stu-to-length-{length} skipped (needs a braided ground splitting)");
    }
    if part.blocks.len() == 2 {
        let mixed = extensions::mixed_l1_r2(&qs, &part).map_err(parse_err)?;
        println!(
            "mixed-l1r2 l1(X,Y,X) {} r2(X,Y,X) {} l1(Y,X,Y) {} r2(Y,X,Y) {} predicted-ybe {} direct-ybe {}",
            mixed.l1_xyx, mixed.r2_xyx, mixed.l1_yxy, mixed.r2_yxy, mixed.predicted_ybe, mixed.direct_ybe
        );
    }
    Ok(())
}
