//! Command-line front end: every pipeline of the library behind one
//! deterministic binary. Identical invocations produce byte-identical
//! output; there is no randomness anywhere.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use std::path::PathBuf;
use std::process::ExitCode;
use sympoly::bipartite::{gamma_closed, hstar_closed, hstar_double_sum, hstar_via_colorings};
use sympoly::complex::{build_nevo_complex, check_balanced, f_polynomial};
use sympoly::ehrhart::{
    count_lattice_points, count_lattice_points_bipartite, hstar_via_interpolation,
    hstar_via_interpolation_bipartite,
};
use sympoly::error::Error;
use sympoly::facets::{count_facets_bipartite, count_facets_multipartite, enumerate_facets};
use sympoly::graph::Graph;
use sympoly::groebner::{
    bipartite_initial_terms, generate_gb, verify_gb_divisibility, BipartiteVar, EdgeVariables,
};
use sympoly::trees::{enumerate_t, hstar_via_trees};
use sympoly::verify::{verify_all, Profile};
use sympoly::Polynomial;

/// Exact computations on symmetric edge polytopes of simple graphs.
///
/// Index conventions: `--bipartite A B` always means the graph K_{A,B}
/// with part sizes A and B. The `hstar`, `gamma`, `trees` and `complex`
/// subcommands instead take the shifted indices of the closed forms, where
/// `hstar 1 1` is the polynomial of K_{2,2}; pass `--graph-parts` to use
/// plain part sizes there too.
#[derive(Parser)]
#[command(name = "sympoly", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Complete graph K_n.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Complete bipartite graph K_{A,B} (part sizes, unshifted).
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    bipartite: Option<Vec<usize>>,
    /// Complete multipartite graph with the given part sizes.
    #[arg(long, value_name = "A1,A2,...", value_delimiter = ',')]
    multipartite: Option<Vec<usize>>,
    /// Edge-list file: `n m` then `u v` lines, or the JSON form
    /// {"n": ..., "edges": [[u, v], ...]}.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

impl GraphInput {
    fn build(&self) -> Result<Graph, Error> {
        if let Some(n) = self.complete {
            return Graph::complete(n);
        }
        if let Some(ab) = &self.bipartite {
            return Graph::complete_bipartite(ab[0], ab[1]).map(|(g, _)| g);
        }
        if let Some(parts) = &self.multipartite {
            return Graph::complete_multipartite(parts);
        }
        let path = self.edges.as_ref().expect("clap enforces one source");
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
        if text.trim_start().starts_with('{') {
            Graph::parse_json(&text)
        } else {
            Graph::parse_edge_list(&text)
        }
    }
}

/// Which h* pipeline to run (default: the closed form).
#[derive(Args)]
#[group(multiple = false)]
struct HstarMethod {
    /// Closed-form gamma expansion.
    #[arg(long)]
    closed: bool,
    /// Brute-force good-coloring enumeration.
    #[arg(long)]
    colorings: bool,
    /// Double-sum expression.
    #[arg(long = "double-sum")]
    double_sum: bool,
    /// Histogram of ingoing edges over the directed tree family.
    #[arg(long)]
    trees: bool,
    /// Lattice-point counting and binomial-basis interpolation.
    #[arg(long)]
    ehrhart: bool,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ProfileArg {
    #[default]
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the facet-defining vertex labelings of P_G.
    Facets {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Count facets (closed formulas for the complete families,
    /// enumeration otherwise).
    CountFacets {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Lattice-point counts of the dilates and the interpolated h*.
    Ehrhart {
        #[command(flatten)]
        graph: GraphInput,
        /// Largest dilation to report (default: dim P).
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// h*-polynomial of K_{a+1,b+1} through a chosen pipeline.
    Hstar {
        /// Shifted index (K_{a+1,b+1}) unless --graph-parts is given.
        a: usize,
        b: usize,
        #[command(flatten)]
        method: HstarMethod,
        /// Interpret a, b as plain part sizes of K_{a,b}.
        #[arg(long)]
        graph_parts: bool,
        #[arg(long)]
        json: bool,
    },
    /// gamma-polynomial of h*_{a,b}.
    Gamma {
        a: usize,
        b: usize,
        #[arg(long)]
        graph_parts: bool,
        #[arg(long)]
        json: bool,
    },
    /// The directed spanning trees behind the triangulation of
    /// P_{K_{a+1,b+1}} and their ingoing-edge histogram.
    Trees {
        a: usize,
        b: usize,
        /// Print each tree as an arrow list.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        graph_parts: bool,
        #[arg(long)]
        json: bool,
    },
    /// Toric-ideal binomial generators; optionally the reduced initial
    /// terms for complete bipartite graphs and a divisibility spot check.
    Groebner {
        #[command(flatten)]
        graph: GraphInput,
        /// Print the reduced initial terms (complete bipartite input only).
        #[arg(long)]
        initial_terms: bool,
        /// Verify divisibility of ideal binomials up to this degree.
        #[arg(long, value_name = "D")]
        verify_cap: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// The balanced flag complex realizing gamma_{a,b} as an f-polynomial.
    Complex {
        a: usize,
        b: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate every pipeline over a parameter grid.
    Verify {
        #[arg(long)]
        amax: usize,
        #[arg(long)]
        bmax: usize,
        #[arg(long, value_enum, default_value_t = ProfileArg::Fast)]
        profile: ProfileArg,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Resource(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn shift(a: usize, b: usize, graph_parts: bool) -> Result<(usize, usize), Error> {
    if !graph_parts {
        return Ok((a, b));
    }
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "part sizes must be at least 1".into(),
        ));
    }
    Ok((a - 1, b - 1))
}

// Detect a complete bipartite graph and return its part sizes.
fn bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n_vertices();
    let adj = g.adjacency();
    let mut color = vec![usize::MAX; n];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if color[v] == usize::MAX {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if color[v] == color[u] {
                return None;
            }
        }
    }
    if color.contains(&usize::MAX) {
        return None;
    }
    let a = color.iter().filter(|&&c| c == 0).count();
    let b = n - a;
    (g.n_edges() == a * b).then_some((a, b))
}

fn print_poly(p: &Polynomial, json: bool) {
    if json {
        println!("{}", serde_json::to_string(p).expect("serializable"));
    } else {
        println!("{}", p);
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Facets { graph, json } => {
            let g = graph.build()?;
            let facets = enumerate_facets(&g)?;
            if json {
                let rows: Vec<&[i64]> = facets.iter().map(|f| f.values()).collect();
                println!("{}", serde_json::to_string(&rows).expect("serializable"));
            } else {
                for f in &facets {
                    let row: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
                    println!("{}", row.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CountFacets { graph, json } => {
            let count = count_facets(&graph)?;
            if json {
                println!("{{\"facets\":\"{}\"}}", count);
            } else {
                println!("{}", count);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ehrhart { graph, nmax, json } => {
            let g = graph.build()?;
            let d = g.n_vertices() - 1;
            let nmax = nmax.unwrap_or(d as u64);
            let parts = bipartite_parts(&g);
            let count = |n: u64| -> Result<BigInt, Error> {
                match parts {
                    Some((a, b)) => count_lattice_points_bipartite(a, b, n),
                    None => count_lattice_points(&g, n),
                }
            };
            let counts: Vec<BigInt> = (0..=nmax).map(count).collect::<Result<_, _>>()?;
            let hstar = match parts {
                Some((a, b)) => hstar_via_interpolation_bipartite(a, b)?,
                None => hstar_via_interpolation(&g)?,
            };
            if json {
                let counts: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                println!(
                    "{}",
                    serde_json::json!({ "counts": counts, "hstar": hstar })
                );
            } else {
                for (n, c) in counts.iter().enumerate() {
                    println!("{} {}", n, c);
                }
                println!("h* = {}", hstar);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hstar {
            a,
            b,
            method,
            graph_parts,
            json,
        } => {
            let (a, b) = shift(a, b, graph_parts)?;
            let hstar = if method.colorings {
                hstar_via_colorings(a, b)?
            } else if method.double_sum {
                hstar_double_sum(a, b)
            } else if method.trees {
                hstar_via_trees(a, b)?
            } else if method.ehrhart {
                hstar_via_interpolation_bipartite(a + 1, b + 1)?
            } else {
                hstar_closed(a, b)
            };
            print_poly(&hstar, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma {
            a,
            b,
            graph_parts,
            json,
        } => {
            let (a, b) = shift(a, b, graph_parts)?;
            print_poly(&gamma_closed(a, b), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Trees {
            a,
            b,
            list,
            graph_parts,
            json,
        } => {
            let (a, b) = shift(a, b, graph_parts)?;
            let hstar = hstar_via_trees(a, b)?;
            let trees = enumerate_t(a, b);
            if json {
                let arrows: Option<Vec<String>> =
                    list.then(|| trees.iter().map(|t| t.arrow_list()).collect());
                println!(
                    "{}",
                    serde_json::json!({
                        "count": trees.len().to_string(),
                        "hstar": hstar,
                        "trees": arrows,
                    })
                );
            } else {
                println!("count: {}", trees.len());
                println!("h* = {}", hstar);
                if list {
                    for t in &trees {
                        println!("{}", t.arrow_list());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Groebner {
            graph,
            initial_terms,
            verify_cap,
            json,
        } => run_groebner(graph, initial_terms, verify_cap, json),
        Command::Complex { a, b, json } => {
            let complex = build_nevo_complex(a, b)?;
            let f = f_polynomial(&complex)?;
            let balanced = check_balanced(&complex)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "vertices": complex.n_vertices(),
                        "f_polynomial": f,
                        "balanced": balanced,
                    })
                );
            } else {
                println!("vertices: {}", complex.n_vertices());
                println!("f = {}", f);
                println!("balanced: {}", balanced);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            amax,
            bmax,
            profile,
            json,
        } => {
            let profile = match profile {
                ProfileArg::Fast => Profile::Fast,
                ProfileArg::Full => Profile::Full,
            };
            let report = verify_all(amax, bmax, profile);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable")
                );
            } else {
                for c in &report.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let detail = if c.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" [{}]", c.detail)
                    };
                    println!("{} ({},{}) {}{}", status, c.a, c.b, c.name, detail);
                }
                let failed = report.failures().count();
                println!(
                    "{} checks, {} failed",
                    report.checks.len(),
                    failed
                );
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn count_facets(input: &GraphInput) -> Result<BigInt, Error> {
    if let Some(ab) = &input.bipartite {
        return count_facets_bipartite(ab[0], ab[1]);
    }
    if let Some(parts) = &input.multipartite {
        if parts.len() >= 3 {
            return count_facets_multipartite(parts);
        }
        if parts.len() == 2 {
            return count_facets_bipartite(parts[0], parts[1]);
        }
    }
    if let Some(n) = input.complete {
        if n >= 3 {
            return count_facets_multipartite(&vec![1; n]);
        }
    }
    let g = input.build()?;
    Ok(BigInt::from(enumerate_facets(&g)?.len()))
}

fn run_groebner(
    graph: GraphInput,
    initial_terms: bool,
    verify_cap: Option<u32>,
    json: bool,
) -> Result<ExitCode, Error> {
    if initial_terms {
        let Some(ab) = &graph.bipartite else {
            return Err(Error::InvalidArgument(
                "--initial-terms needs --bipartite input".into(),
            ));
        };
        let terms = bipartite_initial_terms(ab[0], ab[1])?;
        let render = |v: &BipartiteVar| match *v {
            BipartiteVar::E(i, j) => format!("e[{},{}]", i, j),
            BipartiteVar::F(i, j) => format!("f[{},{}]", i, j),
        };
        if json {
            let rows: Vec<[String; 2]> = terms
                .iter()
                .map(|(u, v)| [render(u), render(v)])
                .collect();
            println!("{}", serde_json::to_string(&rows).expect("serializable"));
        } else {
            for (u, v) in &terms {
                println!("{}*{}", render(u), render(v));
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let g = graph.build()?;
    let basis = generate_gb(&g)?;
    let vars = EdgeVariables::new(&g);
    if json {
        let rows: Vec<serde_json::Value> = basis
            .iter()
            .map(|b| {
                serde_json::json!({
                    "lead": b.lead().exps(),
                    "trail": b.trail().exps(),
                    "text": vars.render_binomial(b),
                })
            })
            .collect();
        println!("{}", serde_json::json!(rows));
    } else {
        for b in &basis {
            println!("{}", vars.render_binomial(b));
        }
    }
    if let Some(cap) = verify_cap {
        let report = verify_gb_divisibility(&g, &basis, cap);
        if report.holds {
            println!("divisibility check (degree <= {}): PASS", cap);
        } else {
            let (m1, m2) = report.witness.expect("failing check carries a witness");
            println!(
                "divisibility check (degree <= {}): FAIL, witness {} - {}",
                cap,
                vars.render_monomial(&m1),
                vars.render_monomial(&m2)
            );
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}
