//! `tiltlab`: tilting quivers of Dynkin path algebras and their BB tilts.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use tiltlab_core::bb::{
    b_hasse, bb_vertices, is_admissible, make_bb_tilt, make_general_tilt, partition_tilting, phi,
    transport_construct, verify_properties, Admissibility, Tag,
};
use tiltlab_core::error::Error;
use tiltlab_core::quiver::parse_quiver;
use tiltlab_core::serial::{b_report, lambda_report, to_dot, to_json, to_text, QuiverReport};
use tiltlab_core::tilting::{
    build_ind_table, enumerate_tilting, exchange_quiver, hasse, IndTable, TiltingModule,
};

#[derive(Parser)]
#[command(
    name = "tiltlab",
    version,
    about = "Tilting quivers of Dynkin path algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the indecomposables with their ids and dimension vectors.
    Ind { file: PathBuf },
    /// Print the tilting quiver, checked against the exchange quiver.
    Tilt {
        file: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Tilting quiver of the algebra obtained by the BB tilt at a vertex.
    Bb {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
        /// Build the quiver from the Λ side instead of enumerating directly.
        #[arg(long)]
        transport: bool,
        /// Run the property checks; exit 1 if any fails.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Φ-images and tilting quiver of End(T₀) for an admissible T₀.
    Tilted {
        file: PathBuf,
        /// Comma-separated indecomposable ids, as printed by `ind`.
        #[arg(long, value_delimiter = ',', required = true)]
        t0: Vec<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Run every property check at every BB vertex.
    Verify { file: PathBuf },
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: bool,
}

impl Format {
    fn render(&self, r: &QuiverReport) -> String {
        if self.json {
            to_json(r) + "\n"
        } else if self.dot {
            to_dot(r)
        } else {
            to_text(r)
        }
    }

    fn is_text(&self) -> bool {
        !self.json && !self.dot
    }
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::AdmissibilityViolation { .. }
            | Error::CogenerationViolation { .. }
            | Error::CrossArrowMismatch(_)
            | Error::Invariant(_)
            | Error::IterationCapExceeded(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn load(file: &Path) -> Result<IndTable, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let q = parse_quiver(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    Ok(build_ind_table(&Arc::new(q))?)
}

fn cmd_ind(file: &Path) -> Outcome {
    let tbl = load(file)?;
    for id in 0..tbl.len() {
        println!("{id}  {}", tbl.label(&[id]));
    }
    Ok(())
}

fn cmd_tilt(file: &Path, format: &Format) -> Outcome {
    let tbl = load(file)?;
    let tilts = enumerate_tilting(&tbl);
    let k = hasse(&tbl, &tilts);
    if exchange_quiver(&tbl, &tilts).arrows != k.arrows {
        return Err(Failure::Verification(
            "the exchange quiver differs from the Hasse diagram".into(),
        ));
    }
    print!("{}", format.render(&lambda_report(&tbl, &k, None)));
    Ok(())
}

fn cmd_bb(file: &Path, vertex: usize, transport: bool, verify: bool, format: &Format) -> Outcome {
    let tbl = load(file)?;
    let d = make_bb_tilt(&tbl, vertex)?;
    let k = hasse(&tbl, &enumerate_tilting(&tbl));
    let oracle = b_hasse(&tbl, &d);
    let bk = if transport {
        transport_construct(&tbl, &d, &k)?
    } else {
        oracle.clone()
    };
    print!("{}", format.render(&b_report(&tbl, &d, &bk)));
    if !verify {
        return Ok(());
    }
    let report = verify_properties(&tbl, &d, &k, &oracle)?;
    if format.is_text() {
        print!("{report}");
    } else {
        eprint!("{report}");
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "BB tilt at vertex {vertex} fails a check"
        )))
    }
}

fn cmd_tilted(file: &Path, ids: &[usize], format: &Format) -> Outcome {
    let tbl = load(file)?;
    let t0 = TiltingModule::new(&tbl, ids.to_vec())?;
    let d = make_general_tilt(&tbl, t0);
    let k = hasse(&tbl, &enumerate_tilting(&tbl));
    if let Admissibility::Violated { tilt, summand } = is_admissible(&tbl, &k.vertices, &d.classes)
    {
        return Err(Error::AdmissibilityViolation {
            module: tbl.label(k.vertices[tilt].ids()),
            summand,
        }
        .into());
    }
    let tags = partition_tilting(&k.vertices, &d.classes);
    let bk = b_hasse(&tbl, &d);
    if format.is_text() {
        for (t, tag) in k.vertices.iter().zip(&tags) {
            if *tag != Tag::Other {
                let b = phi(&tbl, &d, t)?;
                println!("Φ({}) = {}", tbl.label(t.ids()), b.label(&tbl));
            }
        }
    }
    print!("{}", format.render(&b_report(&tbl, &d, &bk)));
    Ok(())
}

fn cmd_verify(file: &Path) -> Outcome {
    let tbl = load(file)?;
    let k = hasse(&tbl, &enumerate_tilting(&tbl));
    let mut failed = Vec::new();
    for vertex in bb_vertices(&tbl)? {
        let d = make_bb_tilt(&tbl, vertex)?;
        let report = verify_properties(&tbl, &d, &k, &b_hasse(&tbl, &d))?;
        println!("vertex {vertex}:");
        print!("{report}");
        if !report.all_passed() {
            failed.push(vertex);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "checks fail at vertices {failed:?}"
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Ind { file } => cmd_ind(file),
        Command::Tilt { file, format } => cmd_tilt(file, format),
        Command::Bb {
            file,
            vertex,
            transport,
            verify,
            format,
        } => cmd_bb(file, *vertex, *transport, *verify, format),
        Command::Tilted { file, t0, format } => cmd_tilted(file, t0, format),
        Command::Verify { file } => cmd_verify(file),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("tiltlab: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("tiltlab: {msg}");
            ExitCode::from(2)
        }
    }
}
