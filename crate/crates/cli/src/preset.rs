//! `gsb preset`: write catalog presentations.

use std::path::Path;

use clap::Subcommand;
use gsb_core::catalog::{
    adyan_thurston_group, adyan_thurston_pos, partially_commutative, plactic3_basis, plactic_rows,
    plactic_standard, symmetric_group, CommutationGraph,
};
use gsb_core::Kind;

use crate::{write_out, Failure, Outcome};

#[derive(Subcommand)]
pub enum PresetCommand {
    /// Symmetric group S_{n+1} on s1..sn.
    Sym { n: usize },
    /// Plactic monoid on n letters with the Knuth relations.
    PlacticStd { n: usize },
    /// The eleven-relation basis of the plactic monoid on three letters.
    Plactic3,
    /// Plactic monoid in row generators, rows of length at most MAX_LEN.
    PlacticRows { n: usize, max_len: usize },
    /// Braid monoid B_{n+1}^+ (or group with --group) in Adyan-Thurston generators.
    BraidAt {
        n: usize,
        #[arg(long)]
        group: bool,
    },
    /// Partially commutative monoid: GENERATORS like `x,y,z`, EDGES like `x:y,y:z`.
    PcAssoc(PcArgs),
    /// Partially commutative Lie algebra.
    PcLie(PcArgs),
    /// Partially commutative group.
    PcGroup(PcArgs),
}

#[derive(clap::Args)]
pub struct PcArgs {
    generators: String,
    #[arg(default_value = "")]
    edges: String,
    /// Degree bound of the emitted Groebner-Shirshov family.
    #[arg(long, default_value_t = 6)]
    max_deg: usize,
    /// Emit the defining commutation relations instead of the family.
    #[arg(long)]
    defining: bool,
}

fn split(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn partial(args: &PcArgs, kind: Kind) -> Result<String, Failure> {
    let generators: Vec<String> = split(&args.generators).map(String::from).collect();
    let edges = split(&args.edges)
        .map(|e| {
            e.split_once(':')
                .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                .ok_or_else(|| Failure::input(format!("edge `{e}` is not of the form a:b")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let graph = CommutationGraph::new(edges).map_err(Failure::input)?;
    let pc =
        partially_commutative(&generators, &graph, kind, args.max_deg).map_err(Failure::input)?;
    Ok(if args.defining {
        pc.defining.emit()
    } else {
        pc.family.emit()
    })
}

pub fn run(which: PresetCommand, out: Option<&Path>) -> Outcome {
    let text = match which {
        PresetCommand::Sym { n } => symmetric_group(n).map_err(Failure::input)?.emit(),
        PresetCommand::PlacticStd { n } => plactic_standard(n).map_err(Failure::input)?.emit(),
        PresetCommand::Plactic3 => plactic3_basis().emit(),
        PresetCommand::PlacticRows { n, max_len } => plactic_rows(n, max_len)
            .map_err(Failure::input)?
            .presentation
            .emit(),
        PresetCommand::BraidAt { n, group } => {
            let p = if group {
                adyan_thurston_group(n)
            } else {
                adyan_thurston_pos(n)
            };
            p.map_err(Failure::input)?.emit()
        }
        PresetCommand::PcAssoc(a) => partial(&a, Kind::Monoid)?,
        PresetCommand::PcLie(a) => partial(&a, Kind::Lie)?,
        PresetCommand::PcGroup(a) => partial(&a, Kind::Group)?,
    };
    write_out(out, &text)?;
    Ok(0)
}
