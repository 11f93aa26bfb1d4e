//! `gsb prop`: property checks that back the catalog's claims.

use clap::Subcommand;
use gsb_core::catalog::{
    plactic3_basis, plactic_digits, plactic_rows, plactic_word, row_associativity_trials, Tableau,
};
use gsb_core::Parallelism;
use serde_json::json;

use crate::{Failure, Outcome};

#[derive(Subcommand)]
pub enum PropCommand {
    /// Compare both bracketings of random row triples with Schensted insertion.
    RowAssoc {
        n: usize,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the row relations on every ambiguity the truncation decides.
    RowCert { n: usize, max_len: usize },
    /// Compare normal forms over three letters with tableau row readings.
    PlacticReading {
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
}

pub fn run(which: PropCommand, as_json: bool, par: &Parallelism) -> Outcome {
    match which {
        PropCommand::RowAssoc {
            n,
            max_len,
            trials,
            seed,
        } => {
            let rep = row_associativity_trials(n, max_len.unwrap_or(n), trials, seed, par)
                .map_err(Failure::input)?;
            if as_json {
                let fails: Vec<_> = rep
                    .failures
                    .iter()
                    .map(|f| json!({ "triple": f.triple.iter().map(|r| r.digits()).collect::<Vec<_>>() }))
                    .collect();
                println!("{}", json!({ "trials": rep.trials, "failures": fails }));
            } else {
                println!(
                    "row associativity: {} trials, {} failures",
                    rep.trials,
                    rep.failures.len()
                );
                for f in &rep.failures {
                    let t: Vec<String> = f.triple.iter().map(|r| r.digits()).collect();
                    println!("  {}", t.join(" "));
                }
            }
            Ok(u8::from(!rep.failures.is_empty()))
        }
        PropCommand::RowCert { n, max_len } => {
            let rows = plactic_rows(n, max_len).map_err(Failure::input)?;
            let cert = rows.bounded_certificate(par).map_err(Failure::input)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "generators": rows.rows.len(),
                        "checked": cert.checked,
                        "skipped": cert.skipped,
                        "failures": cert.failures.len(),
                    })
                );
            } else {
                println!(
                    "row relations: {} generators, {} ambiguities checked, {} beyond the bound, {} failures",
                    rows.rows.len(),
                    cert.checked,
                    cert.skipped,
                    cert.failures.len()
                );
            }
            Ok(u8::from(!cert.holds()))
        }
        PropCommand::PlacticReading { max_len } => {
            let basis = plactic3_basis();
            let system = basis.rewrite_system().map_err(Failure::input)?;
            let x = &basis.alphabet;
            let (mut total, mut agree, mut same_class) = (0usize, 0usize, 0usize);
            let mut first_mismatch = None;
            for len in 1..=max_len as u32 {
                for code in 0..3usize.pow(len) {
                    let mut c = code;
                    let w: Vec<usize> = (0..len)
                        .map(|_| {
                            let d = c % 3 + 1;
                            c /= 3;
                            d
                        })
                        .collect();
                    let nf = system.reduce_word(&plactic_word(x, &w).map_err(Failure::input)?);
                    let nf =
                        plactic_digits(x, nf.terms().next().expect("monomials stay monomials").0);
                    let t = Tableau::from_word(&w);
                    total += 1;
                    if Tableau::from_word(&nf) == t {
                        same_class += 1;
                    }
                    if t.row_reading() == nf {
                        agree += 1;
                    } else if first_mismatch.is_none() {
                        first_mismatch = Some((w, nf, t.row_reading()));
                    }
                }
            }
            let digits = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<String>();
            if as_json {
                println!(
                    "{}",
                    json!({ "words": total, "row_reading": agree, "same_tableau": same_class })
                );
            } else {
                println!("{total} words: normal form = row reading for {agree}, same tableau for {same_class}");
                if let Some((w, nf, row)) = &first_mismatch {
                    println!(
                        "  first mismatch: {} -> {}, row reading {}",
                        digits(w),
                        digits(nf),
                        digits(row)
                    );
                }
            }
            Ok(u8::from(agree != total))
        }
    }
}
