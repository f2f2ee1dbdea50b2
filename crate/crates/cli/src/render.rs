//! Text reports printed by the CLI.

use std::fmt::Write as _;

use acmpts_core::hilbert::{DeltaTable, HilbertTable};
use acmpts_core::level::{inclusion_property, level_sets};
use acmpts_core::reisner::ReisnerReport;
use acmpts_core::star::{check_star, is_acm, Witness};
use acmpts_core::MultiDegree;
use anyhow::Result;

use crate::format::Configuration;

fn grid_label(dims: &[u32]) -> String {
    dims.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
}

fn witness_line(config: &Configuration, w: &Witness) -> String {
    format!(
        "{} P={} Q={}",
        w.kind,
        config.display_point(&w.p),
        config.display_point(&w.q)
    )
}

/// Report of `acmpts check`: star levels up to `star_level` (default `n`),
/// the ACM verdict, and the level structure in every direction.
pub fn check_report(config: &Configuration, star_level: Option<usize>) -> Result<String> {
    let x = &config.set;
    let n = x.n();
    let mut out = String::new();
    writeln!(
        out,
        "configuration: {} points in (P^1)^{n}, grid {}",
        x.len(),
        grid_label(x.dims())
    )?;
    let top = star_level.unwrap_or(n);
    if n >= 2 {
        if top < 2 || top > n {
            anyhow::bail!("BadLevel: star level {top} outside 2..={n}");
        }
        for s in 2..=top {
            let report = check_star(x, s, false).map_err(anyhow::Error::msg)?;
            match report.witnesses.first() {
                None => writeln!(out, "star_{s}: satisfied")?,
                Some(w) => writeln!(out, "star_{s}: VIOLATED ({})", witness_line(config, w))?,
            }
        }
    }
    writeln!(out, "ACM: {}", is_acm(x))?;
    if n >= 2 {
        let mut with_inclusion = Vec::new();
        for i in 0..n {
            let sizes = level_sets(x, i).map_err(anyhow::Error::msg)?.sizes();
            let incl = inclusion_property(x, i).map_err(anyhow::Error::msg)?;
            if incl {
                with_inclusion.push(format!("π{}", i + 1));
            }
            let sizes: Vec<String> = sizes.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "π{} levels: sizes {}; inclusion: {incl}",
                i + 1,
                sizes.join(",")
            )?;
        }
        if with_inclusion.is_empty() {
            let all: Vec<String> = (1..=n).map(|i| format!("π{i}")).collect();
            writeln!(out, "inclusion: none of {}", all.join(","))?;
        } else {
            writeln!(out, "inclusion: {}", with_inclusion.join(","))?;
        }
    }
    Ok(out)
}

fn grid_block<T: std::fmt::Display>(
    out: &mut String,
    title: &str,
    rows: i64,
    cols: i64,
    value: impl Fn(i64, i64) -> T,
) -> std::fmt::Result {
    writeln!(out, "{title}")?;
    let mut header = String::from("    |");
    for c in 0..=cols {
        write!(header, "{c:>4}")?;
    }
    writeln!(out, "{header}")?;
    writeln!(out, "----+{}", "-".repeat(4 * (cols as usize + 1)))?;
    for r in 0..=rows {
        let mut line = format!("{r:>3} |");
        for c in 0..=cols {
            write!(line, "{:>4}", value(r, c))?;
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Renders a box-indexed table: for `n >= 3` one block per leading index
/// `(t_1, ..., t_{n-2})` with rows `t_{n-1}` and columns `t_n`.
fn render_table<T: std::fmt::Display>(
    name: &str,
    upper: &MultiDegree,
    get: impl Fn(&[i64]) -> T,
) -> Result<String> {
    let mut out = String::new();
    let n = upper.dim();
    let e = upper.entries();
    match n {
        1 => {
            let values: Vec<String> = (0..=e[0]).map(|t| get(&[t]).to_string()).collect();
            writeln!(out, "{name}(t) for t = 0..{}: {}", e[0], values.join(" "))?;
        }
        2 => grid_block(&mut out, &format!("{name}(i,j)"), e[0], e[1], |r, c| get(&[r, c]))?,
        _ => {
            let leading = MultiDegree::new(e[..n - 2].to_vec());
            for lead in leading.box_iter() {
                let idx: Vec<String> = lead.entries().iter().map(ToString::to_string).collect();
                let title = format!("{name}({},j,k)", idx.join(","));
                grid_block(&mut out, &title, e[n - 2], e[n - 1], |r, c| {
                    let mut t = lead.entries().to_vec();
                    t.push(r);
                    t.push(c);
                    get(&t)
                })?;
                writeln!(out)?;
            }
        }
    }
    Ok(out)
}

pub fn hilbert_report(table: &HilbertTable) -> Result<String> {
    render_table("h", table.upper(), |t| table.get(t).expect("in box"))
}

pub fn delta_report(table: &DeltaTable) -> Result<String> {
    render_table("Δh", table.upper(), |t| table.get(t).expect("in box"))
}

pub fn oracle_report(config: &Configuration, report: &ReisnerReport) -> String {
    let mut out = format!(
        "configuration: {} points, grid {}\n",
        config.set.len(),
        grid_label(config.set.dims())
    );
    match (&report.failure, report.cm) {
        (_, true) => out.push_str("CM: true\n"),
        (Some(f), false) => {
            let face = if f.face.is_empty() {
                "∅".to_string()
            } else {
                let vs: Vec<String> = f.face.iter().map(ToString::to_string).collect();
                format!("{{{}}}", vs.join(","))
            };
            writeln!(out, "CM: false; link={face}, H̃_{} rank {}", f.degree, f.rank).unwrap();
        }
        (None, false) => out.push_str("CM: false; complex is not pure\n"),
    }
    writeln!(out, "links examined: {}", report.links_examined).unwrap();
    out
}
