//! CSV emission and sample-file parsing.
//!
//! Files are ASCII with LF endings. Lines starting with `#` carry the
//! configuration; numbers use the shortest representation that round-trips.

use std::io::{self, BufRead, Write};

use num_complex::Complex64 as C64;
use thiserror::Error;

use crate::coherent::{DecompositionRow, MomentRow};
use crate::fock::LadderIndex;
use crate::grid::GridSpec;
use crate::painleve::{Fraction, ScanPoint};
use crate::wavepacket::DensityField;

/// Shortest round-trip rendering of a double.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn write_comments<W: Write>(w: &mut W, comments: &[String]) -> io::Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    Ok(())
}

/// `abs_alpha, j, uncertainty_product`.
pub fn write_uncertainty<W: Write>(w: &mut W, comments: &[String], rows: &[(f64, LadderIndex, f64)]) -> io::Result<()> {
    write_comments(w, comments)?;
    writeln!(w, "abs_alpha,j,uncertainty_product")?;
    for (a, j, u) in rows {
        writeln!(w, "{},{},{}", num(*a), j.coherent_label(), num(*u))?;
    }
    Ok(())
}

/// One scanned solution for [`write_piv`].
pub struct PivBlock<'a> {
    pub id: usize,
    pub ordering: [u8; 3],
    pub params: (Fraction, Fraction),
    pub scan: &'a [ScanPoint],
}

/// `solution_id, y, g, residual, excluded`; excluded rows leave `residual` empty.
pub fn write_piv<W: Write>(w: &mut W, comments: &[String], blocks: &[PivBlock<'_>]) -> io::Result<()> {
    write_comments(w, comments)?;
    for b in blocks {
        let [o1, o2, o3] = b.ordering;
        writeln!(w, "# solution {}: ordering {o1},{o2},{o3} a={} b={}", b.id, b.params.0, b.params.1)?;
    }
    writeln!(w, "solution_id,y,g,residual,excluded")?;
    for b in blocks {
        for p in b.scan {
            let r = p.residual.map(num).unwrap_or_default();
            writeln!(w, "{},{},{},{},{}", b.id, num(p.y), num(p.g), r, u8::from(p.excluded()))?;
        }
    }
    Ok(())
}

/// Long form `t, x, rho`.
pub fn write_density<W: Write>(w: &mut W, comments: &[String], field: &DensityField) -> io::Result<()> {
    write_comments(w, comments)?;
    writeln!(w, "t,x,rho")?;
    for (t, x, rho) in field.rows() {
        writeln!(w, "{},{},{}", num(t), num(x), num(rho))?;
    }
    Ok(())
}

/// Plain `key = value` sidecar describing a density file.
pub fn write_density_sidecar<W: Write>(w: &mut W, ladder: LadderIndex, z: C64, grid: &GridSpec) -> io::Result<()> {
    writeln!(w, "j = {}", ladder.coherent_label())?;
    writeln!(w, "z_re = {}", num(z.re))?;
    writeln!(w, "z_im = {}", num(z.im))?;
    writeln!(w, "x_min = {}", num(grid.x_min))?;
    writeln!(w, "x_max = {}", num(grid.x_max))?;
    writeln!(w, "x_steps = {}", grid.x_steps)?;
    writeln!(w, "t_min = {}", num(grid.t_min))?;
    writeln!(w, "t_max = {}", num(grid.t_max))?;
    writeln!(w, "t_steps = {}", grid.t_steps)?;
    writeln!(w, "version = {}", env!("CARGO_PKG_VERSION"))
}

/// `n, target_re, target_im, reconstructed_re, reconstructed_im, abs_error`.
pub fn write_decomposition<W: Write>(w: &mut W, comments: &[String], rows: &[DecompositionRow]) -> io::Result<()> {
    write_comments(w, comments)?;
    writeln!(w, "n,target_re,target_im,reconstructed_re,reconstructed_im,abs_error")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.n,
            num(r.target.re),
            num(r.target.im),
            num(r.reconstructed.re),
            num(r.reconstructed.im),
            num(r.abs_error)
        )?;
    }
    Ok(())
}

/// `n, computed, target, rel_error, pass`.
pub fn write_moments<W: Write>(w: &mut W, comments: &[String], rows: &[MomentRow], rel_tol: f64) -> io::Result<()> {
    write_comments(w, comments)?;
    writeln!(w, "n,computed,target,rel_error,pass")?;
    for r in rows {
        writeln!(w, "{},{},{},{},{}", r.n, num(r.computed), num(r.target), num(r.rel_error), u8::from(r.passes(rel_tol)))?;
    }
    Ok(())
}

#[derive(Debug, Error)]
pub enum SampleError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Two whitespace-separated columns `x f`. Blank lines and `#` comments
/// are skipped.
pub fn parse_samples<R: BufRead>(reader: R) -> Result<Vec<(f64, f64)>, SampleError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(SampleError::Parse { line: i + 1, msg: format!("expected 2 columns, found {}", fields.len()) });
        }
        let parse = |s: &str| {
            s.parse::<f64>().map_err(|e| SampleError::Parse { line: i + 1, msg: format!("{s:?}: {e}") })
        };
        out.push((parse(fields[0])?, parse(fields[1])?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format_round_trips() {
        for x in [0.5, 1.0 / 3.0, 1e-300, -2.5e17, 0.0] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn samples_parse_and_report_line() {
        let good = "# weight\n0 1\n\n1.5 0.25\n";
        assert_eq!(parse_samples(good.as_bytes()).unwrap(), vec![(0.0, 1.0), (1.5, 0.25)]);
        let bad = "0 1\n1 2 3\n";
        match parse_samples(bad.as_bytes()) {
            Err(SampleError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let bad = "0 1\nx 2\n";
        assert!(matches!(parse_samples(bad.as_bytes()), Err(SampleError::Parse { line: 2, .. })));
    }
}
