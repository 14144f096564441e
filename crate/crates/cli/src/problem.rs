//! Problem files: one declaration per line.
//!
//! ```text
//! # comment
//! ring x,y,z
//! ideal: x*z, y*z
//! column: x, 0          (module presentations: one line per column)
//! map: x, y | y^2; -x*y (complexes: one line per differential, rows split by ';')
//! split: free=x dependent=y
//! section: y=x^2
//! ```

use std::fmt;

use noether_core::{MonomialOrder, PolyMatrix, Polynomial, Ring, RingRef};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    /// `None` means every variable not listed as dependent.
    pub free: Option<Vec<String>>,
    pub dependent: Vec<String>,
}

impl SplitSpec {
    /// Accepts `free=x dependent=y`, `ζ=x ω=y`, `dependent=x,y` or `ω=z`;
    /// entries may be separated by spaces or `;`.
    pub fn parse(src: &str) -> Result<Self, CliError> {
        let mut free = None;
        let mut dependent = None;
        for part in src.split(|c: char| c.is_whitespace() || c == ';').filter(|s| !s.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| CliError::parse(format!("split entry `{part}` lacks `=`")))?;
            let names: Vec<String> = value
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            match key.trim() {
                "free" | "ζ" | "zeta" => free = Some(names),
                "dependent" | "ω" | "omega" => dependent = Some(names),
                other => return Err(CliError::parse(format!("unknown split key `{other}`"))),
            }
        }
        let dependent = dependent.ok_or_else(|| CliError::parse("split names no dependent variables"))?;
        Ok(SplitSpec { free, dependent })
    }
}

impl fmt::Display for SplitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(free) = &self.free {
            write!(f, "free={} ", free.join(","))?;
        }
        write!(f, "dependent={}", self.dependent.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub ring: RingRef,
    pub ideal: Option<Vec<Polynomial>>,
    pub columns: Vec<Vec<Polynomial>>,
    pub maps: Vec<PolyMatrix>,
    pub split: Option<SplitSpec>,
    pub section: Vec<(String, Polynomial)>,
}

fn line_err(no: usize, e: impl fmt::Display) -> CliError {
    CliError::parse(format!("line {no}: {e}"))
}

fn parse_polys(ring: &RingRef, src: &str, no: usize) -> Result<Vec<Polynomial>, CliError> {
    src.split(',')
        .map(|s| Polynomial::parse(ring, s.trim()).map_err(|e| line_err(no, e)))
        .collect()
}

impl ProblemFile {
    pub fn parse(src: &str, order: MonomialOrder) -> Result<Self, CliError> {
        let mut ring: Option<RingRef> = None;
        let mut ideal: Option<Vec<Polynomial>> = None;
        let mut columns = Vec::new();
        let mut maps: Vec<PolyMatrix> = Vec::new();
        let mut split = None;
        let mut section = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ring ") {
                if ring.is_some() {
                    return Err(line_err(no, "ring declared twice"));
                }
                let vars: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                if vars.iter().any(|v| v.is_empty()) {
                    return Err(line_err(no, "empty variable name"));
                }
                for (k, v) in vars.iter().enumerate() {
                    if vars[..k].contains(v) {
                        return Err(line_err(no, format!("variable {v} repeated")));
                    }
                }
                ring = Some(Ring::new(vars, order.clone()));
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| line_err(no, format!("unrecognised line `{line}`")))?;
            let value = value.trim();
            if key.trim() == "split" {
                split = Some(SplitSpec::parse(value).map_err(|e| line_err(no, e))?);
                continue;
            }
            let r = ring
                .as_ref()
                .ok_or_else(|| line_err(no, "`ring` must come first"))?;
            match key.trim() {
                "ideal" => {
                    if ideal.is_some() {
                        return Err(line_err(no, "ideal declared twice"));
                    }
                    ideal = Some(parse_polys(r, value, no)?);
                }
                "column" => columns.push(parse_polys(r, value, no)?),
                "map" => {
                    let rows: Vec<Vec<Polynomial>> = value
                        .split(';')
                        .map(|row| parse_polys(r, row, no))
                        .collect::<Result<_, _>>()?;
                    let cols = rows[0].len();
                    let m = PolyMatrix::new(r, rows.len(), cols, rows).map_err(|e| line_err(no, e))?;
                    maps.push(m);
                }
                "section" => {
                    for part in value.split(',') {
                        let (v, g) = part
                            .split_once('=')
                            .ok_or_else(|| line_err(no, format!("section entry `{part}` lacks `=`")))?;
                        let v = v.trim().to_string();
                        r.require_var(&v).map_err(|e| line_err(no, e))?;
                        let g = Polynomial::parse(r, g.trim()).map_err(|e| line_err(no, e))?;
                        section.push((v, g));
                    }
                }
                other => return Err(line_err(no, format!("unknown key `{other}`"))),
            }
        }
        let ring = ring.ok_or_else(|| CliError::parse("missing `ring` declaration"))?;
        if let Some(first) = columns.first() {
            if columns.iter().any(|c| c.len() != first.len()) {
                return Err(CliError::parse("columns have different lengths"));
            }
            if ideal.is_some() {
                return Err(CliError::parse("give either `ideal` or `column` lines, not both"));
            }
        }
        Ok(ProblemFile {
            ring,
            ideal,
            columns,
            maps,
            split,
            section,
        })
    }

    /// The presentation `f_1` whose cokernel is analysed: the ideal as a row
    /// vector, or the module columns.
    pub fn presentation(&self) -> Option<PolyMatrix> {
        if let Some(gens) = &self.ideal {
            return PolyMatrix::row_vector(&self.ring, gens).ok();
        }
        let first = self.columns.first()?;
        PolyMatrix::from_columns(&self.ring, first.len(), self.columns.clone()).ok()
    }
}

fn join(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ring.vars().join(","))?;
        if let Some(gens) = &self.ideal {
            writeln!(f, "ideal: {}", join(gens))?;
        }
        for c in &self.columns {
            writeln!(f, "column: {}", join(c))?;
        }
        for m in &self.maps {
            let rows: Vec<String> = m.entries().iter().map(|r| join(r)).collect();
            writeln!(f, "map: {}", rows.join("; "))?;
        }
        if let Some(s) = &self.split {
            writeln!(f, "split: {s}")?;
        }
        if !self.section.is_empty() {
            let parts: Vec<String> = self.section.iter().map(|(v, g)| format!("{v}={g}")).collect();
            writeln!(f, "section: {}", parts.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let src = "ring x,y,z\n# two planes\nideal: z*x,  y*z\nsplit: free=x,y dependent=z\nsection: z=0\n";
        let p = ProblemFile::parse(src, MonomialOrder::Grevlex).unwrap();
        let printed = p.to_string();
        assert_eq!(printed, "ring x,y,z\nideal: x*z, y*z\nsplit: free=x,y dependent=z\nsection: z=0\n");
        let again = ProblemFile::parse(&printed, MonomialOrder::Grevlex).unwrap();
        assert_eq!(again, p);
        assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn maps_and_columns() {
        let src = "ring x,y\nmap: x, y\nmap: y^2; -x*y\n";
        let p = ProblemFile::parse(src, MonomialOrder::Grevlex).unwrap();
        assert_eq!(p.maps.len(), 2);
        assert_eq!((p.maps[1].rows(), p.maps[1].cols()), (2, 1));
        let m = ProblemFile::parse("ring x,y\ncolumn: x, 0\ncolumn: y, x\n", MonomialOrder::Grevlex).unwrap();
        let pres = m.presentation().unwrap();
        assert_eq!(pres.to_strings(), vec![vec!["x", "y"], vec!["0", "x"]]);
    }

    #[test]
    fn split_forms() {
        let s = SplitSpec::parse("ω=z").unwrap();
        assert_eq!((s.free, s.dependent), (None, vec!["z".to_string()]));
        let s = SplitSpec::parse("ζ=x;ω=y").unwrap();
        assert_eq!(s.free, Some(vec!["x".to_string()]));
        assert!(SplitSpec::parse("free=x").is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = ProblemFile::parse("ring x\nideal: x +\n", MonomialOrder::Grevlex).unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        assert!(ProblemFile::parse("ideal: x\n", MonomialOrder::Grevlex).is_err());
        assert!(ProblemFile::parse("ring x,x\n", MonomialOrder::Grevlex).is_err());
    }
}
