//! Text formats: quandle tables, group data, lattice data and presentations.
//!
//! All formats are whitespace separated, and `#` starts a comment running to
//! the end of the line.

use std::fmt::Write as _;
use std::path::Path;

use nilquandle::cayley::CayleyGroup;
use nilquandle::group_model::{GroupData, PresentationData};
use nilquandle::{FiniteRack, IntLattice, TwoNilpotentData};

use crate::{CliError, CliResult};

/// Non-blank lines with comments stripped, tagged with 1-based line numbers.
struct Lines<'a> {
    source: &'a str,
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(source: &'a str, text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(k, l)| {
                let body = l.split('#').next().unwrap_or("");
                let toks: Vec<&str> = body.split_whitespace().collect();
                (!toks.is_empty()).then_some((k + 1, toks))
            })
            .collect();
        Lines {
            source,
            items,
            pos: 0,
        }
    }

    fn error(&self, line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            path: self.source.to_string(),
            line,
            message: message.into(),
        }
    }

    fn last_line(&self) -> usize {
        self.items.last().map_or(1, |(l, _)| *l)
    }

    fn next(&mut self, what: &str) -> CliResult<(usize, Vec<&'a str>)> {
        let item = self.items.get(self.pos).cloned();
        self.pos += 1;
        item.ok_or_else(|| self.error(self.last_line(), format!("unexpected end of input, expected {what}")))
    }

    fn remaining(&self) -> usize {
        self.items.len().saturating_sub(self.pos)
    }

    fn numbers<T: std::str::FromStr>(&self, line: usize, toks: &[&str]) -> CliResult<Vec<T>> {
        toks.iter()
            .map(|t| t.parse::<T>().map_err(|_| self.error(line, format!("not a number: {t:?}"))))
            .collect()
    }

    fn next_numbers<T: std::str::FromStr>(&mut self, what: &str, count: Option<usize>) -> CliResult<Vec<T>> {
        let (line, toks) = self.next(what)?;
        if let Some(c) = count {
            if toks.len() != c {
                return Err(self.error(line, format!("expected {c} entries in {what}, found {}", toks.len())));
            }
        }
        self.numbers(line, &toks)
    }

    fn finish(&self) -> CliResult<()> {
        match self.items.get(self.pos) {
            None => Ok(()),
            Some((line, _)) => Err(self.error(*line, "trailing content")),
        }
    }
}

/// Reads a file, naming it in errors.
pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses an operation table: the size `n`, then `n` rows of `n` entries in
/// `0..n`, row `x` listing `x ▷ y` for `y = 0..n−1`. Racks are accepted.
pub fn parse_table(source: &str, text: &str) -> CliResult<Vec<Vec<usize>>> {
    let mut lines = Lines::new(source, text);
    let n = lines.next_numbers::<usize>("the size", Some(1))?[0];
    let mut table = Vec::with_capacity(n);
    for x in 0..n {
        let (line, toks) = lines.next(&format!("row {x}"))?;
        if toks.len() != n {
            return Err(lines.error(line, format!("row {x} has {} entries, expected {n}", toks.len())));
        }
        let row: Vec<usize> = lines.numbers(line, &toks)?;
        if let Some(v) = row.iter().find(|&&v| v >= n) {
            return Err(lines.error(line, format!("entry {v} out of range 0..{n}")));
        }
        table.push(row);
    }
    lines.finish()?;
    Ok(table)
}

/// Parses and validates a rack table.
pub fn parse_rack(source: &str, text: &str) -> CliResult<FiniteRack> {
    Ok(FiniteRack::validate(parse_table(source, text)?, false)?)
}

pub fn load_rack(path: &Path) -> CliResult<FiniteRack> {
    parse_rack(&path.display().to_string(), &read(path)?)
}

/// Writes a table, preceded by comment lines.
pub fn write_table(q: &FiniteRack, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{}", q.len());
    let width = q.len().saturating_sub(1).to_string().len();
    for x in 0..q.len() {
        let row: Vec<String> = q.row(x).iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses group data: a Cayley table block (order, then rows), then one line
/// per subgroup listing its elements, and finally a line with the
/// distinguished elements `z₁ … z_k`.
pub fn parse_group_data(source: &str, text: &str) -> CliResult<GroupData> {
    let mut lines = Lines::new(source, text);
    let order = lines.next_numbers::<usize>("the group order", Some(1))?[0];
    let mut table = Vec::with_capacity(order);
    for a in 0..order {
        table.push(lines.next_numbers::<usize>(&format!("row {a} of the Cayley table"), Some(order))?);
    }
    let group = CayleyGroup::new(table)?;
    if lines.remaining() < 2 {
        return Err(lines.error(lines.last_line(), "expected subgroup lines followed by a line of z elements"));
    }
    let mut hs = Vec::new();
    while lines.remaining() > 1 {
        hs.push(lines.next_numbers::<usize>("a subgroup", None)?);
    }
    let zs = lines.next_numbers::<usize>("the z elements", Some(hs.len()))?;
    Ok(GroupData { group, hs, zs })
}

fn parse_lattice_block(lines: &mut Lines<'_>, expected_dim: Option<usize>) -> CliResult<IntLattice> {
    let (line, toks) = lines.next("a lattice header `n k`")?;
    if toks.len() != 2 {
        return Err(lines.error(line, "lattice header must be `n k`"));
    }
    let head: Vec<usize> = lines.numbers(line, &toks)?;
    let (n, k) = (head[0], head[1]);
    if let Some(d) = expected_dim.filter(|&d| d != n) {
        return Err(lines.error(line, format!("lattice dimension {n}, expected {d}")));
    }
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        rows.push(lines.next_numbers::<i64>(&format!("generator {r}"), Some(n))?);
    }
    Ok(IntLattice::span(n, &rows)?)
}

/// Parses a single lattice: `n k`, then `k` rows of `n` integers.
pub fn parse_lattice(source: &str, text: &str) -> CliResult<IntLattice> {
    let mut lines = Lines::new(source, text);
    let l = parse_lattice_block(&mut lines, None)?;
    lines.finish()?;
    Ok(l)
}

/// Parses two-nilpotent data: the number `n` of orbits, then `n` lattice
/// blocks `Hᵢ ⊆ ℤⁿ`.
pub fn parse_two_nilpotent(source: &str, text: &str) -> CliResult<TwoNilpotentData> {
    let mut lines = Lines::new(source, text);
    let n = lines.next_numbers::<usize>("the orbit count", Some(1))?[0];
    let hs = (0..n)
        .map(|_| parse_lattice_block(&mut lines, Some(n)))
        .collect::<CliResult<Vec<_>>>()?;
    lines.finish()?;
    Ok(TwoNilpotentData::new(hs)?)
}

/// Writes two-nilpotent data in the format read by [`parse_two_nilpotent`].
pub fn write_two_nilpotent(d: &TwoNilpotentData) -> String {
    let mut out = format!("{}\n", d.n());
    for h in d.hs() {
        let _ = writeln!(out, "{} {}", h.dim(), h.rank());
        for r in 0..h.rank() {
            let row: Vec<String> = h.basis().row(r).iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
    }
    out
}

/// The generators line `x1 … xk`, then one relator per line.
pub fn write_presentation(p: &PresentationData) -> String {
    let gens: Vec<String> = (1..=p.generators.len()).map(|s| format!("x{s}")).collect();
    let mut out = format!("{}\n", gens.join(" "));
    out.push_str(&nilquandle::words::format_words(&p.relators));
    out
}

/// Parses a colouring tuple such as `1 0 2` or `1,0,2`.
pub fn parse_tuple(s: &str) -> CliResult<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad tuple entry {t:?}"))))
        .collect()
}
