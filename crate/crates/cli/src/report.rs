use std::fmt::Write as _;

use hopfideal_core::{DatumKind, GroupDatum};

/// One output line: a `kind` plus ordered fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, String)>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record {
            kind: kind.to_string(),
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        if key == "kind" {
            return Some(&self.kind);
        }
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// `kind=..<TAB>key=value<TAB>...`. Values never contain tabs.
    pub fn machine(&self) -> String {
        let mut out = format!("kind={}", self.kind);
        for (k, v) in &self.fields {
            write!(out, "\t{k}={v}").unwrap();
        }
        out
    }

    /// Inverse of [`Record::machine`].
    pub fn parse_machine(line: &str) -> Option<Record> {
        let mut parts = line.split('\t');
        let kind = parts.next()?.strip_prefix("kind=")?;
        let fields = parts
            .map(|p| {
                p.split_once('=')
                    .map(|(k, v)| (k.to_string(), v.to_string()))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Record {
            kind: kind.to_string(),
            fields,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

/// Output of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub records: Vec<Record>,
    /// Set when a check inside the command failed; the process exits with 1.
    pub failed: bool,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64, datum: &GroupDatum) -> Self {
        Report {
            command: command.into(),
            seed,
            records: vec![datum_record(datum)],
            failed: false,
        }
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn records_of<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.kind == kind)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => self.machine(),
            Format::Human => self.human(),
        }
    }

    pub fn machine(&self) -> String {
        let mut out = String::new();
        let head = Record::new("command")
            .field("name", &self.command)
            .field("seed", self.seed);
        for r in std::iter::once(&head).chain(&self.records) {
            out.push_str(&r.machine());
            out.push('\n');
        }
        out
    }

    /// Consecutive records of one kind form a table with a header row.
    pub fn human(&self) -> String {
        let mut out = format!("command: {}\nseed: {}\n", self.command, self.seed);
        let mut start = 0;
        while start < self.records.len() {
            let kind = &self.records[start].kind;
            let keys: Vec<&str> = self.records[start]
                .fields
                .iter()
                .map(|(k, _)| k.as_str())
                .collect();
            let mut end = start + 1;
            while end < self.records.len()
                && self.records[end].kind == *kind
                && self.records[end]
                    .fields
                    .iter()
                    .map(|(k, _)| k.as_str())
                    .eq(keys.iter().copied())
            {
                end += 1;
            }
            let rows = &self.records[start..end];
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(c, k)| {
                    rows.iter()
                        .map(|r| r.fields[c].1.len())
                        .max()
                        .unwrap_or(0)
                        .max(k.len())
                })
                .collect();
            writeln!(out, "\n[{kind}]").unwrap();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(keys.clone())).unwrap();
            for r in rows {
                writeln!(
                    out,
                    "{}",
                    line(r.fields.iter().map(|(_, v)| v.as_str()).collect())
                )
                .unwrap();
            }
            start = end;
        }
        out
    }
}

/// `q` is printed as `zeta(n)^k`.
fn datum_record(d: &GroupDatum) -> Record {
    let q = match d.q().as_root_of_unity() {
        Some((m, k)) => format!("zeta({m})^{k}"),
        None => d.q().to_string(),
    };
    let mut r = Record::new("datum")
        .field("group_order", d.group().size())
        .field("n", d.n())
        .field("q", q)
        .field("type", d.kind())
        .field("dim", d.dim())
        .field("p", d.p());
    if d.kind() == DatumKind::NonNilpotent {
        r = r.field("r", d.r().unwrap_or(0));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_round_trip() {
        let r = Record::new("ideal")
            .field("dim", 5)
            .field("gens", "z*e3 + e1 + e2");
        assert_eq!(r.machine(), "kind=ideal\tdim=5\tgens=z*e3 + e1 + e2");
        assert_eq!(Record::parse_machine(&r.machine()), Some(r));
    }

    #[test]
    fn human_tables_align() {
        let d = hopfideal_core::catalog::klein();
        let mut rep = Report::new("test", 1, &d);
        rep.push(Record::new("x").field("a", "1").field("bb", "long value"));
        rep.push(Record::new("x").field("a", "22").field("bb", "v"));
        let text = rep.human();
        assert!(text.contains("a   bb\n1   long value\n22  v\n"), "{text}");
    }
}
