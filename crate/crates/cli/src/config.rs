//! TOML datum files.
//!
//! ```toml
//! [group]
//! kind = "abelian"
//! factors = [2, 2]
//! names = ["b", "c"]
//!
//! [datum]
//! chi = 3
//! g = "b"
//! alpha = 0
//! ```
//!
//! A nonabelian group is given by `kind = "table"` with `elements`, a
//! multiplication `table` of element indices, `characters` as rows of
//! cyclotomic literals (`"-1/2 + zeta(3)"`) and optional `[[group.irreps]]`
//! entries holding one matrix per element for a character of degree > 1.

use std::path::Path;
use std::sync::Arc;

use hopfideal_core::expr::parse_cyclotomic;
use hopfideal_core::groups::{build_abelian_named, validate_table};
use hopfideal_core::{
    CharacterTable, Cyclotomic, CyclotomicField, DatumInput, ExactMatrix, FiniteGroup, GroupDatum,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumConfig {
    pub group: GroupConfig,
    pub datum: DatumSection,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupConfig {
    Abelian {
        factors: Vec<u64>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
    Table {
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        characters: Vec<Vec<String>>,
        #[serde(default)]
        irreps: Vec<IrrepConfig>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrrepConfig {
    pub character: usize,
    /// One matrix per group element, as rows of literals.
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumSection {
    pub chi: usize,
    pub g: ElementRef,
    #[serde(default)]
    pub alpha: i64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

impl DatumConfig {
    pub fn parse(src: &str) -> Result<Self, CliError> {
        toml::from_str(src).map_err(|e| CliError::Parse(e.to_string().trim_end().to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let src = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&src).map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Build the group and character table, then validate the datum.
    pub fn build(&self) -> Result<Arc<GroupDatum>, CliError> {
        let (group, table, irreps) = match &self.group {
            GroupConfig::Abelian { factors, names } => {
                let (group, table) = build_abelian_named(factors, names.as_deref())
                    .map_err(hopfideal_core::DatumError::from)?;
                (group, table, Vec::new())
            }
            GroupConfig::Table {
                elements,
                table,
                characters,
                irreps,
            } => {
                let group = Arc::new(
                    FiniteGroup::from_table(table.clone(), Some(elements.clone()))
                        .map_err(hopfideal_core::DatumError::from)?,
                );
                let rows = characters
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(x, s)| literal(s, &format!("group.characters[{i}][{x}]")))
                            .collect()
                    })
                    .collect::<Result<Vec<Vec<Cyclotomic>>, CliError>>()?;
                let table = CharacterTable::new(group.clone(), rows)
                    .map_err(hopfideal_core::DatumError::from)?;
                let check = validate_table(&table);
                if !check.is_valid() {
                    return Err(CliError::Domain(format!(
                        "invalid character table: {}",
                        check.issues.join("; ")
                    )));
                }
                let irreps = build_irreps(&table, irreps)?;
                (group, table, irreps)
            }
        };
        let g = match &self.datum.g {
            ElementRef::Index(i) => *i,
            ElementRef::Label(l) => group
                .index_of(l)
                .ok_or_else(|| CliError::Parse(format!("datum.g: unknown element {l:?}")))?,
        };
        Ok(GroupDatum::validate(DatumInput {
            group,
            table,
            chi: self.datum.chi,
            g,
            alpha: self.datum.alpha,
            irreps,
        })?)
    }
}

fn literal(src: &str, location: &str) -> Result<Cyclotomic, CliError> {
    parse_cyclotomic(src).map_err(|e| CliError::Parse(format!("{location}: {e}")))
}

fn build_irreps(
    table: &CharacterTable,
    configs: &[IrrepConfig],
) -> Result<Vec<Option<Vec<ExactMatrix>>>, CliError> {
    let order = table.field_order();
    let field = CyclotomicField::get(order);
    let mut out: Vec<Option<Vec<ExactMatrix>>> = vec![None; table.len()];
    for (r, cfg) in configs.iter().enumerate() {
        let slot = out.get_mut(cfg.character).ok_or_else(|| {
            CliError::Domain(format!("group.irreps[{r}]: no character {}", cfg.character))
        })?;
        let mut mats = Vec::with_capacity(cfg.matrices.len());
        for (x, m) in cfg.matrices.iter().enumerate() {
            let cols = m.first().map_or(0, Vec::len);
            let mut rows = Vec::with_capacity(m.len());
            for (a, row) in m.iter().enumerate() {
                if row.len() != cols {
                    return Err(CliError::Parse(format!(
                        "group.irreps[{r}].matrices[{x}]: ragged rows"
                    )));
                }
                let mut entries = Vec::with_capacity(cols);
                for (b, s) in row.iter().enumerate() {
                    let v = literal(s, &format!("group.irreps[{r}].matrices[{x}][{a}][{b}]"))?;
                    if !order.is_multiple_of(v.minimal_order()) {
                        return Err(CliError::Domain(format!(
                            "group.irreps[{r}]: entry {s:?} is not in the character field Q(zeta({order}))"
                        )));
                    }
                    entries.push(v.promote(order));
                }
                rows.push(entries);
            }
            mats.push(ExactMatrix::from_rows(&field, cols, rows));
        }
        *slot = Some(mats);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_config() {
        let cfg = DatumConfig::parse(
            "[group]\nkind = \"abelian\"\nfactors = [2, 2]\nnames = [\"b\", \"c\"]\n\n[datum]\nchi = 3\ng = \"b\"\nalpha = 0\n",
        )
        .unwrap();
        let d = cfg.build().unwrap();
        assert_eq!((d.n(), d.dim()), (2, 8));
    }

    #[test]
    fn errors_are_classified() {
        let bad = DatumConfig::parse("[group]\nkind = \"abelian\"\nfactors = [2,\n");
        assert!(matches!(bad, Err(CliError::Parse(_))));
        let trivial = DatumConfig::parse(
            "[group]\nkind = \"abelian\"\nfactors = [2]\n[datum]\nchi = 0\ng = 0\n",
        )
        .unwrap();
        let err = trivial.build().unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("n=1"));
    }
}
