//! Parsing of `--group` specifications.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use quadword::oracle::{FiniteGroup, FreeGroup, GroupOracle};
use quadword::{Symbol, Word};

/// Contents of a `file:PATH` group description.
#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum GroupFile {
    /// Generators as permutations in cycle notation, e.g. `"(1,2,3)"`.
    Permutations { permutations: BTreeMap<Symbol, String> },
    /// `table[i][j] = i·j`, with generators given by element index.
    Table {
        table: Vec<Vec<usize>>,
        generators: BTreeMap<Symbol, usize>,
    },
}

/// Builds the backend named by `spec`, or the free group on the letters
/// of `words` when no spec is given. Every word is checked against the
/// generators.
pub fn load(spec: Option<&str>, words: &[&Word]) -> Result<Box<dyn GroupOracle>> {
    let o: Box<dyn GroupOracle> = match spec {
        None => {
            let mut gens: Vec<Symbol> = words.iter().flat_map(|w| w.support()).collect();
            if gens.is_empty() {
                gens = vec![Symbol::nth(0), Symbol::nth(1)];
            }
            Box::new(FreeGroup::new(gens))
        }
        Some(s) => {
            if let Some(list) = s.strip_prefix("free:") {
                let gens = list
                    .split(',')
                    .map(|g| g.trim().parse::<Symbol>().with_context(|| format!("bad generator {g:?}")))
                    .collect::<Result<Vec<_>>>()?;
                Box::new(FreeGroup::new(gens))
            } else if let Some(path) = s.strip_prefix("file:") {
                Box::new(from_file(Path::new(path))?)
            } else {
                bail!("group spec must be free:GENS or file:PATH, got {s:?}");
            }
        }
    };
    for w in words {
        o.check_word(w)?;
    }
    Ok(o)
}

fn from_file(path: &Path) -> Result<FiniteGroup> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed: GroupFile =
        serde_json::from_str(&raw).with_context(|| format!("parsing group file {}", path.display()))?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("finite");
    Ok(match parsed {
        GroupFile::Permutations { permutations } => {
            let gens: Vec<(Symbol, String)> = permutations.into_iter().collect();
            FiniteGroup::from_permutations(name, &gens)?
        }
        GroupFile::Table { table, generators } => {
            let gens: Vec<(Symbol, usize)> = generators.into_iter().collect();
            FiniteGroup::from_table(name, &table, &gens)?
        }
    })
}
