//! The structure file: a small TOML document listing the multiplication as
//! triples and the unit as a list of elements.
//!
//! ```toml
//! n = 2
//! bot = [0]
//! nabla = [
//!   [0, 0, 0],
//!   [0, 1, 1],
//!   [1, 0, 1],
//!   [1, 1, 0],
//! ]
//! ```
//!
//! A triple `[x, y, z]` means `z ∈ x∇y`.

use std::collections::HashMap;
use std::fmt::Write as _;

use frobrel::{FrobeniusCandidate, Vector};
use serde::Deserialize;

/// Largest carrier accepted from a file or produced by `build`.
pub const FILE_N_LIMIT: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub n: usize,
    pub nabla: Vec<[usize; 3]>,
    pub bot: Vec<usize>,
}

impl StructureFile {
    /// Parses and validates a document. Errors name the offending field.
    pub fn parse(text: &str) -> Result<Self, String> {
        let file: StructureFile = toml::from_str(text).map_err(|e| e.to_string())?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<(), String> {
        let n = self.n;
        if n > FILE_N_LIMIT {
            return Err(format!(
                "n: {n} exceeds the carrier limit of {FILE_N_LIMIT}"
            ));
        }
        let mut seen = HashMap::new();
        for (i, t) in self.nabla.iter().enumerate() {
            if let Some(bad) = t.iter().find(|&&v| v >= n) {
                return Err(format!("nabla[{i}]: element {bad} is outside 0..{n}"));
            }
            if let Some(j) = seen.insert(*t, i) {
                return Err(format!("nabla[{i}]: duplicate of nabla[{j}]"));
            }
        }
        let mut seen = HashMap::new();
        for (i, &x) in self.bot.iter().enumerate() {
            if x >= n {
                return Err(format!("bot[{i}]: element {x} is outside 0..{n}"));
            }
            if let Some(j) = seen.insert(x, i) {
                return Err(format!("bot[{i}]: duplicate of bot[{j}]"));
            }
        }
        Ok(())
    }

    pub fn to_candidate(&self) -> frobrel::Result<FrobeniusCandidate> {
        let bot: Vector = self.bot.iter().copied().collect();
        FrobeniusCandidate::from_triples(self.n, self.nabla.iter().map(|&[x, y, z]| (x, y, z)), bot)
    }

    pub fn from_candidate(c: &FrobeniusCandidate) -> Self {
        StructureFile {
            n: c.n(),
            nabla: c.triples().into_iter().map(|(x, y, z)| [x, y, z]).collect(),
            bot: c.bot().iter().collect(),
        }
    }

    /// Renders the document with sorted triples, one per line.
    pub fn render(&self) -> String {
        let mut nabla = self.nabla.clone();
        nabla.sort();
        let mut bot = self.bot.clone();
        bot.sort();
        let list = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        writeln!(out, "bot = [{}]", list(&bot)).unwrap();
        if nabla.is_empty() {
            out.push_str("nabla = []\n");
        } else {
            out.push_str("nabla = [\n");
            for t in &nabla {
                writeln!(out, "  [{}],", list(t)).unwrap();
            }
            out.push_str("]\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_round_trips() {
        let f = StructureFile {
            n: 2,
            nabla: vec![[1, 1, 0], [0, 0, 0], [1, 0, 1], [0, 1, 1]],
            bot: vec![0],
        };
        let text = f.render();
        assert!(text.contains("  [0, 0, 0],\n  [0, 1, 1],"));
        let back = StructureFile::parse(&text).unwrap();
        assert_eq!(back.render(), text);
        assert_eq!(
            StructureFile::from_candidate(&back.to_candidate().unwrap()).render(),
            text
        );
    }

    #[test]
    fn errors_cite_the_field() {
        let err = StructureFile::parse("n = 2\nbot = [0]\nnabla = [[0,0,0],[0,2,1]]").unwrap_err();
        assert_eq!(err, "nabla[1]: element 2 is outside 0..2");
        let err = StructureFile::parse("n = 2\nbot = [0]\nnabla = [[0,0,0],[0,0,0]]").unwrap_err();
        assert_eq!(err, "nabla[1]: duplicate of nabla[0]");
        let err = StructureFile::parse("n = 2\nbot = [0, 3]\nnabla = []").unwrap_err();
        assert_eq!(err, "bot[1]: element 3 is outside 0..2");
        let err = StructureFile::parse("n = 1\nbot = []\nnabla = []\nextra = 1").unwrap_err();
        assert!(err.contains("extra"), "{err}");
        let err = StructureFile::parse("n = 1\nbot = []").unwrap_err();
        assert!(err.contains("nabla"), "{err}");
    }

    #[test]
    fn empty_structure() {
        let f = StructureFile::parse("n = 0\nbot = []\nnabla = []\n").unwrap();
        assert_eq!(f.to_candidate().unwrap().n(), 0);
    }
}
