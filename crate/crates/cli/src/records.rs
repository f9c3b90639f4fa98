//! The wire record for one tree node. JSON field names are fixed as
//! s, c, n, m, n2, level, path, word; "n2" is the parameter n, kept
//! distinct from the hypotenuse. Numeric values are serialized as strings
//! so deep nodes survive any JSON reader exactly.

use pytree_core::{params_from_triple, word_for, ChildKind, PrimTriple, TreePath};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub s: String,
    pub c: String,
    pub n: String,
    pub m: String,
    pub n2: String,
    pub level: usize,
    pub path: String,
    pub word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
}

impl Record {
    pub const CSV_HEADER: [&'static str; 8] = ["s", "c", "n", "m", "n2", "level", "path", "word"];

    pub fn for_node(path: &TreePath, t: &PrimTriple) -> Record {
        let p = params_from_triple(t);
        Record {
            s: t.s().to_string(),
            c: t.c().to_string(),
            n: t.n().to_string(),
            m: p.m().to_string(),
            n2: p.n().to_string(),
            level: path.len(),
            path: path.to_string(),
            word: word_for(path).to_string(),
            kind: None,
            diff: None,
        }
    }

    pub fn with_kind(mut self, kind: ChildKind) -> Record {
        self.kind = Some(kind.token().to_string());
        self
    }

    pub fn with_diff(mut self, diff: String) -> Record {
        self.diff = Some(diff);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.s.clone(),
            self.c.clone(),
            self.n.clone(),
            self.m.clone(),
            self.n2.clone(),
            self.level.to_string(),
            self.path.clone(),
            self.word.clone(),
        ]
    }
}
