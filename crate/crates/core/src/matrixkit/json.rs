//! Matrix JSON schema: `{"field": "rat"|"gauss"|"fp:<p>", "rows": [["<scalar>", …], …]}`.

use serde::{Deserialize, Serialize};

use super::Mat;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub field: String,
    pub rows: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn from_mat(m: &Mat) -> Self {
        MatrixDoc {
            field: m.field().to_string(),
            rows: (0..m.rows())
                .map(|i| m.row(i).iter().map(Scalar::to_string).collect())
                .collect(),
        }
    }

    pub fn to_mat(&self) -> Result<Mat> {
        let field: Field = self.field.parse()?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| Scalar::parse(s, field)).collect())
            .collect::<Result<Vec<Vec<Scalar>>>>()?;
        Mat::from_rows(field, rows)
    }
}

impl Mat {
    /// Compact canonical JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixDoc::from_mat(self)).expect("matrix doc serializes")
    }

    pub fn from_json(s: &str) -> Result<Mat> {
        let doc: MatrixDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        doc.to_mat()
    }
}
