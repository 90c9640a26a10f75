//! JSON description of a code: a field plus one construction.
//!
//! ```json
//! {"field": {"p": 5, "m": 1}, "grs": {"a": [0, 1, 2, 3], "k": 2}}
//! ```
//!
//! Unknown keys are ignored, so the output of `extcode build` (which adds
//! `n`, `k`, `d` and `is_mds`) reads back as the same code.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::constructions::{cyclic_spec, prs, roth_lempel_generator, GrsSpec};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::matrix::{Matrix, MatrixData};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeSource {
    Generator(MatrixData),
    Grs(GrsSpec),
    Prs {
        k: usize,
    },
    RothLempel {
        a: Vec<u32>,
        k: usize,
        delta: u32,
    },
    /// Cyclic code `C_u` over `GF(2^m)`; the field must be the default
    /// `GF(2^m)`.
    Cyclic {
        u: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDescriptor>,
    #[serde(flatten)]
    pub source: CodeSource,
    /// Use the dual of the constructed code.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub dual: bool,
    /// A vector attached to the code, e.g. the `u` of a counterexample.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<u32>>,
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<CodeFile> {
        serde_json::from_str(text).map_err(|e| {
            if e.is_data() {
                Error::InvalidSpec(e.to_string())
            } else {
                Error::Parse(e.to_string())
            }
        })
    }

    /// A generator-matrix file for `code`.
    pub fn from_code(code: &LinearCode) -> CodeFile {
        CodeFile {
            field: Some(code.field().descriptor()),
            source: CodeSource::Generator(code.generator().to_data()),
            dual: false,
            u: None,
        }
    }

    pub fn with_u(mut self, u: Vec<u32>) -> CodeFile {
        self.u = Some(u);
        self
    }

    /// Resolves the field, preferring the file's own description and
    /// falling back to `default`.
    pub fn field(&self, default: Option<&Field>) -> Result<Field> {
        match (&self.field, default) {
            (Some(desc), Some(f)) => {
                let own = Field::from_descriptor(desc)?;
                if own != *f {
                    return Err(Error::InvalidSpec(format!(
                        "file field {own} differs from the requested {f}"
                    )));
                }
                Ok(own)
            }
            (Some(desc), None) => Field::from_descriptor(desc),
            (None, Some(f)) => Ok(f.clone()),
            (None, None) => Err(Error::InvalidSpec("no field given".into())),
        }
    }

    /// The generator matrix as the construction defines it (the dual's
    /// canonical generator when `dual` is set).
    pub fn generator(&self, default_field: Option<&Field>) -> Result<Matrix> {
        if self.dual {
            let primal = CodeFile {
                dual: false,
                ..self.clone()
            };
            return Ok(primal.build(default_field)?.dual().generator().clone());
        }
        let field = self.field(default_field)?;
        match &self.source {
            CodeSource::Generator(data) => Matrix::from_data(&field, data),
            CodeSource::Grs(spec) => spec.generator(&field),
            CodeSource::Prs { k } => Ok(prs(&field, *k)?.generator().clone()),
            CodeSource::RothLempel { a, k, delta } => roth_lempel_generator(&field, a, *k, *delta),
            CodeSource::Cyclic { u } => {
                if field.characteristic() != 2 || field != Field::new(2, field.degree())? {
                    return Err(Error::InvalidSpec(
                        "cyclic codes need the default GF(2^m)".into(),
                    ));
                }
                cyclic_spec(field.degree(), *u)?.generator()
            }
        }
    }

    /// The code. A generator with no rows gives the zero code, which is how
    /// [`CodeFile::from_code`] writes it.
    pub fn build(&self, default_field: Option<&Field>) -> Result<LinearCode> {
        let g = self.generator(default_field)?;
        if g.rows() == 0 {
            return Ok(LinearCode::zero_code(g.field(), g.cols()));
        }
        LinearCode::from_generator(&g)
    }
}
