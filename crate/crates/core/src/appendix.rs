//! Two-column `name,value` files per case family, named `{l}_{m}_{d}.csv`.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::case::CaseSpec;
use crate::certify::{CertificateBundle, Target};
use crate::exactalg::{parse_poly, parse_ratfunc, poly_to_string, ratfunc_to_string, s_to_t_squared, MultiPoly, ParseError, RatFunc};
use crate::quasisolution::{rtilde, QuasiError};
use crate::recurrence::{coeffs, r_symbolic, RecurrenceError};

pub const KEYS: [&str; 13] = [
    "A", "B", "N", "d_0", "l_0", "r_N", "rtilde", "delta_N", "C", "epsilon", "bounddelta", "boundC", "boundepsilon",
];

/// Description column, following the table of file contents.
pub fn description(key: &str) -> &'static str {
    match key {
        "A" => "Explicit expression of the rational function A_{n,d,l,m}(lambda).",
        "B" => "Explicit expression of the rational function B_{n,d,l,m}(lambda).",
        "N" => "N(d,l,m), the starting index.",
        "d_0" => "If a range of d is considered, then this is the starting value.",
        "l_0" => "If a range of l is considered, then this is the starting value.",
        "r_N" => "Explicit expression of the rational function r_{N(d,l,m),d,l,m}(lambda).",
        "rtilde" => "Explicit expression of the rational function rtilde_{n,d,l,m}(lambda).",
        "delta_N" => "Explicit expression of the rational function delta_{N(d,l,m),d,l,m}(lambda).",
        "C" => "Explicit expression of the rational function C_{n,d,l,m}(lambda).",
        "epsilon" => "Explicit expression of the rational function epsilon_{n,d,l,m}(lambda).",
        "bounddelta" => {
            "This is the polynomial a^2|Q(it)|^2 - b^2|P(it)|^2. It is a polynomial in t^2 and, depending on the \
             case, also in d and/or l with integer coefficients. If d and/or l appear, they are shifted by d_0 \
             and l_0, respectively."
        }
        "boundC" => {
            "This is the polynomial analogous to bounddelta, but with n as an additional variable. Here n is \
             shifted by N(d,l,m)."
        }
        "boundepsilon" => "This is the polynomial analogous to boundC.",
        _ => "",
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AppendixError {
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing key {0}")]
    MissingKey(String),
    #[error("{key}: {source}")]
    Parse { key: String, source: ParseError },
    #[error("{0} does not round-trip")]
    Mismatch(String),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
    #[error(transparent)]
    Quasi(#[from] QuasiError),
}

/// Row values of one case file.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Func(RatFunc),
    /// Certificate polynomial in `t`.
    Poly(MultiPoly),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Int(k) => k.to_string(),
            Value::Func(f) => ratfunc_to_string(f),
            Value::Poly(p) => poly_to_string(p),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseFile {
    pub case: CaseSpec,
    pub rows: Vec<(&'static str, Value)>,
}

impl CaseFile {
    pub fn from_bundle(bundle: &CertificateBundle) -> Result<CaseFile, AppendixError> {
        let case = bundle.case;
        let rec = coeffs(&case)?;
        let cert_poly = |t: Target| {
            let c = bundle.get(t).expect("bundle holds every target");
            Value::Poly(s_to_t_squared(&c.polynomials[0].1))
        };
        let aux = &bundle.auxiliary;
        let rows = vec![
            ("A", Value::Func(rec.a)),
            ("B", Value::Func(rec.b)),
            ("N", Value::Int(bundle.n_start as i64)),
            ("d_0", Value::Int(case.d_shift())),
            ("l_0", Value::Int(case.l_shift())),
            ("r_N", Value::Func(r_symbolic(&case)?)),
            ("rtilde", Value::Func(rtilde(&case)?.expr)),
            ("delta_N", Value::Func(aux.delta_n.clone())),
            ("C", Value::Func(aux.c.clone())),
            ("epsilon", Value::Func(aux.epsilon.clone())),
            ("bounddelta", cert_poly(Target::DeltaN)),
            ("boundC", cert_poly(Target::C)),
            ("boundepsilon", cert_poly(Target::Epsilon)),
        ];
        Ok(CaseFile { case, rows })
    }

    pub fn file_name(&self) -> String {
        self.case.file_name()
    }

    pub fn to_csv(&self, with_descriptions: bool) -> Result<String, AppendixError> {
        let mut w = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::Necessary)
            .from_writer(Vec::new());
        if with_descriptions {
            w.write_record(["name", "value", "description"])?;
        } else {
            w.write_record(["name", "value"])?;
        }
        for (key, value) in &self.rows {
            let v = value.render();
            if with_descriptions {
                w.write_record([*key, v.as_str(), description(key)])?;
            } else {
                w.write_record([*key, v.as_str()])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("utf-8 input"))
    }

    pub fn write(&self, dir: &Path, with_descriptions: bool) -> Result<PathBuf, AppendixError> {
        fs::create_dir_all(dir)?;
        let path = dir.join(self.file_name());
        fs::write(&path, self.to_csv(with_descriptions)?)?;
        Ok(path)
    }

    /// Parses `text` and checks every row against this file's values.
    pub fn verify_round_trip(&self, text: &str) -> Result<(), AppendixError> {
        let parsed = parse_rows(text)?;
        for (key, value) in &self.rows {
            let raw = parsed
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| AppendixError::MissingKey(key.to_string()))?;
            let err = |source| AppendixError::Parse {
                key: key.to_string(),
                source,
            };
            let same = match value {
                Value::Int(k) => raw.parse::<i64>().ok() == Some(*k),
                Value::Func(f) => parse_ratfunc(raw).map_err(err)?.equals(f),
                Value::Poly(p) => &parse_poly(raw).map_err(err)? == p,
            };
            if !same {
                return Err(AppendixError::Mismatch(key.to_string()));
            }
        }
        Ok(())
    }
}

/// `(name, value)` pairs of a file, with or without the description column.
pub fn parse_rows(text: &str) -> Result<Vec<(String, String)>, AppendixError> {
    let mut r = csv::ReaderBuilder::new().flexible(true).from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let name = rec.get(0).unwrap_or_default().to_string();
        let value = rec.get(1).unwrap_or_default().to_string();
        out.push((name, value));
    }
    Ok(out)
}
