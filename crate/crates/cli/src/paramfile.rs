//! `key = value` parameter files.
//!
//! ```text
//! # theta = 6 example
//! type = +
//! theta = 6
//! r = 6
//! x1 = 1
//! x2 = -1/2 + 1/2*u
//! e = 0
//! t = 0
//! ```

use std::collections::HashMap;
use std::fmt;

use inoue_core::exactnum::text::parse_quad_complex;
use inoue_core::gamma::SurfaceParams;
use inoue_core::{Error, FieldDescriptor, SurfaceType};

const KEYS: [&str; 7] = ["type", "theta", "r", "x1", "x2", "e", "t"];

/// A parse failure tied to a line of the input (1-based; 0 when the file as a whole is at fault).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

#[derive(Debug)]
pub enum LoadError {
    Parse(ParseError),
    /// The file parsed but the values do not define a surface.
    Invalid(Error),
}

impl From<ParseError> for LoadError {
    fn from(e: ParseError) -> Self {
        LoadError::Parse(e)
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Raw values keyed by canonical key name, with their line numbers.
fn split_lines(text: &str) -> Result<HashMap<&'static str, (usize, String)>, ParseError> {
    let mut out: HashMap<&'static str, (usize, String)> = HashMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return err(line, format!("expected `key = value`, found `{content}`"));
        };
        let key = key.trim();
        let canonical = match key {
            "surface" => "type",
            k => match KEYS.iter().find(|&&c| c == k) {
                Some(c) => c,
                None => return err(line, format!("unknown key `{key}`")),
            },
        };
        let value = value.trim();
        if value.is_empty() {
            return err(line, format!("empty value for `{key}`"));
        }
        if let Some((first, _)) = out.get(canonical) {
            return err(line, format!("`{canonical}` already set on line {first}"));
        }
        out.insert(canonical, (line, value.to_string()));
    }
    Ok(out)
}

fn required<'a>(map: &'a HashMap<&'static str, (usize, String)>, key: &str) -> Result<&'a (usize, String), ParseError> {
    map.get(key).ok_or_else(|| ParseError { line: 0, message: format!("missing key `{key}`") })
}

pub fn parse_surface_type(s: &str) -> Option<SurfaceType> {
    match s {
        "+" | "plus" | "S+" | "S(+)" => Some(SurfaceType::Plus),
        "-" | "minus" | "S-" | "S(-)" => Some(SurfaceType::Minus),
        _ => None,
    }
}

fn integer(entry: &(usize, String), key: &str) -> Result<i64, ParseError> {
    entry.1.parse::<i64>().or_else(|_| err(entry.0, format!("`{key}` must be an integer, found `{}`", entry.1)))
}

fn expr_error(line: usize, key: &str, e: Error) -> ParseError {
    match e {
        Error::Parse { column, message } => {
            ParseError { line, message: format!("`{key}`, column {column}: {message}") }
        }
        other => ParseError { line, message: format!("`{key}`: {other}") },
    }
}

/// Parses and validates a parameter file.
pub fn parse(text: &str) -> Result<SurfaceParams, LoadError> {
    let map = split_lines(text)?;
    let ty = required(&map, "type")?;
    let surface = parse_surface_type(&ty.1)
        .ok_or_else(|| ParseError { line: ty.0, message: format!("type must be `+` or `-`, found `{}`", ty.1) })?;
    let theta = integer(required(&map, "theta")?, "theta")?;
    let r = integer(required(&map, "r")?, "r")?;
    let field = FieldDescriptor::new(theta, surface).map_err(LoadError::Invalid)?;
    let element = |key: &str| -> Result<_, ParseError> {
        let (line, value) = required(&map, key)?;
        field.parse(value).map_err(|e| expr_error(*line, key, e))
    };
    let x1 = element("x1")?;
    let x2 = element("x2")?;
    let e = element("e")?;
    let params = match map.get("t") {
        Some((line, value)) => {
            let t = parse_quad_complex(value, field.delta()).map_err(|e| expr_error(*line, "t", e))?;
            SurfaceParams::new(field, r, x1, x2, e, t)
        }
        None => SurfaceParams::with_zero_t(field, r, x1, x2, e),
    };
    params.map_err(LoadError::Invalid)
}

/// Renders parameters back into the file format.
pub fn render(p: &SurfaceParams) -> String {
    let d = p.field();
    format!(
        "type = {}\ntheta = {}\nr = {}\nx1 = {}\nx2 = {}\ne = {}\nt = {}\n",
        d.surface().symbol(),
        d.theta(),
        p.r(),
        p.x1(),
        p.x2(),
        p.e(),
        p.t()
    )
}
