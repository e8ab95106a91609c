//! The system file format: a `parameters:` line (optional), a `variables:`
//! line, then one polynomial per non-empty non-comment line. `#` starts a
//! comment.

use std::sync::Arc;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::parse::parse_poly_at;
use crate::poly::Polynomial;

/// A parsed system file: the context and the polynomial system.
#[derive(Debug, Clone)]
pub struct SystemFile {
    pub ctx: Arc<Context>,
    pub polys: Vec<Polynomial>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    }
}

fn ident_list(line_no: usize, rest: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for name in rest.split_whitespace() {
        let ok = name
            .chars()
            .enumerate()
            .all(|(i, c)| c == '_' || c.is_ascii_alphanumeric() && (i > 0 || !c.is_ascii_digit()));
        if !ok || name.is_empty() {
            return Err(parse_err(line_no, format!("invalid identifier `{name}`")));
        }
        out.push(name.to_string());
    }
    Ok(out)
}

/// Parses the text of a system file.
pub fn parse_system_str(src: &str) -> Result<SystemFile> {
    let mut params: Option<(usize, Vec<String>)> = None;
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut poly_lines: Vec<(usize, String)> = Vec::new();

    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("parameters:") {
            if params.is_some() {
                return Err(parse_err(line_no, "duplicate `parameters:` line"));
            }
            if vars.is_some() || !poly_lines.is_empty() {
                return Err(parse_err(line_no, "`parameters:` must come first"));
            }
            params = Some((line_no, ident_list(line_no, rest)?));
        } else if let Some(rest) = line.strip_prefix("variables:") {
            if vars.is_some() {
                return Err(parse_err(line_no, "duplicate `variables:` line"));
            }
            if !poly_lines.is_empty() {
                return Err(parse_err(line_no, "`variables:` must precede the polynomials"));
            }
            vars = Some((line_no, ident_list(line_no, rest)?));
        } else {
            poly_lines.push((line_no, line.to_string()));
        }
    }

    let (vline, vars) = vars.ok_or_else(|| parse_err(1, "missing `variables:` line"))?;
    if vars.is_empty() {
        return Err(parse_err(vline, "at least one variable is required"));
    }
    let params = params.map(|(_, p)| p).unwrap_or_default();
    let ctx = Context::new(params, vars);

    if poly_lines.is_empty() {
        return Err(parse_err(vline, "at least one polynomial is required"));
    }
    let mut polys = Vec::new();
    for (line_no, text) in poly_lines {
        polys.push(parse_poly_at(&text, &ctx, line_no - 1)?);
    }
    Ok(SystemFile { ctx, polys })
}

/// Reads and parses a system file from disk.
pub fn parse_system_file(path: &std::path::Path) -> Result<SystemFile> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| parse_err(1, format!("cannot read {}: {e}", path.display())))?;
    parse_system_str(&src)
}

/// Canonical text form of a system, `parse_system_str`-compatible.
pub fn format_system(sf: &SystemFile) -> String {
    let mut out = String::new();
    if sf.ctx.num_params() > 0 {
        out.push_str(&format!("parameters: {}\n", sf.ctx.params().join(" ")));
    }
    out.push_str(&format!("variables: {}\n", sf.ctx.vars().join(" ")));
    for p in &sf.polys {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
