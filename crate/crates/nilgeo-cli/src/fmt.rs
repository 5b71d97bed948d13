//! Number, vector and table formatting for the reports.
//!
//! Numbers are printed to 12 significant digits with no locale dependence
//! and `-0` normalized to `0`, so repeated runs produce byte-identical
//! output. The JSON reports carry full-precision values; tables round.

/// 12-significant-digit rendering of a real number.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("exp format round-trips");
    if rounded == 0.0 {
        return "0".to_string();
    }
    let s = format!("{rounded}");
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// Renders a component vector as a combination of basis vectors,
/// e.g. `0.5 e5`, `-0.5 e2 + 0.1 e3`, or `0`.
pub fn combo(v: &[f64]) -> String {
    let mut out = String::new();
    for (idx, &c) in v.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        if out.is_empty() {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        out.push_str(&format_real(c.abs()));
        out.push_str(" e");
        out.push_str(&(idx + 1).to_string());
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Comma-separated component list, matching the command-line input syntax.
pub fn csv(v: &[f64]) -> String {
    v.iter()
        .map(|&x| format_real(x))
        .collect::<Vec<_>>()
        .join(",")
}

/// Left-aligned table: a header row and labeled rows, columns padded two
/// spaces apart.
pub fn table(corner: &str, header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let cols = header.len();
    let mut widths = vec![corner.len()];
    widths.extend(header.iter().map(|h| h.len()));
    for (label, cells) in rows {
        widths[0] = widths[0].max(label.len());
        for (c, cell) in cells.iter().enumerate() {
            widths[c + 1] = widths[c + 1].max(cell.len());
        }
    }
    let mut out = String::new();
    let push_row = |label: &str, cells: &[String], out: &mut String| {
        out.push_str(&format!("{label:<w$}", w = widths[0]));
        for c in 0..cols {
            let cell = cells.get(c).map(String::as_str).unwrap_or("");
            out.push_str("  ");
            out.push_str(&format!("{cell:<w$}", w = widths[c + 1]));
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    push_row(corner, header, &mut out);
    for (label, cells) in rows {
        push_row(label, cells, &mut out);
    }
    out
}

/// Parses a comma-separated vector of reals.
pub fn parse_vector(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| format!("invalid vector component {part:?}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(-0.0), "0");
        assert_eq!(format_real(-2.5), "-2.5");
        assert_eq!(format_real(0.1 + 0.2), "0.3");
        assert_eq!(format_real(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_real(-6.5), "-6.5");
    }

    #[test]
    fn combo_formatting() {
        assert_eq!(combo(&[0.0, 0.0]), "0");
        assert_eq!(combo(&[0.0, 0.5, 0.0, 0.0, 0.0]), "0.5 e2");
        assert_eq!(combo(&[-0.5, 0.0, 0.25]), "-0.5 e1 + 0.25 e3");
        assert_eq!(combo(&[1.0, -2.0]), "1 e1 - 2 e2");
    }

    #[test]
    fn vector_parsing() {
        assert_eq!(parse_vector("1,0,-0.5").unwrap(), vec![1.0, 0.0, -0.5]);
        assert_eq!(parse_vector(" 1 , 2 ").unwrap(), vec![1.0, 2.0]);
        assert!(parse_vector("1,x").is_err());
    }
}
