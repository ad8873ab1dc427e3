//! Tab-separated reports with fixed number formatting.

use conservative::Act;

/// Six significant digits, trailing zeros dropped, exponent form only for
/// very large or very small magnitudes.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..6).contains(&exp) {
        return format!("{}e{exp}", trim(mantissa));
    }
    let decimals = (5 - exp).max(0) as usize;
    trim(&format!("{x:.decimals$}")).to_string()
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn act(a: &Act) -> String {
    let parts: Vec<String> = a.outcomes().iter().map(|&x| num(x)).collect();
    format!("[{}]", parts.join(","))
}

/// A header row plus data rows, optionally preceded by `#` comment lines.
#[derive(Debug, Clone, Default)]
pub struct Table {
    comments: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<I, S>(header: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let row: Vec<String> = cells.into_iter().map(Into::into).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.header.join("\t"));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join("\t"));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(num(0.7125), "0.7125");
        assert_eq!(num(2.0 / 3.0), "0.666667");
        assert_eq!(num(0.1 + 0.2), "0.3");
        assert_eq!(num(1.0), "1");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(123456.7), "123457");
        assert_eq!(num(1234567.0), "1.23457e6");
        assert_eq!(num(0.000012345678), "0.0000123457");
        assert_eq!(num(0.0000012), "1.2e-6");
        assert_eq!(num(0.00012345678), "0.000123457");
        assert_eq!(num(-0.5), "-0.5");
        assert_eq!(num(0.9999999), "1");
    }

    #[test]
    fn tables_are_tab_separated() {
        let mut t = Table::new(["a", "b"]).comment("note");
        t.row(["1", "2"]);
        assert_eq!(t.render(), "# note\na\tb\n1\t2\n");
    }
}
