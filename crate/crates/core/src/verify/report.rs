use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Ok,
    /// Rank below the series coefficient.
    Deficient,
    /// Rank above the series coefficient: the series or the data is wrong.
    Exceeds,
}

impl Status {
    pub fn compare(rank: u64, expected: u64) -> Status {
        match rank.cmp(&expected) {
            std::cmp::Ordering::Equal => Status::Ok,
            std::cmp::Ordering::Less => Status::Deficient,
            std::cmp::Ordering::Greater => Status::Exceeds,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Deficient => "DEFICIENT",
            Status::Exceeds => "EXCEEDS",
        }
    }
}

/// One homogeneous component.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeRow {
    pub degree: Vec<u32>,
    pub expected: u64,
    pub columns: usize,
    pub rank: usize,
    /// expected − rank of the decomposable products.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub new_needed: Option<u64>,
    /// Shipped generators of exactly this degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    pub gap: i64,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RemovalRow {
    /// 1-based position in the word list.
    pub generator: usize,
    pub word: String,
    pub degree: Vec<u32>,
    pub expected: u64,
    pub rank_without: usize,
    pub needed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GradedReport {
    pub check: String,
    /// "multidegree" or "total".
    pub grading: String,
    pub rows: Vec<DegreeRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub removals: Vec<RemovalRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub ok: bool,
}

impl GradedReport {
    pub fn deficient(&self) -> impl Iterator<Item = &DegreeRow> {
        self.rows.iter().filter(|r| r.status != Status::Ok)
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["degree", "expected", "columns", "rank", "new", "gens", "status"]);
        for r in &self.rows {
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            t.push(vec![
                fmt_degree(&r.degree),
                r.expected.to_string(),
                r.columns.to_string(),
                r.rank.to_string(),
                opt(r.new_needed.map(|v| v.to_string())),
                opt(r.generators.map(|v| v.to_string())),
                if r.status == Status::Ok { "OK".into() } else { format!("{} gap {}", r.status.label(), r.gap) },
            ]);
        }
        t
    }

    pub fn text(&self) -> String {
        let mut s = format!("{} ({} grading)\n", self.check, self.grading);
        s += &self.table().text();
        if !self.removals.is_empty() {
            let mut t = Table::new(&["removed", "word", "degree", "rank", "expected", "needed"]);
            for r in &self.removals {
                t.push(vec![
                    r.generator.to_string(),
                    r.word.clone(),
                    fmt_degree(&r.degree),
                    r.rank_without.to_string(),
                    r.expected.to_string(),
                    if r.needed { "yes".into() } else { "NO".into() },
                ]);
            }
            s += "minimality\n";
            s += &t.text();
        }
        for n in &self.notes {
            s += &format!("note: {n}\n");
        }
        s += if self.ok { "result: OK\n" } else { "result: FAILED\n" };
        s
    }
}

pub fn fmt_degree(d: &[u32]) -> String {
    if d.len() == 1 {
        d[0].to_string()
    } else {
        format!("({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Aligned text or CSV.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn text(&self) -> String {
        let mut w: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (i, c) in r.iter().enumerate() {
                w[i] = w[i].max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let parts: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{:>width$}", c, width = w[i])).collect();
            parts.join("  ").trim_end().to_string() + "\n"
        };
        let mut s = line(&self.headers);
        for r in &self.rows {
            s += &line(r);
        }
        s
    }

    pub fn csv(&self) -> String {
        let esc = |c: &String| if c.contains(',') || c.contains('"') { format!("\"{}\"", c.replace('"', "\"\"")) } else { c.clone() };
        let mut s = self.headers.iter().map(esc).collect::<Vec<_>>().join(",") + "\n";
        for r in &self.rows {
            s += &(r.iter().map(esc).collect::<Vec<_>>().join(",") + "\n");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rendering() {
        let mut t = Table::new(&["a", "bb"]);
        t.push(vec!["(1,2)".into(), "3".into()]);
        assert_eq!(t.text(), "    a  bb\n(1,2)   3\n");
        assert_eq!(t.csv(), "a,bb\n\"(1,2)\",3\n");
        assert_eq!(Status::compare(3, 4), Status::Deficient);
        assert_eq!(fmt_degree(&[2, 2]), "(2,2)");
    }
}
