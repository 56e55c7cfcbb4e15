use delpezzo::record::{ReportRecord, CSV_HEADER};

/// Right-aligned columns separated by two spaces. Empty cells print as `-`.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len().max(1));
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        cells
            .zip(&widths)
            .map(|(c, &w)| format!("{:>w$}", if c.is_empty() { "-" } else { c }))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = line(&mut header.iter().copied());
    out.push('\n');
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
        out.push('\n');
    }
    out
}

pub fn report_table(records: &[ReportRecord]) -> String {
    let header: Vec<&str> = CSV_HEADER.split(',').collect();
    let rows: Vec<Vec<String>> = records.iter().map(ReportRecord::cells).collect();
    table(&header, &rows)
}

pub fn report_csv(records: &[ReportRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Vertical `key: value` listing of a single report.
pub fn report_details(r: &ReportRecord) -> String {
    let header: Vec<&str> = CSV_HEADER.split(',').collect();
    let cells = r.cells();
    let width = header.iter().map(|h| h.len()).max().unwrap_or(0);
    header
        .iter()
        .zip(&cells)
        .map(|(h, c)| format!("{h:<width$}  {}\n", if c.is_empty() { "-" } else { c }))
        .collect()
}
