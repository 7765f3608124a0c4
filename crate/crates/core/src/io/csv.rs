//! CSV chart tables.
//!
//! The dialect is deliberately small: comma separator, no quoting, LF or
//! CR/LF line endings. Row one is a header whose first cell titles the
//! segment column (the title itself is ignored) and whose remaining cells
//! name one chart each. Every later row holds a segment label followed by
//! that segment's value in each chart:
//!
//! ```text
//! segment,Democrats,Republicans
//! A,500,567
//! B,1000,900
//! C,300,310
//! ```
//!
//! Cells are trimmed of surrounding whitespace. Values use plain decimal
//! notation with optional sign, fraction, and exponent.

use crate::chart::{labels_eq, Segment, StackedBarChart};
use crate::error::Error;
use crate::io::{ChartTable, ParseError};

fn parse_value(line: usize, column: usize, cell: &str) -> Result<f64, ParseError> {
    let bad = || ParseError::NonNumericValue {
        line,
        column,
        value: cell.to_string(),
    };
    let value: f64 = cell.parse().map_err(|_| bad())?;
    // "inf" and "NaN" satisfy f64's parser but not this format's grammar.
    if !value.is_finite() {
        return Err(bad());
    }
    Ok(value)
}

/// Parses the bytes of a CSV chart table. Column charts are validated on
/// construction, so domain problems (negative values, no data rows) surface
/// as chart errors rather than parse errors.
pub fn parse_csv(bytes: &[u8]) -> Result<ChartTable, Error> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::InvalidUtf8(e.valid_up_to()))?;

    let mut lines: Vec<&str> = text.split('\n').collect();
    if lines.last() == Some(&"") {
        lines.pop();
    }

    let header = lines.first().map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header: Vec<&str> = match header {
        Some(h) => h.split(',').map(str::trim).collect(),
        None => vec![],
    };
    if header.len() < 2 {
        return Err(ParseError::MalformedCsv {
            line: 1,
            reason: "header needs a segment column and at least one chart column".into(),
        }
        .into());
    }
    let names = &header[1..];
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(ParseError::MalformedCsv {
                line: 1,
                reason: format!("empty chart name in column {}", i + 2),
            }
            .into());
        }
    }

    let mut labels: Vec<String> = Vec::new();
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); names.len()];
    for (index, raw) in lines.iter().enumerate().skip(1) {
        let line = index + 1;
        let row = raw.strip_suffix('\r').unwrap_or(raw);
        let cells: Vec<&str> = row.split(',').map(str::trim).collect();
        if cells.len() != header.len() {
            return Err(ParseError::RaggedRow {
                line,
                expected: header.len(),
                found: cells.len(),
            }
            .into());
        }
        let label = cells[0];
        if labels.iter().any(|seen| labels_eq(seen, label)) {
            return Err(ParseError::DuplicateSegmentLabel {
                line,
                label: label.to_string(),
            }
            .into());
        }
        labels.push(label.to_string());
        for (j, cell) in cells[1..].iter().enumerate() {
            columns[j].push(parse_value(line, j + 2, cell)?);
        }
    }

    let mut charts = Vec::with_capacity(names.len());
    for (name, values) in names.iter().zip(columns) {
        let segments = labels
            .iter()
            .zip(values)
            .map(|(label, value)| Segment::new(label.clone(), value))
            .collect();
        charts.push(StackedBarChart::new(*name, segments)?);
    }
    Ok(ChartTable::new(charts)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::ChartError;

    const REFERENCE_TABLE: &str = "segment,Democrats,Republicans\nA,500,567\nB,1000,900\nC,300,310";

    #[test]
    fn parses_the_two_party_example() {
        let table = parse_csv(REFERENCE_TABLE.as_bytes()).unwrap();
        assert_eq!(table.len(), 2);
        let dem = table.get("Democrats").unwrap();
        assert_eq!(dem.to_vector(), vec![500.0, 1000.0, 300.0]);
        let rep = table.get("Republicans").unwrap();
        assert_eq!(rep.to_vector(), vec![567.0, 900.0, 310.0]);
        assert_eq!(table.labels().collect::<Vec<_>>(), ["A", "B", "C"]);
    }

    #[test]
    fn accepts_crlf_trailing_newline_and_padding() {
        let text = "segment, X , Y\r\n a ,1, 2.5 \r\nb,0,1e-3\r\n";
        let table = parse_csv(text.as_bytes()).unwrap();
        assert_eq!(table.get("X").unwrap().to_vector(), vec![1.0, 0.0]);
        assert_eq!(table.get("Y").unwrap().to_vector(), vec![2.5, 0.001]);
        assert_eq!(table.labels().collect::<Vec<_>>(), ["a", "b"]);
    }

    #[test]
    fn header_only_input_yields_empty_charts() {
        let err = parse_csv(b"segment,X,Y").unwrap_err();
        assert!(matches!(
            err,
            Error::Chart(ChartError::EmptyChart(name)) if name == "X"
        ));
    }

    #[test]
    fn non_numeric_cell_is_located() {
        let err = parse_csv(b"segment,X\na,500\nb,abc").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::NonNumericValue { line: 3, column: 2, ref value })
                if value == "abc"
        ));
    }

    #[test]
    fn non_finite_numbers_are_not_values() {
        for cell in ["inf", "-inf", "NaN", "infinity"] {
            let text = format!("segment,X\na,{cell}");
            let err = parse_csv(text.as_bytes()).unwrap_err();
            assert!(matches!(
                err,
                Error::Parse(ParseError::NonNumericValue {
                    line: 2,
                    column: 2,
                    ..
                })
            ));
        }
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let err = parse_csv(b"segment,X,Y\na,1,2\nb,3").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::RaggedRow {
                line: 3,
                expected: 3,
                found: 2
            })
        ));

        // A blank interior line is a one-cell row.
        let err = parse_csv(b"segment,X\n\na,1").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::RaggedRow {
                line: 2,
                found: 1,
                ..
            })
        ));
    }

    #[test]
    fn duplicate_labels_and_names_are_rejected() {
        let err = parse_csv(b"segment,X\na,1\n a ,2").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::DuplicateSegmentLabel { line: 3, ref label })
                if label == "a"
        ));

        let err = parse_csv(b"segment,X,X\na,1,2").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::DuplicateChartName(ref name)) if name == "X"
        ));
    }

    #[test]
    fn malformed_headers_are_rejected() {
        for text in ["", "segment", "justonecell\na,1"] {
            let err = parse_csv(text.as_bytes()).unwrap_err();
            assert!(matches!(
                err,
                Error::Parse(ParseError::MalformedCsv { line: 1, .. })
            ));
        }
        let err = parse_csv(b"segment,X,\na,1,2").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse(ParseError::MalformedCsv { line: 1, ref reason })
                if reason.contains("column 3")
        ));
    }

    #[test]
    fn invalid_utf8_reports_the_offset() {
        let err = parse_csv(b"segment,X\na,\xff1").unwrap_err();
        assert!(matches!(err, Error::Parse(ParseError::InvalidUtf8(12))));
    }

    #[test]
    fn negative_values_fail_chart_validation_not_parsing() {
        let err = parse_csv(b"segment,X\na,-1").unwrap_err();
        assert!(matches!(
            err,
            Error::Chart(ChartError::NegativeValue { .. })
        ));
    }
}
