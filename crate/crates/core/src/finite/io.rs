//! CSV readers for point clouds and distance matrices (no header row).

use std::io::Read;

use crate::error::Error;

fn read_rows<R: Read>(reader: R) -> Result<Vec<Vec<f64>>, Error> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut rows = Vec::new();
    for (line, record) in csv.records().enumerate() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        let parsed = record
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("row {}: not a number: {f:?}", line + 1)))
            })
            .collect::<Result<Vec<_>, _>>();
        let row = match parsed {
            Ok(row) => row,
            // A leading row with no numeric fields is a header.
            Err(_) if line == 0 && record.iter().all(|f| f.parse::<f64>().is_err()) => continue,
            Err(e) => return Err(e),
        };
        if !row.is_empty() {
            rows.push(row);
        }
    }
    Ok(rows)
}

/// One point per row, coordinates as decimal columns.
pub fn read_points_csv<R: Read>(reader: R) -> Result<Vec<Vec<f64>>, Error> {
    read_rows(reader)
}

/// A square distance matrix.
pub fn read_distance_csv<R: Read>(reader: R) -> Result<Vec<Vec<f64>>, Error> {
    read_rows(reader)
}
