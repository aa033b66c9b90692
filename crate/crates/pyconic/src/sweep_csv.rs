use std::io::Write;

use pyconic_core::SweepRow;

use crate::number::sig17;

pub const HEADER: [&str; 8] = ["e", "k", "feasible", "c1", "c2", "c3", "residual", "g"];

/// Writes sweep rows as CSV; infeasible rows leave the numeric columns empty.
pub fn write_sweep<W: Write>(rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        let mut record = vec![sig17(row.e), sig17(row.k), row.feasible().to_string()];
        match row.values {
            Some(v) => record.extend([v.c1, v.c2, v.c3, v.residual, v.g].map(sig17)),
            None => record.extend(std::iter::repeat_n(String::new(), 5)),
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyconic_core::{make_right_triangle, sweep, QuadratureSettings};

    #[test]
    fn infeasible_rows_are_blank() {
        let tri = make_right_triangle(3.0, 4.0).unwrap();
        let rows = sweep(&tri, &[2.0], &[3.0, 4.0], &QuadratureSettings::default()).unwrap();
        let mut buf = Vec::new();
        write_sweep(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "e,k,feasible,c1,c2,c3,residual,g");
        assert_eq!(lines[1], "2,3,false,,,,,");
        assert!(lines[2].starts_with("2,4,true,"));
        assert_eq!(lines[2].split(',').count(), 8);
        assert_eq!(lines.len(), 3);
    }
}
