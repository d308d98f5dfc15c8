//! CSV tables. Floats are written in scientific notation with 17 significant
//! digits so that values round-trip exactly.

use crate::error::{Error, Result};
use crate::homotopy::PathReport;
use crate::representations::CorrespondenceRow;
use crate::stime::{Lambda2Report, LeadingOrder, ResidualFit, ResidualRow};

pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        Table {
            header: header.iter().map(|h| h.as_ref().to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn path_table(report: &PathReport) -> Table {
    let with_reg = report.rows.iter().any(|r| r.regulator.is_some());
    let mut header = vec!["s", "jacobi_defect", "killing_rank", "center_dim", "distance_to_singular"];
    if with_reg {
        header.push("regulator");
    }
    let mut t = Table::new(&header);
    for r in &report.rows {
        let mut row = vec![
            num(r.s),
            num(r.jacobi_defect),
            r.killing_rank.to_string(),
            r.center_dim.to_string(),
            num(r.distance_to_singular),
        ];
        if with_reg {
            row.push(num(r.regulator.unwrap_or(0.0)));
        }
        t.push(row);
    }
    t
}

pub fn correspondence_table(rows: &[CorrespondenceRow]) -> Table {
    let mut t = Table::new(&[
        "l", "k", "delta_q", "delta_p", "err_q", "err_p", "err", "spacing", "min", "max",
    ]);
    for r in rows {
        t.push(vec![
            num(r.l),
            r.k.to_string(),
            num(r.delta_q),
            num(r.delta_p),
            num(r.err_q),
            num(r.err_p),
            num(r.err()),
            num(r.spacing),
            num(r.min),
            num(r.max),
        ]);
    }
    t
}

pub fn lambda2_table(reports: &[Lambda2Report]) -> Table {
    let mut t = Table::new(&["k", "value", "target", "ratio", "cross_term"]);
    for r in reports {
        t.push(vec![r.k.to_string(), num(r.value), num(r.target), num(r.ratio), num(r.cross_term)]);
    }
    t
}

fn order_cell(order: LeadingOrder) -> String {
    match order {
        LeadingOrder::Exact => "exact".into(),
        o => num(o.exponent()),
    }
}

pub fn residual_table(rows: &[ResidualRow]) -> Table {
    let mut t = Table::new(&["relation", "norm", "small_param", "fitted_order"]);
    for r in rows {
        t.push(vec![r.relation.clone(), num(r.norm), num(r.small_param), order_cell(r.order)]);
    }
    t
}

/// One row per sweep point; `fitted_order` is the slope over the whole sweep.
pub fn residual_fit_table(fits: &[ResidualFit]) -> Table {
    let mut t = Table::new(&["relation", "norm", "small_param", "fitted_order"]);
    for f in fits {
        let fitted = match f.order {
            LeadingOrder::Exact => "exact".to_string(),
            _ => num(f.fitted_order),
        };
        for (p, n) in f.params.iter().zip(&f.norms) {
            t.push(vec![f.relation.clone(), num(*n), num(*p), fitted.clone()]);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0] {
            let s = num(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
        assert_eq!(num(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn csv_has_header() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["1".into(), num(0.5)]);
        assert_eq!(t.to_csv().unwrap(), "a,b\n1,5.0000000000000000e-1\n");
    }
}
