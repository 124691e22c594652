//! Flag parsing helpers shared by the subcommands.

use tropgeo::amoeba::{GridSpec, Scaling, Window};
use tropgeo::ratio::parse_rat;
use tropgeo::Rat;

pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>, String> {
    s.split(',')
        .map(|x| parse_rat(x).map_err(|e| e.to_string()))
        .collect()
}

pub fn parse_int_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string()))
        .collect()
}

pub fn parse_float_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| e.to_string()))
        .collect()
}

/// `x0,x1` for one dimension or `x0,x1,y0,y1` for two.
pub fn parse_window(s: &str) -> Result<Window, String> {
    let vals = parse_float_list(s)?;
    let (lo, hi) = match vals.as_slice() {
        [x0, x1] => (vec![*x0], vec![*x1]),
        [x0, x1, y0, y1] => (vec![*x0, *y0], vec![*x1, *y1]),
        _ => return Err("window must be x0,x1 or x0,x1,y0,y1".into()),
    };
    Window::new(lo, hi).map_err(|e| e.to_string())
}

/// `M,K`: moduli and argument counts.
pub fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let vals = parse_int_list(s)?;
    match vals.as_slice() {
        [m, k] if *m > 0 && *k > 0 => Ok(GridSpec {
            moduli: *m as usize,
            arguments: *k as usize,
        }),
        _ => Err("grid must be M,K with positive counts".into()),
    }
}

pub fn parse_scaling(s: &str) -> Result<Scaling, String> {
    match s {
        "minplus" => Ok(Scaling::MinPlus),
        "paper" => Ok(Scaling::Paper),
        other => Err(format!("unknown scaling {other:?} (minplus|paper)")),
    }
}

/// Fixed-width scientific formatting with 12 significant digits, for
/// byte-stable CSV bodies.
pub fn fmt_sig(x: f64) -> String {
    format!("{:.11e}", x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_forms() {
        assert_eq!(parse_window("-2,2").unwrap().dim(), 1);
        let w = parse_window("-2,2,-1,1").unwrap();
        assert_eq!(w.lo, vec![-2.0, -1.0]);
        assert_eq!(w.hi, vec![2.0, 1.0]);
        assert!(parse_window("1,2,3").is_err());
    }

    #[test]
    fn stable_formatting() {
        assert_eq!(fmt_sig(0.01), "1.00000000000e-2");
        assert_eq!(fmt_sig(123.456), "1.23456000000e2");
    }
}
