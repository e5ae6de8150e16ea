use std::fmt;

use num_rational::Ratio;

use super::OrderError;
use crate::sequence::DegreeSequence;

/// A vertex of a Lorenz curve, both coordinates exact fractions in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LorenzPoint {
    pub x: Ratio<u64>,
    pub y: Ratio<u64>,
}

fn frac(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl LorenzPoint {
    /// Both coordinates as `p/q` strings, integers included (`1/1`).
    pub fn as_fractions(&self) -> [String; 2] {
        [frac(&self.x), frac(&self.y)]
    }
}

impl fmt::Display for LorenzPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", frac(&self.x), frac(&self.y))
    }
}

/// Polygonal curve through `(k/N, S_k / S_N)` for `k = 0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorenzCurve {
    points: Vec<LorenzPoint>,
}

impl LorenzCurve {
    pub fn points(&self) -> &[LorenzPoint] {
        &self.points
    }

    pub fn ordinates(&self) -> Vec<Ratio<u64>> {
        self.points.iter().map(|p| p.y).collect()
    }

    /// CSV with header `x,y`, fractions rendered as `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for p in &self.points {
            out.push_str(&format!("{},{}\n", frac(&p.x), frac(&p.y)));
        }
        out
    }
}

pub fn lorenz_curve(x: &DegreeSequence) -> Result<LorenzCurve, OrderError> {
    let total = x.sum() as u64;
    if total == 0 {
        return Err(OrderError::ZeroSum);
    }
    let n = x.len() as u64;
    let points = x
        .prefix_sums()
        .into_iter()
        .enumerate()
        .map(|(k, s)| LorenzPoint {
            x: Ratio::new(k as u64, n),
            y: Ratio::new(s as u64, total),
        })
        .collect();
    Ok(LorenzCurve { points })
}

/// Points `(j, S_j)` for `j = 0..=N`.
pub fn nonnormalized_lorenz_points(x: &DegreeSequence) -> Vec<(usize, usize)> {
    x.prefix_sums().into_iter().enumerate().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::seq;

    #[test]
    fn star_curve() {
        let c = lorenz_curve(&seq(&[4, 1, 1, 1, 1])).unwrap();
        let expected: Vec<Ratio<u64>> = [0, 4, 5, 6, 7, 8].iter().map(|&s| Ratio::new(s, 8)).collect();
        assert_eq!(c.ordinates(), expected);
        assert_eq!(c.points()[1].to_string(), "(1/5, 1/2)");
        assert_eq!(c.points()[5].to_string(), "(1/1, 1/1)");
    }

    #[test]
    fn constant_is_diagonal() {
        let c = lorenz_curve(&seq(&[3, 3, 3, 3])).unwrap();
        assert!(c.points().iter().all(|p| p.x == p.y));
        assert!(c.to_csv().starts_with("x,y\n0/1,0/1\n1/4,1/4\n"));
    }

    #[test]
    fn zero_sum_rejected() {
        assert_eq!(lorenz_curve(&seq(&[0, 0])), Err(OrderError::ZeroSum));
    }

    #[test]
    fn nonnormalized() {
        assert_eq!(nonnormalized_lorenz_points(&seq(&[2, 1, 1])), vec![(0, 0), (1, 2), (2, 3), (3, 4)]);
        assert!(nonnormalized_lorenz_points(&seq(&[0, 0, 0])).iter().all(|&(_, s)| s == 0));
        assert_eq!(*nonnormalized_lorenz_points(&seq(&[5, 2])).last().unwrap(), (2, 7));
    }
}
