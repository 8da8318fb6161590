//! `--grid n=1..6,r=1..n` parsing.

use std::ops::RangeInclusive;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Upper {
    Fixed(usize),
    /// `r` up to the current `n`.
    N,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub n: RangeInclusive<usize>,
    pub r_start: usize,
    pub r_end: Upper,
}

impl Grid {
    pub fn signatures(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for n in self.n.clone() {
            let r_end = match self.r_end {
                Upper::Fixed(e) => e,
                Upper::N => n,
            };
            for r in self.r_start..=r_end {
                out.push((n, r));
            }
        }
        out
    }
}

pub fn parse_grid(spec: &str) -> Result<Grid, String> {
    let mut n = None;
    let mut r = None;
    for part in spec.split(',') {
        let (key, range) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=a..b, got {part:?}"))?;
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| format!("expected a range a..b, got {range:?}"))?;
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo: usize = lo.trim().parse().map_err(|_| format!("bad bound {lo:?}"))?;
        match key.trim() {
            "n" => {
                let hi: usize = hi.trim().parse().map_err(|_| format!("bad bound {hi:?}"))?;
                n = Some(lo..=hi);
            }
            "r" => {
                let hi = match hi.trim() {
                    "n" => Upper::N,
                    other => {
                        Upper::Fixed(other.parse().map_err(|_| format!("bad bound {other:?}"))?)
                    }
                };
                r = Some((lo, hi));
            }
            other => return Err(format!("unknown grid key {other:?}")),
        }
    }
    let n = n.ok_or("grid needs an n range")?;
    let (r_start, r_end) = r.unwrap_or((1, Upper::N));
    Ok(Grid { n, r_start, r_end })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let grid = parse_grid("n=1..6,r=1..n").unwrap();
        assert_eq!(grid.signatures().len(), 21);
        assert_eq!(parse_grid("n=1..8").unwrap().signatures().len(), 36);
    }

    #[test]
    fn rectangle_and_errors() {
        let grid = parse_grid("n=3..4,r=2..2").unwrap();
        assert_eq!(grid.signatures(), vec![(3, 2), (4, 2)]);
        assert!(parse_grid("r=1..n").is_err());
        assert!(parse_grid("n=1-6").is_err());
        assert!(parse_grid("m=1..2").is_err());
    }
}
