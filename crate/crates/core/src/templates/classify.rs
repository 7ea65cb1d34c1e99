//! Triangle classes of a template, tested in order with earlier classes
//! excluded.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{Palette, Template};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleMode {
    /// T1 equal 2-palettes, T2 some palette of size at least 3, T3 sum 6,
    /// T4 sum at most 5, then a remainder.
    Complete,
    /// T1 equal 2-palettes, T2 two palettes of size at least 3 and one empty,
    /// T3 one of size at least 3 with the other two summing to at most 2,
    /// T4 sum at least 6, T5 sum at most 5.
    DenseGeneric,
    /// Four colors only. T1 equal 2-palettes, T2 some empty palette, T3 sizes
    /// 4, 1, 1, T4 sum at least 6, T5 sum at most 5.
    Dense4,
}

impl TriangleMode {
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            TriangleMode::Complete => &["T1", "T2", "T3", "T4", "remainder"],
            _ => &["T1", "T2", "T3", "T4", "T5", "remainder"],
        }
    }
}

impl fmt::Display for TriangleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleMode::Complete => "complete",
            TriangleMode::DenseGeneric => "dense-generic",
            TriangleMode::Dense4 => "dense4",
        })
    }
}

impl FromStr for TriangleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(TriangleMode::Complete),
            "dense-generic" => Ok(TriangleMode::DenseGeneric),
            "dense4" => Ok(TriangleMode::Dense4),
            other => Err(Error::InvalidInput(format!("unknown triangle mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTally {
    pub mode: TriangleMode,
    /// One count per label of [`TriangleMode::labels`], in the same order.
    pub counts: Vec<BigUint>,
}

impl TriangleTally {
    pub fn get(&self, label: &str) -> Option<&BigUint> {
        let i = self.mode.labels().iter().position(|&l| l == label)?;
        self.counts.get(i)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &BigUint)> {
        self.mode.labels().iter().copied().zip(&self.counts)
    }
}

fn equal_pairs(p: [Palette; 3]) -> bool {
    p.iter().all(|x| x.len() == 2) && p[0] == p[1] && p[1] == p[2]
}

/// Class index of one triangle.
fn class_of(mode: TriangleMode, p: [Palette; 3]) -> usize {
    let s = [p[0].len(), p[1].len(), p[2].len()];
    let sum: usize = s.iter().sum();
    let rotations = [(s[0], s[1], s[2]), (s[1], s[0], s[2]), (s[2], s[0], s[1])];
    match mode {
        TriangleMode::Complete => {
            if equal_pairs(p) {
                0
            } else if s.iter().any(|&x| x >= 3) {
                1
            } else if sum == 6 {
                2
            } else if sum <= 5 {
                3
            } else {
                4
            }
        }
        TriangleMode::DenseGeneric => {
            if equal_pairs(p) {
                0
            } else if rotations.iter().any(|&(z, a, b)| z == 0 && a >= 3 && b >= 3) {
                1
            } else if rotations.iter().any(|&(a, x, y)| a >= 3 && x + y <= 2) {
                2
            } else if sum >= 6 {
                3
            } else if sum <= 5 {
                4
            } else {
                5
            }
        }
        TriangleMode::Dense4 => {
            if equal_pairs(p) {
                0
            } else if s.contains(&0) {
                1
            } else if rotations.iter().any(|&(a, x, y)| a == 4 && x == 1 && y == 1) {
                2
            } else if sum >= 6 {
                3
            } else if sum <= 5 {
                4
            } else {
                5
            }
        }
    }
}

impl Template {
    pub fn classify_triangles(&self, mode: TriangleMode) -> Result<TriangleTally> {
        if mode == TriangleMode::Dense4 && self.r != 4 {
            return Err(Error::InvalidInput(format!(
                "dense4 mode needs r = 4, template has r = {}",
                self.r
            )));
        }
        let n = self.n;
        let classes = mode.labels().len();
        let counts = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut local = vec![0u64; classes];
                for b in a + 1..n {
                    for c in b + 1..n {
                        local[class_of(mode, [self.at(a, b), self.at(a, c), self.at(b, c)])] += 1;
                    }
                }
                local
            })
            .reduce(
                || vec![0u64; classes],
                |mut x, y| {
                    x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                    x
                },
            );
        Ok(TriangleTally {
            mode,
            counts: counts.into_iter().map(BigUint::from).collect(),
        })
    }
}
