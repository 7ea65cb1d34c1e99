//! Plain-text template format.
//!
//! ```text
//! # comment
//! 3 3
//! 0 1 011
//! 0 2 110
//! 1 2 101
//! ```
//!
//! The header is `n r`; each following line is a pair `u v` and an `r`-digit
//! bitstring whose leftmost digit is color `r` and rightmost is color 1. Every
//! pair of `[n]` appears exactly once, in any order.

use std::fmt::Write as _;

use super::{Palette, Template};
use crate::error::{Error, Result};
use crate::graph::{all_pairs, edge_index, pair_count};

impl Template {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.r);
        for (e, p) in all_pairs(self.n).zip(&self.palettes) {
            writeln!(out, "{} {} {:0width$b}", e.u, e.v, p.mask(), width = self.r).unwrap();
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Template> {
        let mut offset = 0;
        let mut header: Option<(usize, usize)> = None;
        let mut palettes: Vec<Option<Palette>> = Vec::new();
        for line in text.split_inclusive('\n') {
            let at = offset;
            offset += line.len();
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let number = |s: &str| s.parse::<usize>().map_err(|e| Error::parse(at, format!("`{s}`: {e}")));
            let Some((n, r)) = header else {
                if fields.len() != 2 {
                    return Err(Error::parse(at, "expected header `n r`"));
                }
                let (n, r) = (number(fields[0])?, number(fields[1])?);
                if n == 0 || r == 0 || r > 16 {
                    return Err(Error::parse(at, format!("unsupported template shape n={n}, r={r}")));
                }
                header = Some((n, r));
                palettes = vec![None; pair_count(n)];
                continue;
            };
            if fields.len() != 3 {
                return Err(Error::parse(at, "expected `u v bits`"));
            }
            let (u, v) = (number(fields[0])?, number(fields[1])?);
            if u == v || u >= n || v >= n {
                return Err(Error::parse(at, format!("pair {u} {v} is not a pair of [{n}]")));
            }
            let bits = fields[2];
            if bits.len() != r || !bits.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(Error::parse(
                    at,
                    format!("palette must be {r} binary digits, got `{bits}`"),
                ));
            }
            let mask = u16::from_str_radix(bits, 2).expect("validated binary digits");
            let slot = &mut palettes[edge_index(n, u.min(v), u.max(v))];
            if slot.is_some() {
                return Err(Error::parse(at, format!("pair {u} {v} listed twice")));
            }
            *slot = Some(Palette::from_mask(mask));
        }
        let (n, r) = header.ok_or_else(|| Error::parse(0, "missing `n r` header"))?;
        let missing = palettes.iter().filter(|p| p.is_none()).count();
        if missing > 0 {
            return Err(Error::parse(offset, format!("{missing} pairs have no palette")));
        }
        Template::new(n, r, palettes.into_iter().map(Option::unwrap).collect())
    }
}
