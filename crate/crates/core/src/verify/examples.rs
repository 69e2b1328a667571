//! The two worked examples: a genus-7 curve (`a = 3`, plane model with 8
//! nodes) and a genus-9 curve (`a = 4`, space curve with 43 4-secant lines).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{Formulas, Standard};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    Genus7,
    Genus9,
}

impl Example {
    pub const ALL: [Example; 2] = [Example::Genus7, Example::Genus9];

    pub fn a(self) -> u64 {
        match self {
            Example::Genus7 => 3,
            Example::Genus9 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Example::Genus7 => "genus7",
            Example::Genus9 => "genus9",
        }
    }

    /// The published values, in comparison order.
    fn expected(self) -> &'static [(&'static str, &'static str)] {
        match self {
            Example::Genus7 => &[
                ("exponent", "5"),
                ("deg_gamma", "8"),
                ("alpha", "5"),
                ("beta", "-4"),
                ("m", "40"),
                ("secant_sum", "M^4 ω^-1"),
            ],
            Example::Genus9 => &[
                ("genus_W", "169"),
                ("exponent", "14"),
                ("deg_gamma", "43"),
                ("alpha", "21"),
                ("beta", "-13"),
                ("secant_sum", "M^30 ω^-8"),
            ],
        }
    }
}

impl FromStr for Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Example::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::UnknownExampleName {
                name: s.to_string(),
            })
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleRow {
    pub label: &'static str,
    pub computed: String,
    pub expected: String,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Recomputes every quantity quoted in the named example and pairs it with
/// the published value.
pub fn reproduce_example(name: &str) -> Result<Vec<ExampleRow>> {
    reproduce_with(&Standard, name.parse()?)
}

pub fn reproduce_with(f: &dyn Formulas, example: Example) -> Result<Vec<ExampleRow>> {
    let a = example.a();
    example
        .expected()
        .iter()
        .map(|&(label, expected)| {
            let computed = match label {
                "genus_W" => f.genus_w(a)?.to_string(),
                "exponent" => f.exponent(a).to_string(),
                "deg_gamma" => f.deg_gamma_sum(a)?.to_string(),
                "alpha" => f.alpha(a)?.to_string(),
                "beta" => f.beta(a).to_string(),
                "m" => f.total_degree_m(a)?.to_string(),
                "secant_sum" => f.secant_sum_class(a)?.to_string(),
                other => unreachable!("no computation for {other}"),
            };
            Ok(ExampleRow {
                label,
                matched: computed == expected,
                computed,
                expected: expected.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_examples_match() {
        for ex in Example::ALL {
            let rows = reproduce_example(ex.name()).unwrap();
            assert_eq!(rows.len(), 6);
            for r in rows {
                assert!(
                    r.matched,
                    "{ex}: {} computed {} expected {}",
                    r.label, r.computed, r.expected
                );
            }
        }
    }

    #[test]
    fn unknown_example() {
        assert_eq!(
            reproduce_example("genus8"),
            Err(Error::UnknownExampleName {
                name: "genus8".into()
            })
        );
    }

    #[test]
    fn mutation_shows_up_in_examples() {
        let rows = reproduce_with(&crate::verify::mutation::BetaOffByOne, Example::Genus9).unwrap();
        let beta = rows.iter().find(|r| r.label == "beta").unwrap();
        assert!(!beta.matched);
        assert_eq!(beta.computed, "-12");
    }
}
