//! The rings every check runs over.

use ringlab_core::RingSpec;

use crate::error::{HarnessError, Result};

pub const DEFAULT_CATALOG: [&str; 17] = [
    "Z(4)",
    "Z(6)",
    "GF(2)",
    "GF(3)",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "M(2,GF(2))",
    "M(2,GF(3))",
    "M(2,GF(4))",
    "M(2,Z(4))",
    "M(3,GF(2))",
    "UT(2,GF(2))",
    "UT(2,GF(3))",
    "prod(M(2,GF(2)),GF(2))",
    "prod(GF(2),M(2,GF(2)),M(2,GF(3)))",
    "M(2,FF(2))",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub rings: Vec<RingSpec>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::from_specs(DEFAULT_CATALOG).expect("default catalog parses")
    }
}

impl Catalog {
    /// Parses every spec and builds it once so that a bad entry is
    /// reported up front. Duplicates are dropped.
    pub fn from_specs<S: AsRef<str>>(specs: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut rings: Vec<RingSpec> = Vec::new();
        for s in specs {
            let s = s.as_ref().trim();
            let spec: RingSpec = s
                .parse()
                .map_err(|e| HarnessError::Catalog(format!("`{s}`: {e}")))?;
            ringlab_core::build_ring(&spec)
                .map_err(|e| HarnessError::Catalog(format!("`{s}`: {e}")))?;
            if !rings.contains(&spec) {
                rings.push(spec);
            }
        }
        if rings.is_empty() {
            return Err(HarnessError::Catalog("no rings".into()));
        }
        Ok(Catalog { rings })
    }

    /// Accepts a JSON array of spec strings, or one spec per line with `#`
    /// comments.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('[') {
            let specs: Vec<String> = serde_json::from_str(text)
                .map_err(|e| HarnessError::Catalog(e.to_string()))?;
            return Catalog::from_specs(specs);
        }
        Catalog::from_specs(
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty()),
        )
    }

    pub fn spec_strings(&self) -> Vec<String> {
        self.rings.iter().map(|r| r.to_string()).collect()
    }

    pub fn contains(&self, spec: &str) -> bool {
        spec.parse::<RingSpec>().is_ok_and(|s| self.rings.contains(&s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_builds() {
        let c = Catalog::default();
        assert_eq!(c.rings.len(), 17);
        assert!(c.contains("M(2, GF(2))"));
    }

    #[test]
    fn parse_formats() {
        let a = Catalog::parse("[\"Z(4)\", \"GF(2)\"]").unwrap();
        let b = Catalog::parse("Z(4)  # not reduced\n\nGF(2)\nZ(4)\n").unwrap();
        assert_eq!(a, b);
        assert!(Catalog::parse("Z(1)").is_err());
        assert!(Catalog::parse("# nothing").is_err());
    }
}
