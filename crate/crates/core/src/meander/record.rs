use serde::{Deserialize, Serialize};

use super::distance::{component_count_cycles, distance_bound_b};
use crate::error::Result;
use crate::nc::NcPartition;

/// Everything computed for one pair `(π, ρ)`. Partitions are in text form so
/// the same columns work for JSON and CSV.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub n: usize,
    pub pi: String,
    pub rho: String,
    pub d_h: usize,
    pub components: usize,
    pub b: usize,
    pub is_meander: bool,
}

impl PairRecord {
    pub fn new(pi: &NcPartition, rho: &NcPartition) -> Result<Self> {
        let components = component_count_cycles(pi, rho)?;
        Ok(PairRecord {
            n: pi.n(),
            pi: pi.to_string(),
            rho: rho.to_string(),
            d_h: pi.n() - components,
            components,
            b: distance_bound_b(pi, rho)?,
            is_meander: components == 1,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = PairRecord::new(&"1,2/3,4".parse().unwrap(), &"1,4/2,3".parse().unwrap()).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"n":4,"pi":"1,2/3,4","rho":"1,4/2,3","d_h":2,"components":2,"b":2,"is_meander":false}"#
        );
    }
}
