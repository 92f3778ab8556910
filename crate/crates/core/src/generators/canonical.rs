//! Three hand-built balls: `L7`, `L8` and `L11`, triangulating the cyclic
//! polytopes `C(7,3)`, `C(8,3)` and `C(11,5)` with an "all odd labels" facet.

use sha2::{Digest, Sha256};

use crate::complex::PureComplex;
use crate::facet::{FacetSet, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CanonicalBall {
    L7,
    L8,
    L11,
}

const L7: &[[Label; 4]] = &[[1, 2, 3, 7], [1, 3, 4, 5], [1, 3, 5, 7], [3, 4, 5, 7], [1, 5, 6, 7]];

// Printed shelling order.
const L8: &[[Label; 4]] = &[
    [2, 5, 3, 7],
    [2, 5, 7, 6],
    [2, 5, 6, 4],
    [2, 5, 4, 3],
    [1, 2, 3, 7],
    [2, 6, 7, 8],
    [1, 2, 7, 8],
    [1, 3, 5, 7],
    [2, 4, 6, 8],
    [1, 5, 6, 7],
    [2, 3, 4, 8],
    [1, 3, 4, 5],
    [4, 5, 6, 8],
];

// Printed shelling order.
const L11: &[[Label; 6]] = &[
    [1, 2, 3, 4, 5, 11],
    [1, 2, 3, 5, 7, 11],
    [2, 3, 5, 6, 7, 11],
    [1, 2, 3, 5, 6, 7],
    [1, 2, 3, 7, 9, 11],
    [1, 2, 7, 8, 9, 11],
    [1, 3, 4, 5, 10, 11],
    [1, 2, 5, 6, 7, 11],
    [1, 3, 5, 7, 9, 11],
    [1, 3, 5, 9, 10, 11],
    [1, 5, 7, 9, 10, 11],
    [1, 5, 6, 7, 10, 11],
    [1, 5, 6, 7, 9, 10],
    [1, 7, 8, 9, 10, 11],
    [3, 4, 5, 9, 10, 11],
    [3, 4, 5, 7, 9, 11],
    [5, 6, 7, 9, 10, 11],
    [3, 4, 5, 6, 7, 11],
    [1, 2, 3, 9, 10, 11],
    [1, 3, 4, 5, 9, 10],
    [1, 2, 3, 7, 8, 9],
    [1, 3, 5, 7, 8, 9],
    [3, 4, 5, 7, 8, 9],
    [1, 3, 4, 5, 8, 9],
    [2, 3, 7, 8, 9, 11],
    [1, 5, 6, 7, 8, 9],
    [1, 3, 4, 5, 7, 8],
    [1, 3, 4, 5, 6, 7],
    [3, 4, 7, 8, 9, 11],
    [4, 5, 7, 8, 9, 11],
    [5, 6, 7, 8, 9, 11],
];

const L7_SHA256: &str = "c50eaa7ba9741edd262fe487654321f6c2b5ed6c5dddfd8b5623a64a9ee56518";
const L8_SHA256: &str = "df557eb3bd1857029690f8cb0126933d8821f9611ed20c6ceaa4b68b4fadfc27";
const L11_SHA256: &str = "59d38c8bd303f7c515c9ddfd0423a72e231b0a2ca8639b81a53ce8aa28e9e57d";

impl CanonicalBall {
    pub const ALL: [CanonicalBall; 3] = [CanonicalBall::L7, CanonicalBall::L8, CanonicalBall::L11];

    pub fn name(self) -> &'static str {
        match self {
            CanonicalBall::L7 => "L7",
            CanonicalBall::L8 => "L8",
            CanonicalBall::L11 => "L11",
        }
    }

    /// Number of vertices, which is also the period of the block replacement.
    pub fn n(self) -> Label {
        match self {
            CanonicalBall::L7 => 7,
            CanonicalBall::L8 => 8,
            CanonicalBall::L11 => 11,
        }
    }

    /// Dimension of the ball.
    pub fn dim(self) -> usize {
        match self {
            CanonicalBall::L7 | CanonicalBall::L8 => 3,
            CanonicalBall::L11 => 5,
        }
    }

    /// Facets in the order they are listed; for `L8` and `L11` this is a shelling.
    pub fn listed_order(self) -> Vec<FacetSet> {
        match self {
            CanonicalBall::L7 => L7.iter().map(|f| FacetSet::from(*f)).collect(),
            CanonicalBall::L8 => L8.iter().map(|f| FacetSet::from(*f)).collect(),
            CanonicalBall::L11 => L11.iter().map(|f| FacetSet::from(*f)).collect(),
        }
    }

    pub fn complex(self) -> PureComplex {
        PureComplex::from_facets(self.n(), self.listed_order()).expect("embedded ball is valid")
    }

    /// The SHA-256 recorded for the embedded facet list; see [`facet_checksum`].
    pub fn expected_checksum(self) -> &'static str {
        match self {
            CanonicalBall::L7 => L7_SHA256,
            CanonicalBall::L8 => L8_SHA256,
            CanonicalBall::L11 => L11_SHA256,
        }
    }
}

/// SHA-256 over the sorted facet list, one facet per line, labels separated
/// by single spaces, each line ending in `\n`.
pub fn facet_checksum(c: &PureComplex) -> String {
    let mut h = Sha256::new();
    for f in c.facets() {
        let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        h.update(line.join(" ").as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn canonical_ball(which: CanonicalBall) -> PureComplex {
    which.complex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facet::fs;

    #[test]
    fn checksums_match_embedded_data() {
        for b in CanonicalBall::ALL {
            assert_eq!(facet_checksum(&b.complex()), b.expected_checksum(), "{}", b.name());
        }
    }

    #[test]
    fn sizes_and_marker_facets() {
        let l7 = CanonicalBall::L7.complex();
        assert_eq!(l7.num_facets(), 5);
        let l8 = CanonicalBall::L8.complex();
        assert_eq!(l8.num_facets(), 13);
        assert!(l8.contains_facet(&fs(&[1, 3, 5, 7])) && l8.contains_facet(&fs(&[2, 4, 6, 8])));
        let l11 = CanonicalBall::L11.complex();
        assert_eq!(l11.num_facets(), 31);
        assert!(l11.contains_facet(&fs(&[1, 3, 5, 7, 9, 11])));
        assert_eq!(l11.d(), 6);
    }
}
