use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::Result;
use crate::topology::{is_connected, FiniteTopology};

use super::{Origin, SoftBitopSpace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedConnectedness {
    /// Connectedness of the induced topology, via its components.
    pub connected: bool,
    /// The component of the first soft element, when disconnected.
    pub clopen: Option<SubsetBits>,
    /// No proper nonempty open set has an open complement, found by listing
    /// the open sets. `None` when there are more than the cap.
    pub clopen_free: Option<bool>,
}

impl InducedConnectedness {
    pub fn of(tau: &FiniteTopology, cap_opens: usize) -> Self {
        let report = is_connected(tau);
        let n = tau.size();
        let full = SubsetBits::full(n);
        let clopen_free = tau.opens(cap_opens).ok().map(|opens| {
            !opens
                .iter()
                .any(|t| !t.is_empty() && *t != full && tau.is_open(&t.complement(n)))
        });
        Self {
            connected: report.holds,
            clopen: report.witness,
            clopen_free,
        }
    }

    /// Connected exactly when no proper clopen exists, where both were found.
    pub fn agrees(&self) -> bool {
        self.clopen_free.is_none_or(|c| c == self.connected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiConnectedReport {
    pub holds: bool,
    pub first: InducedConnectedness,
    pub second: InducedConnectedness,
}

/// Both induced spaces on `SE(F)` connected. `cap_opens` bounds only the
/// open-set listing used for the clopen cross-check.
pub fn bi_soft_connected(space: &SoftBitopSpace, cap_opens: usize) -> Result<BiConnectedReport> {
    let index = space.index();
    let first =
        InducedConnectedness::of(&space.tau(Origin::Tau1).induced_topology(index)?, cap_opens);
    let second =
        InducedConnectedness::of(&space.tau(Origin::Tau2).induced_topology(index)?, cap_opens);
    Ok(BiConnectedReport {
        holds: first.connected && second.connected,
        first,
        second,
    })
}
