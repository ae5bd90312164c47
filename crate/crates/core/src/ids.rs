//! Identifier newtypes shared across the simulator.
//!
//! Everything that names a domain object gets its own type so that a
//! process id can never be confused with an account id or a coin id.
//! All ids are `Ord` so collections iterate deterministically.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A participant of the simulation (user and/or validator).
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct ProcessId(pub u32);

impl fmt::Display for ProcessId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.0)
    }
}

/// Unique identifier of a childchain instance, minted at creation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlId(pub u64);

impl fmt::Display for PlId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plid{}", self.0)
    }
}

/// Which ledger an account or output lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ChainId {
    /// The parentchain.
    Parent,
    /// A childchain, keyed by its creation id.
    Child(PlId),
}

impl fmt::Display for ChainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainId::Parent => write!(f, "omega"),
            ChainId::Child(plid) => write!(f, "psi:{}", plid.0),
        }
    }
}

/// A coin identity. Coins keep their id when they move between chains,
/// so cross-ledger provenance stays checkable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoinId(pub u64);

impl fmt::Display for CoinId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// Base identifier of an account. An account belongs to one chain and is
/// controlled by exactly one process; see [`crate::types::Account`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AccountId(pub u64);

impl fmt::Display for AccountId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A single-use account instance: the base account plus its session-key
/// generation. A fresh generation is minted every time the account would
/// receive funds again, which is what defeats the stale-proof replay of
/// the ABA-transfer attack. With account reuse allowed the generation is
/// pinned to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AccountRef {
    pub account: AccountId,
    pub generation: u32,
}

impl AccountRef {
    pub fn new(account: AccountId, generation: u32) -> Self {
        Self {
            account,
            generation,
        }
    }
}

impl fmt::Display for AccountRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.account, self.generation)
    }
}

/// Identifier of a transaction output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OutputId(pub u64);

impl fmt::Display for OutputId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

/// Content hash of a transaction (digest of the canonical encoding of
/// every field except the signatures).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TxId(pub [u8; 32]);

impl TxId {
    pub fn short(&self) -> String {
        let mut s = String::with_capacity(16);
        for b in &self.0[..8] {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Debug for TxId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tx:{}", self.short())
    }
}

impl fmt::Display for TxId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.short())
    }
}

/// Block height; doubles as the discrete timeslot of the ownership
/// function.
pub type Height = u64;

/// Logical event-clock time of the scheduler.
pub type EventTime = u64;

/// Address of a simulation endpoint: a process state machine or one of
/// the simulated chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NodeId {
    Process(ProcessId),
    Chain(ChainId),
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeId::Process(p) => write!(f, "{p}"),
            NodeId::Chain(c) => write!(f, "{c}"),
        }
    }
}

impl From<ProcessId> for NodeId {
    fn from(p: ProcessId) -> Self {
        NodeId::Process(p)
    }
}

impl From<ChainId> for NodeId {
    fn from(c: ChainId) -> Self {
        NodeId::Chain(c)
    }
}
