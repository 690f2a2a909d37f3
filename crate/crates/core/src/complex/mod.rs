//! Chains on the graph complex with coefficients in cells over L^{H(k)}.

pub mod cell;
pub mod chain;
pub mod first;
pub mod forget;
pub mod nicify;
pub mod perm;
pub mod pl;
pub mod synthetic;

pub use cell::{Cell, LinComb};
pub use nicify::{nice_chain, nice_from_raw, nicify, pairing, Nicified, K_MAX};
pub use forget::{check_forgetful, factorize, ForgetfulFactorization, ForgetfulMetadata, ForgetfulReport};
pub use first::{first_to_second, FirstChain};
pub use chain::{SecondChain, SecondIndex};
pub use pl::PlCell;
pub use perm::{aut_group, group_order, HalfEdgePerm};
pub use synthetic::SyntheticCell;
