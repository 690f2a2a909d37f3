//! Rational chains on a point: a number in degree 0, a piecewise-constant
//! track over [0,1] in degree 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{serde_q, serde_q_vec, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "degree")]
pub enum PointChain {
    #[serde(rename = "0")]
    Value {
        #[serde(with = "serde_q")]
        value: Q,
    },
    /// `values[i]` holds on the i-th interval cut out by `breakpoints`.
    #[serde(rename = "1")]
    Track {
        #[serde(with = "serde_q_vec")]
        breakpoints: Vec<Q>,
        #[serde(with = "serde_q_vec")]
        values: Vec<Q>,
    },
}

impl PointChain {
    pub fn track(breakpoints: Vec<Q>, values: Vec<Q>) -> Result<Self> {
        if values.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidInput("a track needs one more value than breakpoints".into()));
        }
        let zero = Q::from_integer(0.into());
        let one = Q::from_integer(1.into());
        if breakpoints.iter().any(|t| *t <= zero || *t >= one) || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("breakpoints must increase strictly inside (0,1)".into()));
        }
        Ok(PointChain::Track { breakpoints, values })
    }

    pub fn degree(&self) -> usize {
        match self {
            PointChain::Value { .. } => 0,
            PointChain::Track { .. } => 1,
        }
    }

    /// Value(1) − Value(0) of a track; the value itself in degree 0.
    pub fn endpoint_difference(&self) -> Q {
        match self {
            PointChain::Value { value } => value.clone(),
            PointChain::Track { values, .. } => values.last().unwrap() - values.first().unwrap(),
        }
    }

    /// Jumps at the breakpoints, in order.
    pub fn jumps(&self) -> Vec<Q> {
        match self {
            PointChain::Value { .. } => vec![],
            PointChain::Track { values, .. } => values.windows(2).map(|w| &w[1] - &w[0]).collect(),
        }
    }

    pub fn value_at(&self, t: &Q) -> Q {
        match self {
            PointChain::Value { value } => value.clone(),
            PointChain::Track { breakpoints, values } => values[breakpoints.iter().filter(|b| *b < t).count()].clone(),
        }
    }
}
