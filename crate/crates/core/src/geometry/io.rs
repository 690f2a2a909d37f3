//! JSON forms of chains and isotopies with rational coordinates as "p/q" strings.

use serde::{Deserialize, Serialize};

use super::curve::{Ambient, OneChain, PLLoop};
use super::isotopy::Isotopy;
use super::point::Point;
use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopJson {
    pub coeff: String,
    pub vertices: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translations: Option<Vec<[i64; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub ambient: Ambient,
    pub loops: Vec<LoopJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotopyJson {
    pub times: Vec<String>,
    /// One list of labeled curves per time.
    pub frames: Vec<Vec<CurveJson>>,
}

fn point_json(p: &Point) -> [String; 3] {
    [format_q(&p[0]), format_q(&p[1]), format_q(&p[2])]
}

fn parse_point(p: &[String; 3]) -> Result<Point> {
    Ok([parse_q(&p[0])?, parse_q(&p[1])?, parse_q(&p[2])?])
}

impl CurveJson {
    pub fn from_chain(c: &OneChain) -> Self {
        let loops = c
            .terms
            .iter()
            .map(|(q, l)| LoopJson {
                coeff: format_q(q),
                vertices: l.vertices().iter().map(point_json).collect(),
                translations: (c.ambient == Ambient::Torus).then(|| l.translations()),
            })
            .collect();
        CurveJson { ambient: c.ambient, loops }
    }

    pub fn to_chain(&self) -> Result<OneChain> {
        let terms = self
            .loops
            .iter()
            .map(|l| {
                let vs = l.vertices.iter().map(parse_point).collect::<Result<Vec<_>>>()?;
                let lp = match (self.ambient, &l.translations) {
                    (Ambient::Euclidean, None) => PLLoop::euclidean(vs)?,
                    (Ambient::Euclidean, Some(_)) => {
                        return Err(Error::InvalidInput("translations are only meaningful in T3".into()))
                    }
                    (Ambient::Torus, ts) => PLLoop::torus(vs.clone(), ts.clone().unwrap_or(vec![[0; 3]; vs.len()]))?,
                };
                Ok((parse_q(&l.coeff)?, lp))
            })
            .collect::<Result<Vec<_>>>()?;
        OneChain::new(self.ambient, terms)
    }
}

pub fn chain_to_json(c: &OneChain) -> Result<String> {
    Ok(serde_json::to_string_pretty(&CurveJson::from_chain(c))?)
}

pub fn chain_from_json(s: &str) -> Result<OneChain> {
    serde_json::from_str::<CurveJson>(s)?.to_chain()
}

impl IsotopyJson {
    pub fn from_isotopy(iso: &Isotopy) -> Self {
        IsotopyJson {
            times: iso.times().iter().map(format_q).collect(),
            frames: iso.frames().iter().map(|f| f.iter().map(CurveJson::from_chain).collect()).collect(),
        }
    }

    pub fn to_isotopy(&self) -> Result<Isotopy> {
        let times = self.times.iter().map(|t| parse_q(t)).collect::<Result<Vec<_>>>()?;
        let frames = self
            .frames
            .iter()
            .map(|f| f.iter().map(CurveJson::to_chain).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Isotopy::new(times, frames)
    }
}

pub fn isotopy_to_json(iso: &Isotopy) -> Result<String> {
    Ok(serde_json::to_string_pretty(&IsotopyJson::from_isotopy(iso))?)
}

pub fn isotopy_from_json(s: &str) -> Result<Isotopy> {
    serde_json::from_str::<IsotopyJson>(s)?.to_isotopy()
}
