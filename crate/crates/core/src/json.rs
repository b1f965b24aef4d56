//! JSON forms. Coefficients are always exact fraction strings like `"-3/2"`.

use std::ops::Deref;
use std::str::FromStr;

use num_rational::BigRational;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::{rat, LaurentPoly};
use crate::rational::FactoredRational;
use crate::series::TruncatedSeries;

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let r = BigRational::from_str(s).map_err(|_| Error::Parse(format!("not a rational: {s:?}")))?;
    Ok(r)
}

fn rational_from_value(v: &Value) -> std::result::Result<BigRational, String> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        Value::Number(n) => n
            .as_i64()
            .map(rat)
            .ok_or_else(|| format!("non-integer JSON number {n}; use a fraction string")),
        other => Err(format!("expected rational, got {other}")),
    }
}

/// Rational vector; reads integers or fraction strings, writes strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QVec(pub Vec<BigRational>);

impl QVec {
    pub fn ints(xs: &[i64]) -> Self {
        QVec(xs.iter().map(|&x| rat(x)).collect())
    }
}

impl Deref for QVec {
    type Target = [BigRational];
    fn deref(&self) -> &[BigRational] {
        &self.0
    }
}

impl Serialize for QVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Value>::deserialize(d)?;
        raw.iter()
            .map(rational_from_value)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(QVec)
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    p: i64,
    q: i64,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    a: i64,
    b: i64,
    k: i64,
}

#[derive(Serialize, Deserialize)]
struct FactoredJson {
    scalar: String,
    num: Vec<TermJson>,
    den: Vec<FactorJson>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: i64,
    terms: Vec<TermJson>,
}

fn terms_to_json(p: &LaurentPoly) -> Vec<TermJson> {
    p.terms().map(|(e, c)| TermJson { p: e.p, q: e.q, c: c.to_string() }).collect()
}

fn terms_from_json(ts: &[TermJson]) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for t in ts {
        out.add_term(crate::poly::Exp::new(t.p, t.q), parse_rational(&t.c)?);
    }
    Ok(out)
}

/// Serializes as a list of `{"p","q","c"}` terms in canonical order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        terms_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ts = Vec::<TermJson>::deserialize(d)?;
        terms_from_json(&ts).map_err(D::Error::custom)
    }
}

/// `{"scalar":"1/2","num":[...],"den":[{"a":1,"b":1,"k":2}]}`.
impl Serialize for FactoredRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FactoredJson {
            scalar: self.scalar().to_string(),
            num: terms_to_json(self.numerator()),
            den: self.factors().into_iter().map(|f| FactorJson { a: f.a, b: f.b, k: f.k }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FactoredJson::deserialize(d)?;
        let build = || -> Result<FactoredRational> {
            let num = terms_from_json(&raw.num)?;
            let factors: Vec<_> = raw.den.iter().map(|f| (f.a, f.b, f.k)).collect();
            FactoredRational::new(num, &factors, parse_rational(&raw.scalar)?)
        };
        build().map_err(D::Error::custom)
    }
}

/// `{"order":D,"terms":[...]}`.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson { order: self.order(), terms: terms_to_json(self.terms()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(d)?;
        let build = || -> Result<TruncatedSeries> {
            let poly = terms_from_json(&raw.terms)?;
            if poly.max_total_degree().is_some_and(|t| t > raw.order) {
                return Err(Error::Parse(format!("term beyond series order {}", raw.order)));
            }
            TruncatedSeries::from_poly(&poly, raw.order)
        };
        build().map_err(D::Error::custom)
    }
}
