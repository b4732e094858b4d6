use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Variable};
use crate::scalar::{Coefficient, Scalar};

/// Values `q_ab` substituted for the variables `X[a,b]` of degree `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Specialization<S> {
    n: usize,
    values: BTreeMap<Variable, S>,
}

impl<S: Scalar> Specialization<S> {
    /// Requires a value for every off-diagonal variable of degree `n` and nothing else.
    pub fn new(n: usize, values: BTreeMap<Variable, S>) -> Result<Self> {
        for v in Variable::all(n) {
            if !values.contains_key(&v) {
                return Err(Error::MissingValue(v.row(), v.col()));
            }
        }
        if let Some(v) = values.keys().find(|v| v.row() > n || v.col() > n) {
            return Err(Error::OutOfRange(format!("{v} in a specialization of degree {n}")));
        }
        Ok(Specialization { n, values })
    }

    pub fn from_fn(n: usize, f: impl Fn(Variable) -> S) -> Self {
        Specialization { n, values: Variable::all(n).map(|v| (v, f(v))).collect() }
    }

    /// Every variable sent to zero.
    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| S::zero())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &BTreeMap<Variable, S> {
        &self.values
    }

    pub fn value(&self, v: Variable) -> S {
        self.values.get(&v).cloned().unwrap_or_else(S::zero)
    }

    /// Replaces one value.
    pub fn with(mut self, a: usize, b: usize, q: S) -> Result<Self> {
        let v = Variable::new(a, b)?;
        if a > self.n || b > self.n {
            return Err(Error::OutOfRange(format!("{v} in a specialization of degree {}", self.n)));
        }
        self.values.insert(v, q);
        Ok(self)
    }

    pub fn evaluate<C: Coefficient>(&self, p: &Polynomial<C>) -> S {
        p.evaluate(|v| self.value(v))
    }

    /// `{"a,b": "value"}` with values printed by `Display`.
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.values
                .iter()
                .map(|(v, q)| (format!("{},{}", v.row(), v.col()), Value::String(q.to_string())))
                .collect(),
        )
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in `(0, 1/2)` with denominator at most 12.
fn small_rational(rng: &mut impl Rng) -> BigRational {
    let den: i64 = rng.gen_range(3..=12);
    let num: i64 = rng.gen_range(1..=(den - 1) / 2);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Specialization<BigRational> {
    /// Seeded rationals in `(0, 1/2)`.
    pub fn random_rational(n: usize, seed: u64) -> Self {
        let mut rng = rng(seed);
        Self::from_fn_mut(n, || small_rational(&mut rng))
    }

    /// Parses `{"1,2": "1/2", "2,1": 3, ...}`; values are integers or rational strings.
    pub fn from_json(n: usize, json: &str) -> Result<Self> {
        let map = parse_map(json)?;
        let mut values = BTreeMap::new();
        for (v, value) in map {
            let q = match &value {
                Value::String(s) => parse_rational(s)?,
                Value::Number(num) if num.is_i64() => BigRational::from_integer(BigInt::from(num.as_i64().unwrap())),
                other => return Err(Error::Parse(format!("{v}: expected an exact rational, got {other}"))),
            };
            values.insert(v, q);
        }
        Self::new(n, values)
    }
}

impl Specialization<Complex64> {
    /// Seeded complex values of modulus below 1/2.
    pub fn random_complex(n: usize, seed: u64) -> Self {
        let mut rng = rng(seed);
        Self::from_fn_mut(n, || {
            let r: f64 = rng.gen_range(0.05..0.5);
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(r, theta)
        })
    }

    /// Parses `{"1,2": 0.5, "2,1": [0.1, -0.2], "1,3": "1/3"}`: reals, `[re, im]` pairs or rational strings.
    pub fn from_json_float(n: usize, json: &str) -> Result<Self> {
        let map = parse_map(json)?;
        let mut values = BTreeMap::new();
        for (v, value) in map {
            let z = match &value {
                Value::Number(x) => Complex64::new(x.as_f64().unwrap_or(f64::NAN), 0.0),
                Value::String(s) => Complex64::from_rational(&parse_rational(s)?),
                Value::Array(parts) if parts.len() == 2 => match (parts[0].as_f64(), parts[1].as_f64()) {
                    (Some(re), Some(im)) => Complex64::new(re, im),
                    _ => return Err(Error::Parse(format!("{v}: expected [re, im] numbers"))),
                },
                other => return Err(Error::Parse(format!("{v}: expected a number or [re, im], got {other}"))),
            };
            values.insert(v, z);
        }
        Self::new(n, values)
    }
}

impl Specialization<f64> {
    /// Seeded reals in `(0, 1/2)`.
    pub fn random_f64(n: usize, seed: u64) -> Self {
        let mut rng = rng(seed);
        Self::from_fn_mut(n, || rng.gen_range(0.01..0.5))
    }
}

impl<S: Scalar> Specialization<S> {
    fn from_fn_mut(n: usize, mut f: impl FnMut() -> S) -> Self {
        Specialization { n, values: Variable::all(n).map(|v| (v, f())).collect() }
    }

    /// Same values in another scalar type.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Specialization<T> {
        Specialization { n: self.n, values: self.values.iter().map(|(v, q)| (*v, f(q))).collect() }
    }
}

fn parse_map(json: &str) -> Result<Vec<(Variable, Value)>> {
    let value: Value = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(Error::Parse("a specialization must be a JSON object".into()));
    };
    map.into_iter()
        .map(|(key, value)| {
            let (a, b) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("key {key:?} is not of the form \"a,b\"")))?;
            Ok((Variable::new(a, b)?, value))
        })
        .collect()
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((num, den)) => num
            .trim()
            .parse::<BigInt>()
            .ok()
            .zip(den.trim().parse::<BigInt>().ok())
            .filter(|(_, d)| !d.is_zero())
            .map(|(n, d)| BigRational::new(n, d)),
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    };
    parsed.ok_or_else(|| Error::Parse(format!("{s:?} is not a rational number")))
}
