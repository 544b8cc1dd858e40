use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub parameters: Value,
    pub version: &'static str,
    pub seed: Option<u64>,
    pub result: Value,
    pub wall_time_ms: u128,
}

/// What a command produced: a JSON payload, its plain-text rendering, and
/// whether a verification found a counterexample.
pub struct Output {
    pub result: Value,
    pub text: String,
    pub seed: Option<u64>,
    pub violated: bool,
}

impl Output {
    pub fn new(result: Value, text: impl Into<String>) -> Self {
        Output {
            result,
            text: text.into(),
            seed: None,
            violated: false,
        }
    }

    pub fn seeded(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn violated(mut self, violated: bool) -> Self {
        self.violated = violated;
        self
    }
}

impl RunReport {
    pub fn new(command: &str, parameters: Value, out: &Output, started: Instant) -> Self {
        RunReport {
            schema: SCHEMA,
            command: command.to_string(),
            parameters,
            version: env!("CARGO_PKG_VERSION"),
            seed: out.seed,
            result: out.result.clone(),
            wall_time_ms: started.elapsed().as_millis(),
        }
    }
}

/// Scientific notation with 17 significant digits, rounded half away from
/// zero: `2.6666666666666667e0`.
pub fn decimal(x: &BigRational) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let num = x.numer().abs();
    let den = x.denom().clone();
    let ten = BigInt::from(10);
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    // 10^e <= x < 10^(e+1)
    let below = |e: i64| -> bool {
        if e >= 0 {
            num < &den * ten.pow(e as u32)
        } else {
            &num * ten.pow((-e) as u32) < den
        }
    };
    if below(e) {
        e -= 1;
    }
    let shift = 16 - e;
    let (n, d) = if shift >= 0 {
        (&num * ten.pow(shift as u32), den.clone())
    } else {
        (num.clone(), &den * ten.pow((-shift) as u32))
    };
    let mut digits: BigInt = (BigInt::from(2) * &n + &d) / (BigInt::from(2) * &d);
    if digits >= ten.pow(17) {
        digits /= 10;
        e += 1;
    }
    let s = digits.to_string();
    format!("{sign}{}.{}e{e}", &s[..1], &s[1..])
}

pub fn fraction(x: &BigRational) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rational_json(x: &BigRational) -> Value {
    json!({ "fraction": fraction(x), "decimal": decimal(x) })
}

/// `f64` rendered with 17 significant digits.
pub fn float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}
