//! Exact rotation angles: a rational multiple of π plus an integer
//! combination of named parameters.
//!
//! Predicates such as [`Angle::is_half_pi_multiple`] answer "provably true for
//! every parameter valuation"; any angle that still mentions a parameter is
//! treated as opaque and the predicates return `false`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

/// Largest `d` tried when snapping a float to `k·π/2^d`.
pub const SNAP_MAX_LOG2_DEN: u32 = 20;
/// Absolute tolerance (radians) for snapping.
pub const SNAP_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AngleError {
    #[error("angle arithmetic overflow")]
    Overflow,
    #[error("angle {0} is not a provable multiple of pi/2")]
    NotHalfPiMultiple(String),
    #[error("no value assigned to parameter {0}")]
    MissingParameter(String),
    #[error("invalid angle expression {0:?}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Angle {
    num: i128,
    den: i128,
    params: BTreeMap<String, i64>,
}

impl Default for Angle {
    fn default() -> Self {
        Angle::zero()
    }
}

impl Angle {
    pub fn zero() -> Self {
        Angle {
            num: 0,
            den: 1,
            params: BTreeMap::new(),
        }
    }

    /// `num/den · π`, reduced modulo 2π.
    pub fn pi_frac(num: i64, den: i64) -> Self {
        Angle::checked_pi_frac(num as i128, den as i128).expect("nonzero denominator")
    }

    fn checked_pi_frac(num: i128, den: i128) -> Result<Self, AngleError> {
        if den == 0 {
            return Err(AngleError::Parse("zero denominator".into()));
        }
        let mut a = Angle {
            num,
            den,
            params: BTreeMap::new(),
        };
        a.normalize()?;
        Ok(a)
    }

    /// A single parameter with coefficient 1.
    pub fn param(name: impl Into<String>) -> Self {
        let mut params = BTreeMap::new();
        params.insert(name.into(), 1);
        Angle {
            num: 0,
            den: 1,
            params,
        }
    }

    fn normalize(&mut self) -> Result<(), AngleError> {
        if self.den < 0 {
            self.num = self.num.checked_neg().ok_or(AngleError::Overflow)?;
            self.den = self.den.checked_neg().ok_or(AngleError::Overflow)?;
        }
        let g = self.num.gcd(&self.den);
        if g > 1 {
            self.num /= g;
            self.den /= g;
        }
        let period = self.den.checked_mul(2).ok_or(AngleError::Overflow)?;
        self.num = self.num.rem_euclid(period);
        self.params.retain(|_, c| *c != 0);
        Ok(())
    }

    /// Constant part as `(num, den)` with `0 ≤ num/den < 2`.
    pub fn constant_part(&self) -> (i128, i128) {
        (self.num, self.den)
    }

    pub fn params(&self) -> &BTreeMap<String, i64> {
        &self.params
    }

    #[inline]
    pub fn is_constant(&self) -> bool {
        self.params.is_empty()
    }

    pub fn checked_add(&self, other: &Angle) -> Result<Angle, AngleError> {
        let l = (self.den / self.den.gcd(&other.den))
            .checked_mul(other.den)
            .ok_or(AngleError::Overflow)?;
        let a = self
            .num
            .checked_mul(l / self.den)
            .ok_or(AngleError::Overflow)?;
        let b = other
            .num
            .checked_mul(l / other.den)
            .ok_or(AngleError::Overflow)?;
        let mut out = Angle {
            num: a.checked_add(b).ok_or(AngleError::Overflow)?,
            den: l,
            params: self.params.clone(),
        };
        for (name, c) in &other.params {
            let slot = out.params.entry(name.clone()).or_insert(0);
            *slot = slot.checked_add(*c).ok_or(AngleError::Overflow)?;
        }
        out.normalize()?;
        Ok(out)
    }

    pub fn negate(&self) -> Angle {
        let mut out = Angle {
            num: -self.num,
            den: self.den,
            params: self.params.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        };
        out.normalize().expect("negation of a normalized angle");
        out
    }

    /// `self` for `sign = +1`, its negation for `sign = -1`.
    pub fn with_sign(&self, sign: i8) -> Angle {
        if sign < 0 {
            self.negate()
        } else {
            self.clone()
        }
    }

    /// Provably `≡ 0 (mod 2π)`.
    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.num == 0
    }

    /// Provably a multiple of π/2.
    pub fn is_half_pi_multiple(&self) -> bool {
        self.is_constant() && 2 % self.den == 0
    }

    /// Provably `≡ π (mod 2π)`.
    pub fn is_pi_mod_2pi(&self) -> bool {
        self.is_constant() && self.num == 1 && self.den == 1
    }

    /// Provably an odd multiple of π/4, i.e. a T-like rotation.
    pub fn is_odd_quarter_pi(&self) -> bool {
        self.is_constant() && self.den == 4
    }

    /// `k` such that the angle is `k·π/2 (mod 2π)`.
    pub fn quarter_turns(&self) -> Result<u8, AngleError> {
        if !self.is_half_pi_multiple() {
            return Err(AngleError::NotHalfPiMultiple(self.to_string()));
        }
        Ok((self.num * (2 / self.den)) as u8)
    }

    /// `k` in `0..8` such that the angle is `k·π/4`, if it is one.
    pub fn eighth_turns(&self) -> Option<u8> {
        if self.is_constant() && 4 % self.den == 0 {
            Some((self.num * (4 / self.den)) as u8)
        } else {
            None
        }
    }

    /// Radians in `[0, 2π)` under `assignment`.
    pub fn evaluate<F>(&self, mut assignment: F) -> Result<f64, AngleError>
    where
        F: FnMut(&str) -> Option<f64>,
    {
        let mut total = self.num as f64 / self.den as f64 * PI;
        for (name, c) in &self.params {
            let value =
                assignment(name).ok_or_else(|| AngleError::MissingParameter(name.clone()))?;
            total += *c as f64 * value;
        }
        Ok(total.rem_euclid(2.0 * PI))
    }

    /// Evaluates with values looked up in a map.
    pub fn evaluate_with(&self, assignment: &BTreeMap<String, f64>) -> Result<f64, AngleError> {
        self.evaluate(|name| assignment.get(name).copied())
    }

    /// Snaps `radians` to `k·π/2^d` (`d ≤ 20`) when within `1e-9`.
    pub fn snap_radians(radians: f64) -> Option<Angle> {
        if !radians.is_finite() {
            return None;
        }
        for d in 0..=SNAP_MAX_LOG2_DEN {
            let den = 1i64 << d;
            let step = PI / den as f64;
            let k = (radians / step).round();
            if (k * step - radians).abs() <= SNAP_TOLERANCE && k.abs() < 1e15 {
                return Some(Angle::pi_frac(k as i64, den));
            }
        }
        None
    }

    /// Parses the angle grammar; numeric literals other than `0` are
    /// radians and go through [`Angle::snap_radians`], falling back to an
    /// opaque parameter named by `fresh`.
    pub fn parse_with_floats<F>(text: &str, mut fresh: F) -> Result<Angle, AngleError>
    where
        F: FnMut() -> String,
    {
        parse_expr(text, Some(&mut fresh))
    }
}

impl Add for &Angle {
    type Output = Angle;

    fn add(self, rhs: &Angle) -> Angle {
        self.checked_add(rhs).expect("angle arithmetic overflow")
    }
}

impl Add for Angle {
    type Output = Angle;

    fn add(self, rhs: Angle) -> Angle {
        &self + &rhs
    }
}

impl Sub for &Angle {
    type Output = Angle;

    fn sub(self, rhs: &Angle) -> Angle {
        self.checked_add(&rhs.negate())
            .expect("angle arithmetic overflow")
    }
}

impl Neg for &Angle {
    type Output = Angle;

    fn neg(self) -> Angle {
        self.negate()
    }
}

impl Neg for Angle {
    type Output = Angle;

    fn neg(self) -> Angle {
        self.negate()
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &c) in &self.params {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if self.num != 0 {
            if !first {
                f.write_str("+")?;
            }
            if self.num != 1 {
                write!(f, "{}", self.num)?;
            }
            f.write_str("pi")?;
            if self.den != 1 {
                write!(f, "/{}", self.den)?;
            }
        } else if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Angle({self})")
    }
}

impl FromStr for Angle {
    type Err = AngleError;

    /// Terms `pi`, `<int>pi`, `pi/<int>`, `<int>pi/<int>`, identifiers (with
    /// an optional integer coefficient) and the literal `0`, joined by `+`/`-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s, None)
    }
}

struct Cursor<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self) -> AngleError {
        AngleError::Parse(self.text.to_string())
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn integer(&mut self) -> Result<i128, AngleError> {
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| self.err())
    }
}

type FreshFn<'f> = &'f mut dyn FnMut() -> String;

fn parse_expr(text: &str, mut fresh: Option<FreshFn<'_>>) -> Result<Angle, AngleError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cur = Cursor {
        text,
        chars: compact.chars().collect(),
        pos: 0,
    };
    if cur.chars.is_empty() {
        return Err(cur.err());
    }
    let mut total = Angle::zero();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.err());
        };
        first = false;
        let term = parse_term(&mut cur, &mut fresh)?;
        let term = if negative { term.negate() } else { term };
        total = total.checked_add(&term)?;
    }
    Ok(total)
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn parse_term(cur: &mut Cursor<'_>, fresh: &mut Option<FreshFn<'_>>) -> Result<Angle, AngleError> {
    let start = cur.pos;
    let coeff = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let k = cur.integer()?;
        if cur.peek() == Some('.') || cur.peek() == Some('e') || cur.peek() == Some('E') {
            cur.pos = start;
            return parse_float_term(cur, fresh);
        }
        cur.eat('*');
        Some(k)
    } else if cur.peek() == Some('.') {
        return parse_float_term(cur, fresh);
    } else {
        None
    };
    match cur.peek() {
        Some(c) if is_ident_start(c) => {
            let ident = cur.take_while(is_ident_char);
            if ident == "pi" {
                let num = coeff.unwrap_or(1);
                let den = if cur.eat('/') { cur.integer()? } else { 1 };
                if den == 0 {
                    return Err(cur.err());
                }
                Angle::checked_pi_frac(num, den)
            } else {
                let c = coeff.unwrap_or(1);
                let c = i64::try_from(c).map_err(|_| AngleError::Overflow)?;
                let mut a = Angle::zero();
                if c != 0 {
                    a.params.insert(ident, c);
                }
                Ok(a)
            }
        }
        _ => match coeff {
            Some(0) => Ok(Angle::zero()),
            Some(_) if fresh.is_some() => {
                cur.pos = start;
                parse_float_term(cur, fresh)
            }
            _ => Err(cur.err()),
        },
    }
}

fn parse_float_term(
    cur: &mut Cursor<'_>,
    fresh: &mut Option<FreshFn<'_>>,
) -> Result<Angle, AngleError> {
    let Some(fresh) = fresh.as_mut() else {
        return Err(cur.err());
    };
    let mut lit = cur.take_while(|c| c.is_ascii_digit() || c == '.');
    if cur.peek() == Some('e') || cur.peek() == Some('E') {
        lit.push('e');
        cur.pos += 1;
        if cur.peek() == Some('-') || cur.peek() == Some('+') {
            lit.push(cur.peek().unwrap());
            cur.pos += 1;
        }
        lit.push_str(&cur.take_while(|c| c.is_ascii_digit()));
    }
    let value: f64 = lit.parse().map_err(|_| cur.err())?;
    Ok(Angle::snap_radians(value).unwrap_or_else(|| Angle::param(fresh())))
}
