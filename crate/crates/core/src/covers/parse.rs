//! Text form of a Kummer curve: `y^N = (x-R1)^D1 (x-R2)^D2 ...`.
//!
//! Roots are field-element literals: a signed integer for prime fields, or a
//! bracketed constant-first coefficient list like `[1,1]` for extension
//! fields. Factors may be separated by whitespace or `*`; a missing exponent
//! means 1.

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement};

use super::KummerCurve;

struct Scanner<'a> {
    rest: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Scanner<'a> {
        Scanner { rest: s }
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn peek(&self) -> Option<char> {
        self.rest.chars().next()
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if let Some(rest) = self.rest.strip_prefix(token) {
            self.rest = rest;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{token}` at `{}`", self.head())))
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if let Some(rest) = self.rest.strip_prefix(token) {
            self.rest = rest;
            true
        } else {
            false
        }
    }

    fn head(&self) -> String {
        self.rest.chars().take(12).collect()
    }

    fn integer(&mut self) -> Result<i64> {
        let digits_at = usize::from(self.rest.starts_with('-'));
        let end = self
            .rest
            .char_indices()
            .skip(digits_at)
            .find(|(_, c)| !c.is_ascii_digit())
            .map_or(self.rest.len(), |(i, _)| i);
        if end == digits_at {
            return Err(Error::Parse(format!("expected integer at `{}`", self.head())));
        }
        let (num, rest) = self.rest.split_at(end);
        let value = num
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("integer `{num}`: {e}")))?;
        self.rest = rest;
        Ok(value)
    }

    fn unsigned(&mut self) -> Result<u64> {
        let v = self.integer()?;
        u64::try_from(v).map_err(|_| Error::Parse(format!("expected nonnegative integer, got {v}")))
    }

    fn element(&mut self, ctx: &FieldCtx) -> Result<FieldElement> {
        if !self.eat("[") {
            return Ok(ctx.from_i64(self.integer()?));
        }
        let mut coeffs = Vec::new();
        loop {
            self.skip_ws();
            let p = ctx.p() as i64;
            coeffs.push(self.integer()?.rem_euclid(p) as u64);
            self.skip_ws();
            if self.eat("]") {
                return ctx.from_coeffs(&coeffs);
            }
            self.expect(",")?;
        }
    }
}

/// Parses the text form into a curve over the given field.
pub fn parse_curve(ctx: &FieldCtx, input: &str) -> Result<KummerCurve> {
    let mut s = Scanner::new(input);
    s.skip_ws();
    s.expect("y")?;
    s.skip_ws();
    s.expect("^")?;
    s.skip_ws();
    let n = s.unsigned()?;
    s.skip_ws();
    s.expect("=")?;
    let mut branch = Vec::new();
    loop {
        s.skip_ws();
        if s.peek().is_none() {
            break;
        }
        if s.eat("*") {
            continue;
        }
        s.expect("(")?;
        s.skip_ws();
        s.expect("x")?;
        s.skip_ws();
        s.expect("-")?;
        s.skip_ws();
        let root = s.element(ctx)?;
        s.skip_ws();
        s.expect(")")?;
        let mult = if s.eat("^") { s.unsigned()? } else { 1 };
        branch.push((root, mult));
    }
    KummerCurve::new(ctx, n, branch)
}
