//! A small language for naming groups.
//!
//! ```text
//! spec    := product ;
//! product := atom { "x" atom } ;
//! atom    := named | "Hol(" spec ")" | "Aut(" spec ")"
//!          | "sdp(" int "," int "," int ")"
//!          | "perm[" int "]{" cycles { "," cycles } "}" | "(" spec ")" ;
//! named   := ("C"|"D"|"S"|"A") int | "Q8" | "E" int "^" int ;
//! cycles  := one or more parenthesized cycles of space-separated points ;
//! ```
//!
//! Whitespace is ignored between tokens. `Dn` is the dihedral group of
//! order `n`, `sdp(n,m,e)` is `C_n ⋊ C_m` with the generator of `C_m`
//! acting as `x ↦ x^e`, and products associate to the left.

use std::fmt;
use std::str::FromStr;

use crate::aut::{automorphism_group, holomorph, sdp};
use crate::construct::direct_product;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::named::{make_named, NamedGroup};
use crate::perm::{gcd, Perm};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Named(NamedGroup),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Semidirect {
        n: usize,
        m: usize,
        e: usize,
    },
    Hol(Box<GroupSpec>),
    Aut(Box<GroupSpec>),
    /// Generators as cycle lists on `{0, .., degree - 1}`.
    PermLiteral {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("syntax error at byte {offset}: expected {}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("invalid group at byte {offset}: {message}")]
    Semantic { offset: usize, message: String },
}

impl SpecError {
    pub fn offset(&self) -> usize {
        match *self {
            SpecError::Syntax { offset, .. } | SpecError::Semantic { offset, .. } => offset,
        }
    }
}

type PResult<T> = std::result::Result<T, SpecError>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(SpecError::Syntax {
            offset: self.pos,
            expected: expected.to_vec(),
        })
    }

    fn expect(&mut self, byte: u8, name: &'static str) -> PResult<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn int(&mut self) -> PResult<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(&["integer"]);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| SpecError::Semantic {
            offset: start,
            message: format!("integer {text} is too large"),
        })
    }

    fn word(&mut self) -> &'a [u8] {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn spec(&mut self) -> PResult<GroupSpec> {
        let mut left = self.atom()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let right = self.atom()?;
            left = GroupSpec::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn atom(&mut self) -> PResult<GroupSpec> {
        const ATOM: &[&str] = &[
            "group name",
            "\"Hol(\"",
            "\"Aut(\"",
            "\"sdp(\"",
            "\"perm[\"",
            "\"(\"",
        ];
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.spec()?;
            self.expect(b')', "\")\"")?;
            return Ok(inner);
        }
        let start = self.pos;
        let word = self.word();
        let spec = match word {
            b"Hol" | b"Aut" => {
                self.expect(b'(', "\"(\"")?;
                let inner = Box::new(self.spec()?);
                self.expect(b')', "\")\"")?;
                if word == b"Hol" {
                    GroupSpec::Hol(inner)
                } else {
                    GroupSpec::Aut(inner)
                }
            }
            b"sdp" => {
                self.expect(b'(', "\"(\"")?;
                let n = self.int()?;
                self.expect(b',', "\",\"")?;
                let m = self.int()?;
                self.expect(b',', "\",\"")?;
                let e = self.int()?;
                self.expect(b')', "\")\"")?;
                GroupSpec::Semidirect { n, m, e }
            }
            b"perm" => {
                self.expect(b'[', "\"[\"")?;
                let degree = self.int()?;
                self.expect(b']', "\"]\"")?;
                self.expect(b'{', "\"{\"")?;
                let mut generators = vec![self.cycles()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    generators.push(self.cycles()?);
                }
                self.expect(b'}', "\"}\" or \",\"")?;
                GroupSpec::PermLiteral { degree, generators }
            }
            b"C" => GroupSpec::Named(NamedGroup::Cyclic(self.int()?)),
            b"D" => GroupSpec::Named(NamedGroup::Dihedral(self.int()?)),
            b"S" => GroupSpec::Named(NamedGroup::Symmetric(self.int()?)),
            b"A" => GroupSpec::Named(NamedGroup::Alternating(self.int()?)),
            b"Q" => {
                let at = self.pos;
                if self.int()? != 8 {
                    return Err(SpecError::Semantic {
                        offset: at,
                        message: "only Q8 is available".into(),
                    });
                }
                GroupSpec::Named(NamedGroup::Quaternion8)
            }
            b"E" => {
                let p = self.int()?;
                self.expect(b'^', "\"^\"")?;
                let k = self.int()?;
                GroupSpec::Named(NamedGroup::ElementaryAbelian { p, k })
            }
            _ => {
                self.pos = start;
                return self.fail(ATOM);
            }
        };
        check(&spec).map_err(|message| SpecError::Semantic {
            offset: start,
            message,
        })?;
        Ok(spec)
    }

    /// One generator: `(a b ..)(c d ..)..`, or `()` for the identity.
    fn cycles(&mut self) -> PResult<Vec<Vec<usize>>> {
        if self.peek() != Some(b'(') {
            return self.fail(&["\"(\""]);
        }
        let mut cycles = Vec::new();
        while self.peek() == Some(b'(') {
            self.pos += 1;
            let mut points = Vec::new();
            loop {
                match self.peek() {
                    Some(b')') => break,
                    Some(c) if c.is_ascii_digit() => {
                        points.push(self.int()?);
                        match self.src.get(self.pos) {
                            Some(b')') => {}
                            Some(c) if c.is_ascii_whitespace() => {}
                            _ => return self.fail(&["space", "\")\""]),
                        }
                    }
                    _ => return self.fail(&["point", "\")\""]),
                }
            }
            self.pos += 1;
            if !points.is_empty() {
                cycles.push(points);
            }
        }
        Ok(cycles)
    }
}

/// Parameter checks that the grammar alone cannot express.
fn check(spec: &GroupSpec) -> std::result::Result<(), String> {
    match spec {
        GroupSpec::Named(kind) => kind.validate().map_err(|e| e.to_string()),
        &GroupSpec::Semidirect { n, m, e } => {
            if n == 0 || m == 0 {
                Err("sdp orders must be positive".into())
            } else if n > 1 && gcd(e % n, n) != 1 {
                Err(format!("exponent {e} is not coprime to {n}"))
            } else if n > 1 && (0..m).fold(1 % n, |acc, _| acc * (e % n) % n) != 1 {
                Err(format!("{e}^{m} is not 1 mod {n}"))
            } else {
                Ok(())
            }
        }
        GroupSpec::PermLiteral { degree, generators } => {
            if *degree == 0 {
                return Err("degree must be positive".into());
            }
            for g in generators {
                Perm::from_cycles(*degree, g).map_err(|e| e.to_string())?;
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

pub fn parse(text: &str) -> std::result::Result<GroupSpec, SpecError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let spec = parser.spec()?;
    if parser.peek().is_some() {
        return parser.fail(&["\"x\"", "end of input"]);
    }
    Ok(spec)
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> std::result::Result<Self, SpecError> {
        parse(s)
    }
}

/// Canonical text, parenthesizing right-nested products.
pub fn render(spec: &GroupSpec) -> String {
    spec.to_string()
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named(kind) => write!(f, "{kind}"),
            GroupSpec::Product(a, b) => match **b {
                GroupSpec::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
            GroupSpec::Semidirect { n, m, e } => write!(f, "sdp({n},{m},{e})"),
            GroupSpec::Hol(a) => write!(f, "Hol({a})"),
            GroupSpec::Aut(a) => write!(f, "Aut({a})"),
            GroupSpec::PermLiteral { degree, generators } => {
                write!(f, "perm[{degree}]{{")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    if g.is_empty() {
                        f.write_str("()")?;
                    }
                    for c in g {
                        let points: Vec<String> = c.iter().map(usize::to_string).collect();
                        write!(f, "({})", points.join(" "))?;
                    }
                }
                f.write_str("}")
            }
        }
    }
}

pub fn evaluate(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Named(kind) => make_named(*kind),
        GroupSpec::Product(a, b) => Ok(direct_product(&evaluate(a)?, &evaluate(b)?)?.group),
        &GroupSpec::Semidirect { n, m, e } => Ok(sdp(n, m, e)?.group),
        GroupSpec::Hol(a) => Ok(holomorph(&evaluate(a)?)?.group),
        GroupSpec::Aut(a) => Ok(automorphism_group(&evaluate(a)?)?.as_perm_group),
        GroupSpec::PermLiteral { degree, generators } => {
            let limit = Limits::current().max_order;
            if *degree > limit {
                return Err(GroupError::order_bound(
                    format!("permutation degree {degree}"),
                    limit,
                ));
            }
            let perms = generators
                .iter()
                .map(|g| Perm::from_cycles(*degree, g))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::generate(*degree, &perms)
        }
    }
}
