//! Word expressions: products of generators and named elements with
//! optional exponents.
//!
//! ```text
//! expr   := factor+
//! factor := atom ("^" int)?
//! atom   := "t" | "s" int | "w0" | "w_nk(" int "," int ")" | "c(" int "," int ")"
//!         | "(" expr ")"
//! ```

use std::fmt;

use hecke_core::{c_element, w_nk, Error, Generator, HeckeElement, Result, SignedPermutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Gen(Generator),
    /// The longest element of the ambient rank.
    W0,
    Wnk(usize, usize),
    C(usize, usize),
    Group(WordExpression),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exp: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordExpression {
    pub factors: Vec<Factor>,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Gen(g) => write!(f, "{g}"),
            Atom::W0 => write!(f, "w0"),
            Atom::Wnk(n, k) => write!(f, "w_nk({n},{k})"),
            Atom::C(n, k) => write!(f, "c({n},{k})"),
            Atom::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for WordExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", factor.atom)?;
            if let Some(e) = factor.exp {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `text`, rejecting generators and named elements that do not fit
/// in `rank`.
pub fn parse_expression(text: &str, rank: usize) -> Result<WordExpression> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        rank,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(if p.src[p.pos] == b')' {
            "unbalanced ')'".into()
        } else {
            format!("unexpected {:?}", p.src[p.pos] as char)
        }));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, offset: usize, message: String) -> Error {
        Error::Parse { offset, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", c as char)))
        }
    }

    fn expr(&mut self) -> Result<WordExpression> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if c == b')' {
                break;
            }
            factors.push(self.factor()?);
        }
        if factors.is_empty() {
            return Err(self.error("expected a generator, named element or '('".into()));
        }
        Ok(WordExpression { factors })
    }

    fn factor(&mut self) -> Result<Factor> {
        let atom = self.atom()?;
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            Some(self.int()?)
        } else {
            None
        };
        Ok(Factor { atom, exp })
    }

    fn int<T: std::str::FromStr>(&mut self) -> Result<T> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error_at(start, "integer out of range".into()))
    }

    fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect(b'(')?;
        let n = self.int()?;
        self.expect(b',')?;
        let k = self.int()?;
        self.expect(b')')?;
        Ok((n, k))
    }

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(self.error_at(start, "unclosed '('".into()));
            }
            self.pos += 1;
            return Ok(Atom::Group(inner));
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if word.is_empty() {
            let c = self.src.get(start).map_or('?', |&c| c as char);
            return Err(self.error_at(start, format!("unexpected {c:?}")));
        }
        let rank = self.rank;
        let atom = match word {
            "t" => Atom::Gen(Generator::T),
            "w0" => Atom::W0,
            "w_nk" => {
                let (n, k) = self.pair()?;
                if n + k > rank {
                    return Err(self.error_at(start, format!("w_nk({n},{k}) needs rank >= {}", n + k)));
                }
                Atom::Wnk(n, k)
            }
            "c" => {
                let (n, k) = self.pair()?;
                if n + k + 1 > rank {
                    return Err(self.error_at(start, format!("c({n},{k}) needs rank >= {}", n + k + 1)));
                }
                Atom::C(n, k)
            }
            _ => match word.strip_prefix('s').map(str::parse::<usize>) {
                Some(Ok(i)) if i >= 1 => Atom::Gen(Generator::S(i)),
                _ => return Err(self.error_at(start, format!("unknown token {word:?}"))),
            },
        };
        if let Atom::Gen(g) = atom {
            if !g.is_valid_for(rank) {
                return Err(self.error_at(start, format!("generator {g} is not defined in rank {rank}")));
            }
        }
        Ok(atom)
    }
}

impl WordExpression {
    fn element(atom: &Atom, rank: usize) -> Result<SignedPermutation> {
        match atom {
            Atom::W0 => Ok(SignedPermutation::longest(rank)),
            Atom::Wnk(n, k) => w_nk(*n, *k).embed(rank),
            Atom::C(n, k) => c_element(*n, *k).embed(rank),
            _ => unreachable!("only named elements"),
        }
    }

    fn fold(&self, mut acc: HeckeElement) -> Result<HeckeElement> {
        let rank = acc.rank();
        for factor in &self.factors {
            for _ in 0..factor.exp.unwrap_or(1) {
                acc = match &factor.atom {
                    Atom::Gen(g) => acc.mul_generator_right(*g)?,
                    Atom::Group(inner) => inner.fold(acc)?,
                    named => acc.mul(&HeckeElement::t_of(&Self::element(named, rank)?))?,
                };
            }
        }
        Ok(acc)
    }

    /// The product of the `T`'s of every factor in `H(B_rank)`.
    pub fn evaluate(&self, rank: usize) -> Result<HeckeElement> {
        self.fold(HeckeElement::one(rank))
    }

    #[cfg_attr(not(test), allow(dead_code))]
    /// The flattened generator word, named elements replaced by their
    /// reduced words.
    pub fn letters(&self, rank: usize) -> Result<Vec<Generator>> {
        let mut out = Vec::new();
        for factor in &self.factors {
            let once = match &factor.atom {
                Atom::Gen(g) => vec![*g],
                Atom::Group(inner) => inner.letters(rank)?,
                named => Self::element(named, rank)?.reduced_word().letters().to_vec(),
            };
            for _ in 0..factor.exp.unwrap_or(1) {
                out.extend_from_slice(&once);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offset(r: Result<WordExpression>) -> usize {
        match r {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn simple_words() {
        let e = parse_expression("t s1 t", 2).unwrap();
        assert_eq!(e.factors.len(), 3);
        assert_eq!(e.letters(2).unwrap().len(), 3);
        assert_eq!(e.to_string(), "t s1 t");
    }

    #[test]
    fn named_elements_and_powers() {
        let e = parse_expression("w_nk(0,2)^2", 2).unwrap();
        assert_eq!(e.to_string(), "w_nk(0,2)^2");
        let h = e.evaluate(2).unwrap();
        assert_eq!(h.len(), 5);
        let g = parse_expression(" ( t  s1 )^2 c(0,1)", 2).unwrap();
        assert_eq!(g.to_string(), "(t s1)^2 c(0,1)");
        assert_eq!(g.letters(2).unwrap().len(), 5);
    }

    #[test]
    fn rank_errors_carry_offsets() {
        assert_eq!(offset(parse_expression("s9", 3)), 0);
        assert_eq!(offset(parse_expression("t  s3", 3)), 3);
        assert_eq!(offset(parse_expression("t w_nk(2,2)", 3)), 2);
        assert_eq!(offset(parse_expression("c(1,2)", 3)), 0);
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(offset(parse_expression("", 2)), 0);
        assert_eq!(offset(parse_expression("t x", 2)), 2);
        assert_eq!(offset(parse_expression("t (s1", 2)), 2);
        assert_eq!(offset(parse_expression("t s1)", 2)), 4);
        assert_eq!(offset(parse_expression("t^", 2)), 2);
        assert_eq!(offset(parse_expression("s0", 2)), 0);
        assert_eq!(offset(parse_expression("w_nk(1 2)", 4)), 7);
        assert_eq!(offset(parse_expression("()", 2)), 1);
    }

    #[test]
    fn evaluate_matches_word_product() {
        let e = parse_expression("(s1 t)^2 s1 t", 2).unwrap();
        let word = e.letters(2).unwrap();
        let direct = HeckeElement::one(2).mul_word_right(&word).unwrap();
        assert_eq!(e.evaluate(2).unwrap(), direct);
    }

    mod roundtrip {
        use super::super::*;
        use proptest::prelude::*;

        const RANK: usize = 6;

        fn leaf() -> impl Strategy<Value = Atom> {
            prop_oneof![
                Just(Atom::Gen(Generator::T)),
                (1..RANK).prop_map(|i| Atom::Gen(Generator::S(i))),
                Just(Atom::W0),
                (0..=RANK, 0..=RANK)
                    .prop_filter("fits", |(n, k)| n + k <= RANK)
                    .prop_map(|(n, k)| Atom::Wnk(n, k)),
                (0..RANK, 0..RANK)
                    .prop_filter("fits", |(n, k)| n + k < RANK)
                    .prop_map(|(n, k)| Atom::C(n, k)),
            ]
        }

        fn factors(atom: impl Strategy<Value = Atom>) -> impl Strategy<Value = WordExpression> {
            prop::collection::vec((atom, prop::option::of(0u32..5)), 1..4).prop_map(|fs| WordExpression {
                factors: fs.into_iter().map(|(atom, exp)| Factor { atom, exp }).collect(),
            })
        }

        fn expression() -> impl Strategy<Value = WordExpression> {
            let atom = leaf().prop_recursive(3, 16, 3, |inner| {
                prop_oneof![inner.clone(), factors(inner).prop_map(Atom::Group)]
            });
            factors(atom)
        }

        proptest! {
            #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

            #[test]
            fn parse_of_print_is_identity(e in expression()) {
                let text = e.to_string();
                prop_assert_eq!(parse_expression(&text, RANK).unwrap(), e);
            }
        }
    }
}
