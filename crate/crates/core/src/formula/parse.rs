//! Recursive-descent parser for the formula language.
//!
//! Grammar (ASCII connectives, loosest binding first):
//!
//! ```text
//! formula  := iff
//! iff      := imp ("<->" imp)*
//! imp      := or ("->" or)*
//! or       := and ("\/" and)*
//! and      := unary ("/\" unary)*
//! unary    := "~" unary | "(" formula ")" | atom | quant
//! quant    := ("forall" | "exists") IDENT ["in" term] "(" formula ")"
//! atom     := term ("=" | "in" | "subseteq") term
//! term     := IDENT
//! ```
//!
//! Chains of `<->` and `->` associate to the left. `a subseteq b` is
//! sugar for `forall x in a (x in b)` with a fresh variable. Omitting
//! `in term` in a quantifier yields the unbounded form, which parses but
//! is rejected by the evaluator.

use super::{Formula, Term};
use crate::error::{Error, Result};
use crate::universe::Registry;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Forall,
    Exists,
    In,
    Subseteq,
    Eq,
    Tilde,
    And,
    Or,
    Arrow,
    Iff,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let b = self.src[self.pos];
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'(' => {
                    out.push((Tok::LParen, start));
                    self.pos += 1;
                }
                b')' => {
                    out.push((Tok::RParen, start));
                    self.pos += 1;
                }
                b'=' => {
                    out.push((Tok::Eq, start));
                    self.pos += 1;
                }
                b'~' => {
                    out.push((Tok::Tilde, start));
                    self.pos += 1;
                }
                b'/' => {
                    if self.src.get(self.pos + 1) == Some(&b'\\') {
                        out.push((Tok::And, start));
                        self.pos += 2;
                    } else {
                        return Err(Error::Syntax {
                            position: start,
                            message: "expected `/\\`".to_string(),
                        });
                    }
                }
                b'\\' => {
                    if self.src.get(self.pos + 1) == Some(&b'/') {
                        out.push((Tok::Or, start));
                        self.pos += 2;
                    } else {
                        return Err(Error::Syntax {
                            position: start,
                            message: "expected `\\/`".to_string(),
                        });
                    }
                }
                b'-' => {
                    if self.src.get(self.pos + 1) == Some(&b'>') {
                        out.push((Tok::Arrow, start));
                        self.pos += 2;
                    } else {
                        return Err(Error::Syntax {
                            position: start,
                            message: "expected `->`".to_string(),
                        });
                    }
                }
                b'<' => {
                    if self.src.get(self.pos + 1) == Some(&b'-')
                        && self.src.get(self.pos + 2) == Some(&b'>')
                    {
                        out.push((Tok::Iff, start));
                        self.pos += 3;
                    } else {
                        return Err(Error::Syntax {
                            position: start,
                            message: "expected `<->`".to_string(),
                        });
                    }
                }
                c if c.is_ascii_alphabetic() => {
                    let mut end = self.pos + 1;
                    while end < self.src.len()
                        && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                    {
                        end += 1;
                    }
                    let word = std::str::from_utf8(&self.src[self.pos..end])
                        .expect("ascii slice")
                        .to_string();
                    self.pos = end;
                    let tok = match word.as_str() {
                        "forall" => Tok::Forall,
                        "exists" => Tok::Exists,
                        "in" => Tok::In,
                        "subseteq" => Tok::Subseteq,
                        _ => Tok::Ident(word),
                    };
                    out.push((tok, start));
                }
                other => {
                    return Err(Error::Syntax {
                        position: start,
                        message: format!("unexpected character `{}`", other as char),
                    });
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    registry: &'a Registry,
    scopes: Vec<String>,
    gensym: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<Tok> {
        let tok = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let position = self.here();
        match self.advance() {
            Some(tok) if tok == want => Ok(()),
            got => Err(Error::Syntax {
                position,
                message: format!("expected {what}, found {got:?}"),
            }),
        }
    }

    fn fresh_var(&mut self) -> String {
        // Identifiers must start with a letter, so this cannot collide.
        let name = format!("_s{}", self.gensym);
        self.gensym += 1;
        name
    }

    fn formula(&mut self) -> Result<Formula> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut acc = self.imp()?;
        while self.peek() == Some(&Tok::Iff) {
            self.advance();
            let rhs = self.imp()?;
            acc = Formula::Iff(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn imp(&mut self) -> Result<Formula> {
        let mut acc = self.or()?;
        while self.peek() == Some(&Tok::Arrow) {
            self.advance();
            let rhs = self.or()?;
            acc = Formula::Implies(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut acc = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.advance();
            let rhs = self.and()?;
            acc = Formula::Or(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.advance();
            let rhs = self.unary()?;
            acc = Formula::And(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.advance();
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Some(Tok::LParen) => {
                self.advance();
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Forall) | Some(Tok::Exists) => self.quant(),
            Some(Tok::Ident(_)) => self.atom(),
            _ => Err(Error::Syntax {
                position: self.here(),
                message: "expected a formula".to_string(),
            }),
        }
    }

    fn quant(&mut self) -> Result<Formula> {
        let universal = matches!(self.advance(), Some(Tok::Forall));
        let position = self.here();
        let var = match self.advance() {
            Some(Tok::Ident(name)) => name,
            got => {
                return Err(Error::Syntax {
                    position,
                    message: format!("expected a variable after the quantifier, found {got:?}"),
                })
            }
        };
        let bounded = if self.peek() == Some(&Tok::In) {
            self.advance();
            Some(self.term()?)
        } else {
            None
        };
        self.expect(Tok::LParen, "`(` before the quantifier body")?;
        self.scopes.push(var.clone());
        let body = self.formula();
        self.scopes.pop();
        let body = body?;
        self.expect(Tok::RParen, "`)` after the quantifier body")?;
        Ok(match (universal, bounded) {
            (true, Some(domain)) => Formula::ForallIn(var, domain, Box::new(body)),
            (false, Some(domain)) => Formula::ExistsIn(var, domain, Box::new(body)),
            (true, None) => Formula::Forall(var, Box::new(body)),
            (false, None) => Formula::Exists(var, Box::new(body)),
        })
    }

    fn atom(&mut self) -> Result<Formula> {
        let lhs = self.term()?;
        let position = self.here();
        match self.advance() {
            Some(Tok::Eq) => Ok(Formula::Equal(lhs, self.term()?)),
            Some(Tok::In) => Ok(Formula::Member(lhs, self.term()?)),
            Some(Tok::Subseteq) => {
                let rhs = self.term()?;
                let fresh = self.fresh_var();
                Ok(Formula::ForallIn(
                    fresh.clone(),
                    lhs,
                    Box::new(Formula::Member(Term::Var(fresh), rhs)),
                ))
            }
            got => Err(Error::Syntax {
                position,
                message: format!("expected `=`, `in`, or `subseteq`, found {got:?}"),
            }),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let position = self.here();
        match self.advance() {
            Some(Tok::Ident(name)) => {
                if self.scopes.iter().any(|s| s == &name) {
                    Ok(Term::Var(name))
                } else if self.registry.contains_key(&name) {
                    Ok(Term::Name(name))
                } else {
                    Err(Error::UnknownName { name, position })
                }
            }
            got => Err(Error::Syntax {
                position,
                message: format!("expected a term, found {got:?}"),
            }),
        }
    }
}

/// Parse a formula, resolving free identifiers against the registry.
pub fn parse(text: &str, registry: &Registry) -> Result<Formula> {
    let tokens = Lexer::new(text).tokens()?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        registry,
        scopes: Vec::new(),
        gensym: 0,
    };
    let formula = parser.formula()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Syntax {
            position: parser.here(),
            message: "trailing input after the formula".to_string(),
        });
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::QSet;

    fn registry(names: &[&str]) -> Registry {
        names
            .iter()
            .map(|n| (n.to_string(), QSet::empty(2)))
            .collect()
    }

    #[test]
    fn parses_atoms() {
        let reg = registry(&["u", "v"]);
        assert_eq!(
            parse("u = v", &reg).unwrap(),
            Formula::Equal(Term::Name("u".into()), Term::Name("v".into()))
        );
        assert_eq!(
            parse("u in v", &reg).unwrap(),
            Formula::Member(Term::Name("u".into()), Term::Name("v".into()))
        );
    }

    #[test]
    fn parses_bounded_quantifier() {
        let reg = registry(&["u", "v"]);
        let f = parse("forall x in u (x in v)", &reg).unwrap();
        assert_eq!(
            f,
            Formula::ForallIn(
                "x".into(),
                Term::Name("u".into()),
                Box::new(Formula::Member(
                    Term::Var("x".into()),
                    Term::Name("v".into())
                ))
            )
        );
    }

    #[test]
    fn subseteq_desugars_to_bounded_forall() {
        let reg = registry(&["u", "v"]);
        let sugar = parse("u subseteq v", &reg).unwrap();
        match sugar {
            Formula::ForallIn(var, Term::Name(domain), body) => {
                assert_eq!(domain, "u");
                assert_eq!(
                    *body,
                    Formula::Member(Term::Var(var.clone()), Term::Name("v".into()))
                );
                assert!(var.starts_with("_s"));
            }
            other => panic!("unexpected desugaring: {other:?}"),
        }
    }

    #[test]
    fn parses_connective_tower() {
        let reg = registry(&["x", "y", "z"]);
        let f = parse(
            "z in x <-> ((z in x /\\ z in y) \\/ (z in x /\\ ~(z in y)))",
            &reg,
        )
        .unwrap();
        match f {
            Formula::Iff(lhs, rhs) => {
                assert_eq!(
                    *lhs,
                    Formula::Member(Term::Name("z".into()), Term::Name("x".into()))
                );
                assert!(matches!(*rhs, Formula::Or(_, _)));
            }
            other => panic!("expected a biconditional, got {other:?}"),
        }
    }

    #[test]
    fn precedence_and_binds_tighter_than_or() {
        let reg = registry(&["a", "b", "c"]);
        let f = parse("a in a \\/ b in b /\\ c in c", &reg).unwrap();
        assert!(matches!(f, Formula::Or(_, _)));
    }

    #[test]
    fn unbounded_quantifier_parses() {
        let reg = registry(&[]);
        let f = parse("forall x (x = x)", &reg).unwrap();
        assert!(matches!(f, Formula::Forall(_, _)));
        let g = parse("exists y (y = y)", &reg).unwrap();
        assert!(matches!(g, Formula::Exists(_, _)));
    }

    #[test]
    fn unknown_name_with_position() {
        let reg = registry(&["u"]);
        match parse("u = ghost", &reg) {
            Err(Error::UnknownName { name, position }) => {
                assert_eq!(name, "ghost");
                assert_eq!(position, 4);
            }
            other => panic!("expected UnknownName, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_with_position() {
        let reg = registry(&["u"]);
        match parse("u = ", &reg) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected Syntax, got {other:?}"),
        }
        assert!(matches!(parse("u ? u", &reg), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(u = u", &reg), Err(Error::Syntax { .. })));
        assert!(matches!(parse("u = u )", &reg), Err(Error::Syntax { .. })));
    }

    #[test]
    fn shadowing_inner_binder_wins() {
        let reg = registry(&["u", "x"]);
        // The inner binder shadows the registered name `x`.
        let f = parse("forall x in u (x in u)", &reg).unwrap();
        match f {
            Formula::ForallIn(_, _, body) => {
                assert_eq!(
                    *body,
                    Formula::Member(Term::Var("x".into()), Term::Name("u".into()))
                );
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn display_round_trips() {
        let reg = registry(&["u", "v", "w"]);
        for text in [
            "u = v",
            "forall x in u (x in v \\/ x = w)",
            "~(u in v) -> (v in u <-> w = w)",
            "exists x in u (forall y in v (x = y))",
        ] {
            let f = parse(text, &reg).unwrap();
            let rendered = f.to_string();
            let g = parse(&rendered, &reg).unwrap();
            assert_eq!(f, g, "display of `{text}` must reparse to the same AST");
        }
    }
}
