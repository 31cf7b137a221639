//! Bounded set-theoretic formulas: AST, concrete syntax, and the
//! conditional-parameterized evaluator.
//!
//! The language has equality and membership atoms, the propositional
//! connectives, and bounded quantifiers `forall x in u (…)` /
//! `exists x in u (…)`. Unbounded quantifiers are representable in the
//! AST and parseable, but the evaluator rejects them with a typed error:
//! they would range over the whole universe.

mod parse;

pub use parse::parse;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{biconditional, conditional, join, meet, ortho, ConditionalKind, Projection};
use crate::linalg::Tolerance;
use crate::universe::{QSet, Registry, TruthEvaluator};

/// A term: a variable bound by an enclosing quantifier, or a name that
/// resolves through a registry/environment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Name(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(s) | Term::Name(s) => f.write_str(s),
        }
    }
}

/// Formula AST. `Forall`/`Exists` are the unbounded forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Equal(Term, Term),
    Member(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    ForallIn(String, Term, Box<Formula>),
    ExistsIn(String, Term, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Equal(a, b) => write!(f, "{a} = {b}"),
            Formula::Member(a, b) => write!(f, "{a} in {b}"),
            Formula::Not(inner) => write!(f, "~({inner})"),
            Formula::And(a, b) => write!(f, "({a} /\\ {b})"),
            Formula::Or(a, b) => write!(f, "({a} \\/ {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::Iff(a, b) => write!(f, "({a} <-> {b})"),
            Formula::ForallIn(x, t, body) => write!(f, "forall {x} in {t} ({body})"),
            Formula::ExistsIn(x, t, body) => write!(f, "exists {x} in {t} ({body})"),
            Formula::Forall(x, body) => write!(f, "forall {x} ({body})"),
            Formula::Exists(x, body) => write!(f, "exists {x} ({body})"),
        }
    }
}

/// A computed truth value: the projection together with the conditional
/// the evaluation was parameterized by.
#[derive(Debug, Clone)]
pub struct TruthValue {
    pub value: Projection,
    pub conditional_used: ConditionalKind,
}

struct Evaluator<'a> {
    j: ConditionalKind,
    tol: Tolerance,
    env: &'a Registry,
    truth: TruthEvaluator,
    scopes: Vec<(String, QSet)>,
}

impl<'a> Evaluator<'a> {
    fn resolve(&self, term: &Term) -> Result<QSet> {
        match term {
            Term::Var(name) => {
                for (bound, value) in self.scopes.iter().rev() {
                    if bound == name {
                        return Ok(value.clone());
                    }
                }
                // Free variables may be supplied through the environment.
                self.env
                    .get(name)
                    .cloned()
                    .ok_or_else(|| Error::UnboundVariable { name: name.clone() })
            }
            Term::Name(name) => self
                .env
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnboundVariable { name: name.clone() }),
        }
    }

    fn eval(&mut self, formula: &Formula) -> Result<Projection> {
        match formula {
            Formula::Equal(a, b) => {
                let u = self.resolve(a)?;
                let v = self.resolve(b)?;
                self.truth.equal(&u, &v, self.j)
            }
            Formula::Member(a, b) => {
                let u = self.resolve(a)?;
                let v = self.resolve(b)?;
                self.truth.member(&u, &v, self.j)
            }
            Formula::Not(inner) => Ok(ortho(&self.eval(inner)?)),
            Formula::And(a, b) => {
                let x = self.eval(a)?;
                let y = self.eval(b)?;
                meet(&x, &y, &self.tol)
            }
            Formula::Or(a, b) => {
                let x = self.eval(a)?;
                let y = self.eval(b)?;
                join(&x, &y, &self.tol)
            }
            Formula::Implies(a, b) => {
                let x = self.eval(a)?;
                let y = self.eval(b)?;
                conditional(self.j, &x, &y, &self.tol)
            }
            Formula::Iff(a, b) => {
                let x = self.eval(a)?;
                let y = self.eval(b)?;
                biconditional(self.j, &x, &y, &self.tol)
            }
            Formula::ForallIn(var, domain, body) => {
                let u = self.resolve(domain)?;
                let mut acc = Projection::identity(u.dim());
                for (child, weight) in u.entries() {
                    self.scopes.push((var.clone(), child.clone()));
                    let inner = self.eval(body);
                    self.scopes.pop();
                    let cond = conditional(self.j, weight, &inner?, &self.tol)?;
                    acc = meet(&acc, &cond, &self.tol)?;
                }
                Ok(acc)
            }
            Formula::ExistsIn(var, domain, body) => {
                let u = self.resolve(domain)?;
                let mut acc = Projection::zero(u.dim());
                for (child, weight) in u.entries() {
                    self.scopes.push((var.clone(), child.clone()));
                    let inner = self.eval(body);
                    self.scopes.pop();
                    let term = meet(weight, &inner?, &self.tol)?;
                    acc = join(&acc, &term, &self.tol)?;
                }
                Ok(acc)
            }
            Formula::Forall(var, _) => Err(Error::UnboundedQuantifier {
                quantifier: "forall",
                var: var.clone(),
            }),
            Formula::Exists(var, _) => Err(Error::UnboundedQuantifier {
                quantifier: "exists",
                var: var.clone(),
            }),
        }
    }
}

/// Evaluate a formula against an environment of named elements.
///
/// All bound elements must share one ambient dimension. Atomic truth
/// values are memoized per (pair identity, conditional) for the duration
/// of the call.
pub fn evaluate(
    formula: &Formula,
    j: ConditionalKind,
    env: &Registry,
    tol: &Tolerance,
) -> Result<TruthValue> {
    let mut dims = env.values().map(|u| u.dim());
    if let Some(first) = dims.next() {
        for d in dims {
            if d != first {
                return Err(Error::DimMismatch {
                    left: first,
                    right: d,
                });
            }
        }
    }
    let mut evaluator = Evaluator {
        j,
        tol: *tol,
        env,
        truth: TruthEvaluator::new(*tol),
        scopes: Vec::new(),
    };
    let value = evaluator.eval(formula)?;
    Ok(TruthValue {
        value,
        conditional_used: j,
    })
}

/// Free names of a formula (terms not bound by an enclosing quantifier).
pub fn free_names(formula: &Formula) -> Vec<String> {
    fn term_names(term: &Term, bound: &[String], out: &mut Vec<String>) {
        let name = match term {
            Term::Var(s) | Term::Name(s) => s,
        };
        if !bound.iter().any(|b| b == name) && !out.iter().any(|n| n == name) {
            out.push(name.clone());
        }
    }
    fn walk(f: &Formula, bound: &mut Vec<String>, out: &mut Vec<String>) {
        match f {
            Formula::Equal(a, b) | Formula::Member(a, b) => {
                term_names(a, bound, out);
                term_names(b, bound, out);
            }
            Formula::Not(inner) => walk(inner, bound, out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                walk(a, bound, out);
                walk(b, bound, out);
            }
            Formula::ForallIn(x, t, body) | Formula::ExistsIn(x, t, body) => {
                term_names(t, bound, out);
                bound.push(x.clone());
                walk(body, bound, out);
                bound.pop();
            }
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                bound.push(x.clone());
                walk(body, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(formula, &mut Vec::new(), &mut out);
    out
}

/// Classical evaluation over hereditarily finite sets; the independent
/// oracle for formulas whose arguments are all check-embeddings.
pub fn classical_eval(
    formula: &Formula,
    env: &HashMap<String, crate::universe::HfSet>,
) -> Result<bool> {
    use crate::universe::HfSet;
    fn resolve(
        term: &Term,
        scopes: &[(String, HfSet)],
        env: &HashMap<String, HfSet>,
    ) -> Result<HfSet> {
        let name = match term {
            Term::Var(s) | Term::Name(s) => s,
        };
        for (bound, value) in scopes.iter().rev() {
            if bound == name {
                return Ok(value.clone());
            }
        }
        env.get(name)
            .cloned()
            .ok_or_else(|| Error::UnboundVariable { name: name.clone() })
    }
    fn eval(
        f: &Formula,
        scopes: &mut Vec<(String, HfSet)>,
        env: &HashMap<String, HfSet>,
    ) -> Result<bool> {
        Ok(match f {
            Formula::Equal(a, b) => resolve(a, scopes, env)? == resolve(b, scopes, env)?,
            Formula::Member(a, b) => resolve(b, scopes, env)?.contains(&resolve(a, scopes, env)?),
            Formula::Not(inner) => !eval(inner, scopes, env)?,
            Formula::And(a, b) => eval(a, scopes, env)? && eval(b, scopes, env)?,
            Formula::Or(a, b) => eval(a, scopes, env)? || eval(b, scopes, env)?,
            Formula::Implies(a, b) => !eval(a, scopes, env)? || eval(b, scopes, env)?,
            Formula::Iff(a, b) => eval(a, scopes, env)? == eval(b, scopes, env)?,
            Formula::ForallIn(x, t, body) => {
                let domain = resolve(t, scopes, env)?;
                let mut all = true;
                for element in domain.elements() {
                    scopes.push((x.clone(), element.clone()));
                    let holds = eval(body, scopes, env);
                    scopes.pop();
                    if !holds? {
                        all = false;
                        break;
                    }
                }
                all
            }
            Formula::ExistsIn(x, t, body) => {
                let domain = resolve(t, scopes, env)?;
                let mut any = false;
                for element in domain.elements() {
                    scopes.push((x.clone(), element.clone()));
                    let holds = eval(body, scopes, env);
                    scopes.pop();
                    if holds? {
                        any = true;
                        break;
                    }
                }
                any
            }
            Formula::Forall(var, _) | Formula::Exists(var, _) => {
                return Err(Error::UnboundedQuantifier {
                    quantifier: "forall",
                    var: var.clone(),
                })
            }
        })
    }
    eval(formula, &mut Vec::new(), env)
}
