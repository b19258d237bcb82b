//! Abstract syntax for the script language: statements, expressions, and a
//! canonical rendering used by the parse/print round-trip guarantee.

use std::fmt;

/// A source position, 1-based, for error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A parsed script: a sequence of statements.
#[derive(Debug, Clone, PartialEq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

/// The coefficient field of a ring declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// `ZZ/p`; `None` means the prime comes from the session configuration.
    Fp(Option<u64>),
    /// `QQ`.
    Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Statement {
    /// `ring NAME = field[vars] [order];`
    Ring {
        name: String,
        field: FieldSpec,
        vars: Vec<String>,
        /// Rendered as written; validated during evaluation.
        order: Option<String>,
        pos: Pos,
    },
    /// `use NAME;`
    Use { name: String, pos: Pos },
    /// `NAME = expr;` (silent)
    Assign { name: String, expr: Expr, pos: Pos },
    /// `expr;` (prints its value)
    Bare { expr: Expr, pos: Pos },
}

impl Statement {
    pub fn pos(&self) -> Pos {
        match self {
            Statement::Ring { pos, .. }
            | Statement::Use { pos, .. }
            | Statement::Assign { pos, .. }
            | Statement::Bare { pos, .. } => *pos,
        }
    }
}

/// An argument of a call: an expression or an inclusive integer range.
#[derive(Debug, Clone, PartialEq)]
pub enum Arg {
    Expr(Expr),
    Range(i64, i64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(i64),
    Name(String),
    /// `func(arg, ...)`
    Call { func: String, args: Vec<Arg> },
    /// `ideal "..."` — the raw shorthand text plus the generators it parsed
    /// to. The text is kept verbatim so rendering round-trips.
    IdealShorthand { text: String, gens: Vec<Expr> },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Operation label for structured output: the head of the expression.
    pub fn head(&self) -> &str {
        match self {
            Expr::Int(_) => "literal",
            Expr::Name(_) => "name",
            Expr::Call { func, .. } => func,
            Expr::IdealShorthand { .. } => "ideal",
            Expr::Neg(_) => "negate",
            Expr::Add(..) => "add",
            Expr::Sub(..) => "subtract",
            Expr::Mul(..) => "multiply",
            Expr::Div(..) => "quotient",
            Expr::Pow(..) => "power",
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, parent: u8, right_side: bool) -> fmt::Result {
        // Right operands of left-associative operators at equal precedence
        // need parentheses (`a - (b - c)`), as does anything binding looser
        // than its parent.
        let needs = self.precedence() < parent || (right_side && self.precedence() == parent);
        if needs {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Name(s) => write!(f, "{s}"),
            Expr::Call { func, args } => {
                write!(f, "{func}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    match a {
                        Arg::Expr(e) => write!(f, "{e}")?,
                        Arg::Range(a, b) => write!(f, "{a}..{b}")?,
                    }
                }
                write!(f, ")")
            }
            Expr::IdealShorthand { text, .. } => write!(f, "ideal \"{text}\""),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_child(f, 3, true)
            }
            Expr::Add(a, b) => {
                a.fmt_child(f, 1, false)?;
                write!(f, " + ")?;
                b.fmt_child(f, 1, true)
            }
            Expr::Sub(a, b) => {
                a.fmt_child(f, 1, false)?;
                write!(f, " - ")?;
                b.fmt_child(f, 1, true)
            }
            Expr::Mul(a, b) => {
                a.fmt_child(f, 2, false)?;
                write!(f, "*")?;
                b.fmt_child(f, 2, true)
            }
            Expr::Div(a, b) => {
                a.fmt_child(f, 2, false)?;
                write!(f, "/")?;
                b.fmt_child(f, 2, true)
            }
            Expr::Pow(a, n) => {
                a.fmt_child(f, 4, false)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Ring { name, field, vars, order, .. } => {
                write!(f, "ring {name} = ")?;
                match field {
                    FieldSpec::Fp(Some(p)) => write!(f, "ZZ/{p}")?,
                    FieldSpec::Fp(None) => write!(f, "ZZ")?,
                    FieldSpec::Rational => write!(f, "QQ")?,
                }
                write!(f, "[{}]", vars.join(","))?;
                if let Some(o) = order {
                    write!(f, " {o}")?;
                }
                write!(f, ";")
            }
            Statement::Use { name, .. } => write!(f, "use {name};"),
            Statement::Assign { name, expr, .. } => write!(f, "{name} = {expr};"),
            Statement::Bare { expr, .. } => write!(f, "{expr};"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
