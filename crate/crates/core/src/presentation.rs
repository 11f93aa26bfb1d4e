//! Presentations and their text file format.
//!
//! ```text
//! kind=monoid
//! generators=a b c        # greatest first
//! order=deglex
//! relations:
//! a*b = b*a
//! a*c - c*a + (2) b
//! expected:
//! irr_count=6
//! ```
//!
//! Factors are separated by `*` or whitespace. Coefficients are written
//! `p/q` or in parentheses, `(p)`, `(-p/q)`. A bare integer is a
//! coefficient unless a generator has that name; when any generator name
//! is numeric, bare integers always denote generators. `1` is the unit word
//! unless shadowed by a generator, in which case write `(1)`.
//!
//! For `kind=group` each generator `x` gets an inverse `x-1` ranked just
//! below it, together with the relations `x*x-1 = 1` and `x-1*x = 1`.
//! Lie relations are linear combinations of brackets `[u,v]`, where
//! `[a b c]` abbreviates the left-normed `[[a,b],c]`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lie::{Bracketer, LieError, LieMonomial, LiePolynomial, LieSystem};
use crate::poly::{format_rational, NcPolynomial, Rational};
use crate::rewrite::{RewriteError, RewriteSystem};
use crate::word::{Alphabet, Letter, Word, WordError};

/// Suffix naming a group inverse.
pub const INVERSE_SUFFIX: &str = "-1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Monoid,
    Group,
    Lie,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Monoid => "monoid",
            Kind::Group => "group",
            Kind::Lie => "lie",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    Assoc(Vec<NcPolynomial>),
    Lie(Vec<LiePolynomial>),
}

impl Relations {
    pub fn len(&self) -> usize {
        match self {
            Relations::Assoc(v) => v.len(),
            Relations::Lie(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("{0} presentations have no {1}")]
    WrongKind(&'static str, &'static str),
}

/// Generators, relations and an optional block of expected results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub kind: Kind,
    /// Declared generators, greatest first. Group inverses are implicit.
    pub generators: Vec<String>,
    /// Full alphabet, including group inverses.
    pub alphabet: Alphabet,
    /// Declared relations, excluding the implicit group inverse relations.
    pub relations: Relations,
    pub expected: BTreeMap<String, String>,
}

/// `x, x-1, y, y-1, …` for positive generators listed greatest first.
pub fn group_alphabet(generators: &[String]) -> Result<Alphabet, WordError> {
    Alphabet::new(
        generators
            .iter()
            .flat_map(|g| [g.clone(), format!("{g}{INVERSE_SUFFIX}")]),
    )
}

impl Presentation {
    pub fn monoid(
        alphabet: Alphabet,
        relations: Vec<NcPolynomial>,
    ) -> Result<Self, PresentationError> {
        for p in &relations {
            p.check(&alphabet)?;
        }
        Ok(Presentation {
            kind: Kind::Monoid,
            generators: alphabet.names().to_vec(),
            alphabet,
            relations: Relations::Assoc(relations),
            expected: BTreeMap::new(),
        })
    }

    /// A group on `generators` (greatest first); `relations` are written
    /// over [`group_alphabet`].
    pub fn group(
        generators: Vec<String>,
        relations: Vec<NcPolynomial>,
    ) -> Result<Self, PresentationError> {
        let alphabet = group_alphabet(&generators)?;
        for p in &relations {
            p.check(&alphabet)?;
        }
        Ok(Presentation {
            kind: Kind::Group,
            generators,
            alphabet,
            relations: Relations::Assoc(relations),
            expected: BTreeMap::new(),
        })
    }

    pub fn lie(
        alphabet: Alphabet,
        relations: Vec<LiePolynomial>,
    ) -> Result<Self, PresentationError> {
        for p in &relations {
            for (w, _) in p.terms() {
                alphabet.check(w)?;
            }
        }
        Ok(Presentation {
            kind: Kind::Lie,
            generators: alphabet.names().to_vec(),
            alphabet,
            relations: Relations::Lie(relations),
            expected: BTreeMap::new(),
        })
    }

    pub fn with_expected(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.expected.insert(key.to_string(), value.to_string());
        self
    }

    /// `x*x-1 - 1` and `x-1*x - 1` for each generator of a group.
    pub fn inverse_relations(&self) -> Vec<NcPolynomial> {
        if self.kind != Kind::Group {
            return Vec::new();
        }
        let mut out = Vec::new();
        for g in &self.generators {
            let x = self.alphabet.letter(g).expect("declared");
            let xi = self
                .alphabet
                .letter(&format!("{g}{INVERSE_SUFFIX}"))
                .expect("generated");
            out.push(NcPolynomial::binomial(
                Word::from(vec![x, xi]),
                Word::empty(),
            ));
            out.push(NcPolynomial::binomial(
                Word::from(vec![xi, x]),
                Word::empty(),
            ));
        }
        out
    }

    /// Declared relations followed by the implicit inverse relations.
    pub fn associative_relations(&self) -> Result<Vec<NcPolynomial>, PresentationError> {
        match &self.relations {
            Relations::Assoc(v) => {
                let mut out = v.clone();
                out.extend(self.inverse_relations());
                Ok(out)
            }
            Relations::Lie(_) => Err(PresentationError::WrongKind("lie", "associative relations")),
        }
    }

    /// The relations as a rewrite system (made monic, zeros and duplicates
    /// dropped). For Lie presentations, the associative expansions.
    pub fn rewrite_system(&self) -> Result<RewriteSystem, PresentationError> {
        let polys = match &self.relations {
            Relations::Assoc(_) => self.associative_relations()?,
            Relations::Lie(v) => v.iter().map(LiePolynomial::expand).collect(),
        };
        Ok(RewriteSystem::from_polynomials(
            self.alphabet.clone(),
            polys,
        )?)
    }

    pub fn lie_system(&self) -> Result<LieSystem, PresentationError> {
        match &self.relations {
            Relations::Lie(v) => Ok(LieSystem::from_polynomials(
                self.alphabet.clone(),
                v.clone(),
            )?),
            Relations::Assoc(_) => Err(PresentationError::WrongKind(
                self.kind.name(),
                "Lie relations",
            )),
        }
    }

    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        parse_presentation(text)
    }

    pub fn emit(&self) -> String {
        emit_presentation(self)
    }
}

// ---------------------------------------------------------------------------
// Emitting

fn unit_shadowed(alphabet: &Alphabet) -> bool {
    alphabet.letter("1").is_some()
}

fn emit_coeff(c: &Rational) -> String {
    format!("({})", format_rational(c))
}

fn emit_assoc(p: &NcPolynomial, alphabet: &Alphabet) -> String {
    let unit = if unit_shadowed(alphabet) { "(1)" } else { "1" };
    let word = |w: &Word| {
        if w.is_empty() {
            unit.to_string()
        } else {
            alphabet.render(w)
        }
    };
    let terms: Vec<(&Word, &Rational)> = p.terms().rev().collect();
    if terms.len() == 2 && terms[0].1.is_one() && (-terms[1].1).is_one() {
        return format!("{} = {}", word(terms[0].0), word(terms[1].0));
    }
    if terms.is_empty() {
        return "(0)".to_string();
    }
    join_terms(terms.into_iter().map(|(w, c)| {
        let body = if w.is_empty() {
            emit_coeff(&c.abs())
        } else if c.abs().is_one() {
            word(w)
        } else {
            format!("{} {}", emit_coeff(&c.abs()), word(w))
        };
        (c.is_negative(), body)
    }))
}

fn emit_lie(p: &LiePolynomial, alphabet: &Alphabet) -> String {
    if p.is_zero() {
        return "(0)".to_string();
    }
    join_terms(p.terms().rev().map(|(w, c)| {
        let tree = crate::lie::shirshov_bracket(w)
            .expect("keys are ALSWs")
            .render(alphabet);
        let body = if c.abs().is_one() {
            tree
        } else {
            format!("{} {}", emit_coeff(&c.abs()), tree)
        };
        (c.is_negative(), body)
    }))
}

fn join_terms<I: Iterator<Item = (bool, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn emit_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str(&format!("kind={}\n", p.kind.name()));
    out.push_str(&format!("generators={}\n", p.generators.join(" ")));
    out.push_str("order=deglex\n");
    out.push_str("relations:\n");
    match &p.relations {
        Relations::Assoc(v) => {
            for r in v {
                out.push_str(&emit_assoc(r, &p.alphabet));
                out.push('\n');
            }
        }
        Relations::Lie(v) => {
            for r in v {
                out.push_str(&emit_lie(r, &p.alphabet));
                out.push('\n');
            }
        }
    }
    if !p.expected.is_empty() {
        out.push_str("expected:\n");
        for (k, v) in &p.expected {
            out.push_str(&format!("{k}={v}\n"));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Gen(Letter),
    Coeff(Rational),
    Unit,
    Plus,
    Minus,
    Star,
    Eq,
    LBracket,
    RBracket,
    Comma,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

struct Ctx<'a> {
    alphabet: &'a Alphabet,
    numeric: bool,
    line: usize,
}

impl Ctx<'_> {
    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T, PresentationError> {
        Err(PresentationError::Syntax {
            line: self.line,
            column,
            message: message.into(),
        })
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn parse_int(s: &str) -> Option<Rational> {
    s.parse::<num_bigint::BigInt>()
        .ok()
        .map(Rational::from_integer)
}

fn lex(ctx: &Ctx<'_>, line: &str) -> Result<Vec<Token>, PresentationError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '\u{00b7}' => Some(Tok::Star),
            '=' => Some(Tok::Eq),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        let tok = if let Some(t) = simple {
            i += 1;
            t
        } else if c == '(' {
            let close = match chars[i..].iter().position(|&d| d == ')') {
                Some(k) => i + k,
                None => return ctx.err(column, "unclosed `(`"),
            };
            let inner: String = chars[i + 1..close]
                .iter()
                .collect::<String>()
                .replace('\u{2212}', "-");
            let inner = inner.trim();
            let value = parse_rational(inner);
            i = close + 1;
            match value {
                Some(v) => Tok::Coeff(v),
                None => return ctx.err(column, format!("bad coefficient `({inner})`")),
            }
        } else if is_name_start(c) || c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            let mut name: String = chars[start..i].iter().collect();
            // `x-1` is one token when it names a generator
            if chars.get(i) == Some(&'-')
                && chars.get(i + 1) == Some(&'1')
                && !chars.get(i + 2).is_some_and(|&d| is_name_char(d))
            {
                let inv = format!("{name}{INVERSE_SUFFIX}");
                if ctx.alphabet.letter(&inv).is_some() {
                    name = inv;
                    i += 2;
                }
            }
            if let Some(l) = ctx.alphabet.letter(&name) {
                Tok::Gen(l)
            } else if name.chars().all(|d| d.is_ascii_digit()) {
                if chars.get(i) == Some(&'/') {
                    let dstart = i + 1;
                    let mut j = dstart;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    let den: String = chars[dstart..j].iter().collect();
                    i = j;
                    match parse_rational(&format!("{name}/{den}")) {
                        Some(v) => Tok::Coeff(v),
                        None => return ctx.err(column, format!("bad coefficient `{name}/{den}`")),
                    }
                } else if ctx.numeric {
                    return ctx.err(column, format!("unknown generator `{name}`"));
                } else if name == "1" {
                    Tok::Unit
                } else {
                    Tok::Coeff(parse_int(&name).expect("digits"))
                }
            } else {
                return ctx.err(column, format!("unknown generator `{name}`"));
            }
        } else {
            return ctx.err(column, format!("unexpected character `{c}`"));
        };
        out.push(Token { tok, column });
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let v = match body.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p.trim())?;
            let q = parse_int(q.trim())?;
            if q.is_zero() {
                return None;
            }
            p / q
        }
        None => parse_int(body)?,
    };
    Some(if neg { -v } else { v })
}

enum Factor {
    Gen(Letter),
    Unit,
    Bracket(LieMonomial),
}

struct Parser<'a, 'c> {
    ctx: &'c Ctx<'a>,
    toks: Vec<Token>,
    pos: usize,
    end_column: usize,
}

impl Parser<'_, '_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.toks
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Gen(_) | Tok::Unit | Tok::LBracket))
    }

    // sum := ['+'|'-'] term (('+'|'-') term)*
    fn sum(&mut self) -> Result<Vec<(Rational, Vec<Factor>)>, PresentationError> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                sign = -sign;
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let (c, f) = self.term()?;
            terms.push((&sign * c, f));
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    sign = Rational::one();
                }
                Some(Tok::Minus) => {
                    self.bump();
                    sign = -Rational::one();
                }
                _ => return Ok(terms),
            }
        }
    }

    // term := coeff ['*'] product | coeff | product
    fn term(&mut self) -> Result<(Rational, Vec<Factor>), PresentationError> {
        let mut coeff = Rational::one();
        if let Some(Tok::Coeff(c)) = self.peek() {
            coeff = c.clone();
            self.bump();
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            } else if !self.starts_factor() {
                return Ok((coeff, vec![Factor::Unit]));
            }
        }
        if !self.starts_factor() {
            return self.ctx.err(
                self.column(),
                "expected a generator, `1`, `[` or a coefficient",
            );
        }
        let mut factors = vec![self.factor()?];
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.bump();
                if !self.starts_factor() {
                    return self.ctx.err(self.column(), "expected a factor after `*`");
                }
                factors.push(self.factor()?);
            } else if self.starts_factor() {
                factors.push(self.factor()?);
            } else {
                return Ok((coeff, factors));
            }
        }
    }

    fn factor(&mut self) -> Result<Factor, PresentationError> {
        match self.bump() {
            Some(Tok::Gen(l)) => Ok(Factor::Gen(l)),
            Some(Tok::Unit) => Ok(Factor::Unit),
            Some(Tok::LBracket) => Ok(Factor::Bracket(self.bracket_body()?)),
            _ => {
                self.pos -= 1;
                self.ctx.err(self.column(), "expected a factor")
            }
        }
    }

    // After `[`: `u, v]` or `u1 u2 … uk]` (left-normed, k >= 2).
    fn bracket_body(&mut self) -> Result<LieMonomial, PresentationError> {
        let mut items = vec![self.lie_item()?];
        let mut comma = false;
        loop {
            match self.peek() {
                Some(Tok::RBracket) => {
                    self.bump();
                    break;
                }
                Some(Tok::Comma) if items.len() == 1 => {
                    self.bump();
                    comma = true;
                    items.push(self.lie_item()?);
                    if self.peek() != Some(&Tok::RBracket) {
                        return self.ctx.err(self.column(), "expected `]`");
                    }
                }
                Some(Tok::Gen(_) | Tok::LBracket) if !comma => items.push(self.lie_item()?),
                None => return self.ctx.err(self.column(), "unclosed `[`"),
                _ => return self.ctx.err(self.column(), "unexpected token in bracket"),
            }
        }
        if items.len() < 2 {
            return self
                .ctx
                .err(self.column(), "a bracket needs at least two entries");
        }
        let mut it = items.into_iter();
        let first = it.next().expect("nonempty");
        Ok(it.fold(first, LieMonomial::bracket))
    }

    fn lie_item(&mut self) -> Result<LieMonomial, PresentationError> {
        match self.bump() {
            Some(Tok::Gen(l)) => Ok(LieMonomial::Leaf(l)),
            Some(Tok::LBracket) => self.bracket_body(),
            Some(Tok::Unit) => {
                self.pos -= 1;
                self.ctx.err(self.column(), "unit word in a Lie relation")
            }
            _ => {
                self.pos -= 1;
                self.ctx.err(self.column(), "expected a generator or `[`")
            }
        }
    }
}

fn assoc_value(
    ctx: &Ctx<'_>,
    terms: Vec<(Rational, Vec<Factor>)>,
    column: usize,
) -> Result<NcPolynomial, PresentationError> {
    let mut p = NcPolynomial::zero();
    for (c, factors) in terms {
        let mut letters = Vec::new();
        for f in factors {
            match f {
                Factor::Gen(l) => letters.push(l),
                Factor::Unit => {}
                Factor::Bracket(_) => {
                    return ctx.err(column, "brackets are only allowed in Lie presentations")
                }
            }
        }
        p.add_term(Word::from(letters), c);
    }
    Ok(p)
}

fn lie_value(
    ctx: &Ctx<'_>,
    br: &mut Bracketer,
    terms: Vec<(Rational, Vec<Factor>)>,
    column: usize,
) -> Result<LiePolynomial, PresentationError> {
    let mut p = LiePolynomial::zero();
    for (c, mut factors) in terms {
        if factors.len() != 1 {
            return ctx.err(column, "Lie terms are single brackets or generators");
        }
        let m = match factors.pop().expect("one factor") {
            Factor::Gen(l) => LieMonomial::Leaf(l),
            Factor::Bracket(m) => m,
            Factor::Unit => return ctx.err(column, "unit word in a Lie relation"),
        };
        p.add_scaled(&c, &br.to_basis(&m));
    }
    Ok(p)
}

enum Section {
    Header,
    Relations,
    Expected,
}

fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut kind = Kind::Monoid;
    let mut generators: Option<Vec<String>> = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut section = Section::Header;
    let mut assoc = Vec::new();
    let mut lie = Vec::new();
    let mut expected = BTreeMap::new();
    let mut br = Bracketer::new();
    let syntax = |line: usize, column: usize, message: String| PresentationError::Syntax {
        line,
        column,
        message,
    };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let column = body[..indent].chars().count() + 1;
        if trimmed == "relations:" {
            if alphabet.is_none() {
                return Err(syntax(
                    lineno,
                    column,
                    "`generators=` must come before `relations:`".into(),
                ));
            }
            section = Section::Relations;
            continue;
        }
        if trimmed == "expected:" {
            section = Section::Expected;
            continue;
        }
        match section {
            Section::Header => {
                let Some((key, value)) = trimmed.split_once('=') else {
                    return Err(syntax(
                        lineno,
                        column,
                        format!("expected `key=value`, got `{trimmed}`"),
                    ));
                };
                let value = value.trim();
                match key.trim() {
                    "kind" => {
                        kind = match value {
                            "monoid" => Kind::Monoid,
                            "group" => Kind::Group,
                            "lie" => Kind::Lie,
                            other => {
                                return Err(syntax(
                                    lineno,
                                    column,
                                    format!("unknown kind `{other}`"),
                                ))
                            }
                        };
                        if generators.is_some() {
                            return Err(syntax(
                                lineno,
                                column,
                                "`kind=` must come before `generators=`".into(),
                            ));
                        }
                    }
                    "generators" => {
                        let names: Vec<String> =
                            value.split_whitespace().map(str::to_string).collect();
                        for n in &names {
                            let ok = n.chars().all(is_name_char)
                                && (n.chars().all(|c| c.is_ascii_digit())
                                    || n.starts_with(is_name_start));
                            let ok = ok
                                || (kind != Kind::Group && n.ends_with(INVERSE_SUFFIX) && {
                                    let base = &n[..n.len() - 2];
                                    !base.is_empty()
                                        && base.chars().all(is_name_char)
                                        && base.starts_with(is_name_start)
                                });
                            if !ok {
                                return Err(syntax(
                                    lineno,
                                    column,
                                    format!("invalid generator name `{n}`"),
                                ));
                            }
                        }
                        let a = match kind {
                            Kind::Group => group_alphabet(&names),
                            _ => Alphabet::new(names.clone()),
                        }
                        .map_err(|e| syntax(lineno, column, e.to_string()))?;
                        generators = Some(names);
                        alphabet = Some(a);
                    }
                    "order" => {
                        if value != "deglex" {
                            return Err(syntax(
                                lineno,
                                column,
                                format!("unsupported order `{value}`"),
                            ));
                        }
                    }
                    other => {
                        return Err(syntax(lineno, column, format!("unknown header `{other}`")))
                    }
                }
            }
            Section::Relations => {
                let alphabet = alphabet.as_ref().expect("checked at `relations:`");
                let ctx = Ctx {
                    alphabet,
                    numeric: alphabet
                        .names()
                        .iter()
                        .any(|n| n.chars().all(|c| c.is_ascii_digit())),
                    line: lineno,
                };
                let toks = lex(&ctx, body)?;
                let mut parser = Parser {
                    ctx: &ctx,
                    toks,
                    pos: 0,
                    end_column: body.chars().count() + 1,
                };
                let lhs = parser.sum()?;
                let rhs = if parser.peek() == Some(&Tok::Eq) {
                    parser.bump();
                    Some(parser.sum()?)
                } else {
                    None
                };
                if parser.peek().is_some() {
                    return ctx.err(parser.column(), "unexpected trailing input");
                }
                match kind {
                    Kind::Lie => {
                        let mut p = lie_value(&ctx, &mut br, lhs, column)?;
                        if let Some(r) = rhs {
                            p = &p - &lie_value(&ctx, &mut br, r, column)?;
                        }
                        lie.push(p);
                    }
                    _ => {
                        let mut p = assoc_value(&ctx, lhs, column)?;
                        if let Some(r) = rhs {
                            p = &p - &assoc_value(&ctx, r, column)?;
                        }
                        assoc.push(p);
                    }
                }
            }
            Section::Expected => {
                let Some((key, value)) = trimmed.split_once('=') else {
                    return Err(syntax(
                        lineno,
                        column,
                        format!("expected `key=value`, got `{trimmed}`"),
                    ));
                };
                expected.insert(key.trim().to_string(), value.trim().to_string());
            }
        }
    }

    let Some(generators) = generators else {
        return Err(syntax(
            text.lines().count().max(1),
            1,
            "missing `generators=`".into(),
        ));
    };
    let alphabet = alphabet.expect("set with generators");
    let relations = match kind {
        Kind::Lie => Relations::Lie(lie),
        _ => Relations::Assoc(assoc),
    };
    Ok(Presentation {
        kind,
        generators,
        alphabet,
        relations,
        expected,
    })
}

/// Parses a polynomial over `alphabet` in the relation syntax (`=` allowed).
pub fn parse_polynomial(
    alphabet: &Alphabet,
    text: &str,
) -> Result<NcPolynomial, PresentationError> {
    let ctx = Ctx {
        alphabet,
        numeric: alphabet
            .names()
            .iter()
            .any(|n| n.chars().all(|c| c.is_ascii_digit())),
        line: 1,
    };
    let toks = lex(&ctx, text)?;
    let mut parser = Parser {
        ctx: &ctx,
        toks,
        pos: 0,
        end_column: text.chars().count() + 1,
    };
    let lhs = parser.sum()?;
    let mut p = assoc_value(&ctx, lhs, 1)?;
    if parser.peek() == Some(&Tok::Eq) {
        parser.bump();
        let rhs = parser.sum()?;
        p = &p - &assoc_value(&ctx, rhs, 1)?;
    }
    if parser.peek().is_some() {
        return ctx.err(parser.column(), "unexpected trailing input");
    }
    Ok(p)
}

/// Parses a Lie polynomial over `alphabet`.
pub fn parse_lie_polynomial(
    alphabet: &Alphabet,
    text: &str,
) -> Result<LiePolynomial, PresentationError> {
    let ctx = Ctx {
        alphabet,
        numeric: alphabet
            .names()
            .iter()
            .any(|n| n.chars().all(|c| c.is_ascii_digit())),
        line: 1,
    };
    let toks = lex(&ctx, text)?;
    let mut parser = Parser {
        ctx: &ctx,
        toks,
        pos: 0,
        end_column: text.chars().count() + 1,
    };
    let terms = parser.sum()?;
    if parser.peek().is_some() {
        return ctx.err(parser.column(), "unexpected trailing input");
    }
    lie_value(&ctx, &mut Bracketer::new(), terms, 1)
}

/// Parses a single bracketing such as `[[a,b],c]` or `[a b c]`.
pub fn parse_lie_monomial(
    alphabet: &Alphabet,
    text: &str,
) -> Result<LieMonomial, PresentationError> {
    let ctx = Ctx {
        alphabet,
        numeric: false,
        line: 1,
    };
    let toks = lex(&ctx, text)?;
    let mut parser = Parser {
        ctx: &ctx,
        toks,
        pos: 0,
        end_column: text.chars().count() + 1,
    };
    let m = parser.lie_item()?;
    if parser.peek().is_some() {
        return ctx.err(parser.column(), "unexpected trailing input");
    }
    Ok(m)
}

/// Renders a Lie polynomial in the input syntax.
pub fn render_lie(p: &LiePolynomial, alphabet: &Alphabet) -> String {
    emit_lie(p, alphabet)
}

/// Renders an associative polynomial in the input syntax.
pub fn render_assoc(p: &NcPolynomial, alphabet: &Alphabet) -> String {
    emit_assoc(p, alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn simple_monoid() {
        let p = Presentation::parse(
            "kind=monoid\ngenerators=a b\norder=deglex\nrelations:\na*b = b*a\n",
        )
        .unwrap();
        let x = &p.alphabet;
        let ab = x.word(&["a", "b"]).unwrap();
        let ba = x.word(&["b", "a"]).unwrap();
        assert_eq!(
            p.relations,
            Relations::Assoc(vec![NcPolynomial::binomial(ab, ba)])
        );
        assert_eq!(p.kind, Kind::Monoid);
    }

    #[test]
    fn bare_polynomial_with_coefficients() {
        let p = Presentation::parse(
            "generators=a b c\nrelations:\na*c \u{2212} c*a + 2 b\nb b - (1/2) a + 3/4\na*b = (-1)\n",
        )
        .unwrap();
        let x = p.alphabet.clone();
        let w = |s: &[&str]| x.word(s).unwrap();
        let Relations::Assoc(r) = &p.relations else {
            panic!()
        };
        assert_eq!(
            r[0],
            NcPolynomial::from_terms([
                (w(&["a", "c"]), int(1)),
                (w(&["c", "a"]), int(-1)),
                (w(&["b"]), int(2))
            ])
        );
        assert_eq!(
            r[1],
            NcPolynomial::from_terms([
                (w(&["b", "b"]), int(1)),
                (w(&["a"]), rat(-1, 2)),
                (Word::empty(), rat(3, 4))
            ])
        );
        assert_eq!(
            r[2],
            NcPolynomial::from_terms([(w(&["a", "b"]), int(1)), (Word::empty(), int(1))])
        );
    }

    #[test]
    fn unknown_generator_reports_position() {
        let err =
            Presentation::parse("kind=monoid\ngenerators=x y\norder=deglex\nrelations:\nx*q = 1\n")
                .unwrap_err();
        assert_eq!(
            err,
            PresentationError::Syntax {
                line: 5,
                column: 3,
                message: "unknown generator `q`".into()
            }
        );
        assert_eq!(err.to_string(), "line 5, column 3: unknown generator `q`");
    }

    #[test]
    fn numeric_generators() {
        let p =
            Presentation::parse("generators=3 2 1\nrelations:\n3*3*2 = 3*2*3\n3 2 1 2 = 2 3 2 1\n")
                .unwrap();
        let Relations::Assoc(r) = &p.relations else {
            panic!()
        };
        assert_eq!(r[1].len(), 2);
        let err = Presentation::parse("generators=3 2 1\nrelations:\n332 = 323\n").unwrap_err();
        assert!(err.to_string().contains("unknown generator `332`"));
        let q = parse_polynomial(&p.alphabet, "(2) 3*1 - (1)").unwrap();
        assert_eq!(q.len(), 2);
    }

    #[test]
    fn groups_get_inverses() {
        let p =
            Presentation::parse("kind=group\ngenerators=a b\nrelations:\na*b*a-1 = b\n").unwrap();
        assert_eq!(p.alphabet.names(), ["a", "a-1", "b", "b-1"]);
        assert_eq!(p.associative_relations().unwrap().len(), 5);
        let back = Presentation::parse(&p.emit()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn lie_relations() {
        let p = Presentation::parse(
            "kind=lie\ngenerators=x y z\nrelations:\n[x,y]\n[x z y] = 2 [y,z]\n",
        )
        .unwrap();
        let Relations::Lie(r) = &p.relations else {
            panic!()
        };
        assert_eq!(render_lie(&r[0], &p.alphabet), "[x,y]");
        // [[x,z],y] is an NLSW
        assert_eq!(render_lie(&r[1], &p.alphabet), "[[x,z],y] - (2) [y,z]");
        let err =
            Presentation::parse("kind=lie\ngenerators=x y\nrelations:\n[x,y] = 1\n").unwrap_err();
        assert!(err.to_string().contains("unit word"));
        let back = Presentation::parse(&p.emit()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn expected_block_round_trips() {
        let text = "kind=monoid\ngenerators=s2 s1\norder=deglex\nrelations:\ns1*s1 = 1\ns2*s2 = 1\ns2*s1*s2 = s1*s2*s1\nexpected:\nirr_count=6\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.expected.get("irr_count").map(String::as_str), Some("6"));
        assert_eq!(p.emit(), text);
    }

    #[test]
    fn syntax_errors() {
        for (text, needle) in [
            ("relations:\n", "`generators=` must come before"),
            ("generators=a\nrelations:\na *\n", "expected a factor after"),
            ("generators=a\nrelations:\n(1/0) a\n", "bad coefficient"),
            ("generators=a\norder=lex\n", "unsupported order"),
            ("generators=a a\n", "duplicate"),
            (
                "kind=lie\ngenerators=a b\nrelations:\n[a]\n",
                "at least two",
            ),
            (
                "generators=a b\nrelations:\na = b c\n",
                "unknown generator `c`",
            ),
        ] {
            let err = Presentation::parse(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
    }
}
