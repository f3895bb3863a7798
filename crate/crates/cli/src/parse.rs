use crate::CliError;

/// Tokens of the expression language. A number immediately followed by a
/// blade letter is one blade literal, so "1e3" is the blade e3 with
/// coefficient 1 and there is no scientific notation.
#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    Num(f64),
    Blade {
        coeff: f64,
        target: bool,
        indices: String,
    },
    Ident(String),
    Let,
    Sym(char),
}

fn err(pos: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, CliError> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        if c.is_ascii_digit() || c == b'.' {
            let mut saw_digit = false;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'.') {
                saw_digit |= bytes[pos].is_ascii_digit();
                pos += 1;
            }
            if !saw_digit {
                return Err(err(start, "lone '.' is not a number"));
            }
            let text = std::str::from_utf8(&bytes[start..pos]).unwrap();
            let value: f64 = text
                .parse()
                .map_err(|_| err(start, format!("malformed number '{text}'")))?;
            if let Some(blade) = lex_blade(bytes, &mut pos, value) {
                out.push((start, blade));
            } else {
                out.push((start, Token::Num(value)));
            }
            continue;
        }
        if (c == b'e' || c == b'E') && bytes.get(pos + 1).is_some_and(u8::is_ascii_digit) {
            let blade = lex_blade(bytes, &mut pos, 1.0).unwrap();
            out.push((start, blade));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            let word = std::str::from_utf8(&bytes[start..pos]).unwrap();
            out.push((
                start,
                match word {
                    "let" => Token::Let,
                    // reserved as the commutator operator
                    "x" => Token::Sym('x'),
                    _ => Token::Ident(word.to_string()),
                },
            ));
            continue;
        }
        if b"*^|&~!+-(),;=".contains(&c) {
            out.push((start, Token::Sym(c as char)));
            pos += 1;
            continue;
        }
        return Err(err(pos, format!("unexpected character '{}'", c as char)));
    }
    Ok(out)
}

fn lex_blade(bytes: &[u8], pos: &mut usize, coeff: f64) -> Option<Token> {
    let letter = *bytes.get(*pos)?;
    if letter != b'e' && letter != b'E' {
        return None;
    }
    if !bytes.get(*pos + 1).is_some_and(u8::is_ascii_digit) {
        return None;
    }
    *pos += 1;
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    Some(Token::Blade {
        coeff,
        target: letter == b'E',
        indices: std::str::from_utf8(&bytes[start..*pos]).unwrap().to_string(),
    })
}

#[derive(Debug, Clone)]
pub enum Expr {
    Num(f64),
    Blade {
        coeff: f64,
        target: bool,
        indices: String,
        pos: usize,
    },
    Var {
        name: String,
        pos: usize,
    },
    Call {
        name: String,
        args: Vec<Expr>,
        pos: usize,
    },
    Unary {
        op: char,
        arg: Box<Expr>,
    },
    Binary {
        op: char,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
}

#[derive(Debug, Clone)]
pub enum Stmt {
    Bind { name: String, value: Expr },
    Value(Expr),
}

struct Parser {
    toks: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), CliError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected '{c}'")))
        }
    }

    fn statement(&mut self) -> Result<Stmt, CliError> {
        if self.peek() == Some(&Token::Let) {
            self.bump();
            let name = match self.bump() {
                Some((_, Token::Ident(name))) => name,
                other => {
                    let pos = other.map_or(self.end, |(p, _)| p);
                    return Err(err(pos, "expected a name after 'let'"));
                }
            };
            self.expect_sym('=')?;
            return Ok(Stmt::Bind {
                name,
                value: self.expr()?,
            });
        }
        Ok(Stmt::Value(self.expr()?))
    }

    // precedence, loosest first: additive, join, products, prefix operators
    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.join_level()?;
        while let Some(&Token::Sym(op @ ('+' | '-'))) = self.peek() {
            self.bump();
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(self.join_level()?),
            };
        }
        Ok(lhs)
    }

    fn join_level(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.product()?;
        while self.eat_sym('&') {
            lhs = Expr::Binary {
                op: '&',
                lhs: Box::new(lhs),
                rhs: Box::new(self.product()?),
            };
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.unary()?;
        while let Some(&Token::Sym(op @ ('*' | '^' | '|' | 'x'))) = self.peek() {
            self.bump();
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(self.unary()?),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if let Some(&Token::Sym(op @ ('-' | '~' | '!'))) = self.peek() {
            self.bump();
            return Ok(Expr::Unary {
                op,
                arg: Box::new(self.unary()?),
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        match self.bump() {
            Some((_, Token::Num(v))) => Ok(Expr::Num(v)),
            Some((
                _,
                Token::Blade {
                    coeff,
                    target,
                    indices,
                },
            )) => Ok(Expr::Blade {
                coeff,
                target,
                indices,
                pos,
            }),
            Some((_, Token::Ident(name))) => {
                if self.eat_sym('(') {
                    let mut args = Vec::new();
                    if !self.eat_sym(')') {
                        loop {
                            args.push(self.expr()?);
                            if self.eat_sym(')') {
                                break;
                            }
                            self.expect_sym(',')?;
                        }
                    }
                    Ok(Expr::Call { name, args, pos })
                } else {
                    Ok(Expr::Var { name, pos })
                }
            }
            Some((_, Token::Sym('('))) => {
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Some((p, t)) => Err(err(p, format!("unexpected token {t:?}"))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

/// Parse one input: `let` bindings and expressions separated by ';'. The
/// value of the input is the value of its last expression.
pub fn parse_program(src: &str) -> Result<Vec<Stmt>, CliError> {
    let mut parser = Parser {
        toks: tokenize(src)?,
        at: 0,
        end: src.len(),
    };
    let mut stmts = Vec::new();
    if parser.peek().is_none() {
        return Err(err(0, "empty input"));
    }
    loop {
        stmts.push(parser.statement()?);
        if parser.eat_sym(';') {
            if parser.peek().is_none() {
                break;
            }
            continue;
        }
        if parser.peek().is_some() {
            return Err(err(parser.pos(), "expected ';' or end of input"));
        }
        break;
    }
    Ok(stmts)
}
