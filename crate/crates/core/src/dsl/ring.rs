use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::lexer::{Cursor, Pos};
use crate::error::{Error, Result};
use crate::graded::{Generator, Poly, RingPresentation};

struct Ctx<'a> {
    gens: &'a [Generator],
    degrees: Vec<u32>,
    odd: Vec<bool>,
}

impl Ctx<'_> {
    fn n(&self) -> usize {
        self.gens.len()
    }

    fn expr(&self, c: &mut Cursor) -> Result<Poly> {
        let mut acc = if c.eat('-') { self.term(c)?.scale(&BigInt::from(-1)) } else { self.term(c)? };
        loop {
            if c.eat('+') {
                acc = acc.add(&self.term(c)?);
            } else if c.eat('-') {
                acc = acc.sub(&self.term(c)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&self, c: &mut Cursor) -> Result<Poly> {
        let mut acc = self.factor(c)?;
        while c.eat('*') {
            acc = acc.mul(&self.factor(c)?, &self.odd);
        }
        Ok(acc)
    }

    fn factor(&self, c: &mut Cursor) -> Result<Poly> {
        let base = self.atom(c)?;
        if c.eat('^') {
            let e = c.uint()?;
            let e = e.to_u32().filter(|&e| e <= 1000).map_or_else(|| c.error("exponent too large"), Ok)?;
            return Ok(base.pow(e, self.n(), &self.odd));
        }
        Ok(base)
    }

    fn atom(&self, c: &mut Cursor) -> Result<Poly> {
        if c.eat('(') {
            let e = self.expr(c)?;
            c.expect(')')?;
            return Ok(e);
        }
        if c.peek_digit() {
            return Ok(Poly::constant(self.n(), c.uint()?));
        }
        let (name, (line, col)) = c.ident()?;
        match self.gens.iter().position(|g| g.name == name) {
            Some(i) => Ok(Poly::generator(self.n(), i)),
            None => Err(Error::UnknownIdentifier { name, line, col }),
        }
    }
}

/// Parses a `.ring` presentation:
///
/// ```text
/// ring NAME {
///   gen alpha deg 2, mu deg 3;
///   rel 3*alpha, 3*mu, alpha^2*mu = 0;
/// }
/// ```
pub fn parse_ring(text: &str) -> Result<RingPresentation> {
    let mut c = Cursor::new(text);
    let pres = parse_ring_block(&mut c)?;
    if !c.at_end() {
        return c.error("trailing input after ring block");
    }
    Ok(pres)
}

pub(crate) fn parse_ring_block(c: &mut Cursor) -> Result<RingPresentation> {
    c.keyword("ring")?;
    let name = c.name()?;
    c.expect('{')?;
    let mut gens: Vec<Generator> = Vec::new();
    let mut rels: Vec<(Pos, Poly)> = Vec::new();
    while !c.eat('}') {
        let (kw, (line, col)) = c.ident()?;
        match kw.as_str() {
            "gen" => loop {
                if c.eat(';') {
                    break;
                }
                let (gname, (gl, gc)) = c.ident()?;
                c.keyword("deg")?;
                let d = c.uint()?.to_u32().filter(|&d| d >= 1);
                let Some(degree) = d else { return c.error("generator degree must be a positive integer") };
                if gens.iter().any(|g| g.name == gname) {
                    return Err(Error::Syntax { line: gl, col: gc, msg: format!("duplicate generator `{gname}`") });
                }
                gens.push(Generator { name: gname, degree });
                if !c.eat(',') {
                    c.expect(';')?;
                    break;
                }
            },
            "rel" => {
                let ctx = Ctx {
                    gens: &gens,
                    degrees: gens.iter().map(|g| g.degree).collect(),
                    odd: gens.iter().map(|g| g.degree % 2 == 1).collect(),
                };
                loop {
                    if c.eat(';') {
                        break;
                    }
                    c.peek();
                    let pos = c.position();
                    let lhs = ctx.expr(c)?;
                    let rel = if c.eat('=') { lhs.sub(&ctx.expr(c)?) } else { lhs };
                    let degs = rel.degrees(&ctx.degrees);
                    if degs.len() > 1 {
                        return Err(Error::InhomogeneousRelation { line: pos.0, col: pos.1, degrees: degs });
                    }
                    rels.push((pos, rel));
                    if !c.eat(',') {
                        c.expect(';')?;
                        break;
                    }
                }
            }
            other => return Err(Error::Syntax { line, col, msg: format!("expected `gen` or `rel`, found `{other}`") }),
        }
    }
    RingPresentation::new(name, gens, rels.into_iter().map(|(_, r)| r).collect())
}

/// Parses a polynomial in the generators of `r`, e.g. `delta1 - beta` or `3*tau - beta`.
pub fn parse_poly(r: &RingPresentation, text: &str) -> Result<Poly> {
    let ctx = Ctx { gens: r.generators(), degrees: r.degrees().to_vec(), odd: r.odd().to_vec() };
    let mut c = Cursor::new(text);
    let p = ctx.expr(&mut c)?;
    if !c.at_end() {
        return c.error("trailing input after expression");
    }
    Ok(r.normalize(&p))
}

/// Canonical text form; `parse_ring(&print_ring(r))` reproduces `r`.
pub fn print_ring(r: &RingPresentation) -> String {
    let mut s = format!("ring {} {{\n", r.name());
    let gens: Vec<String> = r.generators().iter().map(|g| format!("{} deg {}", g.name, g.degree)).collect();
    s.push_str(&format!("  gen {};\n", gens.join(", ")));
    if r.relations().is_empty() {
        s.push_str("  rel ;\n");
    } else {
        let rels: Vec<String> = r.relations().iter().map(|p| format!("    {}", r.format(p))).collect();
        s.push_str(&format!("  rel\n{};\n", rels.join(",\n")));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text =
            "ring T { gen alpha deg 2, mu deg 3; # comment\n rel 3*alpha, 3*mu, alpha*(alpha - alpha) = 0, mu*mu; }";
        let r = parse_ring(text).unwrap();
        assert_eq!(r.ngens(), 2);
        assert_eq!(r.relations().len(), 2);
        let printed = print_ring(&r);
        assert_eq!(parse_ring(&printed).unwrap(), r);
        assert_eq!(print_ring(&parse_ring(&printed).unwrap()), printed);
    }

    #[test]
    fn inhomogeneous_relation_is_rejected() {
        let text = "ring T {\n gen alpha deg 2, mu deg 3;\n rel 3*alpha + mu;\n}";
        match parse_ring(text) {
            Err(Error::InhomogeneousRelation { line, col, degrees }) => {
                assert_eq!((line, col), (3, 6));
                assert_eq!(degrees, vec![2, 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_identifier_has_position() {
        let err = parse_ring("ring T { gen a deg 2; rel 3*b; }").unwrap_err();
        assert_eq!(err, Error::UnknownIdentifier { name: "b".into(), line: 1, col: 29 });
    }

    #[test]
    fn syntax_error_has_position() {
        assert!(matches!(parse_ring("ring T { gen a deg ; }"), Err(Error::Syntax { line: 1, .. })));
    }
}
