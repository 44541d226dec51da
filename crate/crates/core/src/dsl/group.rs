use num_traits::ToPrimitive;

use super::lexer::{Cursor, Pos};
use crate::error::{Error, Result};
use crate::pcgroup::{word_commutator, word_inverse, word_simplify, PcGroup, PcPresentation, Word, ENUMERATION_BOUND};

#[derive(Clone, Debug)]
enum Node {
    One,
    Gen(usize),
    Pow(Box<Node>, i64),
    Comm(Box<Node>, Box<Node>),
    Seq(Vec<Node>),
}

impl Node {
    fn lower(&self) -> Word {
        match self {
            Node::One => Vec::new(),
            Node::Gen(i) => vec![(*i, 1)],
            Node::Pow(b, e) => match **b {
                Node::Gen(i) => vec![(i, *e)],
                _ => {
                    let w = b.lower();
                    let unit = if *e < 0 { word_inverse(&w) } else { w };
                    (0..e.unsigned_abs()).flat_map(|_| unit.clone()).collect()
                }
            },
            Node::Comm(a, b) => word_commutator(&a.lower(), &b.lower()),
            Node::Seq(items) => items.iter().flat_map(Node::lower).collect(),
        }
    }
}

struct Ctx<'a> {
    names: &'a [String],
}

impl Ctx<'_> {
    fn starts_item(c: &mut Cursor) -> bool {
        matches!(c.peek(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_' || ch == '[' || ch == '(' || ch == '1')
    }

    fn word(&self, c: &mut Cursor) -> Result<Node> {
        let mut items = vec![self.item(c)?];
        loop {
            if c.eat('*') || Self::starts_item(c) {
                items.push(self.item(c)?);
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 { items.pop().expect("one item") } else { Node::Seq(items) })
    }

    fn item(&self, c: &mut Cursor) -> Result<Node> {
        let base = self.atom(c)?;
        if c.eat('^') {
            let e = c.int()?;
            let e = e.to_i64().filter(|e| e.abs() <= 1_000_000).map_or_else(|| c.error("exponent too large"), Ok)?;
            return Ok(Node::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&self, c: &mut Cursor) -> Result<Node> {
        if c.eat('[') {
            let a = self.word(c)?;
            c.expect(',')?;
            let b = self.word(c)?;
            c.expect(']')?;
            return Ok(Node::Comm(Box::new(a), Box::new(b)));
        }
        if c.eat('(') {
            let w = self.word(c)?;
            c.expect(')')?;
            return Ok(w);
        }
        if c.peek() == Some('1') {
            let v = c.uint()?;
            if v != 1.into() {
                return c.error("the only integer allowed in a word is 1");
            }
            return Ok(Node::One);
        }
        let (name, (line, col)) = c.ident()?;
        match self.names.iter().position(|n| *n == name) {
            Some(i) => Ok(Node::Gen(i)),
            None => Err(Error::UnknownIdentifier { name, line, col }),
        }
    }
}

fn at(pos: Pos, e: Error) -> Error {
    match e {
        Error::BadParameter(msg) | Error::Inconsistent(msg) => Error::Syntax { line: pos.0, col: pos.1, msg },
        other => other,
    }
}

/// Parses a `.grp` power-commutator presentation:
///
/// ```text
/// group G41 {
///   gen A:3, B:9, C:3;
///   rel [B,A] = C, [C,A] = B^3;
/// }
/// ```
///
/// Relations are `X^r = w` with `r` the relative order of `X`, or `[X,Y] = w`;
/// a bare left-hand side means `= 1`. Words are products of generator powers
/// written by juxtaposition or `*`, with `[x,y] = x⁻¹y⁻¹xy` and parentheses.
pub fn parse_group(text: &str) -> Result<PcPresentation> {
    let mut c = Cursor::new(text);
    let pres = parse_group_block(&mut c)?;
    if !c.at_end() {
        return c.error("trailing input after group block");
    }
    Ok(pres)
}

pub(crate) fn parse_group_block(c: &mut Cursor) -> Result<PcPresentation> {
    c.keyword("group")?;
    let name = c.name()?;
    c.expect('{')?;
    c.keyword("gen")?;
    let mut gens: Vec<(String, u64)> = Vec::new();
    loop {
        let (g, (line, col)) = c.ident()?;
        c.expect(':')?;
        let r = c.uint()?;
        let r = r.to_u64().map_or_else(|| c.error("relative order too large"), Ok)?;
        if gens.iter().any(|(h, _)| *h == g) {
            return Err(Error::Syntax { line, col, msg: format!("duplicate generator `{g}`") });
        }
        gens.push((g, r));
        if !c.eat(',') {
            break;
        }
    }
    c.expect(';')?;
    let spec: Vec<(&str, u64)> = gens.iter().map(|(g, r)| (g.as_str(), *r)).collect();
    let start = c.position();
    let mut pres = PcPresentation::new(name, &spec).map_err(|e| at(start, e))?;
    let names = pres.names.clone();
    let ctx = Ctx { names: &names };
    c.keyword("rel")?;
    if !c.eat(';') {
        loop {
            c.skip_ws();
            let pos = c.position();
            let lhs = ctx.word(c)?;
            let rhs = if c.eat('=') { word_simplify(&ctx.word(c)?.lower()) } else { Vec::new() };
            apply_relation(&mut pres, &lhs, rhs).map_err(|e| at(pos, e))?;
            if !c.eat(',') {
                break;
            }
        }
        c.expect(';')?;
    }
    c.expect('}')?;
    if pres.nominal_order() <= ENUMERATION_BOUND as u128 {
        PcGroup::new(pres.clone()).map_err(|e| at(start, e))?;
    }
    Ok(pres)
}

fn apply_relation(pres: &mut PcPresentation, lhs: &Node, rhs: Word) -> Result<()> {
    match lhs {
        Node::Pow(b, e) => match **b {
            Node::Gen(i) if *e as u64 == pres.rel_orders[i] && *e > 0 => pres.put_power(i, rhs),
            Node::Gen(i) => Err(Error::BadParameter(format!(
                "power relation for `{}` must use its relative order {}",
                pres.names[i], pres.rel_orders[i]
            ))),
            _ => Err(Error::BadParameter("left-hand side must be `X^r` or `[X,Y]`".into())),
        },
        Node::Comm(a, b) => match (&**a, &**b) {
            (Node::Gen(j), Node::Gen(i)) if j > i => pres.put_commutator(*j, *i, rhs),
            (Node::Gen(j), Node::Gen(i)) if j < i => pres.put_commutator(*i, *j, word_inverse(&rhs)),
            _ => Err(Error::BadParameter("commutator relations need two distinct generators".into())),
        },
        _ => Err(Error::BadParameter("left-hand side must be `X^r` or `[X,Y]`".into())),
    }
}

/// Canonical text of a presentation; `parse_group` inverts it exactly.
pub fn print_group(p: &PcPresentation) -> String {
    let mut s = format!("group {} {{\n", p.name);
    let gens: Vec<String> = p.names.iter().zip(&p.rel_orders).map(|(n, r)| format!("{n}:{r}")).collect();
    s.push_str(&format!("  gen {};\n", gens.join(", ")));
    let mut rels = Vec::new();
    for (i, w) in p.powers.iter().enumerate() {
        if !w.is_empty() {
            rels.push(format!("    {}^{} = {}", p.names[i], p.rel_orders[i], p.format_word(w)));
        }
    }
    for (&(j, i), w) in &p.commutators {
        rels.push(format!("    [{},{}] = {}", p.names[j], p.names[i], p.format_word(w)));
    }
    if rels.is_empty() {
        s.push_str("  rel ;\n");
    } else {
        s.push_str(&format!("  rel\n{};\n", rels.join(",\n")));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgroup::{isomorphic, make_group, Family};

    #[test]
    fn parses_family_member() {
        let p = parse_group("group G41 { gen A:3, B:9, C:3; rel [B,C]=1, [B,A]=C, [C,A]=B^3; }").unwrap();
        assert_eq!(p, PcPresentation { name: "G41".into(), ..make_group(Family::G, 4, 1).unwrap() });
        assert_eq!(PcGroup::new(p).unwrap().order(), 81);
    }

    #[test]
    fn literal_example_has_order_243() {
        let p = parse_group("group G41 { gen A:3, B:27, C:3; rel [B,C]=1, [B,A]=C, [C,A]=B^9; }").unwrap();
        let g = PcGroup::new(p).unwrap();
        assert_eq!(g.order(), 243);
        let g51 = PcGroup::new(make_group(Family::G, 5, 1).unwrap()).unwrap();
        assert!(isomorphic(&g, &g51).unwrap().isomorphic);
    }

    #[test]
    fn cyclic_group_without_relations() {
        let p = parse_group("group C3 { gen x:3; rel ; }").unwrap();
        assert_eq!(PcGroup::new(p).unwrap().order(), 3);
    }

    #[test]
    fn reversed_commutator_and_juxtaposition() {
        let p = parse_group("group H { gen A:3, B:9, C:3; rel A^3 = B^-3, [A,B] = C^-1, [C,A] = B B B^-5; }").unwrap();
        assert_eq!(p, PcPresentation { name: "H".into(), ..make_group(Family::GPrime, 4, 1).unwrap() });
    }

    #[test]
    fn round_trip() {
        for (f, n, e) in [(Family::G, 5, -1), (Family::GPrime, 4, 1), (Family::Wreath, 4, 1), (Family::M, 5, 1)] {
            let p = make_group(f, n, e).unwrap();
            let text = print_group(&p);
            assert_eq!(parse_group(&text).unwrap(), p);
            assert_eq!(print_group(&parse_group(&text).unwrap()), text);
        }
    }

    #[test]
    fn errors_carry_positions() {
        match parse_group("group X { gen A:3;\n rel [A,Q]; }") {
            Err(Error::UnknownIdentifier { name, line, col }) => assert_eq!((name.as_str(), line, col), ("Q", 2, 9)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_group("group X { gen A:3; rel A^9; }"), Err(Error::Syntax { line: 1, col: 24, .. })));
        assert!(matches!(parse_group("group X { gen A:3, B:3; rel [B,A] = A; }"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_group("group X { gen A:3 rel ; }"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn inconsistent_presentations_are_rejected() {
        assert!(parse_group("group X { gen A:3, B:3, C:3; rel A^3 = B, [B,A] = C; }").is_err());
    }
}
