//! Textual group specs: `D:12`, `HB:2:1`, `F20 x Z:2`, …

use commute_spectra_core::FamilySpec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// Family names never contain a lowercase `x`, which is the product operator.
    fn name(&mut self) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if (c.is_ascii_alphanumeric() || c == b'_') && c != b'x' {
                self.pos += 1;
            } else {
                break;
            }
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn number(&mut self) -> Result<(u32, usize), ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse() {
            Ok(v) => Ok((v, start)),
            Err(_) => err(start, format!("number {text} is out of range")),
        }
    }

    /// `:<n>` repeated; returns each value with its offset.
    fn params(&mut self) -> Result<Vec<(u32, usize)>, ParseError> {
        let mut out = Vec::new();
        while self.peek() == Some(b':') {
            self.pos += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<FamilySpec, ParseError> {
        use FamilySpec::*;
        self.skip_ws();
        let start = self.pos;
        let name = self.name().to_string();
        if name.is_empty() {
            return err(start, "expected a group name");
        }
        let params = self.params()?;
        let arity = |k: usize| -> Result<(), ParseError> {
            if params.len() == k {
                Ok(())
            } else {
                err(start, format!("{name} takes {k} parameter(s), got {}", params.len()))
            }
        };
        let spec = match name.as_str() {
            "M16" | "Z4sZ4" | "D8cZ4" | "SG16_3" | "F20" => {
                arity(0)?;
                match name.as_str() {
                    "M16" => M16,
                    "Z4sZ4" => Z4rtimesZ4,
                    "D8cZ4" => D8centralZ4,
                    "SG16_3" => SG16_3,
                    _ => F20,
                }
            }
            "Z" | "D" | "Q" | "QD" | "A" | "S" | "SL2" | "GL2" | "PSL2" | "HA" => {
                arity(1)?;
                let (v, at) = params[0];
                match name.as_str() {
                    "Z" => Cyclic(v),
                    "D" if v < 6 || v % 2 == 1 => return err(at, "D:<order> needs an even order >= 6"),
                    "D" => Dihedral(v),
                    "Q" if v < 8 || v % 4 != 0 => return err(at, "Q:<order> needs an order >= 8 divisible by 4"),
                    "Q" => GenQuaternion(v),
                    "QD" if v < 16 || !v.is_power_of_two() => {
                        return err(at, "QD:<order> needs a power of two >= 16")
                    }
                    "QD" => Quasidihedral(v.trailing_zeros()),
                    "A" => Alternating(v),
                    "S" => Symmetric(v),
                    "SL2" => SL2(v),
                    "GL2" => GL2(v),
                    "PSL2" => PSL2(v),
                    _ => HanakiA(v),
                }
            }
            "HB" | "PQ" => {
                arity(2)?;
                let (a, b) = (params[0].0, params[1].0);
                if name == "HB" {
                    HanakiB(a, b)
                } else {
                    SemidirectPQ(a, b)
                }
            }
            _ => return err(start, format!("unknown group family {name:?}")),
        };
        Ok(spec)
    }
}

/// Parses the group-spec grammar; `x` is a left-associative direct product.
pub fn parse_group_spec(text: &str) -> Result<FamilySpec, ParseError> {
    let mut c = Cursor { src: text.as_bytes(), pos: 0 };
    let mut spec = c.atom()?;
    loop {
        c.skip_ws();
        match c.peek() {
            None => return Ok(spec),
            Some(b'x') => {
                c.pos += 1;
                spec = FamilySpec::product(spec, c.atom()?);
            }
            Some(_) => return err(c.pos, "expected 'x' or end of input"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use FamilySpec::*;

    #[test]
    fn grammar_cases() {
        assert_eq!(parse_group_spec("QD:16").unwrap(), Quasidihedral(4));
        assert_eq!(parse_group_spec("D:6 x Z:3").unwrap(), FamilySpec::product(Dihedral(6), Cyclic(3)));
        assert_eq!(parse_group_spec("D:6xZ:3").unwrap(), FamilySpec::product(Dihedral(6), Cyclic(3)));
        assert_eq!(parse_group_spec("PQ:3:7").unwrap(), SemidirectPQ(3, 7));
        assert_eq!(parse_group_spec("  HB:2:1 ").unwrap(), HanakiB(2, 1));
        assert_eq!(
            parse_group_spec("Z:2 x Z:2 x Q:8").unwrap(),
            FamilySpec::product(FamilySpec::product(Cyclic(2), Cyclic(2)), GenQuaternion(8))
        );
        for s in ["M16", "Z4sZ4", "D8cZ4", "SG16_3", "F20"] {
            assert_eq!(parse_group_spec(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_group_spec("D:7").unwrap_err().offset, 2);
        assert_eq!(parse_group_spec("Q:12 x QD:24").unwrap_err().offset, 10);
        assert_eq!(parse_group_spec("D:6 y").unwrap_err().offset, 4);
        assert_eq!(parse_group_spec("").unwrap_err().offset, 0);
        assert_eq!(parse_group_spec("Foo:3").unwrap_err().offset, 0);
        assert_eq!(parse_group_spec("Z:").unwrap_err().offset, 2);
        assert_eq!(parse_group_spec("HB:2").unwrap_err().offset, 0);
        assert_eq!(parse_group_spec("F20:1").unwrap_err().offset, 0);
        assert_eq!(parse_group_spec("Z:99999999999").unwrap_err().offset, 2);
        assert_eq!(parse_group_spec("D:6 x").unwrap_err().offset, 5);
    }

    fn atom() -> impl Strategy<Value = FamilySpec> {
        prop_oneof![
            (1u32..1000).prop_map(Cyclic),
            (3u32..500).prop_map(|m| Dihedral(2 * m)),
            (2u32..500).prop_map(|n| GenQuaternion(4 * n)),
            (4u32..31).prop_map(Quasidihedral),
            Just(M16),
            Just(Z4rtimesZ4),
            Just(D8centralZ4),
            Just(SG16_3),
            Just(F20),
            (1u32..9).prop_map(Alternating),
            (1u32..9).prop_map(Symmetric),
            (2u32..100).prop_map(SL2),
            (2u32..100).prop_map(GL2),
            (2u32..100).prop_map(PSL2),
            (1u32..20).prop_map(HanakiA),
            (2u32..20, 1u32..5).prop_map(|(p, n)| HanakiB(p, n)),
            (2u32..20, 2u32..50).prop_map(|(p, q)| SemidirectPQ(p, q)),
        ]
    }

    proptest! {
        #[test]
        fn display_round_trips(parts in prop::collection::vec(atom(), 1..4)) {
            let spec = parts.into_iter().reduce(FamilySpec::product).unwrap();
            prop_assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }
}
