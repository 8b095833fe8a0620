use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::polycyclic::{collect_presentation, PolycyclicPresentation, Word};
use crate::group::table::{CayleyTable, GroupLimits};
use crate::number::{enumerate_partitions, is_prime};

/// High-level description of a finite group.
///
/// Text form: `cyclic:12`, `abelianp:2^[3,1]`, `product:(cyclic:8,abelianp:3^[1,1])`,
/// `heisenberg:3`, `raw:@path`, and
/// `polycyclic:2^[1,2];pow=[0,0]|[0,0];conj=[0,3]` where the conjugate words
/// are listed in pair order `(1,2), (1,3), .., (2,3), ..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    AbelianP { p: u64, partition: Vec<u32> },
    DirectProduct(Vec<GroupSpec>),
    Polycyclic(PolycyclicPresentation),
    Heisenberg(u64),
    Raw(CayleyTable),
}

impl GroupSpec {
    pub fn order(&self) -> u128 {
        match self {
            GroupSpec::Cyclic(n) => *n as u128,
            GroupSpec::AbelianP { p, partition } => {
                let m: u32 = partition.iter().sum();
                (*p as u128).checked_pow(m).unwrap_or(u128::MAX)
            }
            GroupSpec::DirectProduct(parts) => parts.iter().fold(1u128, |a, s| a.saturating_mul(s.order())),
            GroupSpec::Polycyclic(pres) => pres.order(),
            GroupSpec::Heisenberg(p) => (*p as u128).saturating_pow(3),
            GroupSpec::Raw(t) => t.order() as u128,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(0) => Err(Error::InvalidSpec("cyclic order must be at least 1".into())),
            GroupSpec::AbelianP { p, partition } => {
                if !is_prime(*p) {
                    return Err(Error::InvalidSpec(format!("{p} is not prime")));
                }
                if partition.is_empty() || partition.contains(&0) {
                    return Err(Error::InvalidSpec("partition entries must be positive".into()));
                }
                if partition.windows(2).any(|w| w[0] < w[1]) {
                    return Err(Error::InvalidSpec("partition must be non-increasing".into()));
                }
                Ok(())
            }
            GroupSpec::DirectProduct(parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidSpec("empty direct product".into()));
                }
                parts.iter().try_for_each(GroupSpec::validate)
            }
            GroupSpec::Heisenberg(p) if !is_prime(*p) => Err(Error::InvalidSpec(format!("{p} is not prime"))),
            _ => Ok(()),
        }
    }

    /// Parses the text form, reading `raw:@path` tables from disk.
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text, &|path| crate::format::read_group_file(Path::new(path))).parse_all()
    }

    /// Parses the text form with a custom loader for `raw:@path` references.
    pub fn parse_with(text: &str, load: &dyn Fn(&str) -> Result<CayleyTable>) -> Result<Self> {
        Parser::new(text, load).parse_all()
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

fn write_words(f: &mut fmt::Formatter<'_>, ws: &[Word]) -> fmt::Result {
    for (i, w) in ws.iter().enumerate() {
        if i > 0 {
            f.write_str("|")?;
        }
        write_list(f, w)?;
    }
    Ok(())
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::AbelianP { p, partition } => {
                write!(f, "abelianp:{p}^")?;
                write_list(f, partition)
            }
            GroupSpec::DirectProduct(parts) => {
                f.write_str("product:(")?;
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
            GroupSpec::Polycyclic(pres) => {
                write!(f, "polycyclic:{}^", pres.prime())?;
                write_list(f, pres.exponents())?;
                f.write_str(";pow=")?;
                write_words(f, pres.powers())?;
                f.write_str(";conj=")?;
                write_words(f, pres.conjugates())
            }
            GroupSpec::Heisenberg(p) => write!(f, "heisenberg:{p}"),
            // Tables are not inlined; the spec string only names the order.
            GroupSpec::Raw(t) => write!(f, "raw:#{}", t.order()),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    load: &'a dyn Fn(&str) -> Result<CayleyTable>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, load: &'a dyn Fn(&str) -> Result<CayleyTable>) -> Self {
        Parser { text: text.trim(), pos: 0, load }
    }

    fn err(&self, msg: impl fmt::Display) -> Error {
        Error::InvalidSpec(format!("{msg} at offset {} in '{}'", self.pos, self.text))
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{s}'")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a number"));
        }
        let s = &self.rest()[..digits];
        let v = s.parse::<u64>().map_err(|_| self.err("number out of range"))?;
        self.pos += digits;
        Ok(v)
    }

    fn list(&mut self) -> Result<Vec<u32>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            let v = self.number()?;
            out.push(u32::try_from(v).map_err(|_| self.err("entry out of range"))?);
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn words(&mut self) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        if !self.rest().starts_with('[') {
            return Ok(out);
        }
        loop {
            out.push(self.list()?);
            if !self.eat("|") {
                return Ok(out);
            }
        }
    }

    fn parse_all(mut self) -> Result<GroupSpec> {
        let spec = self.spec()?;
        if !self.rest().is_empty() {
            return Err(self.err("trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        if self.eat("cyclic:") {
            Ok(GroupSpec::Cyclic(self.number()?))
        } else if self.eat("abelianp:") {
            let p = self.number()?;
            self.expect("^")?;
            Ok(GroupSpec::AbelianP { p, partition: self.list()? })
        } else if self.eat("heisenberg:") {
            Ok(GroupSpec::Heisenberg(self.number()?))
        } else if self.eat("product:") {
            self.expect("(")?;
            let mut parts = vec![self.spec()?];
            while self.eat(",") {
                parts.push(self.spec()?);
            }
            self.expect(")")?;
            Ok(GroupSpec::DirectProduct(parts))
        } else if self.eat("polycyclic:") {
            let p = self.number()?;
            self.expect("^")?;
            let exps = self.list()?;
            self.expect(";pow=")?;
            let powers = self.words()?;
            self.expect(";conj=")?;
            let conj = self.words()?;
            Ok(GroupSpec::Polycyclic(PolycyclicPresentation::new(p, exps, powers, conj)?))
        } else if self.eat("raw:@") {
            let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
            let path = &self.rest()[..len];
            if path.is_empty() {
                return Err(self.err("missing raw table path"));
            }
            self.pos += len;
            Ok(GroupSpec::Raw((self.load)(path)?))
        } else {
            Err(self.err("unknown group kind"))
        }
    }
}

/// Materializes a group; the identity is element 0 except for raw tables,
/// which keep their own identity index.
pub fn build_group(spec: &GroupSpec, limits: &GroupLimits) -> Result<CayleyTable> {
    spec.validate()?;
    let order = limits.check_order(spec.order())?;
    let table = build_unchecked(spec, limits)?;
    debug_assert_eq!(table.order(), order);
    if order <= limits.verify_up_to && !matches!(spec, GroupSpec::Raw(_) | GroupSpec::Polycyclic(_)) {
        table.verify(true)?;
    }
    Ok(table)
}

fn build_unchecked(spec: &GroupSpec, limits: &GroupLimits) -> Result<CayleyTable> {
    Ok(match spec {
        GroupSpec::Cyclic(n) => CayleyTable::cyclic(*n as usize),
        GroupSpec::AbelianP { p, partition } => {
            let factors: Vec<CayleyTable> =
                partition.iter().map(|&r| CayleyTable::cyclic(p.pow(r) as usize)).collect();
            CayleyTable::direct_product(&factors.iter().collect::<Vec<_>>())
        }
        GroupSpec::DirectProduct(parts) => {
            let factors = parts.iter().map(|s| build_unchecked(s, limits)).collect::<Result<Vec<_>>>()?;
            CayleyTable::direct_product(&factors.iter().collect::<Vec<_>>())
        }
        GroupSpec::Polycyclic(pres) => collect_presentation(pres, limits)?,
        GroupSpec::Heisenberg(p) => CayleyTable::heisenberg(*p as usize),
        GroupSpec::Raw(t) => t.clone(),
    })
}

/// One abelian group of order `p^m` per partition of `m`, in partition order.
pub fn enumerate_abelian_p_groups(p: u64, m: u32, limits: &GroupLimits) -> Result<Vec<(GroupSpec, CayleyTable)>> {
    if !is_prime(p) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    limits.check_order((p as u128).checked_pow(m).unwrap_or(u128::MAX))?;
    enumerate_partitions(m)
        .into_iter()
        .map(|partition| {
            let spec = GroupSpec::AbelianP { p, partition };
            let t = build_group(&spec, limits)?;
            Ok((spec, t))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_files(_: &str) -> Result<CayleyTable> {
        Err(Error::Io("no files in tests".into()))
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "cyclic:12",
            "abelianp:2^[3,1]",
            "product:(cyclic:8,abelianp:3^[1,1])",
            "heisenberg:3",
            "product:(product:(cyclic:2,cyclic:3),heisenberg:5)",
            "polycyclic:2^[1,2];pow=[0,0]|[0,0];conj=[0,3]",
            "polycyclic:3^[1];pow=[0];conj=",
        ] {
            let spec = GroupSpec::parse_with(s, &no_files).unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn malformed_specs_are_rejected() {
        for s in ["cyclic:0", "cyclic:", "abelianp:4^[1]", "abelianp:2^[1,2]", "heisenberg:6", "product:()", "foo:1", "cyclic:3x"] {
            assert!(GroupSpec::parse_with(s, &no_files).is_err(), "{s}");
        }
    }

    #[test]
    fn build_respects_order_limit() {
        let limits = GroupLimits { max_order: 100, ..GroupLimits::default() };
        let spec = GroupSpec::parse_with("product:(cyclic:20,cyclic:20)", &no_files).unwrap();
        assert_eq!(build_group(&spec, &limits), Err(Error::OrderLimit { order: 400, limit: 100 }));
    }

    #[test]
    fn products_and_heisenberg() {
        let limits = GroupLimits::default();
        let g = build_group(&GroupSpec::parse_with("product:(cyclic:4,cyclic:3)", &no_files).unwrap(), &limits).unwrap();
        assert!(g.is_cyclic());
        let h = build_group(&GroupSpec::Heisenberg(3), &limits).unwrap();
        assert_eq!(h.order(), 27);
        assert!((1..27).all(|x| h.element_order(x) == 3));
    }

    #[test]
    fn abelian_enumeration_sizes() {
        let limits = GroupLimits::default();
        let four = enumerate_abelian_p_groups(2, 2, &limits).unwrap();
        assert_eq!(four.len(), 2);
        assert!(four[0].1.is_cyclic());
        assert!(!four[1].1.is_cyclic());
        assert_eq!(enumerate_abelian_p_groups(7, 1, &limits).unwrap().len(), 1);
        let eight = enumerate_abelian_p_groups(2, 3, &limits).unwrap();
        assert_eq!(eight.len(), 3);
        let profiles: Vec<_> = eight.iter().map(|(_, t)| t.order_profile()).collect();
        assert_ne!(profiles[0], profiles[1]);
        assert_ne!(profiles[1], profiles[2]);
    }
}
