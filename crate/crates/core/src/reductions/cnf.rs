use std::fmt;

use crate::error::{Error, Result};

/// A literal: variable index (1-based) and polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: u32,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: u32) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: u32) -> Self {
        Literal { var, positive: false }
    }

    pub fn from_dimacs(x: i64) -> Self {
        Literal { var: x.unsigned_abs() as u32, positive: x > 0 }
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    /// Position in the order `x1, ¬x1, x2, ¬x2, ..`.
    pub fn index(self) -> usize {
        2 * (self.var as usize - 1) + usize::from(!self.positive)
    }

    pub fn from_index(i: usize) -> Self {
        Literal { var: (i / 2 + 1) as u32, positive: i % 2 == 0 }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var as usize - 1] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "~x{}", self.var)
        }
    }
}

/// A CNF formula whose clauses have 1 to 3 distinct literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    vars: u32,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Removes repeated literals inside each clause (first occurrence kept).
    pub fn new(vars: u32, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, clause) in clauses.into_iter().enumerate() {
            let mut lits: Vec<Literal> = Vec::with_capacity(clause.len());
            for l in clause {
                if l.var == 0 || l.var > vars {
                    return Err(Error::InvalidSpec(format!("clause {} uses variable {} outside 1..{vars}", j + 1, l.var)));
                }
                if !lits.contains(&l) {
                    lits.push(l);
                }
            }
            if lits.is_empty() {
                return Err(Error::InvalidSpec(format!("clause {} is empty", j + 1)));
            }
            if lits.len() > 3 {
                return Err(Error::InvalidSpec(format!("clause {} has {} literals; at most 3 allowed", j + 1, lits.len())));
            }
            out.push(lits);
        }
        Ok(CnfFormula { vars, clauses: out })
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Largest number of clauses any single literal appears in.
    pub fn max_occurrence(&self) -> usize {
        let mut count = vec![0usize; 2 * self.vars as usize];
        for c in &self.clauses {
            for l in c {
                count[l.index()] += 1;
            }
        }
        count.into_iter().max().unwrap_or(0)
    }
}

/// Parses DIMACS CNF (`p cnf <n> <m>`, `c` comment lines, clauses ended by 0).
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || parts.len() != 4 || parts[1] != "cnf" {
                return Err(Error::parse(lineno, "malformed header, expected 'p cnf <vars> <clauses>'"));
            }
            let n = parts[2].parse().map_err(|_| Error::parse(lineno, "bad variable count"))?;
            let m = parts[3].parse().map_err(|_| Error::parse(lineno, "bad clause count"))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::parse(lineno, "clause before the 'p cnf' header"));
        };
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| Error::parse(lineno, format!("bad literal '{tok}'")))?;
            if x == 0 {
                if current.is_empty() {
                    return Err(Error::parse(lineno, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if x.unsigned_abs() > n as u64 {
                return Err(Error::parse(lineno, format!("variable {} out of range 1..{n}", x.unsigned_abs())));
            }
            current.push(Literal::from_dimacs(x));
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(last_line.max(1), "missing 'p cnf' header"));
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != m {
        return Err(Error::parse(last_line.max(1), format!("header declares {m} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(n, clauses).map_err(|e| Error::parse(last_line.max(1), e.to_string()))
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.vars(), f.clause_count());
    for c in f.clauses() {
        for l in c {
            out.push_str(&format!("{} ", l.to_dimacs()));
        }
        out.push_str("0\n");
    }
    out
}

pub const SAT_BRUTEFORCE_MAX_VARS: u32 = 24;

/// First satisfying assignment in binary counting order (`x1` least
/// significant), if any.
pub fn sat_bruteforce(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let n = f.vars();
    if n > SAT_BRUTEFORCE_MAX_VARS {
        return Err(Error::LimitExceeded {
            what: "variables for exhaustive SAT",
            value: n as u128,
            limit: SAT_BRUTEFORCE_MAX_VARS as u128,
        });
    }
    let mut assignment = vec![false; n as usize];
    for mask in 0u64..(1u64 << n) {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        if f.satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let f = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        assert_eq!(f.vars(), 1);
        assert_eq!(f.clauses(), &[vec![Literal::pos(1)]]);
        let f = parse_dimacs("c two\np cnf 2 2\n1 -2 0\n-1 2 0\n").unwrap();
        assert!(f.clauses().iter().all(|c| c.len() == 2));
        let f = parse_dimacs("p cnf 2 1\n1 1 2 0\n").unwrap();
        assert_eq!(f.clauses()[0], vec![Literal::pos(1), Literal::pos(2)]);
        assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_dimacs("p cnf x 1\n1 0\n").is_err());
        assert!(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 1\n2 0\n").is_err());
        assert!(parse_dimacs("1 0\n").is_err());
        assert!(parse_dimacs("p cnf 1 2\n1 0\n").is_err());
    }

    #[test]
    fn brute_force_sat() {
        let unsat = CnfFormula::new(1, vec![vec![Literal::pos(1)], vec![Literal::neg(1)]]).unwrap();
        assert_eq!(sat_bruteforce(&unsat).unwrap(), None);
        let sat = CnfFormula::new(2, vec![vec![Literal::pos(1), Literal::pos(2)]]).unwrap();
        assert!(sat_bruteforce(&sat).unwrap().is_some());
    }

    #[test]
    fn literal_indices() {
        assert_eq!(Literal::pos(1).index(), 0);
        assert_eq!(Literal::neg(1).index(), 1);
        assert_eq!(Literal::pos(3).index(), 4);
        for i in 0..10 {
            assert_eq!(Literal::from_index(i).index(), i);
        }
    }
}
