//! Plain-text file formats. Blank lines and lines starting with `#` are
//! ignored everywhere; fields are whitespace-separated and indices 0-based.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, ReducedGraph};
use crate::group::CayleyTable;
use crate::motif::Motif;
use crate::recognition::RecognitionResult;
use crate::reductions::{EmbeddingPlan, WeightedGraph};

/// Non-empty, non-comment lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn num<T: std::str::FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    field.parse().map_err(|_| Error::parse(line, format!("bad {what} '{field}'")))
}

fn expect_len(line: usize, fields: &[&str], n: usize) -> Result<()> {
    if fields.len() != n {
        return Err(Error::parse(line, format!("expected {n} fields, found {}", fields.len())));
    }
    Ok(())
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

// ---- group tables ----

pub fn read_group_file(path: &Path) -> Result<CayleyTable> {
    let text = std::fs::read_to_string(path)?;
    parse_group_table(&text)
}

/// `group <n> <identity>` followed by `n` rows of `n` element indices.
pub fn parse_group_table(text: &str) -> Result<CayleyTable> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| Error::parse(1, "empty group file"))?;
    if head.first() != Some(&"group") {
        return Err(Error::parse(l0, "expected 'group <n> <identity>'"));
    }
    expect_len(l0, &head, 3)?;
    let n: usize = num(l0, head[1], "order")?;
    let identity: usize = num(l0, head[2], "identity")?;
    let mut rows = Vec::with_capacity(n);
    for (line, fields) in it {
        if rows.len() == n {
            return Err(Error::parse(line, "more rows than the declared order"));
        }
        expect_len(line, &fields, n)?;
        rows.push(fields.iter().map(|f| num(line, f, "element")).collect::<Result<Vec<usize>>>()?);
    }
    if rows.len() != n {
        return Err(Error::parse(last_line(text), format!("expected {n} rows, found {}", rows.len())));
    }
    CayleyTable::from_rows(&rows, identity)
}

pub fn write_group_table(t: &CayleyTable) -> String {
    let mut s = format!("group {} {}\n", t.order(), t.identity());
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

// ---- coloured graphs ----

/// A graph file: either a plain coloured graph (`v` lines) or an already
/// reduced graph (`class` lines, always directed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Plain(ColoredDigraph),
    Reduced(ReducedGraph),
}

pub fn read_graph_file(path: &Path) -> Result<GraphFile> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
    if head.first() != Some(&"cgraph") {
        return Err(Error::parse(l0, "expected 'cgraph <directed|undirected> <n> <m>'"));
    }
    expect_len(l0, &head, 4)?;
    let directed = match head[1] {
        "directed" => true,
        "undirected" => false,
        other => return Err(Error::parse(l0, format!("unknown graph kind '{other}'"))),
    };
    let n: usize = num(l0, head[2], "vertex count")?;
    let m: usize = num(l0, head[3], "edge count")?;
    let mut colors: Vec<Option<u64>> = vec![None; n];
    let mut sizes: Vec<usize> = vec![0; n];
    let mut edges = Vec::with_capacity(m);
    let (mut saw_v, mut saw_class) = (false, false);
    for (line, f) in it {
        match f[0] {
            "v" | "class" => {
                let is_class = f[0] == "class";
                expect_len(line, &f, if is_class { 4 } else { 3 })?;
                saw_v |= !is_class;
                saw_class |= is_class;
                if saw_v && saw_class {
                    return Err(Error::parse(line, "'v' and 'class' lines cannot be mixed"));
                }
                let i: usize = num(line, f[1], "index")?;
                if i >= n {
                    return Err(Error::parse(line, format!("index {i} out of range")));
                }
                if colors[i].replace(num(line, f[2], "colour")?).is_some() {
                    return Err(Error::parse(line, format!("index {i} listed twice")));
                }
                if is_class {
                    sizes[i] = num(line, f[3], "class size")?;
                }
            }
            "e" => {
                expect_len(line, &f, 3)?;
                let (u, v): (usize, usize) = (num(line, f[1], "vertex")?, num(line, f[2], "vertex")?);
                if u >= n || v >= n {
                    return Err(Error::parse(line, format!("edge ({u}, {v}) out of range")));
                }
                if u == v && (!directed || saw_class) {
                    return Err(Error::parse(line, format!("self-loop at {u} not allowed here")));
                }
                edges.push((u, v));
            }
            other => return Err(Error::parse(line, format!("unknown record '{other}'"))),
        }
    }
    let end = last_line(text);
    if edges.len() != m {
        return Err(Error::parse(end, format!("header declares {m} edges, found {}", edges.len())));
    }
    if let Some(i) = colors.iter().position(Option::is_none) {
        return Err(Error::parse(end, format!("index {i} has no 'v' or 'class' line")));
    }
    let colors: Vec<u64> = colors.into_iter().map(Option::unwrap).collect();
    if saw_class {
        if !directed {
            return Err(Error::parse(l0, "reduced graphs are directed"));
        }
        return Ok(GraphFile::Reduced(ReducedGraph::from_parts(colors, sizes, &edges)?));
    }
    Ok(GraphFile::Plain(ColoredDigraph::from_edges(directed, colors, &edges)?))
}

pub fn write_graph(g: &ColoredDigraph) -> String {
    let edges = g.edges();
    let kind = if g.is_directed() { "directed" } else { "undirected" };
    let mut s = format!("cgraph {kind} {} {}\n", g.len(), edges.len());
    for v in 0..g.len() {
        let _ = writeln!(s, "v {v} {}", g.color(v));
    }
    for (u, v) in edges {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

pub fn write_reduced(r: &ReducedGraph) -> String {
    let edges = r.edges();
    let mut s = format!("cgraph directed {} {}\n", r.len(), edges.len());
    for c in 0..r.len() {
        let _ = writeln!(s, "class {c} {} {}", r.color(c), r.size(c));
    }
    for (u, v) in edges {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

// ---- motifs ----

pub fn parse_motif(text: &str) -> Result<Motif> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| Error::parse(1, "empty motif file"))?;
    if head.first() != Some(&"motif") {
        return Err(Error::parse(l0, "expected 'motif <k>'"));
    }
    expect_len(l0, &head, 2)?;
    let k: usize = num(l0, head[1], "colour count")?;
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    let mut seen = 0;
    for (line, f) in it {
        if f[0] != "c" {
            return Err(Error::parse(line, format!("unknown record '{}'", f[0])));
        }
        expect_len(line, &f, 3)?;
        let color: u64 = num(line, f[1], "colour")?;
        let mult: usize = num(line, f[2], "multiplicity")?;
        if counts.insert(color, mult).is_some() {
            return Err(Error::parse(line, format!("colour {color} listed twice")));
        }
        seen += 1;
    }
    if seen != k {
        return Err(Error::parse(last_line(text), format!("header declares {k} colours, found {seen}")));
    }
    Motif::from_counts(counts)
}

pub fn write_motif(m: &Motif) -> String {
    let mut s = format!("motif {}\n", m.counts().len());
    for (c, k) in m.counts() {
        let _ = writeln!(s, "c {c} {k}");
    }
    s
}

// ---- weighted graphs ----

pub fn parse_wgraph(text: &str) -> Result<WeightedGraph<i64>> {
    let mut it = lines(text);
    let (l0, head) = it.next().ok_or_else(|| Error::parse(1, "empty weighted graph file"))?;
    if head.first() != Some(&"wgraph") {
        return Err(Error::parse(l0, "expected 'wgraph <n> <m>'"));
    }
    expect_len(l0, &head, 3)?;
    let n: usize = num(l0, head[1], "vertex count")?;
    let m: usize = num(l0, head[2], "edge count")?;
    let mut g = WeightedGraph::new(n);
    let mut seen = 0;
    for (line, f) in it {
        if f[0] != "e" {
            return Err(Error::parse(line, format!("unknown record '{}'", f[0])));
        }
        expect_len(line, &f, 4)?;
        let (u, v): (usize, usize) = (num(line, f[1], "vertex")?, num(line, f[2], "vertex")?);
        let w: i64 = num(line, f[3], "weight")?;
        if u < n && v < n && g.has_edge(u, v) {
            return Err(Error::parse(line, format!("edge ({u}, {v}) listed twice")));
        }
        g.set_weight(u, v, w).map_err(|e| Error::parse(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(last_line(text), format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_wgraph(g: &WeightedGraph<i64>) -> String {
    let mut s = format!("wgraph {} {}\n", g.len(), g.edge_count());
    for (u, v, w) in g.edges() {
        let _ = writeln!(s, "e {u} {v} {w}");
    }
    s
}

// ---- manifests ----

/// `b`, `N`, the primes, one `subset` line per literal (prime indices), and
/// `map <vertex> <residue> <order>` per gadget vertex.
pub fn write_plan(plan: &EmbeddingPlan) -> String {
    let mut s = format!("b {}\nN {}\n", plan.b, plan.modulus);
    let primes: Vec<String> = plan.primes.iter().map(u64::to_string).collect();
    let _ = writeln!(s, "primes {}", primes.join(" "));
    for (l, subset) in &plan.subsets {
        let idx: Vec<String> = subset.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "subset {l} {}", idx.join(" "));
    }
    for (v, (r, o)) in plan.residues.iter().zip(&plan.orders).enumerate() {
        let _ = writeln!(s, "map {v} {r} {o}");
    }
    s
}

/// `verdict yes|no`, then `spec` (or `reason`), then
/// `iso <input> <witness>` lines ordered by input index.
pub fn write_recognition(res: &RecognitionResult) -> String {
    let mut s = format!("verdict {}\n", if res.verdict { "yes" } else { "no" });
    if let Some(spec) = &res.spec {
        let _ = writeln!(s, "spec {spec}");
    }
    if let Some(reason) = &res.reason {
        let _ = writeln!(s, "reason {reason}");
    }
    if let Some(iso) = &res.iso {
        let mut pairs: Vec<(usize, usize)> = iso.iter().enumerate().map(|(w, &i)| (i, w)).collect();
        pairs.sort_unstable();
        for (i, w) in pairs {
            let _ = writeln!(s, "iso {i} {w}");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_directed_power_graph, reduce};

    #[test]
    fn group_table_round_trip() {
        let t = CayleyTable::heisenberg(3);
        assert_eq!(parse_group_table(&write_group_table(&t)).unwrap(), t);
        assert!(parse_group_table("group 2 0\n0 1\n").is_err());
        assert!(matches!(parse_group_table("group 2 0\n0 1\n1 x\n"), Err(Error::Parse { line: 3, .. })));
        // not a group: row 1 repeats
        assert!(parse_group_table("group 2 0\n0 1\n1 1\n").is_err());
    }

    #[test]
    fn graph_round_trips() {
        let d = build_directed_power_graph(&CayleyTable::cyclic(6));
        assert_eq!(parse_graph(&write_graph(&d)).unwrap(), GraphFile::Plain(d.clone()));
        let u = d.to_undirected();
        assert_eq!(parse_graph(&write_graph(&u)).unwrap(), GraphFile::Plain(u));
        let r = reduce(&d).unwrap().without_members();
        assert_eq!(parse_graph(&write_reduced(&r)).unwrap(), GraphFile::Reduced(r));
    }

    #[test]
    fn graph_errors_carry_lines() {
        let bad = "cgraph undirected 2 1\nv 0 1\nv 1 1\ne 0 0\n";
        assert!(matches!(parse_graph(bad), Err(Error::Parse { line: 4, .. })));
        assert!(parse_graph("cgraph undirected 2 1\nv 0 1\nv 1 1\n").is_err());
        assert!(parse_graph("cgraph sideways 1 0\nv 0 0\n").is_err());
        assert!(parse_graph("cgraph directed 2 0\nv 0 1\nclass 1 1 1\n").is_err());
        assert!(parse_graph("cgraph undirected 2 0\nv 0 1\n").is_err());
    }

    #[test]
    fn motif_and_wgraph_round_trip() {
        let m: Motif = "1,2,2,5".parse().unwrap();
        assert_eq!(parse_motif(&write_motif(&m)).unwrap(), m);
        assert!(parse_motif("motif 2\nc 1 1\n").is_err());
        let mut g = WeightedGraph::new(3);
        g.set_weight(0, 2, -4).unwrap();
        g.set_weight(1, 2, 0).unwrap();
        let back = parse_wgraph(&write_wgraph(&g)).unwrap();
        assert_eq!(back, g);
        assert!(back.has_edge(1, 2));
        assert!(parse_wgraph("wgraph 2 1\ne 0 0 1\n").is_err());
    }

    #[test]
    fn recognition_manifest() {
        let res = RecognitionResult::yes(crate::group::GroupSpec::Cyclic(2), None, vec![1, 0]);
        assert_eq!(write_recognition(&res), "verdict yes\nspec cyclic:2\niso 0 1\niso 1 0\n");
        assert_eq!(write_recognition(&RecognitionResult::no("x")), "verdict no\nreason x\n");
    }
}
