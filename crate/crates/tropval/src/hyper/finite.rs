//! Finite hyperstructures: explicit multi-valued addition and single-valued
//! multiplication tables, exhaustive axiom checking, and a bit-exact
//! textual table format.
//!
//! Axiom checks are brute force over all pairs/triples of the carrier,
//! with set-extended addition A + B = ⋃ a + b used for associativity and
//! distributivity. A failing axiom always carries an explicit witness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// A finite carrier with a hyperaddition table (pair → nonempty subset),
/// a multiplication table (pair → element), and designated zero and one.
///
/// Carrier labels are opaque strings (no whitespace, `{`, `}`, `,`, `#`)
/// and are kept sorted; tables are total over all ordered pairs. No axiom
/// is implied by the representation — checking is separate, so corrupted
/// tables are representable on purpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHyperstructure {
    labels: Vec<String>,
    add: Vec<Vec<BTreeSet<usize>>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '{' | '}' | ',' | '#'))
    {
        return Err(Error::BadTable(format!("invalid element label {label:?}")));
    }
    Ok(())
}

impl FiniteHyperstructure {
    /// Build from label-keyed tables. Both tables must be total over all
    /// ordered pairs of the carrier; hyperaddition values must be nonempty.
    pub fn new(
        carrier: Vec<String>,
        zero: &str,
        one: &str,
        add: &BTreeMap<(String, String), BTreeSet<String>>,
        mul: &BTreeMap<(String, String), String>,
    ) -> Result<Self> {
        let mut labels = carrier;
        for l in &labels {
            check_label(l)?;
        }
        labels.sort();
        let n = labels.len();
        if n < 2 {
            return Err(Error::BadTable(
                "carrier must have at least two elements".into(),
            ));
        }
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadTable("duplicate carrier label".into()));
        }
        let index = |l: &str| -> Result<usize> {
            labels
                .binary_search_by(|probe| probe.as_str().cmp(l))
                .map_err(|_| Error::BadTable(format!("unknown element {l:?}")))
        };
        let zero = index(zero)?;
        let one = index(one)?;
        if zero == one {
            return Err(Error::BadTable("zero and one must differ".into()));
        }

        let mut add_t = vec![vec![BTreeSet::new(); n]; n];
        let mut mul_t = vec![vec![usize::MAX; n]; n];
        let mut add_seen = 0usize;
        for ((x, y), v) in add {
            let (i, j) = (index(x)?, index(y)?);
            if v.is_empty() {
                return Err(Error::BadTable(format!("empty hypersum for {x} {y}")));
            }
            let set: BTreeSet<usize> = v.iter().map(|e| index(e)).collect::<Result<_>>()?;
            if !add_t[i][j].is_empty() {
                return Err(Error::BadTable(format!("duplicate add entry {x} {y}")));
            }
            add_t[i][j] = set;
            add_seen += 1;
        }
        if add_seen != n * n {
            return Err(Error::BadTable(format!(
                "add table has {add_seen} of {} required pairs",
                n * n
            )));
        }
        let mut mul_seen = 0usize;
        for ((x, y), v) in mul {
            let (i, j) = (index(x)?, index(y)?);
            if mul_t[i][j] != usize::MAX {
                return Err(Error::BadTable(format!("duplicate mul entry {x} {y}")));
            }
            mul_t[i][j] = index(v)?;
            mul_seen += 1;
        }
        if mul_seen != n * n {
            return Err(Error::BadTable(format!(
                "mul table has {mul_seen} of {} required pairs",
                n * n
            )));
        }
        Ok(FiniteHyperstructure {
            labels,
            add: add_t,
            mul: mul_t,
            zero,
            one,
        })
    }

    pub fn carrier(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels
            .binary_search_by(|probe| probe.as_str().cmp(label))
            .ok()
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn add(&self, x: usize, y: usize) -> &BTreeSet<usize> {
        &self.add[x][y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    /// Hypersum by label, as sorted labels (test/CLI convenience).
    pub fn add_of(&self, x: &str, y: &str) -> Result<Vec<String>> {
        let i = self
            .index_of(x)
            .ok_or_else(|| Error::BadTable(format!("unknown element {x:?}")))?;
        let j = self
            .index_of(y)
            .ok_or_else(|| Error::BadTable(format!("unknown element {y:?}")))?;
        Ok(self.add[i][j]
            .iter()
            .map(|&k| self.labels[k].clone())
            .collect())
    }

    /// Set-extended addition A + B = ⋃ a + b.
    fn add_sets(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &x in a {
            for &y in b {
                out.extend(self.add[x][y].iter().copied());
            }
        }
        out
    }

    fn singleton(&self, x: usize) -> BTreeSet<usize> {
        BTreeSet::from([x])
    }

    /// Elements y with 0 ∈ x + y.
    fn inverses_of(&self, x: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&y| self.add[x][y].contains(&self.zero))
            .collect()
    }

    fn set_labels(&self, s: &BTreeSet<usize>) -> String {
        let inner: Vec<&str> = s.iter().map(|&i| self.labels[i].as_str()).collect();
        format!("{{{}}}", inner.join(","))
    }

    /// Bit-exact serialization: sorted carrier, all ordered pairs in
    /// sorted order, sorted set elements. `parse ∘ serialize = identity`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("carrier {}\n", self.labels.join(" ")));
        out.push_str(&format!("zero {}\n", self.labels[self.zero]));
        out.push_str(&format!("one {}\n", self.labels[self.one]));
        out.push_str("add\n");
        for i in 0..self.size() {
            for j in 0..self.size() {
                out.push_str(&format!(
                    "{} {} -> {}\n",
                    self.labels[i],
                    self.labels[j],
                    self.set_labels(&self.add[i][j])
                ));
            }
        }
        out.push_str("mul\n");
        for i in 0..self.size() {
            for j in 0..self.size() {
                out.push_str(&format!(
                    "{} {} -> {}\n",
                    self.labels[i],
                    self.labels[j],
                    self.labels[self.mul[i][j]]
                ));
            }
        }
        out
    }

    /// Parse the table format emitted by [`serialize`](Self::serialize).
    ///
    /// Lines: `carrier <l>...`, `zero <l>`, `one <l>`, an `add` section of
    /// `x y -> {a,b}` lines, a `mul` section of `x y -> a` lines. Blank
    /// lines and `#` comments are ignored. Malformed lines are syntax
    /// errors with their line number; semantic violations (unknown labels,
    /// missing pairs, zero = one) are domain errors.
    pub fn parse(text: &str) -> Result<Self> {
        enum Section {
            Header,
            Add,
            Mul,
        }
        let mut carrier: Option<Vec<String>> = None;
        let mut zero: Option<String> = None;
        let mut one: Option<String> = None;
        let mut add: BTreeMap<(String, String), BTreeSet<String>> = BTreeMap::new();
        let mut mul: BTreeMap<(String, String), String> = BTreeMap::new();
        let mut section = Section::Header;

        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |msg: &str| Error::syntax(lineno, 1, msg.to_string());
            let mut words = line.split_whitespace();
            let head = words.next().expect("nonempty line");
            match head {
                "carrier" => {
                    let labels: Vec<String> = words.map(str::to_string).collect();
                    if labels.is_empty() {
                        return Err(syntax("carrier line needs at least one label"));
                    }
                    carrier = Some(labels);
                    continue;
                }
                "zero" | "one" => {
                    let label = words
                        .next()
                        .ok_or_else(|| syntax("expected a label"))?
                        .to_string();
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens"));
                    }
                    if head == "zero" {
                        zero = Some(label);
                    } else {
                        one = Some(label);
                    }
                    continue;
                }
                "add" => {
                    section = Section::Add;
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after 'add'"));
                    }
                    continue;
                }
                "mul" => {
                    section = Section::Mul;
                    if words.next().is_some() {
                        return Err(syntax("trailing tokens after 'mul'"));
                    }
                    continue;
                }
                _ => {}
            }
            // A table line: `x y -> rhs`.
            let x = head.to_string();
            let y = words
                .next()
                .ok_or_else(|| syntax("expected second operand"))?
                .to_string();
            if words.next() != Some("->") {
                return Err(syntax("expected '->'"));
            }
            let rhs = words
                .next()
                .ok_or_else(|| syntax("expected a result after '->'"))?;
            if words.next().is_some() {
                return Err(syntax("trailing tokens after result"));
            }
            match section {
                Section::Header => {
                    return Err(syntax("table line before 'add' or 'mul' section"));
                }
                Section::Add => {
                    let inner = rhs
                        .strip_prefix('{')
                        .and_then(|r| r.strip_suffix('}'))
                        .ok_or_else(|| syntax("hypersum must be written {a,b,...}"))?;
                    let set: BTreeSet<String> = inner
                        .split(',')
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect();
                    if set.is_empty() {
                        return Err(syntax("hypersum must be nonempty"));
                    }
                    if add.insert((x.clone(), y.clone()), set).is_some() {
                        return Err(syntax("duplicate add entry"));
                    }
                }
                Section::Mul => {
                    if mul.insert((x.clone(), y.clone()), rhs.to_string()).is_some() {
                        return Err(syntax("duplicate mul entry"));
                    }
                }
            }
        }

        let carrier = carrier.ok_or_else(|| Error::BadTable("missing carrier line".into()))?;
        let zero = zero.ok_or_else(|| Error::BadTable("missing zero line".into()))?;
        let one = one.ok_or_else(|| Error::BadTable("missing one line".into()))?;
        FiniteHyperstructure::new(carrier, &zero, &one, &add, &mul)
    }
}

impl fmt::Display for FiniteHyperstructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Check the canonical-hypergroup axioms exhaustively: `commutativity`,
/// `associativity` (set-extended), `neutral`, `unique_inverse`,
/// `reversibility` (x ∈ y + z ⟹ z ∈ x + (-y), using every inverse of y
/// when uniqueness fails, so the axioms stay independently diagnosable).
pub fn check_hypergroup(h: &FiniteHyperstructure) -> AxiomReport {
    let mut report = AxiomReport::new();
    let n = h.size();

    let commutativity = iproduct2(n).find_map(|(x, y)| {
        (h.add(x, y) != h.add(y, x)).then(|| format!("x={},y={}", h.label(x), h.label(y)))
    });
    report.record("commutativity", commutativity);

    let associativity = iproduct3(n).find_map(|(x, y, z)| {
        let lhs = h.add_sets(h.add(x, y), &h.singleton(z));
        let rhs = h.add_sets(&h.singleton(x), h.add(y, z));
        (lhs != rhs).then(|| {
            format!(
                "x={},y={},z={},lhs={},rhs={}",
                h.label(x),
                h.label(y),
                h.label(z),
                h.set_labels(&lhs),
                h.set_labels(&rhs)
            )
        })
    });
    report.record("associativity", associativity);

    let zero = h.zero_index();
    let neutral = (0..n).find_map(|x| {
        (*h.add(zero, x) != h.singleton(x) || *h.add(x, zero) != h.singleton(x))
            .then(|| format!("x={}", h.label(x)))
    });
    report.record("neutral", neutral);

    let unique_inverse =
        (0..n).find_map(|x| (h.inverses_of(x).len() != 1).then(|| format!("x={}", h.label(x))));
    report.record("unique_inverse", unique_inverse);

    let reversibility = iproduct3(n).find_map(|(x, y, z)| {
        if !h.add(y, z).contains(&x) {
            return None;
        }
        let inverses = h.inverses_of(y);
        let ok = !inverses.is_empty()
            && inverses.iter().any(|&neg_y| h.add(x, neg_y).contains(&z));
        (!ok).then(|| format!("x={},y={},z={}", h.label(x), h.label(y), h.label(z)))
    });
    report.record("reversibility", reversibility);

    report
}

/// Hypergroup axioms plus the ring layer: `mul_associativity`,
/// `mul_identity`, `distributivity` (both sides, set equality),
/// `absorbing_zero`.
pub fn check_hyperring(h: &FiniteHyperstructure) -> AxiomReport {
    let mut report = check_hypergroup(h);
    let n = h.size();

    let mul_assoc = iproduct3(n).find_map(|(x, y, z)| {
        (h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z)))
            .then(|| format!("x={},y={},z={}", h.label(x), h.label(y), h.label(z)))
    });
    report.record("mul_associativity", mul_assoc);

    let one = h.one_index();
    let mul_identity = (0..n).find_map(|x| {
        (h.mul(one, x) != x || h.mul(x, one) != x).then(|| format!("x={}", h.label(x)))
    });
    report.record("mul_identity", mul_identity);

    let distributivity = iproduct3(n).find_map(|(x, y, z)| {
        // x·(y+z) = x·y + x·z and (y+z)·x = y·x + z·x, as set equality.
        let left_lhs: BTreeSet<usize> = h.add(y, z).iter().map(|&w| h.mul(x, w)).collect();
        let left_rhs = h.add(h.mul(x, y), h.mul(x, z));
        if left_lhs != *left_rhs {
            return Some(format!(
                "x={},y={},z={},x(y+z)={},xy+xz={}",
                h.label(x),
                h.label(y),
                h.label(z),
                h.set_labels(&left_lhs),
                h.set_labels(left_rhs)
            ));
        }
        let right_lhs: BTreeSet<usize> = h.add(y, z).iter().map(|&w| h.mul(w, x)).collect();
        let right_rhs = h.add(h.mul(y, x), h.mul(z, x));
        (right_lhs != *right_rhs).then(|| {
            format!(
                "x={},y={},z={},(y+z)x={},yx+zx={}",
                h.label(x),
                h.label(y),
                h.label(z),
                h.set_labels(&right_lhs),
                h.set_labels(right_rhs)
            )
        })
    });
    report.record("distributivity", distributivity);

    let zero = h.zero_index();
    let absorbing = (0..n).find_map(|x| {
        (h.mul(zero, x) != zero || h.mul(x, zero) != zero)
            .then(|| format!("x={}", h.label(x)))
    });
    report.record("absorbing_zero", absorbing);

    report
}

/// Hyperring axioms plus `nonzero_group`: the nonzero elements are closed
/// under multiplication and each has a two-sided inverse against 1.
pub fn check_hyperfield(h: &FiniteHyperstructure) -> AxiomReport {
    let mut report = check_hyperring(h);
    let n = h.size();
    let zero = h.zero_index();
    let one = h.one_index();

    let nonzero_group = (0..n).filter(|&x| x != zero).find_map(|x| {
        let closure_broken = (0..n)
            .filter(|&y| y != zero)
            .find(|&y| h.mul(x, y) == zero);
        if let Some(y) = closure_broken {
            return Some(format!(
                "x={},y={},product-is-zero",
                h.label(x),
                h.label(y)
            ));
        }
        let has_inverse = (0..n)
            .filter(|&y| y != zero)
            .any(|y| h.mul(x, y) == one && h.mul(y, x) == one);
        (!has_inverse).then(|| format!("x={},no-mul-inverse", h.label(x)))
    });
    report.record("nonzero_group", nonzero_group);

    report
}

/// The Krasner hyperfield K = {0, 1} with 1 + 1 = {0, 1}.
pub fn krasner() -> FiniteHyperstructure {
    build_builtin(
        &["0", "1"],
        "0",
        "1",
        &[
            ("0", "0", &["0"]),
            ("0", "1", &["1"]),
            ("1", "0", &["1"]),
            ("1", "1", &["0", "1"]),
        ],
        &[
            ("0", "0", "0"),
            ("0", "1", "0"),
            ("1", "0", "0"),
            ("1", "1", "1"),
        ],
    )
}

/// The hyperfield of signs S = {-1, 0, 1} with 1 + (-1) = {-1, 0, 1}.
pub fn signs() -> FiniteHyperstructure {
    build_builtin(
        &["-1", "0", "1"],
        "0",
        "1",
        &[
            ("0", "0", &["0"]),
            ("0", "1", &["1"]),
            ("1", "0", &["1"]),
            ("0", "-1", &["-1"]),
            ("-1", "0", &["-1"]),
            ("1", "1", &["1"]),
            ("-1", "-1", &["-1"]),
            ("1", "-1", &["-1", "0", "1"]),
            ("-1", "1", &["-1", "0", "1"]),
        ],
        &[
            ("0", "0", "0"),
            ("0", "1", "0"),
            ("1", "0", "0"),
            ("0", "-1", "0"),
            ("-1", "0", "0"),
            ("1", "1", "1"),
            ("-1", "-1", "1"),
            ("1", "-1", "-1"),
            ("-1", "1", "-1"),
        ],
    )
}

fn build_builtin(
    carrier: &[&str],
    zero: &str,
    one: &str,
    add: &[(&str, &str, &[&str])],
    mul: &[(&str, &str, &str)],
) -> FiniteHyperstructure {
    let add_map: BTreeMap<(String, String), BTreeSet<String>> = add
        .iter()
        .map(|(x, y, v)| {
            (
                (x.to_string(), y.to_string()),
                v.iter().map(|s| s.to_string()).collect(),
            )
        })
        .collect();
    let mul_map: BTreeMap<(String, String), String> = mul
        .iter()
        .map(|(x, y, v)| ((x.to_string(), y.to_string()), v.to_string()))
        .collect();
    FiniteHyperstructure::new(
        carrier.iter().map(|s| s.to_string()).collect(),
        zero,
        one,
        &add_map,
        &mul_map,
    )
    .expect("builtin tables are well formed")
}

fn iproduct2(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn iproduct3(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn krasner_is_a_hyperfield() {
        let k = krasner();
        assert_eq!(k.add_of("1", "1").unwrap(), vec!["0", "1"]);
        let report = check_hyperfield(&k);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn signs_is_a_hyperfield() {
        let s = signs();
        assert_eq!(s.add_of("1", "-1").unwrap(), vec!["-1", "0", "1"]);
        assert_eq!(s.add_of("1", "1").unwrap(), vec!["1"]);
        assert_eq!(s.add_of("1", "0").unwrap(), vec!["1"]);
        let report = check_hyperfield(&s);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn missing_inverse_is_caught() {
        // On {0,1} with 1+1={1}, no y satisfies 0 ∈ 1+y.
        let text = krasner().serialize().replace("1 1 -> {0,1}", "1 1 -> {1}");
        let broken = FiniteHyperstructure::parse(&text).unwrap();
        let report = check_hypergroup(&broken);
        assert!(report.failed_axioms().contains(&"unique_inverse"));
        assert_eq!(report.witness_for("unique_inverse"), Some("x=1"));
    }

    #[test]
    fn serialization_round_trips_bit_exactly() {
        for h in [krasner(), signs()] {
            let text = h.serialize();
            let reparsed = FiniteHyperstructure::parse(&text).unwrap();
            assert_eq!(reparsed, h);
            assert_eq!(reparsed.serialize(), text);
        }
    }

    #[test]
    fn parse_rejects_malformed_and_incomplete_tables() {
        assert!(matches!(
            FiniteHyperstructure::parse("carrier 0 1\nzero 0\none 1\nadd\n0 0 {0}\n"),
            Err(Error::Syntax { .. })
        ));
        let missing_pairs = "carrier 0 1\nzero 0\none 1\nadd\n0 0 -> {0}\nmul\n0 0 -> 0\n";
        assert!(matches!(
            FiniteHyperstructure::parse(missing_pairs),
            Err(Error::BadTable(_))
        ));
        let unknown = krasner().serialize().replace("1 1 -> {0,1}", "1 1 -> {7}");
        assert!(matches!(
            FiniteHyperstructure::parse(&unknown),
            Err(Error::BadTable(_))
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("# Krasner table\n\n{}\n# trailing\n", krasner().serialize());
        assert_eq!(FiniteHyperstructure::parse(&text).unwrap(), krasner());
    }
}
