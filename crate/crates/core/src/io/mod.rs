//! JSON formats.
//!
//! Every writer is deterministic: entries in index order, floats with 17
//! significant digits, newline terminated. Scalars are read as `[re, im]`,
//! a bare number, `{"root": [k, m]}` or the string `"k/m"`.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::Value;

use crate::error::Error;
use crate::groups::{FiniteGroup, GroupCocycleData, MatchedPairGroups};
use crate::hopf::{solve_antipode, FiniteBialgebra, FiniteHopfAlgebra};
use crate::numeric::{is_finite, DenseMatrix, RootOfUnity, Scalar, ScalarEntry, SparseMap, ZERO};
use crate::report::{json_float, json_string, VerificationReport};
use crate::star::{StarHopfAlgebra, StarStructure};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub fn read_file(path: impl AsRef<Path>) -> Result<String, Error> {
    let p = path.as_ref();
    std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

pub fn write_file(path: impl AsRef<Path>, text: &str) -> Result<(), Error> {
    let p = path.as_ref();
    std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

/// Writes [`VerificationReport::to_json`] to `path`.
pub fn emit_report(r: &VerificationReport, path: impl AsRef<Path>) -> Result<(), Error> {
    write_file(path, &r.to_json())
}

fn parse_json(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| bad(format!("malformed JSON: {e}")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Error> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, Error> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("{what}: expected a non-negative integer, got {v}")))
}

fn as_f64(v: &Value, what: &str) -> Result<f64, Error> {
    let x = v.as_f64().ok_or_else(|| bad(format!("{what}: expected a number, got {v}")))?;
    if !x.is_finite() {
        return Err(bad(format!("{what}: non-finite number")));
    }
    Ok(x)
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array().ok_or_else(|| bad(format!("{what}: expected an array")))
}

fn root_of(v: &Value, what: &str) -> Result<RootOfUnity, Error> {
    let a = as_array(v, what)?;
    if a.len() != 2 {
        return Err(bad(format!("{what}: root must be [k, m]")));
    }
    let k = a[0].as_i64().ok_or_else(|| bad(format!("{what}: root numerator must be an integer")))?;
    let m = a[1].as_i64().ok_or_else(|| bad(format!("{what}: root denominator must be an integer")))?;
    RootOfUnity::new(k, m)
}

/// One scalar in any accepted spelling.
pub fn parse_scalar_entry(v: &Value, what: &str) -> Result<ScalarEntry, Error> {
    match v {
        Value::Number(_) => Ok(ScalarEntry::Value(Scalar::new(as_f64(v, what)?, 0.0))),
        Value::String(s) => Ok(ScalarEntry::Root(s.parse()?)),
        Value::Object(o) => match o.get("root") {
            Some(r) => Ok(ScalarEntry::Root(root_of(r, what)?)),
            None => Err(bad(format!("{what}: object scalar needs a \"root\" key"))),
        },
        Value::Array(a) if a.len() == 2 => Ok(ScalarEntry::Value(Scalar::new(as_f64(&a[0], what)?, as_f64(&a[1], what)?))),
        _ => Err(bad(format!("{what}: cannot read a scalar from {v}"))),
    }
}

fn parse_scalar(v: &Value, what: &str) -> Result<Scalar, Error> {
    parse_scalar_entry(v, what).map(|e| e.value())
}

fn scalar_json(z: Scalar) -> String {
    format!("[{}, {}]", json_float(z.re), json_float(z.im))
}

fn entry_json(e: &ScalarEntry) -> String {
    match e {
        ScalarEntry::Root(r) => format!("{{\"root\": [{}, {}]}}", r.numerator(), r.denominator()),
        ScalarEntry::Value(z) => scalar_json(*z),
    }
}

/// Reads a list of scalars.
fn scalar_list(v: &Value, n: usize, what: &str) -> Result<Vec<Scalar>, Error> {
    let a = as_array(v, what)?;
    if a.len() != n {
        return Err(bad(format!("{what}: expected {n} entries, got {}", a.len())));
    }
    a.iter().map(|x| parse_scalar(x, what)).collect()
}

/// Index tuples followed by a scalar: `[i, j, k, re, im]` or `[i, j, k, s]`.
fn tuples(v: &Value, arity: usize, n: usize, what: &str) -> Result<Vec<(Vec<usize>, Scalar)>, Error> {
    let mut out = Vec::new();
    for t in as_array(v, what)? {
        let t = as_array(t, what)?;
        let idx = t
            .iter()
            .take(arity)
            .map(|x| {
                let i = as_usize(x, what)?;
                if i >= n {
                    return Err(bad(format!("{what}: index {i} out of range 0..{n}")));
                }
                Ok(i)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let c = match t.len() - arity.min(t.len()) {
            2 => Scalar::new(as_f64(&t[arity], what)?, as_f64(&t[arity + 1], what)?),
            1 => parse_scalar(&t[arity], what)?,
            _ => return Err(bad(format!("{what}: entries are [{arity} indices, re, im]"))),
        };
        if idx.len() != arity {
            return Err(bad(format!("{what}: entries are [{arity} indices, re, im]")));
        }
        out.push((idx, c));
    }
    Ok(out)
}

fn dense(v: &Value, n: usize, what: &str) -> Result<DenseMatrix, Error> {
    let data = scalar_list(v, n * n, what)?;
    DenseMatrix::from_vec(n, n, data)
}

fn dense_json(m: &DenseMatrix) -> String {
    let parts: Vec<String> = m.data().iter().map(|&z| scalar_json(z)).collect();
    format!("[{}]", parts.join(", "))
}

fn list_json(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|&z| scalar_json(z)).collect();
    format!("[{}]", parts.join(", "))
}

fn sorted_entries(col: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    let mut v: Vec<_> = col.iter().copied().filter(|e| e.1 != ZERO).collect();
    v.sort_by_key(|e| e.0);
    v
}

fn labels_json(labels: &[String]) -> String {
    let parts: Vec<String> = labels.iter().map(|l| json_string(l)).collect();
    format!("[{}]", parts.join(", "))
}

fn labels_of(v: Option<&Value>, n: usize, what: &str) -> Result<Vec<String>, Error> {
    match v {
        None => Ok((0..n).map(|i| format!("e{i}")).collect()),
        Some(v) => {
            let a = as_array(v, what)?;
            if a.len() != n {
                return Err(bad(format!("{what}: expected {n} labels, got {}", a.len())));
            }
            a.iter()
                .map(|x| x.as_str().map(String::from).ok_or_else(|| bad(format!("{what}: labels must be strings"))))
                .collect()
        }
    }
}

/// Hopf file: `dim`, `labels`, `mult` as `[i, j, k, re, im]`, `comult` as
/// `[k, i, j, re, im]`, `unit`, `counit`, dense row-major `antipode` and
/// optional `star`.
pub fn hopf_to_json(h: &StarHopfAlgebra) -> String {
    let n = h.dim;
    let mut s = String::new();
    let _ = writeln!(s, "{{");
    let _ = writeln!(s, "  \"dim\": {n},");
    let _ = writeln!(s, "  \"labels\": {},", labels_json(&h.bialgebra.labels));
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in sorted_entries(h.mul_basis(i, j)) {
                mult.push(format!("[{i}, {j}, {k}, {}, {}]", json_float(c.re), json_float(c.im)));
            }
        }
    }
    let _ = writeln!(s, "  \"mult\": [\n    {}\n  ],", mult.join(",\n    "));
    let mut comult = Vec::new();
    for k in 0..n {
        for (p, c) in sorted_entries(&h.bialgebra.comult.cols[k]) {
            comult.push(format!("[{k}, {}, {}, {}, {}]", p / n, p % n, json_float(c.re), json_float(c.im)));
        }
    }
    let _ = writeln!(s, "  \"comult\": [\n    {}\n  ],", comult.join(",\n    "));
    let _ = writeln!(s, "  \"unit\": {},", list_json(&h.bialgebra.unit));
    let _ = writeln!(s, "  \"counit\": {},", list_json(&h.bialgebra.counit));
    match &h.star {
        Some(st) => {
            let _ = writeln!(s, "  \"antipode\": {},", dense_json(&h.antipode));
            let _ = writeln!(s, "  \"star\": {}", dense_json(&st.matrix));
        }
        None => {
            let _ = writeln!(s, "  \"antipode\": {}", dense_json(&h.antipode));
        }
    }
    s.push_str("}\n");
    s
}

/// Parses a Hopf file. Without an `antipode` field the antipode is solved
/// for.
///
/// # Errors
///
/// [`Error::InvalidInput`] on malformed JSON, bad shapes or non-finite
/// numbers; [`Error::NotAHopfAlgebra`] when no antipode exists.
pub fn hopf_from_json(text: &str) -> Result<StarHopfAlgebra, Error> {
    let v = parse_json(text)?;
    let n = as_usize(field(&v, "dim")?, "dim")?;
    if n == 0 {
        return Err(bad("dim must be positive"));
    }
    let labels = labels_of(v.get("labels"), n, "labels")?;
    let mut mult = SparseMap::zero(n * n, n);
    let mut acc = vec![vec![ZERO; n]; n * n];
    for (idx, c) in tuples(field(&v, "mult")?, 3, n, "mult")? {
        acc[idx[0] * n + idx[1]][idx[2]] += c;
    }
    for (k, col) in acc.iter().enumerate() {
        mult.cols[k] = crate::numeric::sparse::from_dense(col);
    }
    let mut comult = SparseMap::zero(n, n * n);
    let mut acc = vec![vec![ZERO; n * n]; n];
    for (idx, c) in tuples(field(&v, "comult")?, 3, n, "comult")? {
        acc[idx[0]][idx[1] * n + idx[2]] += c;
    }
    for (k, col) in acc.iter().enumerate() {
        comult.cols[k] = crate::numeric::sparse::from_dense(col);
    }
    let unit = scalar_list(field(&v, "unit")?, n, "unit")?;
    let counit = scalar_list(field(&v, "counit")?, n, "counit")?;
    let b = FiniteBialgebra::new(mult, unit, comult, counit, labels)?;
    let hopf = match v.get("antipode") {
        Some(a) => FiniteHopfAlgebra::new(b, dense(a, n, "antipode")?)?,
        None => solve_antipode(&b)?,
    };
    let star = match v.get("star") {
        Some(Value::Null) | None => None,
        Some(m) => Some(StarStructure::new(dense(m, n, "star")?)?),
    };
    if !hopf.antipode.is_finite() {
        return Err(bad("non-finite antipode"));
    }
    StarHopfAlgebra::new(hopf, star)
}

fn table_json(t: &[usize], cols: usize) -> String {
    let rows: Vec<String> = t
        .chunks(cols)
        .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn group_json(g: &FiniteGroup, indent: &str) -> String {
    let flat: Vec<usize> = g.table().into_iter().flatten().collect();
    format!(
        "{{\n{indent}  \"order\": {},\n{indent}  \"labels\": {},\n{indent}  \"mult\": {}\n{indent}}}",
        g.order(),
        labels_json(g.labels()),
        table_json(&flat, g.order())
    )
}

/// Group file: `order`, `labels`, `mult` as a square table of indices.
pub fn group_to_json(g: &FiniteGroup) -> String {
    group_json(g, "") + "\n"
}

fn group_of(v: &Value, what: &str) -> Result<FiniteGroup, Error> {
    let n = as_usize(field(v, "order")?, what)?;
    let labels = match v.get("labels") {
        None => (0..n).map(|i| format!("g{i}")).collect(),
        some => labels_of(some, n, what)?,
    };
    let table = index_table(field(v, "mult")?, n, n, n, what)?;
    FiniteGroup::from_table(labels, table.chunks(n).map(|r| r.to_vec()).collect())
}

pub fn group_from_json(text: &str) -> Result<FiniteGroup, Error> {
    group_of(&parse_json(text)?, "group")
}

/// A `rows × cols` table of indices below `bound`, flattened row-major.
fn index_table(v: &Value, rows: usize, cols: usize, bound: usize, what: &str) -> Result<Vec<usize>, Error> {
    let a = as_array(v, what)?;
    if a.len() != rows {
        return Err(bad(format!("{what}: expected {rows} rows, got {}", a.len())));
    }
    let mut out = Vec::with_capacity(rows * cols);
    for r in a {
        let r = as_array(r, what)?;
        if r.len() != cols {
            return Err(bad(format!("{what}: expected rows of length {cols}")));
        }
        for x in r {
            let i = as_usize(x, what)?;
            if i >= bound {
                return Err(bad(format!("{what}: entry {i} out of range 0..{bound}")));
            }
            out.push(i);
        }
    }
    Ok(out)
}

/// A nested table of scalars with the given shape, flattened row-major.
fn scalar_table(v: &Value, shape: &[usize], what: &str) -> Result<Vec<ScalarEntry>, Error> {
    let mut out = Vec::new();
    fn walk(v: &Value, shape: &[usize], what: &str, out: &mut Vec<ScalarEntry>) -> Result<(), Error> {
        if shape.is_empty() {
            out.push(parse_scalar_entry(v, what)?);
            return Ok(());
        }
        let a = as_array(v, what)?;
        if a.len() != shape[0] {
            return Err(bad(format!("{what}: expected {} entries at this level, got {}", shape[0], a.len())));
        }
        for x in a {
            walk(x, &shape[1..], what, out)?;
        }
        Ok(())
    }
    walk(v, shape, what, &mut out)?;
    Ok(out)
}

fn scalar_table_json(t: &[ScalarEntry], shape: &[usize]) -> String {
    if shape.len() == 1 {
        return format!("[{}]", t.iter().map(entry_json).collect::<Vec<_>>().join(", "));
    }
    let stride = t.len() / shape[0];
    let parts: Vec<String> = t.chunks(stride).map(|c| scalar_table_json(c, &shape[1..])).collect();
    format!("[{}]", parts.join(", "))
}

/// Pair file: groups `F`, `G`, tables `left_action[g][f] = g▷f` and
/// `right_action[g][f] = g◁f`, and optional `sigma[g][f][f']`,
/// `tau[g][g'][f]`, `alpha[f][g]`.
pub fn pair_to_json(p: &MatchedPairGroups, c: Option<&GroupCocycleData>) -> String {
    let (nf, ng) = (p.nf(), p.ng());
    let mut s = String::from("{\n");
    let _ = writeln!(s, "  \"F\": {},", group_json(&p.f, "  "));
    let _ = writeln!(s, "  \"G\": {},", group_json(&p.g, "  "));
    let _ = write!(s, "  \"left_action\": {},\n  \"right_action\": {}", table_json(&p.left, nf), table_json(&p.right, nf));
    if let Some(c) = c {
        let _ = write!(s, ",\n  \"sigma\": {}", scalar_table_json(&c.sigma, &[ng, nf, nf]));
        let _ = write!(s, ",\n  \"tau\": {}", scalar_table_json(&c.tau, &[ng, ng, nf]));
        if let Some(a) = &c.alpha {
            let _ = write!(s, ",\n  \"alpha\": {}", scalar_table_json(a, &[nf, ng]));
        }
    }
    s.push_str("\n}\n");
    s
}

/// Parses a pair file; missing `sigma` or `tau` tables are all ones and
/// the cocycle data is `None` only when all three tables are absent.
pub fn pair_from_json(text: &str) -> Result<(MatchedPairGroups, Option<GroupCocycleData>), Error> {
    let v = parse_json(text)?;
    let f = group_of(field(&v, "F")?, "F")?;
    let g = group_of(field(&v, "G")?, "G")?;
    let (nf, ng) = (f.order(), g.order());
    let left = index_table(field(&v, "left_action")?, ng, nf, nf, "left_action")?;
    let right = index_table(field(&v, "right_action")?, ng, nf, ng, "right_action")?;
    let p = MatchedPairGroups::new(f, g, left, right)?;
    if v.get("sigma").is_none() && v.get("tau").is_none() && v.get("alpha").is_none() {
        return Ok((p, None));
    }
    let one = || ScalarEntry::Root(RootOfUnity::one());
    let sigma = match v.get("sigma") {
        Some(t) => scalar_table(t, &[ng, nf, nf], "sigma")?,
        None => (0..ng * nf * nf).map(|_| one()).collect(),
    };
    let tau = match v.get("tau") {
        Some(t) => scalar_table(t, &[ng, ng, nf], "tau")?,
        None => (0..ng * ng * nf).map(|_| one()).collect(),
    };
    let alpha = v.get("alpha").map(|t| scalar_table(t, &[nf, ng], "alpha")).transpose()?;
    let c = GroupCocycleData::new(&p, sigma, tau, alpha)?;
    Ok((p, Some(c)))
}

/// Cocycle file: `dim` and nonzero entries `[i, j, re, im]` of `χ(e_i, e_j)`.
pub fn cocycle_to_json(dim: usize, chi: &[Scalar]) -> String {
    let mut entries = Vec::new();
    for (k, &c) in chi.iter().enumerate() {
        if c != ZERO {
            entries.push(format!("[{}, {}, {}, {}]", k / dim, k % dim, json_float(c.re), json_float(c.im)));
        }
    }
    format!("{{\n  \"dim\": {dim},\n  \"chi\": [\n    {}\n  ]\n}}\n", entries.join(",\n    "))
}

/// Dense `χ` on `i·dim + j`.
pub fn cocycle_from_json(text: &str) -> Result<(usize, Vec<Scalar>), Error> {
    let v = parse_json(text)?;
    let n = as_usize(field(&v, "dim")?, "dim")?;
    let mut chi = vec![ZERO; n * n];
    for (idx, c) in tuples(field(&v, "chi")?, 2, n, "chi")? {
        chi[idx[0] * n + idx[1]] += c;
    }
    if chi.iter().any(|&z| !is_finite(z)) {
        return Err(bad("non-finite cocycle entry"));
    }
    Ok((n, chi))
}
