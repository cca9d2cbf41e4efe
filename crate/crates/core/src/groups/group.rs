use crate::error::Error;

/// Finite group given by its multiplication table over indices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses exactly.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput(format!("group table must be {n}x{n} with entries below {n}")));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or_else(|| Error::InvalidInput("group table has no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidInput(format!(
                            "group table not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or_else(|| Error::InvalidInput(format!("{} has no inverse", labels[g])))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup { order: n, labels, table: flat, identity, inverse })
    }

    /// `C_n` with elements `a^k` at index `k`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|k| power_label("a", k)).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(labels, table).expect("cyclic group")
    }

    /// `C_n × C_n` with `a^i b^j` at index `i·n + j`.
    pub fn cyclic_square(n: usize) -> Self {
        let labels = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                match (i, j) {
                    (0, 0) => "1".to_string(),
                    (_, 0) => power_label("a", i),
                    (0, _) => power_label("b", j),
                    _ => format!("{}{}", power_label("a", i), power_label("b", j)),
                }
            })
            .collect();
        let table = (0..n * n)
            .map(|x| {
                (0..n * n)
                    .map(|y| ((x / n + y / n) % n) * n + (x % n + y % n) % n)
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(labels, table).expect("product of cyclic groups")
    }

    /// Symmetric group on three letters, permutations in lexicographic order.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let labels = perms.iter().map(|p| format!("({}{}{})", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (pq)(k) = p(q(k))
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        FiniteGroup::from_table(labels, table).expect("S3")
    }

    /// Direct product with `(g, h)` at index `g·|H| + h`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let (n1, n2) = (self.order, other.order);
        let labels = (0..n1 * n2)
            .map(|k| format!("({},{})", self.labels[k / n2], other.labels[k % n2]))
            .collect();
        let table = (0..n1 * n2)
            .map(|x| {
                (0..n1 * n2)
                    .map(|y| self.mul(x / n2, y / n2) * n2 + other.mul(x % n2, y % n2))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(labels, table).expect("direct product")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}
