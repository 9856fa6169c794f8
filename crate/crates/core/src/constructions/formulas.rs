use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::{erdos_matching_bound, forest_turan_bound, lower_bound_value, path_extremal_value, star_phi};
use crate::binomial::choose;
use crate::error::{invalid, Error, Result};
use crate::forest::{expand, forest_from_spec, linear_path, matching, sigma, star, GrowthSequence};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// How a formula value relates to the true Turán number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Claimed equal at every admissible point.
    Exact,
    /// Claimed upper bound at every point.
    Upper,
    /// Claimed lower bound at every point.
    Lower,
    /// Only claimed for large `n` or asymptotically; compared, never asserted.
    Reported,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Exact => "exact",
            Relation::Upper => "upper",
            Relation::Lower => "lower",
            Relation::Reported => "reported",
        })
    }
}

/// Named integer parameters plus an optional forest spec such as `sec4tree:2,1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub values: BTreeMap<String, u64>,
    pub tree: Option<String>,
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: u64) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }

    pub fn with_tree(mut self, spec: &str) -> Self {
        self.tree = Some(spec.to_string());
        self
    }

    pub fn get(&self, name: &str) -> Result<u64> {
        self.values.get(name).copied().ok_or_else(|| invalid(format!("missing parameter `{name}`")))
    }

    fn get_usize(&self, name: &str) -> Result<usize> {
        usize::try_from(self.get(name)?).map_err(|_| invalid(format!("parameter `{name}` too large")))
    }

    fn tree_graph(&self) -> Result<Graph> {
        let spec = self.tree.as_deref().ok_or_else(|| invalid("missing forest spec"))?;
        Ok(forest_from_spec(spec)?.into_graph())
    }

    pub fn to_json(&self) -> Value {
        let mut map: serde_json::Map<String, Value> = self.values.iter().map(|(k, &v)| (k.clone(), json!(v))).collect();
        if let Some(t) = &self.tree {
            map.insert("tree".into(), json!(t));
        }
        Value::Object(map)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let Some(t) = &self.tree {
            parts.push(format!("tree={t}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// One evaluated formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub formula: String,
    pub params: Params,
    pub value: u64,
}

impl FormulaReport {
    pub fn to_json(&self) -> Value {
        json!({ "formula": self.formula, "params": self.params.to_json(), "value": self.value })
    }
}

/// A closed-form extremal value together with the patterns it speaks about.
pub trait Formula: Send + Sync {
    fn id(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn relation(&self) -> Relation;
    /// Integer parameter names the formula reads.
    fn parameters(&self) -> &'static [&'static str];
    fn evaluate(&self, p: &Params) -> Result<u64>;
    /// The forbidden family whose Turán number the formula describes.
    fn forbidden(&self, p: &Params) -> Result<Vec<Hypergraph>>;

    fn report(&self, p: &Params) -> Result<FormulaReport> {
        Ok(FormulaReport { formula: self.id().to_string(), params: p.clone(), value: self.evaluate(p)? })
    }
}

/// Convention for the leading coefficient of the matching Turán number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingConvention {
    /// Coefficient `ν`, as the asymptotic is commonly printed.
    Printed,
    /// Coefficient `ν - 1`: the value when `ν` pairwise disjoint edges are forbidden.
    Forbidden,
}

/// `c C(n-1, k-1)` with `c = ν` or `ν - 1` depending on `convention`.
pub fn matching_leading(n: usize, k: usize, nu: usize, convention: MatchingConvention) -> Result<u64> {
    if nu < 1 || k < 1 {
        return Err(invalid("need nu >= 1 and k >= 1"));
    }
    let c = match convention {
        MatchingConvention::Printed => nu,
        MatchingConvention::Forbidden => nu - 1,
    } as u64;
    c.checked_mul(choose(n.saturating_sub(1), k - 1)?).ok_or_else(|| Error::Overflow("matching leading term".into()))
}

/// `n` if `4 | n`, else `n - 1`, for `n >= 4`.
pub fn triple_two_edge_path(n: usize) -> Result<u64> {
    if n < 4 {
        return Err(invalid("the rule is stated for n >= 4"));
    }
    Ok(if n.is_multiple_of(4) { n } else { n - 1 } as u64)
}

macro_rules! formula {
    ($ty:ident, $id:literal, $summary:literal, $rel:expr, [$($param:literal),*],
     |$p:ident| $eval:expr, |$q:ident| $forbid:expr) => {
        struct $ty;
        impl Formula for $ty {
            fn id(&self) -> &'static str { $id }
            fn summary(&self) -> &'static str { $summary }
            fn relation(&self) -> Relation { $rel }
            fn parameters(&self) -> &'static [&'static str] { &[$($param),*] }
            fn evaluate(&self, $p: &Params) -> Result<u64> { $eval }
            fn forbidden(&self, $q: &Params) -> Result<Vec<Hypergraph>> { $forbid }
        }
    };
}

formula!(
    Ekr,
    "ekr",
    "C(n-1, k-1): no two disjoint edges, n >= 2k",
    Relation::Exact,
    ["n", "k"],
    |p| {
        let (n, k) = (p.get_usize("n")?, p.get_usize("k")?);
        if n < 2 * k {
            return Err(invalid("the intersecting bound needs n >= 2k"));
        }
        choose(n - 1, k - 1)
    },
    |p| Ok(vec![matching(p.get_usize("k")?, 2)?])
);

formula!(
    ErdosMatching,
    "erdos-matching",
    "C(n,k) - C(n-nu,k): no nu+1 disjoint edges, large n",
    Relation::Reported,
    ["n", "k", "nu"],
    |p| erdos_matching_bound(p.get_usize("n")?, p.get_usize("k")?, p.get_usize("nu")?),
    |p| Ok(vec![matching(p.get_usize("k")?, p.get_usize("nu")? + 1)?])
);

formula!(
    MatchingLeading,
    "matching-leading",
    "c C(n-1,k-1) for nu disjoint edges; c = nu, or nu-1 with shifted=1",
    Relation::Reported,
    ["n", "k", "nu", "shifted"],
    |p| {
        let convention = match p.get("shifted")? {
            0 => MatchingConvention::Printed,
            1 => MatchingConvention::Forbidden,
            other => return Err(invalid(format!("shifted must be 0 or 1, got {other}"))),
        };
        matching_leading(p.get_usize("n")?, p.get_usize("k")?, p.get_usize("nu")?, convention)
    },
    |p| Ok(vec![matching(p.get_usize("k")?, p.get_usize("nu")?)?])
);

formula!(
    TwoEdgePath,
    "two-edge-path",
    "C(n-2, k-2) for the 2-edge linear path, k >= 4, large n",
    Relation::Reported,
    ["n", "k"],
    |p| choose(p.get_usize("n")?.saturating_sub(2), p.get_usize("k")?.saturating_sub(2)),
    |p| Ok(vec![linear_path(p.get_usize("k")?, 2)?])
);

formula!(
    TripleTwoEdgePath,
    "triple-two-edge-path",
    "n if 4 | n else n-1, for triple systems, n >= 4",
    Relation::Exact,
    ["n"],
    |p| triple_two_edge_path(p.get_usize("n")?),
    |_p| Ok(vec![linear_path(3, 2)?])
);

formula!(
    LinearPath,
    "linear-path",
    "sum of C(n-i, k-1) for i <= t (+ C(n-t-2, k-2) for even l), large n",
    Relation::Reported,
    ["n", "k", "l"],
    |p| path_extremal_value(p.get_usize("n")?, p.get_usize("k")?, p.get_usize("l")?),
    |p| Ok(vec![linear_path(p.get_usize("k")?, p.get_usize("l")?)?])
);

formula!(
    StarLeading,
    "star-leading",
    "phi(l) C(n-2, k-2), asymptotic",
    Relation::Reported,
    ["n", "k", "l"],
    |p| {
        let phi = star_phi(p.get("l")?)?;
        let c = choose(p.get_usize("n")?.saturating_sub(2), p.get_usize("k")?.saturating_sub(2))?;
        phi.checked_mul(c).ok_or_else(|| Error::Overflow("star leading term".into()))
    },
    |p| Ok(vec![star(p.get_usize("k")?, p.get_usize("l")?)?])
);

formula!(
    GraphStar,
    "graph-star",
    "floor((l-1) n / 2) for the star with l edges, n >= l",
    Relation::Exact,
    ["n", "l"],
    |p| {
        let (n, l) = (p.get("n")?, p.get("l")?);
        if l < 1 || n < l {
            return Err(invalid("need 1 <= l <= n"));
        }
        Ok((l - 1) * n / 2)
    },
    |p| Ok(vec![Graph::star(p.get_usize("l")?).to_hypergraph()])
);

formula!(
    ForestUpper,
    "forest-upper",
    "(v-k) C(n, k-1) for a k-forest on v vertices (tight path)",
    Relation::Upper,
    ["n", "k", "v"],
    |p| forest_turan_bound(p.get_usize("v")?, p.get_usize("k")?, p.get_usize("n")?),
    |p| {
        let (k, v) = (p.get_usize("k")?, p.get_usize("v")?);
        if v < k {
            return Err(invalid("need v >= k"));
        }
        Ok(vec![GrowthSequence::tight_path(k, v - k + 1).to_hypergraph()?])
    }
);

formula!(
    ForestGraphUpper,
    "forest-graph-upper",
    "(v-2) n for a graph forest on v vertices (path)",
    Relation::Upper,
    ["n", "v"],
    |p| crate::graph::forest_turan_upper(p.get("v")?, p.get("n")?),
    |p| {
        let v = p.get_usize("v")?;
        if v < 2 {
            return Err(invalid("need v >= 2"));
        }
        Ok(vec![Graph::path(v - 1).to_hypergraph()])
    }
);

formula!(
    ErdosGallai,
    "erdos-gallai",
    "floor((l-1) n / 2) for the graph path with l edges",
    Relation::Upper,
    ["n", "l"],
    |p| {
        let l = p.get("l")?;
        if l < 1 {
            return Err(invalid("need l >= 1"));
        }
        Ok((l - 1) * p.get("n")? / 2)
    },
    |p| Ok(vec![Graph::path(p.get_usize("l")?).to_hypergraph()])
);

formula!(
    CrossCutLower,
    "cross-cut-lower",
    "(sigma-1) C(n-sigma+1, k-1) for the k-expansion of a forest",
    Relation::Lower,
    ["n", "k"],
    |p| lower_bound_value(p.get_usize("n")?, p.get_usize("k")?, sigma(&p.tree_graph()?)?.value),
    |p| Ok(vec![expand(&p.tree_graph()?, p.get_usize("k")?)?.result])
);

formula!(
    ExpansionLeading,
    "expansion-leading",
    "(sigma-1) C(n, k-1), asymptotic for k >= 4",
    Relation::Reported,
    ["n", "k"],
    |p| {
        let s = sigma(&p.tree_graph()?)?.value as u64;
        (s - 1)
            .checked_mul(choose(p.get_usize("n")?, p.get_usize("k")? - 1)?)
            .ok_or_else(|| Error::Overflow("expansion leading term".into()))
    },
    |p| Ok(vec![expand(&p.tree_graph()?, p.get_usize("k")?)?.result])
);

/// Formulas looked up by id.
pub struct FormulaRegistry {
    formulas: Vec<Box<dyn Formula>>,
}

impl FormulaRegistry {
    pub fn empty() -> Self {
        FormulaRegistry { formulas: Vec::new() }
    }

    pub fn register(&mut self, formula: Box<dyn Formula>) {
        self.formulas.retain(|f| f.id() != formula.id());
        self.formulas.push(formula);
    }

    pub fn get(&self, id: &str) -> Option<&dyn Formula> {
        self.formulas.iter().find(|f| f.id() == id).map(|f| f.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Formula> {
        self.formulas.iter().map(|f| f.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.formulas.iter().map(|f| f.id()).collect()
    }
}

/// Registry with every built-in formula.
pub fn formula_registry() -> FormulaRegistry {
    let mut r = FormulaRegistry::empty();
    r.register(Box::new(Ekr));
    r.register(Box::new(ErdosMatching));
    r.register(Box::new(MatchingLeading));
    r.register(Box::new(TwoEdgePath));
    r.register(Box::new(TripleTwoEdgePath));
    r.register(Box::new(LinearPath));
    r.register(Box::new(StarLeading));
    r.register(Box::new(GraphStar));
    r.register(Box::new(ForestUpper));
    r.register(Box::new(ForestGraphUpper));
    r.register(Box::new(ErdosGallai));
    r.register(Box::new(CrossCutLower));
    r.register(Box::new(ExpansionLeading));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(id: &str, p: Params) -> u64 {
        formula_registry().get(id).unwrap().evaluate(&p).unwrap()
    }

    #[test]
    fn values() {
        assert_eq!(eval("ekr", Params::new().with("n", 6).with("k", 3)), 10);
        assert_eq!(eval("erdos-matching", Params::new().with("n", 10).with("k", 3).with("nu", 2)), 64);
        assert_eq!(eval("two-edge-path", Params::new().with("n", 8).with("k", 4)), 15);
        assert_eq!(eval("linear-path", Params::new().with("n", 8).with("k", 4).with("l", 4)), 45);
        assert_eq!(eval("forest-upper", Params::new().with("n", 10).with("k", 3).with("v", 5)), 90);
        assert_eq!(eval("erdos-gallai", Params::new().with("n", 5).with("l", 3)), 5);
        assert_eq!(eval("cross-cut-lower", Params::new().with("n", 6).with("k", 3).with_tree("path:3")), 10);
        assert_eq!(eval("expansion-leading", Params::new().with("n", 6).with("k", 3).with_tree("path:3")), 15);
        let triple: Vec<u64> = (4..=8).map(|n| eval("triple-two-edge-path", Params::new().with("n", n))).collect();
        assert_eq!(triple, vec![4, 4, 5, 6, 8]);
    }

    #[test]
    fn matching_conventions() {
        assert_eq!(matching_leading(6, 3, 2, MatchingConvention::Forbidden).unwrap(), 10);
        assert_eq!(matching_leading(6, 3, 2, MatchingConvention::Printed).unwrap(), 20);
        let p = Params::new().with("n", 6).with("k", 3).with("nu", 2);
        assert_eq!(eval("matching-leading", p.clone().with("shifted", 1)), 10);
        let r = formula_registry();
        assert!(r.get("matching-leading").unwrap().evaluate(&p.with("shifted", 2)).is_err());
    }

    #[test]
    fn missing_parameters() {
        let r = formula_registry();
        assert!(r.get("ekr").unwrap().evaluate(&Params::new().with("n", 6)).is_err());
        assert!(r.get("cross-cut-lower").unwrap().evaluate(&Params::new().with("n", 6).with("k", 3)).is_err());
        assert!(r.get("nope").is_none());
    }

    #[test]
    fn every_formula_names_its_patterns() {
        let p = Params::new()
            .with("n", 9)
            .with("k", 3)
            .with("nu", 2)
            .with("l", 3)
            .with("v", 5)
            .with("shifted", 1)
            .with_tree("path:3");
        for f in formula_registry().iter() {
            let pats = f.forbidden(&p).unwrap();
            assert!(!pats.is_empty(), "{}", f.id());
            assert!(f.parameters().iter().all(|name| p.get(name).is_ok()));
        }
    }

    #[test]
    fn report_json() {
        let r = formula_registry().get("ekr").unwrap().report(&Params::new().with("n", 6).with("k", 3)).unwrap();
        assert_eq!(r.to_json().to_string(), r#"{"formula":"ekr","params":{"k":3,"n":6},"value":10}"#);
    }
}
