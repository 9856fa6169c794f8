use super::{kalai_packing_family, lower_bound_family, matching_extremal_family, path_extremal_family};
use crate::error::{invalid, Result};
use crate::forest::{self, forest_from_spec, parse_args};
use crate::hypergraph::Hypergraph;
use crate::kernel::counterexample_f3;

/// Size parameters shared by all constructions; each reads what it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildContext {
    pub n: Option<usize>,
    pub k: Option<usize>,
    /// Forest spec used by `lowerbound`.
    pub tree: Option<String>,
}

impl BuildContext {
    pub fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| invalid("this construction needs -n"))
    }

    pub fn k(&self) -> Result<usize> {
        self.k.ok_or_else(|| invalid("this construction needs -k"))
    }

    /// Pads a pattern to `n` vertices when `n` was given.
    fn pad(&self, h: Hypergraph) -> Result<Hypergraph> {
        match self.n {
            Some(n) if n < h.n() => Err(invalid(format!("pattern needs {} vertices, -n is {n}", h.n()))),
            Some(n) => h.with_vertex_count(n),
            None => Ok(h),
        }
    }
}

/// A named family builder, addressed by `name:args`.
pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;
    fn usage(&self) -> &'static str;
    fn arity(&self) -> usize;
    fn build(&self, args: &[usize], ctx: &BuildContext) -> Result<Hypergraph>;
}

macro_rules! construction {
    ($ty:ident, $name:literal, $usage:literal, $arity:literal, |$a:ident, $c:ident| $body:expr) => {
        struct $ty;
        impl Construction for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn usage(&self) -> &'static str {
                $usage
            }
            fn arity(&self) -> usize {
                $arity
            }
            fn build(&self, $a: &[usize], $c: &BuildContext) -> Result<Hypergraph> {
                $body
            }
        }
    };
}

construction!(Matching, "matching", "matching:NU -k K   nu pairwise disjoint k-sets", 1, |a, c| c
    .pad(forest::matching(c.k()?, a[0])?));
construction!(LinearPath, "lpath", "lpath:L -k K   linear path with l edges", 1, |a, c| c
    .pad(forest::linear_path(c.k()?, a[0])?));
construction!(Star, "star", "star:L -k K   linear star with l edges", 1, |a, c| c.pad(forest::star(c.k()?, a[0])?));
construction!(Caterpillar, "sec4tree", "sec4tree:D,C   caterpillar on a1 b1 b2 a2 with d and c leaves", 2, |a, c| c
    .pad(forest::example_caterpillar(a[0], a[1])?.to_hypergraph()));
construction!(PathGraph, "lpath-graph", "lpath-graph:L   graph path with l edges", 1, |a, c| c
    .pad(crate::graph::Graph::path(a[0]).to_hypergraph()));
construction!(StarGraph, "star-graph", "star-graph:L   graph star with l edges", 1, |a, c| c
    .pad(crate::graph::Graph::star(a[0]).to_hypergraph()));
construction!(
    LowerBound,
    "lowerbound",
    "lowerbound -n N -k K --tree SPEC   k-sets meeting [sigma-1] once",
    0,
    |_a, c| {
        let spec = c.tree.as_deref().ok_or_else(|| invalid("lowerbound needs --tree"))?;
        lower_bound_family(c.n()?, c.k()?, forest_from_spec(spec)?.graph())
    }
);
construction!(
    PathExtremal,
    "pathext",
    "pathext:L -n N -k K   k-sets meeting [t] (+ pair block for even l)",
    1,
    |a, c| path_extremal_family(c.n()?, c.k()?, a[0])
);
construction!(MatchingExtremal, "matchingext", "matchingext:NU -n N -k K   k-sets meeting [nu]", 1, |a, c| {
    matching_extremal_family(c.n()?, c.k()?, a[0])
});
construction!(Kalai, "kalai", "kalai:V -n N -k K   greedy (v-1)-set packing, blocks made complete", 1, |a, c| {
    kalai_packing_family(c.n()?, c.k()?, a[0])
});
construction!(F3, "f3", "f3:T   matching of t pairs joined with t singletons", 1, |a, _c| counterexample_f3(a[0]));

/// Constructions looked up by spec name.
pub struct ConstructionRegistry {
    items: Vec<Box<dyn Construction>>,
}

impl ConstructionRegistry {
    pub fn empty() -> Self {
        ConstructionRegistry { items: Vec::new() }
    }

    pub fn register(&mut self, c: Box<dyn Construction>) {
        self.items.retain(|x| x.name() != c.name());
        self.items.push(c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Construction> {
        self.items.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Construction> {
        self.items.iter().map(|c| c.as_ref())
    }

    /// Parses `name:a,b` and builds the family.
    pub fn build(&self, spec: &str, ctx: &BuildContext) -> Result<Hypergraph> {
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        let c = self.get(name).ok_or_else(|| invalid(format!("unknown construction `{name}`")))?;
        let args = if c.arity() == 0 {
            if !args.is_empty() {
                return Err(invalid(format!("`{name}` takes no inline parameters")));
            }
            Vec::new()
        } else {
            parse_args(spec, args, c.arity())?
        };
        c.build(&args, ctx)
    }
}

pub fn construction_registry() -> ConstructionRegistry {
    let mut r = ConstructionRegistry::empty();
    r.register(Box::new(Matching));
    r.register(Box::new(LinearPath));
    r.register(Box::new(Star));
    r.register(Box::new(Caterpillar));
    r.register(Box::new(PathGraph));
    r.register(Box::new(StarGraph));
    r.register(Box::new(LowerBound));
    r.register(Box::new(PathExtremal));
    r.register(Box::new(MatchingExtremal));
    r.register(Box::new(Kalai));
    r.register(Box::new(F3));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: Option<usize>, k: Option<usize>) -> BuildContext {
        BuildContext { n, k, tree: None }
    }

    #[test]
    fn builds_by_spec() {
        let r = construction_registry();
        assert_eq!(r.build("matching:2", &ctx(None, Some(3))).unwrap().len(), 2);
        assert_eq!(r.build("lpath:3", &ctx(Some(12), Some(4))).unwrap().n(), 12);
        assert_eq!(r.build("sec4tree:2,1", &ctx(None, None)).unwrap().len(), 9);
        assert_eq!(r.build("f3:3", &ctx(None, None)).unwrap().len(), 9);
        assert_eq!(r.build("pathext:4", &ctx(Some(8), Some(4))).unwrap().len(), 45);
        assert_eq!(r.build("matchingext:2", &ctx(Some(10), Some(3))).unwrap().len(), 64);
        let lb = BuildContext { n: Some(6), k: Some(3), tree: Some("lpath-graph:3".into()) };
        assert_eq!(r.build("lowerbound", &lb).unwrap().len(), 10);
    }

    #[test]
    fn rejects_bad_specs() {
        let r = construction_registry();
        assert!(r.build("wheel:3", &ctx(None, Some(3))).is_err());
        assert!(r.build("matching:2", &ctx(None, None)).is_err());
        assert!(r.build("matching:2,3", &ctx(None, Some(3))).is_err());
        assert!(r.build("lowerbound:3", &ctx(Some(6), Some(3))).is_err());
        assert!(r.build("lpath:3", &ctx(Some(4), Some(3))).is_err());
    }
}
