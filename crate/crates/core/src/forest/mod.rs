//! Generalized k-forests, k-expansions of graphs, and the σ parameter.

mod expansion;
mod families;
mod growth;
mod sigma;

pub use expansion::{expand, ExpandedForest};
pub(crate) use families::parse_args;
pub use families::{example_caterpillar, forest_from_spec, linear_path, matching, star};
pub use growth::GrowthSequence;
pub use sigma::{sigma, SigmaWitness};

#[cfg(test)]
pub(crate) mod tests_support {
    pub(crate) use super::growth::tests::random_growth;
}
