use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

/// The ordered indeterminate universe: `d` parameters below `n` variables,
/// `u1 ≺ … ≺ ud ≺ x1 ≺ … ≺ xn`.
///
/// Indeterminates are addressed by a flat index `0..d+n`; indices below `d`
/// are parameters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context {
    params: Vec<String>,
    vars: Vec<String>,
}

impl Context {
    /// Builds a context, checking that all identifiers are distinct and that
    /// there is at least one variable.
    pub fn new<S: Into<String>>(params: Vec<S>, vars: Vec<S>) -> Arc<Context> {
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        assert!(!vars.is_empty(), "context needs at least one variable");
        let mut all: Vec<&String> = params.iter().chain(vars.iter()).collect();
        all.sort();
        all.dedup();
        assert_eq!(
            all.len(),
            params.len() + vars.len(),
            "context identifiers must be distinct"
        );
        Arc::new(Context { params, vars })
    }

    pub fn num_params(&self) -> usize {
        self.params.len()
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_indets(&self) -> usize {
        self.params.len() + self.vars.len()
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Flat index of the variable `x_k` (1-based `k`).
    pub fn var_index(&self, k: usize) -> usize {
        assert!(k >= 1 && k <= self.vars.len(), "variable index out of range");
        self.params.len() + k - 1
    }

    /// 1-based variable position of a flat index, or `None` for a parameter.
    pub fn var_position(&self, idx: usize) -> Option<usize> {
        if idx >= self.params.len() && idx < self.num_indets() {
            Some(idx - self.params.len() + 1)
        } else {
            None
        }
    }

    pub fn is_param(&self, idx: usize) -> bool {
        idx < self.params.len()
    }

    pub fn indet_name(&self, idx: usize) -> &str {
        if idx < self.params.len() {
            &self.params[idx]
        } else {
            &self.vars[idx - self.params.len()]
        }
    }

    /// Flat index of a named indeterminate.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.params
            .iter()
            .chain(self.vars.iter())
            .position(|s| s == name)
    }

    /// The parameter-free context with the same variables, used by
    /// specialization.
    pub fn parameter_free(&self) -> Arc<Context> {
        Context::new(Vec::<String>::new(), self.vars.clone())
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parameters: {}; variables: {}",
            self.params.join(" "),
            self.vars.join(" ")
        )
    }
}

/// An exact rational point `a ∈ K^d` in parameter space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterPoint {
    coords: Vec<BigRational>,
}

impl ParameterPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        ParameterPoint { coords }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
