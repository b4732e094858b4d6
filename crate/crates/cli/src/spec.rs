use twisted_sn::twisted::{alpha_star, beta_star, delta_cap, delta_star, epsilon_star, gamma_star, star};
use twisted_sn::{BigInt, Element, Error, Permutation, Result};

/// An element named on the command line: `star:G`, `perm:G`, `id`, `alpha`,
/// `beta:K`, `gamma:K`, `delta:K`, `epsilon:K` or `deltacap:K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementSpec {
    Star(Permutation),
    Perm(Permutation),
    Identity,
    Alpha,
    Beta(usize),
    Gamma(usize),
    Delta(usize),
    Epsilon(usize),
    DeltaCap(usize),
}

impl ElementSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let index = |a: Option<&str>| -> Result<usize> {
            a.and_then(|a| a.trim().parse().ok())
                .ok_or_else(|| Error::Parse(format!("{head} needs a column index, as in {head}:1")))
        };
        let permutation = |a: Option<&str>| -> Result<Permutation> {
            a.ok_or_else(|| Error::Parse(format!("{head} needs a permutation, as in {head}:132")))?.parse()
        };
        match (head, arg) {
            ("star", a) => Ok(ElementSpec::Star(permutation(a)?)),
            ("perm", a) => Ok(ElementSpec::Perm(permutation(a)?)),
            ("id", None) => Ok(ElementSpec::Identity),
            ("alpha", None) => Ok(ElementSpec::Alpha),
            ("beta", a) => Ok(ElementSpec::Beta(index(a)?)),
            ("gamma", a) => Ok(ElementSpec::Gamma(index(a)?)),
            ("delta", a) => Ok(ElementSpec::Delta(index(a)?)),
            ("epsilon", a) => Ok(ElementSpec::Epsilon(index(a)?)),
            ("deltacap", a) => Ok(ElementSpec::DeltaCap(index(a)?)),
            _ => Err(Error::Parse(format!(
                "unknown element {s:?} (star:G, perm:G, id, alpha, beta:K, gamma:K, delta:K, epsilon:K, deltacap:K)"
            ))),
        }
    }

    /// Degree implied by a permutation literal.
    pub fn implied_degree(&self) -> Option<usize> {
        match self {
            ElementSpec::Star(g) | ElementSpec::Perm(g) => Some(g.degree()),
            _ => None,
        }
    }

    pub fn is_star(&self) -> Option<&Permutation> {
        match self {
            ElementSpec::Star(g) => Some(g),
            _ => None,
        }
    }

    pub fn build(&self, n: usize) -> Result<Element> {
        if let Some(d) = self.implied_degree().filter(|&d| d != n) {
            return Err(Error::DegreeMismatch { left: n, right: d });
        }
        match self {
            ElementSpec::Star(g) => Ok(star(g)),
            ElementSpec::Perm(g) => Ok(Element::basis(g.clone())),
            ElementSpec::Identity => Ok(Element::identity(n)),
            ElementSpec::Alpha => Ok(alpha_star(n)),
            ElementSpec::Beta(k) => beta_star(n, *k),
            ElementSpec::Gamma(k) => gamma_star(n, *k),
            ElementSpec::Delta(k) => delta_star(n, *k),
            ElementSpec::Epsilon(k) => epsilon_star(n, *k),
            ElementSpec::DeltaCap(k) => Ok(Element::scalar(delta_cap::<BigInt>(n, *k)?, n)),
        }
    }
}

/// `--n` if given, otherwise the degree implied by the specs.
pub fn resolve_degree(n: Option<usize>, specs: &[&ElementSpec]) -> Result<usize> {
    if let Some(n) = n {
        if n == 0 {
            return Err(Error::OutOfRange("n must be at least 1".into()));
        }
        return Ok(n);
    }
    specs
        .iter()
        .find_map(|s| s.implied_degree())
        .ok_or_else(|| Error::Parse("--n is required for this element".into()))
}
