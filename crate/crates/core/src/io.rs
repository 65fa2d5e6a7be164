//! JSON fixture format.
//!
//! ```json
//! {
//!   "name": "N08",
//!   "dim": 2,
//!   "params": ["delta"],
//!   "excluded": [{"delta": "0"}],
//!   "first": {"e1e1": "e1", "e2e1": "e2/delta"},
//!   "checks": [{"family": "delta-novikov", "delta": "delta"}]
//! }
//! ```
//!
//! Products are keyed `e<i>e<j>` (1-based) and valued by a linear combination of
//! basis names whose coefficients use the scalar grammar. A fixture with a
//! `second` table loads as a [`BiAlgebra`]. Unbound `delta` stays formal; any
//! other declared parameter must be bound.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{default_labels, Algebra, BiAlgebra, Op, Role, Structure, Table, Vector};
use crate::construct::LinearMap;
use crate::error::{Error, Result};
use crate::identity::{catalog, check_family, FamilyReport};
use crate::linalg::ExactMatrix;
use crate::scalar::{parse_scalar_with, Env, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub family: String,
    /// Scalar expression; `delta` means the fixture parameter, or the formal symbol when unbound.
    pub delta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<String>,
    /// Forbidden joint assignments; values may mention other parameters.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub excluded: Vec<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub first: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckSpec>,
    /// Named linear maps, rows of the matrix.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
    /// Named vectors in coordinates.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vectors: BTreeMap<String, Vec<String>>,
}

/// What a fixture file describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Algebra(Algebra),
    BiAlgebra(BiAlgebra),
}

impl Loaded {
    pub fn dim(&self) -> usize {
        match self {
            Loaded::Algebra(a) => a.dim(),
            Loaded::BiAlgebra(b) => b.dim(),
        }
    }

    /// The algebra itself, or the first product of a bialgebra.
    pub fn first_algebra(&self) -> Algebra {
        match self {
            Loaded::Algebra(a) => a.clone(),
            Loaded::BiAlgebra(b) => b.first_algebra(),
        }
    }

    pub fn as_bialgebra(&self) -> Option<&BiAlgebra> {
        match self {
            Loaded::BiAlgebra(b) => Some(b),
            Loaded::Algebra(_) => None,
        }
    }
}

impl Structure for Loaded {
    fn dim(&self) -> usize {
        Loaded::dim(self)
    }
    fn product(&self, op: Op) -> Option<&Table> {
        match self {
            Loaded::Algebra(a) => a.product(op),
            Loaded::BiAlgebra(b) => b.product(op),
        }
    }
}

/// Parses fixture JSON; syntax and schema errors carry line and column.
pub fn parse_fixture(text: &str) -> Result<Fixture> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Re-anchors a scalar parse error at the first occurrence of `needle` in `src`.
fn locate(src: Option<&str>, needle: &str, err: Error) -> Error {
    let (
        Some(src),
        Error::Parse {
            message, column: c, ..
        },
    ) = (src, &err)
    else {
        return err;
    };
    let Some(at) = src.find(&format!("\"{needle}\"")) else {
        return err;
    };
    let before = &src[..at];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1 + c;
    Error::Parse {
        line,
        column: col,
        message: format!("in \"{needle}\": {message}"),
    }
}

fn basis_key(key: &str, dim: usize) -> Option<(usize, usize)> {
    let rest = key.strip_prefix('e')?;
    let (i, j) = rest.split_once('e')?;
    let (i, j): (usize, usize) = (i.parse().ok()?, j.parse().ok()?);
    ((1..=dim).contains(&i) && (1..=dim).contains(&j)).then_some((i - 1, j - 1))
}

/// Coordinates of a linear combination of `e1..en`.
pub fn parse_combination(s: &str, dim: usize, env: &Env) -> Result<Vector> {
    let eval = |vals: &dyn Fn(usize) -> Scalar| -> Result<Scalar> {
        let mut e = env.clone();
        for k in 0..dim {
            e.insert(format!("e{}", k + 1), vals(k));
        }
        parse_scalar_with(s, &e)
    };
    let constant = eval(&|_| Scalar::zero())?;
    let coords: Vector = (0..dim)
        .map(|k| {
            eval(&|m| {
                if m == k {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
        })
        .collect::<Result<_>>()?;
    // a generic point catches products of basis names
    let probe = eval(&|m| Scalar::from_int(m as i64 + 2))?;
    let lin = coords
        .iter()
        .enumerate()
        .fold(Scalar::zero(), |acc, (m, c)| {
            &acc + &(c * &Scalar::from_int(m as i64 + 2))
        });
    if !constant.is_zero() || probe != lin {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("`{s}` is not a linear combination of e1..e{dim}"),
        });
    }
    Ok(coords)
}

fn table_from_map(
    map: &BTreeMap<String, String>,
    dim: usize,
    env: &Env,
    src: Option<&str>,
) -> Result<Table> {
    let mut t = Table::zero(dim);
    for (key, val) in map {
        let (i, j) = basis_key(key, dim).ok_or_else(|| {
            locate(
                src,
                key,
                Error::Parse {
                    line: 1,
                    column: 0,
                    message: format!("bad product key `{key}`"),
                },
            )
        })?;
        let v = parse_combination(val, dim, env).map_err(|e| locate(src, val, e))?;
        t.set_basis_product(i, j, &v);
    }
    Ok(t)
}

impl Fixture {
    /// Parameter values used when none are given: δ=2, α=3, β=5, others 1.
    pub fn default_bindings(&self) -> BTreeMap<String, Rational> {
        self.params
            .iter()
            .map(|p| {
                let v = match p.as_str() {
                    "delta" => 2,
                    "alpha" => 3,
                    "beta" => 5,
                    _ => 1,
                };
                (p.clone(), Rational::from_int(v))
            })
            .collect()
    }

    fn env(&self, bindings: &BTreeMap<String, Rational>) -> Result<Env> {
        let mut env = Env::new();
        for p in &self.params {
            match bindings.get(p) {
                Some(v) => {
                    env.insert(p.clone(), Scalar::from_rational(v.clone()));
                }
                None if p == "delta" => {}
                None => return Err(Error::UnboundParameter(p.clone())),
            }
        }
        for ex in &self.excluded {
            let mut hit = !ex.is_empty();
            for (p, v) in ex {
                let bound = env.get(p);
                let forbidden = parse_scalar_with(v, &env).ok();
                if bound.is_none() || forbidden.as_ref() != bound {
                    hit = false;
                    break;
                }
            }
            if hit {
                let (ps, vs): (Vec<_>, Vec<_>) = ex
                    .iter()
                    .map(|(p, _)| (p.clone(), env[p].to_string()))
                    .unzip();
                return Err(Error::ExcludedParameter {
                    fixture: self.name.clone(),
                    param: ps.join(","),
                    value: vs.join(","),
                });
            }
        }
        Ok(env)
    }

    pub fn instantiate(&self, bindings: &BTreeMap<String, Rational>) -> Result<Loaded> {
        self.instantiate_src(bindings, None)
    }

    fn instantiate_src(
        &self,
        bindings: &BTreeMap<String, Rational>,
        src: Option<&str>,
    ) -> Result<Loaded> {
        let env = self.env(bindings)?;
        let first = table_from_map(&self.first, self.dim, &env, src)?;
        let labels = self
            .labels
            .clone()
            .unwrap_or_else(|| default_labels(self.dim));
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: labels.len(),
            });
        }
        Ok(match &self.second {
            None => Loaded::Algebra(Algebra {
                table: first,
                labels,
            }),
            Some(m) => {
                let role = match &self.role {
                    None => Role::Novikov,
                    Some(r) => Role::parse(r)
                        .ok_or_else(|| Error::Invalid(format!("unknown role `{r}`")))?,
                };
                Loaded::BiAlgebra(BiAlgebra {
                    first,
                    second: table_from_map(m, self.dim, &env, src)?,
                    role,
                    labels,
                })
            }
        })
    }

    /// The δ of the first declared check, under the given bindings.
    pub fn declared_delta(&self, bindings: &BTreeMap<String, Rational>) -> Result<Option<Scalar>> {
        let env = self.env(bindings)?;
        self.checks
            .first()
            .map(|c| parse_scalar_with(&c.delta, &env))
            .transpose()
    }

    pub fn map(&self, name: &str, bindings: &BTreeMap<String, Rational>) -> Result<LinearMap> {
        let env = self.env(bindings)?;
        let rows = self
            .maps
            .get(name)
            .ok_or_else(|| Error::Invalid(format!("fixture {} has no map `{name}`", self.name)))?;
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_scalar_with(s, &env)).collect())
            .collect::<Result<_>>()?;
        LinearMap::new(ExactMatrix::from_rows(rows)?)
    }

    pub fn vector(&self, name: &str, bindings: &BTreeMap<String, Rational>) -> Result<Vector> {
        let env = self.env(bindings)?;
        let v = self.vectors.get(name).ok_or_else(|| {
            Error::Invalid(format!("fixture {} has no vector `{name}`", self.name))
        })?;
        v.iter().map(|s| parse_scalar_with(s, &env)).collect()
    }

    /// Runs every declared check.
    pub fn self_check(&self, bindings: &BTreeMap<String, Rational>) -> Result<Vec<FamilyReport>> {
        let loaded = self.instantiate(bindings)?;
        let env = self.env(bindings)?;
        self.checks
            .iter()
            .map(|c| {
                let d = parse_scalar_with(&c.delta, &env)?;
                check_family(&catalog(&c.family, &d)?, &loaded)
            })
            .collect()
    }
}

/// Reads a fixture file.
pub fn read_fixture(path: &Path) -> Result<(Fixture, String)> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok((parse_fixture(&text)?, text))
}

/// Loads a fixture file and instantiates it with the given bindings.
pub fn load_algebra(path: &Path, bindings: &BTreeMap<String, Rational>) -> Result<Loaded> {
    let (fx, text) = read_fixture(path)?;
    fx.instantiate_src(bindings, Some(&text))
}

fn combination(v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            if c.is_one() {
                format!("e{}", k + 1)
            } else {
                format!("({c})*e{}", k + 1)
            }
        })
        .collect();
    terms.join(" + ")
}

fn map_from_table(t: &Table) -> BTreeMap<String, String> {
    let n = t.dim();
    let mut m = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let v = t.basis_product(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                m.insert(format!("e{}e{}", i + 1, j + 1), combination(v));
            }
        }
    }
    m
}

/// Fixture describing an already instantiated structure.
pub fn to_fixture(name: &str, s: &Loaded) -> Fixture {
    let (first, second, role, labels) = match s {
        Loaded::Algebra(a) => (map_from_table(&a.table), None, None, &a.labels),
        Loaded::BiAlgebra(b) => (
            map_from_table(&b.first),
            Some(map_from_table(&b.second)),
            Some(b.role.as_str().to_string()),
            &b.labels,
        ),
    };
    Fixture {
        name: name.to_string(),
        description: String::new(),
        dim: s.dim(),
        params: Vec::new(),
        excluded: Vec::new(),
        role,
        labels: (*labels != default_labels(s.dim())).then(|| labels.clone()),
        first,
        second,
        checks: Vec::new(),
        maps: BTreeMap::new(),
        vectors: BTreeMap::new(),
    }
}

pub fn to_json(name: &str, s: &Loaded) -> String {
    serde_json::to_string_pretty(&to_fixture(name, s)).expect("fixture serializes")
}

pub fn save_algebra(path: &Path, name: &str, s: &Loaded) -> Result<()> {
    std::fs::write(path, to_json(name, s) + "\n")
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bind(p: &str, v: Rational) -> BTreeMap<String, Rational> {
        BTreeMap::from([(p.to_string(), v)])
    }

    const N08: &str = r#"{
  "name": "N08",
  "dim": 2,
  "params": ["delta"],
  "excluded": [{"delta": "0"}],
  "first": {"e1e1": "e1", "e2e1": "e2/delta"},
  "checks": [{"family": "delta-novikov", "delta": "delta"}]
}"#;

    #[test]
    fn parameter_substitution() {
        let fx = parse_fixture(N08).unwrap();
        let a = fx
            .instantiate(&bind("delta", Rational::from_int(3)))
            .unwrap();
        let t = &a.first_algebra().table;
        assert_eq!(t.get(1, 0, 1), &Scalar::from_rational(Rational::new(1, 3)));
        assert!(fx
            .self_check(&bind("delta", Rational::from_int(3)))
            .unwrap()[0]
            .satisfied());
        // formal delta
        assert!(fx.self_check(&BTreeMap::new()).unwrap()[0].satisfied());
        assert!(matches!(
            fx.instantiate(&bind("delta", Rational::zero())),
            Err(Error::ExcludedParameter { .. })
        ));
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse_fixture("{\n  \"name\": \"x\",\n  \"dim\": }").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let bad = N08.replace("e2/delta", "e2/+");
        let dir = std::env::temp_dir().join("deltanov-io-test.json");
        std::fs::write(&dir, &bad).unwrap();
        let e = load_algebra(&dir, &bind("delta", Rational::from_int(2))).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 6, .. }), "{e:?}");
        assert!(parse_combination("e1*e2", 2, &Env::new()).is_err());
        assert!(parse_combination("e1 + 1", 2, &Env::new()).is_err());
    }

    #[test]
    fn round_trip() {
        let fx = parse_fixture(N08).unwrap();
        let a = fx.instantiate(&BTreeMap::new()).unwrap();
        let back = parse_fixture(&to_json("copy", &a)).unwrap();
        assert_eq!(back.instantiate(&BTreeMap::new()).unwrap(), a);
    }
}
