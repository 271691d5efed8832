//! Registry of q-series identities, each an order-parameterised pair of
//! builders compared by exact coefficient equality.

mod congruence;
mod lemma2;
mod section3;
mod section4;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, SeriesError, VerifyError};
use crate::series::{rational_to_string, LaurentSeries};

pub use lemma2::{build_lemma21_sides, Lemma21Variant};
pub use section4::{build_rf11, build_section4_sides, Section4Side, RF11_SIGNS};

/// Order-parameterised series builder. The result must be exact below the requested order.
pub type Builder = Arc<dyn Fn(i64) -> Result<LaurentSeries> + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Lemma2,
    Section3,
    Section4,
    Congruence,
}

impl Tag {
    pub const ALL: [Tag; 4] = [Tag::Lemma2, Tag::Section3, Tag::Section4, Tag::Congruence];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Lemma2 => "lemma2",
            Tag::Section3 => "section3",
            Tag::Section4 => "section4",
            Tag::Congruence => "congruence",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self> {
        Tag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| SeriesError::InvalidArgument(format!("unknown tag `{s}`")))
    }
}

#[derive(Clone)]
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity as a formula, `lhs = rhs`.
    pub formula: &'static str,
    pub tags: Vec<Tag>,
    pub default_order: i64,
    /// Combinatorial entries can only be checked up to an enumeration bound;
    /// requested orders above it are clamped.
    pub max_order: Option<i64>,
    pub lhs: Builder,
    pub rhs: Builder,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("tags", &self.tags)
            .field("default_order", &self.default_order)
            .field("max_order", &self.max_order)
            .finish_non_exhaustive()
    }
}

impl Identity {
    pub fn new<L, R>(
        id: &'static str,
        description: &'static str,
        formula: &'static str,
        lhs: L,
        rhs: R,
    ) -> Self
    where
        L: Fn(i64) -> Result<LaurentSeries> + Send + Sync + 'static,
        R: Fn(i64) -> Result<LaurentSeries> + Send + Sync + 'static,
    {
        Self {
            id,
            description,
            formula,
            tags: Vec::new(),
            default_order: 200,
            max_order: None,
            lhs: Arc::new(lhs),
            rhs: Arc::new(rhs),
        }
    }

    pub fn tag(mut self, tag: Tag) -> Self {
        if !self.tags.contains(&tag) {
            self.tags.push(tag);
        }
        self
    }

    pub fn order(mut self, order: i64) -> Self {
        self.default_order = order;
        self
    }

    pub fn capped(mut self, max_order: i64) -> Self {
        self.max_order = Some(max_order);
        self.default_order = self.default_order.min(max_order);
        self
    }

    pub fn has_any_tag(&self, tags: &[Tag]) -> bool {
        tags.is_empty() || self.tags.iter().any(|t| tags.contains(t))
    }

    /// The order actually checked for a request.
    pub fn effective_order(&self, requested: Option<i64>) -> i64 {
        let order = requested.unwrap_or(self.default_order);
        match self.max_order {
            Some(cap) => order.min(cap),
            None => order,
        }
    }

    pub fn meta(&self) -> IdentityMeta {
        IdentityMeta {
            id: self.id,
            description: self.description,
            formula: self.formula,
            tags: self.tags.clone(),
            default_order: self.default_order,
            max_order: self.max_order,
        }
    }

    /// Builds both sides to `order` and compares them.
    pub fn verify(&self, order: i64) -> std::result::Result<VerificationReport, VerifyError> {
        if order < 1 {
            return Err(VerifyError::BadOrder(order));
        }
        let order = self.effective_order(Some(order));
        let start = Instant::now();
        let side = |name: &'static str, b: &Builder| {
            b(order).map_err(|source| VerifyError::Builder {
                id: self.id.to_string(),
                side: name,
                source,
            })
        };
        let (lhs, rhs) = rayon::join(|| side("lhs", &self.lhs), || side("rhs", &self.rhs));
        let (lhs, rhs) = (lhs?, rhs?);
        let reached = lhs.order().min(rhs.order());
        if reached < order {
            return Err(VerifyError::InsufficientOrder {
                id: self.id.to_string(),
                requested: order,
                reached,
            });
        }
        let mismatch = lhs
            .truncate(order)
            .first_mismatch(&rhs.truncate(order))
            .map(|(exponent, l, r)| Mismatch {
                exponent,
                lhs: rational_to_string(&l),
                rhs: rational_to_string(&r),
            });
        Ok(VerificationReport {
            id: self.id.to_string(),
            order,
            status: if mismatch.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            first_mismatch: mismatch,
            ms: start.elapsed().as_secs_f64() * 1e3,
            error: None,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityMeta {
    pub id: &'static str,
    pub description: &'static str,
    pub formula: &'static str,
    pub tags: Vec<Tag>,
    pub default_order: i64,
    pub max_order: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub order: i64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    pub ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn from_error(id: &str, order: i64, err: &VerifyError) -> Self {
        Self {
            id: id.to_string(),
            order,
            status: Status::Error,
            first_mismatch: None,
            ms: 0.0,
            error: Some(err.to_string()),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        write!(
            f,
            "{status:5} {:<16} order {:>4}  {:>9.1} ms",
            self.id, self.order, self.ms
        )?;
        if let Some(m) = &self.first_mismatch {
            write!(
                f,
                "  first mismatch at q^{}: {} vs {}",
                m.exponent, m.lhs, m.rhs
            )?;
        }
        if let Some(e) = &self.error {
            write!(f, "  {e}")?;
        }
        Ok(())
    }
}

pub struct Registry {
    entries: Vec<Identity>,
}

impl Registry {
    fn build() -> Self {
        let mut entries = Vec::new();
        entries.extend(lemma2::identities());
        entries.extend(section3::identities());
        entries.extend(section4::identities());
        entries.extend(congruence::identities());
        let mut seen = BTreeSet::new();
        for e in &entries {
            assert!(seen.insert(e.id), "duplicate identity id {}", e.id);
        }
        Self { entries }
    }

    pub fn entries(&self) -> &[Identity] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&Identity> {
        self.entries.iter().find(|e| e.id.eq_ignore_ascii_case(id))
    }
}

/// The process-wide registry.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::build)
}

pub fn list_identities() -> Vec<IdentityMeta> {
    registry().entries().iter().map(Identity::meta).collect()
}

pub fn get(id: &str) -> std::result::Result<&'static Identity, VerifyError> {
    registry()
        .get(id)
        .ok_or_else(|| VerifyError::UnknownId(id.to_string()))
}

pub fn verify(id: &str, order: i64) -> std::result::Result<VerificationReport, VerifyError> {
    get(id)?.verify(order)
}

/// Runs every identity carrying one of `tags` (all of them when `tags` is
/// empty), at `order` or each entry's default. Builder failures become
/// `Status::Error` reports. Reports come back in registry order.
pub fn verify_all(order: Option<i64>, tags: &[Tag]) -> Vec<VerificationReport> {
    registry()
        .entries()
        .par_iter()
        .filter(|e| e.has_any_tag(tags))
        .map(|e| {
            let o = e.effective_order(order);
            e.verify(o)
                .unwrap_or_else(|err| VerificationReport::from_error(e.id, o, &err))
        })
        .collect()
}

/// Evaluates a product in the text notation of [`crate::products::ProductSpec`].
pub(crate) fn prod(text: &str, order: i64) -> Result<LaurentSeries> {
    text.parse::<crate::products::ProductSpec>()?.eval(order)
}

/// Σ_k value(k) q^k for k < order, as an exact truncated series.
pub(crate) fn sequence_series(order: i64, value: impl Fn(i64) -> i64) -> LaurentSeries {
    LaurentSeries::from_ints((0..order).map(|k| (k, value(k))), order)
}
