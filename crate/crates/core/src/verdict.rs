//! The structured verdict record shared by `decide`, `construct` and
//! `verify`.
//!
//! ```json
//! {"schema":1,"result":"yes","u":0,"v":3,"out":[[0,1],...],"in":[[1,3],...]}
//! {"schema":1,"result":"no","u":0,"v":1,"certificate":{"kind":"small_exception",...}}
//! ```
//!
//! A `yes` record without `out`/`in` is a bare decision; it can be parsed
//! but not verified.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::branchings::{Tree, TreeKind};
use crate::digraph::Digraph;
use crate::goodpair::{verify_good_pair, verify_no_pair_certificate, GoodPair, NoPairCertificate};

pub const SCHEMA: u32 = 1;

/// Longest verdict text accepted by [`parse_verdict`].
pub const MAX_VERDICT_BYTES: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verdict {
    pub schema: u32,
    pub result: Answer,
    pub u: usize,
    pub v: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<Vec<(usize, usize)>>,
    #[serde(default, rename = "in", skip_serializing_if = "Option::is_none")]
    pub in_arcs: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<NoPairCertificate>,
}

#[derive(Debug, Error)]
pub enum VerdictError {
    #[error("verdict is {0} bytes, limit is {MAX_VERDICT_BYTES}")]
    TooLong(usize),
    #[error("malformed verdict: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {0}")]
    Schema(u32),
    #[error("{0}")]
    Shape(&'static str),
}

impl Verdict {
    pub fn decision(u: usize, v: usize) -> Self {
        Verdict {
            schema: SCHEMA,
            result: Answer::Yes,
            u,
            v,
            out: None,
            in_arcs: None,
            certificate: None,
        }
    }

    pub fn pair(u: usize, v: usize, pair: &GoodPair) -> Self {
        Verdict {
            out: Some(pair.out_branching.arcs()),
            in_arcs: Some(pair.in_branching.arcs()),
            ..Verdict::decision(u, v)
        }
    }

    pub fn no(u: usize, v: usize, certificate: NoPairCertificate) -> Self {
        Verdict {
            result: Answer::No,
            certificate: Some(certificate),
            ..Verdict::decision(u, v)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts always serialize")
    }

    /// Rebuilds the pair on `n` vertices.
    pub fn good_pair(&self, n: usize) -> Result<Option<GoodPair>, String> {
        let (Some(o), Some(i)) = (&self.out, &self.in_arcs) else {
            return Ok(None);
        };
        let out_branching =
            Tree::from_arcs(n, TreeKind::Out, self.u, o).map_err(|m| format!("out: {m}"))?;
        let in_branching =
            Tree::from_arcs(n, TreeKind::In, self.v, i).map_err(|m| format!("in: {m}"))?;
        Ok(Some(GoodPair {
            out_branching,
            in_branching,
        }))
    }
}

pub fn parse_verdict(text: &str) -> Result<Verdict, VerdictError> {
    if text.len() > MAX_VERDICT_BYTES {
        return Err(VerdictError::TooLong(text.len()));
    }
    let v: Verdict = serde_json::from_str(text)?;
    if v.schema != SCHEMA {
        return Err(VerdictError::Schema(v.schema));
    }
    match v.result {
        Answer::Yes if v.certificate.is_some() => {
            Err(VerdictError::Shape("a yes verdict carries no certificate"))
        }
        Answer::Yes if v.out.is_some() != v.in_arcs.is_some() => {
            Err(VerdictError::Shape("`out` and `in` come together"))
        }
        Answer::No if v.out.is_some() || v.in_arcs.is_some() => {
            Err(VerdictError::Shape("a no verdict carries no branchings"))
        }
        Answer::No if v.certificate.is_none() => {
            Err(VerdictError::Shape("a no verdict needs a certificate"))
        }
        _ => Ok(v),
    }
}

/// Re-checks a verdict against its instance. A bare `yes` cannot be checked
/// and is rejected.
pub fn verify_verdict(d: &Digraph, verdict: &Verdict) -> Result<(), String> {
    let n = d.n();
    if verdict.u >= n || verdict.v >= n {
        return Err("root out of range".into());
    }
    match (&verdict.result, &verdict.certificate) {
        (Answer::No, Some(c)) => verify_no_pair_certificate(d, verdict.u, verdict.v, c),
        (Answer::Yes, None) => match verdict.good_pair(n)? {
            Some(p) => verify_good_pair(d, verdict.u, verdict.v, &p),
            None => Err("a bare yes carries nothing to verify".into()),
        },
        _ => Err("result and payload disagree".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::goodpair::{construct_good_pair, Construction};

    fn verdict_for(d: &Digraph, u: usize, v: usize) -> Verdict {
        match construct_good_pair(d, u, v).unwrap() {
            Construction::Pair(p) => Verdict::pair(u, v, &p),
            Construction::NoPair(c) => Verdict::no(u, v, c),
        }
    }

    #[test]
    fn round_trip() {
        for (f, u, v) in [
            (fixtures::s4(), 0, 3),
            (fixtures::fig_a(), 0, 1),
            (fixtures::chain4(), 3, 1),
        ] {
            let d = &f.digraph;
            let verdict = verdict_for(d, u, v);
            let text = verdict.to_json();
            assert!(text.starts_with("{\"schema\":1,\"result\":"), "{text}");
            let back = parse_verdict(&text).unwrap();
            assert_eq!(back, verdict);
            verify_verdict(d, &back).unwrap();
        }
    }

    #[test]
    fn wrong_instance_fails() {
        let s4 = fixtures::s4().digraph;
        let verdict = verdict_for(&s4, 0, 3);
        let mut other = s4.clone();
        let (a, b) = verdict.out.as_ref().unwrap()[0];
        other.remove_arc(a, b);
        if !other.has_arc(b, a) {
            other.add_arc(b, a).unwrap();
        }
        assert!(verify_verdict(&other, &verdict).is_err());
    }

    #[test]
    fn malformed() {
        for text in [
            "",
            "{}",
            r#"{"schema":2,"result":"yes","u":0,"v":0}"#,
            r#"{"schema":1,"result":"no","u":0,"v":0}"#,
            r#"{"schema":1,"result":"yes","u":0,"v":0,"out":[]}"#,
            r#"{"schema":1,"result":"yes","u":0,"v":0,"extra":1}"#,
            r#"{"schema":1,"result":"maybe","u":0,"v":0}"#,
        ] {
            assert!(parse_verdict(text).is_err(), "{text}");
        }
        let bare = parse_verdict(r#"{"schema":1,"result":"yes","u":0,"v":1}"#).unwrap();
        assert!(verify_verdict(&fixtures::k3().digraph, &bare).is_err());
    }
}
