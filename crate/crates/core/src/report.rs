//! JSON report envelope and serialization helpers shared by the CLI.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::dsl::Provenance;

pub const SCHEMA_VERSION: u32 = 1;

pub fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

pub fn json_to_big(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| format!("not an integer: {n}")),
        Value::String(s) => s.parse().map_err(|_| format!("not an integer: {s}")),
        other => Err(format!("expected integer, got {other}")),
    }
}

/// serde adapter for `Vec<BigInt>` as a JSON array of integers.
pub mod big_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let vals: Vec<Value> = v.iter().map(big_to_json).collect();
        vals.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let vals: Vec<Value> = Vec::deserialize(d)?;
        vals.iter().map(|v| json_to_big(v).map_err(serde::de::Error::custom)).collect()
    }
}

/// Outcome recorded in a report; `exit_code` mirrors the process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    VerificationFailed,
    UsageError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::UsageError => 2,
        }
    }
}

/// Top-level report printed by every CLI command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub command: Vec<String>,
    pub status: Status,
    pub exit_code: i32,
    pub provenance: Vec<Provenance>,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: Vec<String>, status: Status, provenance: Vec<Provenance>, payload: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            status,
            exit_code: status.exit_code(),
            provenance,
            payload,
            error: None,
        }
    }

    pub fn failure(command: Vec<String>, status: Status, message: String) -> Self {
        Report { error: Some(message), ..Self::new(command, status, Vec::new(), Value::Null) }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
