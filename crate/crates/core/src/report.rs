//! JSON metric reports: exact rational rendering next to a deterministic
//! 12-significant-digit float, with an explicit marker for undefined values.

use crate::error::{Error, Result};
use crate::rational::{format_rational, to_f64_12};
use crate::value::MetricValue;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct MetricReport {
    pub metric: String,
    /// Node, pair, or side the value refers to; omitted for global metrics.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scope: Option<String>,
    /// Exact value as `p/q`; absent when the value is irrational or undefined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float: Option<f64>,
    /// Reason the metric is undefined, when it is.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub undefined: Option<String>,
}

impl MetricReport {
    pub fn value(metric: &str, scope: Option<&str>, v: &MetricValue) -> Self {
        let (exact, float) = match v {
            MetricValue::Rational(r) => (Some(format_rational(r)), to_f64_12(r)),
            irrational => (None, irrational.to_f64()),
        };
        MetricReport {
            metric: metric.to_string(),
            scope: scope.map(str::to_string),
            exact,
            float: Some(float),
            undefined: None,
        }
    }

    pub fn undefined(metric: &str, scope: Option<&str>, reason: &str) -> Self {
        MetricReport {
            metric: metric.to_string(),
            scope: scope.map(str::to_string),
            exact: None,
            float: None,
            undefined: Some(reason.to_string()),
        }
    }

    /// Turns a metric result into a report, keeping undefined outcomes as
    /// reports and passing every other error through.
    pub fn from_result(metric: &str, scope: Option<&str>, res: Result<MetricValue>) -> Result<Self> {
        match res {
            Ok(v) => Ok(MetricReport::value(metric, scope, &v)),
            Err(Error::Undefined(reason)) => Ok(MetricReport::undefined(metric, scope, &reason)),
            Err(other) => Err(other),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
