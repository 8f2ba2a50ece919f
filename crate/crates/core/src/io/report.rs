use serde_json::{Map, Value};

/// Identity block that heads every report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraIdentity {
    pub name: String,
    pub dimension: usize,
    pub field: String,
}

/// Report values are exact: integers, truncated dimensions, booleans,
/// integer vectors, labels, or nested records. Never floating point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportValue {
    Int(i64),
    /// A dimension that exceeded the cutoff `C`; serialized as `">C"`.
    Exceeds(usize),
    Bool(bool),
    Vector(Vec<i64>),
    Text(String),
    List(Vec<ReportValue>),
    Record(Vec<(String, ReportValue)>),
}

impl ReportValue {
    pub fn to_json(&self) -> Value {
        match self {
            ReportValue::Int(v) => Value::from(*v),
            ReportValue::Exceeds(c) => Value::from(format!(">{c}")),
            ReportValue::Bool(b) => Value::from(*b),
            ReportValue::Vector(v) => Value::from(v.clone()),
            ReportValue::Text(s) => Value::from(s.clone()),
            ReportValue::List(items) => Value::Array(items.iter().map(|i| i.to_json()).collect()),
            ReportValue::Record(fields) => {
                let mut m = Map::new();
                for (k, v) in fields {
                    m.insert(k.clone(), v.to_json());
                }
                Value::Object(m)
            }
        }
    }

    pub fn record<K: Into<String>>(fields: Vec<(K, ReportValue)>) -> Self {
        ReportValue::Record(fields.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

impl From<i64> for ReportValue {
    fn from(v: i64) -> Self {
        ReportValue::Int(v)
    }
}
impl From<usize> for ReportValue {
    fn from(v: usize) -> Self {
        ReportValue::Int(v as i64)
    }
}
impl From<bool> for ReportValue {
    fn from(v: bool) -> Self {
        ReportValue::Bool(v)
    }
}
impl From<&str> for ReportValue {
    fn from(v: &str) -> Self {
        ReportValue::Text(v.to_string())
    }
}
impl From<String> for ReportValue {
    fn from(v: String) -> Self {
        ReportValue::Text(v)
    }
}

/// Invariants computed for one algebra. Keys keep insertion order, which
/// the producers fix, so serialization is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub algebra: AlgebraIdentity,
    pub invariants: Vec<(String, ReportValue)>,
    /// Wall-clock metadata in milliseconds; omitted from output when `None`.
    pub timing_ms: Option<u64>,
}

impl InvariantReport {
    pub fn new(algebra: AlgebraIdentity) -> Self {
        InvariantReport {
            algebra,
            invariants: Vec::new(),
            timing_ms: None,
        }
    }

    /// Sets `key`, replacing any previous value in place.
    pub fn set(&mut self, key: &str, value: impl Into<ReportValue>) {
        let value = value.into();
        if let Some(slot) = self.invariants.iter_mut().find(|(k, _)| k == key) {
            slot.1 = value;
        } else {
            self.invariants.push((key.to_string(), value));
        }
    }

    pub fn get(&self, key: &str) -> Option<&ReportValue> {
        self.invariants
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        let mut id = Map::new();
        id.insert("name".into(), Value::from(self.algebra.name.clone()));
        id.insert("dimension".into(), Value::from(self.algebra.dimension));
        id.insert("field".into(), Value::from(self.algebra.field.clone()));
        root.insert("algebra".into(), Value::Object(id));
        for (k, v) in &self.invariants {
            root.insert(k.clone(), v.to_json());
        }
        if let Some(t) = self.timing_ms {
            let mut timing = Map::new();
            timing.insert("elapsed_ms".into(), Value::from(t));
            root.insert("timing".into(), Value::Object(timing));
        }
        Value::Object(root)
    }
}

/// Canonical JSON text of a report: pretty-printed with a trailing newline.
pub fn emit_report(report: &InvariantReport) -> String {
    let mut s = serde_json::to_string_pretty(&report.to_json()).expect("report is valid JSON");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity() -> AlgebraIdentity {
        AlgebraIdentity {
            name: "a2".into(),
            dimension: 3,
            field: "F2".into(),
        }
    }

    #[test]
    fn empty_report_has_identity_only() {
        let r = InvariantReport::new(identity());
        let v: Value = serde_json::from_str(&emit_report(&r)).unwrap();
        assert_eq!(v.as_object().unwrap().len(), 1);
        assert_eq!(v["algebra"]["dimension"], 3);
    }

    #[test]
    fn emission_is_deterministic() {
        let mut r = InvariantReport::new(identity());
        r.set("loewy_length", 2usize);
        r.set("gldim", ReportValue::Exceeds(32));
        r.set("dimension", 3usize);
        let a = emit_report(&r);
        let b = emit_report(&r.clone());
        assert_eq!(a, b);
        assert!(a.contains("\"gldim\": \">32\""));
        let keys: Vec<_> = serde_json::from_str::<Value>(&a)
            .unwrap()
            .as_object()
            .unwrap()
            .keys()
            .cloned()
            .collect();
        assert_eq!(keys, ["algebra", "loewy_length", "gldim", "dimension"]);
    }
}
