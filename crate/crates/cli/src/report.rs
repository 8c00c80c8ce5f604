//! Output tree shared by the text and JSON renderers.
//!
//! Every number is exact: integers stay integers, rationals are `"p/q"`
//! strings and square roots are `"sqrt(p/q)"` strings. Decimal
//! approximations are kept apart and only rendered on request.

use serde_json::{Map, Value};
use seshadri_core::{DivClass, MultVector, Rat, RootVal};

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    command: String,
    inputs: Map<String, Value>,
    result: Map<String, Value>,
    lines: Vec<String>,
    approx: Vec<(String, f64)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            inputs: Map::new(),
            result: Map::new(),
            lines: Vec::new(),
            approx: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.result.insert(key.to_owned(), value.into());
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn approx(&mut self, label: &str, x: f64) -> &mut Self {
        self.approx.push((label.to_owned(), x));
        self
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    pub fn result(&self) -> &Map<String, Value> {
        &self.result
    }

    pub fn to_json(&self, with_approx: bool) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        root.insert("inputs".into(), Value::Object(self.inputs.clone()));
        root.insert("result".into(), Value::Object(self.result.clone()));
        if with_approx && !self.approx.is_empty() {
            let approx = self
                .approx
                .iter()
                .map(|(k, x)| (k.clone(), Value::String(sig12(*x))))
                .collect();
            root.insert("approximations".into(), Value::Object(approx));
        }
        Value::Object(root)
    }

    pub fn render_json(&self, with_approx: bool) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_json(with_approx))
            .expect("Value always serializes");
        out.push('\n');
        out
    }

    pub fn render_text(&self, with_approx: bool) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        if with_approx {
            for (label, x) in &self.approx {
                out.push_str(&format!("{label} ~ {} (approximation)\n", sig12(*x)));
            }
        }
        out
    }
}

/// Decimal with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-5..12).contains(&magnitude) {
        let decimals = (11 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

pub fn rat(q: &Rat) -> Value {
    Value::String(q.to_string())
}

pub fn root(s: &RootVal) -> Value {
    Value::String(s.to_string())
}

/// Integers outside the `i64` range fall back to strings.
pub fn int(n: i128) -> Value {
    match i64::try_from(n) {
        Ok(n) => Value::from(n),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn class(d: DivClass) -> Value {
    let mut m = Map::new();
    m.insert("a".into(), Value::from(d.a));
    m.insert("b".into(), Value::from(d.b));
    m.insert("text".into(), Value::String(d.to_string()));
    Value::Object(m)
}

pub fn mults(m: &MultVector) -> Value {
    Value::Array(m.as_slice().iter().map(|&x| Value::from(x)).collect())
}

pub fn ordering_symbol(o: core::cmp::Ordering) -> &'static str {
    match o {
        core::cmp::Ordering::Less => "<",
        core::cmp::Ordering::Equal => "=",
        core::cmp::Ordering::Greater => ">",
    }
}
