use serde::Serialize;
use serde_json::{json, Map};

use quotchi::identities::CheckReport;
use quotchi::Error;

use crate::{Command, Format, Outcome, Value};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    params: Map<String, serde_json::Value>,
    pass: bool,
    lhs: &'a str,
    rhs: &'a str,
}

impl<'a> From<&'a CheckReport> for CheckJson<'a> {
    fn from(c: &'a CheckReport) -> Self {
        CheckJson {
            name: &c.name,
            params: c
                .params
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
                .collect(),
            pass: c.pass,
            lhs: &c.lhs,
            rhs: &c.rhs,
        }
    }
}

fn result_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Text(s) => json!(s),
        Value::Series(terms) => json!({
            "series": terms.iter().map(|(d, c)| json!({"d": d, "coeff": c})).collect::<Vec<_>>()
        }),
    }
}

fn render_json(o: &Outcome) -> String {
    let checks: Vec<CheckJson> = o.checks.iter().map(CheckJson::from).collect();
    let doc = json!({
        "command": o.command,
        "params": o.params,
        "result": result_json(&o.result),
        "route": o.route,
        "checks": checks,
        "version": VERSION,
    });
    serde_json::to_string_pretty(&doc).expect("JSON values always serialize") + "\n"
}

fn render_csv(o: &Outcome) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let rows: Vec<Vec<String>> = if !o.checks.is_empty() {
        let mut rows = vec![vec!["name", "params", "pass", "lhs", "rhs"]
            .into_iter()
            .map(String::from)
            .collect()];
        rows.extend(o.checks.iter().map(|c| {
            vec![
                c.name.clone(),
                c.param_text(),
                c.pass.to_string(),
                c.lhs.clone(),
                c.rhs.clone(),
            ]
        }));
        rows
    } else {
        match &o.result {
            Value::Series(terms) => std::iter::once(vec!["d".to_string(), "coeff".to_string()])
                .chain(terms.iter().map(|(d, c)| vec![d.to_string(), c.clone()]))
                .collect(),
            Value::Text(s) => vec![vec!["result".to_string()], vec![s.clone()]],
        }
    };
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("UTF-8 input")
}

fn render_text(o: &Outcome) -> String {
    let mut out = String::new();
    for c in &o.checks {
        out.push_str(&format!("{c}\n"));
    }
    match &o.result {
        Value::Text(s) => out.push_str(&format!("{s}\n")),
        Value::Series(terms) => {
            for (d, c) in terms {
                out.push_str(&format!("[{d}] {c}\n"));
            }
        }
    }
    out
}

pub fn render(o: &Outcome, format: Format) -> String {
    match format {
        Format::Json => render_json(o),
        Format::Csv => render_csv(o),
        Format::Text => render_text(o),
    }
}

pub(crate) fn render_error_json(name: &str, command: &Command, e: &Error) -> String {
    let doc = json!({
        "command": name,
        "params": serde_json::to_value(command).unwrap_or_default(),
        "error": {"name": e.name(), "message": e.to_string()},
        "version": VERSION,
    });
    serde_json::to_string_pretty(&doc).expect("JSON values always serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(result: Value, checks: Vec<CheckReport>) -> Outcome {
        Outcome {
            command: "t".into(),
            params: json!({}),
            result,
            route: "closedform",
            checks,
        }
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let c = CheckReport {
            name: "x".into(),
            params: vec![("a".into(), "1,2".into())],
            lhs: "0,0".into(),
            rhs: "0,0".into(),
            pass: true,
            elapsed: Default::default(),
        };
        let text = render(&outcome(Value::Text("ok".into()), vec![c]), Format::Csv);
        assert_eq!(text, "name,params,pass,lhs,rhs\nx,\"a=1,2\",true,\"0,0\",\"0,0\"\n");
    }

    #[test]
    fn json_field_order_follows_schema() {
        let text = render(&outcome(Value::Series(vec![(0, "1".into())]), vec![]), Format::Json);
        let keys: Vec<usize> = ["\"command\"", "\"params\"", "\"result\"", "\"route\"", "\"checks\"", "\"version\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{text}");
    }
}
