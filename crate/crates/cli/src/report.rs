//! Group and graph reports. Each report is one serializable struct; the text
//! form is rendered from the same JSON value, so both modes always agree.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use dst_core::distinguish::{distinguishing_number, find_distinguishing_subset, order_bound_holds};
use dst_core::graph::{automorphism_group, Graph};
use dst_core::{Error, PermGroup};

use crate::config::RunConfig;

/// Fields that could not be computed, with the reason.
pub type Skipped = BTreeMap<String, String>;

fn skip_reason(e: &Error) -> String {
    match e {
        Error::OrderExceedsCap { .. } => format!("SKIPPED(cap): {e}"),
        Error::SearchBudgetExceeded { .. } => format!("SKIPPED(budget): {e}"),
        _ => format!("SKIPPED: {e}"),
    }
}

fn record<T>(skipped: &mut Skipped, field: &str, result: Result<T, Error>) -> Option<T> {
    match result {
        Ok(v) => Some(v),
        Err(e) => {
            skipped.insert(field.to_string(), skip_reason(&e));
            None
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct GroupReport {
    pub source: String,
    pub degree: usize,
    pub order: String,
    pub transitive: bool,
    pub primitive: bool,
    /// A nontrivial block when the group is transitive but imprimitive.
    pub block: Option<Vec<usize>>,
    pub contains_alternating: bool,
    pub minimum_degree: Option<usize>,
    pub distinguishing_number: Option<usize>,
    pub distinguishing_partition: Option<String>,
    /// Least subset with trivial setwise stabilizer, or "none".
    pub distinguishing_subset: Option<String>,
    /// `(|G| - 1)^2 >= 2^δ` when the distinguishing number is at least 3.
    pub order_bound: Option<String>,
    pub skipped: Skipped,
}

pub fn group_report(source: &str, group: &PermGroup, config: &RunConfig) -> GroupReport {
    let limits = &config.limits;
    let mut skipped = Skipped::new();
    let order = group.order();
    let minimum_degree = if group.is_trivial() {
        skipped.insert(
            "minimum_degree".into(),
            "SKIPPED: the group is trivial".into(),
        );
        None
    } else {
        record(
            &mut skipped,
            "minimum_degree",
            group.minimum_degree(limits.element_cap),
        )
    };
    let distinguishing = record(
        &mut skipped,
        "distinguishing_number",
        distinguishing_number(group, limits),
    );
    if distinguishing.is_none() {
        let reason = skipped["distinguishing_number"].clone();
        skipped.insert("distinguishing_partition".into(), reason);
    }
    let subset = record(
        &mut skipped,
        "distinguishing_subset",
        find_distinguishing_subset(group, limits),
    )
    .map(|s| match s {
        Some(points) => format!(
            "{{{}}}",
            points
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        None => "none".into(),
    });
    let order_bound = match (&distinguishing, minimum_degree) {
        (Some(d), Some(delta)) if d.number >= 3 => Some(
            if order_bound_holds(&order, delta) {
                "holds"
            } else {
                "FAILS"
            }
            .to_string(),
        ),
        (Some(_), _) => Some("vacuous".to_string()),
        _ => {
            skipped.insert(
                "order_bound".into(),
                "SKIPPED: needs the distinguishing number".into(),
            );
            None
        }
    };
    GroupReport {
        source: source.to_string(),
        degree: group.degree(),
        order: order.to_string(),
        transitive: group.is_transitive(),
        primitive: group.is_primitive(),
        block: group.nontrivial_block().map(|b| b.points().to_vec()),
        contains_alternating: group.contains_alternating(),
        minimum_degree,
        distinguishing_number: distinguishing.as_ref().map(|d| d.number),
        distinguishing_partition: distinguishing.map(|d| d.witness.to_string()),
        distinguishing_subset: subset,
        order_bound,
        skipped,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct GraphReport {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub automorphism_group_order: Option<String>,
    pub asymmetric: Option<bool>,
    pub distinguishing_number: Option<usize>,
    pub distinguishing_partition: Option<String>,
    pub skipped: Skipped,
}

pub fn graph_report(name: &str, graph: &Graph, config: &RunConfig) -> GraphReport {
    let mut skipped = Skipped::new();
    let aut = record(
        &mut skipped,
        "automorphism_group_order",
        automorphism_group(graph, &config.aut_limits),
    );
    let distinguishing = match &aut {
        Some(group) => record(
            &mut skipped,
            "distinguishing_number",
            distinguishing_number(group, &config.limits),
        ),
        None => None,
    };
    for field in [
        "asymmetric",
        "distinguishing_number",
        "distinguishing_partition",
    ] {
        if aut.is_none() || (field != "asymmetric" && distinguishing.is_none()) {
            let reason = skipped
                .get("distinguishing_number")
                .or_else(|| skipped.get("automorphism_group_order"))
                .cloned()
                .unwrap_or_default();
            skipped.entry(field.to_string()).or_insert(reason);
        }
    }
    GraphReport {
        graph: name.to_string(),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        automorphism_group_order: aut.as_ref().map(|a| a.order().to_string()),
        asymmetric: aut.as_ref().map(PermGroup::is_trivial),
        distinguishing_number: distinguishing.as_ref().map(|d| d.number),
        distinguishing_partition: distinguishing.map(|d| d.witness.to_string()),
        skipped,
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(render_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// `key: value` lines from a serialized report; null fields show the reason
/// recorded under `skipped`.
pub fn render_text<T: Serialize>(report: &T) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let Value::Object(map) = value else {
        return render_value(&value);
    };
    let skipped = map.get("skipped").and_then(Value::as_object);
    let mut out = String::new();
    for (key, v) in &map {
        if key == "skipped" {
            continue;
        }
        let shown = match v {
            Value::Null => skipped
                .and_then(|s| s.get(key))
                .map(render_value)
                .unwrap_or_else(|| "-".into()),
            other => render_value(other),
        };
        out.push_str(&format!("{}: {shown}\n", key.replace('_', " ")));
    }
    out
}

pub fn render_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use dst_core::corpus;
    use dst_core::distinguish::Limits;

    use super::*;

    #[test]
    fn cyclic_five() {
        let r = group_report("C5", &corpus::cyclic(5), &RunConfig::default());
        assert!(r.primitive);
        assert_eq!(r.minimum_degree, Some(5));
        assert_eq!(r.distinguishing_number, Some(2));
        assert_eq!(r.order_bound.as_deref(), Some("vacuous"));
        assert!(r.skipped.is_empty());
    }

    #[test]
    fn imprimitive_block() {
        let r = group_report("C6", &corpus::cyclic(6), &RunConfig::default());
        assert!(r.transitive && !r.primitive);
        let block = r.block.unwrap();
        assert_eq!(6 % block.len(), 0);
    }

    #[test]
    fn caps_skip_fields() {
        let config = RunConfig {
            limits: Limits {
                element_cap: 10,
                ..Limits::default()
            },
            ..RunConfig::default()
        };
        let r = group_report("M11", &corpus::get("M11").unwrap().group(), &config);
        assert_eq!(r.order, "7920");
        assert!(r.primitive);
        assert_eq!(r.minimum_degree, None);
        assert!(r.skipped["minimum_degree"].starts_with("SKIPPED(cap)"));
        let text = render_text(&r);
        assert!(text.contains("minimum degree: SKIPPED(cap)"), "{text}");
        assert!(text.contains("order: 7920"));
    }

    #[test]
    fn text_and_json_agree() {
        let r = group_report("S3", &corpus::symmetric(3), &RunConfig::default());
        let json: Value = serde_json::from_str(&render_json(&r)).unwrap();
        let text = render_text(&r);
        for (key, v) in json.as_object().unwrap() {
            if key == "skipped" || v.is_null() {
                continue;
            }
            let line = format!("{}: {}", key.replace('_', " "), render_value(v));
            assert!(text.lines().any(|l| l == line), "missing {line}");
        }
        assert_eq!(r.distinguishing_number, Some(3));
    }

    #[test]
    fn graph_reports() {
        let config = RunConfig::default();
        let r = graph_report("tgraph 6", &dst_core::graph::t_graph(6).unwrap(), &config);
        assert_eq!(r.asymmetric, Some(true));
        assert_eq!(r.distinguishing_number, Some(1));
        let tiny = RunConfig {
            aut_limits: dst_core::graph::AutLimits {
                max_vertices: 3,
                ..Default::default()
            },
            ..RunConfig::default()
        };
        let r = graph_report("tgraph 6", &dst_core::graph::t_graph(6).unwrap(), &tiny);
        assert_eq!(r.asymmetric, None);
        assert!(r.skipped.contains_key("asymmetric"));
        assert!(r.skipped.contains_key("distinguishing_partition"));
    }
}
