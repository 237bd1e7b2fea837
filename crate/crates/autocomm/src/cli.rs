//! Command-line front end: spec parsing and command execution.
//!
//! The binary in `main.rs` is a thin argument-parsing shell over this
//! module, so every behavior here is testable as a library call. Exit
//! codes: 0 success, 1 a counterexample was found or a demanded witness is
//! absent, 2 usage or configuration errors.

use std::path::{Path, PathBuf};

use serde_json::json;

use crate::aut::automorphism_group;
use crate::autoiso::{find_autoisoclinism, witness_to_json, PairData, SearchOutcome};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::named::parse_group_spec;
use crate::prob::distribution;
use crate::subgroup::{subgroup_generated, Subgroup};
use crate::verifier::{default_catalog, run_catalog, CatalogSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Compute,
    Distribution,
    Verify,
    Autoiso,
    Catalog,
    Aut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// A fully parsed invocation.
#[derive(Clone, Debug)]
pub struct CommandRequest {
    pub command: Command,
    pub group: Option<String>,
    /// Whitespace-separated generator labels; absent means `H = K`.
    pub subgroup: Option<String>,
    pub g: Option<String>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub max_order: Option<usize>,
    pub pair2_group: Option<String>,
    pub pair2_subgroup: Option<String>,
    /// For `aut`: also list a generating set of automorphisms.
    pub generators: bool,
}

impl CommandRequest {
    pub fn new(command: Command) -> CommandRequest {
        CommandRequest {
            command,
            group: None,
            subgroup: None,
            g: None,
            format: OutputFormat::Text,
            out: None,
            max_order: None,
            pair2_group: None,
            pair2_subgroup: None,
            generators: false,
        }
    }
}

/// Builds `K` from a group spec (grammar or Cayley-table file path), `H`
/// from generator labels (defaulting to `K` itself), and resolves `g` by
/// label (defaulting to the identity).
pub fn parse_specs(
    group_spec: &str,
    subgroup_spec: Option<&str>,
    g_label: Option<&str>,
) -> Result<(Group, Subgroup, usize)> {
    let k = if Path::new(group_spec).is_file() {
        Group::from_cayley_file(Path::new(group_spec))?
    } else {
        parse_group_spec(group_spec)?
    };
    let h = match subgroup_spec {
        None => Subgroup::whole(&k),
        Some(spec) => {
            let labels: Vec<&str> = spec.split_whitespace().collect();
            if labels.is_empty() {
                return Err(Error::NotASubgroupSpec {
                    reason: "no generator labels given".into(),
                });
            }
            let gens = labels
                .iter()
                .map(|l| {
                    k.element_by_label(l).ok_or_else(|| Error::UnknownLabel {
                        label: l.to_string(),
                        group: k.display_name(),
                    })
                })
                .collect::<Result<Vec<usize>>>()?;
            subgroup_generated(&k, &gens)
        }
    };
    let g = match g_label {
        None => k.identity(),
        Some(l) => k.element_by_label(l).ok_or_else(|| Error::UnknownLabel {
            label: l.to_string(),
            group: k.display_name(),
        })?,
    };
    Ok((k, h, g))
}

/// What a command produced: the artifact text and the exit code.
#[derive(Debug)]
pub struct RunOutput {
    pub exit_code: i32,
    pub text: String,
}

/// Executes a request. Errors become exit code 2 with the message as
/// output; the artifact is also written to `request.out` when set.
pub fn run(request: &CommandRequest) -> RunOutput {
    match run_inner(request) {
        Ok((exit_code, text)) => {
            if let Some(path) = &request.out {
                if let Err(e) = std::fs::write(path, &text) {
                    return RunOutput {
                        exit_code: EXIT_USAGE,
                        text: format!("error: cannot write {}: {}", path.display(), e),
                    };
                }
                return RunOutput {
                    exit_code,
                    text: format!("written to {}", path.display()),
                };
            }
            RunOutput { exit_code, text }
        }
        Err(e) => RunOutput {
            exit_code: EXIT_USAGE,
            text: format!("error: {}", e),
        },
    }
}

fn require_group(request: &CommandRequest) -> Result<&str> {
    request.group.as_deref().ok_or(Error::ParseError {
        position: 0,
        message: "--group is required for this command".into(),
    })
}

fn run_inner(request: &CommandRequest) -> Result<(i32, String)> {
    match request.command {
        Command::Compute => run_compute(request),
        Command::Distribution => run_distribution(request),
        Command::Verify => run_verify(request),
        Command::Aut => run_aut(request),
        Command::Autoiso => run_autoiso(request),
        Command::Catalog => run_catalog_listing(request),
    }
}

fn run_compute(request: &CommandRequest) -> Result<(i32, String)> {
    let (k, h, g) = parse_specs(
        require_group(request)?,
        request.subgroup.as_deref(),
        request.g.as_deref(),
    )?;
    let aut = automorphism_group(&k)?;
    let profile = distribution(&h, &aut);
    let value = profile.value(g);
    let text = match request.format {
        OutputFormat::Text => format!(
            "Pr_g(H, Aut(K))  K = {}, H = {}, g = {}\n{} (approx {:.6})\n",
            k.display_name(),
            h.describe(),
            k.label(g),
            value,
            value.to_f64_approx()
        ),
        OutputFormat::Json => {
            let v = json!({
                "group": k.display_name(),
                "subgroup": h.describe(),
                "g_label": k.label(g),
                "aut_order": aut.order(),
                "num": value.num_str(),
                "den": value.den_str(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        OutputFormat::Csv => format!(
            "group,subgroup,g_label,aut_order,num,den\n{},\"{}\",{},{},{},{}\n",
            k.display_name(),
            h.describe(),
            k.label(g),
            aut.order(),
            value.num_str(),
            value.den_str()
        ),
    };
    Ok((EXIT_OK, text))
}

fn run_distribution(request: &CommandRequest) -> Result<(i32, String)> {
    let (k, h, _) = parse_specs(
        require_group(request)?,
        request.subgroup.as_deref(),
        request.g.as_deref(),
    )?;
    let aut = automorphism_group(&k)?;
    let profile = distribution(&h, &aut);
    let text = match request.format {
        OutputFormat::Text => {
            let mut t = format!(
                "Pr_g(H, Aut(K))  K = {}, H = {}, |Aut(K)| = {}\n",
                k.display_name(),
                h.describe(),
                aut.order()
            );
            for g in k.elements() {
                let v = profile.value(g);
                t.push_str(&format!("{:<12} {} (approx {:.6})\n", k.label(g), v, v.to_f64_approx()));
            }
            t
        }
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&profile.to_json()).expect("json")
        ),
        OutputFormat::Csv => profile.to_csv(),
    };
    Ok((EXIT_OK, text))
}

fn catalog_for(request: &CommandRequest) -> CatalogSpec {
    let mut spec = default_catalog();
    if let Some(cap) = request.max_order {
        spec.max_order = cap;
    }
    spec
}

fn run_verify(request: &CommandRequest) -> Result<(i32, String)> {
    let report = run_catalog(&catalog_for(request))?;
    let exit = if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    let text = match request.format {
        OutputFormat::Json => report.to_json_string(),
        OutputFormat::Csv => report.to_csv_string(),
        OutputFormat::Text => {
            let s = &report.summary;
            let mut t = format!(
                "verification over {} groups (orders <= {})\n\
                 checks: {}  passed: {}  failed: {}  skipped: {}\n\
                 orbit-count-form mismatches flagged: {}\n",
                report.catalog.len(),
                report.max_order,
                s.total_checks,
                s.passed,
                s.failed,
                s.skipped,
                s.orbit_form_mismatches
            );
            for c in &report.counterexamples {
                t.push_str(&format!(
                    "counterexample: {} on ({}, {}) g={} : {} {} {}\n",
                    c.name,
                    c.group,
                    c.subgroup,
                    c.g.as_deref().unwrap_or("-"),
                    c.lhs,
                    c.direction,
                    c.rhs
                ));
            }
            t
        }
    };
    Ok((exit, text))
}

fn run_aut(request: &CommandRequest) -> Result<(i32, String)> {
    let (k, _, _) = parse_specs(require_group(request)?, None, None)?;
    let aut = automorphism_group(&k)?;
    let text = match request.format {
        OutputFormat::Json => {
            let mut v = aut.to_json();
            if request.generators {
                let abstract_aut = crate::autoiso::aut_group_as_abstract_group(&aut);
                let gens = abstract_aut.group.minimal_generating_set();
                v["generators"] = json!(gens
                    .iter()
                    .map(|&i| aut.get(i).map().to_vec())
                    .collect::<Vec<_>>());
            }
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        OutputFormat::Text => {
            let mut t = format!("|Aut({})| = {}\n", k.display_name(), aut.order());
            if request.generators {
                let abstract_aut = crate::autoiso::aut_group_as_abstract_group(&aut);
                let gens = abstract_aut.group.minimal_generating_set();
                for &i in &gens {
                    let alpha = aut.get(i);
                    let images: Vec<String> = k
                        .elements()
                        .map(|x| format!("{}->{}", k.label(x), k.label(alpha.apply(x))))
                        .collect();
                    t.push_str(&format!("generator: {}\n", images.join(", ")));
                }
            }
            t
        }
        OutputFormat::Csv => {
            return Err(Error::ParseError {
                position: 0,
                message: "csv output is not defined for aut".into(),
            })
        }
    };
    Ok((EXIT_OK, text))
}

fn run_autoiso(request: &CommandRequest) -> Result<(i32, String)> {
    let (k1, h1, _) = parse_specs(
        require_group(request)?,
        request.subgroup.as_deref(),
        None,
    )?;
    let pair2_group = request.pair2_group.as_deref().ok_or(Error::ParseError {
        position: 0,
        message: "--pair2-group is required for autoiso".into(),
    })?;
    let (k2, h2, _) = parse_specs(pair2_group, request.pair2_subgroup.as_deref(), None)?;
    let aut1 = automorphism_group(&k1)?;
    let aut2 = automorphism_group(&k2)?;
    let side1 = PairData::new(&h1, &aut1)?;
    let side2 = PairData::new(&h2, &aut2)?;
    match find_autoisoclinism(&side1, &side2)? {
        SearchOutcome::Found(witness) => {
            let invariance = crate::autoiso::verify_invariance(&witness, &side1, &side2);
            assert!(
                invariance.iter().all(|r| r.passed),
                "invariance must hold on a verified witness"
            );
            let text = match request.format {
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&witness_to_json(&witness, &side1, &side2))
                        .expect("json")
                ),
                OutputFormat::Text => {
                    let mut t = format!(
                        "autoisoclinic: ({}, {}) ~ ({}, {})\n",
                        h1.describe(),
                        k1.display_name(),
                        h2.describe(),
                        k2.display_name()
                    );
                    for row in &invariance {
                        if let Some(g) = &row.g {
                            t.push_str(&format!("Pr_{} = {} transported exactly\n", g, row.lhs));
                        }
                    }
                    t
                }
                OutputFormat::Csv => {
                    return Err(Error::ParseError {
                        position: 0,
                        message: "csv output is not defined for autoiso".into(),
                    })
                }
            };
            Ok((EXIT_OK, text))
        }
        SearchOutcome::NotAutoisoclinic => Ok((EXIT_COUNTEREXAMPLE, "none\n".to_string())),
    }
}

fn run_catalog_listing(request: &CommandRequest) -> Result<(i32, String)> {
    let spec = catalog_for(request);
    let mut rows = Vec::new();
    for entry in &spec.entries {
        let group = parse_group_spec(entry)?;
        if group.order() > spec.max_order {
            continue;
        }
        let aut = automorphism_group(&group)?;
        let subgroups = crate::subgroup::all_subgroups(&group)?;
        rows.push((entry.clone(), group.order(), aut.order(), subgroups.len()));
    }
    let text = match request.format {
        OutputFormat::Text => {
            let mut t = String::from("group        order  |Aut|  subgroups\n");
            for (name, order, aut_order, count) in &rows {
                t.push_str(&format!("{:<12} {:<6} {:<6} {}\n", name, order, aut_order, count));
            }
            t
        }
        OutputFormat::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(name, order, aut_order, count)| {
                    json!({"group": name, "order": order, "aut_order": aut_order, "subgroups": count})
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        OutputFormat::Csv => {
            let mut t = String::from("group,order,aut_order,subgroups\n");
            for (name, order, aut_order, count) in &rows {
                t.push_str(&format!("{},{},{},{}\n", name, order, aut_order, count));
            }
            t
        }
    };
    Ok((EXIT_OK, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs_d4_instance() {
        let (k, h, g) = parse_specs("D4", Some("r"), Some("r^2")).unwrap();
        assert_eq!(k.order(), 8);
        assert_eq!(h.describe(), "{e,r,r^2,r^3}");
        assert_eq!(k.label(g), "r^2");
        // Caret-free shorthand resolves too.
        let (_, _, g2) = parse_specs("D4", Some("r"), Some("r2")).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn parse_specs_product_and_defaults() {
        let (k, h, g) = parse_specs("C3xC4", None, None).unwrap();
        assert_eq!(k.order(), 12);
        assert!(h.is_whole_group());
        assert_eq!(g, 0);
    }

    #[test]
    fn parse_specs_errors() {
        assert!(matches!(
            parse_specs("C3", None, Some("b")),
            Err(Error::UnknownLabel { .. })
        ));
        assert!(matches!(
            parse_specs("C3", Some("  "), None),
            Err(Error::NotASubgroupSpec { .. })
        ));
        assert!(matches!(
            parse_specs("Z9", None, None),
            Err(Error::UnknownSpec { .. })
        ));
    }

    #[test]
    fn parse_specs_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c3.cayley");
        let c3 = crate::named::make_named("C3").unwrap();
        std::fs::write(&path, c3.to_cayley_text()).unwrap();
        let (k, _, _) = parse_specs(path.to_str().unwrap(), None, None).unwrap();
        assert_eq!(k.order(), 3);
        assert_eq!(k.label(1), "a");
    }

    #[test]
    fn compute_on_d4_rotation_subgroup() {
        let mut req = CommandRequest::new(Command::Compute);
        req.group = Some("D4".into());
        req.subgroup = Some("r".into());
        req.g = Some("r^2".into());
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("1/4"), "got: {}", out.text);
    }

    #[test]
    fn distribution_on_c3() {
        let mut req = CommandRequest::new(Command::Distribution);
        req.group = Some("C3".into());
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("2/3"));
        assert!(out.text.contains("1/6"));
    }

    #[test]
    fn aut_command() {
        let mut req = CommandRequest::new(Command::Aut);
        req.group = Some("Q8".into());
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("= 24"));
    }

    #[test]
    fn unknown_label_exits_2() {
        let mut req = CommandRequest::new(Command::Compute);
        req.group = Some("C3".into());
        req.g = Some("b".into());
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_USAGE);
        assert!(out.text.contains("error"));
    }

    #[test]
    fn autoiso_reflexive_and_mismatch() {
        let mut req = CommandRequest::new(Command::Autoiso);
        req.group = Some("C3".into());
        req.pair2_group = Some("C3".into());
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("autoisoclinic"));

        let mut req = CommandRequest::new(Command::Autoiso);
        req.group = Some("D4".into());
        req.subgroup = Some("r".into());
        req.pair2_group = Some("C3".into());
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_COUNTEREXAMPLE);
        assert_eq!(out.text, "none\n");
    }

    #[test]
    fn verify_small_catalog_via_override() {
        let mut req = CommandRequest::new(Command::Verify);
        req.max_order = Some(4);
        req.format = OutputFormat::Json;
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("\"failed\": 0"));
    }

    #[test]
    fn verify_rejects_oversized_cap() {
        let mut req = CommandRequest::new(Command::Verify);
        req.max_order = Some(100);
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_USAGE);
    }

    #[test]
    fn catalog_listing() {
        let mut req = CommandRequest::new(Command::Catalog);
        req.max_order = Some(8);
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(out.text.contains("Q8"));
        assert!(!out.text.contains("S4"));
    }

    #[test]
    fn out_file_receives_artifact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("profile.json");
        let mut req = CommandRequest::new(Command::Distribution);
        req.group = Some("C3".into());
        req.format = OutputFormat::Json;
        req.out = Some(path.clone());
        let out = run(&req);
        assert_eq!(out.exit_code, EXIT_OK);
        let content = std::fs::read_to_string(&path).unwrap();
        assert!(content.contains("\"aut_order\": 2"));
    }
}
