use std::fs;
use std::path::Path;

use arrangements::euclid::{build_lattice, FiberVariant};
use arrangements::graph::{chromatic_poly, count_acyclic_unique_sink, orientation_counts};
use arrangements::io::{arrangement_from_json, graph_from_json};
use arrangements::torus::build_poset;
use arrangements::Arrangement;
use serde::Serialize;
use serde_json::{json, Value};

use crate::job::{Command, JobSpec};
use crate::report::{analyze, flag_line, Report};
use crate::{render, verify, Failure};

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: parse error: {e}", path.display())))
}

fn load(path: &Path) -> Result<Arrangement, Failure> {
    let v = read_json(path)?;
    arrangement_from_json(&v).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(job: &JobSpec, value: &T, text: impl FnOnce() -> String) {
    if job.json {
        println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
    } else {
        print!("{}", text());
    }
}

/// The asserted hypotheses, checked against a finished report.
fn assertions(job: &JobSpec, report: &Report) -> Result<(), Failure> {
    if job.assert_balls && report.space == "torus" && report.levels.len() > 1 {
        let points = report.elements.iter().filter(|e| e.dim == Some(0)).count();
        if points == 0 {
            return Err(Failure::Verification("--assert-balls: the arrangement has no vertices".into()));
        }
    }
    if job.assert_regular {
        let failed: Vec<&str> = report.regularity.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        if !failed.is_empty() {
            return Err(Failure::Verification(format!(
                "--assert-regular: necessary conditions fail: {}",
                failed.join(", ")
            )));
        }
    }
    Ok(())
}

pub fn run(job: &JobSpec) -> Result<(), Failure> {
    match &job.command {
        Command::Analyze(input) => {
            let report = analyze(&load(&input.file)?)?;
            emit(job, &report, || report.to_string());
            assertions(job, &report)
        }
        Command::Verify { file } => {
            let suite = match file {
                None => verify::builtin(),
                Some(path) => {
                    let v = read_json(path)?;
                    if v.get("sphere_cd_index").is_some() {
                        verify::sphere_file(&v).map_err(Failure::Input)?
                    } else {
                        let a = arrangement_from_json(&v)
                            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                        verify::arrangement_file(&a, job.assert_regular, job.assert_balls)
                    }
                }
            };
            let failed: Vec<String> = suite.failed().iter().map(|c| c.name.clone()).collect();
            emit(job, &json!({"checks": suite.checks, "failed": failed}), || suite.to_string());
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verification(format!("{} check(s) failed: {}", failed.len(), failed.join(", "))))
            }
        }
        Command::Render { file, output } => {
            let Arrangement::Torus(a) = load(file)? else {
                return Err(Failure::Input("render needs a torus arrangement".into()));
            };
            let svg = render::render_svg(&a)?;
            match output {
                Some(path) => fs::write(path, svg).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
                None => {
                    print!("{svg}");
                    Ok(())
                }
            }
        }
        Command::Charpoly(input) => {
            let chi = match load(&input.file)? {
                Arrangement::Euclidean(a) => build_lattice(&a)?.char_poly(),
                Arrangement::Torus(a) => build_poset(&a)?.char_poly(),
            };
            emit(job, &json!({"char_poly": chi.to_string(), "coeffs": chi.coeffs()}), || format!("{chi}\n"));
            Ok(())
        }
        Command::Regions(input) => {
            let report = analyze(&load(&input.file)?)?;
            let Some(r) = &report.regions else {
                return Err(Failure::Input(report.warnings.join("; ")));
            };
            emit(job, r, || format!("{r}\n"));
            assertions(job, &report)
        }
        Command::Fvector(input) => {
            let report = analyze(&load(&input.file)?)?;
            let Some(f) = report.face.as_ref().and_then(|f| f.f_vector.clone()) else {
                return Err(Failure::Input(format!("no f-vector: {}", report.warnings.join("; "))));
            };
            emit(job, &json!({"f_vector": f}), || f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n");
            Ok(())
        }
        Command::Abindex(input) => {
            let report = analyze(&load(&input.file)?)?;
            let value = json!({
                "ab_index": report.ab_index,
                "flag_f": report.flag_f,
                "flag_h": report.flag_h,
                "face": report.face,
            });
            emit(job, &value, || {
                let mut s = format!(
                    "ab-index: {}\nflag f: {}\nflag h: {}\n",
                    report.ab_index,
                    flag_line(&report.flag_f),
                    flag_line(&report.flag_h)
                );
                if let Some(face) = &report.face {
                    s += &format!("face ab-index ({}): {}\n", face.complex, face.ab_index);
                    if let Some(cd) = &face.cd_index {
                        s += &format!("face cd-index: {cd}\n");
                    }
                    if let Some(nf) = &face.normal_form {
                        s += &format!("torus normal form: {nf}\n");
                    }
                }
                s
            });
            Ok(())
        }
        Command::Fiber { file, chain } => {
            let (count, variant) = match load(file)? {
                Arrangement::Euclidean(a) => {
                    let l = build_lattice(&a)?;
                    let variant = if l.is_central() { FiberVariant::Central } else { FiberVariant::Unbounded };
                    let name = if l.is_central() { "central" } else { "unbounded" };
                    (l.bs_fiber(chain, variant)?, name)
                }
                Arrangement::Torus(a) => (build_poset(&a)?.toric_fiber(chain)?, "torus"),
            };
            emit(job, &json!({"chain": chain, "variant": variant, "count": count}), || format!("{count}\n"));
            Ok(())
        }
        Command::LatticeCount { file, q } => {
            let Arrangement::Torus(a) = load(file)? else {
                return Err(Failure::Input("lattice-count needs a torus arrangement".into()));
            };
            let count = a.lattice_point_count(*q);
            let chi = build_poset(&a)?.char_poly().eval(&(*q as i64));
            let period = verify::grid_period(&a);
            let value = json!({"q": q, "count": count, "char_poly_at_q": chi, "period": period});
            emit(job, &value, || {
                let note =
                    if period != 0 && *q as i64 % period == 0 { "" } else { " (q is not a multiple of the period)" };
                format!("{count} grid points off the arrangement; chi({q}) = {chi}, period {period}{note}\n")
            });
            Ok(())
        }
        Command::Graph { file, chromatic, sink, .. } => {
            let v = read_json(file)?;
            let g = graph_from_json(&v).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            if *chromatic {
                let chi = chromatic_poly::<i64>(&g);
                emit(job, &json!({"chromatic_poly": chi.to_string(), "coeffs": chi.coeffs()}), || format!("{chi}\n"));
                return Ok(());
            }
            match sink {
                Some(v) => {
                    let count = count_acyclic_unique_sink(&g, *v)?;
                    emit(job, &json!({"sink": v, "count": count}), || format!("{count}\n"));
                }
                None => {
                    let counts = orientation_counts(&g)?;
                    let value = json!({"acyclic": counts.total, "unique_sink": counts.unique_sink});
                    emit(job, &value, || {
                        let mut s = format!("acyclic orientations: {}\n", counts.total);
                        for (i, c) in counts.unique_sink.iter().enumerate() {
                            s += &format!("unique sink {}: {c}\n", i + 1);
                        }
                        s
                    });
                }
            }
            Ok(())
        }
    }
}
