use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use flagsub::harness::{self, Check, Family, GeneratorSpec, Move, SuiteOptions, SuitePlan};
use flagsub::io::{ComplexDoc, SubdivisionDoc};
use flagsub::subdivision::ValidationMode;
use flagsub::{
    ball_to_sphere, barycentric_subdivision, classify, fixture, gamma_vector, h_decomposition, h_polynomial,
    local_gamma, local_h, sigma_cross_polytope_map, stellar_subdivision, validate, Error, FacetChoice,
    SimplicialComplex, SubdivisionMap, Verdict, FIXTURE_NAMES,
};
use serde::Serialize;
use serde_json::json;

use crate::{Command, Output};

const OK: u8 = 0;
const THEOREM_FAILURE: u8 = 2;

/// 3 for anything wrong with the input, 1 otherwise.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<io::Error>() || cause.is::<serde_json::Error>() {
            return 3;
        }
        if let Some(err) = cause.downcast_ref::<Error>() {
            return if is_input_error(err) { 3 } else { 1 };
        }
    }
    1
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownVertex(_)
            | Error::DuplicateLabel(_)
            | Error::InvalidLabel(_)
            | Error::GroundSetTooLarge { .. }
            | Error::NotAFace(_)
            | Error::MissingCarrier(_)
            | Error::CarrierNotInBase { .. }
            | Error::EmptyFaceCarrier
            | Error::NotMonotone { .. }
            | Error::DimensionDrop(_)
            | Error::NotSurjective(_)
            | Error::UnknownFixture(_)
            | Error::NotPrime(_)
            | Error::UnknownField(_)
            | Error::InstanceTooLarge { .. }
            | Error::MalformedInstance(_)
            | Error::MalformedDocument(_)
    )
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let doc: ComplexDoc = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Error::MalformedDocument(format!("{}: {e}", path.display())))?;
    Ok(doc.to_complex()?)
}

fn read_subdivision(path: &Path) -> Result<SubdivisionMap> {
    let doc: SubdivisionDoc = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Error::MalformedDocument(format!("{}: {e}", path.display())))?;
    Ok(doc.to_map()?)
}

fn emit<T: Serialize>(output: &Output, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match &output.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(String::from)
        .collect()
}

fn parse_moves(s: &str) -> Result<Vec<Move>> {
    Ok(split_list(s).iter().map(|m| m.parse()).collect::<Result<_, Error>>()?)
}

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Generate {
            dim,
            steps,
            seed,
            moves,
            verify,
            map,
            output,
        } => {
            let spec = GeneratorSpec::new(dim, steps, seed).with_moves(&parse_moves(&moves)?);
            let g = harness::random_flag_sphere(&spec)?;
            let k = g.complex();
            let mut doc = json!({
                "spec": spec,
                "rng": harness::RNG_NAME,
                "distribution": harness::EDGE_CHOICE,
                "trail": g.trail,
                "complex": ComplexDoc::from_complex(k),
                "f_vector": k.f_vector().counts,
                "gamma": gamma_vector(k).ok(),
            });
            if map {
                doc["map"] = json!(SubdivisionDoc::from_map(&g.map));
            }
            let mut code = OK;
            if verify {
                let sphere = k.is_flag() && classify(k, flagsub::FieldSpec::Gf2).is_sphere();
                doc["verified"] = json!(sphere);
                if !sphere {
                    code = THEOREM_FAILURE;
                }
            }
            emit(&output, &doc)?;
            Ok(code)
        }
        Command::Suite {
            checks,
            count,
            dims,
            steps,
            seed,
            families,
            field,
            force,
            timings,
            tsv,
            output,
        } => {
            let checks = Check::parse_list(&checks)?;
            if checks.is_empty() {
                return Err(Error::MalformedInstance("no checks selected".into()).into());
            }
            let dims: Vec<usize> = split_list(&dims)
                .iter()
                .map(|d| {
                    d.parse()
                        .map_err(|_| Error::MalformedInstance(format!("bad dimension `{d}`")))
                })
                .collect::<Result<_, _>>()?;
            let families: Vec<Family> = match families {
                Some(f) => split_list(&f).iter().map(|f| f.parse()).collect::<Result<_, Error>>()?,
                None => Family::ALL.to_vec(),
            };
            let plan = SuitePlan::new(count, &dims, steps, seed, &families);
            let opts = SuiteOptions {
                force,
                timings,
                field,
                ..SuiteOptions::default()
            };
            let report = harness::run_plan(&plan, &checks, opts)?;
            if let Some(p) = &tsv {
                fs::write(p, report.to_tsv()).with_context(|| format!("writing {}", p.display()))?;
            }
            emit(&output, &report)?;
            let mut err = io::stderr();
            for (check, tiers) in &report.summary {
                for (tier, t) in tiers {
                    writeln!(
                        err,
                        "{check}\t{tier:?}\tpass {}\tfail {}\tskipped {}",
                        t.pass, t.fail, t.skipped
                    )?;
                }
            }
            Ok(if report.theorem_failures() > 0 {
                THEOREM_FAILURE
            } else {
                OK
            })
        }
        Command::Hvec { file, output } => {
            let k = read_complex(&file)?;
            emit(
                &output,
                &json!({ "f_vector": k.f_vector().counts, "h": h_polynomial(&k), "d": k.dim() + 1 }),
            )?;
            Ok(OK)
        }
        Command::Gamma { file, output } => {
            let k = read_complex(&file)?;
            match gamma_vector(&k) {
                Ok(g) => {
                    emit(&output, &json!({ "gamma": g, "nonnegative": g.is_nonnegative() }))?;
                    Ok(OK)
                }
                Err(e) => {
                    emit(&output, &json!({ "h": h_polynomial(&k), "symmetry_failure": e }))?;
                    Ok(1)
                }
            }
        }
        Command::LocalH { file, output } => {
            let s = read_subdivision(&file)?;
            let l = local_h(&s)?;
            emit(&output, &json!({ "local_h": l, "display": l.to_string() }))?;
            Ok(OK)
        }
        Command::LocalGamma { file, output } => {
            let s = read_subdivision(&file)?;
            let x = local_gamma(&s)?;
            emit(
                &output,
                &json!({ "xi": x, "display": x.as_polynomial().to_string(), "nonnegative": x.is_nonnegative() }),
            )?;
            Ok(OK)
        }
        Command::Classify { file, field, output } => {
            let k = read_complex(&file)?;
            let class = classify(&k, field);
            let (dimension, boundary) = match &class.verdict {
                Verdict::Sphere { dim } => (Some(*dim), None),
                Verdict::Ball { dim, boundary } => (Some(*dim), Some(boundary)),
                Verdict::Other => (None, None),
            };
            let boundary_facets: Option<Vec<Vec<String>>> =
                boundary.map(|b| b.facets().iter().map(|f| b.sorted_names(*f)).collect());
            emit(
                &output,
                &json!({
                    "verdict": class.verdict.name(),
                    "dimension": dimension,
                    "boundary_facets": boundary_facets,
                    "betti": class.betti.to_map(),
                    "field": field.to_string(),
                }),
            )?;
            Ok(OK)
        }
        Command::CheckSubdivision {
            file,
            fast,
            field,
            output,
        } => {
            let s = read_subdivision(&file)?;
            let mode = if fast {
                ValidationMode::Fast
            } else {
                ValidationMode::Full(field)
            };
            emit(&output, &validate(&s, mode))?;
            Ok(OK)
        }
        Command::Decompose { file, output } => {
            let s = read_subdivision(&file)?;
            let dec = h_decomposition(&s)?;
            let holds = dec.holds();
            emit(&output, &json!({ "decomposition": dec, "holds": holds }))?;
            Ok(if holds { OK } else { THEOREM_FAILURE })
        }
        Command::SigmaMap {
            file,
            facet,
            verify,
            field,
            output,
        } => {
            let k = read_complex(&file)?;
            let choice = match facet {
                Some(f) => FacetChoice::from_names(&k, &split_list(&f))?,
                None => FacetChoice::first(&k)?,
            };
            let s = sigma_cross_polytope_map(&k, &choice, verify.then_some(field))?;
            emit(&output, &SubdivisionDoc::from_map(&s))?;
            Ok(OK)
        }
        Command::BallToSphere { file, output } => {
            let s = read_subdivision(&file)?;
            emit(&output, &SubdivisionDoc::from_map(&ball_to_sphere(&s)?))?;
            Ok(OK)
        }
        Command::Fixture { name, list, output } => {
            if list {
                emit(&output, &FIXTURE_NAMES)?;
                return Ok(OK);
            }
            let name = name.ok_or_else(|| anyhow!("give a fixture name or --list"))?;
            emit(&output, &SubdivisionDoc::from_map(&fixture(&name)?))?;
            Ok(OK)
        }
        Command::Stellar {
            file,
            face,
            name,
            output,
        } => {
            let k = read_complex(&file)?;
            let f = k.face_by_names(&split_list(&face))?;
            let s = stellar_subdivision(&k, f, name.as_deref())?;
            emit(&output, &SubdivisionDoc::from_map(&s))?;
            Ok(OK)
        }
        Command::Barycentric { vertices, output } => {
            let s = barycentric_subdivision(&split_list(&vertices))?;
            emit(&output, &SubdivisionDoc::from_map(&s))?;
            Ok(OK)
        }
        Command::Compose { outer, inner, output } => {
            let outer = read_subdivision(&outer)?;
            let inner = read_subdivision(&inner)?;
            emit(
                &output,
                &SubdivisionDoc::from_map(&SubdivisionMap::compose(&outer, &inner)?),
            )?;
            Ok(OK)
        }
    }
}
