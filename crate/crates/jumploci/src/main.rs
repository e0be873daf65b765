//! Command-line surface.  Every verb prints a single JSON report to
//! stdout; diagnostics go to stderr.  Exit codes: 0 success, 2 input
//! error, 1 golden-scenario mismatch.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use jumploci::arrangements::{
    arr_bounds, cone_decone_sigma, generic_section, incidence_points, local_components,
    os_algebra_deg2, res1_membership, sigma_lower_negative, ArrQuery, Arrangement,
    LineArrangementCombinatorics,
};
use jumploci::error::Error;
use jumploci::exactlin::Rat;
use jumploci::fox::{abelianize, cv1_contains, omega1_contains, GroupPresentation};
use jumploci::golden;
use jumploci::io;
use jumploci::raag::{
    raag_sigma_contains, toric_cv_contains_point, toric_omega_contains, toric_resonance,
    toric_supports, ToricInput, DEFAULT_VERTEX_CAP,
};
use jumploci::report::{Report, Verdict};
use jumploci::resonance::resonance_contains;
use jumploci::varieties::{
    omega_contains, sigma_bound_excludes, strictness_witness, tau1, RationalSubspace,
    SearchBudget, VarietyDescription,
};

#[derive(Parser)]
#[command(
    name = "jumploci",
    about = "Exact computation of cohomology jump loci and finiteness invariants",
    long_about = "Exact computation of cohomology jump loci and finiteness invariants.\n\
        All arithmetic is exact (rationals, integers, prime fields); rationals are\n\
        written as strings like \"3/4\".  Characters and directions are rational\n\
        vectors: irrational directions are out of scope because every test set\n\
        here is a finite union of rationally defined subspheres."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simplicial complex utilities
    Complex {
        #[command(subcommand)]
        verb: ComplexVerb,
    },
    /// Toric complexes and right-angled Artin groups
    Raag {
        #[command(subcommand)]
        verb: RaagVerb,
    },
    /// Finitely presented groups via free differential calculus
    Fox {
        #[command(subcommand)]
        verb: FoxVerb,
    },
    /// Supplied subvarieties of the character torus
    Variety {
        #[command(subcommand)]
        verb: VarietyVerb,
    },
    /// Resonance varieties of graded algebras
    Resonance {
        #[command(subcommand)]
        verb: ResonanceVerb,
    },
    /// Hyperplane arrangements
    Arr {
        #[command(subcommand)]
        verb: ArrVerb,
    },
    /// Golden worked-example scenarios
    Examples {
        #[command(subcommand)]
        verb: ExamplesVerb,
    },
}

#[derive(Args)]
struct ComplexArg {
    /// Path to a complex JSON file {"vertices":[...], "facets":[[...],...]}
    #[arg(long)]
    complex: String,
}

#[derive(Subcommand)]
enum ComplexVerb {
    /// Reduced homology in every degree
    Homology {
        #[command(flatten)]
        complex: ComplexArg,
        /// Coefficients: q, zp:<p>, or z
        #[arg(long, default_value = "q")]
        coeffs: String,
    },
    /// Flag-complex check and completion
    Flag {
        #[command(flatten)]
        complex: ComplexArg,
    },
}

#[derive(Subcommand)]
enum RaagVerb {
    /// Characteristic-variety membership of a torsion-free character
    Cv {
        #[command(flatten)]
        complex: ComplexArg,
        /// Point of the character torus, one rational per vertex
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value = "q")]
        coeffs: String,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Resonance components (coordinate subspaces) up to a degree
    Res {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value = "q")]
        coeffs: String,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Dwyer-Fried membership of a rational r-plane
    Omega {
        #[command(flatten)]
        complex: ComplexArg,
        /// Subspace basis, vectors separated by ';', entries by ','
        #[arg(long)]
        plane: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Sigma-invariant membership of a rational character
    Sigma {
        #[command(flatten)]
        complex: ComplexArg,
        /// Character, one rational per vertex
        #[arg(long)]
        chi: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value = "z")]
        coeffs: String,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
}

#[derive(Args)]
struct PresentationArg {
    /// Presentation text `gens: x1 x2 ; rels: x1 x2 x1^-1 x2^-2`,
    /// or a path to a file holding it when prefixed with '@'
    #[arg(long)]
    presentation: String,
}

#[derive(Subcommand)]
enum FoxVerb {
    /// Depth-d characteristic-variety membership of a rational point
    Cv {
        #[command(flatten)]
        pres: PresentationArg,
        /// Point with one rational coordinate per free abelian rank
        #[arg(long)]
        rho: String,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Rank-r Dwyer-Fried membership of a rational subspace
    Omega {
        #[command(flatten)]
        pres: PresentationArg,
        /// Subspace basis, vectors separated by ';'
        #[arg(long)]
        plane: String,
    },
    /// First Betti number and torsion of the abelianization
    Abelianize {
        #[command(flatten)]
        pres: PresentationArg,
    },
}

#[derive(Args)]
struct VarietyArg {
    /// Path to a variety JSON file
    #[arg(long)]
    variety: String,
}

#[derive(Subcommand)]
enum VarietyVerb {
    /// Exponential tangent cone components
    Tau1 {
        #[command(flatten)]
        variety: VarietyArg,
    },
    /// Dwyer-Fried membership of a rational plane
    Omega {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        plane: String,
    },
    /// Whether the tangent-cone upper bound excludes a character
    Sigma {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long)]
        chi: String,
    },
    /// Search for a strictness witness plane
    Witness {
        #[command(flatten)]
        variety: VarietyArg,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of candidate planes to try
        #[arg(long, default_value_t = 2000)]
        budget: usize,
    },
}

#[derive(Subcommand)]
enum ResonanceVerb {
    /// Depth-d resonance membership of a rational point
    Contains {
        /// Path to an algebra JSON file (tables or exterior description)
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        /// Field: q or zp:<p>
        #[arg(long, default_value = "q")]
        field: String,
    },
}

#[derive(Args)]
struct ArrangementArg {
    /// Path to an arrangement JSON file, or a defining polynomial given
    /// inline as a product of rational linear forms
    #[arg(long)]
    arrangement: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum ArrVerb {
    /// Certified generic planar section
    Section {
        #[command(flatten)]
        arr: ArrangementArg,
    },
    /// Multiple points of the sectioned arrangement
    Points {
        #[command(flatten)]
        arr: ArrangementArg,
    },
    /// Orlik-Solomon algebra Betti numbers through degree two
    Os {
        #[command(flatten)]
        arr: ArrangementArg,
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Degree-one resonance membership of a rational point
    Res1 {
        #[command(flatten)]
        arr: ArrangementArg,
        #[arg(long)]
        point: String,
    },
    /// Combinatorial Omega/Sigma bounds from the known components
    Bounds {
        #[command(flatten)]
        arr: ArrangementArg,
        /// Subspace basis for an Omega query
        #[arg(long)]
        plane: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        /// Character for a Sigma query
        #[arg(long)]
        chi: Option<String>,
        /// Extra non-local component, one basis per occurrence
        #[arg(long)]
        nonlocal: Vec<String>,
    },
    /// Negative-octant lower bound for Sigma membership
    Octant {
        #[command(flatten)]
        arr: ArrangementArg,
        #[arg(long)]
        chi: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum ExamplesVerb {
    /// Run a scripted scenario and compare against embedded verdicts
    Reproduce {
        /// One of: ex51, ex53, ex56, ex66, ex71, braid, pencil, deletedb3
        name: String,
        /// Number of lines for the pencil scenario
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(report) => {
            println!("{}", report.to_json());
            if report.all_passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("scenario mismatch: some verdicts differ from expected");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}

fn read_input(path_or_text: &str) -> Result<String, Error> {
    if let Some(path) = path_or_text.strip_prefix('@') {
        return std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")));
    }
    if path_or_text.trim_start().starts_with('{') {
        return Ok(path_or_text.to_string());
    }
    std::fs::read_to_string(path_or_text)
        .map_err(|e| Error::Parse(format!("{path_or_text}: {e}")))
}

fn presentation_text(arg: &str) -> Result<String, Error> {
    if let Some(path) = arg.strip_prefix('@') {
        return std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")));
    }
    Ok(arg.to_string())
}

fn arrangement_input(arg: &str) -> Result<(Arrangement, String), Error> {
    // inline polynomial or a file; file content may itself be either form
    let text = if std::path::Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    Ok((io::arrangement_from_json(&text)?, text))
}

fn sectioned(
    arg: &ArrangementArg,
) -> Result<(LineArrangementCombinatorics, String), Error> {
    let (a, text) = arrangement_input(&arg.arrangement)?;
    let (planar, _) = generic_section(&a, arg.seed.wrapping_add(1), 400)?;
    Ok((incidence_points(&planar)?, text))
}

fn subspace_json(s: &RationalSubspace) -> serde_json::Value {
    json!({
        "dim": s.dim(),
        "basis": s
            .basis_vectors()
            .iter()
            .map(|v| io::rat_vec_to_strings(v))
            .collect::<Vec<_>>(),
    })
}

fn dispatch(cmd: Command) -> Result<Report, Error> {
    match cmd {
        Command::Complex { verb } => run_complex(verb),
        Command::Raag { verb } => run_raag(verb),
        Command::Fox { verb } => run_fox(verb),
        Command::Variety { verb } => run_variety(verb),
        Command::Resonance { verb } => run_resonance(verb),
        Command::Arr { verb } => run_arr(verb),
        Command::Examples { verb } => run_examples(verb),
    }
}

fn run_complex(verb: ComplexVerb) -> Result<Report, Error> {
    match verb {
        ComplexVerb::Homology { complex, coeffs } => {
            let text = read_input(&complex.complex)?;
            let c = io::complex_from_json(&text)?;
            let k = io::parse_coeffs(&coeffs)?;
            let h = c.reduced_homology(k)?;
            let mut rep = Report::new(format!("complex homology --coeffs {coeffs}"), &text, None);
            let top = c.dim().unwrap_or(-1);
            for d in -1..=top {
                let torsion: Vec<String> = h.torsion(d).iter().map(|t| t.to_string()).collect();
                rep.push(
                    Verdict::new(format!("reduced H_{d}"), h.rank(d))
                        .with_certificate(json!({ "torsion": torsion })),
                );
            }
            Ok(rep)
        }
        ComplexVerb::Flag { complex } => {
            let text = read_input(&complex.complex)?;
            let c = io::complex_from_json(&text)?;
            let mut rep = Report::new("complex flag", &text, None);
            rep.push(Verdict::new("is a flag complex", c.is_flag()));
            let completion = c.flag_complex();
            rep.push(Verdict::new(
                "faces added by flag completion",
                completion.faces().len() - c.faces().len(),
            ));
            Ok(rep)
        }
    }
}

fn toric_input(arg: &ComplexArg, cap: usize) -> Result<(ToricInput, String), Error> {
    let text = read_input(&arg.complex)?;
    let c = io::complex_from_json(&text)?;
    Ok((ToricInput::with_cap(c, cap)?, text))
}

fn run_raag(verb: RaagVerb) -> Result<Report, Error> {
    match verb {
        RaagVerb::Cv {
            complex,
            point,
            degree,
            coeffs,
            cap,
        } => {
            let (t, text) = toric_input(&complex, cap)?;
            let k = io::parse_coeffs(&coeffs)?;
            let rho = io::parse_rat_vec(&point)?;
            let mut rep = Report::new(
                format!("raag cv --degree {degree} --coeffs {coeffs}"),
                &text,
                None,
            );
            rep.push(Verdict::new(
                format!("point in the degree-{degree} characteristic variety"),
                toric_cv_contains_point(&t, degree, k, &rho)?,
            ));
            Ok(rep)
        }
        RaagVerb::Res {
            complex,
            degree,
            coeffs,
            cap,
        } => {
            let (t, text) = toric_input(&complex, cap)?;
            let k = io::parse_coeffs(&coeffs)?;
            let fam = toric_supports(&t, degree, k)?;
            let arr = toric_resonance(&t, degree, k)?;
            let mut rep = Report::new(
                format!("raag res --degree {degree} --coeffs {coeffs}"),
                &text,
                None,
            );
            rep.push(
                Verdict::new("resonance components", arr.members().len())
                    .with_certificate(json!(arr
                        .members()
                        .iter()
                        .map(subspace_json)
                        .collect::<Vec<_>>())),
            );
            rep.push(Verdict::new(
                "qualifying coordinate supports",
                json!(fam
                    .supports
                    .iter()
                    .map(|s| s.iter().copied().collect::<Vec<_>>())
                    .collect::<Vec<_>>()),
            ));
            Ok(rep)
        }
        RaagVerb::Omega {
            complex,
            plane,
            degree,
            rank,
            cap,
        } => {
            let (t, text) = toric_input(&complex, cap)?;
            let p = io::parse_subspace(&plane, t.num_vertices())?;
            let mut rep = Report::new(
                format!("raag omega --degree {degree} --rank {rank}"),
                &text,
                None,
            );
            rep.push(
                Verdict::new(
                    format!("rank-{rank} plane within the degree-{degree} Omega set"),
                    toric_omega_contains(&t, degree, rank, &p)?,
                )
                .with_certificate(subspace_json(&p)),
            );
            Ok(rep)
        }
        RaagVerb::Sigma {
            complex,
            chi,
            degree,
            coeffs,
            cap,
        } => {
            let (t, text) = toric_input(&complex, cap)?;
            let k = io::parse_coeffs(&coeffs)?;
            let chi = io::parse_rat_vec(&chi)?;
            let mut rep = Report::new(
                format!("raag sigma --degree {degree} --coeffs {coeffs}"),
                &text,
                None,
            );
            rep.push(Verdict::new(
                format!("character in Sigma^{degree}"),
                raag_sigma_contains(&t, &chi, degree, k)?,
            ));
            Ok(rep)
        }
    }
}

fn run_fox(verb: FoxVerb) -> Result<Report, Error> {
    match verb {
        FoxVerb::Cv { pres, rho, depth } => {
            let text = presentation_text(&pres.presentation)?;
            let p = GroupPresentation::parse(&text)?;
            let rho = io::parse_rat_vec(&rho)?;
            let mut rep = Report::new(format!("fox cv --depth {depth}"), &text, None);
            rep.push(Verdict::new(
                format!("point in the depth-{depth} degree-one jump locus"),
                cv1_contains(&p, &rho, depth)?,
            ));
            Ok(rep)
        }
        FoxVerb::Omega { pres, plane } => {
            let text = presentation_text(&pres.presentation)?;
            let p = GroupPresentation::parse(&text)?;
            let ab = abelianize(&p);
            let q = io::parse_subspace(&plane, ab.rank)?;
            let mut rep = Report::new("fox omega", &text, None);
            rep.push(
                Verdict::new(
                    format!("rank-{} plane within the degree-one Omega set", q.dim()),
                    omega1_contains(&p, &q)?,
                )
                .with_certificate(subspace_json(&q)),
            );
            Ok(rep)
        }
        FoxVerb::Abelianize { pres } => {
            let text = presentation_text(&pres.presentation)?;
            let p = GroupPresentation::parse(&text)?;
            let ab = abelianize(&p);
            let mut rep = Report::new("fox abelianize", &text, None);
            rep.push(Verdict::new("first Betti number", ab.rank));
            rep.push(Verdict::new(
                "torsion orders",
                json!(ab.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
            ));
            Ok(rep)
        }
    }
}

fn run_variety(verb: VarietyVerb) -> Result<Report, Error> {
    let load = |arg: &VarietyArg| -> Result<(VarietyDescription, String), Error> {
        let text = read_input(&arg.variety)?;
        Ok((io::variety_from_json(&text)?, text))
    };
    match verb {
        VarietyVerb::Tau1 { variety } => {
            let (w, text) = load(&variety)?;
            let cone = tau1(&w);
            let mut rep = Report::new("variety tau1", &text, None);
            rep.push(
                Verdict::new("exponential tangent cone components", cone.members().len())
                    .with_certificate(json!(cone
                        .members()
                        .iter()
                        .map(subspace_json)
                        .collect::<Vec<_>>())),
            );
            Ok(rep)
        }
        VarietyVerb::Omega { variety, plane } => {
            let (w, text) = load(&variety)?;
            let p = io::parse_subspace(&plane, w.ambient)?;
            let mut rep = Report::new("variety omega", &text, None);
            rep.push(
                Verdict::new(
                    format!("rank-{} plane within the Omega set", p.dim()),
                    omega_contains(&w, &p)?,
                )
                .with_certificate(subspace_json(&p)),
            );
            Ok(rep)
        }
        VarietyVerb::Sigma { variety, chi } => {
            let (w, text) = load(&variety)?;
            let chi = io::parse_rat_vec(&chi)?;
            let mut rep = Report::new("variety sigma", &text, None);
            rep.push(Verdict::new(
                "character excluded by the tangent-cone bound",
                sigma_bound_excludes(&w, &chi)?,
            ));
            Ok(rep)
        }
        VarietyVerb::Witness {
            variety,
            rank,
            seed,
            budget,
        } => {
            let (w, text) = load(&variety)?;
            let b = SearchBudget {
                max_candidates: budget,
                seed,
                ..SearchBudget::default()
            };
            let found = strictness_witness(&w, rank, b);
            let mut rep = Report::new(
                format!("variety witness --rank {rank} --budget {budget}"),
                &text,
                Some(seed),
            );
            match found {
                Some(p) => rep.push(
                    Verdict::new("strictness witness found", true)
                        .with_certificate(subspace_json(&p)),
                ),
                None => rep.push(Verdict::new("strictness witness found", false)),
            }
            Ok(rep)
        }
    }
}

fn run_resonance(verb: ResonanceVerb) -> Result<Report, Error> {
    match verb {
        ResonanceVerb::Contains {
            algebra,
            point,
            degree,
            depth,
            field,
        } => {
            let text = read_input(&algebra)?;
            let f = io::parse_field(&field)?;
            let alg = io::algebra_from_json(&text, f)?;
            let a = io::parse_rat_vec(&point)?;
            let mut rep = Report::new(
                format!("resonance contains --degree {degree} --depth {depth} --field {field}"),
                &text,
                None,
            );
            rep.push(Verdict::new(
                format!("point in the degree-{degree} depth-{depth} resonance variety"),
                resonance_contains(&alg, &a, degree, depth)?,
            ));
            Ok(rep)
        }
    }
}

fn run_arr(verb: ArrVerb) -> Result<Report, Error> {
    match verb {
        ArrVerb::Section { arr } => {
            let (a, text) = arrangement_input(&arr.arrangement)?;
            let (planar, cert) = generic_section(&a, arr.seed.wrapping_add(1), 400)?;
            let mut rep = Report::new("arr section", &text, Some(arr.seed));
            rep.push(
                Verdict::new("certified generic section found", true).with_certificate(json!({
                    "attempts": cert.attempts,
                    "flats_checked": cert.flats_checked,
                    "base_point": io::rat_vec_to_strings(&cert.base_point),
                    "lines": planar
                        .lines()
                        .iter()
                        .map(|l| io::rat_vec_to_strings(l))
                        .collect::<Vec<_>>(),
                })),
            );
            Ok(rep)
        }
        ArrVerb::Points { arr } => {
            let (c, text) = sectioned(&arr)?;
            let mut rep = Report::new("arr points", &text, Some(arr.seed));
            rep.push(
                Verdict::new("multiple points", c.points.len()).with_certificate(json!(c
                    .points
                    .iter()
                    .map(|(m, ls)| json!({
                        "multiplicity": m,
                        "lines": ls.iter().copied().collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>())),
            );
            Ok(rep)
        }
        ArrVerb::Os { arr, field } => {
            let (c, text) = sectioned(&arr)?;
            let f = io::parse_field(&field)?;
            let alg = os_algebra_deg2(&c, f)?;
            let mut rep = Report::new(format!("arr os --field {field}"), &text, Some(arr.seed));
            rep.push(Verdict::new("Betti numbers through degree 2", json!(alg.dims())));
            Ok(rep)
        }
        ArrVerb::Res1 { arr, point } => {
            let (c, text) = sectioned(&arr)?;
            let a = io::parse_rat_vec(&point)?;
            let mut rep = Report::new("arr res1", &text, Some(arr.seed));
            rep.push(Verdict::new(
                "point in the degree-one resonance variety",
                res1_membership(&c, &a)?,
            ));
            Ok(rep)
        }
        ArrVerb::Bounds {
            arr,
            plane,
            rank,
            chi,
            nonlocal,
        } => {
            let (c, text) = sectioned(&arr)?;
            let mut extra = Vec::new();
            for s in &nonlocal {
                extra.push(io::parse_subspace(s, c.n)?);
            }
            let mut rep = Report::new("arr bounds", &text, Some(arr.seed));
            let locals = local_components(&c);
            rep.push(
                Verdict::new("local components", locals.members().len()).with_certificate(
                    json!(locals.members().iter().map(subspace_json).collect::<Vec<_>>()),
                ),
            );
            match (plane, chi) {
                (Some(p), None) => {
                    let r = rank.ok_or_else(|| {
                        Error::Parse("an Omega query needs --rank alongside --plane".into())
                    })?;
                    let p = io::parse_subspace(&p, c.n)?;
                    rep.push(Verdict::new(
                        format!("rank-{r} plane within the Omega upper bound"),
                        arr_bounds(&c, &extra, &ArrQuery::Omega { p, r })?,
                    ));
                }
                (None, Some(chi)) => {
                    let chi: Vec<Rat> = io::parse_rat_vec(&chi)?;
                    let r = cone_decone_sigma(&c, &extra, &chi)?;
                    rep.push(
                        Verdict::new("Sigma verdict", format!("{:?}", r.verdict))
                            .with_certificate(json!(r.provenance)),
                    );
                }
                _ => {
                    return Err(Error::Parse(
                        "supply exactly one of --plane (with --rank) or --chi".into(),
                    ))
                }
            }
            Ok(rep)
        }
        ArrVerb::Octant { arr, chi, degree } => {
            let (a, text) = arrangement_input(&arr.arrangement)?;
            let chi = io::parse_rat_vec(&chi)?;
            let mut rep = Report::new(format!("arr octant --degree {degree}"), &text, None);
            rep.push(Verdict::new(
                format!("negative-octant certificate for Sigma^{degree} complement"),
                sigma_lower_negative(&a, &chi, degree)?,
            ));
            Ok(rep)
        }
    }
}

fn run_examples(verb: ExamplesVerb) -> Result<Report, Error> {
    match verb {
        ExamplesVerb::Reproduce { name, n, seed } => {
            if name == "pencil" {
                golden::pencil_scenario(n, seed)
            } else {
                golden::run_scenario(&name, seed)
            }
        }
    }
}
