//! Acceptance suite: one test per criterion, each printing one PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Failures panic with the offending case.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use orthocut_core::foldcut::{
    folded_cut_segments, solve, unfold_generate, unfold_generate_oned, verify_cut_solution,
    FailStage, GenParams, SplitMix64, Verdict, VerifyOutcome,
};
use orthocut_core::foldmap::{FoldMap1D, FoldMap2D, Sign};
use orthocut_core::formats::{
    parse_instance, parse_solution, serialize_instance, serialize_solution, InstanceDocument,
};
use orthocut_core::geometry::{Interval1D, PaperRect, Point, Slope};
use orthocut_core::oned::{
    solve_interval, solve_signed, solve_unsigned, CutImage, CutInterval, IntervalVerdict,
    OneDIntervalInstance, OneDSignedInstance, OneDUnsignedInstance, SignedVerdict,
};
use orthocut_core::punch::{solve_punch, verify_punch, HoleInstance, PunchCheck, PunchVerdict};
use orthocut_core::rational::Rational;
use orthocut_core::registry::Registry;
use orthocut_core::svg::render_svg;

fn instances_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn report(criterion: &str, cases: usize, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("PASS {criterion}: {cases} cases in {elapsed:.2?} (budget {budget:.0?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its time budget: {elapsed:.2?} > {budget:.0?}"
    );
}

fn rational_grid(rng: &mut SplitMix64, upper: i64, den: i64) -> Rational {
    Rational::new(rng.next_below((upper * den) as u64 + 1) as i64, den)
}

/// Criterion 1: every unsigned 1D instance is solvable and the canonical
/// solution aligns exactly the cut points.
#[test]
fn acceptance_1_oned_universality() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xACCE_0001);
    let trials = 1000;
    for trial in 0..trials {
        let n = 1 + rng.next_below(20) as usize;
        let mut points = std::collections::BTreeSet::new();
        while points.len() < n {
            points.insert(rational_grid(&mut rng, 20, 16));
        }
        let cut_points: Vec<Rational> = points.into_iter().collect();
        let inst =
            OneDUnsignedInstance::new(Rational::from(0), Rational::from(20), cut_points.clone())
                .unwrap();
        let sol = solve_unsigned(&inst);
        let map =
            FoldMap1D::new(Rational::from(0), Rational::from(20), sol.creases.clone()).unwrap();
        let CutImage::Point(image) = &sol.cut_image else {
            panic!("trial {trial}: point problems produce point images")
        };
        assert_eq!(
            map.preimages(image),
            cut_points,
            "trial {trial}: folded cut position must have exactly the cut points as preimages"
        );
    }
    report(
        "criterion 1 (1D universality)",
        trials,
        start,
        Duration::from_secs(1),
    );
}

/// Criterion 2: exhaustive signed characterization for all sign patterns of
/// length <= 10 at random positions.
#[test]
fn acceptance_2_signed_characterization() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xACCE_0002);
    let mut cases = 0;
    for len in 1..=10u32 {
        for pattern in 0u32..(1 << len) {
            let mut positions = std::collections::BTreeSet::new();
            while positions.len() < len as usize {
                positions.insert(rational_grid(&mut rng, 12, 8));
            }
            let cut_points: Vec<(Rational, Sign)> = positions
                .into_iter()
                .enumerate()
                .map(|(i, p)| {
                    let sign = if pattern & (1 << i) != 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                    (p, sign)
                })
                .collect();
            let alternating = cut_points.windows(2).all(|w| w[0].1 != w[1].1);
            let inst =
                OneDSignedInstance::new(Rational::from(0), Rational::from(12), cut_points).unwrap();
            match solve_signed(&inst) {
                SignedVerdict::Solvable(sol) => {
                    assert!(
                        alternating,
                        "{len}/{pattern}: non-alternating pattern solved"
                    );
                    let map =
                        FoldMap1D::new(inst.lo().clone(), inst.hi().clone(), sol.creases.clone())
                            .unwrap();
                    for (p, sign) in inst.cut_points() {
                        let mut o = map.orientation(p).unwrap();
                        if sol.flip_whole_paper {
                            o = o.flip();
                        }
                        assert_eq!(o, *sign, "{len}/{pattern}: orientation mismatch at {p}");
                    }
                }
                SignedVerdict::Unsolvable(pair) => {
                    assert!(
                        !alternating,
                        "{len}/{pattern}: alternating pattern rejected"
                    );
                    assert_eq!(pair.first.1, pair.second.1);
                }
            }
            cases += 1;
        }
    }
    report(
        "criterion 2 (signed characterization)",
        cases,
        start,
        Duration::from_secs(1),
    );
}

/// Criterion 3: unfold-generated interval instances are always verified, and
/// the unequal-length two-interval family is always rejected.
#[test]
fn acceptance_3_interval_canonical() {
    let start = Instant::now();
    for seed in 0..200u64 {
        let g = unfold_generate_oned(seed, (seed % 5) as usize, &Rational::from(4)).unwrap();
        match solve_interval(&g.instance) {
            IntervalVerdict::Solvable(_) => {}
            IntervalVerdict::Unsolvable(w) => {
                panic!("seed {seed}: generated instance rejected with {w:?}")
            }
        }
    }
    let mut rng = SplitMix64::new(0xACCE_0003);
    for trial in 0..100 {
        // Two cut intervals of different lengths, no required creases.
        let len_a = Rational::new(1 + rng.next_below(16) as i64, 4);
        let mut len_b = Rational::new(1 + rng.next_below(16) as i64, 4);
        if len_a == len_b {
            len_b = &len_b + &Rational::new(1, 4);
        }
        let gap = Rational::new(1 + rng.next_below(8) as i64, 4);
        let tail = Rational::new(1 + rng.next_below(8) as i64, 4);
        let b_start = &len_a + &gap;
        let b_end = &b_start + &len_b;
        let hi = &b_end + &tail;
        let inst = OneDIntervalInstance::new(
            Rational::from(0),
            hi,
            vec![
                CutInterval {
                    interval: Interval1D::new(Rational::from(0), len_a),
                    required_creases: vec![],
                },
                CutInterval {
                    interval: Interval1D::new(b_start, b_end),
                    required_creases: vec![],
                },
            ],
        )
        .unwrap();
        assert!(
            matches!(solve_interval(&inst), IntervalVerdict::Unsolvable(_)),
            "trial {trial}: unequal cut intervals with no required creases cannot align"
        );
    }
    report(
        "criterion 3 (interval canonical pattern)",
        300,
        start,
        Duration::from_secs(1),
    );
}

/// Criterion 4: punch solvability coincides with the combinatorial-rectangle
/// property on all 511 nonempty subsets of a 3x3 grid.
#[test]
fn acceptance_4_punch_characterization() {
    let start = Instant::now();
    for mask in 1u16..512 {
        let mut holes = Vec::new();
        for bit in 0..9 {
            if mask & (1 << bit) != 0 {
                holes.push(Point::new(
                    Rational::from((bit % 3) as i64 + 1),
                    Rational::from((bit / 3) as i64 + 1),
                ));
            }
        }
        // Independent oracle: direct product enumeration.
        let xs: std::collections::BTreeSet<_> = holes.iter().map(|p| p.x.clone()).collect();
        let ys: std::collections::BTreeSet<_> = holes.iter().map(|p| p.y.clone()).collect();
        let product_closed = xs.iter().all(|x| {
            ys.iter()
                .all(|y| holes.contains(&Point::new(x.clone(), y.clone())))
        });
        let inst = HoleInstance::new(
            PaperRect::new(Rational::from(4), Rational::from(4)).unwrap(),
            holes,
        )
        .unwrap();
        match solve_punch(&inst) {
            PunchVerdict::Solvable(sol) => {
                assert!(product_closed, "mask {mask}: non-rectangle solved");
                let check = verify_punch(
                    &inst,
                    &sol.vertical_creases,
                    &sol.horizontal_creases,
                    &sol.punch_point,
                )
                .unwrap();
                assert_eq!(check, PunchCheck::Verified, "mask {mask}");
            }
            PunchVerdict::Unsolvable { .. } => {
                assert!(!product_closed, "mask {mask}: rectangle rejected");
            }
        }
    }
    report(
        "criterion 4 (punch characterization)",
        511,
        start,
        Duration::from_secs(1),
    );
}

fn generated_corpus() -> Vec<(u64, orthocut_core::foldcut::Generated)> {
    (0..200u64)
        .map(|seed| {
            let params = GenParams {
                creases_x: (seed % 6) as usize,
                creases_y: ((seed / 6) % 6) as usize,
                folded_width: Rational::from(3),
                folded_height: Rational::from(2),
                line_offset: None,
                slope: None,
            };
            (seed, unfold_generate(seed, &params).unwrap())
        })
        .collect()
}

fn load_instance(name: &str) -> InstanceDocument {
    let path = instances_dir().join(name);
    let bytes = fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_instance(&bytes).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn x_extent_measure(mut spans: Vec<(Rational, Rational)>) -> Rational {
    spans.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    let mut total = Rational::zero();
    let mut current: Option<(Rational, Rational)> = None;
    for (lo, hi) in spans {
        match &mut current {
            Some((_, chi)) if lo <= *chi => {
                if hi > *chi {
                    *chi = hi;
                }
            }
            _ => {
                if let Some((clo, chi)) = current.take() {
                    total = total + (&chi - &clo);
                }
                current = Some((lo, hi));
            }
        }
    }
    if let Some((clo, chi)) = current {
        total = total + (&chi - &clo);
    }
    total
}

/// Criterion 5: generated instances solve and verify; the bundled
/// adversarial set fails at the documented stages.
#[test]
fn acceptance_5_foldcut_pipeline() {
    let start = Instant::now();
    for (seed, g) in generated_corpus() {
        let Verdict::Solvable(sol) = solve(&g.instance) else {
            panic!("seed {seed}: generated instance reported unsolvable")
        };
        let outcome =
            verify_cut_solution(&g.instance, &sol.vertical_creases, &sol.horizontal_creases)
                .unwrap();
        let VerifyOutcome::Verified(line) = outcome else {
            panic!("seed {seed}: canonical solution failed verification")
        };
        assert_eq!(line, sol.folded_line, "seed {seed}");
        // The folded cut marks are an isometric image of the generator's
        // clipped line: their x extents agree.
        let folded =
            folded_cut_segments(&g.instance, &sol.vertical_creases, &sol.horizontal_creases)
                .unwrap();
        let marks = x_extent_measure(
            folded
                .iter()
                .map(|(_, f)| (f.x_min().clone(), f.x_max().clone()))
                .collect(),
        );
        let gen_extent = &g.folded_segment.x_max().clone() - g.folded_segment.x_min();
        assert_eq!(marks, gen_extent, "seed {seed}: folded mark extent differs");
    }

    let adversarial = [
        ("lone_segment.json", FailStage::CanonicalVerificationFailed),
        ("asymmetric_pair.json", FailStage::BandMismatch),
        ("mixed_slopes.json", FailStage::SlopeMismatch),
        ("letter_n.json", FailStage::SlopeMismatch),
        ("partial_horizontal.json", FailStage::AxisCutNotFullWidth),
    ];
    for (name, expected_stage) in adversarial {
        let InstanceDocument::Foldcut(inst) = load_instance(name) else {
            panic!("{name}: expected a foldcut instance")
        };
        match solve(&inst) {
            Verdict::Unsolvable { stage, .. } => {
                assert_eq!(stage, expected_stage, "{name}")
            }
            Verdict::Solvable(_) => panic!("{name}: adversarial instance reported solvable"),
        }
    }
    report(
        "criterion 5 (fold & cut pipeline)",
        205,
        start,
        Duration::from_secs(10),
    );
}

/// Exact integer view of one coordinate axis of a verified instance: every
/// rational is scaled by a common denominator chosen so the sample grid is
/// integral too. Conversions assert exactness, and i128 arithmetic aborts on
/// overflow in test builds, so this loses nothing against the rational path;
/// it only removes allocation overhead from the 2,000,000-point loop.
struct ScaledAxis {
    creases: Vec<i128>,
    offsets: Vec<i128>,
}

impl ScaledAxis {
    fn new(creases: &[Rational], scale: &num_bigint::BigInt) -> ScaledAxis {
        let creases: Vec<i128> = creases.iter().map(|c| scaled_int(c, scale)).collect();
        let mut offsets = vec![0i128];
        for (i, c) in creases.iter().enumerate() {
            let prev = offsets[i];
            offsets.push(if i % 2 == 0 {
                prev + 2 * c
            } else {
                prev - 2 * c
            });
        }
        ScaledAxis { creases, offsets }
    }

    fn eval(&self, x: i128) -> i128 {
        let i = self.creases.partition_point(|c| *c < x);
        if i % 2 == 0 {
            x + self.offsets[i]
        } else {
            self.offsets[i] - x
        }
    }
}

fn scaled_int(r: &Rational, scale: &num_bigint::BigInt) -> i128 {
    use num_traits::ToPrimitive;
    let scaled = r.numer() * scale;
    let (q, rem) = num_integer::Integer::div_rem(&scaled, r.denom());
    assert!(
        rem == num_bigint::BigInt::from(0),
        "scale is a common denominator"
    );
    q.to_i128().expect("scaled coordinates fit in i128")
}

fn common_scale(values: impl Iterator<Item = Rational>, grid: i128) -> num_bigint::BigInt {
    let mut lcm = num_bigint::BigInt::from(grid);
    for v in values {
        lcm = num_integer::Integer::lcm(&lcm, v.denom());
    }
    lcm
}

/// Criterion 6: on every verified instance, random points fold onto the cut
/// line exactly when they lie on a cut.
#[test]
fn acceptance_6_verifier_soundness() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xACCE_0006);
    let mut checks = 0usize;
    const GRID: i128 = 4096;
    for (seed, g) in generated_corpus() {
        let Verdict::Solvable(sol) = solve(&g.instance) else {
            panic!("seed {seed}: generated instance reported unsolvable")
        };
        let inst = &g.instance;
        let paper = inst.paper();
        let line = &sol.folded_line;
        let Slope::Finite(m) = &line.slope else {
            panic!("seed {seed}: unit-slope instances fold onto a finite-slope line")
        };

        let everything = inst
            .cuts()
            .iter()
            .flat_map(|s| [s.a(), s.b()])
            .flat_map(|p| [p.x.clone(), p.y.clone()])
            .chain(sol.vertical_creases.iter().cloned())
            .chain(sol.horizontal_creases.iter().cloned())
            .chain([
                paper.width().clone(),
                paper.height().clone(),
                line.point.x.clone(),
                line.point.y.clone(),
            ]);
        let scale = common_scale(everything, GRID);
        let haxis = ScaledAxis::new(&sol.vertical_creases, &scale);
        let vaxis = ScaledAxis::new(&sol.horizontal_creases, &scale);
        let m_sign: i128 = if m.is_positive() { 1 } else { -1 };
        assert_eq!(m.abs(), Rational::one(), "seed {seed}");
        let intercept =
            scaled_int(&line.point.y, &scale) - m_sign * scaled_int(&line.point.x, &scale);
        // Slope sign, intercept, and x range of every cut.
        let cuts: Vec<(i128, i128, i128, i128)> = inst
            .cuts()
            .iter()
            .map(|s| {
                let Slope::Finite(k) = s.slope() else {
                    panic!("generated cuts have slope +1 or -1")
                };
                let k_sign: i128 = if k.is_positive() { 1 } else { -1 };
                let c = scaled_int(&s.a().y, &scale) - k_sign * scaled_int(&s.a().x, &scale);
                (
                    k_sign,
                    c,
                    scaled_int(s.x_min(), &scale),
                    scaled_int(s.x_max(), &scale),
                )
            })
            .collect();

        // width * k / GRID stays integral because GRID divides the scale.
        let width_step = scaled_int(paper.width(), &scale) / GRID;
        let height_step = scaled_int(paper.height(), &scale) / GRID;
        for _ in 0..10_000 {
            let x = width_step * rng.next_below(GRID as u64 + 1) as i128;
            let y = height_step * rng.next_below(GRID as u64 + 1) as i128;
            let folded_x = haxis.eval(x);
            let folded_y = vaxis.eval(y);
            let on_line = folded_y - m_sign * folded_x == intercept;
            let on_cut = cuts
                .iter()
                .any(|(k, c, xmin, xmax)| x >= *xmin && x <= *xmax && y - k * x == *c);
            assert_eq!(
                on_line, on_cut,
                "seed {seed}: scaled point ({x}, {y}) disagrees"
            );
            checks += 1;
        }
    }
    report(
        "criterion 6 (verifier soundness)",
        checks,
        start,
        Duration::from_secs(30),
    );
}

/// Criterion 7: whenever two points align in a folded state, the
/// coordinate-swapped points align with them.
#[test]
fn acceptance_7_alignment_factorization() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0xACCE_0007);
    let extent = Rational::from(16);
    for trial in 0..10_000 {
        let mut axis_creases = || {
            let mut set = std::collections::BTreeSet::new();
            for _ in 0..rng.next_below(5) {
                set.insert(&extent * &rng.next_fraction(64));
            }
            set.into_iter().collect::<Vec<_>>()
        };
        let hmap = FoldMap1D::new(Rational::zero(), extent.clone(), axis_creases()).unwrap();
        let vmap = FoldMap1D::new(Rational::zero(), extent.clone(), axis_creases()).unwrap();
        let fm = FoldMap2D::new(hmap, vmap);
        let p1 = Point::new(
            &extent * &Rational::new(rng.next_below(257) as i64, 256),
            &extent * &Rational::new(rng.next_below(257) as i64, 256),
        );
        let folded = fm.fold(&p1).unwrap();
        let aligned = fm.preimages(&folded);
        assert!(aligned.contains(&p1), "trial {trial}");
        let p2 = &aligned[rng.next_below(aligned.len() as u64) as usize];
        let swap_a = Point::new(p1.x.clone(), p2.y.clone());
        let swap_b = Point::new(p2.x.clone(), p1.y.clone());
        assert_eq!(fm.fold(&swap_a).unwrap(), folded, "trial {trial}");
        assert_eq!(fm.fold(&swap_b).unwrap(), folded, "trial {trial}");
    }
    report(
        "criterion 7 (alignment factorization)",
        10_000,
        start,
        Duration::from_secs(1),
    );
}

/// Criterion 8: byte-deterministic formats against the bundled corpus and
/// committed golden files.
#[test]
fn acceptance_8_format_determinism() {
    let start = Instant::now();
    let registry = Registry::builtin();
    let mut names: Vec<String> = fs::read_dir(instances_dir())
        .expect("bundled instances directory")
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    assert!(names.contains(&"letter_v.json".to_string()));
    assert!(names.contains(&"letter_x.json".to_string()));
    let mut cases = 0;
    for name in &names {
        let path = instances_dir().join(name);
        let bytes = fs::read(&path).unwrap();
        let doc = parse_instance(&bytes).unwrap_or_else(|e| panic!("{name}: {e}"));
        // Bundled files are canonically formatted: parse/serialize is the
        // identity on their bytes.
        assert_eq!(
            serialize_instance(&doc).as_bytes(),
            &bytes[..],
            "{name}: round trip must be byte-identical"
        );
        let solution = registry.solve(&doc).unwrap();
        let text = serialize_solution(&solution);
        let reparsed = parse_solution(text.as_bytes()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(reparsed, solution, "{name}: solution round trip");
        assert_eq!(
            serialize_solution(&reparsed),
            text,
            "{name}: solution bytes"
        );
        assert_eq!(
            render_svg(&doc, Some(&solution)),
            render_svg(&doc, Some(&solution)),
            "{name}: svg rendering must be deterministic"
        );
        cases += 1;
    }
    // Golden bytes for the V and X instances.
    for name in ["letter_v", "letter_x"] {
        let doc = load_instance(&format!("{name}.json"));
        let solution = registry.solve(&doc).unwrap();
        let golden_solution = fs::read(golden_dir().join(format!("{name}.solution.json")))
            .expect("committed golden solution");
        assert_eq!(
            serialize_solution(&solution).as_bytes(),
            &golden_solution[..],
            "{name}: solution golden bytes"
        );
        let golden_svg =
            fs::read(golden_dir().join(format!("{name}.svg"))).expect("committed golden svg");
        assert_eq!(
            render_svg(&doc, Some(&solution)).as_bytes(),
            &golden_svg[..],
            "{name}: svg golden bytes"
        );
    }
    report(
        "criterion 8 (format determinism)",
        cases + 2,
        start,
        Duration::from_secs(5),
    );
}
