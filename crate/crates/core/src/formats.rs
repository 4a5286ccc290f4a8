//! JSON instance and solution documents.
//!
//! Every scalar is a canonical rational string (`"p/q"` or `"p"`), never a
//! JSON number, and unknown fields are rejected. Serialization is
//! deterministic: fixed field order, compact separators, one trailing
//! newline. Parsing a canonically formatted document and re-serializing it
//! reproduces the input bytes. The field-by-field layout is documented in
//! `docs/formats.md`.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::foldcut::{
    CutInstance, FailStage, FoldedLine, MvAssignment, Solution2D, Verdict, Witness,
};
use crate::foldmap::Sign;
use crate::geometry::{Interval1D, PaperRect, Point, Segment};
use crate::oned::{
    CutImage, CutInterval, EqualSignPair, IntervalVerdict, IntervalWitness, OneDIntervalInstance,
    OneDSignedInstance, OneDSolution, OneDUnsignedInstance, SignedVerdict,
};
use crate::punch::{HoleInstance, PunchSolution, PunchVerdict};
use crate::rational::Rational;

/// The five problem kinds, as named on the wire.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    OnedUnsigned,
    OnedSigned,
    OnedInterval,
    Punch,
    Foldcut,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::OnedUnsigned,
        Kind::OnedSigned,
        Kind::OnedInterval,
        Kind::Punch,
        Kind::Foldcut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::OnedUnsigned => "oned-unsigned",
            Kind::OnedSigned => "oned-signed",
            Kind::OnedInterval => "oned-interval",
            Kind::Punch => "punch",
            Kind::Foldcut => "foldcut",
        }
    }

    pub fn from_name(name: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A parsed, validated instance of any problem kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceDocument {
    OnedUnsigned(OneDUnsignedInstance),
    OnedSigned(OneDSignedInstance),
    OnedInterval(OneDIntervalInstance),
    Punch(HoleInstance),
    Foldcut(CutInstance),
}

impl InstanceDocument {
    pub fn kind(&self) -> Kind {
        match self {
            InstanceDocument::OnedUnsigned(_) => Kind::OnedUnsigned,
            InstanceDocument::OnedSigned(_) => Kind::OnedSigned,
            InstanceDocument::OnedInterval(_) => Kind::OnedInterval,
            InstanceDocument::Punch(_) => Kind::Punch,
            InstanceDocument::Foldcut(_) => Kind::Foldcut,
        }
    }
}

/// A solution (or unsolvability) document for any problem kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionDocument {
    OnedUnsigned {
        creases: Vec<Rational>,
        cut_image: Rational,
    },
    OnedSignedSolvable {
        creases: Vec<Rational>,
        cut_image: Rational,
        flip_whole_paper: bool,
    },
    OnedSignedUnsolvable {
        first: (Rational, Sign),
        second: (Rational, Sign),
    },
    OnedIntervalSolvable {
        creases: Vec<Rational>,
        cut_image_interval: Interval1D,
    },
    OnedIntervalUnsolvable {
        witness: IntervalWitness,
    },
    PunchSolvable {
        vertical_creases: Vec<Rational>,
        horizontal_creases: Vec<Rational>,
        mv: MvAssignment,
        punch_point: Point,
    },
    PunchUnsolvable {
        missing_hole: Point,
    },
    FoldcutSolvable {
        vertical_creases: Vec<Rational>,
        horizontal_creases: Vec<Rational>,
        mv: Option<MvAssignment>,
        folded_line: FoldedLine,
        scale: Rational,
    },
    FoldcutUnsolvable {
        stage: FailStage,
        witness: Witness,
    },
}

impl SolutionDocument {
    pub fn kind(&self) -> Kind {
        match self {
            SolutionDocument::OnedUnsigned { .. } => Kind::OnedUnsigned,
            SolutionDocument::OnedSignedSolvable { .. }
            | SolutionDocument::OnedSignedUnsolvable { .. } => Kind::OnedSigned,
            SolutionDocument::OnedIntervalSolvable { .. }
            | SolutionDocument::OnedIntervalUnsolvable { .. } => Kind::OnedInterval,
            SolutionDocument::PunchSolvable { .. } | SolutionDocument::PunchUnsolvable { .. } => {
                Kind::Punch
            }
            SolutionDocument::FoldcutSolvable { .. }
            | SolutionDocument::FoldcutUnsolvable { .. } => Kind::Foldcut,
        }
    }

    pub fn is_solvable(&self) -> bool {
        !matches!(
            self,
            SolutionDocument::OnedSignedUnsolvable { .. }
                | SolutionDocument::OnedIntervalUnsolvable { .. }
                | SolutionDocument::PunchUnsolvable { .. }
                | SolutionDocument::FoldcutUnsolvable { .. }
        )
    }
}

/// Builds the solution document for a 1D point-problem solution.
pub fn oned_unsigned_solution_doc(sol: &OneDSolution) -> SolutionDocument {
    let CutImage::Point(image) = &sol.cut_image else {
        panic!("point problems produce point images")
    };
    SolutionDocument::OnedUnsigned {
        creases: sol.creases.clone(),
        cut_image: image.clone(),
    }
}

pub fn oned_signed_solution_doc(verdict: &SignedVerdict) -> SolutionDocument {
    match verdict {
        SignedVerdict::Solvable(sol) => {
            let CutImage::Point(image) = &sol.cut_image else {
                panic!("point problems produce point images")
            };
            SolutionDocument::OnedSignedSolvable {
                creases: sol.creases.clone(),
                cut_image: image.clone(),
                flip_whole_paper: sol.flip_whole_paper,
            }
        }
        SignedVerdict::Unsolvable(EqualSignPair { first, second }) => {
            SolutionDocument::OnedSignedUnsolvable {
                first: first.clone(),
                second: second.clone(),
            }
        }
    }
}

pub fn oned_interval_solution_doc(verdict: &IntervalVerdict) -> SolutionDocument {
    match verdict {
        IntervalVerdict::Solvable(sol) => {
            let CutImage::Interval(image) = &sol.cut_image else {
                panic!("interval problems produce interval images")
            };
            SolutionDocument::OnedIntervalSolvable {
                creases: sol.creases.clone(),
                cut_image_interval: image.clone(),
            }
        }
        IntervalVerdict::Unsolvable(witness) => SolutionDocument::OnedIntervalUnsolvable {
            witness: witness.clone(),
        },
    }
}

pub fn punch_solution_doc(verdict: &PunchVerdict) -> SolutionDocument {
    match verdict {
        PunchVerdict::Solvable(PunchSolution {
            vertical_creases,
            horizontal_creases,
            punch_point,
            mv,
        }) => SolutionDocument::PunchSolvable {
            vertical_creases: vertical_creases.clone(),
            horizontal_creases: horizontal_creases.clone(),
            mv: mv.clone(),
            punch_point: punch_point.clone(),
        },
        PunchVerdict::Unsolvable { missing } => SolutionDocument::PunchUnsolvable {
            missing_hole: missing.clone(),
        },
    }
}

pub fn foldcut_solution_doc(verdict: &Verdict) -> SolutionDocument {
    match verdict {
        Verdict::Solvable(Solution2D {
            vertical_creases,
            horizontal_creases,
            mv,
            folded_line,
            scale,
        }) => SolutionDocument::FoldcutSolvable {
            vertical_creases: vertical_creases.clone(),
            horizontal_creases: horizontal_creases.clone(),
            mv: mv.clone(),
            folded_line: folded_line.clone(),
            scale: scale.clone(),
        },
        Verdict::Unsolvable { stage, witness } => SolutionDocument::FoldcutUnsolvable {
            stage: *stage,
            witness: witness.clone(),
        },
    }
}

/// A parse failure located by JSON path.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {message}")]
    Located { path: String, message: String },
}

impl ParseError {
    fn at(path: &str, message: impl fmt::Display) -> ParseError {
        ParseError::Located {
            path: path.to_string(),
            message: message.to_string(),
        }
    }
}

fn from_slice_located<T: DeserializeOwned>(bytes: &[u8]) -> Result<T, ParseError> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    serde_path_to_error::deserialize(&mut de).map_err(|e| ParseError::Located {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

fn to_string_doc<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("documents serialize without errors");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// Wire structs. Field order is the canonical serialization order.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PaperWire {
    width: Rational,
    height: Rational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SignedPointWire {
    position: Rational,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CutIntervalWire {
    interval: Interval1D,
    required_creases: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedUnsignedInstanceWire {
    kind: String,
    domain: (Rational, Rational),
    cut_points: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedSignedInstanceWire {
    kind: String,
    domain: (Rational, Rational),
    cut_points: Vec<SignedPointWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedIntervalInstanceWire {
    kind: String,
    domain: (Rational, Rational),
    cut_intervals: Vec<CutIntervalWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PunchInstanceWire {
    kind: String,
    paper: PaperWire,
    holes: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FoldcutInstanceWire {
    kind: String,
    paper: PaperWire,
    cuts: Vec<Segment>,
}

/// Parses and validates an instance document.
pub fn parse_instance(bytes: &[u8]) -> Result<InstanceDocument, ParseError> {
    #[derive(Deserialize)]
    struct Probe {
        kind: String,
    }
    let probe: Probe = from_slice_located(bytes)?;
    let kind = Kind::from_name(&probe.kind)
        .ok_or_else(|| ParseError::at("kind", format!("unknown kind {:?}", probe.kind)))?;
    match kind {
        Kind::OnedUnsigned => {
            let w: OnedUnsignedInstanceWire = from_slice_located(bytes)?;
            let inst = OneDUnsignedInstance::new(w.domain.0, w.domain.1, w.cut_points)
                .map_err(|e| ParseError::at("cut_points", e))?;
            Ok(InstanceDocument::OnedUnsigned(inst))
        }
        Kind::OnedSigned => {
            let w: OnedSignedInstanceWire = from_slice_located(bytes)?;
            let points = w
                .cut_points
                .into_iter()
                .map(|p| (p.position, p.sign))
                .collect();
            let inst = OneDSignedInstance::new(w.domain.0, w.domain.1, points)
                .map_err(|e| ParseError::at("cut_points", e))?;
            Ok(InstanceDocument::OnedSigned(inst))
        }
        Kind::OnedInterval => {
            let w: OnedIntervalInstanceWire = from_slice_located(bytes)?;
            let intervals = w
                .cut_intervals
                .into_iter()
                .map(|ci| CutInterval {
                    interval: ci.interval,
                    required_creases: ci.required_creases,
                })
                .collect();
            let inst = OneDIntervalInstance::new(w.domain.0, w.domain.1, intervals)
                .map_err(|e| ParseError::at("cut_intervals", e))?;
            Ok(InstanceDocument::OnedInterval(inst))
        }
        Kind::Punch => {
            let w: PunchInstanceWire = from_slice_located(bytes)?;
            let paper = PaperRect::new(w.paper.width, w.paper.height)
                .map_err(|e| ParseError::at("paper", e))?;
            let inst = HoleInstance::new(paper, w.holes).map_err(|e| ParseError::at("holes", e))?;
            Ok(InstanceDocument::Punch(inst))
        }
        Kind::Foldcut => {
            let w: FoldcutInstanceWire = from_slice_located(bytes)?;
            let paper = PaperRect::new(w.paper.width, w.paper.height)
                .map_err(|e| ParseError::at("paper", e))?;
            let inst = CutInstance::new(paper, w.cuts).map_err(|e| ParseError::at("cuts", e))?;
            Ok(InstanceDocument::Foldcut(inst))
        }
    }
}

/// Canonical serialization of an instance document.
///
/// Note that foldcut instances serialize their *ingested* cuts: collinear
/// touching or overlapping input segments have been merged.
pub fn serialize_instance(doc: &InstanceDocument) -> String {
    match doc {
        InstanceDocument::OnedUnsigned(inst) => to_string_doc(&OnedUnsignedInstanceWire {
            kind: Kind::OnedUnsigned.name().to_string(),
            domain: (inst.lo().clone(), inst.hi().clone()),
            cut_points: inst.cut_points().to_vec(),
        }),
        InstanceDocument::OnedSigned(inst) => to_string_doc(&OnedSignedInstanceWire {
            kind: Kind::OnedSigned.name().to_string(),
            domain: (inst.lo().clone(), inst.hi().clone()),
            cut_points: inst
                .cut_points()
                .iter()
                .map(|(position, sign)| SignedPointWire {
                    position: position.clone(),
                    sign: *sign,
                })
                .collect(),
        }),
        InstanceDocument::OnedInterval(inst) => to_string_doc(&OnedIntervalInstanceWire {
            kind: Kind::OnedInterval.name().to_string(),
            domain: (inst.lo().clone(), inst.hi().clone()),
            cut_intervals: inst
                .cut_intervals()
                .iter()
                .map(|ci| CutIntervalWire {
                    interval: ci.interval.clone(),
                    required_creases: ci.required_creases.clone(),
                })
                .collect(),
        }),
        InstanceDocument::Punch(inst) => to_string_doc(&PunchInstanceWire {
            kind: Kind::Punch.name().to_string(),
            paper: PaperWire {
                width: inst.paper().width().clone(),
                height: inst.paper().height().clone(),
            },
            holes: inst.holes().to_vec(),
        }),
        InstanceDocument::Foldcut(inst) => to_string_doc(&FoldcutInstanceWire {
            kind: Kind::Foldcut.name().to_string(),
            paper: PaperWire {
                width: inst.paper().width().clone(),
                height: inst.paper().height().clone(),
            },
            cuts: inst.cuts().to_vec(),
        }),
    }
}

// Solution wires.

const VERDICT_SOLVABLE: &str = "solvable";
const VERDICT_UNSOLVABLE: &str = "unsolvable";
const STAGE_SIGNS: &str = "signs-do-not-alternate";
const STAGE_INTERVAL: &str = "canonical-verification-failed";
const STAGE_PUNCH: &str = "not-combinatorial-rectangle";

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedUnsignedSolutionWire {
    kind: String,
    verdict: String,
    creases: Vec<Rational>,
    cut_image: Rational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedSignedSolvableWire {
    kind: String,
    verdict: String,
    creases: Vec<Rational>,
    cut_image: Rational,
    flip_whole_paper: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedSignedUnsolvableWire {
    kind: String,
    verdict: String,
    stage: String,
    first: SignedPointWire,
    second: SignedPointWire,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedIntervalSolvableWire {
    kind: String,
    verdict: String,
    creases: Vec<Rational>,
    cut_image_interval: Interval1D,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OnedIntervalUnsolvableWire {
    kind: String,
    verdict: String,
    stage: String,
    witness: IntervalWitness,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PunchSolvableWire {
    kind: String,
    verdict: String,
    vertical_creases: Vec<Rational>,
    horizontal_creases: Vec<Rational>,
    mv: MvAssignment,
    punch_point: Point,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PunchUnsolvableWire {
    kind: String,
    verdict: String,
    stage: String,
    missing_hole: Point,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FoldcutSolvableWire {
    kind: String,
    verdict: String,
    vertical_creases: Vec<Rational>,
    horizontal_creases: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mv: Option<MvAssignment>,
    folded_line: FoldedLine,
    scale: Rational,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FoldcutUnsolvableWire {
    kind: String,
    verdict: String,
    stage: FailStage,
    witness: Witness,
}

pub fn parse_solution(bytes: &[u8]) -> Result<SolutionDocument, ParseError> {
    #[derive(Deserialize)]
    struct Probe {
        kind: String,
        verdict: String,
    }
    let probe: Probe = from_slice_located(bytes)?;
    let kind = Kind::from_name(&probe.kind)
        .ok_or_else(|| ParseError::at("kind", format!("unknown kind {:?}", probe.kind)))?;
    let solvable = match probe.verdict.as_str() {
        VERDICT_SOLVABLE => true,
        VERDICT_UNSOLVABLE => false,
        other => {
            return Err(ParseError::at(
                "verdict",
                format!("unknown verdict {other:?}"),
            ))
        }
    };
    let expect_stage = |got: &str, want: &str| {
        if got == want {
            Ok(())
        } else {
            Err(ParseError::at(
                "stage",
                format!("expected {want:?}, got {got:?}"),
            ))
        }
    };
    match (kind, solvable) {
        (Kind::OnedUnsigned, true) => {
            let w: OnedUnsignedSolutionWire = from_slice_located(bytes)?;
            Ok(SolutionDocument::OnedUnsigned {
                creases: w.creases,
                cut_image: w.cut_image,
            })
        }
        (Kind::OnedUnsigned, false) => Err(ParseError::at(
            "verdict",
            "the unsigned point problem is always solvable",
        )),
        (Kind::OnedSigned, true) => {
            let w: OnedSignedSolvableWire = from_slice_located(bytes)?;
            Ok(SolutionDocument::OnedSignedSolvable {
                creases: w.creases,
                cut_image: w.cut_image,
                flip_whole_paper: w.flip_whole_paper,
            })
        }
        (Kind::OnedSigned, false) => {
            let w: OnedSignedUnsolvableWire = from_slice_located(bytes)?;
            expect_stage(&w.stage, STAGE_SIGNS)?;
            Ok(SolutionDocument::OnedSignedUnsolvable {
                first: (w.first.position, w.first.sign),
                second: (w.second.position, w.second.sign),
            })
        }
        (Kind::OnedInterval, true) => {
            let w: OnedIntervalSolvableWire = from_slice_located(bytes)?;
            Ok(SolutionDocument::OnedIntervalSolvable {
                creases: w.creases,
                cut_image_interval: w.cut_image_interval,
            })
        }
        (Kind::OnedInterval, false) => {
            let w: OnedIntervalUnsolvableWire = from_slice_located(bytes)?;
            expect_stage(&w.stage, STAGE_INTERVAL)?;
            Ok(SolutionDocument::OnedIntervalUnsolvable { witness: w.witness })
        }
        (Kind::Punch, true) => {
            let w: PunchSolvableWire = from_slice_located(bytes)?;
            Ok(SolutionDocument::PunchSolvable {
                vertical_creases: w.vertical_creases,
                horizontal_creases: w.horizontal_creases,
                mv: w.mv,
                punch_point: w.punch_point,
            })
        }
        (Kind::Punch, false) => {
            let w: PunchUnsolvableWire = from_slice_located(bytes)?;
            expect_stage(&w.stage, STAGE_PUNCH)?;
            Ok(SolutionDocument::PunchUnsolvable {
                missing_hole: w.missing_hole,
            })
        }
        (Kind::Foldcut, true) => {
            let w: FoldcutSolvableWire = from_slice_located(bytes)?;
            Ok(SolutionDocument::FoldcutSolvable {
                vertical_creases: w.vertical_creases,
                horizontal_creases: w.horizontal_creases,
                mv: w.mv,
                folded_line: w.folded_line,
                scale: w.scale,
            })
        }
        (Kind::Foldcut, false) => {
            let w: FoldcutUnsolvableWire = from_slice_located(bytes)?;
            Ok(SolutionDocument::FoldcutUnsolvable {
                stage: w.stage,
                witness: w.witness,
            })
        }
    }
}

pub fn serialize_solution(doc: &SolutionDocument) -> String {
    let kind = doc.kind().name().to_string();
    match doc {
        SolutionDocument::OnedUnsigned { creases, cut_image } => {
            to_string_doc(&OnedUnsignedSolutionWire {
                kind,
                verdict: VERDICT_SOLVABLE.to_string(),
                creases: creases.clone(),
                cut_image: cut_image.clone(),
            })
        }
        SolutionDocument::OnedSignedSolvable {
            creases,
            cut_image,
            flip_whole_paper,
        } => to_string_doc(&OnedSignedSolvableWire {
            kind,
            verdict: VERDICT_SOLVABLE.to_string(),
            creases: creases.clone(),
            cut_image: cut_image.clone(),
            flip_whole_paper: *flip_whole_paper,
        }),
        SolutionDocument::OnedSignedUnsolvable { first, second } => {
            to_string_doc(&OnedSignedUnsolvableWire {
                kind,
                verdict: VERDICT_UNSOLVABLE.to_string(),
                stage: STAGE_SIGNS.to_string(),
                first: SignedPointWire {
                    position: first.0.clone(),
                    sign: first.1,
                },
                second: SignedPointWire {
                    position: second.0.clone(),
                    sign: second.1,
                },
            })
        }
        SolutionDocument::OnedIntervalSolvable {
            creases,
            cut_image_interval,
        } => to_string_doc(&OnedIntervalSolvableWire {
            kind,
            verdict: VERDICT_SOLVABLE.to_string(),
            creases: creases.clone(),
            cut_image_interval: cut_image_interval.clone(),
        }),
        SolutionDocument::OnedIntervalUnsolvable { witness } => {
            to_string_doc(&OnedIntervalUnsolvableWire {
                kind,
                verdict: VERDICT_UNSOLVABLE.to_string(),
                stage: STAGE_INTERVAL.to_string(),
                witness: witness.clone(),
            })
        }
        SolutionDocument::PunchSolvable {
            vertical_creases,
            horizontal_creases,
            mv,
            punch_point,
        } => to_string_doc(&PunchSolvableWire {
            kind,
            verdict: VERDICT_SOLVABLE.to_string(),
            vertical_creases: vertical_creases.clone(),
            horizontal_creases: horizontal_creases.clone(),
            mv: mv.clone(),
            punch_point: punch_point.clone(),
        }),
        SolutionDocument::PunchUnsolvable { missing_hole } => to_string_doc(&PunchUnsolvableWire {
            kind,
            verdict: VERDICT_UNSOLVABLE.to_string(),
            stage: STAGE_PUNCH.to_string(),
            missing_hole: missing_hole.clone(),
        }),
        SolutionDocument::FoldcutSolvable {
            vertical_creases,
            horizontal_creases,
            mv,
            folded_line,
            scale,
        } => to_string_doc(&FoldcutSolvableWire {
            kind,
            verdict: VERDICT_SOLVABLE.to_string(),
            vertical_creases: vertical_creases.clone(),
            horizontal_creases: horizontal_creases.clone(),
            mv: mv.clone(),
            folded_line: folded_line.clone(),
            scale: scale.clone(),
        }),
        SolutionDocument::FoldcutUnsolvable { stage, witness } => {
            to_string_doc(&FoldcutUnsolvableWire {
                kind,
                verdict: VERDICT_UNSOLVABLE.to_string(),
                stage: *stage,
                witness: witness.clone(),
            })
        }
    }
}
