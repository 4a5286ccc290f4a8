//! Strategy registry over the problem kinds.
//!
//! Each problem kind implements [`Problem`]: solve an instance document into
//! a solution document, and re-verify a claimed solution. The CLI and any
//! embedding select a strategy at runtime by the `kind` field of the parsed
//! document.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::foldcut;
use crate::formats::{
    foldcut_solution_doc, oned_interval_solution_doc, oned_signed_solution_doc,
    oned_unsigned_solution_doc, punch_solution_doc, InstanceDocument, Kind, SolutionDocument,
};
use crate::oned;
use crate::punch;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DispatchError {
    #[error("solver for {expected} received a {got} document")]
    KindMismatch { expected: Kind, got: Kind },
}

/// Result of re-checking a solution document against its instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub verified: bool,
    pub detail: String,
}

impl VerifyReport {
    fn ok(detail: impl Into<String>) -> Self {
        VerifyReport {
            verified: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        VerifyReport {
            verified: false,
            detail: detail.into(),
        }
    }
}

/// A solver strategy for one problem kind.
pub trait Problem: Send + Sync {
    fn kind(&self) -> Kind;
    fn solve(&self, instance: &InstanceDocument) -> Result<SolutionDocument, DispatchError>;
    fn verify(
        &self,
        instance: &InstanceDocument,
        solution: &SolutionDocument,
    ) -> Result<VerifyReport, DispatchError>;
}

/// Registry of [`Problem`] strategies keyed by kind.
pub struct Registry {
    entries: BTreeMap<Kind, Box<dyn Problem>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            entries: BTreeMap::new(),
        }
    }

    /// All five built-in problem kinds.
    pub fn builtin() -> Self {
        let mut reg = Registry::empty();
        reg.register(Box::new(OnedUnsignedProblem));
        reg.register(Box::new(OnedSignedProblem));
        reg.register(Box::new(OnedIntervalProblem));
        reg.register(Box::new(PunchProblem));
        reg.register(Box::new(FoldcutProblem));
        reg
    }

    /// Later registrations replace earlier ones of the same kind.
    pub fn register(&mut self, problem: Box<dyn Problem>) {
        self.entries.insert(problem.kind(), problem);
    }

    pub fn get(&self, kind: Kind) -> Option<&dyn Problem> {
        self.entries.get(&kind).map(|b| b.as_ref())
    }

    pub fn kinds(&self) -> impl Iterator<Item = Kind> + '_ {
        self.entries.keys().copied()
    }

    pub fn solve(&self, instance: &InstanceDocument) -> Result<SolutionDocument, DispatchError> {
        self.get(instance.kind())
            .expect("builtin registry covers all kinds")
            .solve(instance)
    }

    pub fn verify(
        &self,
        instance: &InstanceDocument,
        solution: &SolutionDocument,
    ) -> Result<VerifyReport, DispatchError> {
        self.get(instance.kind())
            .expect("builtin registry covers all kinds")
            .verify(instance, solution)
    }
}

fn mismatch<T>(expected: Kind, got: Kind) -> Result<T, DispatchError> {
    Err(DispatchError::KindMismatch { expected, got })
}

struct OnedUnsignedProblem;

impl Problem for OnedUnsignedProblem {
    fn kind(&self) -> Kind {
        Kind::OnedUnsigned
    }

    fn solve(&self, instance: &InstanceDocument) -> Result<SolutionDocument, DispatchError> {
        let InstanceDocument::OnedUnsigned(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        Ok(oned_unsigned_solution_doc(&oned::solve_unsigned(inst)))
    }

    fn verify(
        &self,
        instance: &InstanceDocument,
        solution: &SolutionDocument,
    ) -> Result<VerifyReport, DispatchError> {
        let InstanceDocument::OnedUnsigned(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        let SolutionDocument::OnedUnsigned { creases, cut_image } = solution else {
            return mismatch(self.kind(), solution.kind());
        };
        Ok(
            match oned::verify_unsigned(inst, creases, Some(cut_image)) {
                Ok(image) => VerifyReport::ok(format!("cuts align exactly at {image}")),
                Err(e) => VerifyReport::fail(e.to_string()),
            },
        )
    }
}

struct OnedSignedProblem;

impl Problem for OnedSignedProblem {
    fn kind(&self) -> Kind {
        Kind::OnedSigned
    }

    fn solve(&self, instance: &InstanceDocument) -> Result<SolutionDocument, DispatchError> {
        let InstanceDocument::OnedSigned(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        Ok(oned_signed_solution_doc(&oned::solve_signed(inst)))
    }

    fn verify(
        &self,
        instance: &InstanceDocument,
        solution: &SolutionDocument,
    ) -> Result<VerifyReport, DispatchError> {
        let InstanceDocument::OnedSigned(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        match solution {
            SolutionDocument::OnedSignedSolvable {
                creases,
                cut_image,
                flip_whole_paper,
            } => Ok(
                match oned::verify_signed(inst, creases, *flip_whole_paper, Some(cut_image)) {
                    Ok(image) => VerifyReport::ok(format!("cuts align exactly at {image}")),
                    Err(e) => VerifyReport::fail(e.to_string()),
                },
            ),
            SolutionDocument::OnedSignedUnsolvable { .. } => Ok(match oned::solve_signed(inst) {
                oned::SignedVerdict::Unsolvable(_) => {
                    VerifyReport::ok("instance is indeed unsolvable")
                }
                oned::SignedVerdict::Solvable(_) => {
                    VerifyReport::fail("instance is solvable, document claims otherwise")
                }
            }),
            other => mismatch(self.kind(), other.kind()),
        }
    }
}

struct OnedIntervalProblem;

impl Problem for OnedIntervalProblem {
    fn kind(&self) -> Kind {
        Kind::OnedInterval
    }

    fn solve(&self, instance: &InstanceDocument) -> Result<SolutionDocument, DispatchError> {
        let InstanceDocument::OnedInterval(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        Ok(oned_interval_solution_doc(&oned::solve_interval(inst)))
    }

    fn verify(
        &self,
        instance: &InstanceDocument,
        solution: &SolutionDocument,
    ) -> Result<VerifyReport, DispatchError> {
        let InstanceDocument::OnedInterval(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        match solution {
            SolutionDocument::OnedIntervalSolvable {
                creases,
                cut_image_interval,
            } => Ok(match oned::verify_interval(inst, creases) {
                Ok(oned::IntervalCheck::Verified(image)) => {
                    if image == *cut_image_interval {
                        VerifyReport::ok(format!(
                            "cut intervals align exactly onto [{}, {}]",
                            image.lo, image.hi
                        ))
                    } else {
                        VerifyReport::fail(format!(
                            "creases align onto [{}, {}], document claims [{}, {}]",
                            image.lo, image.hi, cut_image_interval.lo, cut_image_interval.hi
                        ))
                    }
                }
                Ok(oned::IntervalCheck::Failed(w)) => {
                    VerifyReport::fail(format!("alignment fails: {w:?}"))
                }
                Err(e) => VerifyReport::fail(e.to_string()),
            }),
            SolutionDocument::OnedIntervalUnsolvable { .. } => {
                Ok(match oned::solve_interval(inst) {
                    oned::IntervalVerdict::Unsolvable(_) => {
                        VerifyReport::ok("instance is indeed unsolvable")
                    }
                    oned::IntervalVerdict::Solvable(_) => {
                        VerifyReport::fail("instance is solvable, document claims otherwise")
                    }
                })
            }
            other => mismatch(self.kind(), other.kind()),
        }
    }
}

struct PunchProblem;

impl Problem for PunchProblem {
    fn kind(&self) -> Kind {
        Kind::Punch
    }

    fn solve(&self, instance: &InstanceDocument) -> Result<SolutionDocument, DispatchError> {
        let InstanceDocument::Punch(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        Ok(punch_solution_doc(&punch::solve_punch(inst)))
    }

    fn verify(
        &self,
        instance: &InstanceDocument,
        solution: &SolutionDocument,
    ) -> Result<VerifyReport, DispatchError> {
        let InstanceDocument::Punch(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        match solution {
            SolutionDocument::PunchSolvable {
                vertical_creases,
                horizontal_creases,
                punch_point,
                ..
            } => Ok(
                match punch::verify_punch(inst, vertical_creases, horizontal_creases, punch_point) {
                    Ok(punch::PunchCheck::Verified) => {
                        VerifyReport::ok("punch removes exactly the holes")
                    }
                    Ok(punch::PunchCheck::Failed(w)) => {
                        VerifyReport::fail(format!("punch is wrong: {w:?}"))
                    }
                    Err(e) => VerifyReport::fail(e.to_string()),
                },
            ),
            SolutionDocument::PunchUnsolvable { .. } => Ok(match punch::solve_punch(inst) {
                punch::PunchVerdict::Unsolvable { .. } => {
                    VerifyReport::ok("instance is indeed unsolvable")
                }
                punch::PunchVerdict::Solvable(_) => {
                    VerifyReport::fail("instance is solvable, document claims otherwise")
                }
            }),
            other => mismatch(self.kind(), other.kind()),
        }
    }
}

struct FoldcutProblem;

impl Problem for FoldcutProblem {
    fn kind(&self) -> Kind {
        Kind::Foldcut
    }

    fn solve(&self, instance: &InstanceDocument) -> Result<SolutionDocument, DispatchError> {
        let InstanceDocument::Foldcut(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        Ok(foldcut_solution_doc(&foldcut::solve(inst)))
    }

    fn verify(
        &self,
        instance: &InstanceDocument,
        solution: &SolutionDocument,
    ) -> Result<VerifyReport, DispatchError> {
        let InstanceDocument::Foldcut(inst) = instance else {
            return mismatch(self.kind(), instance.kind());
        };
        match solution {
            SolutionDocument::FoldcutSolvable {
                vertical_creases,
                horizontal_creases,
                folded_line,
                ..
            } => Ok(
                match foldcut::verify_cut_solution(inst, vertical_creases, horizontal_creases) {
                    Ok(foldcut::VerifyOutcome::Verified(line)) => {
                        if line.slope == folded_line.slope && line.contains(&folded_line.point) {
                            VerifyReport::ok("creases fold all cuts onto one line")
                        } else {
                            VerifyReport::fail(
                                "creases verify, but the document's folded line differs",
                            )
                        }
                    }
                    Ok(foldcut::VerifyOutcome::Failed(w)) => {
                        VerifyReport::fail(format!("verification fails: {w:?}"))
                    }
                    Err(e) => VerifyReport::fail(e.to_string()),
                },
            ),
            SolutionDocument::FoldcutUnsolvable { .. } => Ok(match foldcut::solve(inst) {
                foldcut::Verdict::Unsolvable { .. } => {
                    VerifyReport::ok("instance is indeed unsolvable")
                }
                foldcut::Verdict::Solvable(_) => {
                    VerifyReport::fail("instance is solvable, document claims otherwise")
                }
            }),
            other => mismatch(self.kind(), other.kind()),
        }
    }
}
