//! Line-oriented event log of a Buchberger run.

use std::fmt;

use crate::grading::Degree;
use crate::term::PowerProduct;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    /// Input generator `index` (0-based in the caller's list) enters step (2b).
    Gen { index: usize },
    /// The pair of basis elements `left < right` enters step (2b).
    Pair { left: usize, right: usize },
    /// `U := U - c·multiplier·G_reducer`.
    RedStep { reducer: usize, multiplier: PowerProduct },
    /// `U := y^power·U`.
    YMul { power: PowerProduct },
    /// `U := U^sat`, which divided `U` by `removed`. Rendered as `SAT`.
    Sat { removed: PowerProduct },
    /// The remainder was added to the basis as element `index`.
    Add { index: usize, sugar: Degree },
    /// The remainder vanished.
    Zero,
}

/// Events plus the indeterminate names used to render multipliers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    pub names: Vec<String>,
    pub events: Vec<Event>,
}

impl Transcript {
    pub fn new(names: Vec<String>) -> Self {
        Transcript { names, events: Vec::new() }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            match e {
                Event::Gen { index } => writeln!(f, "GEN {index}")?,
                Event::Pair { left, right } => writeln!(f, "PAIR {left} {right}")?,
                Event::RedStep { reducer, multiplier } => {
                    writeln!(f, "REDSTEP {reducer} {}", multiplier.display(&self.names))?
                }
                Event::YMul { power } => writeln!(f, "YMUL {}", power.display(&self.names))?,
                Event::Sat { .. } => writeln!(f, "SAT")?,
                Event::Add { index, sugar } => writeln!(f, "ADD {index} SUGAR {sugar}")?,
                Event::Zero => writeln!(f, "ZERO")?,
            }
        }
        Ok(())
    }
}
