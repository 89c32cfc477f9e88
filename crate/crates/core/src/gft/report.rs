use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use super::grid::DiskGrid;

/// Which membership question a report answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassId {
    /// `p ≺ e^z`.
    Pe,
    /// Exponential starlikeness, `z f'/f ≺ e^z`.
    Se,
    /// Exponential convexity, `1 + z f''/f' ≺ e^z`.
    Ke,
    /// `|p| < 1/4`.
    #[serde(rename = "bound_quarter")]
    BoundQuarter,
    #[serde(rename = "custom")]
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Outcome of a sampled membership check.
///
/// The supremum is taken over the grid samples plus a golden-section
/// refinement around the worst sample. A `Pass` is numerical evidence from
/// sampling strictly inside the disk, not a proof.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub class_id: ClassId,
    pub verdict: Verdict,
    /// Largest sampled value of the checked quantity (`|log w|`, `|p|`, ...).
    pub sup_value: f64,
    /// Sample point where `sup_value` was attained.
    pub witness: Complex64,
    /// `threshold - sup_value`.
    pub margin: f64,
    pub threshold: f64,
    /// Supremum over each circle of the grid, innermost first.
    pub circle_sups: Vec<f64>,
    pub grid: DiskGrid,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

impl Serialize for MembershipReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct GridOut<'a> {
            radii: &'a [f64],
            angles: usize,
        }
        let mut st = s.serialize_struct("MembershipReport", 7)?;
        st.serialize_field("class", &self.class_id)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("sup", &self.sup_value)?;
        st.serialize_field("witness", &[self.witness.re, self.witness.im])?;
        st.serialize_field("margin", &self.margin)?;
        st.serialize_field("threshold", &self.threshold)?;
        st.serialize_field(
            "grid",
            &GridOut { radii: self.grid.radii(), angles: self.grid.angles_per_circle() },
        )?;
        st.end()
    }
}
