//! Edge labelings, induced vertex colors, and the ground-truth verifier.
//!
//! [`verify`] is the single source of truth for validity in this crate: every
//! construction and every solver witness is checked through it, and it never
//! fails by exception — problems are reported, not thrown.

mod format;

pub use format::{parse_labeling, parse_text, serialize_labeling, serialize_text, ParseError};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graphs::{EdgeId, Graph, VertexId};

/// Label value. Labels are `1..=q` in a proper labeling; intermediate
/// sequence arithmetic may step outside that range, so this is signed.
pub type Label = i64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("edge {0} has no label")]
    MissingLabel(EdgeId),
}

/// An assignment of one integer label per edge, in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<Label>,
}

impl EdgeLabeling {
    pub fn new(labels: Vec<Label>) -> Self {
        EdgeLabeling { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Label {
        self.labels[e]
    }

    /// The complementary labeling `e -> q + 1 - f(e)`.
    pub fn complement(&self) -> EdgeLabeling {
        let q = self.labels.len() as Label;
        EdgeLabeling::new(self.labels.iter().map(|&l| q + 1 - l).collect())
    }
}

/// Full outcome of checking a labeling against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Labels are exactly a bijection onto `1..=q`.
    pub is_bijection: bool,
    /// Adjacent vertex pairs with equal induced color, by increasing edge id.
    pub violations: Vec<(VertexId, VertexId)>,
    /// Induced color per vertex.
    pub colors: Vec<Label>,
    /// Distinct induced colors.
    pub color_set: BTreeSet<Label>,
    /// `c(f)`, the number of distinct induced colors.
    pub color_count: usize,
    /// Bijective and free of adjacent-equal conflicts.
    pub is_local_antimagic: bool,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bijection: {}",
            if self.is_bijection { "yes" } else { "no" }
        )?;
        write!(f, "colors:")?;
        for c in &self.color_set {
            write!(f, " {c}")?;
        }
        writeln!(f)?;
        writeln!(f, "c(f) = {}", self.color_count)?;
        if self.violations.is_empty() {
            writeln!(f, "conflicts: none")?;
        } else {
            write!(f, "conflicts:")?;
            for &(a, b) in &self.violations {
                write!(f, " ({a},{b})")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "local antimagic: {}",
            if self.is_local_antimagic { "yes" } else { "no" }
        )
    }
}

/// Induced color of every vertex: the sum of labels on its incident edges.
pub fn induced_colors(g: &Graph, f: &EdgeLabeling) -> Result<Vec<Label>, LabelingError> {
    if f.len() != g.edge_count() {
        return Err(LabelingError::MissingLabel(f.len().min(g.edge_count())));
    }
    let mut colors = vec![0; g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        colors[a] += f.get(e);
        colors[b] += f.get(e);
    }
    Ok(colors)
}

/// Checks `f` against `g` and reports everything: bijectivity, induced
/// colors, adjacent-equal conflicts and the color count.
///
/// Total: a labeling of the wrong length is reported as a non-bijection, with
/// colors computed over the labels that are present.
pub fn verify(g: &Graph, f: &EdgeLabeling) -> VerificationReport {
    let q = g.edge_count();
    let mut is_bijection = f.len() == q;
    if is_bijection {
        let mut sorted: Vec<Label> = f.labels().to_vec();
        sorted.sort_unstable();
        is_bijection = sorted
            .iter()
            .enumerate()
            .all(|(i, &l)| l == (i + 1) as Label);
    }

    let mut colors = vec![0; g.vertex_count()];
    for (e, &(a, b)) in g.edges().iter().enumerate().take(f.len()) {
        colors[a] += f.get(e);
        colors[b] += f.get(e);
    }

    let mut violations = Vec::new();
    for &(a, b) in g.edges().iter() {
        if colors[a] == colors[b] {
            violations.push((a.min(b), a.max(b)));
        }
    }

    let color_set: BTreeSet<Label> = colors.iter().copied().collect();
    let color_count = color_set.len();
    let is_local_antimagic = is_bijection && violations.is_empty();
    VerificationReport {
        is_bijection,
        violations,
        colors,
        color_set,
        color_count,
        is_local_antimagic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_theta, ThetaSpec};

    fn theta(lengths: &[usize]) -> Graph {
        build_theta(&ThetaSpec::new(lengths.to_vec()).unwrap())
    }

    #[test]
    fn path_colors() {
        // u - w - v with labels 1, 2: spider with two unit legs.
        let g = crate::graphs::build_spider(
            &crate::graphs::SpiderSpec::new(vec![1, 1]).unwrap(),
        );
        let f = EdgeLabeling::new(vec![1, 2]);
        let colors = induced_colors(&g, &f).unwrap();
        // Vertex 0 is the middle (core) vertex here.
        assert_eq!(colors, vec![3, 1, 2]);
    }

    #[test]
    fn triangle_c3() {
        let g = theta(&[1, 2]);
        let f = EdgeLabeling::new(vec![1, 2, 3]);
        let report = verify(&g, &f);
        assert!(report.is_local_antimagic);
        assert_eq!(
            report.color_set.iter().copied().collect::<Vec<_>>(),
            vec![3, 4, 5]
        );
        assert_eq!(report.color_count, 3);
    }

    #[test]
    fn handshake_identity() {
        // Sum of induced colors counts every label twice.
        let g = theta(&[2, 3, 4]);
        let q = g.edge_count() as i64;
        let f = EdgeLabeling::new(vec![4, 7, 1, 9, 2, 8, 5, 3, 6]);
        let colors = induced_colors(&g, &f).unwrap();
        assert_eq!(colors.iter().sum::<i64>(), q * (q + 1));
    }

    #[test]
    fn missing_label_is_an_error() {
        let g = theta(&[2, 2]);
        let f = EdgeLabeling::new(vec![1, 2, 3]);
        assert_eq!(induced_colors(&g, &f), Err(LabelingError::MissingLabel(3)));
    }

    #[test]
    fn verifier_reports_never_panics() {
        let g = theta(&[2, 2]);
        // Wrong length: reported, not thrown.
        let report = verify(&g, &EdgeLabeling::new(vec![1, 2]));
        assert!(!report.is_bijection);
        assert!(!report.is_local_antimagic);
        // Repeated label: not a bijection.
        let report = verify(&g, &EdgeLabeling::new(vec![1, 1, 2, 3]));
        assert!(!report.is_bijection);
    }

    #[test]
    fn conflict_detection() {
        // theta(1,2): u and v adjacent; force equal colors there.
        // Labels: uv=3, path edges 1,2 -> f+(u) = 4, f+(v) = 5, w = 3. Valid.
        let g = theta(&[1, 2]);
        let ok = verify(&g, &EdgeLabeling::new(vec![3, 1, 2]));
        assert!(ok.is_local_antimagic);
        // Labels: uv=1, path 3,2: f+(u) = 4, f+(w) = 5, f+(v) = 3. Valid too;
        // instead check a genuine conflict on theta(2,2) = C4.
        let c4 = theta(&[2, 2]);
        // u gets 1+2=3, v gets 4+... pick labels so the two interior vertices
        // clash with an endpoint: labels (1,4),(2,3): u=3, w1=5, v=7, w2=5.
        let report = verify(&c4, &EdgeLabeling::new(vec![1, 4, 2, 3]));
        assert!(report.is_bijection);
        assert!(!report.is_local_antimagic);
        assert!(!report.violations.is_empty());
    }
}
