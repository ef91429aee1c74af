use super::MergePair;
use crate::rotation::RotationSequence;

/// Brute-force merging on a rotation sequence: repeatedly applies the
/// leftmost pair `i < j` with equal axes (up to sign) and no anticommuting
/// axis strictly between them, until none is left. Angles are treated as
/// opaque, so merged rotations are never folded into the Clifford part.
pub fn naive_problem1(seq: &RotationSequence) -> Vec<MergePair> {
    let axes = seq.axes();
    let mut live = vec![true; axes.len()];
    let mut pairs = Vec::new();
    'search: loop {
        for i in (0..axes.len()).filter(|&i| live[i]) {
            for j in (i + 1..axes.len()).filter(|&j| live[j]) {
                if axes[i].equal_up_to_sign(&axes[j]) {
                    let sign = axes[j].sign_ratio(&axes[i]).expect("equal masks");
                    pairs.push(MergePair { i, j, sign });
                    live[i] = false;
                    continue 'search;
                }
                if axes[i].anticommutes_with(&axes[j]) {
                    break;
                }
            }
        }
        return pairs;
    }
}
