//! Normal decompositions of majorized pairs into Equal and Strict blocks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vectors::{majorize, SchmidtVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockTag {
    /// `x` and `y` agree pointwise on the block.
    Equal,
    /// `x` is strictly majorized by `y` on the block.
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// 0-based offset of the block in the sorted vectors.
    pub start: usize,
    pub x: SchmidtVector,
    pub y: SchmidtVector,
    pub tag: BlockTag,
}

impl Block {
    pub fn len(&self) -> usize {
        self.x.dim()
    }

    pub fn is_empty(&self) -> bool {
        self.x.dim() == 0
    }
}

/// One entry of `I′ ∪ D′` in natural order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    /// A single Equal block (1-based index).
    Equal(usize),
    /// A maximal run of consecutive Strict blocks (1-based indices).
    Strict(Vec<usize>),
}

impl Group {
    pub fn members(&self) -> Vec<usize> {
        match self {
            Group::Equal(i) => vec![*i],
            Group::Strict(run) => run.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalDecomposition {
    pub blocks: Vec<Block>,
    /// `I`: 1-based indices of Equal blocks.
    pub equal_set: Vec<usize>,
    /// `D`: 1-based indices of Strict blocks.
    pub strict_set: Vec<usize>,
    /// `I′`: singletons of `I`.
    pub equal_grouped: Vec<Vec<usize>>,
    /// `D′`: maximal runs of consecutive indices in `D`.
    pub strict_grouped: Vec<Vec<usize>>,
}

impl NormalDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// 1-based block accessor.
    pub fn block(&self, i: usize) -> &Block {
        &self.blocks[i - 1]
    }

    /// `D_0 < {k_1} < D_1 < ... < {k_p} < D_p`, empty runs omitted.
    pub fn natural_order(&self) -> Vec<Group> {
        let mut groups = Vec::new();
        let mut run = Vec::new();
        for (idx, block) in self.blocks.iter().enumerate() {
            match block.tag {
                BlockTag::Strict => run.push(idx + 1),
                BlockTag::Equal => {
                    if !run.is_empty() {
                        groups.push(Group::Strict(std::mem::take(&mut run)));
                    }
                    groups.push(Group::Equal(idx + 1));
                }
            }
        }
        if !run.is_empty() {
            groups.push(Group::Strict(run));
        }
        groups
    }
}

/// Splits `x ≺ y` at every equality prefix and merges adjacent pointwise-equal pieces.
pub fn normal_decompose(x: &SchmidtVector, y: &SchmidtVector) -> Result<NormalDecomposition> {
    let report = majorize(x, y)?;
    if !report.majorized {
        return Err(Error::NotMajorized);
    }
    let n = x.dim();
    let mut cuts = vec![0];
    cuts.extend(report.delta_set.iter().copied());
    cuts.push(n);

    let mut pieces: Vec<(usize, usize, BlockTag)> = Vec::new();
    for w in cuts.windows(2) {
        let (start, end) = (w[0], w[1]);
        // Interior prefixes of a piece are strict by construction, so only length-1 pieces
        // can be pointwise equal (their single entries agree because both ends are equalities).
        let tag = if end - start == 1 { BlockTag::Equal } else { BlockTag::Strict };
        match pieces.last_mut() {
            Some(last) if last.2 == BlockTag::Equal && tag == BlockTag::Equal => last.1 = end,
            _ => pieces.push((start, end, tag)),
        }
    }
    let blocks: Vec<Block> = pieces
        .into_iter()
        .map(|(start, end, tag)| Block {
            start,
            x: x.segment(start, end - start),
            y: y.segment(start, end - start),
            tag,
        })
        .collect();
    let equal_set: Vec<usize> =
        blocks.iter().enumerate().filter(|(_, b)| b.tag == BlockTag::Equal).map(|(i, _)| i + 1).collect();
    let strict_set: Vec<usize> =
        blocks.iter().enumerate().filter(|(_, b)| b.tag == BlockTag::Strict).map(|(i, _)| i + 1).collect();
    let (equal_grouped, strict_grouped) = group_indices(&equal_set, &strict_set);
    Ok(NormalDecomposition { blocks, equal_set, strict_set, equal_grouped, strict_grouped })
}

/// `I′` (singletons of `equal`) and `D′` (maximal consecutive runs of `strict`).
pub fn group_indices(equal: &[usize], strict: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let singles = equal.iter().map(|&i| vec![i]).collect();
    let mut sorted = strict.to_vec();
    sorted.sort_unstable();
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for s in sorted {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == s => run.push(s),
            _ => runs.push(vec![s]),
        }
    }
    (singles, runs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(raw: &[&str]) -> SchmidtVector {
        SchmidtVector::parse(raw, raw.len(), false).unwrap()
    }

    #[test]
    fn equal_strict_equal() {
        let x = v(&["2/5", "3/10", "1/5", "1/10"]);
        let y = v(&["2/5", "7/20", "3/20", "1/10"]);
        let nd = normal_decompose(&x, &y).unwrap();
        let tags: Vec<_> = nd.blocks.iter().map(|b| b.tag).collect();
        assert_eq!(tags, vec![BlockTag::Equal, BlockTag::Strict, BlockTag::Equal]);
        assert_eq!(nd.blocks[1].x, v(&["3/10", "1/5"]));
        assert_eq!(nd.blocks[1].y, v(&["7/20", "3/20"]));
        assert_eq!(nd.equal_set, vec![1, 3]);
        assert_eq!(nd.strict_set, vec![2]);
        assert_eq!(nd.natural_order(), vec![Group::Equal(1), Group::Strict(vec![2]), Group::Equal(3)]);
    }

    #[test]
    fn strict_pair_is_one_block() {
        let nd = normal_decompose(&v(&["2/5", "3/10", "1/5", "1/10"]), &v(&["1/2", "3/10", "3/20", "1/20"])).unwrap();
        assert_eq!(nd.len(), 1);
        assert!(nd.equal_set.is_empty());
        assert_eq!(nd.strict_set, vec![1]);
    }

    #[test]
    fn identical_pair_is_one_equal_block() {
        let x = v(&["1/2", "1/4", "1/4"]);
        let nd = normal_decompose(&x, &x).unwrap();
        assert_eq!(nd.len(), 1);
        assert_eq!(nd.blocks[0].tag, BlockTag::Equal);
        assert_eq!(nd.equal_set, vec![1]);
        assert!(nd.strict_set.is_empty());
    }

    #[test]
    fn not_majorized_rejected() {
        let r = normal_decompose(&v(&["1", "0"]), &v(&["1/2", "1/2"]));
        assert_eq!(r, Err(Error::NotMajorized));
    }

    #[test]
    fn grouping_examples() {
        let (i, d) = group_indices(&[1, 4, 7, 12], &[2, 3, 5, 6, 8, 9, 10, 11]);
        assert_eq!(i, vec![vec![1], vec![4], vec![7], vec![12]]);
        assert_eq!(d, vec![vec![2, 3], vec![5, 6], vec![8, 9, 10, 11]]);
        let (_, d) = group_indices(&[], &[1, 2, 3, 4]);
        assert_eq!(d, vec![vec![1, 2, 3, 4]]);
        let (i, d) = group_indices(&[2], &[1, 3, 4]);
        assert_eq!(i, vec![vec![2]]);
        assert_eq!(d, vec![vec![1], vec![3, 4]]);
    }
}
