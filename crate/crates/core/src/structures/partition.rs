use super::Label;

/// Blocks sorted internally and ordered by their minimum element.
pub type SetPartition = Vec<Vec<Label>>;

/// Optional restrictions on the partitions produced.
#[derive(Clone, Copy, Debug, Default)]
pub struct PartitionFilter {
    pub min_blocks: Option<usize>,
    pub max_blocks: Option<usize>,
    pub block_min_size: Option<usize>,
}

impl PartitionFilter {
    fn accepts(&self, p: &SetPartition) -> bool {
        self.min_blocks.is_none_or(|k| p.len() >= k)
            && self.max_blocks.is_none_or(|k| p.len() <= k)
            && self.block_min_size.is_none_or(|s| p.iter().all(|b| b.len() >= s))
    }
}

/// Restricted-growth-string enumeration of set partitions.
pub struct Partitions {
    labels: Vec<Label>,
    rgs: Vec<usize>,
    done: bool,
    filter: PartitionFilter,
}

pub fn partitions(labels: &[Label], filter: PartitionFilter) -> Partitions {
    let mut labels = labels.to_vec();
    labels.sort_unstable();
    Partitions { rgs: vec![0; labels.len()], done: labels.is_empty(), labels, filter }
}

impl Partitions {
    fn current(&self) -> SetPartition {
        let k = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![vec![]; k];
        for (&u, &b) in self.labels.iter().zip(&self.rgs) {
            blocks[b].push(u);
        }
        blocks
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            let bound = self.rgs[..i].iter().max().copied().unwrap_or(0) + 1;
            if self.rgs[i] < bound {
                self.rgs[i] += 1;
                for r in &mut self.rgs[i + 1..] {
                    *r = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        while !self.done {
            let p = self.current();
            self.advance();
            if self.filter.accepts(&p) {
                return Some(p);
            }
        }
        None
    }
}
