//! Minimal union-find keeping the smallest member of each class as root,
//! so class representatives are canonical.

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(size: usize) -> UnionFind {
        UnionFind {
            parent: (0..size as u32).collect(),
        }
    }

    pub fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let grand = self.parent[self.parent[v as usize] as usize];
            self.parent[v as usize] = grand;
            v = grand;
        }
        v
    }

    pub fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra < rb {
            self.parent[rb as usize] = ra;
        } else if rb < ra {
            self.parent[ra as usize] = rb;
        }
    }

    /// Classes as sorted vertex lists, ordered by smallest member.
    pub fn blocks(&mut self) -> Vec<Vec<u32>> {
        let size = self.parent.len();
        let mut by_root: Vec<Vec<u32>> = vec![Vec::new(); size];
        for v in 0..size as u32 {
            let r = self.find(v);
            by_root[r as usize].push(v);
        }
        by_root.retain(|b| !b.is_empty());
        by_root
    }
}
