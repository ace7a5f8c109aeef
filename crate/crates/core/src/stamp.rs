/// Epoch-stamped membership: clearing is O(1).
#[derive(Clone, Debug)]
pub(crate) struct Stamps {
    marks: Vec<u32>,
    epoch: u32,
}

impl Stamps {
    pub fn new(n: usize) -> Self {
        Stamps { marks: vec![0; n], epoch: 1 }
    }

    /// Forget every mark.
    #[inline]
    pub fn clear(&mut self) {
        if self.epoch == u32::MAX {
            self.marks.iter_mut().for_each(|m| *m = 0);
            self.epoch = 0;
        }
        self.epoch += 1;
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.marks[i] = self.epoch;
    }

    #[inline]
    pub fn unset(&mut self, i: usize) {
        self.marks[i] = 0;
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.marks[i] == self.epoch
    }

    /// Set and report whether it was newly set.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let fresh = self.marks[i] != self.epoch;
        self.marks[i] = self.epoch;
        fresh
    }
}
