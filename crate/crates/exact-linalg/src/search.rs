/// Deterministic sample points for deciding whether a polynomial vanishes
/// identically on `E^dim`.
///
/// If `f` is a nonzero polynomial of total degree at most `degree`, pick a
/// monomial of `f`; it involves at most `k = min(degree, dim)` variables.
/// Setting every variable outside some `k`-set `T` containing them to zero
/// leaves a nonzero polynomial in the variables of `T`, of degree at most
/// `degree` in each, and such a polynomial cannot vanish on the grid
/// `{1, ..., degree + 1}^T`. So `f` is nonzero at one of the yielded points
/// iff it is nonzero somewhere.
///
/// Points come in order of growing support so that sparse witnesses are
/// found first; the smaller supports are redundant for the argument.
#[derive(Debug, Clone)]
pub struct SmallSupportPoints {
    dim: usize,
    values: i64,
    max_support: usize,
    support: Vec<usize>,
    assignment: Vec<i64>,
    done: bool,
    yielded_origin: bool,
}

impl SmallSupportPoints {
    pub fn new(dim: usize, degree: usize) -> Self {
        let max_support = degree.min(dim);
        Self {
            dim,
            values: degree as i64 + 1,
            max_support,
            support: Vec::new(),
            assignment: Vec::new(),
            done: false,
            yielded_origin: false,
        }
    }

    fn advance_assignment(&mut self) -> bool {
        for a in self.assignment.iter_mut().rev() {
            if *a < self.values {
                *a += 1;
                return true;
            }
            *a = 1;
        }
        false
    }

    fn advance_support(&mut self) -> bool {
        let k = self.support.len();
        for i in (0..k).rev() {
            if self.support[i] < self.dim - k + i {
                self.support[i] += 1;
                for j in i + 1..k {
                    self.support[j] = self.support[j - 1] + 1;
                }
                return true;
            }
        }
        if k < self.max_support {
            self.support = (0..k + 1).collect();
            return true;
        }
        false
    }

    fn point(&self) -> Vec<i64> {
        let mut p = vec![0; self.dim];
        for (&i, &a) in self.support.iter().zip(&self.assignment) {
            p[i] = a;
        }
        p
    }
}

impl Iterator for SmallSupportPoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        if self.dim == 0 || self.max_support == 0 {
            self.done = true;
            return (!self.yielded_origin).then(|| {
                self.yielded_origin = true;
                vec![0; self.dim]
            });
        }
        if self.support.is_empty() {
            self.support = vec![0];
            self.assignment = vec![1];
            return Some(self.point());
        }
        if !self.advance_assignment() {
            if !self.advance_support() {
                self.done = true;
                return None;
            }
            self.assignment = vec![1; self.support.len()];
        }
        Some(self.point())
    }
}
