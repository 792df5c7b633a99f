//! Sparse exact Gaussian elimination over `Q(ζ_N)`.

use std::collections::BTreeMap;

use crate::cyclofield::{CycScalar, Field};

/// A sparse row or column vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, CycScalar>;

/// Adds `coef * value` into `target[index]`, dropping cancelled entries.
pub fn add_term(target: &mut SparseVec, index: usize, value: &CycScalar) {
    if value.is_zero() {
        return;
    }
    match target.get_mut(&index) {
        Some(existing) => {
            *existing += value;
            if existing.is_zero() {
                target.remove(&index);
            }
        }
        None => {
            target.insert(index, value.clone());
        }
    }
}

/// Row echelon form built incrementally. Every stored row has a leading `1`
/// at its pivot column and no entries left of it.
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { pivots: BTreeMap::new() }
    }

    /// Reduces `row` against the stored pivots. Returns true if it was
    /// independent and became a new pivot row.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        loop {
            let Some((&col, lead)) = row.iter().next() else { return false };
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = lead.clone();
                    for (&c, v) in pivot {
                        add_term(&mut row, c, &-(&factor * v));
                    }
                }
                None => {
                    let inv = lead.inv().expect("leading entry is nonzero");
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space `{v : row · v = 0 for every inserted row}` in
    /// dimension `ncols`, one vector per free column, ordered by that column.
    pub fn kernel(&self, ncols: usize, field: &Field) -> Vec<SparseVec> {
        let reduced = self.reduced();
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !reduced.contains_key(c)) {
            let mut v = SparseVec::new();
            v.insert(free, CycScalar::one(field));
            for (&p, row) in &reduced {
                if let Some(c) = row.get(&free) {
                    v.insert(p, -c);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form: pivot columns cleared in every other row.
    fn reduced(&self) -> BTreeMap<usize, SparseVec> {
        let mut rows: BTreeMap<usize, SparseVec> = self.pivots.clone();
        let cols: Vec<usize> = rows.keys().rev().copied().collect();
        for &p in &cols {
            let pivot_row = rows[&p].clone();
            for (&q, row) in rows.iter_mut() {
                if q >= p {
                    continue;
                }
                if let Some(f) = row.get(&p).cloned() {
                    for (&c, v) in &pivot_row {
                        add_term(row, c, &-(&f * v));
                    }
                }
            }
        }
        rows
    }
}

/// Rank of a list of sparse rows.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Null-space basis of the matrix whose rows are given.
pub fn kernel(rows: impl IntoIterator<Item = SparseVec>, ncols: usize, field: &Field) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.kernel(ncols, field)
}
