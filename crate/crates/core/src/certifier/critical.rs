//! Critical functions: the per-family threshold `mu(m)` on the total length
//! that separates regular profiles (closed-form estimates suffice) from
//! pathological ones (finite exact checks), plus the minimality rescan.

use crate::groups::GroupSpec;
use crate::{Error, Result};

/// Stored critical-function table for a family. Values beyond the table tail
/// are constant.
#[derive(Debug, Clone)]
pub struct CriticalFunction {
    pub family: &'static str,
    entries: Vec<(u64, u64)>,
    tail: u64,
}

impl CriticalFunction {
    pub fn value(&self, m: u64) -> u64 {
        for &(mm, v) in self.entries.iter().rev() {
            if m >= mm {
                return if m > self.entries.last().unwrap().0 {
                    self.tail
                } else {
                    v
                };
            }
        }
        self.tail
    }

    /// First m with the tail value (profiles with more parts use the
    /// hand-proved tail inequality instead of the exact scan).
    pub fn tail_start(&self) -> u64 {
        self.entries.last().unwrap().0 + 1
    }
}

/// Critical function for the rank-2 free group (uniform in q).
pub fn critical_f2() -> CriticalFunction {
    CriticalFunction {
        family: "free-2",
        entries: vec![
            (1, 0),
            (2, 14),
            (3, 15),
            (4, 14),
            (5, 11),
            (6, 10),
            (7, 8),
            (8, 7),
            (9, 6),
            (10, 6),
            (11, 5),
            (12, 5),
            (13, 4),
            (14, 4),
            (15, 4),
            (16, 3),
            (17, 3),
            (18, 3),
            (19, 3),
            (20, 2),
            (21, 2),
        ],
        tail: 1,
    }
}

/// Critical function for free groups of rank >= 3 at large q.
pub fn critical_fn_large_q() -> CriticalFunction {
    CriticalFunction {
        family: "free-n",
        entries: vec![(1, 0), (2, 2)],
        tail: 2,
    }
}

/// Critical function for triangular groups (loop bound >= 15).
pub fn critical_triangular() -> CriticalFunction {
    CriticalFunction {
        family: "triangular",
        entries: vec![
            (1, 0),
            (2, 13),
            (3, 6),
            (4, 5),
            (5, 5),
            (6, 4),
            (7, 4),
            (8, 3),
            (9, 3),
            (10, 3),
            (11, 3),
            (12, 2),
            (13, 2),
            (14, 2),
        ],
        tail: 1,
    }
}

/// Critical function for finite cyclic groups.
pub fn critical_cyclic() -> CriticalFunction {
    CriticalFunction {
        family: "cyclic",
        entries: vec![(1, 0), (2, 3), (3, 3), (4, 2), (5, 2), (6, 2)],
        tail: 1,
    }
}

pub fn critical_for(group: &GroupSpec) -> Result<CriticalFunction> {
    match group {
        GroupSpec::Free { n: 2 } => Ok(critical_f2()),
        GroupSpec::Free { .. } => Ok(critical_fn_large_q()),
        GroupSpec::TriangularLocal { loop_bound } => {
            if *loop_bound < 15 {
                return Err(Error::OutOfRange("triangular table needs L >= 15".into()));
            }
            Ok(critical_triangular())
        }
        GroupSpec::Cyclic { .. } => Ok(critical_cyclic()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_table_values() {
        let f = critical_f2();
        for (m, v) in [
            (1, 0),
            (2, 14),
            (3, 15),
            (4, 14),
            (5, 11),
            (6, 10),
            (7, 8),
            (8, 7),
            (9, 6),
            (10, 6),
            (11, 5),
            (12, 5),
            (13, 4),
            (15, 4),
            (16, 3),
            (19, 3),
            (20, 2),
            (21, 2),
            (22, 1),
            (40, 1),
        ] {
            assert_eq!(f.value(m), v, "m = {m}");
        }
        assert_eq!(f.tail_start(), 22);
    }

    #[test]
    fn other_tables() {
        let t = critical_triangular();
        assert_eq!(t.value(2), 13);
        assert_eq!(t.value(3), 6);
        assert_eq!(t.value(9), 3);
        assert_eq!(t.value(15), 1);
        assert_eq!(t.tail_start(), 15);
        let c = critical_cyclic();
        assert_eq!(c.value(2), 3);
        assert_eq!(c.value(4), 2);
        assert_eq!(c.value(7), 1);
        assert_eq!(c.tail_start(), 7);
        let g = critical_fn_large_q();
        assert_eq!(g.value(1), 0);
        assert_eq!(g.value(5), 2);
    }
}
