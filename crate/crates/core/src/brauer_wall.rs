//! The Brauer–Wall walk over Cl(0,q) and the spinorial chessboards.

use serde::{Deserialize, Serialize};

use crate::classify::{algebra_type, idempotent_count, AlgebraClass, DivisionRing};
use crate::error::{Error, Result};

/// Position on the walk: `q = h + 8r` with hour `h` in `1..=8`.
/// `q = 0` is the origin and has no hour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BWState {
    pub q: u32,
    pub hour: Option<u8>,
    pub cycle: u32,
    pub ring: DivisionRing,
}

impl BWState {
    pub fn at(q: u32) -> Self {
        let (hour, cycle) = if q == 0 {
            (None, 0)
        } else {
            (Some(((q - 1) % 8 + 1) as u8), (q - 1) / 8)
        };
        BWState {
            q,
            hour,
            cycle,
            ring: algebra_type(0, q).ring,
        }
    }

    pub fn origin() -> Self {
        Self::at(0)
    }

    /// `h + 8r == q`, and `q = 0` only at the origin.
    pub fn is_consistent(&self) -> bool {
        match self.hour {
            None => self.q == 0 && self.cycle == 0,
            Some(h) => (1..=8).contains(&h) && h as u32 + 8 * self.cycle == self.q,
        }
    }
}

/// One tick of the hour hand, `Cl(0,q) -> Cl(0,q+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transition {
    pub from: BWState,
    pub to: BWState,
}

impl Transition {
    pub fn hour(&self) -> u8 {
        self.to.hour.expect("a step never lands on the origin")
    }
}

/// Ring sequence of one full round, origin first.
pub const CLOCK_RINGS: [DivisionRing; 9] = [
    DivisionRing::R,
    DivisionRing::C,
    DivisionRing::H,
    DivisionRing::HH,
    DivisionRing::H,
    DivisionRing::C,
    DivisionRing::R,
    DivisionRing::RR,
    DivisionRing::R,
];

pub fn bw_step(s: BWState) -> BWState {
    BWState::at(s.q + 1)
}

/// The eight transitions over `Cl(0,8r) .. Cl(0,8r+8)`.
pub fn bw_cycle(r: u32) -> Vec<Transition> {
    let mut state = BWState::at(8 * r);
    (0..8)
        .map(|_| {
            let next = bw_step(state);
            let t = Transition {
                from: state,
                to: next,
            };
            state = next;
            t
        })
        .collect()
}

/// Rings visited by a cycle, including its starting point.
pub fn cycle_rings(cycle: &[Transition]) -> Vec<DivisionRing> {
    let mut rings: Vec<DivisionRing> = cycle.first().map(|t| t.from.ring).into_iter().collect();
    rings.extend(cycle.iter().map(|t| t.to.ring));
    rings
}

/// The first round of the clock.
pub fn spinorial_clock() -> Vec<Transition> {
    bw_cycle(0)
}

/// Brauer–Wall sum of the types of `Cl(p,0)` and `Cl(0,q)`.
pub fn bw_sum(p: u32, q: u32) -> u8 {
    let tp = algebra_type(p, 0).type_mod8;
    let tq = algebra_type(0, q).type_mod8;
    (tp + tq) % 8
}

/// Class of `Cl(p,q)` read off the row rule `Cl(p,q) ~ Cl(p,0) (x) Cl(0,q)`.
pub fn class_by_row_rule(p: u32, q: u32) -> AlgebraClass {
    let t = bw_sum(p, q);
    let class = algebra_type(p, q);
    debug_assert_eq!(class.type_mod8, t);
    AlgebraClass {
        type_mod8: t,
        ring: DivisionRing::from_type(t),
        simple: !matches!(t, 1 | 5),
        ..class
    }
}

/// Cycle numbers of a sub-board inside a larger board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTag {
    pub p_cycle: u32,
    pub q_cycle: u32,
    /// Cycle of the walk along `q` that the sub-board belongs to.
    pub cycle: u32,
}

#[derive(Debug, Clone, PartialEq)]
enum Cells {
    Classes(Vec<AlgebraClass>),
    Boards(Vec<Chessboard>),
    Lazy,
}

/// Largest order whose cells are built eagerly.
pub const MATERIALIZED_ORDER: u32 = 3;

/// Spinorial chessboard of a given order. An order-`n` board covers
/// `0 <= p, q < 8^n` (shifted by its offset).
#[derive(Debug, Clone, PartialEq)]
pub struct Chessboard {
    pub order: u32,
    pub p_offset: u32,
    pub q_offset: u32,
    pub tag: Option<CycleTag>,
    cells: Cells,
}

impl Chessboard {
    fn build(order: u32, p_offset: u32, q_offset: u32, tag: Option<CycleTag>) -> Self {
        let mut board = Chessboard {
            order,
            p_offset,
            q_offset,
            tag,
            cells: Cells::Lazy,
        };
        if order <= MATERIALIZED_ORDER {
            board.cells = if order == 1 {
                Cells::Classes(
                    (0..64)
                        .map(|i| class_by_row_rule(p_offset + i / 8, q_offset + i % 8))
                        .collect(),
                )
            } else {
                Cells::Boards((0..64).map(|i| board.make_sub_board(i / 8, i % 8)).collect())
            };
        }
        board
    }

    fn make_sub_board(&self, i: u32, j: u32) -> Chessboard {
        let span = 8u32.pow(self.order - 1);
        Chessboard::build(
            self.order - 1,
            self.p_offset + i * span,
            self.q_offset + j * span,
            Some(CycleTag {
                p_cycle: i,
                q_cycle: j,
                cycle: j,
            }),
        )
    }

    /// Side length `8^order` in cells of order 1.
    pub fn side(&self) -> u64 {
        8u64.pow(self.order)
    }

    pub fn is_materialized(&self) -> bool {
        !matches!(self.cells, Cells::Lazy)
    }

    /// Sub-board `(i, j)` of an order `>= 2` board.
    pub fn sub_board(&self, i: u32, j: u32) -> Result<Chessboard> {
        if self.order < 2 || i >= 8 || j >= 8 {
            return Err(Error::Precondition(format!(
                "no sub-board ({i},{j}) in an order-{} board",
                self.order
            )));
        }
        Ok(match &self.cells {
            Cells::Boards(b) => b[(i * 8 + j) as usize].clone(),
            _ => self.make_sub_board(i, j),
        })
    }

    /// Class at local position `(i, j)` of an order-1 board.
    pub fn class_at(&self, i: u32, j: u32) -> Option<&AlgebraClass> {
        match &self.cells {
            Cells::Classes(c) if i < 8 && j < 8 => c.get((i * 8 + j) as usize),
            _ => None,
        }
    }

    /// Class of `Cl(p,q)` for absolute `(p,q)` inside this board.
    pub fn class_of(&self, p: u32, q: u32) -> Option<AlgebraClass> {
        let (dp, dq) = (p.checked_sub(self.p_offset)?, q.checked_sub(self.q_offset)?);
        if dp as u64 >= self.side() || dq as u64 >= self.side() {
            return None;
        }
        Some(class_by_row_rule(p, q))
    }

    /// Every order-1 class of a materialized board, row-major in `(p, q)`.
    pub fn leaf_classes(&self) -> Result<Vec<AlgebraClass>> {
        if !self.is_materialized() {
            return Err(Error::Precondition(format!(
                "order-{} boards are not materialized (limit {MATERIALIZED_ORDER})",
                self.order
            )));
        }
        let side = self.side() as u32;
        Ok((0..side)
            .flat_map(|dp| (0..side).map(move |dq| (dp, dq)))
            .map(|(dp, dq)| class_by_row_rule(self.p_offset + dp, self.q_offset + dq))
            .collect())
    }

    /// Direct children: 64 classes at order 1, 64 boards above.
    pub fn child_boards(&self) -> Vec<Chessboard> {
        match &self.cells {
            Cells::Boards(b) => b.clone(),
            Cells::Classes(_) => Vec::new(),
            Cells::Lazy => (0..64).map(|i| self.make_sub_board(i / 8, i % 8)).collect(),
        }
    }
}

pub fn chessboard(order: u32) -> Result<Chessboard> {
    if order == 0 {
        return Err(Error::Precondition("chessboard order must be >= 1".into()));
    }
    if 8u64.checked_pow(order).map_or(true, |s| s > u32::MAX as u64) {
        return Err(Error::Precondition(format!("chessboard order {order} is too large")));
    }
    Ok(Chessboard::build(order, 0, 0, None))
}

/// `ln 63 / ln 8`.
pub fn fractal_dimension() -> f64 {
    63f64.ln() / 8f64.ln()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Row {
    pub q: u32,
    pub k: i64,
    pub k_next_cycle: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Report {
    pub q_max: u32,
    pub rows: Vec<Theorem3Row>,
    pub failures: Vec<u32>,
}

impl Theorem3Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `k(0,q)` for `q = 0..=q_max`.
    pub fn k_sequence(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.k).collect()
    }
}

/// Checks the exponent relation `k(0,q+8) = k(0,q) + 4` for `0 <= q <= q_max`.
pub fn verify_theorem3(q_max: u32) -> Result<Theorem3Report> {
    if q_max < 24 {
        return Err(Error::Precondition(format!("q_max must be >= 24, got {q_max}")));
    }
    let rows: Vec<Theorem3Row> = (0..=q_max)
        .map(|q| {
            let k = idempotent_count(0, q);
            let k_next_cycle = idempotent_count(0, q + 8);
            Theorem3Row {
                q,
                k,
                k_next_cycle,
                holds: k_next_cycle == k + 4,
            }
        })
        .collect();
    let failures = rows.iter().filter(|r| !r.holds).map(|r| r.q).collect();
    Ok(Theorem3Report {
        q_max,
        rows,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_examples() {
        let s = bw_step(BWState::origin());
        assert_eq!((s.q, s.hour, s.ring), (1, Some(1), DivisionRing::C));
        let s5 = BWState::at(5);
        assert_eq!(s5.ring, DivisionRing::C);
        let s6 = bw_step(s5);
        assert_eq!((s6.hour, s6.ring), (Some(6), DivisionRing::R));
        let s15 = BWState::at(15);
        assert_eq!(s15.ring, DivisionRing::RR);
        let s16 = bw_step(s15);
        assert_eq!((s16.hour, s16.cycle, s16.ring), (Some(8), 1, DivisionRing::R));
    }

    #[test]
    fn states_are_consistent() {
        for q in 0..=200 {
            assert!(BWState::at(q).is_consistent(), "q={q}");
        }
    }

    #[test]
    fn cycles_repeat_the_clock() {
        for r in 0..=7 {
            let c = bw_cycle(r);
            assert_eq!(c.len(), 8);
            assert_eq!(cycle_rings(&c), CLOCK_RINGS.to_vec(), "cycle {r}");
            let hours: Vec<u8> = c.iter().map(Transition::hour).collect();
            assert_eq!(hours, (1..=8).collect::<Vec<u8>>());
        }
        let last = bw_cycle(7);
        assert_eq!((last[7].to.q, last[7].to.hour, last[7].to.cycle), (64, Some(8), 7));
    }

    #[test]
    fn order_one_board() {
        let b = chessboard(1).unwrap();
        let leaves = b.leaf_classes().unwrap();
        assert_eq!(leaves.len(), 64);
        assert_eq!(b.class_at(1, 3).unwrap().ring, DivisionRing::H);
        assert_eq!(b.class_at(1, 3).unwrap().type_mod8, 6);
        let black = leaves.iter().filter(|c| c.n() % 2 == 0).count();
        assert_eq!(black, 32);
        for c in &leaves {
            assert_eq!(*c, algebra_type(c.p, c.q));
        }
    }

    #[test]
    fn order_two_board_tags() {
        let b = chessboard(2).unwrap();
        let subs = b.child_boards();
        assert_eq!(subs.len(), 64);
        for (idx, s) in subs.iter().enumerate() {
            let tag = s.tag.unwrap();
            assert_eq!((tag.p_cycle, tag.q_cycle), (idx as u32 / 8, idx as u32 % 8));
            assert_eq!(s.p_offset, 8 * tag.p_cycle);
            assert_eq!(s.q_offset, 8 * tag.q_cycle);
        }
        assert_eq!(b.leaf_classes().unwrap().len(), 4096);
    }

    #[test]
    fn lazy_boards() {
        let b = chessboard(4).unwrap();
        assert!(!b.is_materialized());
        assert!(b.leaf_classes().is_err());
        let sub = b.sub_board(7, 2).unwrap();
        assert_eq!(sub.order, 3);
        assert!(sub.is_materialized());
        assert_eq!(b.class_of(4000, 5), Some(algebra_type(4000, 5)));
        assert!(chessboard(0).is_err());
    }

    #[test]
    fn fractal_dimension_bounds() {
        let d = fractal_dimension();
        assert!((d - 1.9924).abs() < 1e-4);
        assert!(d > 1.99 && d < 64f64.ln() / 8f64.ln());
    }

    #[test]
    fn theorem3_sequences() {
        let rep = verify_theorem3(64).unwrap();
        assert!(rep.passed());
        let k = rep.k_sequence();
        assert_eq!(k[0..=8], [0, 0, 0, 1, 1, 2, 3, 4, 4]);
        assert_eq!(k[9..=16], [4, 4, 5, 5, 6, 7, 8, 8]);
        assert_eq!(k[17..=24], [8, 8, 9, 9, 10, 11, 12, 12]);
        assert!(verify_theorem3(23).is_err());
    }
}
