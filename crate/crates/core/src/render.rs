//! Byte-stable text, JSON and CSV renderings of the computed artifacts.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::brauer_wall::{Chessboard, Transition};
use crate::classify::{AlgebraClass, DivisionRing, IdempotentData};
use crate::error::{Error, Result};
use crate::spin_reps::{chain_algebra_sequence, RepBlock, RepLabel, RepWalkStep, SpinChain};
use crate::verify::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    serde_json::to_string(v)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Precondition(e.to_string()))
}

fn csv<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String> {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Precondition(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Precondition(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Precondition(e.to_string()))
}

fn unsupported(what: &str, format: Format) -> Error {
    Error::UnsupportedFormat(format!("{format:?} output for {what}").to_lowercase())
}

fn ring_text(c: &AlgebraClass) -> String {
    let m = match c.matrix_rank() {
        Some(r) => r.to_string(),
        None => format!("2^{}", c.matrix_log2),
    };
    if c.simple {
        format!("Mat({m},{})", c.ring)
    } else {
        let b = c.ring.base();
        format!("Mat({m},{b}) ⊕ Mat({m},{b})")
    }
}

#[derive(Serialize)]
struct ClassRecord {
    p: u32,
    q: u32,
    #[serde(rename = "type")]
    type_mod8: u8,
    ring: DivisionRing,
    simple: bool,
    matrix_rank: Option<u64>,
}

impl From<&AlgebraClass> for ClassRecord {
    fn from(c: &AlgebraClass) -> Self {
        ClassRecord {
            p: c.p,
            q: c.q,
            type_mod8: c.type_mod8,
            ring: c.ring,
            simple: c.simple,
            matrix_rank: c.matrix_rank(),
        }
    }
}

#[derive(Serialize)]
struct CellRecord {
    p: u32,
    q: u32,
    #[serde(rename = "type")]
    type_mod8: u8,
    ring: DivisionRing,
    simple: bool,
}

impl From<&AlgebraClass> for CellRecord {
    fn from(c: &AlgebraClass) -> Self {
        CellRecord {
            p: c.p,
            q: c.q,
            type_mod8: c.type_mod8,
            ring: c.ring,
            simple: c.simple,
        }
    }
}

pub fn classification(c: &AlgebraClass, format: Format) -> Result<String> {
    match format {
        Format::Json => json(&ClassRecord::from(c)),
        _ => classifications(std::slice::from_ref(c), format),
    }
}

/// One line or row per algebra; JSON is an array.
pub fn classifications(cs: &[AlgebraClass], format: Format) -> Result<String> {
    match format {
        Format::Json => json(&cs.iter().map(ClassRecord::from).collect::<Vec<_>>()),
        Format::Csv => csv(cs.iter().map(ClassRecord::from)),
        Format::Text => Ok(cs
            .iter()
            .map(|c| {
                format!(
                    "Cl({},{}): type {}, {}, {}, ω² = {}\n",
                    c.p,
                    c.q,
                    c.type_mod8,
                    ring_text(c),
                    if c.simple { "simple" } else { "semisimple" },
                    c.omega_sq.to_i8()
                )
            })
            .collect()),
    }
}

#[derive(Serialize)]
struct IdempotentRecord {
    p: u32,
    q: u32,
    k: usize,
    generators: Vec<String>,
    idempotent: String,
    group_order: u64,
}

pub fn idempotent(d: &IdempotentData, format: Format) -> Result<String> {
    let rec = IdempotentRecord {
        p: d.sig.p,
        q: d.sig.q,
        k: d.k,
        generators: d.generators.iter().map(|b| b.to_string()).collect(),
        idempotent: format!("{:?}", d.f),
        group_order: d.group_order,
    };
    match format {
        Format::Json => json(&rec),
        Format::Csv => Err(unsupported("idempotent", format)),
        Format::Text => {
            let factors: Vec<String> = rec.generators.iter().map(|g| format!("½(1+{g})")).collect();
            Ok(format!(
                "{}: k = {}\nf = {}\n  = {}\n|T(f)| = {}\n",
                d.sig,
                d.k,
                if factors.is_empty() { "1".to_string() } else { factors.join("·") },
                rec.idempotent,
                d.group_order
            ))
        }
    }
}

fn board_grid(b: &Chessboard) -> Result<String> {
    let classes = b.leaf_classes()?;
    let side = b.side() as usize;
    let mut out = String::new();
    if b.order == 1 {
        out.push_str("p\\q");
        for j in 0..side {
            let _ = write!(out, " {:>2}", b.q_offset as usize + j);
        }
        out.push('\n');
    }
    for (i, row) in classes.chunks(side).enumerate() {
        if b.order == 1 {
            let _ = write!(out, "{:>3}", b.p_offset as usize + i);
            for c in row {
                let mark = if (c.p + c.q) % 2 == 0 { '#' } else { '.' };
                let _ = write!(out, " {}{mark}", c.type_mod8);
            }
        } else {
            out.extend(row.iter().map(|c| char::from(b'0' + c.type_mod8)));
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Serialize)]
struct SubBoardRecord {
    p_offset: u32,
    q_offset: u32,
    p_cycle: u32,
    q_cycle: u32,
    cycle: u32,
}

/// Orders 1 and 2 list every cell; larger orders list their 64 sub-boards.
pub fn chessboard(b: &Chessboard, format: Format) -> Result<String> {
    let cells = b.order <= 2;
    match format {
        Format::Text if cells => {
            let mut out = format!("spinorial chessboard, order {}, {}x{}\n", b.order, b.side(), b.side());
            out.push_str(&board_grid(b)?);
            if b.order == 1 {
                out.push_str("# even p+q, . odd p+q\n");
            }
            Ok(out)
        }
        Format::Json if cells => {
            #[derive(Serialize)]
            struct Board {
                order: u32,
                cells: Vec<CellRecord>,
            }
            json(&Board {
                order: b.order,
                cells: b.leaf_classes()?.iter().map(CellRecord::from).collect(),
            })
        }
        Format::Csv if cells => csv(b.leaf_classes()?.iter().map(CellRecord::from)),
        _ => {
            let subs: Vec<SubBoardRecord> = b
                .child_boards()
                .iter()
                .map(|c| {
                    let t = c.tag.expect("child boards carry a tag");
                    SubBoardRecord {
                        p_offset: c.p_offset,
                        q_offset: c.q_offset,
                        p_cycle: t.p_cycle,
                        q_cycle: t.q_cycle,
                        cycle: t.cycle,
                    }
                })
                .collect();
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Board {
                        order: u32,
                        side: u64,
                        sub_boards: Vec<SubBoardRecord>,
                    }
                    json(&Board {
                        order: b.order,
                        side: b.side(),
                        sub_boards: subs,
                    })
                }
                Format::Csv => csv(subs),
                Format::Text => {
                    let mut out = format!(
                        "spinorial chessboard, order {}, {}x{}: 8x8 boards of order {}\n",
                        b.order,
                        b.side(),
                        b.side(),
                        b.order - 1
                    );
                    for s in subs {
                        let _ = writeln!(
                            out,
                            "({},{}) at p = {}, q = {}, cycle {}",
                            s.p_cycle, s.q_cycle, s.p_offset, s.q_offset, s.cycle
                        );
                    }
                    Ok(out)
                }
            }
        }
    }
}

#[derive(Serialize)]
struct TransitionRecord {
    hour: u8,
    cycle: u32,
    from_q: u32,
    to_q: u32,
    from_ring: DivisionRing,
    to_ring: DivisionRing,
}

fn transitions(ts: &[Transition], title: &str, format: Format) -> Result<String> {
    let recs: Vec<TransitionRecord> = ts
        .iter()
        .map(|t| TransitionRecord {
            hour: t.hour(),
            cycle: t.to.cycle,
            from_q: t.from.q,
            to_q: t.to.q,
            from_ring: t.from.ring,
            to_ring: t.to.ring,
        })
        .collect();
    match format {
        Format::Json => json(&recs),
        Format::Csv => csv(recs),
        Format::Text => {
            let mut out = format!("{title}\n");
            for r in &recs {
                let _ = writeln!(
                    out,
                    "hour {}: Cl(0,{}) {} → Cl(0,{}) {}",
                    r.hour, r.from_q, r.from_ring, r.to_q, r.to_ring
                );
            }
            Ok(out)
        }
    }
}

pub fn clock(ts: &[Transition], format: Format) -> Result<String> {
    transitions(ts, "spinorial clock", format)
}

pub fn cycle(r: u32, ts: &[Transition], format: Format) -> Result<String> {
    transitions(ts, &format!("Brauer-Wall cycle {r}"), format)
}

#[derive(Serialize)]
struct LabelRow {
    label: String,
    l: f64,
    l_dot: f64,
    field: &'static str,
    quotient: bool,
    spin: f64,
    degree: u64,
}

impl From<&RepLabel> for LabelRow {
    fn from(n: &RepLabel) -> Self {
        LabelRow {
            label: n.to_string(),
            l: n.l.to_f64(),
            l_dot: n.l_dot.to_f64(),
            field: match n.field {
                crate::spin_reps::RepField::Real => "real",
                crate::spin_reps::RepField::Quaternionic => "quaternionic",
            },
            quotient: n.quotient,
            spin: n.spin().to_f64(),
            degree: n.degree(),
        }
    }
}

/// Text form: a grid of field letters, rows `l`, columns `l'`.
pub fn block(b: &RepBlock, format: Format) -> Result<String> {
    match format {
        Format::Json => json(b),
        Format::Csv => csv(b.nodes.iter().map(LabelRow::from)),
        Format::Text => {
            let mut ls: Vec<_> = b.nodes.iter().map(|n| n.l).collect();
            ls.dedup();
            let mut cols: Vec<_> = b.nodes.iter().map(|n| n.l_dot).collect();
            cols.sort_unstable();
            cols.dedup();
            let mut out = format!("representation block, order {}, {} nodes\n", b.order, b.nodes.len());
            let _ = write!(out, "{:>5}", "l\\l'");
            for c in &cols {
                let _ = write!(out, "{:>5}", c.to_string());
            }
            out.push('\n');
            for l in ls {
                let _ = write!(out, "{:>5}", l.to_string());
                for c in &cols {
                    let cell = b.get(l, *c).map_or(".".to_string(), |n| n.field.superscript().to_string());
                    let _ = write!(out, "{cell:>5}");
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub fn rep(label: &RepLabel, format: Format) -> Result<String> {
    match format {
        Format::Json => json(label),
        Format::Csv => csv([LabelRow::from(label)]),
        Format::Text => Ok(format!(
            "{label}: spin {}, degree {}, {} field, spinspace of {}\n",
            label.spin(),
            label.degree(),
            LabelRow::from(label).field,
            label.descriptor()
        )),
    }
}

pub fn chain(c: &SpinChain, format: Format) -> Result<String> {
    match format {
        Format::Json => json(c),
        Format::Csv => csv(c.members.iter().map(|m| LabelRow::from(&m.label))),
        Format::Text => {
            let algebras = chain_algebra_sequence(c);
            let mut out = format!("{}-plet from ({},{})\n", c.len(), c.start.0, c.start.1);
            for (m, a) in c.members.iter().zip(algebras) {
                let _ = writeln!(out, "{}  s = {}  {}", m.label, m.signed_spin, a);
            }
            Ok(out)
        }
    }
}

pub fn walk(steps: &[RepWalkStep], format: Format) -> Result<String> {
    match format {
        Format::Json => json(steps),
        Format::Csv => csv(steps.iter().map(|s| LabelRow::from(&s.label))),
        Format::Text => Ok(steps
            .iter()
            .map(|s| format!("Cl(0,{}) {}  {}\n", s.state.q, s.state.ring, s.label))
            .collect()),
    }
}

pub fn report(r: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => csv(r.checks.iter()),
        Format::Text => {
            let mut out = format!("verify {} (seed {})\n", r.target, r.seed);
            for c in &r.checks {
                let _ = writeln!(out, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let failed = r.failures().count();
            let _ = writeln!(out, "{} checks, {} failed", r.checks.len(), failed);
            Ok(out)
        }
    }
}
