//! Exact discharging on the planarization of a canonical triangulation.
//!
//! Real vertices start with `d(v) - 4`, faces with `|f| - 4`; crossing
//! vertices have degree 4 and carry nothing. On a connected plane graph the
//! total is `-8`. The rules then move charge: R1 and R2 from vertices to
//! triangular faces, R3 to R7 from high-degree vertices to adjacent
//! vertices of degree 3 to 7.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::model::PlaneGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DischargeError {
    #[error("planarization is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("transcript entry {index} names {element}, which is not in the ledger")]
    UnknownElement { index: usize, element: Element },
}

/// A charge, serialized as `"p/q"` (or `"p"` for integers).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(pub BigRational);

impl Charge {
    pub fn new(numer: i64, denom: i64) -> Self {
        Charge(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn integer(n: i64) -> Self {
        Charge(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Charge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Charge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        BigRational::from_str(&text)
            .map(Charge)
            .map_err(|_| serde::de::Error::custom(format!("bad rational {text:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Face(i) => write!(f, "face {i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

/// Charges of all real vertices and faces, plus every transfer applied.
/// Faces are numbered in face-tracing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeLedger {
    pub faces: Vec<Vec<usize>>,
    pub vertex_charges: Vec<Charge>,
    pub face_charges: Vec<Charge>,
    pub transcript: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn total(&self) -> Charge {
        let sum = self
            .vertex_charges
            .iter()
            .chain(&self.face_charges)
            .fold(BigRational::zero(), |acc, c| acc + &c.0);
        Charge(sum)
    }

    pub fn charge(&self, e: Element) -> Option<&Charge> {
        match e {
            Element::Vertex(v) => self.vertex_charges.get(v),
            Element::Face(i) => self.face_charges.get(i),
        }
    }

    fn slot(&mut self, e: Element) -> Option<&mut Charge> {
        match e {
            Element::Vertex(v) => self.vertex_charges.get_mut(v),
            Element::Face(i) => self.face_charges.get_mut(i),
        }
    }

    fn apply(&mut self, t: Transfer) {
        let amount = &t.amount.0;
        self.slot(t.from).expect("sender in ledger").0 -= amount;
        self.slot(t.to).expect("receiver in ledger").0 += amount;
        self.transcript.push(t);
    }
}

/// Initial charges: `d(v) - 4` per real vertex, `|f| - 4` per face.
pub fn initial_charges(pg: &PlaneGraph) -> Result<ChargeLedger, DischargeError> {
    let components = pg.graph().component_count();
    if components != 1 {
        return Err(DischargeError::Disconnected(components));
    }
    let faces: Vec<Vec<usize>> = pg.faces().faces.into_iter().map(|f| f.vertices).collect();
    Ok(ChargeLedger {
        vertex_charges: (0..pg.real_count())
            .map(|v| Charge::integer(pg.degree(v) as i64 - 4))
            .collect(),
        face_charges: faces.iter().map(|f| Charge::integer(f.len() as i64 - 4)).collect(),
        faces,
        transcript: Vec::new(),
    })
}

fn crossings_on(pg: &PlaneGraph, face: &[usize]) -> usize {
    face.iter().filter(|&&x| pg.is_crossing(x)).count()
}

/// Indices of triangular faces that touch a crossing vertex.
pub fn special_faces(pg: &PlaneGraph, ledger: &ChargeLedger) -> Vec<usize> {
    (0..ledger.faces.len())
        .filter(|&i| ledger.faces[i].len() == 3 && crossings_on(pg, &ledger.faces[i]) > 0)
        .collect()
}

/// Amount sent by a vertex of degree `sender` to an adjacent vertex of
/// degree `receiver`, with the rule responsible.
pub fn vertex_rule(sender: usize, receiver: usize) -> Option<(Rule, Charge)> {
    let (rule, table): (Rule, &[(usize, i64, i64)]) = match sender {
        9..=11 => (Rule::R3, &[(7, 1, 21)]),
        12..=14 => (Rule::R4, &[(7, 1, 18), (6, 1, 6)]),
        15..=19 => (Rule::R5, &[(7, 1, 15), (6, 1, 5), (5, 4, 15)]),
        20..=35 => (Rule::R6, &[(7, 1, 12), (6, 1, 4), (5, 1, 3), (4, 5, 12)]),
        36.. => (Rule::R7, &[(7, 1, 9), (6, 1, 3), (5, 4, 9), (4, 5, 9), (3, 2, 3)]),
        _ => return None,
    };
    table
        .iter()
        .find(|&&(d, _, _)| d == receiver)
        .map(|&(_, p, q)| (rule, Charge::new(p, q)))
}

/// Applies R1 to R7 once. Face rules go vertex by vertex in id order and,
/// per vertex, face by face in face order; vertex rules go sender by sender
/// and receiver by receiver in id order.
pub fn apply_rules(pg: &PlaneGraph, ledger: &ChargeLedger) -> ChargeLedger {
    let mut out = ledger.clone();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); pg.real_count()];
    for (i, f) in ledger.faces.iter().enumerate() {
        if f.len() != 3 {
            continue;
        }
        for &x in f {
            if !pg.is_crossing(x) && incident[x].last() != Some(&i) {
                incident[x].push(i);
            }
        }
    }
    for (rule, special) in [(Rule::R1, false), (Rule::R2, true)] {
        let amount = if special { Charge::new(1, 2) } else { Charge::new(1, 3) };
        for (v, faces) in incident.iter().enumerate() {
            for &i in faces {
                if (crossings_on(pg, &ledger.faces[i]) > 0) == special {
                    out.apply(Transfer {
                        rule,
                        from: Element::Vertex(v),
                        to: Element::Face(i),
                        amount: amount.clone(),
                    });
                }
            }
        }
    }
    let g = pg.graph();
    let mut vertex_transfers = Vec::new();
    for v in 0..pg.real_count() {
        for u in g.neighbors(v).filter(|&u| !pg.is_crossing(u)) {
            if let Some((rule, amount)) = vertex_rule(pg.degree(v), pg.degree(u)) {
                vertex_transfers.push(Transfer {
                    rule,
                    from: Element::Vertex(v),
                    to: Element::Vertex(u),
                    amount,
                });
            }
        }
    }
    // In G a real vertex is also adjacent to its mirror neighbours, which
    // the planarization hides behind crossing vertices.
    for c in pg.crossings() {
        for (a, b) in [c.e1, c.e2] {
            for (s, r) in [(a, b), (b, a)] {
                if let Some((rule, amount)) = vertex_rule(pg.degree(s), pg.degree(r)) {
                    vertex_transfers.push(Transfer {
                        rule,
                        from: Element::Vertex(s),
                        to: Element::Vertex(r),
                        amount,
                    });
                }
            }
        }
    }
    vertex_transfers.sort_by_key(|t| (t.rule, t.from, t.to));
    for t in vertex_transfers {
        out.apply(t);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub initial_total: Charge,
    pub final_total: Charge,
    pub conserved: bool,
    /// Elements whose final charge is negative.
    pub negatives: Vec<(Element, Charge)>,
    /// Triangular faces whose final charge is not zero.
    pub unbalanced_faces: Vec<usize>,
    /// A negative total forces a negative element.
    pub negative_element_exists: bool,
}

pub fn audit(initial: &ChargeLedger, last: &ChargeLedger) -> AuditReport {
    let initial_total = initial.total();
    let final_total = last.total();
    let negatives: Vec<(Element, Charge)> = (0..last.vertex_charges.len())
        .map(Element::Vertex)
        .chain((0..last.face_charges.len()).map(Element::Face))
        .filter_map(|e| {
            let c = last.charge(e)?;
            c.0.is_negative().then(|| (e, c.clone()))
        })
        .collect();
    AuditReport {
        conserved: initial_total == final_total,
        unbalanced_faces: (0..last.faces.len())
            .filter(|&i| last.faces[i].len() == 3 && !last.face_charges[i].0.is_zero())
            .collect(),
        negative_element_exists: !negatives.is_empty(),
        negatives,
        initial_total,
        final_total,
    }
}

/// Re-applies `transcript` to `initial`.
pub fn replay(initial: &ChargeLedger, transcript: &[Transfer]) -> Result<ChargeLedger, DischargeError> {
    let mut out = initial.clone();
    out.transcript.clear();
    for (index, t) in transcript.iter().enumerate() {
        for element in [t.from, t.to] {
            if out.charge(element).is_none() {
                return Err(DischargeError::UnknownElement { index, element });
            }
        }
        out.apply(t.clone());
    }
    Ok(out)
}
