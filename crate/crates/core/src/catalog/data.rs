//! The built-in tables, transcribed as printed.
//!
//! Products are written `ij: value` (the product of `e_i` and `e_j`), maps
//! `i: value` (the image of `e_i`), and `id` stands for the identity map.
//! Printed derivation/centroid matrices list rows separated by `;`, row `i`
//! holding the coordinates of the image of `e_i`.

use super::{Printed, StructureKind};
use crate::axioms::DipterousSide;
use crate::scalar::Backend::{Complex, Rational};
use crate::scalar::Backend;

pub(crate) struct Raw {
    pub id: &'static str,
    pub kind: StructureKind,
    pub dim: usize,
    pub backend: Backend,
    pub params: &'static [&'static str],
    pub unused: &'static [&'static str],
    pub left: &'static str,
    pub right: &'static str,
    pub alpha: &'static str,
    pub der: Option<Printed>,
    pub cent: Option<Printed>,
    pub notes: &'static [&'static str],
}

const fn p(rows: &'static str, dim: usize) -> Option<Printed> {
    Some(Printed { rows, dim, linear: true })
}

const D: StructureKind = StructureKind::Dialgebra;

const NONE: &[&str] = &[];

macro_rules! entry {
    ($id:literal, $dim:literal, $left:literal, $right:literal, $alpha:literal, $der:expr, $cent:expr) => {
        Raw {
            id: $id,
            kind: D,
            dim: $dim,
            backend: Rational,
            params: NONE,
            unused: NONE,
            left: $left,
            right: $right,
            alpha: $alpha,
            der: $der,
            cent: $cent,
            notes: NONE,
        }
    };
}

const REAL: &str = "the 4-dimensional classification is stated over the reals while the surrounding text is complex; treated over the declared backend";

pub(crate) static ENTRIES: &[Raw] = &[
    entry!("Hd2.1", 2, "11: e1; 12: e1; 21: e2; 22: e2", "11: e1; 12: e2; 21: e1; 22: e2", "id",
        None, p("c11,0; 0,c22", 2)),
    Raw {
        notes: &["only α(e2) = e1 is printed; α(e1) = 0 is assumed"],
        ..entry!("Hd2.2", 2, "12: e2; 21: e1", "11: e1; 21: e1", "2: e1", None, p("0,0; c21,0", 1))
    },
    entry!("Hd2.3", 2, "22: -1/2*e1 - e2", "21: e1; 22: -e1 - e2", "1: -e1; 2: e1 + e2",
        None, p("-c11,0; c21,c22", 3)),
    entry!("Hd2.4", 2, "12: e1; 22: e1 + e2", "12: e1; 22: e1 + e2", "1: e1; 2: e1 + e2",
        p("0,0; d21,0", 1), p("c11,0; c21,c22", 3)),
    entry!("Hd2.5", 2, "12: e1; 21: e1; 22: e1", "21: e1", "2: e1",
        p("0,0; d21,0", 1), p("0,0; c21,0", 1)),
    entry!("Hd2.6", 2, "12: e1; 22: e2", "21: e1; 22: e1", "id",
        p("0,0; d21,0", 1), p("c11,0; 0,c22", 2)),
    entry!("Hd2.7", 2, "11: e1 + e2", "11: e1; 12: e1", "id",
        None, p("c11,0; 0,c22", 2)),
    entry!("Hd2.8", 2, "12: e1; 21: e1; 22: e1", "22: e1", "2: e1",
        p("0,0; d21,0", 1), p("0,0; c21,0", 1)),
    Raw {
        params: &["a", "b", "c", "f", "g", "k"],
        ..entry!("Hd2.9", 2, "12: a*e1; 22: b*e1 + c*e2", "21: f*e1; 22: g*e1 + k*e2", "1: e1; 2: e1 + e2",
            None, p("c11,0; c21,c22", 3))
    },
    entry!("Hd3.1", 3, "22: e1; 23: e1; 32: e1; 33: e2", "22: e1; 23: e1; 33: e1", "2: e1",
        p("0,0,0; 0,0,0; d31,0,d33", 2), p("0,0,0; c21,0,0; c31,0,0", 2)),
    entry!("Hd3.2", 3, "21: e1; 23: e1; 32: e1; 33: e2", "22: e1; 23: e2; 33: e1", "2: e1",
        p("0,0,0; 0,0,0; d31,0,d33", 2), p("0,0,0; c21,0,0; c31,0,0", 2)),
    entry!("Hd3.3", 3, "22: e1; 23: e1; 32: e1; 33: e1", "22: e1; 23: e1", "2: e1",
        p("0,0,0; d21,0,d23; d31,0,d33", 4), p("c11,0,0; c21,c11,c11; c31,0,0", 3)),
    entry!("Hd3.4", 3, "22: e1; 23: e1; 32: e1; 33: e1", "22: e1; 23: e1; 33: e1", "1: e1",
        p("0,0,0; 0,d22,d23; 0,d32,d33", 4), p("c11,0,0; 0,0,0; 0,0,0", 1)),
    entry!("Hd3.5", 3, "11: e1; 22: e2; 32: e2", "11: e1; 22: e2", "1: e1",
        p("0,0,0; 0,0,0; 0,d32,d33", 2), p("0,0,0; 0,0,c23; 0,0,c33", 2)),
    entry!("Hd3.6", 3, "12: e1; 21: e1; 22: e1; 23: e1; 32: e3", "12: e1; 21: e1; 22: e1; 23: e3; 32: e3; 33: e1", "2: e1",
        None, p("0,0,0; 1/2*c21,0,0; c31,0,0", 2)),
    entry!("Hd3.7", 3, "22: e2; 23: e1; 33: e3", "22: e2; 23: e1; 32: e1; 33: e1", "1: e1",
        None, p("c11,0,0; 0,0,0; 0,0,0", 1)),
    entry!("Hd3.8", 3, "22: e2; 23: e2", "22: e2; 23: e2; 32: e1", "1: e1",
        p("0,0,0; 0,0,0; 0,d32,d33", 2), p("c11,0,0; 0,0,c23; 0,0,c33", 3)),
    entry!("Hd3.9", 3, "22: e2; 23: e2", "22: e2; 23: e2; 32: e1; 33: e3", "1: e1",
        None, p("c11,0,0; 0,0,0; 0,0,0", 1)),
    entry!("Hd3.10", 3, "12: e1; 21: e1; 23: e1; 32: e3", "12: e1; 22: e1; 23: e3; 32: e1", "2: e1",
        p("0,0,0; d21,0,d23; 0,0,0", 2), p("0,0,0; c21,0,c23; c31,0,c33", 4)),
    Raw {
        backend: Complex,
        params: &["a", "b", "c", "d", "f", "g"],
        ..entry!("Hd3.11", 3,
            "12: w2*e1; 21: a*e1; 22: b*e1 + c*e3; 23: e1 + d*e3; 32: e1 + w2*e3; 33: s*e1",
            "12: w2*e1; 21: f*e1; 22: e1 + g*w2*e3; 32: e1 + e3; 33: s*e1",
            "2: e1",
            p("0,0,0; d21,0,d23; 0,0,0", 2), p("0,0,0; c21,0,0; c31,0,0", 2))
    },
    entry!("Hd3.12", 3,
        "12: e1; 21: e1; 22: e1 + e3; 23: e1 + e3; 32: e1 + e3; 33: e3",
        "12: e1; 21: e1; 22: e1 + e3; 23: e1 + e3; 32: e1 + e3",
        "2: e1",
        p("0,0,0; 0,0,d23; 0,0,0", 1), p("0,0,0; c21,0,0; c31,0,0", 2)),
    Raw {
        backend: Complex,
        params: &["a", "b", "c"],
        ..entry!("Hd3.13", 3,
            "11: w1*e2; 13: a*e2; 31: b*e2; 33: w1*s*e2",
            "11: w1*e2; 13: c*e1; 31: w1*s*e2",
            "id",
            p("0,0,0; 0,0,0; 0,d32,0", 1), p("c11,0,0; 0,c22,0; 0,0,c33", 3))
    },
    Raw {
        backend: Complex,
        params: &["a", "b", "c", "d", "f", "g", "h"],
        ..entry!("Hd3.14", 3,
            "11: e1 + a*w2*e3; 13: b*e3; 31: s*e1 + c*(-1 + w2)*e3",
            "11: e1 + d*w2*e3; 13: e1; 22: f*e1 + g*e3; 31: e1 + h*w2*e3; 33: e1 + s*e3",
            "2: e2",
            None, p("0,0,0; 0,c22,0; 0,0,0", 1))
    },
    Raw {
        params: &["a"],
        notes: &[REAL],
        ..entry!("Hd4.1", 4,
            "12: e1; 14: e3; 21: e1; 23: a*e3; 24: e1; 32: e1; 34: e1; 41: e3; 44: e1",
            "12: e1; 14: e3; 22: e3; 23: e1; 24: e1; 32: e1; 34: e1; 42: e1; 43: e1; 44: e1",
            "2: e1",
            p(DER_4_1, 4), p(CENT_4_1, 4))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.2", 4,
            "14: e3; 21: e1; 22: e3; 23: e1; 24: e1; 32: e1; 34: e1; 41: e3; 44: e1",
            "12: e1; 14: e3; 22: e3; 23: e1; 24: e1; 32: e1; 34: e1; 42: e1; 43: e1; 44: e1",
            "2: e1",
            p(DER_4_1, 2), p("0,0,0,0; c21,0,c23,0; c31,0,c33,0; c41,0,c43,0", 6))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.3", 4,
            "14: e3; 21: e1; 22: e1 + e3; 23: e1; 24: e1; 32: e1; 34: e1; 41: e3; 44: e1",
            "12: e1; 14: e3; 22: e3; 23: e1; 24: e3; 32: e1; 34: e1; 42: e1; 43: e1; 44: e1",
            "2: e1",
            p(DER_4_1, 4), p("0,0,0,0; d21,0,d23,0; c31,0,c33,0; d41,0,d43,0", 6))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.4", 4,
            "23: e1 + e3; 32: e1 + e3; 34: e1 + e3; 41: e3; 43: e1 + e3; 44: e1 + e3",
            "12: e1; 14: e3; 23: e1 + e3; 24: e1 + e3; 32: e1 + e3; 34: e1 + e3; 43: e1 + e3; 44: e1 + e3",
            "2: e1; 4: e3",
            p(DER_4_1, 4), p("0,0,0,0; c21,0,0,0; 0,0,0,0; 0,0,c43,0", 2))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.5", 4,
            "23: e3; 24: e1 + e3; 32: e1 + e3; 34: e1 + e3; 41: e3; 43: e1 + e3; 44: e1 + e3",
            "21: e1; 23: e1 + e3; 24: e1 + e3; 32: e1 + e3; 34: e1 + e3; 43: e1 + e3; 44: e1 + e3",
            "2: e1; 4: e3",
            p(DER_4_1, 4), p(CENT_4_1, 4))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.6", 4,
            "12: e3; 23: e1 + e3; 24: e1 + e3; 32: e1 + e3; 34: e1; 42: e3; 43: e1 + e3; 44: e1 + e3",
            "21: e1; 23: e1 + e3; 24: e1 + e3; 32: e1 + e3; 34: e1 + e3; 43: e1 + e3",
            "2: e1; 4: e3",
            p(DER_4_1, 4), p(CENT_4_1, 4))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.7", 4,
            "23: e4; 32: e4; 34: e4; 43: e4; 44: e2 + e4",
            "32: e2; 34: e2 + e4; 43: e2 + e4; 44: e2 + e4",
            "1: e1; 2: e2",
            p(DER_4_7, 3), p("c11,c12,0,0; c21,c22,0,0; 0,0,0,0; c41,0,c43,0", 4))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.8", 4,
            "23: e4; 32: e4; 33: e4; 34: e4; 43: e4; 44: e4",
            "32: e2; 34: e2 + e4; 43: e2 + e4; 44: e2 + e4",
            "1: e1; 2: e2",
            p(DER_4_7, 3), p("0,c12,0,0; 0,c22,0,0; 0,0,0,0; 0,0,0,0", 2))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.9", 4,
            "11: e1; 24: e1; 33: e2; 34: e1; 41: e1; 42: e1; 43: e1; 44: e1",
            "24: e2; 33: e2; 34: e1 + e2; 43: e1 + e2; 44: e2",
            "2: e2; 3: e3",
            p(DER_4_9, 1), p("0,0,0,0; 0,c22,0,0; 0,0,c33,0; 0,0,0,0", 2))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.10", 4,
            "22: e2 + e4; 24: e2 + e4; 33: e1; 44: e4",
            "22: e2 + e4; 33: e2 + e4; 42: e4; 44: e2 + e4",
            "1: e1; 3: e3",
            p(DER_4_10, 1), p(CENT_4_10, 2))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.11", 4,
            "12: e1; 21: e1; 22: e1; 23: e1; 32: e1; 42: e1; 44: e3",
            "12: e1; 22: e1; 23: e1; 24: e1 + e3; 42: e1 + e3; 44: e1",
            "3: e3; 4: e4",
            p("0,0,0,0; d21,0,0,0; 0,0,0,0; 0,0,d43,0", 1), p("c11,0,0,0; 0,0,0,0; c31,0,c33,0; 0,0,c43,0", 4))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.12", 4,
            "22: e2 + e4; 24: e2 + e4; 33: e1; 42: e2; 44: e4",
            "22: e2 + e4; 33: e2 + e4; 42: e4; 44: e2 + e4",
            "1: e1; 3: e3",
            p(DER_4_10, 1), p(CENT_4_10, 2))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.13", 4,
            "22: e2; 23: e2 + e3; 32: e1 + e3; 33: e2; 44: e1",
            "22: e1 + e3; 23: e2; 33: e1 + e3; 44: e1 + e2",
            "1: e1; 4: e4",
            p(DER_4_9, 1), p("c11,0,0,0; 0,0,0,0; 0,0,0,0; c41,0,0,c44", 3))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.14", 4,
            "22: e2; 23: e2 + e3; 32: e1 + e3; 33: e2 + e3; 44: e1",
            "22: e1 + e3; 23: e1 + e2; 33: e1 + e3; 44: e1 + e2",
            "1: e1; 4: e4",
            p(DER_4_9, 1), p("c11,0,0,0; 0,0,0,0; 0,0,0,0; c41,0,0,0", 2))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.15", 4,
            "24: e1; 33: e2; 34: e1; 41: e1; 42: e1; 43: e1; 44: e1",
            "24: e2; 33: e1 + e2; 34: e1 + e2; 41: e1 + e2; 42: e1 + e2; 43: e1 + e2",
            "2: e2; 3: e3",
            p(DER_4_9, 1), p("0,0,0,0; 0,c22,0,0; 0,c32,0,0; 0,0,0,0", 2))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.16", 4,
            "24: e1; 33: e2; 34: e1; 41: e1; 42: e1; 43: e1; 44: e1",
            "24: e1 + e2; 33: e2; 34: e1 + e2; 41: e1 + e2; 42: e1 + e2; 44: e2",
            "2: e2; 3: e3",
            p(DER_4_9, 1), p(CENT_4_16, 4))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.17", 4,
            "14: e1; 24: e1; 33: e2; 34: e1; 41: e1; 42: e1; 43: e1; 44: e1",
            "24: e1 + e2; 33: e1 + e2; 42: e2; 43: e1 + e2; 44: e2",
            "2: e2; 3: e3",
            p("0,0,0,0; 0,0,0,0; 0,0,d23,0; d41,0,0,0", 2), p(CENT_4_16, 4))
    },
    Raw {
        notes: &[REAL],
        ..entry!("Hd4.18", 4,
            "12: e3 + e4; 21: e3 + e4; 22: e3 + e4; 23: e3 + e4; 24: e3 + e4; 32: e3 + e4; 33: e3 + e4; 34: e3 + e4; 42: e3 + e4",
            "11: e3 + e4; 22: e3 + e4; 23: e3 + e4; 32: e3 + e4; 44: e3 + e4",
            "2: e1",
            p("0,0,0,0; 0,0,d23,d24; 0,0,-d23,-d24; 0,0,d23,d24", 2),
            Some(Printed { rows: "0,0,0,0; (1-sqrt(1-4*c21^2))/2,0,0,c24; 0,0,0,0; 0,0,0,0", dim: 2, linear: false }))
    },
    Raw {
        backend: Complex,
        params: &["a", "b", "c", "d", "f", "h", "l", "m", "n", "o", "p"],
        unused: &["f"],
        notes: &[REAL, "UNPARSEABLE_AS_PRINTED: the product of e2 and e3 is printed with a stray coefficient f on the left factor; read literally as e3 + e4 with f unused"],
        ..entry!("Hd4.19", 4,
            "12: a*e3 + b*e4; 21: e3 + c*e4; 22: e3 + d*e4; 23: e3 + e4; 24: h*e3 + e4; 32: l*e3 + e4; 33: e3 + e4; 34: e3 + e4; 42: e3 + e4",
            "11: m*e3 + n*e4; 22: o*e3 + p*e4; 23: c*e3 + d*e4; 32: e3; 44: e4",
            "2: e1",
            p(DER_4_19, 2), None)
    },
    Raw {
        backend: Complex,
        params: &["a", "b", "c", "d", "f", "g", "h", "k", "l"],
        notes: &[REAL],
        ..entry!("Hd4.20", 4,
            "21: e3 + a*e4; 22: e3 + b*e4; 23: c*e3 + d*e4; 24: e3 + e4; 32: f*e3 + g*e4; 33: e3 + e4; 34: e3 + e4; 42: e3 + e4",
            "11: e3 + e4; 22: h*e3 + e4; 23: k*e3 + e4; 32: l*e3; 43: e3; 44: e4",
            "2: e1",
            p(DER_4_19, 2), None)
    },
    Raw {
        kind: StructureKind::Dendriform,
        ..entry!("dend2.1", 2, "21: e1; 22: e1", "12: e1; 21: e1; 22: e1", "2: e1", None, None)
    },
    Raw {
        kind: StructureKind::Dendriform,
        ..entry!("dend3.1", 3, "11: e1; 32: e3; 33: e3", "23: e3; 33: e3", "1: e1", None, None)
    },
    Raw {
        kind: StructureKind::Zinbiel,
        ..entry!("zin2.1", 2, "12: e1; 22: e1", "", "id", None, None)
    },
    Raw {
        kind: StructureKind::Zinbiel,
        ..entry!("zin2.2", 2, "11: e1; 22: e1", "", "1: e1; 2: e1 + e2", None, None)
    },
    Raw {
        kind: StructureKind::Zinbiel,
        ..entry!("zin2.3", 2, "11: e2; 21: -e2", "", "1: e1; 2: e1 + e2", None, None)
    },
    Raw {
        kind: StructureKind::Dipterous(DipterousSide::Right),
        ..entry!("dip3.1", 3, "12: e3; 32: e3; 33: e3", "12: e3; 23: e3", "1: e1", None, None)
    },
    Raw {
        kind: StructureKind::Dipterous(DipterousSide::Right),
        ..entry!("dip3.2", 3, "11: e1; 12: e3; 32: e3; 33: e3", "12: e3; 23: e3", "1: e1", None, None)
    },
];

const DER_4_1: &str = "0,0,0,0; d21,0,d23,0; 0,0,0,0; d41,0,d43,0";
const DER_4_7: &str = "d11,d12,0,0; 0,0,0,0; 0,0,0,d34; 0,0,0,0";
const DER_4_9: &str = "0,0,0,0; 0,0,0,0; 0,0,0,0; d41,0,0,0";
const DER_4_10: &str = "0,0,0,0; 0,0,0,0; d31,0,0,0; 0,0,0,0";
const DER_4_19: &str = "0,0,0,0; 0,0,d23,d24; 0,0,0,0; 0,0,0,0";
const CENT_4_1: &str = "0,0,0,0; c21,0,c23,0; 0,0,0,0; c41,0,c43,0";
const CENT_4_10: &str = "c11,0,0,0; 0,0,0,0; c31,0,0,0; 0,0,0,0";
const CENT_4_16: &str = "c11,0,0,0; 0,c22,0,0; 0,c32,0,0; c41,0,0,0";
