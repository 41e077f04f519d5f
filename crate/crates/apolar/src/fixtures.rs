//! Named input forms and their recorded expectations.
//!
//! Every fixture parses, is homogeneous, and matches its recorded degree;
//! a unit test enforces that. Forms written in the literature with letters
//! (x, y, z, u, v) are stored pre-translated to `x0..x{n}`; the note says
//! which letters map where. `fermat:<n>:<d>` is parametric.

use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::{Error, Result};

/// A catalogued input form.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub nvars: usize,
    pub degree: usize,
    pub expr: &'static str,
    pub note: &'static str,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "caporali",
        nvars: 3,
        degree: 4,
        expr: "x0^4+x1^4+x2^4+(x0+x1+x2)^4",
        note: "smooth plane quartic, a sum of four fourth powers of lines",
    },
    Fixture {
        name: "caporali1",
        nvars: 3,
        degree: 4,
        expr: "x0^4+x1^4+x2^4+(x0^2+x1^2+x2^2)^2",
        note: "smooth plane quartic whose middle catalecticant has full rank",
    },
    Fixture {
        name: "caporali2",
        nvars: 3,
        degree: 4,
        expr: "x0^4+x1^4+x2^4+(x0^2+x1^2)^2",
        note: "smooth plane quartic with middle catalecticant rank 4",
    },
    Fixture {
        name: "quartic-e6",
        nvars: 3,
        degree: 4,
        expr: "x0^3*x1+x2^4",
        note: "rational quartic curve with a single E6 singular point at (0:1:0)",
    },
    Fixture {
        name: "quartic-3a2",
        nvars: 3,
        degree: 4,
        expr: "x0^2*x1^2+x1^2*x2^2+x0^2*x2^2-2*x0*x1*x2*(x0+x1+x2)",
        note: "quartic curve with three cusps",
    },
    Fixture {
        name: "quartic-2a3",
        nvars: 3,
        degree: 4,
        expr: "x0^2*x1^2+x2^4",
        note: "quartic curve with two tacnodes",
    },
    Fixture {
        name: "quartic-4a1",
        nvars: 3,
        degree: 4,
        expr: "(x0^2+x1^2)^2+(x1^2+x2^2)^2",
        note: "two conics meeting in four nodes",
    },
    Fixture {
        name: "lines-3x",
        nvars: 3,
        degree: 4,
        expr: "(x0^3+x1^3)*x2",
        note: "line arrangement: three concurrent lines plus a transversal line",
    },
    Fixture {
        name: "gn-quintic",
        nvars: 5,
        degree: 4,
        expr: "x0*x3^3+x1*x3^2*x4+x2*x3*x4^2+x4^4",
        note: "Gordan-Noether-type quartic threefold with vanishing Hessian; letters (x,y,z,u,v) -> (x0,x1,x2,x3,x4)",
    },
    Fixture {
        name: "ikeda",
        nvars: 4,
        degree: 5,
        expr: "x0*x2*x3^3+x1*x2^3*x3+x0^2*x1^3",
        note: "Ikeda's quintic surface, nonzero Hessian but vanishing order-2 Hessian; letters (x,y,u,v) -> (x0,x1,x2,x3)",
    },
    Fixture {
        name: "triangle",
        nvars: 3,
        degree: 3,
        expr: "x0*x1*x2",
        note: "three non-concurrent lines; its apolar algebra is the monomial complete intersection with squares",
    },
];

/// A resolved input: canonical label plus the parsed form.
#[derive(Clone, Debug)]
pub struct ResolvedInput {
    pub label: String,
    pub poly: Poly,
}

/// Fermat form `x0^d + ... + x{n}^d` in `n + 1` variables.
pub fn fermat(nvars: usize, degree: usize) -> Result<Poly> {
    if nvars == 0 || degree == 0 {
        return Err(Error::InvalidArgument(
            "fermat:<n>:<d> needs n >= 1, d >= 1".into(),
        ));
    }
    let expr: Vec<String> = (0..nvars).map(|i| format!("x{i}^{degree}")).collect();
    Ok(parse_poly(&expr.join("+"), nvars)?)
}

/// Look up a fixture by name. `fermat:n:d` is parsed parametrically, with
/// `n` the projective dimension (so `n + 1` variables).
pub fn resolve(name: &str) -> Result<ResolvedInput> {
    if let Some(rest) = name.strip_prefix("fermat:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 2 {
            return Err(Error::UnknownFixture(name.to_string()));
        }
        let n: usize = parts[0]
            .parse()
            .map_err(|_| Error::UnknownFixture(name.to_string()))?;
        let d: usize = parts[1]
            .parse()
            .map_err(|_| Error::UnknownFixture(name.to_string()))?;
        if n == 0 || n > 9 || d == 0 || d > 16 {
            return Err(Error::InvalidArgument(format!(
                "fermat:{n}:{d} is outside the supported range (1 <= n <= 9, 1 <= d <= 16)"
            )));
        }
        return Ok(ResolvedInput {
            label: format!("fermat:{n}:{d}"),
            poly: fermat(n + 1, d)?,
        });
    }
    for fx in FIXTURES {
        if fx.name == name {
            let poly = parse_poly(fx.expr, fx.nvars)?;
            return Ok(ResolvedInput {
                label: fx.name.to_string(),
                poly,
            });
        }
    }
    Err(Error::UnknownFixture(name.to_string()))
}

/// Recorded expectation for one Milnor order: the polynomial part of the
/// Hilbert series and the optional constant tail.
#[derive(Clone, Copy, Debug)]
pub struct MilnorGolden {
    pub order: usize,
    pub polynomial: &'static [usize],
    pub tail: Option<usize>,
}

/// Published values a fixture must reproduce; `verify-paper` checks every
/// populated field.
#[derive(Clone, Copy, Debug, Default)]
pub struct Goldens {
    pub hilbert: Option<&'static [usize]>,
    pub milnor: &'static [MilnorGolden],
    /// Full Betti table of the apolar algebra as `(i, j, beta)` triples.
    pub betti: Option<&'static [(usize, usize, usize)]>,
    pub hessian_in_jacobian: Option<bool>,
    pub slp: Option<bool>,
    /// Levels whose Hessian determinant vanishes (SLP failure levels).
    pub slp_fail_levels: &'static [usize],
    pub classical_hessian_zero: Option<bool>,
    /// `(k, determinant is zero)` for the order-k grid over the acting
    /// monomial set, the convention of the worked examples.
    pub acting_grid_zero: &'static [(usize, bool)],
    /// `(k, degenerate)` for order-k polar maps.
    pub polar: &'static [(usize, bool)],
    pub dim_a2: Option<usize>,
}

const SMOOTH_QUARTIC_M1: MilnorGolden = MilnorGolden {
    order: 1,
    polynomial: &[1, 3, 6, 7, 6, 3, 1],
    tail: None,
};

const BETTI_GORENSTEIN_NET: &[(usize, usize, usize)] = &[
    (0, 0, 1),
    (1, 2, 3),
    (1, 4, 2),
    (2, 3, 2),
    (2, 5, 3),
    (3, 7, 1),
];
const BETTI_CI_223: &[(usize, usize, usize)] = &[
    (0, 0, 1),
    (1, 2, 2),
    (1, 3, 1),
    (2, 4, 1),
    (2, 5, 2),
    (3, 7, 1),
];
const BETTI_SEVEN_SEVEN: &[(usize, usize, usize)] = &[(0, 0, 1), (1, 3, 7), (2, 4, 7), (3, 7, 1)];
const BETTI_MIXED_22334: &[(usize, usize, usize)] = &[
    (0, 0, 1),
    (1, 2, 2),
    (1, 3, 2),
    (1, 4, 1),
    (2, 3, 1),
    (2, 4, 2),
    (2, 5, 2),
    (3, 7, 1),
];
const BETTI_FOUR_NODES: &[(usize, usize, usize)] = &[
    (0, 0, 1),
    (1, 2, 1),
    (1, 3, 4),
    (2, 4, 4),
    (2, 5, 1),
    (3, 7, 1),
];

/// Recorded expectations, keyed by fixture label.
pub fn goldens(name: &str) -> Option<Goldens> {
    let g = match name {
        "fermat:2:4" => Goldens {
            hilbert: Some(&[1, 3, 3, 3, 1]),
            milnor: &[
                SMOOTH_QUARTIC_M1,
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3, 3, 1],
                    tail: None,
                },
            ],
            betti: Some(BETTI_GORENSTEIN_NET),
            hessian_in_jacobian: Some(false),
            slp: Some(true),
            ..Goldens::default()
        },
        "caporali" => Goldens {
            hilbert: Some(&[1, 3, 4, 3, 1]),
            milnor: &[
                SMOOTH_QUARTIC_M1,
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3, 2],
                    tail: None,
                },
            ],
            betti: Some(BETTI_CI_223),
            hessian_in_jacobian: Some(false),
            slp: Some(true),
            ..Goldens::default()
        },
        "caporali1" => Goldens {
            hilbert: Some(&[1, 3, 6, 3, 1]),
            milnor: &[
                SMOOTH_QUARTIC_M1,
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3],
                    tail: None,
                },
            ],
            betti: Some(BETTI_SEVEN_SEVEN),
            hessian_in_jacobian: Some(false),
            slp: Some(true),
            ..Goldens::default()
        },
        "caporali2" => Goldens {
            hilbert: Some(&[1, 3, 4, 3, 1]),
            milnor: &[
                SMOOTH_QUARTIC_M1,
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3, 2],
                    tail: None,
                },
            ],
            betti: Some(BETTI_MIXED_22334),
            hessian_in_jacobian: Some(false),
            slp: Some(true),
            ..Goldens::default()
        },
        "quartic-e6" => Goldens {
            hilbert: Some(&[1, 3, 3, 3, 1]),
            milnor: &[
                MilnorGolden {
                    order: 1,
                    polynomial: &[1, 3, 6, 7, 7],
                    tail: Some(6),
                },
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3, 3],
                    tail: Some(2),
                },
            ],
            betti: Some(BETTI_GORENSTEIN_NET),
            hessian_in_jacobian: Some(true),
            slp: Some(true),
            ..Goldens::default()
        },
        "quartic-3a2" => Goldens {
            hilbert: Some(&[1, 3, 6, 3, 1]),
            milnor: &[
                MilnorGolden {
                    order: 1,
                    polynomial: &[1, 3, 6, 7],
                    tail: Some(6),
                },
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3],
                    tail: None,
                },
            ],
            betti: Some(BETTI_SEVEN_SEVEN),
            hessian_in_jacobian: Some(true),
            slp: Some(true),
            ..Goldens::default()
        },
        "quartic-2a3" => Goldens {
            hilbert: Some(&[1, 3, 4, 3, 1]),
            milnor: &[
                MilnorGolden {
                    order: 1,
                    polynomial: &[1, 3, 6, 7, 7],
                    tail: Some(6),
                },
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3, 2],
                    tail: None,
                },
            ],
            betti: Some(BETTI_MIXED_22334),
            hessian_in_jacobian: Some(true),
            slp: Some(true),
            ..Goldens::default()
        },
        "quartic-4a1" => Goldens {
            hilbert: Some(&[1, 3, 5, 3, 1]),
            milnor: &[
                MilnorGolden {
                    order: 1,
                    polynomial: &[1, 3, 6, 7, 6],
                    tail: Some(4),
                },
                MilnorGolden {
                    order: 2,
                    polynomial: &[1, 3, 1],
                    tail: None,
                },
            ],
            betti: Some(BETTI_FOUR_NODES),
            hessian_in_jacobian: Some(true),
            slp: Some(true),
            ..Goldens::default()
        },
        "lines-3x" => Goldens {
            hilbert: Some(&[1, 3, 4, 3, 1]),
            betti: Some(BETTI_CI_223),
            slp: Some(true),
            ..Goldens::default()
        },
        "triangle" => Goldens {
            hilbert: Some(&[1, 3, 3, 1]),
            milnor: &[
                MilnorGolden {
                    order: 1,
                    polynomial: &[1],
                    tail: Some(3),
                },
                MilnorGolden {
                    order: 2,
                    polynomial: &[1],
                    tail: None,
                },
            ],
            slp: Some(true),
            hessian_in_jacobian: Some(true),
            ..Goldens::default()
        },
        "gn-quintic" => Goldens {
            hilbert: Some(&[1, 5, 6, 5, 1]),
            classical_hessian_zero: Some(true),
            slp: Some(false),
            slp_fail_levels: &[1],
            acting_grid_zero: &[(2, true)],
            polar: &[(2, false)],
            ..Goldens::default()
        },
        "ikeda" => Goldens {
            hilbert: Some(&[1, 4, 10, 10, 4, 1]),
            classical_hessian_zero: Some(false),
            slp: Some(false),
            slp_fail_levels: &[2],
            acting_grid_zero: &[(2, true)],
            polar: &[(2, false)],
            dim_a2: Some(10),
            ..Goldens::default()
        },
        _ => return None,
    };
    Some(g)
}

/// Labels of all fixtures that carry goldens, in catalog order.
pub fn golden_labels() -> Vec<&'static str> {
    let mut out = vec!["fermat:2:4"];
    out.extend(FIXTURES.iter().map(|f| f.name));
    out
}
