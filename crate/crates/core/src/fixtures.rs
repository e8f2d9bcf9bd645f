//! Named small digraphs: the exception catalog and a few reference shapes.

use serde::Serialize;

use crate::digraph::Digraph;

/// Vertex roles attached to a fixture, where the fixture has them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Roles {
    pub u: Option<usize>,
    pub v: Option<usize>,
    pub w: Option<usize>,
    pub z: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub digraph: Digraph,
    pub roles: Roles,
}

fn build(name: &'static str, n: usize, arcs: &[(usize, usize)], roles: Roles) -> Fixture {
    Fixture {
        name,
        digraph: Digraph::from_arcs(n, arcs).expect("fixture arcs are well formed"),
        roles,
    }
}

fn uv(u: usize, v: usize) -> Roles {
    Roles {
        u: Some(u),
        v: Some(v),
        ..Roles::default()
    }
}

pub fn fig_a() -> Fixture {
    build("FIG_A", 2, &[(0, 1)], uv(0, 1))
}

pub fn fig_b() -> Fixture {
    build("FIG_B", 3, &[(0, 1), (1, 2), (0, 2)], uv(0, 2))
}

pub fn fig_c() -> Fixture {
    build("FIG_C", 3, &[(0, 1), (1, 2), (0, 2), (2, 0)], uv(0, 2))
}

pub fn fig_d() -> Fixture {
    build(
        "FIG_D",
        4,
        &[(0, 1), (1, 2), (0, 2), (3, 0), (1, 3), (2, 3)],
        uv(0, 3),
    )
}

pub fn fig_e() -> Fixture {
    build(
        "FIG_E",
        4,
        &[(1, 0), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2), (2, 1)],
        Roles {
            u: Some(0),
            v: Some(1),
            w: Some(2),
            z: Some(3),
        },
    )
}

pub fn fig_f() -> Fixture {
    build(
        "FIG_F",
        4,
        &[(0, 1), (1, 2), (0, 2), (3, 0), (1, 3), (2, 3), (2, 0)],
        uv(0, 3),
    )
}

pub fn s4() -> Fixture {
    build(
        "S4",
        4,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (1, 3),
            (3, 1),
            (0, 2),
            (2, 0),
        ],
        Roles::default(),
    )
}

pub fn c3() -> Fixture {
    build("C3", 3, &[(0, 1), (1, 2), (2, 0)], Roles::default())
}

pub fn k3() -> Fixture {
    Fixture {
        name: "K3",
        digraph: Digraph::complete(3),
        roles: Roles::default(),
    }
}

/// The 3-cycle with roles `u = 0`, `w = 1`, `v = 2`.
pub fn typea3() -> Fixture {
    build(
        "TYPEA3",
        3,
        &[(0, 1), (1, 2), (2, 0)],
        Roles {
            u: Some(0),
            v: Some(2),
            w: Some(1),
            z: None,
        },
    )
}

/// Four singleton layers with back arcs `2 -> 0` and `3 -> 1`.
pub fn chain4() -> Fixture {
    build(
        "CHAIN4",
        4,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 0),
            (3, 1),
        ],
        Roles {
            u: Some(3),
            v: Some(1),
            w: Some(2),
            z: None,
        },
    )
}

/// The six exception digraphs, in catalog order `a..f`.
pub fn catalog() -> Vec<Fixture> {
    vec![fig_a(), fig_b(), fig_c(), fig_d(), fig_e(), fig_f()]
}

pub fn all() -> Vec<Fixture> {
    let mut v = catalog();
    v.extend([s4(), c3(), k3(), chain4(), typea3()]);
    v
}

/// Case-insensitive lookup by name.
pub fn by_name(name: &str) -> Option<Fixture> {
    all()
        .into_iter()
        .find(|f| f.name.eq_ignore_ascii_case(name))
}
