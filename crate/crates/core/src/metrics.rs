//! Pairwise metrics on a coloured hypercube: per-class differences, the
//! parity indicator, and the proper distance.

use serde::{Deserialize, Serialize};

use crate::coloring::{ColorClass, Coloring};
use crate::error::Result;
use crate::vertex::Vertex;

/// Everything the closed forms need to know about a vertex pair.
///
/// The *surplus* side is the colour class with `max(o, t)` differing
/// dimensions, the *deficit* side the other one. When `o == t` the deficit
/// side is class 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairProfile {
    /// Differing dimensions in class 1.
    pub o: usize,
    /// Differing dimensions in class 2.
    pub t: usize,
    pub gamma: usize,
    pub pd: usize,
    pub surplus: usize,
    pub deficit_class: ColorClass,
    /// Number of differing dimensions on the deficit side, `min(o, t)`.
    pub deficit_d: usize,
    /// Size of the deficit colour class.
    pub deficit_l: usize,
    /// Flips made on the deficit side along a shortest proper path.
    pub m: usize,
}

impl PairProfile {
    /// Profile for a pair with `o` class-1 and `t` class-2 differences under
    /// a colouring whose classes have `class1_size` and `class2_size`
    /// dimensions.
    pub fn from_counts(o: usize, t: usize, class1_size: usize, class2_size: usize) -> Self {
        let gamma = (o + t) % 2;
        let surplus = o.max(t);
        let deficit_class = if o < t {
            ColorClass::One
        } else {
            ColorClass::Two
        };
        let deficit_l = match deficit_class {
            ColorClass::One => class1_size,
            ColorClass::Two => class2_size,
        };
        let (pd, m) = if o + t == 0 {
            (0, 0)
        } else {
            (2 * surplus - gamma, surplus - gamma)
        };
        PairProfile {
            o,
            t,
            gamma,
            pd,
            surplus,
            deficit_class,
            deficit_d: o.min(t),
            deficit_l,
            m,
        }
    }

    pub fn surplus_class(&self) -> ColorClass {
        self.deficit_class.other()
    }

    /// Differing dimensions on `class`.
    pub fn differing(&self, class: ColorClass) -> usize {
        match class {
            ColorClass::One => self.o,
            ColorClass::Two => self.t,
        }
    }
}

/// `(o, t)`: differing dimensions in class 1 and in class 2.
pub fn class_difference(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<(usize, usize)> {
    u.same_dims(v)?;
    c.check_vertex(u)?;
    let (mut o, mut t) = (0, 0);
    for dim in 1..=u.dims() {
        if u.bit(dim) != v.bit(dim) {
            match c.class_of(dim) {
                ColorClass::One => o += 1,
                ColorClass::Two => t += 1,
            }
        }
    }
    Ok((o, t))
}

/// `(o + t) mod 2`.
pub fn gamma(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<usize> {
    let (o, t) = class_difference(u, v, c)?;
    Ok((o + t) % 2)
}

/// Length of a shortest properly coloured path: `2 max(o, t) - gamma`, or 0
/// for `u == v`.
pub fn proper_distance(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<usize> {
    Ok(pair_profile(u, v, c)?.pd)
}

pub fn pair_profile(u: &Vertex, v: &Vertex, c: &Coloring) -> Result<PairProfile> {
    let (o, t) = class_difference(u, v, c)?;
    Ok(PairProfile::from_counts(
        o,
        t,
        c.class_size(ColorClass::One),
        c.class_size(ColorClass::Two),
    ))
}
