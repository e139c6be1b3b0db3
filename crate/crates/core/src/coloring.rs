//! Two-class edge colourings of the hypercube.
//!
//! Every edge of the hypercube flips exactly one dimension, and its colour is
//! the class of that dimension. The `(j)`-colouring puts dimensions `1..=j`
//! in class 1; a general colouring (the `j*` form) uses any nonempty proper
//! subset of dimensions for class 1.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ColorClass {
    One,
    Two,
}

impl ColorClass {
    pub fn other(self) -> Self {
        match self {
            ColorClass::One => ColorClass::Two,
            ColorClass::Two => ColorClass::One,
        }
    }

    /// Colour label used on graph edges (1 or 2).
    pub fn label(self) -> u16 {
        match self {
            ColorClass::One => 1,
            ColorClass::Two => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    classes: Vec<ColorClass>,
    class1: Vec<usize>,
    class2: Vec<usize>,
}

impl Coloring {
    /// The `(j)`-colouring of `H_n`: dimensions `1..=j` get colour 1.
    pub fn prefix(n: usize, j: usize) -> Result<Self> {
        Coloring::from_class1(n, 1..=j)
    }

    /// Colouring with an explicit class-1 dimension set; the rest is class 2.
    pub fn from_class1(n: usize, class1: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewDimensions(n));
        }
        let mut classes = vec![ColorClass::Two; n];
        for dim in class1 {
            if dim == 0 || dim > n {
                return Err(Error::DimensionOutOfRange { dim, n });
            }
            if classes[dim - 1] == ColorClass::One {
                return Err(Error::InvalidColoring(format!(
                    "dimension {dim} listed twice"
                )));
            }
            classes[dim - 1] = ColorClass::One;
        }
        Coloring::from_classes(classes)
    }

    /// Colouring from one class per dimension, `classes[0]` being dimension 1.
    pub fn from_classes(classes: Vec<ColorClass>) -> Result<Self> {
        let n = classes.len();
        if n < 2 {
            return Err(Error::TooFewDimensions(n));
        }
        let (class1, class2): (Vec<usize>, Vec<usize>) =
            (1..=n).partition(|&d| classes[d - 1] == ColorClass::One);
        if class1.is_empty() || class2.is_empty() {
            return Err(Error::InvalidColoring(
                "both colour classes must be nonempty".to_string(),
            ));
        }
        Ok(Coloring {
            classes,
            class1,
            class2,
        })
    }

    /// Parses `j=K` or a comma-separated class-1 dimension list such as `1,3,4`.
    pub fn parse(n: usize, spec: &str) -> Result<Self> {
        let spec_trim = spec.trim();
        if let Some(rest) = spec_trim.strip_prefix("j=") {
            let j = rest
                .parse::<usize>()
                .map_err(|e| Error::parse(spec, 2, e.to_string()))?;
            return Coloring::prefix(n, j);
        }
        let mut dims = Vec::new();
        let mut offset = 0;
        for part in spec.split(',') {
            let token = part.trim();
            let dim = token.parse::<usize>().map_err(|_| {
                let lead = part.len() - part.trim_start().len();
                Error::parse(
                    spec,
                    offset + lead,
                    format!("expected a dimension number, found {token:?}"),
                )
            })?;
            dims.push(dim);
            offset += part.len() + 1;
        }
        Coloring::from_class1(n, dims)
    }

    pub fn dims(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, dim: usize) -> ColorClass {
        self.classes[dim - 1]
    }

    /// Dimensions in `class`, ascending.
    pub fn members(&self, class: ColorClass) -> &[usize] {
        match class {
            ColorClass::One => &self.class1,
            ColorClass::Two => &self.class2,
        }
    }

    pub fn class1(&self) -> &[usize] {
        &self.class1
    }

    pub fn class2(&self) -> &[usize] {
        &self.class2
    }

    pub fn class_size(&self, class: ColorClass) -> usize {
        self.members(class).len()
    }

    /// `Some(j)` when this is the `(j)`-colouring.
    pub fn prefix_len(&self) -> Option<usize> {
        let j = self.class1.len();
        (self.class1.iter().copied().eq(1..=j)).then_some(j)
    }

    pub(crate) fn check_vertex(&self, v: &Vertex) -> Result<()> {
        if v.dims() != self.dims() {
            return Err(Error::mismatch("vertex", self.dims(), v.dims()));
        }
        Ok(())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.prefix_len() {
            Some(j) => write!(f, "j={j}"),
            None => {
                let parts: Vec<String> = self.class1.iter().map(|d| d.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}
