use std::fmt;
use std::str::FromStr;

use super::distribution::DistributionField;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViewAxis {
    X,
    Y,
    Z,
}

impl ViewAxis {
    /// `(view, e_u, e_v)` with `e_u × e_v = view`.
    fn frame(self) -> ([f64; 3], [f64; 3], [f64; 3]) {
        match self {
            ViewAxis::X => ([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]),
            ViewAxis::Y => ([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]),
            ViewAxis::Z => ([0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]),
        }
    }
}

impl FromStr for ViewAxis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Ok(ViewAxis::X),
            "y" => Ok(ViewAxis::Y),
            "z" => Ok(ViewAxis::Z),
            other => Err(format!("unknown axis '{other}', expected x, y or z")),
        }
    }
}

impl fmt::Display for ViewAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViewAxis::X => "x",
            ViewAxis::Y => "y",
            ViewAxis::Z => "z",
        })
    }
}

/// Square raster over `[-1, 1]²`; row 0 is `v = +1`, column 0 is `u = -1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    pub size: usize,
    pub data: Vec<f64>,
}

impl Image {
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.size + col]
    }

    /// Plane coordinates `(u, v)` of a pixel centre.
    pub fn coords(&self, row: usize, col: usize) -> (f64, f64) {
        let step = 2.0 / self.size as f64;
        (
            -1.0 + (col as f64 + 0.5) * step,
            1.0 - (row as f64 + 0.5) * step,
        )
    }

    pub fn max(&self) -> f64 {
        self.data.iter().copied().fold(0.0, f64::max)
    }

    /// Binary PGM (P5), gray levels mapped linearly from 0 to the image maximum.
    pub fn to_pgm(&self) -> Vec<u8> {
        let max = self.max();
        let mut out = format!("P5\n{} {}\n255\n", self.size, self.size).into_bytes();
        out.extend(self.data.iter().map(|&v| {
            if max > 0.0 {
                (v / max * 255.0).round().clamp(0.0, 255.0) as u8
            } else {
                0
            }
        }));
        out
    }
}

/// Cosine below which the projection Jacobian `1/|cos α|` is held fixed.
const MIN_COS: f64 = 0.05;

/// Density of molecular-axis directions projected on the plane perpendicular to
/// `view`: `I(u,v) = [ρ(n₊) + ρ(n₋)] / max(|cos α|, 0.05)`, `n± = u e_u + v e_v ± cos α view`.
pub fn project_image(field: &DistributionField, view: ViewAxis, size: usize) -> Image {
    let (a, eu, ev) = view.frame();
    let mut data = vec![0.0; size * size];
    let mut img = Image {
        size,
        data: Vec::new(),
    };
    for row in 0..size {
        for col in 0..size {
            let (u, v) = img.coords(row, col);
            let r2 = u * u + v * v;
            if r2 > 1.0 {
                continue;
            }
            let w = (1.0 - r2).sqrt();
            let dir = |s: f64| -> [f64; 3] {
                std::array::from_fn(|i| u * eu[i] + v * ev[i] + s * w * a[i])
            };
            data[row * size + col] =
                (field.sample(dir(1.0)) + field.sample(dir(-1.0))) / w.max(MIN_COS);
        }
    }
    img.data = data;
    img
}
