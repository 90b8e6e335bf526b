//! Dense single-channel H×W scalar field, the common currency of the image
//! pipeline. Values are `f64`; row-major storage.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    data: Vec<f64>,
    height: usize,
    width: usize,
}

impl Field {
    pub fn zeros(height: usize, width: usize) -> Self {
        Field {
            data: vec![0.0; height * width],
            height,
            width,
        }
    }

    pub fn constant(height: usize, width: usize, value: f64) -> Self {
        Field {
            data: vec![value; height * width],
            height,
            width,
        }
    }

    pub fn from_vec(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != height * width {
            return Err(Error::Shape(format!(
                "expected {}x{}={} values, got {}",
                height,
                width,
                height * width,
                data.len()
            )));
        }
        Ok(Field {
            data,
            height,
            width,
        })
    }

    /// Build a field by evaluating `f(y, x)` at every pixel.
    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(height * width);
        for y in 0..height {
            for x in 0..width {
                data.push(f(y, x));
            }
        }
        Field {
            data,
            height,
            width,
        }
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> f64 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, y: usize, x: usize, v: f64) {
        self.data[y * self.width + x] = v;
    }

    #[inline]
    pub fn values(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Field {
        Field {
            data: self.data.iter().map(|&v| f(v)).collect(),
            height: self.height,
            width: self.width,
        }
    }

    /// Elementwise combination of two same-shape fields.
    pub fn zip_map(&self, other: &Field, f: impl Fn(f64, f64) -> f64) -> Result<Field> {
        same_shape(self, other)?;
        Ok(Field {
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
            height: self.height,
            width: self.width,
        })
    }

    pub fn mean(&self) -> f64 {
        if self.data.is_empty() {
            return 0.0;
        }
        self.data.iter().sum::<f64>() / self.data.len() as f64
    }

    pub fn min(&self) -> f64 {
        self.data.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.data.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn clamp(&self, lo: f64, hi: f64) -> Field {
        self.map(|v| v.clamp(lo, hi))
    }
}

/// Check that every listed field shares one shape.
pub fn same_shape(a: &Field, b: &Field) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::Shape(format!(
            "{}x{} vs {}x{}",
            a.height, a.width, b.height, b.width
        )));
    }
    Ok(())
}

pub fn same_shape_all(fields: &[&Field]) -> Result<()> {
    for pair in fields.windows(2) {
        same_shape(pair[0], pair[1])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_rejects_bad_length() {
        assert!(Field::from_vec(2, 2, vec![0.0; 3]).is_err());
    }

    #[test]
    fn indexing_is_row_major() {
        let f = Field::from_fn(2, 3, |y, x| (y * 10 + x) as f64);
        assert_eq!(f.get(0, 2), 2.0);
        assert_eq!(f.get(1, 0), 10.0);
        assert_eq!(f.values()[5], 12.0);
    }

    #[test]
    fn zip_map_checks_shape() {
        let a = Field::zeros(2, 2);
        let b = Field::zeros(2, 3);
        assert!(a.zip_map(&b, |x, y| x + y).is_err());
    }
}
