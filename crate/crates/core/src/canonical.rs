//! Normal forms for the small formats and a few worked tensors.
//!
//! Entries are listed as 1-based `(i,j,k)` positions holding a 1.

use std::fmt;

use crate::tensor::Tensor3;

/// Orbit label reported by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanonicalType {
    I,
    IIa,
    IIb,
    IIc,
    III,
    IV,
    /// A type IV core inside a larger format.
    IVEmbedded,
    V,
    VI,
    Concise224,
}

impl CanonicalType {
    pub fn label(self) -> &'static str {
        match self {
            CanonicalType::I => "I",
            CanonicalType::IIa => "IIa",
            CanonicalType::IIb => "IIb",
            CanonicalType::IIc => "IIc",
            CanonicalType::III => "III",
            CanonicalType::IV => "IV",
            CanonicalType::IVEmbedded => "IV-embedded",
            CanonicalType::V => "V",
            CanonicalType::VI => "VI",
            CanonicalType::Concise224 => "concise-(2,2,4)",
        }
    }
}

impl fmt::Display for CanonicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form222 {
    I,
    IIa,
    IIb,
    IIc,
    III,
    IV,
}

impl Form222 {
    pub const ALL: [Form222; 6] = [Form222::I, Form222::IIa, Form222::IIb, Form222::IIc, Form222::III, Form222::IV];

    pub fn ones(self) -> &'static [(usize, usize, usize)] {
        match self {
            Form222::I => &[(1, 1, 1)],
            Form222::IIa => &[(1, 1, 1), (2, 2, 1)],
            Form222::IIb => &[(1, 1, 1), (2, 1, 2)],
            Form222::IIc => &[(1, 1, 1), (1, 2, 2)],
            Form222::III => &[(1, 1, 2), (1, 2, 1), (2, 1, 1)],
            Form222::IV => &[(1, 1, 1), (2, 2, 2)],
        }
    }

    pub fn tensor(self) -> Tensor3 {
        Tensor3::from_ones([2, 2, 2], self.ones())
    }

    pub fn canonical_type(self) -> CanonicalType {
        match self {
            Form222::I => CanonicalType::I,
            Form222::IIa => CanonicalType::IIa,
            Form222::IIb => CanonicalType::IIb,
            Form222::IIc => CanonicalType::IIc,
            Form222::III => CanonicalType::III,
            Form222::IV => CanonicalType::IV,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form223 {
    I,
    IIa,
    IIb,
    IIc,
    III,
    IV,
    Va,
    Vb,
    VI,
}

impl Form223 {
    pub const ALL: [Form223; 9] = [
        Form223::I,
        Form223::IIa,
        Form223::IIb,
        Form223::IIc,
        Form223::III,
        Form223::IV,
        Form223::Va,
        Form223::Vb,
        Form223::VI,
    ];

    pub fn ones(self) -> &'static [(usize, usize, usize)] {
        match self {
            Form223::I => &[(1, 1, 1)],
            Form223::IIa => &[(1, 1, 1), (2, 2, 1)],
            Form223::IIb => &[(1, 1, 1), (2, 1, 2)],
            Form223::IIc => &[(1, 1, 1), (1, 2, 2)],
            Form223::III => &[(1, 1, 1), (1, 2, 2), (2, 1, 2)],
            Form223::IV => &[(1, 1, 1), (2, 2, 2)],
            Form223::Va => &[(1, 1, 1), (1, 2, 2), (2, 2, 3)],
            Form223::Vb => &[(1, 1, 1), (2, 1, 2), (2, 2, 3)],
            Form223::VI => &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 3)],
        }
    }

    pub fn tensor(self) -> Tensor3 {
        Tensor3::from_ones([2, 2, 3], self.ones())
    }

    pub fn name(self) -> &'static str {
        match self {
            Form223::I => "I",
            Form223::IIa => "IIa",
            Form223::IIb => "IIb",
            Form223::IIc => "IIc",
            Form223::III => "III",
            Form223::IV => "IV",
            Form223::Va => "Va",
            Form223::Vb => "Vb",
            Form223::VI => "VI",
        }
    }

    /// Va and Vb lie in one orbit (reverse all three bases), so both
    /// report `V`.
    pub fn canonical_type(self) -> CanonicalType {
        match self {
            Form223::I => CanonicalType::I,
            Form223::IIa => CanonicalType::IIa,
            Form223::IIb => CanonicalType::IIb,
            Form223::IIc => CanonicalType::IIc,
            Form223::III => CanonicalType::III,
            Form223::IV => CanonicalType::IVEmbedded,
            Form223::Va | Form223::Vb => CanonicalType::V,
            Form223::VI => CanonicalType::VI,
        }
    }
}

/// The concise `(2,2,4)` normal form: `N = [[z1, z4], [z2, z3]]`.
pub fn concise_224() -> Tensor3 {
    Tensor3::from_ones([2, 2, 4], &[(1, 1, 1), (1, 2, 4), (2, 1, 2), (2, 2, 3)])
}

/// A `(2,2,3)` tensor whose z-rank is 3 while its x- and y-ranks are 2.
pub fn unequal_index_ranks_223() -> Tensor3 {
    Tensor3::from_z_slices(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[1, 0]], &[&[1, 1], &[1, 0]]])
}

/// A concise `(3,3,4)` tensor whose `N` has a bidegenerate singular point
/// at `(1,1,0,-1)`.
pub fn bidegenerate_node_334() -> Tensor3 {
    Tensor3::from_z_slices(&[
        &[&[1, 1, 1], &[0, 1, 1], &[1, 0, 2]],
        &[&[0, 1, 2], &[1, 0, 1], &[0, 1, 1]],
        &[&[1, 1, 2], &[0, -1, 0], &[0, 0, 0]],
        &[&[1, 2, 1], &[1, 1, 1], &[1, 1, 1]],
    ])
}

/// A concise degenerate `(3,3,4)` tensor; `(0,1,1,0)` is a degenerate,
/// non-bidegenerate point of `N`.
pub fn degenerate_334() -> Tensor3 {
    Tensor3::from_z_slices(&[
        &[&[1, 0, 0], &[0, 0, 1], &[1, 0, 0]],
        &[&[0, 0, 1], &[0, 1, 0], &[0, 0, 0]],
        &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]],
        &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]],
    ])
}
