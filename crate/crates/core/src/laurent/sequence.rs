//! Running products along cluster sequences.
//!
//! For a finite type with ordered catalog rows `(c_{1;i}, c_{2;i})` and a
//! sequence `l_1, .., l_m` of row indices, form
//! `F_{i,l_1} F_{i,l_2} .. F_{i,l_j}` with `F_1 = X1`, `F_2 = X2`, and ask
//! whether each prefix product (length 2 and up) is reductive. The finiteness
//! argument for finite-type equations rests on these products.

use super::{is_reductive, LaurentPoly};
use crate::seeds::{enumerate_finite_type, FiniteType};
use crate::QRationalFn;

/// The 1-based row sequence used for each type.
///
/// For `B2` the displayed products use the rows `(1, 2, 6, 3, 5, 4)`.
pub fn cluster_sequence(ty: FiniteType) -> &'static [usize] {
    match ty {
        FiniteType::A1xA1 => &[1, 2, 4, 3],
        FiniteType::A2 => &[1, 2, 6, 7, 5, 10, 3, 8, 4, 9],
        FiniteType::B2 => &[1, 2, 6, 3, 5, 4],
        FiniteType::G2 => &[1, 2, 8, 3, 7, 6, 5, 4],
    }
}

#[derive(Clone, Debug)]
pub struct SequenceProduct {
    /// 1 for `F_1 = X1`, 2 for `F_2 = X2`.
    pub component: usize,
    /// Number of factors.
    pub prefix_len: usize,
    pub value: QRationalFn,
    pub reductive: bool,
}

#[derive(Clone, Debug)]
pub struct SequenceReport {
    pub ty: FiniteType,
    pub sequence: Vec<usize>,
    pub products: Vec<SequenceProduct>,
}

impl SequenceReport {
    pub fn product(&self, component: usize, prefix_len: usize) -> Option<&SequenceProduct> {
        self.products
            .iter()
            .find(|p| p.component == component && p.prefix_len == prefix_len)
    }

    /// Products that fail to be reductive.
    pub fn non_reductive(&self) -> Vec<&SequenceProduct> {
        self.products.iter().filter(|p| !p.reductive).collect()
    }
}

pub fn check_sequence_reductivity(ty: FiniteType) -> SequenceReport {
    let cat = enumerate_finite_type(ty);
    let seq = cluster_sequence(ty);
    let mut products = Vec::new();
    for component in 1..=2 {
        let mut acc = QRationalFn::one(2);
        for (j, &row) in seq.iter().enumerate() {
            let (a, b) = &cat.clusters[row - 1];
            acc = &acc * if component == 1 { a } else { b };
            if j == 0 {
                continue;
            }
            let reductive = LaurentPoly::from_rational(&acc)
                .and_then(|l| is_reductive(&l).ok().flatten())
                .is_some();
            products.push(SequenceProduct {
                component,
                prefix_len: j + 1,
                value: acc.clone(),
                reductive,
            });
        }
    }
    SequenceReport {
        ty,
        sequence: seq.to_vec(),
        products,
    }
}
