//! Exact character-sum machinery for `|S ∩ (S+1)|`.

mod character;
mod closed;
mod cyclotomic;
mod tables;

pub use character::{
    count_direct, count_jacobi, count_jacobi_with, fermat_vanishing, mod6_predict, BetaData, CharContext,
    Mod6Prediction,
};
pub use closed::{
    closed_form, closed_form_n6, closed_form_q5, closed_form_q7, quad_decomp, rsuv_split, ClosedFormBranch,
    ClosedFormValue, QuadDecomp, QuadForm,
};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInt};
pub use tables::{jacobi_table_order2, jacobi_table_order4, jacobi_table_order6};
