//! Noncommutative polynomials in `a, b` and `c, d`, the coproduct, and the
//! operators built from it.

mod coproduct;
mod maps;
mod normal_form;
mod phi;
mod poly;
mod text;
mod word;

pub use coproduct::{
    contract, coproduct, coproduct_tensor, coproduct_word, delete_positions, kary_coproduct, kary_coproduct_tensor,
    Tensor,
};
pub use maps::{beta, eta, h_prime, kappa, lambda_t, lambda_ub, letter_map, omega, omega_word, r_map, LetterMap};
pub use normal_form::{ab_to_cd, exact_half, projective_half, torus_normal_form, TorusNormalForm};
pub use phi::{phi, phi_t, phi_ub};
pub use poly::{AbPolynomial, CdPolynomial, NcPoly};
pub use text::{parse_ab, parse_cd, parse_poly, parse_torus_form};
pub use word::{words_of_degree, Ab, AbWord, Cd, CdWord, Letter, Word};
