//! Constructive bijections between multichains and shifted tableaux, and
//! the tableau maps that transport the counting identities for minimal
//! small-interval chains. Every map validates its input eagerly and reports
//! the violated condition.

mod prefix;
mod prime;
mod product;
mod theta;

pub use prefix::{check_prefix_chain, prefix_map, prefix_map_inverse, PrefixBands};
pub use prime::{prime_map, prime_map_inverse, type_v_chain_to_v_tableau, v_tableau_to_type_v_chain, PrimeImage};
pub use product::{merge_product, restore_first_row, split_product, strip_first_row};
pub use theta::{classify_via_theta, theta, theta_inv, ThetaContext};
