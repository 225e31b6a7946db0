//! Each chapter of the guide is attached as a module doc so `cargo test`
//! runs its code blocks as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/spheres.md")]
pub mod spheres {}
#[doc = include_str!("../../../book/src/legendre.md")]
pub mod legendre {}
#[doc = include_str!("../../../book/src/cap_transform.md")]
pub mod cap_transform {}
#[doc = include_str!("../../../book/src/densities.md")]
pub mod densities {}
#[doc = include_str!("../../../book/src/discrepancy.md")]
pub mod discrepancy {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
