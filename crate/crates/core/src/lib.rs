//! Growth series, cogrowth and spectral-radius bounds for the regular
//! tessellation graphs `X(l, m)`: `m`-gons, `l` of them at every vertex.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod grammar;
pub mod series;
pub mod tessellation;
