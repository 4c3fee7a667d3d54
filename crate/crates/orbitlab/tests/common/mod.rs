#![allow(dead_code)] // each integration-test target uses its own slice

pub mod fk;
pub mod lattice;
pub mod lcg;
pub mod levi;
