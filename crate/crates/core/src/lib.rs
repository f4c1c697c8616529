//! Exhaustive coherence checking for finite doubly-monoidal (DD) categories,
//! their weak maps, and the monad-term calculus of weakly distributive pairs
//! of algebras.
//!
//! Everything is finite and checked by enumeration. Every checker returns a
//! [`report::Report`] naming each violated axiom instance.

pub mod corpus;
pub mod ddcat;
pub mod document;
pub mod fincat;
pub mod monadterm;
pub mod monoidal;
pub mod report;
pub mod rigmodel;
pub mod weakmap;
