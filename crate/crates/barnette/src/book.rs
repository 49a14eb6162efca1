//! Doc-tests for the book chapters: every fenced Rust block in `book/src`
//! compiles and runs under `cargo test --doc`, keeping the guide honest.
#![cfg(doctest)]

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct IntroductionChapter;

#[doc = include_str!("../../../book/src/plane-graphs.md")]
pub struct PlaneGraphsChapter;

#[doc = include_str!("../../../book/src/duals-and-colorings.md")]
pub struct DualsAndColoringsChapter;

#[doc = include_str!("../../../book/src/a-trails.md")]
pub struct ATrailsChapter;

#[doc = include_str!("../../../book/src/face-trees.md")]
pub struct FaceTreesChapter;

#[doc = include_str!("../../../book/src/leapfrog.md")]
pub struct LeapfrogChapter;

#[doc = include_str!("../../../book/src/parity.md")]
pub struct ParityChapter;

#[doc = include_str!("../../../book/src/reductions.md")]
pub struct ReductionsChapter;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct CliChapter;
