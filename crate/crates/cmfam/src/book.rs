//! The guide chapters under `book/` double as doctests: every fenced Rust
//! block in the book compiles and runs against this crate via
//! `cargo test --doc`. mdbook renders the same files.

#[cfg(doctest)]
macro_rules! chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        pub struct $name;
    };
}

#[cfg(doctest)]
chapter!(Introduction, "../../../book/src/introduction.md");
#[cfg(doctest)]
chapter!(ExactArithmetic, "../../../book/src/exact-arithmetic.md");
#[cfg(doctest)]
chapter!(ReflectionGroups, "../../../book/src/reflection-groups.md");
#[cfg(doctest)]
chapter!(
    CharactersAndFakeDegrees,
    "../../../book/src/characters-and-fake-degrees.md"
);
#[cfg(doctest)]
chapter!(EulerFamilies, "../../../book/src/euler-families.md");
#[cfg(doctest)]
chapter!(Supersingularity, "../../../book/src/supersingularity.md");
#[cfg(doctest)]
chapter!(RouquierComparison, "../../../book/src/rouquier-comparison.md");
#[cfg(doctest)]
chapter!(CliAndData, "../../../book/src/cli-and-data.md");
