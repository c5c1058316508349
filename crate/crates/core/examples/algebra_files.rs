//! The text format: parsing, errors with line numbers, canonical output.

use syzygy_lab::lab::{self, AlgebraFile};

fn main() {
    let text = "# a path of length two\nfield gf 3\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrelation a*b\nnilpotency 2\n";
    let file = AlgebraFile::parse(text).unwrap();
    let alg = file.build().unwrap();
    println!("parsed: dim {} over {}", alg.dim(), alg.field().label());
    print!("canonical form:\n{}", file.to_text());

    for broken in ["", "field gf 2\nvertex 1\nrelation z*z\nnilpotency 2\n", "field gf 2\nvertx 1\n"] {
        println!("{:?} -> {}", broken, AlgebraFile::parse(broken).unwrap_err());
    }

    println!("built-in examples: {}", lab::example_names().join(", "));
    print!("{}", lab::example_text("loc3").unwrap());
}
