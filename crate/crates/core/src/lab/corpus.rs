use super::{AlgebraFile, LabError};

/// Built-in example algebras, all over `GF(2)`.
pub const EXAMPLES: &[(&str, &str)] = &[
    (
        "loc3",
        "field gf 2\nvertex 1\narrow x 1 1\narrow y 1 1\nrelation x*x\nrelation x*y\nrelation y*x\nrelation y*y\nnilpotency 2\n",
    ),
    ("ss1", "field gf 2\nvertex 1\nnilpotency 1\n"),
    ("dual2", "field gf 2\nvertex 1\narrow x 1 1\nrelation x*x\nnilpotency 2\n"),
    ("a2", "field gf 2\nvertex 1\nvertex 2\narrow a 1 2\nnilpotency 2\n"),
    ("a3", "field gf 2\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nnilpotency 3\n"),
    (
        "nakayama-3-2",
        "field gf 2\nvertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrelation a*b\nrelation b*c\nrelation c*a\nnilpotency 2\n",
    ),
];

pub fn example_names() -> Vec<&'static str> {
    EXAMPLES.iter().map(|(n, _)| *n).collect()
}

pub fn example_text(name: &str) -> Result<&'static str, LabError> {
    EXAMPLES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| LabError::UnknownExample { name: name.to_string(), known: example_names().join(", ") })
}

pub fn example(name: &str) -> Result<AlgebraFile, LabError> {
    AlgebraFile::parse(example_text(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_round_trips() {
        for name in example_names() {
            let file = example(name).unwrap();
            assert_eq!(file.to_text(), example_text(name).unwrap());
            let a = file.build().unwrap();
            let b = AlgebraFile::parse(&file.to_text()).unwrap().build().unwrap();
            assert!(a.same_as(&b));
        }
    }

    #[test]
    fn corpus_dimensions() {
        let dims: Vec<usize> = example_names().iter().map(|n| example(n).unwrap().build().unwrap().dim()).collect();
        assert_eq!(dims, vec![3, 1, 2, 3, 6, 6]);
    }

    #[test]
    fn unknown_example_lists_names() {
        let err = example("nope").unwrap_err();
        assert!(err.to_string().contains("loc3, ss1, dual2, a2, a3, nakayama-3-2"));
    }
}
