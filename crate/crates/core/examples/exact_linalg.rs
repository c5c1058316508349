//! Row reduction, kernels and quotients over GF(p) and ℚ.

use syzygy_lab::linalg::{quotient_with_section, Field, Matrix};

fn main() {
    for field in [Field::gf2(), Field::prime(5).unwrap(), Field::Rationals] {
        let m = Matrix::from_i64(field, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ech = m.row_reduce();
        println!("over {}: rank {} pivots {:?}", field.label(), ech.rank, ech.pivots);
        println!("{}", ech.reduced);
        let kernel = m.kernel_basis();
        println!("kernel basis ({} vectors):\n{kernel}", kernel.rows());
        let q = quotient_with_section(field, 3, &m.row_space()).unwrap();
        println!("k^3 / rowspace has dimension {}\n", q.dim());
    }
}
