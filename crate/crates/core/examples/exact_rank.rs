//! Rank, kernel and interchange round trip over F_p.

use steinerlab::{DenseMatrix, PrimeField};

fn main() -> steinerlab::Result<()> {
    let field = PrimeField::new(101)?;
    let m = DenseMatrix::from_rows(&[[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, -1, 5]], field);
    println!(
        "rank {} kernel dim {} cokernel dim {}",
        m.rank(),
        m.kernel_dim(),
        m.cokernel_dim()
    );
    for v in m.kernel_basis() {
        println!("kernel vector {v:?} -> {:?}", m.mul_vec(&v));
    }

    let text = m.to_interchange();
    print!("{text}");
    assert_eq!(DenseMatrix::parse_interchange(&text)?, m);

    let inv = DenseMatrix::from_rows(&[[2, 1], [1, 1]], field)
        .inverse()
        .expect("invertible");
    println!(
        "inverse of [[2,1],[1,1]]: {:?} {:?}",
        inv.row(0),
        inv.row(1)
    );
    Ok(())
}
