//! Monomial bases of S^d V and the coordinate frame attached to a hyperplane.

use steinerlab::multilin::{mono_basis, quad_index, HyperplaneFrame, MonoBasis};
use steinerlab::PrimeField;

fn main() -> steinerlab::Result<()> {
    for d in 0..=3 {
        println!("dim S^{d} V = {}", MonoBasis::new(d).len());
    }
    let s2 = mono_basis(2)?;
    let names: Vec<String> = s2.monomials().iter().map(|m| m.to_string()).collect();
    println!("degree 2 order: {}", names.join(" "));
    println!("x2*x4 sits at index {}", quad_index(1, 3));

    let field = PrimeField::default();
    let frame = HyperplaneFrame::new([0, 1, 2, 3], field)?;
    println!("H = ker(x2 + 2 x3 + 3 x4), basis of H:");
    for v in frame.h_basis() {
        println!("  {v:?}");
    }
    println!("H.V has dimension {}", frame.hv_basis().len());
    Ok(())
}
