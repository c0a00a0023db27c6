//! Cohomology table of the kernel bundle of a generic Steiner presentation.

use steinerlab::rng::seeded;
use steinerlab::steiner::{SteinerPresentation, DEFAULT_DMAX};
use steinerlab::PrimeField;

fn main() -> steinerlab::Result<()> {
    let field = PrimeField::default();
    let m = SteinerPresentation::random(2, 6, field, &mut seeded(1));
    let cert = m.surjectivity_certificate(DEFAULT_DMAX);
    println!("m(d) surjective from d0 = {:?}", cert.d0);
    for d in 0..3 {
        let md = m.assemble_md(d);
        println!("m({d}) is {}x{}, rank {}", md.rows(), md.cols(), md.rank());
    }
    print!("{}", m.cohomology_table(-6, 4, DEFAULT_DMAX)?.render());
    println!("h0 of the dual bundle twisted by 2: {}", m.dual_h0(2));
    Ok(())
}
