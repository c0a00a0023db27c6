//! Transport of equations: Φ ∘ m(1) = 0 versus g*(Φ) ∘ m = 0, with and
//! without a hyperplane condition.

use steinerlab::cli::{transport_survey, TransportVariant};
use steinerlab::multilin::HyperplaneFrame;
use steinerlab::rng::seeded;
use steinerlab::steiner::SteinerPresentation;
use steinerlab::subspace::{mh1, transport_check, FFormQuotient};
use steinerlab::PrimeField;

fn main() -> steinerlab::Result<()> {
    let field = PrimeField::default();
    let mut rng = seeded(4);
    let phi = FFormQuotient::random(2, 1, field, &mut rng);
    let m = SteinerPresentation::random(2, 3, field, &mut rng);
    println!("random pair: {:?}", transport_check(&m, &phi, None)?);
    println!(
        "zero presentation: {:?}",
        transport_check(&SteinerPresentation::zero(2, 3, field), &phi, None)?
    );

    let frame = HyperplaneFrame::random(field, &mut rng);
    let mh = mh1(&m, &frame);
    println!(
        "m_H(1) is {}x{} of rank {}",
        mh.rows(),
        mh.cols(),
        mh.rank()
    );

    for variant in [
        TransportVariant::Full,
        TransportVariant::Hyperplane,
        TransportVariant::Combined,
    ] {
        let out = transport_survey(variant, field, 11, 40);
        let agree = out.iter().filter(|o| o.lhs == o.rhs).count();
        let held = out.iter().filter(|o| o.lhs).count();
        println!("{variant:?}: {agree}/40 agree, {held} satisfied");
    }
    Ok(())
}
