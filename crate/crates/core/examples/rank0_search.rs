//! Constructive search for hyperplanes of rank 0, across the thresholds
//! 5f vs 2a and 11f vs 3a.

use steinerlab::multilin::HyperplaneFrame;
use steinerlab::rng::seeded;
use steinerlab::strata::{rank0_search, SearchContext};
use steinerlab::subspace::FFormQuotient;
use steinerlab::PrimeField;

fn main() {
    let field = PrimeField::default();
    let mut rng = seeded(5);
    println!("{:>3} {:>3} {:>12} {:>12}", "a", "f", "full", "hyperplane");
    for a in 2..=6 {
        for f in 1..=2 {
            let phi = FFormQuotient::random(a, f, field, &mut rng);
            let frame = HyperplaneFrame::random(field, &mut rng);
            let full = rank0_search(&phi, SearchContext::Full);
            let hyper = rank0_search(&phi, SearchContext::Hyper(&frame));
            let show = |s: &steinerlab::strata::Rank0Search| {
                format!(
                    "{}{}",
                    if s.witness.is_some() {
                        "found/"
                    } else {
                        "none/"
                    },
                    s.solution_dim
                )
            };
            println!("{a:>3} {f:>3} {:>12} {:>12}", show(&full), show(&hyper));
        }
    }
}
