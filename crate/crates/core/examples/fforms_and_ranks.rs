//! F-forms, V*-ranks, Z-ranks and (Z,H)-ranks.

use rand::Rng;
use steinerlab::multilin::HyperplaneFrame;
use steinerlab::rng::seeded;
use steinerlab::strata::rank_distribution;
use steinerlab::subspace::{
    restrict_to_h, vstar_rank, witness_z, z_rank, zh_rank, FFormQuotient, SubspaceZ,
};
use steinerlab::PrimeField;

fn main() -> steinerlab::Result<()> {
    let field = PrimeField::default();
    let mut rng = seeded(3);

    for (a, f) in [(2, 1), (4, 3), (6, 6)] {
        println!(
            "witness_z({a},{f}) has V*-rank {}",
            vstar_rank(&witness_z(a, f, field)?)
        );
    }

    let phi = FFormQuotient::random(6, 2, field, &mut rng);
    let h: Vec<u32> = (0..60).map(|_| rng.gen_range(0..field.modulus())).collect();
    println!(
        "random hyperplane of Z (a=6, f=2): Z-rank {}",
        z_rank(&phi, &[h])?
    );
    println!(
        "Z-rank histogram: {:?}",
        rank_distribution(&phi, None, 1, 30, 9)?
    );

    let phi = FFormQuotient::random(5, 1, field, &mut rng);
    let frame = HyperplaneFrame::random(field, &mut rng);
    let slice = restrict_to_h(&SubspaceZ::new(phi.clone()), &frame)?;
    println!(
        "dim Z' = {} (expected {})",
        slice.dim_zprime(),
        slice.expected_dim()
    );
    let extra: Vec<Vec<u32>> = (0..2)
        .map(|_| (0..45).map(|_| field.random(&mut rng)).collect())
        .collect();
    let t = slice.subspace_quotient(&extra)?;
    println!(
        "codim-2 subspace of Z': (Z,H)-rank {}",
        zh_rank(&slice, &t)?
    );
    println!(
        "(Z,H)-rank histogram, codim 2: {:?}",
        rank_distribution(&phi, Some(&frame), 2, 30, 10)?
    );
    Ok(())
}
