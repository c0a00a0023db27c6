//! Numerical invariants of the curve built from a (10,30,1) sample.

use std::time::Instant;

use steinerlab::pwcurves::{
    curve_params, h1_ic_vanishing, h1_ic_vanishing_direct, sample_pw, section_matrix,
    section_point_checks,
};
use steinerlab::rng::seeded;
use steinerlab::steiner::DEFAULT_DMAX;
use steinerlab::PrimeField;

fn main() -> steinerlab::Result<()> {
    let p = curve_params(10, 30)?;
    println!(
        "s={} c={} f={} delta={} degree={} genus={} admissible={}",
        p.s, p.c, p.f, p.delta, p.degree, p.genus, p.admissible
    );
    println!(
        "6 P_C(t) = {} + {} t",
        p.hilbert_times6[0], p.hilbert_times6[1]
    );

    let field = PrimeField::default();
    let s = sample_pw(10, 30, 1, field, 2, DEFAULT_DMAX)?;
    let n = section_matrix(&s.m)?;
    println!("section matrix: {} x {} linear forms", n.c(), n.b());
    let ranks: Vec<usize> = section_point_checks(&s.m, &n, 5, &mut seeded(3))
        .iter()
        .map(|c| c.rank)
        .collect();
    println!("rank N(x) at 5 points: {ranks:?}");

    println!(
        "h1(I_C(s-3)) = 0 by propagation: {}",
        h1_ic_vanishing(&s.m, p.s, DEFAULT_DMAX)
    );
    let t = Instant::now();
    println!(
        "by direct rank of m(7): {} ({:.1?})",
        h1_ic_vanishing_direct(&s.m, p.s),
        t.elapsed()
    );
    Ok(())
}
