//! A sample of the predominant component: cohomology predictions, the rank
//! of m_H(1), and global generation.

use steinerlab::pwcurves::{
    check_not_globally_generated, expected_mh_rank, mh_rank_survey, sample_pw, verify_pw_cohomology,
};
use steinerlab::steiner::DEFAULT_DMAX;
use steinerlab::PrimeField;

fn main() -> steinerlab::Result<()> {
    let field = PrimeField::default();
    let s = sample_pw(3, 8, 1, field, 1, DEFAULT_DMAX)?;
    println!("(3,8,1): rank m(1) = {}, d0 = {:?}", s.rank_m1, s.d0);
    print!("{}", s.m.cohomology_table(-2, 2, DEFAULT_DMAX)?.render());
    let checks = verify_pw_cohomology(&s, -6, 4, DEFAULT_DMAX)?;
    println!(
        "{} of {} predictions hold",
        checks.iter().filter(|c| c.pass).count(),
        checks.len()
    );

    let s = sample_pw(10, 30, 1, field, 1, DEFAULT_DMAX)?;
    println!("(10,30,1): rank m(1) = {}", s.rank_m1);
    println!(
        "rank m_H(1) histogram: {:?} (expected {})",
        mh_rank_survey(&s.m, 20, 2),
        expected_mh_rank(10, 30, 1)
    );
    println!(
        "not globally generated: {}",
        check_not_globally_generated(&s.m)
    );
    Ok(())
}
