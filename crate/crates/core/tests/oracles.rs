//! Known values checked through the public API, over several seeds.

use steinerlab::multilin::HyperplaneFrame;
use steinerlab::pwcurves::{check_not_globally_generated, curve_params, sample_pw, section_matrix};
use steinerlab::rng::seeded;
use steinerlab::steiner::{SteinerPresentation, DEFAULT_DMAX};
use steinerlab::strata::{jordan3x4_table, jordan4_table, rank_distribution};
use steinerlab::subspace::{mh1, restrict_to_h, transport_check, FFormQuotient, SubspaceZ};
use steinerlab::{Error, PrimeField};

const SEEDS: [u64; 3] = [1, 2, 3];

fn fp() -> PrimeField {
    PrimeField::default()
}

#[test]
fn generic_one_by_four() {
    for seed in SEEDS {
        let m = SteinerPresentation::random(1, 4, fp(), &mut seeded(seed));
        assert_eq!(m.assemble_md(1).rank(), 10);
        let t = m.cohomology_table(-1, 1, DEFAULT_DMAX).unwrap();
        assert_eq!(
            t.rows.iter().map(|r| r.h).collect::<Vec<_>>(),
            [[0, 1, 0, 0], [0, 0, 0, 0], [6, 0, 0, 0]]
        );
    }
}

#[test]
fn pw_381_table_every_seed() {
    for seed in SEEDS {
        let s = sample_pw(3, 8, 1, fp(), seed, DEFAULT_DMAX).unwrap();
        assert_eq!((s.rank_m1, s.d0), (29, Some(2)));
        let t = s.m.cohomology_table(-1, 1, DEFAULT_DMAX).unwrap();
        assert_eq!(
            t.rows.iter().map(|r| r.h).collect::<Vec<_>>(),
            [[0, 3, 0, 0], [0, 4, 0, 0], [3, 1, 0, 0]]
        );
        assert_eq!(transport_check(&s.m, &s.phi, None).unwrap(), (true, true));
    }
}

#[test]
fn pw_10_30_1() {
    let s = sample_pw(10, 30, 1, fp(), 4, DEFAULT_DMAX).unwrap();
    assert_eq!(s.rank_m1, 99);
    assert_eq!(s.m.assemble_md(1).kernel_dim(), 21);
    assert!(check_not_globally_generated(&s.m));
    let frame = HyperplaneFrame::random(fp(), &mut seeded(5));
    assert_eq!(mh1(&s.m, &frame).rank(), 89);
    let n = section_matrix(&s.m).unwrap();
    assert_eq!((n.c(), n.b()), (21, 30));
}

#[test]
fn tables() {
    let t4 = jordan4_table(fp());
    let s: Vec<usize> = t4.iter().map(|r| r.s_computed).collect();
    assert_eq!(s, [4, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6, 7, 7, 10]);
    let o: Vec<usize> = t4.iter().map(|r| r.o_computed).collect();
    assert_eq!(o, [16, 15, 14, 14, 13, 13, 12, 12, 11, 10, 9, 8, 7, 1]);

    let t3 = jordan3x4_table(fp());
    let rs: Vec<(usize, usize)> = t3.iter().map(|r| (r.r_computed, r.s_computed)).collect();
    assert_eq!(
        rs,
        [
            (3, 7),
            (2, 8),
            (3, 7),
            (2, 8),
            (0, 10),
            (3, 7),
            (2, 8),
            (3, 7),
            (3, 7)
        ]
    );
}

#[test]
fn generic_strata() {
    let mut rng = seeded(6);
    let phi = FFormQuotient::random(5, 1, fp(), &mut rng);
    let frame = HyperplaneFrame::random(fp(), &mut rng);
    let h = rank_distribution(&phi, Some(&frame), 2, 25, 7).unwrap();
    assert_eq!(h.into_iter().collect::<Vec<_>>(), [(6, 25)]);
}

#[test]
fn non_transverse_and_inadmissible() {
    let f = fp();
    let x4sq =
        FFormQuotient::from_coefficients(1, 1, f, |p, q, _, _| (p == 3 && q == 3) as u32).unwrap();
    let frame = HyperplaneFrame::new([0, 0, 0, 1], f).unwrap();
    assert!(matches!(
        restrict_to_h(&SubspaceZ::new(x4sq), &frame),
        Err(Error::NonTransverse { .. })
    ));
    assert!(matches!(
        sample_pw(4, 13, 2, f, 1, DEFAULT_DMAX),
        Err(Error::InadmissibleParams { .. })
    ));
    assert!(matches!(
        curve_params(6, 11),
        Err(Error::InadmissibleParams { .. })
    ));
}

#[test]
fn interchange_formats_round_trip() {
    let s = sample_pw(4, 12, 1, fp(), 8, DEFAULT_DMAX).unwrap();
    let m2 = SteinerPresentation::parse_interchange(&s.m.to_interchange()).unwrap();
    assert_eq!(m2.stacked(), s.m.stacked());
    let phi2 = FFormQuotient::parse_interchange(&s.phi.to_interchange()).unwrap();
    assert_eq!(phi2, s.phi);
    let n = section_matrix(&s.m).unwrap();
    let text = n.to_interchange();
    assert!(text.starts_with("linforms 9 12 32003\n"));
    assert_eq!(
        steinerlab::pwcurves::SectionMatrix::parse_interchange(&text).unwrap(),
        n
    );
}

#[test]
fn global_generation_near_the_degenerate_line() {
    // (4,13,2) cannot be sampled (4f > 4a - b); f = 0 is the admissible stand-in
    let s = sample_pw(4, 13, 0, fp(), 9, DEFAULT_DMAX).unwrap();
    assert_eq!(s.m.assemble_md(1).kernel_dim(), 12);
    assert!(!check_not_globally_generated(&s.m));
}
