use infcm::complex::DEFAULT_FACE_CAP;
use infcm::groebner::DEFAULT_PAIR_BUDGET;
use infcm::sop::DEFAULT_SAMPLE_BUDGET;
use infcm::{theorem_d_pipeline, verify_inclusions, Error, InfinitePermutation, PipelineConfig, PrimeField};

fn config(m_max: u32) -> PipelineConfig {
    PipelineConfig {
        m_max,
        seed: 1,
        sample_budget: DEFAULT_SAMPLE_BUDGET,
        pair_budget: DEFAULT_PAIR_BUDGET,
        face_cap: DEFAULT_FACE_CAP,
    }
}

#[test]
fn rule_even_passes() {
    let r = theorem_d_pipeline(&InfinitePermutation::RuleEven, &PrimeField::default(), config(3)).unwrap();
    assert!(r.pass);
    let dims: Vec<i64> = r.levels.iter().map(|l| l.dimension).collect();
    assert_eq!(dims, [0, 4, 7]);
    assert!(r.chain.sop_chain.blocks_equal);
}

#[test]
fn transposition_passes() {
    let sigma = InfinitePermutation::parse("(1 2)").unwrap();
    let r = theorem_d_pipeline(&sigma, &PrimeField::default(), config(3)).unwrap();
    assert!(r.pass);
}

#[test]
fn transposition_first_inclusion() {
    let sigma = InfinitePermutation::parse("(1 2)").unwrap();
    let r = verify_inclusions(&sigma, 1, &PrimeField::default()).unwrap();
    assert!(r.pass);
}

#[test]
fn identity_passes_while_rows_fit() {
    let field = PrimeField::default();
    for m in 1..=3 {
        let r = theorem_d_pipeline(&InfinitePermutation::identity(), &field, config(m)).unwrap();
        assert!(r.pass, "m_max = {m}");
        assert!(r.levels.iter().all(|l| l.generators.is_empty()));
    }
}

#[test]
fn identity_five_levels_exceeds_resource_caps() {
    // the top complex is the simplex on 25 vertices
    let r = theorem_d_pipeline(&InfinitePermutation::identity(), &PrimeField::default(), config(5));
    assert!(matches!(r, Err(Error::FaceCapExceeded { .. })));
}

#[test]
fn reports_are_reproducible() {
    let field = PrimeField::default();
    let a = theorem_d_pipeline(&InfinitePermutation::RuleEven, &field, config(3)).unwrap();
    let b = theorem_d_pipeline(&InfinitePermutation::RuleEven, &field, config(3)).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
