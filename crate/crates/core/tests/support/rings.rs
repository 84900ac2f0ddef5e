//! Fusion rings shared by the integration tests, built independently of
//! any catalog code.
#![allow(dead_code)]

use etale_core::FusionRing;

pub fn trivial() -> FusionRing {
    FusionRing::from_products(&["1"], vec![0], &[&[&[0]]])
}

pub fn z2() -> FusionRing {
    FusionRing::from_products(&["1", "X"], vec![0, 1], &[&[&[0], &[1]], &[&[1], &[0]]])
}

pub fn fib() -> FusionRing {
    FusionRing::from_products(&["1", "X"], vec![0, 1], &[&[&[0], &[1]], &[&[1], &[0, 1]]])
}

pub fn z3() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 2, 1],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[2], &[0]],
            &[&[2], &[0], &[1]],
        ],
    )
}

pub fn ising() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 1, 2],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[0], &[2]],
            &[&[2], &[2], &[0, 1]],
        ],
    )
}

pub fn rep_s3() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 1, 2],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[0], &[2]],
            &[&[2], &[2], &[0, 1, 2]],
        ],
    )
}

pub fn psu2_5() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 1, 2],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[0, 2], &[1, 2]],
            &[&[2], &[1, 2], &[0, 1, 2]],
        ],
    )
}
