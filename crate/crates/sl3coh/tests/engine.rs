//! Engine-wide consistency sweeps: termination, the two coefficient rings
//! agreeing, Serre duality, τ-symmetry, and the closed-form nonvanishing
//! criterion, over boxes large enough to hit every recursion branch.

use rayon::prelude::*;
use sl3coh::characters::{weyl_character, weyl_dimension, Character};
use sl3coh::cohomology::{
    andersen_multi, serre_dual, tau_mirror, Bundle, CharEngine, DimEngine,
};
use sl3coh::weights::{Weight, RHO};
use sl3coh::Int;

fn box_weights(bound: Int) -> Vec<Weight> {
    let mut v = Vec::new();
    for r in -bound..=bound {
        for s in -bound..=bound {
            v.push(Weight::new(r, s));
        }
    }
    v
}

#[test]
fn terminates_and_validates_on_box_30() {
    // The engine asserts the Euler class and effectivity of every table it
    // produces, so driving it over the box is itself a deep validation.
    for p in [2, 3, 5, 7, 11] {
        let dims = DimEngine::new(p).unwrap();
        box_weights(30).par_iter().for_each(|&w| {
            for bundle in [Bundle::Plain, Bundle::Alpha, Bundle::Beta] {
                let t = dims.table(w, bundle);
                assert!(t.h.iter().all(|&d| d >= 0));
            }
        });
    }
}

#[test]
fn char_and_dim_engines_agree() {
    for p in [2, 3, 5, 7] {
        let chars = CharEngine::new(p).unwrap();
        let dims = DimEngine::new(p).unwrap();
        box_weights(2 * p + 4).par_iter().for_each(|&w| {
            for bundle in [Bundle::Plain, Bundle::Alpha, Bundle::Beta] {
                let c = chars.table(w, bundle);
                let d = dims.table(w, bundle);
                assert_eq!(c.dims(), d.h, "{w} [{bundle}] p = {p}");
            }
        });
    }
}

#[test]
fn dominant_tables_are_weyl_characters() {
    for p in [2, 5] {
        let chars = CharEngine::new(p).unwrap();
        for r in 0..=8 {
            for s in 0..=8 {
                let w = Weight::new(r, s);
                let t = chars.table(w, Bundle::Plain);
                assert_eq!(t.nonzero_degrees(), vec![0]);
                assert_eq!(t.h[0], weyl_character(w));
                assert_eq!(t.h[0].dimension(), weyl_dimension(w));
            }
        }
    }
}

#[test]
fn serre_duality_and_tau_symmetry() {
    for p in [2, 3, 5] {
        let chars = CharEngine::new(p).unwrap();
        box_weights(12).par_iter().for_each(|&w| {
            let t = chars.table(w, Bundle::Plain);
            // Serre: table at −λ−2ρ is the degree-reversed dual.
            let sd = serre_dual(&t).unwrap();
            let direct = chars.table(-w - RHO.scale(2), Bundle::Plain);
            assert_eq!(sd.h, direct.h, "Serre at {w}, p = {p}");
            // τ: mirrored weight, mirrored bundle, τ-transformed entries.
            for bundle in [Bundle::Plain, Bundle::Alpha, Bundle::Beta] {
                let t = chars.table(w, bundle);
                let tm = tau_mirror(&t);
                let direct = chars.table(tm.weight, tm.bundle);
                assert_eq!(tm.h, direct.h, "τ at {w} [{bundle}], p = {p}");
            }
        });
    }
}

#[test]
fn nonvanishing_matches_closed_form_criterion() {
    // H¹ ≠ 0 and H² ≠ 0 simultaneously exactly on the witness family.
    for p in [2, 3, 5] {
        let dims = DimEngine::new(p).unwrap();
        let bound = p * p + p;
        box_weights(bound).par_iter().for_each(|&w| {
            let t = dims.table(w, Bundle::Plain);
            let multi = t.h[1] != 0 && t.h[2] != 0;
            let witness = andersen_multi(w, p);
            assert_eq!(
                multi,
                witness.is_some(),
                "closed-form criterion disagrees at {w}, p = {p}: dims {:?}, witness {witness:?}",
                t.h
            );
        });
    }
}

#[test]
fn degree_patterns_on_box() {
    // Outside the two vanishing wall families, plain cohomology is nonzero
    // in at least one degree, never in degree pairs other than {1,2}, and
    // H⁰ (resp. H³) appears only for dominant (resp. antidominant) weights.
    for p in [2, 3] {
        let dims = DimEngine::new(p).unwrap();
        for &w in &box_weights(20) {
            let t = dims.table(w, Bundle::Plain);
            let degs = t.nonzero_degrees();
            if degs.is_empty() {
                // Total vanishing needs a dot-singular weight (the walls
                // r = −1, s = −1 and part of the line r + s = −2).
                assert_eq!(weyl_dimension(w), 0, "unexpected total vanishing at {w}, p = {p}");
                assert!(w.r == -1 || w.s == -1 || w.r + w.s == -2);
                continue;
            }
            if degs.contains(&0) {
                assert!(w.is_dominant());
                assert_eq!(degs, vec![0]);
            }
            if degs.contains(&3) {
                assert!(w.r <= -2 && w.s <= -2);
                assert_eq!(degs, vec![3]);
            }
            assert!(degs.len() <= 2);
            if degs.len() == 2 {
                assert_eq!(degs, vec![1, 2], "at {w}, p = {p}");
            }
        }
    }
}

#[test]
fn memoization_is_transparent() {
    // A fresh engine and a warmed-up engine agree; a second call returns
    // the identical table.
    let e1 = CharEngine::new(3).unwrap();
    let e2 = CharEngine::new(3).unwrap();
    let probe = Weight::new(17, -22);
    let warm = e1.table(probe, Bundle::Alpha);
    for &w in &box_weights(6) {
        assert_eq!(
            e1.table(w, Bundle::Plain).h,
            e2.table(w, Bundle::Plain).h,
            "warm/cold disagree at {w}"
        );
    }
    let again = e1.table(probe, Bundle::Alpha);
    assert_eq!(warm.h, again.h);
}

#[test]
fn euler_characteristic_is_signed_weyl_dimension() {
    // Alternating dimension sum equals the closed-form signed Weyl
    // dimension (zero at dot-singular weights) for plain bundles, and the
    // two-weight sum for the extension bundles.
    for p in [2, 3, 5, 7] {
        let dims = DimEngine::new(p).unwrap();
        box_weights(2 * p * p).par_iter().for_each(|&w| {
            let t = dims.table(w, Bundle::Plain);
            let euler = t.h[0] - t.h[1] + t.h[2] - t.h[3];
            assert_eq!(euler, weyl_dimension(w), "plain Euler at {w}, p = {p}");
            let t = dims.table(w, Bundle::Alpha);
            let euler = t.h[0] - t.h[1] + t.h[2] - t.h[3];
            assert_eq!(
                euler,
                weyl_dimension(w) + weyl_dimension(Weight::new(w.r - 2, w.s + 1)),
                "alpha Euler at {w}, p = {p}"
            );
        });
    }
}

#[test]
fn twisted_steinberg_blocks_scale_by_p_cubed() {
    // H^i((p−1)ρ + pμ) = St ⊗ H^i(μ)^F: dimensions scale by p³.
    for p in [2, 3, 5] {
        let dims = DimEngine::new(p).unwrap();
        for &mu in &box_weights(5) {
            let shifted = Weight::new(p - 1 + p * mu.r, p - 1 + p * mu.s);
            let outer = dims.table(shifted, Bundle::Plain);
            let inner = dims.table(mu, Bundle::Plain);
            for i in 0..4 {
                assert_eq!(outer.h[i], p * p * p * inner.h[i], "{mu} degree {i}, p = {p}");
            }
        }
    }
}
