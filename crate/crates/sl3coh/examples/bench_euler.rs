use dashmap::DashMap;
use rayon::prelude::*;
use sl3coh::characters::{weyl_character, Character};
use sl3coh::cohomology::{Bundle, CharEngine};
use sl3coh::weights::{dominant_representative, Weight, ALPHA, BETA};
use std::sync::Arc;
use std::time::Instant;

fn box_weights(b: i64) -> Vec<Weight> {
    let mut v = Vec::new();
    for r in -b..=b {
        for s in -b..=b {
            v.push(Weight::new(r, s));
        }
    }
    v
}

// Orbit-cached Euler-form Weyl character.
fn cached_weyl(cache: &DashMap<Weight, Arc<Character>>, w: Weight) -> Character {
    match dominant_representative(w) {
        None => Character::zero(),
        Some((_, mu, det)) => {
            let base = cache
                .entry(mu)
                .or_insert_with(|| Arc::new(weyl_character(mu)))
                .clone();
            if det == 1 { (*base).clone() } else { base.scale(det) }
        }
    }
}

fn main() {
    for p in [5i64, 7] {
        let engine = CharEngine::new(p).unwrap();
        let cache: DashMap<Weight, Arc<Character>> = DashMap::new();
        let b = 2 * p * p;
        let t0 = Instant::now();
        let bad: usize = box_weights(b)
            .par_iter()
            .map(|&w| {
                let mut n = 0;
                for (bundle, shift) in [
                    (Bundle::Plain, None),
                    (Bundle::Alpha, Some(ALPHA)),
                    (Bundle::Beta, Some(BETA)),
                ] {
                    let t = engine.table(w, bundle);
                    let expected = match shift {
                        None => cached_weyl(&cache, w),
                        Some(root) => cached_weyl(&cache, w).add(&cached_weyl(&cache, w - root)),
                    };
                    if t.euler() != expected {
                        n += 1;
                    }
                }
                n
            })
            .sum();
        let rss = std::fs::read_to_string("/proc/self/status")
            .unwrap()
            .lines()
            .find(|l| l.starts_with("VmRSS"))
            .unwrap()
            .to_string();
        println!("p={p} box={b}: bad={bad} elapsed={:?} {rss}", t0.elapsed());
    }
}
