use sl3coh::cohomology::{Bundle, CharEngine};
use sl3coh::weights::Weight;
use std::time::Instant;

fn main() {
    let p = 7i64;
    let b = 2 * p * p;
    let ts = 20i64; // tile side
    let t0 = Instant::now();
    let mut total_support = 0usize;
    let mut r_lo = -b;
    while r_lo <= b {
        let r_hi = (r_lo + ts - 1).min(b);
        let mut s_lo = -b;
        while s_lo <= b {
            let s_hi = (s_lo + ts - 1).min(b);
            let engine = CharEngine::with_memo_bound(p, 1 << 40).unwrap();
            for r in r_lo..=r_hi {
                for s in s_lo..=s_hi {
                    let w = Weight::new(r, s);
                    for bundle in [Bundle::Plain, Bundle::Alpha, Bundle::Beta] {
                        let t = engine.table(w, bundle);
                        total_support += t.h.iter().map(|c| c.support_len()).sum::<usize>();
                    }
                }
            }
            s_lo = s_hi + 1;
        }
        r_lo = r_hi + 1;
    }
    let rss = std::fs::read_to_string("/proc/self/status")
        .ok()
        .and_then(|s| s.lines().find(|l| l.starts_with("VmHWM")).map(|l| l.to_string()));
    println!(
        "tiled tables built in {:?}, total support {total_support}, {}",
        t0.elapsed(),
        rss.unwrap_or_default()
    );
}
