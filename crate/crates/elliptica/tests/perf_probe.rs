//! Manual timing probe for the heaviest code paths; run with
//! `cargo test --release --test perf_probe -- --ignored --nocapture`.

use elliptica::quotient::{ideal_slice, is_positively_elliptic, Elliptic, Presentation};
use elliptica::ring::{GradedContext, Monomial, Polynomial, Rational};
use std::sync::Arc;
use std::time::Instant;

fn random_quadrics() -> Presentation {
    // six generic-looking quadrics in six weight-2 variables
    let ctx = GradedContext::new(
        (1..=6).map(|i| (format!("x{i}"), 2u32)).collect::<Vec<_>>(),
    )
    .unwrap();
    let basis = ctx.monomial_basis(4);
    let mut rels = Vec::new();
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        ((state % 11) as i64) - 5
    };
    for _ in 0..6 {
        let terms: Vec<(Monomial, Rational)> = basis
            .iter()
            .filter_map(|m| {
                let c = next();
                if c == 0 {
                    None
                } else {
                    Some((m.clone(), Rational::from_integer(c.into())))
                }
            })
            .collect();
        rels.push(Polynomial::from_terms(&ctx, terms).unwrap());
    }
    Presentation::new(Arc::clone(&ctx), rels).unwrap()
}

#[test]
#[ignore]
fn certified_paths_timing() {
    let p = random_quadrics();
    let t = Instant::now();
    let r = is_positively_elliptic(&p).unwrap();
    println!(
        "ellipticity (certified): elliptic={} dims={:?} in {:?}",
        r.elliptic, r.hilbert.dims, t.elapsed()
    );
    let t = Instant::now();
    let e = Elliptic::try_new(p.clone()).unwrap();
    let j = e.jacobian_class();
    println!(
        "jacobian: degree {:?} nonzero={} in {:?}",
        j.degree, j.nonzero_in_top, t.elapsed()
    );
}

#[test]
#[ignore]
fn exact_slice_timing() {
    let p = random_quadrics();
    for n in [6u32, 8, 10] {
        let t = Instant::now();
        let s = ideal_slice(&p, n);
        println!(
            "exact degree {n}: {} rows x {} cols rank {} in {:?}",
            6 * p.context().basis_dim(n - 4),
            s.ambient_dim(),
            s.rank(),
            t.elapsed()
        );
    }
}
