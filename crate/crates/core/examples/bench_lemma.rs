use orebit_core::algebra::{random_scalar, rng_from_seed, Scalar, Twist};
use orebit_core::dynamics::constant_adjusted;
use orebit_core::skewpoly::random_poly;
use std::time::Instant;

fn stats(s: &Scalar) -> (usize, usize, u64) {
    if let Scalar::RatFunc(v) = s {
        let nd = v.numerator().degree().map_or(0, |d| d);
        let dd = v.denominator().degree().map_or(0, |d| d);
        let bits = v
            .numerator()
            .coeffs()
            .iter()
            .chain(v.denominator().coeffs())
            .map(|c| c.numer().bits() + c.denom().bits())
            .max()
            .unwrap_or(0);
        (nd, dd, bits)
    } else {
        (0, 0, 0)
    }
}

fn main() {
    let tw = Twist::shift_difference();
    let mut rng = rng_from_seed(4101);
    for i in 0..6 {
        let g = random_poly(&mut rng, &tw, 2);
        let a = random_scalar(&mut rng, tw.domain());
        if i != 5 {
            let _ = constant_adjusted(&g, &a);
            continue;
        }
        let f = constant_adjusted(&g, &a).unwrap();
        println!("a: {a}");
        for c in f.coeffs() {
            let (nd, dd, bits) = stats(c);
            println!("f coeff: numdeg {nd} dendeg {dd} bits {bits}");
        }
        let mut acc = orebit_core::skewpoly::SkewPoly::one(tw.clone());
        for n in 1..=8u32 {
            let t0 = Instant::now();
            acc = acc.sigma_lift().mul(&f).unwrap().add(&acc.delta_lift()).unwrap();
            let worst = acc.coeffs().iter().map(stats).max_by_key(|s| s.2).unwrap();
            println!(
                "f^[{n}]: deg {:?}, worst coeff numdeg {} dendeg {} bits {} ({:?})",
                acc.degree(), worst.0, worst.1, worst.2, t0.elapsed()
            );
        }
    }
}
