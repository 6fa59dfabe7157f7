use uca_defocus::specfun::{
    bessel_j, defocus_1f2, defocus_2f3, hypergeom_1f2, hypergeom_2f3, integrate, inverse_1f2_threshold,
};
use uca_defocus::Series;

fn ctrl() -> Series {
    Series::default()
}

fn j0(x: f64) -> f64 {
    bessel_j(0, x).unwrap()
}

/// Sample points on (0, 30].
fn xs() -> impl Iterator<Item = f64> {
    (1..=60).map(|i| i as f64 * 0.5).chain([0.013, 0.37, 2.404825557695773, 7.77, 29.99])
}

#[test]
fn bessel_reference_values() {
    // 30-digit values from an arbitrary-precision library.
    let cases = [
        (0u32, 50.0f64, 0.055_812_327_669_251_815),
        (5, 75.3, -0.060_642_435_286_314_896),
        (1, 100.0, -0.077_145_352_014_112_158),
        (3, 12.5, 0.110_008_136_314_349_268),
        (8, 20.0, -0.073_868_928_840_750_341),
        (0, 99.9, 0.012_180_433_516_928_978),
        (2, -7.25, -0.273_077_834_356_432_309),
    ];
    for (n, x, want) in cases {
        let got: f64 = bessel_j(n, x).unwrap();
        assert!((got - want).abs() < 1e-10, "J{n}({x}) = {got}, want {want}");
    }
}

#[test]
fn bessel_parity() {
    for n in 0..=8u32 {
        for i in -200..=200 {
            let x = i as f64 * 0.1;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let d = bessel_j(n, -x).unwrap() - sign * bessel_j(n, x).unwrap();
            assert!(d.abs() <= 1e-12, "n={n}, x={x}");
        }
    }
}

#[test]
fn bessel_three_term_recurrence() {
    for n in 1..=10u32 {
        for i in 1..=200 {
            let x = i as f64 * 0.1;
            let lhs = bessel_j(n - 1, x).unwrap() + bessel_j(n + 1, x).unwrap();
            let rhs = 2.0 * n as f64 / x * bessel_j(n, x).unwrap();
            assert!((lhs - rhs).abs() <= 1e-9, "n={n}, x={x}");
        }
    }
}

#[test]
fn defocus_1f2_is_mean_of_j0() {
    for x in xs() {
        let oracle = integrate(j0, 0.0, x, 1e-11).unwrap() / x;
        let series = defocus_1f2(x, &ctrl()).unwrap();
        assert!((series - oracle).abs() <= 1e-8, "x={x}: {series} vs {oracle}");
    }
}

#[test]
fn defocus_2f3_is_mean_of_defocus_1f2() {
    // (1/x) int_0^x 1F2(t) dt = (1/x) int_0^x J0(s) ln(x/s) ds; with s = x w^2
    // this is int_0^1 -4 w ln(w) J0(x w^2) dw, free of singularities.
    for x in xs() {
        let oracle = integrate(
            |w: f64| if w == 0.0 { 0.0 } else { -4.0 * w * w.ln() * j0(x * w * w) },
            0.0,
            1.0,
            1e-11,
        )
        .unwrap();
        let series = defocus_2f3(x, &ctrl()).unwrap();
        assert!((series - oracle).abs() <= 1e-8, "x={x}: {series} vs {oracle}");
    }
}

#[test]
fn mean_square_of_j0_is_a_2f3() {
    for x in xs() {
        let oracle = integrate(|t| j0(t).powi(2), 0.0, x, 1e-11).unwrap() / x;
        let series = hypergeom_2f3(0.5, 0.5, 1.0, 1.0, 1.5, -x * x, &ctrl()).unwrap();
        assert!((series - oracle).abs() <= 1e-8, "x={x}: {series} vs {oracle}");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(hypergeom_1f2(0.5, 1.0, 1.5, 0.0, &ctrl()).unwrap(), 1.0);
    let half_int = integrate(j0, 0.0, 2.0, 1e-13).unwrap() / 2.0;
    assert!((hypergeom_1f2(0.5, 1.0, 1.5, -1.0, &ctrl()).unwrap() - half_int).abs() < 1e-8);
    let t = hypergeom_1f2(0.5, 1.0, 1.5, -(2.452f64.powi(2)) / 4.0, &ctrl()).unwrap();
    assert!((t - 0.6).abs() < 5e-3, "{t}");
    assert_eq!(hypergeom_2f3(0.5, 0.5, 1.0, 1.5, 1.5, 0.0, &ctrl()).unwrap(), 1.0);
    // Arbitrary-precision reference for f(2).
    let f2 = hypergeom_2f3(0.5, 0.5, 1.0, 1.5, 1.5, -1.0, &ctrl()).unwrap();
    assert!((f2 - 0.898_342_866_255_746_388).abs() < 1e-12);
}

#[test]
fn defocus_2f3_decreases_on_first_ten() {
    let mut last = f64::INFINITY;
    for i in 0..=100 {
        let v = defocus_2f3(i as f64 * 0.1, &ctrl()).unwrap();
        assert!(v < last, "x = {}", i as f64 * 0.1);
        last = v;
    }
}

#[test]
fn threshold_inverse_round_trip() {
    assert_eq!(inverse_1f2_threshold(1.0, &ctrl()).unwrap(), 0.0);
    for i in 1..40 {
        let target = 0.25 + 0.75 * i as f64 / 40.0;
        let x = inverse_1f2_threshold(target, &ctrl()).unwrap();
        let back = defocus_1f2(x, &ctrl()).unwrap();
        assert!((back - target).abs() <= 1e-8, "target {target}: {back}");
        // Smallest crossing: the function stays above target before x.
        for k in 1..20 {
            let y = x * k as f64 / 20.0;
            assert!(defocus_1f2(y, &ctrl()).unwrap() > target);
        }
    }
}

#[test]
fn single_precision_path() {
    let c = uca_defocus::SeriesControl::<f32>::default();
    let v = defocus_1f2(2.0f32, &c).unwrap();
    let w = defocus_1f2(2.0f64, &ctrl()).unwrap();
    assert!((v as f64 - w).abs() < 1e-5);
    assert!((bessel_j(1, 30.0f32).unwrap() as f64 + 0.118_751_062_616_622_9).abs() < 1e-5);
    let x = inverse_1f2_threshold(0.6f32, &c).unwrap();
    assert!((x - 2.4496).abs() < 1e-3);
}
