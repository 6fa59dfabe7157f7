use uca_defocus::analysis::{
    avg_gain_ps_lower, avg_gain_ps_numeric, avg_gain_ps_upper, avg_gain_ps_upper_cs, classic_gain, dpp_gain,
    exact_gain, gain_corollary1, gain_lemma1, gain_lemma2, gain_lemma3,
};
use uca_defocus::precoding::SubarrayReference;
use uca_defocus::{Grid, Uca};

const FC: f64 = 30e9;
const TAU: f64 = std::f64::consts::TAU;

fn uca() -> Uca {
    Uca::half_wavelength(256, FC).unwrap()
}

fn angles(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| TAU * i as f64 / n as f64)
}

#[test]
fn lemma1_tracks_exact_phase_shifter_gain() {
    let g = uca();
    let grid = Grid::new(FC, 4e9, 128).unwrap();
    let mut worst = 0.0f64;
    for &f in grid.freqs_hz() {
        let closed = gain_lemma1(f, FC, g.radius_m()).unwrap();
        for phi in angles(64) {
            worst = worst.max((classic_gain(&g, FC, f, phi).unwrap() - closed).abs());
        }
    }
    assert!(worst <= 5e-3, "{worst}");
}

#[test]
fn lemma2_tracks_off_axis_exact_gain() {
    // Beam toward sin(phi0) = 0.5, observed over the front half-plane.
    let g = uca();
    let phi0 = std::f64::consts::FRAC_PI_6;
    let beam = g.steering(FC, phi0);
    let worst_over = |lo: f64, hi: f64| {
        let mut worst = 0.0f64;
        for i in 0..=16 {
            let f = FC - 2e9 + i as f64 * 0.25e9;
            for j in 0..64 {
                let phi = lo + (hi - lo) * j as f64 / 63.0;
                let exact = exact_gain(&beam, &g, f, phi).unwrap();
                let closed = gain_lemma2(f, FC, g.radius_m(), phi, phi0).unwrap();
                worst = worst.max((exact - closed).abs());
            }
        }
        worst
    };
    let front = worst_over(-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2);
    assert!(front <= 1e-2, "{front}");
    // Behind the array xi approaches N and the neglected J_N(xi) terms of the
    // Jacobi-Anger expansion surface; the measured gap is frozen here.
    let full = worst_over(0.0, TAU);
    assert!((full - 0.2038).abs() < 5e-3, "{full}");
}

#[test]
fn band_edge_defocus() {
    // No direction recovers a high gain at the band edge.
    let g = uca();
    let beam = g.steering(FC, 0.0);
    let best = angles(4096)
        .map(|phi| exact_gain(&beam, &g, FC + 1.5e9, phi).unwrap())
        .fold(0.0, f64::max);
    assert!(best <= 0.8);
    assert!((best - 0.300_035_129).abs() < 1e-6, "{best}");
}

#[test]
fn dpp_gain_is_nearly_angle_independent() {
    let g = uca();
    let grid = Grid::new(FC, 3e9, 32).unwrap();
    for &f in grid.freqs_hz() {
        let vals: Vec<f64> = angles(64)
            .map(|phi| dpp_gain(&g, FC, f, phi, 8, SubarrayReference::Algorithm).unwrap())
            .collect();
        let spread = vals.iter().cloned().fold(f64::MIN, f64::max) - vals.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread <= 2e-2, "f = {f}: {spread}");
    }
}

#[test]
fn lemma3_and_corollary1_overlay() {
    let g = uca();
    let r = g.radius_m();
    for reference in [SubarrayReference::Algorithm, SubarrayReference::Centroid] {
        let f = FC + 1.5e9;
        let exact = dpp_gain(&g, FC, f, 0.8, 8, reference).unwrap();
        let l3 = gain_lemma3(f, FC, r, 256, 8).unwrap();
        assert!((exact - l3).abs() <= 0.02, "{reference:?}: {exact} vs {l3}");
    }
    // The centroid reference matches the subarray sum to high accuracy.
    for i in 0..=20 {
        let f = FC - 1.5e9 + i as f64 * 0.15e9;
        let exact = dpp_gain(&g, FC, f, 2.1, 8, SubarrayReference::Centroid).unwrap();
        let l3 = gain_lemma3(f, FC, r, 256, 8).unwrap();
        assert!((exact - l3).abs() <= 1e-4, "f = {f}");
        let c1 = gain_corollary1(f, FC, r, 8).unwrap();
        assert!((c1 - l3).abs() <= 0.02);
    }
}

#[test]
fn per_antenna_ttd_has_unit_gain() {
    let g = Uca::half_wavelength(128, FC).unwrap();
    for i in 0..=10 {
        let f = FC - 2e9 + i as f64 * 0.4e9;
        for phi in [0.0, 1.0, 4.4] {
            let v = dpp_gain(&g, FC, f, phi, 128, SubarrayReference::Centroid).unwrap();
            assert!((v - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn average_gain_sandwich_random_arrays() {
    // Deterministic pseudo-random (R, B) pairs.
    let mut state = 0x2545_f491_4f6c_dd1d_u64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..50 {
        let r = 0.02 + 0.48 * next();
        let b = 0.05e9 + 4.95e9 * next();
        let lo = avg_gain_ps_lower(r, b).unwrap();
        let num = avg_gain_ps_numeric(r, b).unwrap();
        let up = avg_gain_ps_upper(r, b).unwrap();
        let cs = avg_gain_ps_upper_cs(r, b).unwrap();
        let slack = 1e-10;
        assert!(lo <= num + slack && num <= up + slack && num <= cs + slack, "R={r}, B={b}: {lo} {num} {up} {cs}");
    }
}
