//! Physical configuration, channel evaluation, rate/SNR-threshold computation,
//! and placement feasibility.
//!
//! A dielectric waveguide of length `ℓ_w` runs along the x-axis at height `d`
//! above the ground plane, fed at `x = -ℓ_w/2`. Each pinching antenna (PA)
//! radiates the guided signal at its position `v_n` on the waveguide; a user
//! at ground-plane point `u` sees the superposition of a guided-phase term
//! (through the waveguide, wavelength `λ_g = λ/n_eff`) and a free-space term
//! (amplitude `√η / d_n`, phase `2π d_n / λ`) from every PA.
//!
//! Unit contract: meters, Hz, Watts, bits/s/Hz throughout. dBm/mW conversions
//! belong to the CLI boundary, not here.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::error::{Error, Result};
use crate::geom::Vec2;

/// Exact speed of light (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Waveguide and access-point geometry with derived propagation constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveguideConfig {
    /// Carrier frequency (Hz).
    pub carrier_freq: f64,
    /// Effective refractive index of the waveguide (`λ_g = λ / n_eff`).
    pub n_eff: f64,
    /// Waveguide length `ℓ_w` (m); antennas live on `[-ℓ_w/2, ℓ_w/2]`.
    pub length_w: f64,
    /// Height `d` of the waveguide above the ground plane (m).
    pub height_d: f64,
    /// Free-space wavelength `λ = c / f` (m).
    pub lambda: f64,
    /// Guided wavelength `λ_g = λ / n_eff` (m).
    pub lambda_g: f64,
    /// Free-space path-loss coefficient `η = λ² / (16π²)` (m²).
    pub eta: f64,
}

impl WaveguideConfig {
    pub fn new(carrier_freq: f64, n_eff: f64, length_w: f64, height_d: f64) -> Result<Self> {
        if !(carrier_freq > 0.0 && carrier_freq.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "carrier frequency must be positive, got {carrier_freq}"
            )));
        }
        if !(n_eff >= 1.0 && n_eff.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "effective refractive index must be >= 1, got {n_eff}"
            )));
        }
        if !(length_w > 0.0 && length_w.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "waveguide length must be positive, got {length_w}"
            )));
        }
        if !(height_d > 0.0 && height_d.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "waveguide height must be positive, got {height_d}"
            )));
        }
        let lambda = SPEED_OF_LIGHT / carrier_freq;
        Ok(WaveguideConfig {
            carrier_freq,
            n_eff,
            length_w,
            height_d,
            lambda,
            lambda_g: lambda / n_eff,
            eta: lambda * lambda / (16.0 * PI * PI),
        })
    }

    /// x-coordinate of the feed point.
    pub fn feed_x(&self) -> f64 {
        -0.5 * self.length_w
    }

    /// Minimum spacing between adjacent antennas (half a wavelength).
    pub fn min_spacing(&self) -> f64 {
        0.5 * self.lambda
    }
}

/// One user: estimated location, uncertainty disk, and QoS targets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UserSpec {
    /// Estimated ground-plane location `û` (m).
    pub u_hat: Vec2,
    /// Uncertainty radius `r` (m); the true location lies in the closed disk.
    pub radius_r: f64,
    /// Minimum rate target (bits/s/Hz).
    pub rate_min: f64,
    /// Noise power `σ²` (W).
    pub noise_power: f64,
    /// Allowed outage probability `ε` (recorded for reporting; the worst-case
    /// design never uses it).
    pub outage_eps: f64,
}

impl UserSpec {
    pub fn new(
        u_hat: Vec2,
        radius_r: f64,
        rate_min: f64,
        noise_power: f64,
        outage_eps: f64,
    ) -> Result<Self> {
        if !(radius_r >= 0.0 && radius_r.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "uncertainty radius must be >= 0, got {radius_r}"
            )));
        }
        if !(rate_min >= 0.0 && rate_min.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "rate target must be >= 0, got {rate_min}"
            )));
        }
        if !(noise_power > 0.0 && noise_power.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "noise power must be positive, got {noise_power}"
            )));
        }
        if !(0.0..=1.0).contains(&outage_eps) {
            return Err(Error::InvalidInput(format!(
                "outage budget must lie in [0, 1], got {outage_eps}"
            )));
        }
        Ok(UserSpec {
            u_hat,
            radius_r,
            rate_min,
            noise_power,
            outage_eps,
        })
    }
}

/// Antenna x-coordinates along the waveguide, expected strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    positions: Vec<f64>,
}

impl Placement {
    /// Wraps raw positions; feasibility is checked by [`validate_placement`].
    pub fn new(positions: Vec<f64>) -> Self {
        Placement { positions }
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn set_position(&mut self, index: usize, v: f64) {
        self.positions[index] = v;
    }
}

/// One violated placement constraint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlacementViolation {
    /// Gap between positions `index - 1` and `index` is below `λ/2`.
    Spacing { index: usize, gap: f64 },
    /// Position `index` lies outside `[-ℓ_w/2, ℓ_w/2]`.
    Bounds { index: usize, position: f64 },
}

impl fmt::Display for PlacementViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlacementViolation::Spacing { index, gap } => {
                write!(f, "spacing below lambda/2 before antenna {index}: gap {gap:.6e} m")
            }
            PlacementViolation::Bounds { index, position } => {
                write!(f, "antenna {index} off the waveguide at x = {position:.6e} m")
            }
        }
    }
}

/// Feasibility verdict with the list of violated constraints.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FeasibilityReport {
    pub violations: Vec<PlacementViolation>,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the minimum-spacing and on-waveguide constraints.
pub fn validate_placement(placement: &Placement, wg: &WaveguideConfig) -> FeasibilityReport {
    let half = 0.5 * wg.length_w;
    let min_gap = wg.min_spacing();
    let mut violations = Vec::new();
    let pos = placement.positions();
    for (i, &v) in pos.iter().enumerate() {
        if !(-half..=half).contains(&v) {
            violations.push(PlacementViolation::Bounds { index: i, position: v });
        }
        if i > 0 {
            let gap = v - pos[i - 1];
            if gap < min_gap {
                violations.push(PlacementViolation::Spacing { index: i, gap });
            }
        }
    }
    FeasibilityReport { violations }
}

/// Full problem instance: geometry, users, service area, antenna count.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub waveguide: WaveguideConfig,
    pub users: Vec<UserSpec>,
    /// Service-area extent along x (m), centered at the origin.
    pub area_x: f64,
    /// Service-area extent along y (m), centered at the origin.
    pub area_y: f64,
    pub num_antennas: usize,
}

impl Scenario {
    pub fn new(
        waveguide: WaveguideConfig,
        users: Vec<UserSpec>,
        area_x: f64,
        area_y: f64,
        num_antennas: usize,
    ) -> Result<Self> {
        if users.is_empty() {
            return Err(Error::InvalidInput("scenario needs at least one user".into()));
        }
        if num_antennas == 0 {
            return Err(Error::InvalidInput("scenario needs at least one antenna".into()));
        }
        if !(area_x > 0.0 && area_y > 0.0) {
            return Err(Error::InvalidInput(format!(
                "service area must be positive, got {area_x} x {area_y}"
            )));
        }
        Ok(Scenario {
            waveguide,
            users,
            area_x,
            area_y,
            num_antennas,
        })
    }

    pub fn num_users(&self) -> usize {
        self.users.len()
    }

    /// Per-user SNR thresholds `γ_k = σ_k² (2^{K R_k,min} - 1)`.
    pub fn gammas(&self) -> Vec<f64> {
        let k = self.users.len();
        self.users
            .iter()
            .map(|u| snr_threshold(k, u.rate_min, u.noise_power))
            .collect()
    }
}

/// Combined complex channel from all antennas to a ground-plane point.
///
/// `h(u, v) = Σ_n (√η / d_n) · exp(-j 2π (d_n/λ + (v_n + ℓ_w/2)/λ_g))` with
/// `d_n = √((u_x - v_n)² + u_y² + d²)`.
pub fn channel_gain(u: Vec2, placement: &Placement, wg: &WaveguideConfig) -> Complex64 {
    let sqrt_eta = wg.eta.sqrt();
    let half = 0.5 * wg.length_w;
    let mut h = Complex64::new(0.0, 0.0);
    for &v in placement.positions() {
        let dx = u.x - v;
        let dist = (dx * dx + u.y * u.y + wg.height_d * wg.height_d).sqrt();
        let phase = -TAU * (dist / wg.lambda + (v + half) / wg.lambda_g);
        h += Complex64::from_polar(sqrt_eta / dist, phase);
    }
    h
}

/// Squared channel magnitude `|h(u, v)|²`.
pub fn channel_gain_sq(u: Vec2, placement: &Placement, wg: &WaveguideConfig) -> f64 {
    channel_gain(u, placement, wg).norm_sqr()
}

/// Achievable rate `(1/K) log₂(1 + p |h|² / (N σ²))` in bits/s/Hz.
///
/// The `1/K` prefactor is the equal TDMA time share, the `1/N` factor the
/// equal power split across antennas.
pub fn rate(p: f64, gain_sq: f64, num_antennas: usize, num_users: usize, noise: f64) -> f64 {
    let snr = p * gain_sq / (num_antennas as f64 * noise);
    (1.0 + snr).log2() / num_users as f64
}

/// SNR threshold `γ_min = σ² (2^{K R_min} - 1)` (W) equivalent to the rate target.
pub fn snr_threshold(num_users: usize, rate_min: f64, noise: f64) -> f64 {
    noise * ((num_users as f64 * rate_min).exp2() - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn paper_waveguide() -> WaveguideConfig {
        WaveguideConfig::new(28e9, 1.4, 50.0, 3.0).unwrap()
    }

    /// Term-by-term re-evaluation of the channel sum with compensated
    /// accumulation; independent of the `Complex64` path above.
    fn channel_oracle(u: Vec2, positions: &[f64], wg: &WaveguideConfig) -> (f64, f64) {
        let sqrt_eta = wg.eta.sqrt();
        let half = 0.5 * wg.length_w;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        let (mut c_re, mut c_im) = (0.0f64, 0.0f64);
        for &v in positions {
            let dist = ((u.x - v).powi(2) + u.y * u.y + wg.height_d * wg.height_d).sqrt();
            let phase = -TAU * (dist / wg.lambda + (v + half) / wg.lambda_g);
            let amp = sqrt_eta / dist;
            // Kahan step for each component.
            let tr = amp * phase.cos() - c_re;
            let sr = re + tr;
            c_re = (sr - re) - tr;
            re = sr;
            let ti = amp * phase.sin() - c_im;
            let si = im + ti;
            c_im = (si - im) - ti;
            im = si;
        }
        (re, im)
    }

    #[test]
    fn derived_constants() {
        let wg = paper_waveguide();
        assert!((wg.lambda - SPEED_OF_LIGHT / 28e9).abs() < 1e-18);
        assert!((wg.lambda_g - wg.lambda / 1.4).abs() < 1e-18);
        assert!((wg.eta - wg.lambda * wg.lambda / (16.0 * PI * PI)).abs() < 1e-22);
        assert!(wg.lambda_g <= wg.lambda);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(WaveguideConfig::new(0.0, 1.4, 50.0, 3.0).is_err());
        assert!(WaveguideConfig::new(28e9, 0.9, 50.0, 3.0).is_err());
        assert!(WaveguideConfig::new(28e9, 1.4, -1.0, 3.0).is_err());
        assert!(WaveguideConfig::new(28e9, 1.4, 50.0, 0.0).is_err());
        assert!(UserSpec::new(Vec2::ZERO, -1.0, 1.0, 1e-12, 0.01).is_err());
        assert!(UserSpec::new(Vec2::ZERO, 1.0, 1.0, 0.0, 0.01).is_err());
        assert!(UserSpec::new(Vec2::ZERO, 1.0, 1.0, 1e-12, 1.5).is_err());
    }

    #[test]
    fn single_antenna_gain_is_free_space() {
        // User directly below the antenna: d_1 = d, so |h| = sqrt(eta) / d.
        let wg = paper_waveguide();
        let placement = Placement::new(vec![7.25]);
        let h = channel_gain(Vec2::new(7.25, 0.0), &placement, &wg);
        let expected = wg.eta.sqrt() / 3.0;
        assert!((h.norm() - expected).abs() <= 1e-15 * expected);
    }

    #[test]
    fn two_antennas_constructive_on_bisector() {
        // Spacing of one guided wavelength and equal free-space distances:
        // phases coincide mod 2pi, so the terms add coherently.
        let wg = paper_waveguide();
        let v1 = -1.0;
        let v2 = v1 + wg.lambda_g;
        assert!(wg.lambda_g >= wg.min_spacing());
        let placement = Placement::new(vec![v1, v2]);
        let u = Vec2::new(0.5 * (v1 + v2), 4.0);
        let d_sq = (u.x - v1).powi(2) + u.y * u.y + wg.height_d * wg.height_d;
        let gain = channel_gain_sq(u, &placement, &wg);
        let expected = 4.0 * wg.eta / d_sq;
        assert!(
            (gain - expected).abs() <= 1e-9 * expected,
            "gain {gain:.15e} vs expected {expected:.15e}"
        );
    }

    #[test]
    fn three_antennas_match_term_by_term_oracle() {
        let wg = paper_waveguide();
        let positions = vec![-1.0, 0.0, 1.0];
        let placement = Placement::new(positions.clone());
        let u = Vec2::new(0.0, 0.0);
        let h = channel_gain(u, &placement, &wg);
        let (re, im) = channel_oracle(u, &positions, &wg);
        let scale = h.norm().max(1e-30);
        assert!((h.re - re).abs() <= 1e-12 * scale);
        assert!((h.im - im).abs() <= 1e-12 * scale);
    }

    #[test]
    fn rate_examples() {
        assert_eq!(rate(0.0, 1.0, 1, 1, 1.0), 0.0);
        // p * g / (N * noise) = 1, K = 1 -> log2(2) = 1.
        assert!((rate(2.0, 3.0, 2, 1, 3.0) - 1.0).abs() < 1e-15);
        // p * g / (N * noise) = 7, K = 3 -> (1/3) log2(8) = 1.
        assert!((rate(7.0, 1.0, 1, 3, 1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn snr_threshold_examples() {
        assert_eq!(snr_threshold(3, 0.0, 1e-12), 0.0);
        let sigma = 4.2e-13;
        assert!((snr_threshold(1, 1.0, sigma) - sigma).abs() < 1e-28);
        // -174 dBm/Hz over 100 MHz: sigma^2 = 10^((-174 + 80 - 30)/10) W.
        let noise = 10f64.powf((-174.0 + 10.0 * 1e8f64.log10() - 30.0) / 10.0);
        assert!((noise - 3.981e-13).abs() < 1e-15);
        let gamma = snr_threshold(3, 1.0, noise);
        assert!((gamma - 7.0 * noise).abs() <= 1e-15 * gamma);
        assert!((gamma - 2.787e-12).abs() < 1e-14);
    }

    #[test]
    fn placement_validation_examples() {
        let wg = paper_waveguide();
        let ok = validate_placement(&Placement::new(vec![-25.0]), &wg);
        assert!(ok.is_feasible(), "boundary position is allowed");

        let spacing = validate_placement(
            &Placement::new(vec![0.0, 0.25 * wg.lambda]),
            &wg,
        );
        assert_eq!(spacing.violations.len(), 1);
        assert!(matches!(
            spacing.violations[0],
            PlacementViolation::Spacing { index: 1, .. }
        ));

        let bounds = validate_placement(&Placement::new(vec![0.0, 26.0]), &wg);
        assert_eq!(bounds.violations.len(), 1);
        assert!(matches!(
            bounds.violations[0],
            PlacementViolation::Bounds { index: 1, .. }
        ));
    }

    #[test]
    fn snr_threshold_depends_only_on_k_times_rate() {
        let noise = 3.9e-13;
        let a = snr_threshold(2, 3.0, noise);
        let b = snr_threshold(3, 2.0, noise);
        let c = snr_threshold(6, 1.0, noise);
        assert_eq!(a.to_bits(), b.to_bits());
        assert_eq!(b.to_bits(), c.to_bits());
    }
}
