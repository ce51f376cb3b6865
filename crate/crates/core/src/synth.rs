//! Deterministic synthetic EMG-like signal generation.
//!
//! Records are built as a Gaussian noise floor plus a train of burst events.
//! Each burst is a Hann-windowed sinusoid (a smooth polyphasic wavelet), with
//! its peak amplitude and duration drawn uniformly from class-specific bands:
//! myopathy bursts are low-amplitude and short, neuropathy bursts
//! high-amplitude and long, healthy bursts sit between. Amplitude is
//! unitless.
//!
//! Generation is a pure function of `(label, seed, params)`: all randomness
//! comes from one xoshiro256++ stream (see [`crate::rng`]), the first burst
//! onset is fixed at 10% of the duration, and later onsets follow a Poisson
//! process with a refractory gap of one burst length so bursts never overlap.

use crate::error::{Error, Result};
use crate::rng::Xoshiro256PlusPlus;
use crate::series::{ClassLabel, TimeSeries};

/// Amplitude and burst-duration bands for one class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassBands {
    /// Peak-amplitude range, unitless.
    pub amplitude: (f64, f64),
    /// Burst duration range in seconds.
    pub burst_len_s: (f64, f64),
}

/// Generator knobs.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthParams {
    /// Standard deviation of the Gaussian noise floor.
    pub noise_sigma: f64,
    /// Rate of the Poisson burst-onset process, bursts per second.
    pub burst_rate_hz: f64,
    /// Oscillation frequency inside a burst, Hz.
    pub wavelet_freq_hz: f64,
    pub healthy: ClassBands,
    pub myopathy: ClassBands,
    pub neuropathy: ClassBands,
}

impl Default for SynthParams {
    fn default() -> Self {
        SynthParams {
            noise_sigma: 0.05,
            burst_rate_hz: 3.0,
            wavelet_freq_hz: 120.0,
            myopathy: ClassBands {
                amplitude: (0.4, 0.7),
                burst_len_s: (0.020, 0.045),
            },
            healthy: ClassBands {
                amplitude: (0.9, 1.3),
                burst_len_s: (0.060, 0.120),
            },
            neuropathy: ClassBands {
                amplitude: (1.8, 2.6),
                burst_len_s: (0.150, 0.250),
            },
        }
    }
}

impl SynthParams {
    pub fn bands(&self, label: ClassLabel) -> ClassBands {
        match label {
            ClassLabel::Healthy => self.healthy,
            ClassLabel::Myopathy => self.myopathy,
            ClassLabel::Neuropathy => self.neuropathy,
        }
    }

    fn validate(&self) -> Result<()> {
        let mut check = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("{name} must be positive, got {v}")))
            }
        };
        check("noise_sigma", self.noise_sigma)?;
        check("burst_rate_hz", self.burst_rate_hz)?;
        check("wavelet_freq_hz", self.wavelet_freq_hz)?;
        for (name, b) in [
            ("healthy", self.healthy),
            ("myopathy", self.myopathy),
            ("neuropathy", self.neuropathy),
        ] {
            if !(b.amplitude.0 > 0.0 && b.amplitude.1 >= b.amplitude.0) {
                return Err(Error::InvalidParams(format!(
                    "{name}: amplitude band {:?} must be positive and ordered",
                    b.amplitude
                )));
            }
            if !(b.burst_len_s.0 > 0.0 && b.burst_len_s.1 >= b.burst_len_s.0) {
                return Err(Error::InvalidParams(format!(
                    "{name}: burst-length band {:?} must be positive and ordered",
                    b.burst_len_s
                )));
            }
        }
        Ok(())
    }
}

/// Generates one labeled record.
///
/// Deterministic given `(label, seed, sampling_rate, duration, params)`.
pub fn synthesize_emg(
    label: ClassLabel,
    seed: u64,
    sampling_rate: f64,
    duration_s: f64,
    params: &SynthParams,
) -> Result<TimeSeries> {
    params.validate()?;
    if !(duration_s > 0.0) || !duration_s.is_finite() {
        return Err(Error::InvalidParams(format!(
            "duration must be positive, got {duration_s}"
        )));
    }
    if !(sampling_rate > 0.0) || !sampling_rate.is_finite() {
        return Err(Error::InvalidParams(format!(
            "sampling_rate must be positive, got {sampling_rate}"
        )));
    }

    let n = (duration_s * sampling_rate).round() as usize;
    if n == 0 {
        return Err(Error::InvalidParams(
            "duration shorter than one sample".to_string(),
        ));
    }

    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut samples: Vec<f64> = (0..n)
        .map(|_| rng.next_normal() * params.noise_sigma)
        .collect();

    let bands = params.bands(label);
    // First burst is pinned so every record contains at least one; later
    // onsets are Poisson with a refractory gap of the burst just placed.
    let mut onset = 0.1 * duration_s;
    while onset < duration_s {
        let amp = rng.uniform(bands.amplitude.0, bands.amplitude.1);
        let len_s = rng.uniform(bands.burst_len_s.0, bands.burst_len_s.1);
        add_burst(&mut samples, sampling_rate, onset, len_s, amp, params.wavelet_freq_hz);
        onset += len_s + rng.next_exp(params.burst_rate_hz);
    }

    TimeSeries::new(
        samples,
        sampling_rate,
        format!("synth-{}-{}", label.as_str(), seed),
        Some(label),
    )
}

/// Adds one Hann-windowed sinusoid in place. The burst is clipped to the
/// record bounds.
fn add_burst(
    samples: &mut [f64],
    sampling_rate: f64,
    onset_s: f64,
    len_s: f64,
    amplitude: f64,
    freq_hz: f64,
) {
    let start = (onset_s * sampling_rate).round() as usize;
    let count = (len_s * sampling_rate).round() as usize;
    let two_pi = 2.0 * std::f64::consts::PI;
    for k in 0..count {
        let i = start + k;
        if i >= samples.len() {
            break;
        }
        let u = k as f64 / count as f64;
        let hann = 0.5 * (1.0 - (two_pi * u).cos());
        let t = k as f64 / sampling_rate;
        samples[i] += amplitude * hann * (two_pi * freq_hz * t).sin();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_output() {
        let p = SynthParams::default();
        let a = synthesize_emg(ClassLabel::Myopathy, 7, 4000.0, 1.0, &p).unwrap();
        let b = synthesize_emg(ClassLabel::Myopathy, 7, 4000.0, 1.0, &p).unwrap();
        assert_eq!(a.samples.len(), 4000);
        assert_eq!(a.samples, b.samples);
        assert_eq!(a.label, Some(ClassLabel::Myopathy));
    }

    #[test]
    fn rejects_bad_knobs() {
        let mut p = SynthParams::default();
        p.noise_sigma = 0.0;
        assert!(matches!(
            synthesize_emg(ClassLabel::Healthy, 1, 4000.0, 1.0, &p),
            Err(Error::InvalidParams(_))
        ));
        let p = SynthParams::default();
        assert!(synthesize_emg(ClassLabel::Healthy, 1, 4000.0, 0.0, &p).is_err());
        assert!(synthesize_emg(ClassLabel::Healthy, 1, 4000.0, -1.0, &p).is_err());
    }

    fn peak(ts: &TimeSeries) -> f64 {
        ts.samples.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    #[test]
    fn peak_amplitude_ordering_over_100_seeds() {
        let p = SynthParams::default();
        let mut holds = 0;
        for seed in 0..100 {
            let m = peak(&synthesize_emg(ClassLabel::Myopathy, seed, 4000.0, 1.0, &p).unwrap());
            let h = peak(&synthesize_emg(ClassLabel::Healthy, seed, 4000.0, 1.0, &p).unwrap());
            let n = peak(&synthesize_emg(ClassLabel::Neuropathy, seed, 4000.0, 1.0, &p).unwrap());
            if n > h && h > m {
                holds += 1;
            }
        }
        assert!(holds >= 95, "ordering held for only {holds}/100 seeds");
    }

    /// Mean length of contiguous above-floor runs of the smoothed rectified
    /// signal, a proxy for burst duration.
    fn mean_run_len(ts: &TimeSeries, floor: f64) -> f64 {
        let smooth = crate::preprocess::moving_average(
            &ts.with_samples(ts.samples.iter().map(|v| v.abs()).collect()),
            101,
        )
        .unwrap();
        let mut runs = Vec::new();
        let mut current = 0usize;
        for &v in &smooth.samples {
            if v > floor {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        if runs.is_empty() {
            0.0
        } else {
            runs.iter().sum::<usize>() as f64 / runs.len() as f64
        }
    }

    #[test]
    fn burst_lengths_longer_for_neuropathy() {
        let p = SynthParams::default();
        let floor = 4.0 * p.noise_sigma;
        let mut longer = 0;
        for seed in 0..100 {
            let m = synthesize_emg(ClassLabel::Myopathy, seed, 4000.0, 1.0, &p).unwrap();
            let n = synthesize_emg(ClassLabel::Neuropathy, seed, 4000.0, 1.0, &p).unwrap();
            if mean_run_len(&n, floor) > mean_run_len(&m, floor) {
                longer += 1;
            }
        }
        assert!(longer >= 95, "burst-length ordering held for {longer}/100 seeds");
    }
}
