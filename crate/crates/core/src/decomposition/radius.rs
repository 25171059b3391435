use rand::Rng;

use crate::error::{Error, Result};

/// Geometric radius on `{1, 2, …}` with success probability `beta`, sampled by
/// inverse CDF from one 64-bit uniform, then truncated to `cap`.
///
/// The untruncated sample is always at least 1, so a result of 0 only occurs
/// when `cap` is 0.
pub fn sample_radius<R: Rng + ?Sized>(beta: f64, cap: Option<u64>, rng: &mut R) -> Result<u64> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "geometric rate {beta} outside (0, 1)"
        )));
    }
    // u in (0, 1]
    let u = 1.0 - rng.gen::<f64>();
    let r = (u.ln() / (1.0 - beta).ln()).ceil();
    let r = if r.is_finite() && r >= 1.0 {
        r.min(u64::MAX as f64) as u64
    } else {
        1
    };
    Ok(cap.map_or(r, |c| r.min(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_bad_rate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for beta in [0.0, 1.0, -0.5, 2.0, f64::NAN] {
            assert!(sample_radius(beta, None, &mut rng).is_err());
        }
    }

    #[test]
    fn rate_near_one_gives_unit_radius() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let ones = (0..10_000)
            .filter(|_| sample_radius(1.0 - 1e-9, None, &mut rng).unwrap() == 1)
            .count();
        assert_eq!(ones, 10_000);
    }

    #[test]
    fn truncation() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for beta in [0.001, 0.1, 0.5, 0.9] {
            for _ in 0..2_000 {
                let r = sample_radius(beta, Some(4), &mut rng).unwrap();
                assert!((1..=4).contains(&r));
            }
        }
        assert_eq!(sample_radius(0.3, Some(0), &mut rng).unwrap(), 0);
    }

    #[test]
    fn mean_matches_inverse_rate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 100_000;
        let sum: u64 = (0..n)
            .map(|_| sample_radius(0.1, None, &mut rng).unwrap())
            .sum();
        let mean = sum as f64 / n as f64;
        assert!((mean - 10.0).abs() / 10.0 < 0.05, "mean {mean}");
    }

    #[test]
    fn pmf_matches_geometric() {
        // Pr[r = k] = (1 - beta)^(k - 1) beta
        let beta = 0.3;
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let n = 200_000;
        let mut counts = [0usize; 6];
        for _ in 0..n {
            let r = sample_radius(beta, None, &mut rng).unwrap() as usize;
            if r <= 5 {
                counts[r] += 1;
            }
        }
        for k in 1..=5 {
            let expect = (1.0f64 - beta).powi(k as i32 - 1) * beta;
            let got = counts[k] as f64 / n as f64;
            assert!((got - expect).abs() < 0.005, "k={k} got {got} expect {expect}");
        }
    }
}
