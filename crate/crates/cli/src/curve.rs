//! Sampling generating functions over an equally spaced `t` grid and writing
//! the samples as CSV.

use std::io::Write;

use igf_core::{golomb_igf, hooda_bhaker_igf, weighted_igf, TDomain, UtilityInformationScheme};

use crate::error::{CliError, CliResult};
use crate::render::format_value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Measure {
    Weighted,
    Golomb,
    HoodaBhaker,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Weighted => "weighted",
            Measure::Golomb => "golomb",
            Measure::HoodaBhaker => "hooda_bhaker",
        }
    }

    pub fn evaluate(
        self,
        scheme: &UtilityInformationScheme,
        t: f64,
        domain: TDomain,
    ) -> igf_core::Result<f64> {
        match self {
            Measure::Weighted => weighted_igf(scheme, t, domain),
            Measure::Golomb => golomb_igf(scheme.dist(), t, domain),
            Measure::HoodaBhaker => hooda_bhaker_igf(scheme, t, domain),
        }
    }
}

/// Grid and columns of a curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveRequest {
    pub t_min: f64,
    pub t_max: f64,
    pub steps: usize,
    pub measures: Vec<Measure>,
}

impl CurveRequest {
    pub fn validate(&self, domain: TDomain) -> CliResult<()> {
        if !(self.t_min.is_finite() && self.t_max.is_finite()) {
            return Err(CliError::validation("curve bounds must be finite"));
        }
        if self.t_min >= self.t_max {
            return Err(CliError::validation(format!(
                "t-min ({}) must be below t-max ({})",
                self.t_min, self.t_max
            )));
        }
        if self.steps < 2 {
            return Err(CliError::validation("a curve needs at least 2 steps"));
        }
        if self.measures.is_empty() {
            return Err(CliError::validation("no measures requested"));
        }
        domain.check(self.t_min)?;
        Ok(())
    }

    /// `steps` equally spaced points including both endpoints.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        let span = self.t_max - self.t_min;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.t_max
                } else {
                    self.t_min + span * (i as f64) / (last as f64)
                }
            })
            .collect()
    }
}

/// One row: `t` and a value per requested measure.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub t: f64,
    pub values: Vec<f64>,
}

pub fn sample_curve(
    scheme: &UtilityInformationScheme,
    request: &CurveRequest,
    domain: TDomain,
) -> CliResult<Vec<CurveSample>> {
    request.validate(domain)?;
    let grid = request.grid();
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::validation(
            "t grid is not strictly increasing; reduce steps or widen the range",
        ));
    }
    grid.into_iter()
        .map(|t| {
            let values = request
                .measures
                .iter()
                .map(|m| {
                    let v = m.evaluate(scheme, t, domain)?;
                    if v.is_finite() {
                        Ok(v)
                    } else {
                        Err(CliError::Domain(format!(
                            "{} is not finite at t = {t}",
                            m.name()
                        )))
                    }
                })
                .collect::<CliResult<Vec<f64>>>()?;
            Ok(CurveSample { t, values })
        })
        .collect()
}

/// Header `t,<measure>...` then one row per sample, `\n` line endings.
pub fn write_csv<W: Write>(
    mut out: W,
    measures: &[Measure],
    samples: &[CurveSample],
    digits: usize,
) -> std::io::Result<()> {
    let mut header = String::from("t");
    for m in measures {
        header.push(',');
        header.push_str(m.name());
    }
    writeln!(out, "{header}")?;
    for sample in samples {
        let mut row = format_value(sample.t, digits);
        for &v in &sample.values {
            row.push(',');
            row.push_str(&format_value(v, digits));
        }
        writeln!(out, "{row}")?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use igf_core::{make_scheme, DistributionKind};

    fn request(t_min: f64, t_max: f64, steps: usize) -> CurveRequest {
        CurveRequest {
            t_min,
            t_max,
            steps,
            measures: vec![Measure::Weighted],
        }
    }

    #[test]
    fn grid_includes_endpoints() {
        let g = request(1.0, 3.0, 101).grid();
        assert_eq!(g.len(), 101);
        assert_eq!(g[0], 1.0);
        assert_eq!(g[50], 2.0);
        assert_eq!(g[100], 3.0);
    }

    #[test]
    fn example_curve() {
        let s = make_scheme(&[0.5, 0.5], &[1.0, 2.0], DistributionKind::Complete).unwrap();
        let rows = sample_curve(&s, &request(1.0, 3.0, 3), TDomain::Standard).unwrap();
        let values: Vec<f64> = rows.iter().map(|r| r.values[0]).collect();
        // 0.5³ + 0.5⁵ at t = 3
        assert_eq!(values, vec![1.0, 0.375, 0.15625]);

        let mut buf = Vec::new();
        write_csv(&mut buf, &[Measure::Weighted], &rows, 6).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "t,weighted\n1.000000,1.000000\n2.000000,0.375000\n3.000000,0.156250\n"
        );
    }

    #[test]
    fn invalid_requests() {
        let s = make_scheme(&[0.5, 0.5], &[1.0, 2.0], DistributionKind::Complete).unwrap();
        let std = TDomain::Standard;
        let err = sample_curve(&s, &request(3.0, 1.0, 3), std).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        let err = sample_curve(&s, &request(1.0, 3.0, 1), std).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        let err = sample_curve(&s, &request(0.5, 3.0, 3), std).unwrap_err();
        assert!(matches!(err, CliError::Domain(_)));
        assert!(sample_curve(&s, &request(0.5, 3.0, 3), TDomain::Extended).is_ok());
        let mut r = request(1.0, 3.0, 3);
        r.measures.clear();
        assert!(sample_curve(&s, &r, std).is_err());
        let err = sample_curve(&s, &request(1.0, 1.0 + 1e-15, 100), std).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }
}
