// fit.hpp - recovery of the Mollow peak parameters from sampled spectra by
// damped nonlinear least squares, emulating a precision line-position
// measurement.  The model is the three-Lorentzian sum
//   S(omega) = scale * sum_i w_i / ((omega - c_i)^2 + g_i^2)
// with w_i the Gamma_i A_i style numerator weights and scale the Gamma/pi
// prefactor (fixed from metadata by default, fitted on request).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mollow/spectrum.hpp"

namespace mollow {

struct LorentzianPeak {
    double center = 0.0;
    double half_width = 0.0; // > 0
    double weight = 0.0;     // > 0
};

struct ThreeLorentzianFit {
    std::array<LorentzianPeak, 3> peaks{}; // ordered by center
    double overall_scale = 1.0;
    bool scale_fitted = false;
    double residual_rms = 0.0;
    int iterations = 0;
    bool converged = false;
    // parameter covariance estimate in (center, half_width, weight) order per
    // peak, 9x9, or 10x10 with the fitted scale appended
    Eigen::MatrixXd covariance;
};

struct PeakEstimate {
    double center = 0.0;
    double height = 0.0;
};

// All strict local maxima of the samples, each refined by a three-point
// parabolic interpolation of the log-values, sorted by height descending.
// Throws NoPeaks when the samples are monotone and ValidationError for
// fewer than 5 samples.
std::vector<PeakEstimate> find_peaks(std::span<const double> omega,
                                     std::span<const double> value);

std::vector<PeakEstimate> find_peaks(const SpectrumSamples& samples);

struct FitOptions {
    int max_iter = 200;
    double tol = 1e-12;
    // Fixed Gamma/pi prefactor; nullopt fits the scale as a tenth parameter.
    // Note the data only determine the product scale x weights, so prefer a
    // fixed scale whenever one is known.
    std::optional<double> fixed_scale;
    // Seed for the half-widths (the decay-rate scale from metadata).  When
    // absent, widths are seeded from the half-maximum crossings of the data.
    std::optional<double> width_hint;
};

// Levenberg-Marquardt with lambda0 = 1e-3, *10 on a rejected step, /10 on an
// accepted one.  Half-widths and weights are optimized in log-space, so every
// iterate is a valid parameter set.  converged = true iff the relative cost
// decrease or the gradient max-norm drops below tol, or the damping
// saturates with finite trial costs (no step lowers the cost within double
// precision: a numerical stationary point).  Otherwise the best parameters
// so far are returned with converged = false.  Deterministic for fixed
// inputs.
ThreeLorentzianFit fit_three_lorentzians(std::span<const double> omega,
                                         std::span<const double> value,
                                         const FitOptions& options = {},
                                         std::optional<ThreeLorentzianFit> init = std::nullopt);

ThreeLorentzianFit fit_three_lorentzians(const SpectrumSamples& samples,
                                         const FitOptions& options = {},
                                         std::optional<ThreeLorentzianFit> init = std::nullopt);

// Model value and its analytic Jacobian row in the optimizer parameter space
// (center, log half-width, log weight per peak, then log scale when fitted).
// Exposed for the finite-difference cross-check.
double three_lorentzian_model(double omega, const ThreeLorentzianFit& fit);
void three_lorentzian_jacobian_row(double omega, const ThreeLorentzianFit& fit,
                                   bool fit_scale, std::span<double> row);

// Optional noise applied to synthesized spectra before fitting; sigma is
// relative to the maximum sample of each spectrum.
struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

struct SidebandMeasurement {
    ThreeLorentzianFit fit_uncorrected;
    ThreeLorentzianFit fit_bare;
    ThreeLorentzianFit fit_full;
    // fully corrected minus uncorrected fitted sideband centers: the fully
    // dressed Lamb shift as the experiment would see it
    double delta_plus_measured = 0.0;
    double delta_minus_measured = 0.0;
    // Rabi-frequency correction alone (fully corrected minus bare-corrected
    // upper sideband) over the fitted upper-sideband half-width
    double r1_measured = 0.0;
};

// Synthesizes the uncorrected / bare / fully corrected spectra of the
// scenario (plus optional noise), fits all three, and reports the measured
// sideband displacements.
SidebandMeasurement measure_sideband_shift(const SpectrumScenario& sc,
                                           std::optional<NoiseSpec> noise = std::nullopt,
                                           const FitOptions& base_options = {});

} // namespace mollow
