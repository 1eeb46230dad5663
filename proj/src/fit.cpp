#include "mollow/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mollow/errors.hpp"

namespace mollow {

namespace {

constexpr int kPeaks = 3;

// optimizer parameter vector layout: [c, log g, log w] x 3 [, log scale]
Eigen::VectorXd pack(const ThreeLorentzianFit& fit, bool fit_scale) {
    Eigen::VectorXd p(fit_scale ? 10 : 9);
    for (int i = 0; i < kPeaks; ++i) {
        p[3 * i] = fit.peaks[i].center;
        p[3 * i + 1] = std::log(fit.peaks[i].half_width);
        p[3 * i + 2] = std::log(fit.peaks[i].weight);
    }
    if (fit_scale)
        p[9] = std::log(fit.overall_scale);
    return p;
}

void unpack(const Eigen::VectorXd& p, bool fit_scale, ThreeLorentzianFit& fit) {
    for (int i = 0; i < kPeaks; ++i) {
        fit.peaks[i].center = p[3 * i];
        fit.peaks[i].half_width = std::exp(p[3 * i + 1]);
        fit.peaks[i].weight = std::exp(p[3 * i + 2]);
    }
    if (fit_scale)
        fit.overall_scale = std::exp(p[9]);
}

double cost_of(std::span<const double> omega, std::span<const double> value,
               const ThreeLorentzianFit& fit) {
    double cost = 0.0;
    for (std::size_t j = 0; j < omega.size(); ++j) {
        const double r = three_lorentzian_model(omega[j], fit) - value[j];
        cost += r * r;
    }
    return 0.5 * cost;
}

// half width at half maximum estimated by walking the samples away from a peak
double hwhm_estimate(std::span<const double> omega, std::span<const double> value,
                     std::size_t peak_index) {
    const double half = 0.5 * value[peak_index];
    double left = omega.front(), right = omega.back();
    for (std::size_t j = peak_index; j-- > 0;) {
        if (value[j] <= half) {
            left = omega[j];
            break;
        }
    }
    for (std::size_t j = peak_index + 1; j < omega.size(); ++j) {
        if (value[j] <= half) {
            right = omega[j];
            break;
        }
    }
    const double width = 0.5 * (right - left);
    const double step = omega[1] - omega[0];
    return std::max(width, step);
}

ThreeLorentzianFit seed_from_peaks(std::span<const double> omega,
                                   std::span<const double> value,
                                   const FitOptions& options, double scale) {
    const auto all = find_peaks(omega, value);
    // strongest three, but noise can decorate one line with several local
    // maxima, so enforce a minimum separation when picking them
    const double radius = options.width_hint ? 5.0 * *options.width_hint
                                             : (omega.back() - omega.front()) / 100.0;
    std::vector<PeakEstimate> peaks;
    for (const auto& cand : all) {
        bool isolated = true;
        for (const auto& kept : peaks)
            if (std::abs(cand.center - kept.center) < radius) {
                isolated = false;
                break;
            }
        if (isolated) {
            peaks.push_back(cand);
            if (peaks.size() == kPeaks)
                break;
        }
    }
    if (peaks.size() < kPeaks)
        throw NumericalError("fit seed: found " + std::to_string(peaks.size()) +
                             " separated peaks, need 3");
    std::sort(peaks.begin(), peaks.end(),
              [](const PeakEstimate& a, const PeakEstimate& b) { return a.center < b.center; });

    ThreeLorentzianFit init;
    init.overall_scale = scale;
    for (int i = 0; i < kPeaks; ++i) {
        double width;
        if (options.width_hint) {
            width = *options.width_hint;
        } else {
            const auto it = std::lower_bound(omega.begin(), omega.end(), peaks[i].center);
            const std::size_t idx =
                std::min<std::size_t>(std::distance(omega.begin(), it), omega.size() - 1);
            width = hwhm_estimate(omega, value, idx);
        }
        // single-peak approximation at the maximum: S(c) = scale w / g^2
        const double weight = std::max(peaks[i].height, 1e-300) * width * width / scale;
        init.peaks[i] = LorentzianPeak{peaks[i].center, width, weight};
    }
    return init;
}

void check_init(const ThreeLorentzianFit& init, double span) {
    for (int i = 0; i < kPeaks; ++i) {
        if (!(init.peaks[i].half_width > 0) || !(init.peaks[i].weight > 0))
            throw DegenerateInit("fit init: widths and weights must be positive");
        for (int j = i + 1; j < kPeaks; ++j)
            if (std::abs(init.peaks[i].center - init.peaks[j].center) < 1e-12 * span)
                throw DegenerateInit("fit init: coincident peak centers");
    }
}

} // namespace

std::vector<PeakEstimate> find_peaks(std::span<const double> omega,
                                     std::span<const double> value) {
    if (omega.size() != value.size())
        throw ValidationError("find_peaks: omega/value size mismatch");
    if (omega.size() < 5)
        throw ValidationError("find_peaks: need at least 5 samples");

    std::vector<PeakEstimate> peaks;
    for (std::size_t i = 1; i + 1 < value.size(); ++i) {
        if (!(value[i] > value[i - 1] && value[i] > value[i + 1]))
            continue;
        const double h = omega[i + 1] - omega[i];
        double center = omega[i];
        double height = value[i];
        // parabola through the three points; log-values where possible since
        // a Lorentzian is nearly quadratic in log near its maximum
        if (value[i - 1] > 0 && value[i] > 0 && value[i + 1] > 0) {
            const double lm = std::log(value[i - 1]);
            const double l0 = std::log(value[i]);
            const double lp = std::log(value[i + 1]);
            const double curve = lm - 2.0 * l0 + lp;
            if (curve < 0) {
                const double shift = 0.5 * h * (lm - lp) / curve;
                center += shift;
                height = std::exp(l0 - 0.125 * (lm - lp) * (lm - lp) / curve);
            }
        } else {
            const double curve = value[i - 1] - 2.0 * value[i] + value[i + 1];
            if (curve < 0) {
                const double shift = 0.5 * h * (value[i - 1] - value[i + 1]) / curve;
                center += shift;
                height = value[i] - 0.125 * (value[i - 1] - value[i + 1]) * shift / h * 2.0;
            }
        }
        peaks.push_back(PeakEstimate{center, height});
    }
    if (peaks.empty())
        throw NoPeaks();
    std::sort(peaks.begin(), peaks.end(),
              [](const PeakEstimate& a, const PeakEstimate& b) { return a.height > b.height; });
    return peaks;
}

std::vector<PeakEstimate> find_peaks(const SpectrumSamples& samples) {
    return find_peaks(samples.omega, samples.value);
}

double three_lorentzian_model(double omega, const ThreeLorentzianFit& fit) {
    double sum = 0.0;
    for (const auto& pk : fit.peaks) {
        const double dx = omega - pk.center;
        sum += pk.weight / (dx * dx + pk.half_width * pk.half_width);
    }
    return fit.overall_scale * sum;
}

void three_lorentzian_jacobian_row(double omega, const ThreeLorentzianFit& fit,
                                   bool fit_scale, std::span<double> row) {
    double model = 0.0;
    for (int i = 0; i < kPeaks; ++i) {
        const auto& pk = fit.peaks[i];
        const double dx = omega - pk.center;
        const double g2 = pk.half_width * pk.half_width;
        const double denom = dx * dx + g2;
        const double term = pk.weight / denom;
        model += term;
        const double s = fit.overall_scale;
        row[3 * i] = s * term * 2.0 * dx / denom;      // d/dc
        row[3 * i + 1] = -s * term * 2.0 * g2 / denom; // d/d(log g)
        row[3 * i + 2] = s * term;                     // d/d(log w)
    }
    if (fit_scale)
        row[9] = fit.overall_scale * model; // d/d(log scale)
}

ThreeLorentzianFit fit_three_lorentzians(std::span<const double> omega,
                                         std::span<const double> value,
                                         const FitOptions& options,
                                         std::optional<ThreeLorentzianFit> init) {
    if (omega.size() != value.size())
        throw ValidationError("fit: omega/value size mismatch");
    if (omega.size() < 30)
        throw ValidationError("fit: need at least 30 samples");

    const bool fit_scale = !options.fixed_scale.has_value();
    const int npar = fit_scale ? 10 : 9;
    const double scale = options.fixed_scale.value_or(1.0);

    ThreeLorentzianFit fit =
        init ? *init : seed_from_peaks(omega, value, options, scale);
    if (!fit_scale)
        fit.overall_scale = scale;
    else if (!(fit.overall_scale > 0))
        fit.overall_scale = 1.0;
    fit.scale_fitted = fit_scale;
    check_init(fit, omega.back() - omega.front());

    Eigen::VectorXd p = pack(fit, fit_scale);
    double cost = cost_of(omega, value, fit);
    double lambda = 1e-3;
    bool converged = false;
    int iterations = 0;

    Eigen::MatrixXd jtj(npar, npar);
    Eigen::VectorXd jtr(npar);
    std::vector<double> row(npar);

    for (; iterations < options.max_iter && !converged;) {
        // normal equations at the current point
        jtj.setZero();
        jtr.setZero();
        for (std::size_t j = 0; j < omega.size(); ++j) {
            const double r = three_lorentzian_model(omega[j], fit) - value[j];
            three_lorentzian_jacobian_row(omega[j], fit, fit_scale, row);
            for (int a = 0; a < npar; ++a) {
                jtr[a] += row[a] * r;
                for (int b = a; b < npar; ++b)
                    jtj(a, b) += row[a] * row[b];
            }
        }
        for (int a = 0; a < npar; ++a)
            for (int b = 0; b < a; ++b)
                jtj(a, b) = jtj(b, a);

        if (jtr.lpNorm<Eigen::Infinity>() < options.tol) {
            converged = true;
            break;
        }

        // try damped steps until one lowers the cost
        bool accepted = false;
        bool all_finite = true;
        while (lambda < 1e14) {
            Eigen::MatrixXd damped = jtj;
            for (int a = 0; a < npar; ++a)
                damped(a, a) += lambda * std::max(jtj(a, a), 1e-300);
            const Eigen::VectorXd step = damped.ldlt().solve(-jtr);

            ThreeLorentzianFit trial = fit;
            unpack(p + step, fit_scale, trial);
            const double trial_cost = cost_of(omega, value, trial);
            if (!std::isfinite(trial_cost))
                all_finite = false;
            if (std::isfinite(trial_cost) && trial_cost < cost) {
                const double decrease = (cost - trial_cost) / std::max(cost, 1e-300);
                p += step;
                fit = trial;
                cost = trial_cost;
                lambda = std::max(lambda / 10.0, 1e-18);
                accepted = true;
                if (decrease < options.tol)
                    converged = true;
                break;
            }
            lambda *= 10.0;
        }
        ++iterations;
        if (!accepted) {
            // damping saturated: if every trial stayed finite, no parameter
            // change lowers the cost within double precision, i.e. the
            // iterate is a numerical stationary point; otherwise the model
            // blew up and this is a genuine failure
            converged = all_finite;
            break;
        }
    }

    // order peaks by center for the report
    std::sort(fit.peaks.begin(), fit.peaks.end(),
              [](const LorentzianPeak& a, const LorentzianPeak& b) {
                  return a.center < b.center;
              });
    fit.iterations = iterations;
    fit.converged = converged;
    fit.residual_rms = std::sqrt(2.0 * cost / static_cast<double>(omega.size()));

    // covariance estimate: sigma^2 (J^T J)^-1, transformed out of log space
    jtj.setZero();
    for (std::size_t j = 0; j < omega.size(); ++j) {
        three_lorentzian_jacobian_row(omega[j], fit, fit_scale, row);
        for (int a = 0; a < npar; ++a)
            for (int b = a; b < npar; ++b)
                jtj(a, b) += row[a] * row[b];
    }
    for (int a = 0; a < npar; ++a)
        for (int b = 0; b < a; ++b)
            jtj(a, b) = jtj(b, a);
    const std::size_t dof = omega.size() > static_cast<std::size_t>(npar)
                                ? omega.size() - npar
                                : 1;
    const double sigma_sq = 2.0 * cost / static_cast<double>(dof);
    Eigen::MatrixXd cov_log =
        sigma_sq * jtj.completeOrthogonalDecomposition().pseudoInverse();
    Eigen::VectorXd t(npar);
    for (int i = 0; i < kPeaks; ++i) {
        t[3 * i] = 1.0;
        t[3 * i + 1] = fit.peaks[i].half_width;
        t[3 * i + 2] = fit.peaks[i].weight;
    }
    if (fit_scale)
        t[9] = fit.overall_scale;
    fit.covariance = t.asDiagonal() * cov_log * t.asDiagonal();
    return fit;
}

ThreeLorentzianFit fit_three_lorentzians(const SpectrumSamples& samples,
                                         const FitOptions& options,
                                         std::optional<ThreeLorentzianFit> init) {
    return fit_three_lorentzians(samples.omega, samples.value, options, std::move(init));
}

SidebandMeasurement measure_sideband_shift(const SpectrumScenario& sc,
                                           std::optional<NoiseSpec> noise,
                                           const FitOptions& base_options) {
    SpectrumTriplet triplet = spectrum_triplet(sc);

    FitOptions options = base_options;
    if (!options.fixed_scale)
        options.fixed_scale = sc.Gamma / std::numbers::pi;
    if (!options.width_hint)
        options.width_hint = sc.Gamma;

    auto fit_one = [&](SpectrumSamples& samples, std::uint64_t seed_offset) {
        if (noise && noise->sigma > 0) {
            const double peak = *std::max_element(samples.value.begin(), samples.value.end());
            samples.value =
                add_gaussian_noise(samples.value, noise->sigma * peak, noise->seed + seed_offset);
        }
        return fit_three_lorentzians(samples, options);
    };

    SidebandMeasurement m;
    m.fit_uncorrected = fit_one(triplet.uncorrected, 0);
    m.fit_bare = fit_one(triplet.bare, 1);
    m.fit_full = fit_one(triplet.full, 2);

    // peaks are ordered by center: [0] lower sideband, [1] central, [2] upper
    m.delta_plus_measured =
        m.fit_full.peaks[2].center - m.fit_uncorrected.peaks[2].center;
    m.delta_minus_measured =
        m.fit_full.peaks[0].center - m.fit_uncorrected.peaks[0].center;
    const double rabi_part = m.fit_full.peaks[2].center - m.fit_bare.peaks[2].center;
    m.r1_measured = std::abs(rabi_part) / m.fit_full.peaks[2].half_width;
    return m;
}

} // namespace mollow
