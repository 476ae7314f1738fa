#include "hermix/sampling.hpp"

#include <cmath>

#include "hermix/errors.hpp"

namespace hermix {

namespace {

// Marsaglia polar method; the spare deviate is discarded so a draw is a
// pure function of the stream position.
double standard_normal(Pcg32& rng) {
    for (;;) {
        double u = 2.0 * rng.next_double() - 1.0;
        double v = 2.0 * rng.next_double() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

// Marsaglia-Tsang for shape >= 1; boosted by U^{1/shape} below 1.
double standard_gamma(double shape, Pcg32& rng) {
    if (shape < 1.0) {
        double u = rng.next_double();
        while (u <= 0.0) u = rng.next_double();
        return standard_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = standard_normal(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = rng.next_double();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double poisson_inversion(double rate, Pcg32& rng) {
    double l = std::exp(-rate);
    double p = 1.0;
    double k = -1.0;
    do {
        k += 1.0;
        p *= rng.next_double();
    } while (p > l);
    return k;
}

// Hormann's PTRS transformed rejection, valid for rate >= 10.
double poisson_ptrs(double rate, Pcg32& rng) {
    double slam = std::sqrt(rate);
    double loglam = std::log(rate);
    double b = 0.931 + 2.53 * slam;
    double a = -0.059 + 0.02483 * b;
    double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    double vr = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        double u = rng.next_double() - 0.5;
        double v = rng.next_double();
        double us = 0.5 - std::fabs(u);
        double k = std::floor((2.0 * a / us + b) * u + rate + 0.43);
        if (us >= 0.07 && v <= vr) return k;
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            k * loglam - rate - std::lgamma(k + 1.0))
            return k;
    }
}

}  // namespace

double sample_family(const FamilySpec& spec, Pcg32& rng) {
    if (!spec.all_fixed())
        throw InvalidParameter("sampling requires all parameters fixed");
    switch (spec.family) {
        case Family::Gaussian: {
            double mu = to_double(fixed_value(spec.params[0]));
            double sd = std::sqrt(to_double(fixed_value(spec.params[1])));
            return mu + sd * standard_normal(rng);
        }
        case Family::Gamma: {
            double shape = to_double(fixed_value(spec.params[0]));
            double scale = to_double(fixed_value(spec.params[1]));
            return scale * standard_gamma(shape, rng);
        }
        case Family::Exponential: {
            double theta = to_double(fixed_value(spec.params[0]));
            return -theta * std::log1p(-rng.next_double());
        }
        case Family::Uniform: {
            double a = to_double(fixed_value(spec.params[0]));
            double b = to_double(fixed_value(spec.params[1]));
            return a + (b - a) * rng.next_double();
        }
        case Family::StudentT: {
            double nu = to_double(fixed_value(spec.params[0]));
            double z = standard_normal(rng);
            double chi2 = 2.0 * standard_gamma(nu / 2.0, rng);
            return z / std::sqrt(chi2 / nu);
        }
        case Family::Poisson: {
            double rate = to_double(fixed_value(spec.params[0]));
            return rate < 10.0 ? poisson_inversion(rate, rng)
                               : poisson_ptrs(rate, rng);
        }
    }
    throw InvalidParameter("unknown family");
}

std::vector<double> sample_mixture(const std::vector<FamilySpec>& components,
                                   const std::vector<double>& weights,
                                   std::size_t n, Pcg32& rng,
                                   std::vector<std::size_t>* counts) {
    if (components.empty() || components.size() != weights.size())
        throw InvalidParameter("component and weight counts must match");
    double sum = 0.0;
    for (double w : weights) {
        if (w < -1e-8) throw InfeasibleWeights("negative mixture weight");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-8)
        throw InfeasibleWeights("weights sum to " + std::to_string(sum) +
                                ", expected 1");

    if (counts) counts->assign(components.size(), 0);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.next_double();
        std::size_t j = 0;
        double acc = weights[0];
        while (j + 1 < components.size() && u >= acc) acc += weights[++j];
        if (counts) ++(*counts)[j];
        out.push_back(sample_family(components[j], rng));
    }
    return out;
}

}  // namespace hermix
