#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gcfp/errors.hpp"
#include "gcfp/point.hpp"
#include "gcfp/report.hpp"
#include "gcfp/rng.hpp"

namespace gcfp {

enum class MetricKind { euclidean, max_norm, weighted_euclidean };

inline std::string to_string(MetricKind k) {
    switch (k) {
        case MetricKind::euclidean: return "euclidean";
        case MetricKind::max_norm: return "max-norm";
        case MetricKind::weighted_euclidean: return "weighted-euclidean";
    }
    return "?";
}

inline MetricKind metric_from_string(const std::string& s) {
    if (s == "euclidean") return MetricKind::euclidean;
    if (s == "max-norm") return MetricKind::max_norm;
    if (s == "weighted-euclidean") return MetricKind::weighted_euclidean;
    throw config_error("unknown metric kind: " + s);
}

// One side of a box constraint. value may be +-infinity (side unbounded,
// open flag ignored); open means the bound itself is excluded.
struct Bound {
    double value = 0.0;
    bool open = false;

    bool is_infinite() const { return std::isinf(value); }
    friend bool operator==(const Bound&, const Bound&) = default;
};

// Axis-aligned box, the (convex) domain of a space. Unbounded sides are
// sampled from a fixed [-50, 50] window.
struct Box {
    std::vector<Bound> lower;
    std::vector<Bound> upper;

    std::size_t dim() const { return lower.size(); }

    bool contains(const Point& p) const {
        if (p.dim() != dim()) return false;
        for (std::size_t i = 0; i < dim(); ++i) {
            const auto& lo = lower[i];
            const auto& hi = upper[i];
            if (!lo.is_infinite() && (lo.open ? !(p[i] > lo.value) : !(p[i] >= lo.value))) return false;
            if (!hi.is_infinite() && (hi.open ? !(p[i] < hi.value) : !(p[i] <= hi.value))) return false;
        }
        return true;
    }

    // Finite window used for uniform sampling.
    std::pair<double, double> sample_window(std::size_t i) const {
        constexpr double kWindow = 50.0;
        double lo = lower[i].is_infinite() ? -kWindow : lower[i].value;
        double hi = upper[i].is_infinite() ? kWindow : upper[i].value;
        return {lo, hi};
    }

    friend bool operator==(const Box&, const Box&) = default;
};

// R^n with a norm-induced metric and linear geodesics. combine() gives the
// unique point z of the segment [p,q] with d(p,z) = (1-beta) d(p,q); the beta
// weight belongs to the FIRST argument.
class ConvexSpace {
public:
    ConvexSpace(std::size_t dimension, MetricKind metric, Box domain,
                std::vector<double> weights = {})
        : dimension_(dimension), metric_(metric), domain_(std::move(domain)),
          weights_(std::move(weights)) {
        if (dimension_ == 0) throw config_error("space: dimension must be >= 1");
        if (domain_.lower.size() != dimension_ || domain_.upper.size() != dimension_) {
            throw config_error("space: box bounds do not match dimension");
        }
        if (metric_ == MetricKind::weighted_euclidean) {
            if (weights_.size() != dimension_) {
                throw config_error("space: weighted-euclidean needs one weight per coordinate");
            }
            for (double w : weights_) {
                if (!(w > 0.0) || !std::isfinite(w)) {
                    throw config_error("space: weighted-euclidean weights must be strictly positive");
                }
            }
        } else if (!weights_.empty()) {
            throw config_error("space: weights only apply to weighted-euclidean");
        }
        for (std::size_t i = 0; i < dimension_; ++i) {
            const auto& lo = domain_.lower[i];
            const auto& hi = domain_.upper[i];
            if (lo.is_infinite() || hi.is_infinite()) continue;
            if (lo.value > hi.value || (lo.value == hi.value && (lo.open || hi.open))) {
                throw config_error("space: empty domain in coordinate " + std::to_string(i));
            }
        }
    }

    std::size_t dimension() const { return dimension_; }
    MetricKind metric() const { return metric_; }
    const Box& domain() const { return domain_; }
    const std::vector<double>& weights() const { return weights_; }

    bool contains(const Point& p) const { return domain_.contains(p); }

    double distance(const Point& p, const Point& q) const {
        require_same_dim(p, q, "distance");
        if (p.dim() != dimension_) throw config_error("distance: point dimension does not match space");
        switch (metric_) {
            case MetricKind::euclidean: {
                double acc = 0.0;
                for (std::size_t i = 0; i < dimension_; ++i) {
                    const double d = p[i] - q[i];
                    acc += d * d;
                }
                return std::sqrt(acc);
            }
            case MetricKind::max_norm: {
                double m = 0.0;
                for (std::size_t i = 0; i < dimension_; ++i) {
                    m = std::max(m, std::abs(p[i] - q[i]));
                }
                return m;
            }
            case MetricKind::weighted_euclidean: {
                double acc = 0.0;
                for (std::size_t i = 0; i < dimension_; ++i) {
                    const double d = p[i] - q[i];
                    acc += weights_[i] * d * d;
                }
                return std::sqrt(acc);
            }
        }
        return 0.0;
    }

    // z = beta*p + (1-beta)*q, so that d(p,z) = (1-beta) d(p,q) and
    // d(z,q) = beta d(p,q). combine(p,q,1) == p and combine(p,q,0) == q exactly.
    Point combine(const Point& p, const Point& q, double beta) const {
        require_same_dim(p, q, "combine");
        if (!(beta >= 0.0 && beta <= 1.0)) {
            throw config_error("combine: beta must lie in [0,1], got " + std::to_string(beta));
        }
        if (beta == 1.0) return p;
        if (beta == 0.0) return q;
        std::vector<double> z(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            z[i] = beta * p[i] + (1.0 - beta) * q[i];
        }
        return Point(std::move(z));
    }

    // Uniform draw from the (windowed) domain box; pure in (rng, index, slot).
    Point sample(const CounterRng& rng, std::uint64_t index, std::uint32_t slot_base) const {
        std::vector<double> c(dimension_);
        for (std::size_t i = 0; i < dimension_; ++i) {
            auto [lo, hi] = domain_.sample_window(i);
            double x = rng.in_range(lo, hi, index, slot_base + static_cast<std::uint32_t>(i));
            // open sides exclude the bound itself; nudge the measure-zero hits
            if ((domain_.lower[i].open && x == lo) || (domain_.upper[i].open && x == hi)) {
                x = 0.5 * (lo + hi);
            }
            c[i] = x;
        }
        return Point(std::move(c));
    }

    friend bool operator==(const ConvexSpace&, const ConvexSpace&) = default;

private:
    std::size_t dimension_;
    MetricKind metric_;
    Box domain_;
    std::vector<double> weights_;
};

inline Box closed_box(const std::vector<double>& lo, const std::vector<double>& hi) {
    Box b;
    for (double v : lo) b.lower.push_back({v, false});
    for (double v : hi) b.upper.push_back({v, false});
    return b;
}

inline Box unbounded_box(std::size_t dim) {
    const double inf = std::numeric_limits<double>::infinity();
    Box b;
    b.lower.assign(dim, Bound{-inf, false});
    b.upper.assign(dim, Bound{inf, false});
    return b;
}

// d(beta*x (+) (1-beta)*y, z) <= beta d(x,z) + (1-beta) d(y,z) over sampled
// (x, y, z, beta).
inline ViolationReport check_takahashi(const ConvexSpace& space, std::uint64_t sample_count,
                                       std::uint64_t seed) {
    if (sample_count < 1) throw config_error("check_takahashi: sample_count must be >= 1");
    const auto n = static_cast<std::uint32_t>(space.dimension());
    CounterRng rng(seed, stream::takahashi);
    ViolationReport rep;
    rep.check = "takahashi";
    rep.seed = seed;
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        Point x = space.sample(rng, i, 0);
        Point y = space.sample(rng, i, n);
        Point z = space.sample(rng, i, 2 * n);
        const double beta = rng.unit(i, 3 * n);
        const Point m = space.combine(x, y, beta);
        const double lhs = space.distance(m, z);
        const double rhs = beta * space.distance(x, z) + (1.0 - beta) * space.distance(y, z);
        ++rep.samples_tested;
        ++rep.eligible;
        rep.record(lhs, rhs, {x, y, z}, "takahashi");
    }
    return rep;
}

// |d(p, combine(p,q,beta)) - (1-beta) d(p,q)| <= slack, and the mirrored
// identity for the q side.
inline ViolationReport check_segment_identity(const ConvexSpace& space, std::uint64_t sample_count,
                                              std::uint64_t seed) {
    if (sample_count < 1) throw config_error("check_segment_identity: sample_count must be >= 1");
    const auto n = static_cast<std::uint32_t>(space.dimension());
    CounterRng rng(seed, stream::segment);
    ViolationReport rep;
    rep.check = "segment-identity";
    rep.seed = seed;
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        Point p = space.sample(rng, i, 0);
        Point q = space.sample(rng, i, n);
        const double beta = rng.unit(i, 2 * n);
        const Point z = space.combine(p, q, beta);
        const double d = space.distance(p, q);
        ++rep.samples_tested;
        ++rep.eligible;
        // normalized error, so the 1e-12 slack is relative to (1 + d(p,q))
        rep.record(std::abs(space.distance(p, z) - (1.0 - beta) * d) / (1.0 + d), 0.0,
                   {p, q}, "segment-first");
        rep.record(std::abs(space.distance(z, q) - beta * d) / (1.0 + d), 0.0,
                   {p, q}, "segment-second");
    }
    return rep;
}

} // namespace gcfp
