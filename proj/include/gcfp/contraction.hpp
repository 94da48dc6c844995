#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gcfp/errors.hpp"
#include "gcfp/graph.hpp"
#include "gcfp/mapping.hpp"
#include "gcfp/params.hpp"
#include "gcfp/point.hpp"
#include "gcfp/report.hpp"
#include "gcfp/space.hpp"

namespace gcfp {

inline constexpr std::uint64_t kMinEdgePairs = 10;

// a max{d(x,y), c [d(x,Ty) + d(y,Tx)]} + b max{d(x,Tx), d(y,Ty)}
// Unconstrained evaluation path: no parameter validation here.
template <typename Map>
double gc_rhs(const ConvexSpace& space, const Map& map, const Point& x, const Point& y, double a,
              double b, double c) {
    const Point tx = map(x);
    const Point ty = map(y);
    const double first = std::max(space.distance(x, y),
                                  c * (space.distance(x, ty) + space.distance(y, tx)));
    const double second = std::max(space.distance(x, tx), space.distance(y, ty));
    return a * first + b * second;
}

// k max{d(x,y), d(x,Ty), d(y,Tx), d(x,Tx), d(y,Ty)}  (quasi-contraction bound)
template <typename Map>
double rhs_quasi(const ConvexSpace& space, const Map& map, const Point& x, const Point& y,
                 double k) {
    if (k < 0.0) throw config_error("rhs_quasi: k must be nonnegative");
    const Point tx = map(x);
    const Point ty = map(y);
    const double m = std::max({space.distance(x, y), space.distance(x, ty),
                               space.distance(y, tx), space.distance(x, tx),
                               space.distance(y, ty)});
    return k * m;
}

// a d(x,y) + p d(Tx,x) + p d(Ty,y), valid for 0 < a < 1, p >= 0, a + 2p = 1.
template <typename Map>
double rhs_gregus(const ConvexSpace& space, const Map& map, const Point& x, const Point& y,
                  double a, double p) {
    if (!(a > 0.0 && a < 1.0)) throw config_error("rhs_gregus: 0 < a < 1 required");
    if (p < 0.0) throw config_error("rhs_gregus: p >= 0 required");
    if (std::abs(a + 2.0 * p - 1.0) > kParamIdentityTol) {
        throw config_error("rhs_gregus: a + 2p = 1 required");
    }
    const Point tx = map(x);
    const Point ty = map(y);
    return a * space.distance(x, y) + p * space.distance(tx, x) + p * space.distance(ty, y);
}

// Validated wrapper over gc_rhs; rejects variants whose right-hand side is a
// different formula.
template <typename Map>
double rhs_gc(const ConvexSpace& space, const Map& map, const Point& x, const Point& y,
              const GCParams& params) {
    switch (params.variant) {
        case ConditionVariant::ciric_cg:
        case ConditionVariant::drm:
        case ConditionVariant::graph_gc:
        case ConditionVariant::graph_gc_strict:
            return gc_rhs(space, map, x, y, params.a, params.b, params.c);
        default:
            throw config_error("rhs_gc: wrong variant " + to_string(params.variant));
    }
}

namespace detail {

template <typename Map>
double condition_rhs(const ConvexSpace& space, const Map& map, const Point& x, const Point& y,
                     const GCParams& params) {
    if (params.variant == ConditionVariant::gregus) {
        return rhs_gregus(space, map, x, y, params.a, params.b);
    }
    return gc_rhs(space, map, x, y, params.a, params.b, params.c);
}

} // namespace detail

// d(Tx,Ty) <= rhs + slack over sampled edge pairs (exhaustive over the edges
// of a finite table). Fewer than kMinEdgePairs eligible pairs is reported as
// a configuration problem: the relation is too sparse to sample.
template <typename Map>
ViolationReport verify_condition(const ConvexSpace& space, const Digraph& g, const Map& map,
                                 const GCParams& params, std::uint64_t sample_count,
                                 std::uint64_t seed) {
    ViolationReport rep;
    rep.check = "condition-" + to_string(params.variant);
    rep.seed = seed;
    auto test_pair = [&](const Point& x, const Point& y) {
        ++rep.eligible;
        const double lhs = space.distance(map(x), map(y));
        const double rhs = detail::condition_rhs(space, map, x, y, params);
        rep.record(lhs, rhs, {x, y}, "condition");
    };
    if (g.relation().kind() == RelationKind::finite_table) {
        const auto& vs = g.relation().vertices();
        const auto& adj = g.relation().adjacency();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j) {
                ++rep.samples_tested;
                if (adj[i][j]) test_pair(vs[i], vs[j]);
            }
        return rep;
    }
    const auto n = static_cast<std::uint32_t>(space.dimension());
    CounterRng rng(seed, stream::condition);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        Point x = space.sample(rng, i, 0);
        Point y = space.sample(rng, i, n);
        ++rep.samples_tested;
        if (has_edge(g, x, y)) test_pair(x, y);
    }
    if (rep.eligible < kMinEdgePairs) {
        throw config_error("verify_condition: relation too sparse (found " +
                           std::to_string(rep.eligible) + " edge pairs in " +
                           std::to_string(sample_count) + " samples)");
    }
    return rep;
}

// Edge preservation: (x,y) in E implies (Tx,Ty) in E.
template <typename Map>
ViolationReport verify_monotone(const Digraph& g, const Map& map, std::uint64_t sample_count,
                                std::uint64_t seed) {
    ViolationReport rep;
    rep.check = "monotone";
    rep.seed = seed;
    auto test_pair = [&](const Point& x, const Point& y) {
        ++rep.eligible;
        const Point tx = map(x);
        const Point ty = map(y);
        rep.record(has_edge(g, tx, ty) ? 0.0 : 1.0, 0.0, {x, y, tx, ty}, "edge-preservation");
    };
    if (g.relation().kind() == RelationKind::finite_table) {
        const auto& vs = g.relation().vertices();
        const auto& adj = g.relation().adjacency();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j) {
                ++rep.samples_tested;
                if (adj[i][j]) test_pair(vs[i], vs[j]);
            }
        return rep;
    }
    const auto& space = g.space();
    const auto n = static_cast<std::uint32_t>(space.dimension());
    CounterRng rng(seed, stream::monotone);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        Point x = space.sample(rng, i, 0);
        Point y = space.sample(rng, i, n);
        ++rep.samples_tested;
        if (has_edge(g, x, y)) test_pair(x, y);
    }
    if (rep.eligible < kMinEdgePairs) {
        throw config_error("verify_monotone: relation too sparse (found " +
                           std::to_string(rep.eligible) + " edge pairs in " +
                           std::to_string(sample_count) + " samples)");
    }
    return rep;
}

// With a + b < 1 and c <= 1/2 the GC right-hand side is dominated by the
// quasi-contraction bound with k = a + b; this checks that dominance
// pointwise on sampled pairs (no edge filter: the statement is metric only).
template <typename Map>
ViolationReport check_quasi_dominance(const ConvexSpace& space, const Map& map,
                                      const GCParams& params, std::uint64_t sample_count,
                                      std::uint64_t seed) {
    if (params.variant == ConditionVariant::gregus) {
        throw config_error("check_quasi_dominance: gregus params have no c term");
    }
    if (!(params.a + params.b < 1.0)) {
        throw config_error("check_quasi_dominance: a + b < 1 required, got a + b = " +
                           std::to_string(params.a + params.b));
    }
    if (params.c > 0.5) {
        throw config_error("check_quasi_dominance: c <= 1/2 required, got c = " +
                           std::to_string(params.c));
    }
    const auto n = static_cast<std::uint32_t>(space.dimension());
    CounterRng rng(seed, stream::dominance);
    ViolationReport rep;
    rep.check = "quasi-dominance";
    rep.seed = seed;
    const double k = params.a + params.b;
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        Point x = space.sample(rng, i, 0);
        Point y = space.sample(rng, i, n);
        ++rep.samples_tested;
        ++rep.eligible;
        const double lhs = gc_rhs(space, map, x, y, params.a, params.b, params.c);
        const double rhs = rhs_quasi(space, map, x, y, k);
        rep.record(lhs, rhs, {x, y}, "dominance");
    }
    return rep;
}

} // namespace gcfp
