#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "gcfp/errors.hpp"

namespace gcfp {

// Condition variants:
//   gregus           d(Tx,Ty) <= a d(x,y) + p d(Tx,x) + p d(Ty,y),  a + 2p = 1
//   ciric-cg         GC inequality with 0 <= c <= (4-a)/(8-a)
//   drm              GC inequality with 0 <= c < 1/2
//   graph-gc         GC inequality on edges, a + b = 1, c <= 1/2
//   graph-gc-strict  graph-gc with c < 1/2 (the solvable regime)
//   raw              unvalidated (a,b,c); evaluation only, no guarantees
enum class ConditionVariant { gregus, ciric_cg, drm, graph_gc, graph_gc_strict, raw };

inline std::string to_string(ConditionVariant v) {
    switch (v) {
        case ConditionVariant::gregus: return "gregus";
        case ConditionVariant::ciric_cg: return "ciric-cg";
        case ConditionVariant::drm: return "drm";
        case ConditionVariant::graph_gc: return "graph-gc";
        case ConditionVariant::graph_gc_strict: return "graph-gc-strict";
        case ConditionVariant::raw: return "raw";
    }
    return "?";
}

inline ConditionVariant variant_from_string(const std::string& s) {
    if (s == "gregus") return ConditionVariant::gregus;
    if (s == "ciric-cg") return ConditionVariant::ciric_cg;
    if (s == "drm") return ConditionVariant::drm;
    if (s == "graph-gc") return ConditionVariant::graph_gc;
    if (s == "graph-gc-strict") return ConditionVariant::graph_gc_strict;
    if (s == "raw") return ConditionVariant::raw;
    throw config_error("unknown condition variant: " + s);
}

struct GCParams {
    ConditionVariant variant = ConditionVariant::raw;
    double a = 0.0;
    double b = 0.0; // holds p for the gregus variant
    double c = 0.0; // unused for gregus
    bool has_c = true;

    // Unvalidated parameter triple for the raw evaluation path.
    static GCParams raw(double a, double b, double c) {
        if (a < 0.0 || b < 0.0 || c < 0.0) {
            throw config_error("raw params: a, b, c must be nonnegative");
        }
        return GCParams{ConditionVariant::raw, a, b, c, true};
    }

    friend bool operator==(const GCParams&, const GCParams&) = default;
};

inline constexpr double kParamIdentityTol = 1e-12;

// Validates (a, b_or_p, c) against the chosen variant's bounds. Every violated
// bound is reported with the variant name and the bound itself.
inline GCParams validate_params(ConditionVariant variant, double a, double b_or_p,
                                std::optional<double> c = std::nullopt) {
    const std::string name = to_string(variant);
    auto fail = [&](const std::string& bound) {
        throw config_error(name + ": " + bound);
    };
    if (!std::isfinite(a) || !std::isfinite(b_or_p) || (c && !std::isfinite(*c))) {
        fail("parameters must be finite");
    }
    if (!(a > 0.0 && a < 1.0)) fail("0 < a < 1 required, got a = " + std::to_string(a));

    if (variant == ConditionVariant::gregus) {
        if (c) fail("c must be absent (the condition has no c term)");
        if (b_or_p < 0.0) fail("p >= 0 required");
        if (std::abs(a + 2.0 * b_or_p - 1.0) > kParamIdentityTol) fail("a + 2p = 1 required");
        return GCParams{variant, a, b_or_p, 0.0, false};
    }
    if (variant == ConditionVariant::raw) {
        fail("raw is not a validated variant; use GCParams::raw");
    }
    if (b_or_p < 0.0) fail("b >= 0 required");
    if (std::abs(a + b_or_p - 1.0) > kParamIdentityTol) fail("a + b = 1 required");
    if (!c) fail("c required");
    const double cv = *c;
    if (cv < 0.0) fail("c >= 0 required");
    switch (variant) {
        case ConditionVariant::ciric_cg:
            if (cv > (4.0 - a) / (8.0 - a)) fail("c <= (4-a)/(8-a) required");
            break;
        case ConditionVariant::drm:
            if (!(cv < 0.5)) fail("c < 1/2 required");
            break;
        case ConditionVariant::graph_gc:
            if (cv > 0.5) fail("c <= 1/2 required");
            break;
        case ConditionVariant::graph_gc_strict:
            if (!(cv < 0.5)) fail("c < 1/2 required");
            break;
        default:
            break;
    }
    return GCParams{variant, a, b_or_p, cv, true};
}

} // namespace gcfp
