#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gcfp/json_writer.hpp"
#include "gcfp/point.hpp"

namespace gcfp {

inline constexpr std::size_t kMaxStoredViolations = 100;

// Relative slack used by every sampled inequality check: an inequality
// lhs <= rhs is only counted as violated when lhs > rhs + slack(rhs).
inline double slack_for(double scale) { return 1e-12 * (1.0 + std::abs(scale)); }

struct Violation {
    std::vector<Point> witness;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // lhs - rhs
    std::string label;
};

// Outcome of a sampled (or exhaustive) verification pass.
//
// samples_tested  draws taken from the sampling stream
// eligible        draws that satisfied the check's premise (e.g. were an edge)
// worst_margin    max of lhs - rhs over eligible draws; negative when all pass
struct ViolationReport {
    std::string check;
    std::uint64_t seed = 0;
    std::uint64_t samples_tested = 0;
    std::uint64_t eligible = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations; // first kMaxStoredViolations only
    double worst_margin = -std::numeric_limits<double>::infinity();

    bool passed() const { return violation_count == 0; }

    void record(double lhs, double rhs, std::vector<Point> witness, std::string label = {}) {
        const double margin = lhs - rhs;
        if (margin > worst_margin) worst_margin = margin;
        if (lhs > rhs + slack_for(rhs)) {
            ++violation_count;
            if (violations.size() < kMaxStoredViolations) {
                violations.push_back({std::move(witness), lhs, rhs, margin, std::move(label)});
            }
        }
    }
};

inline void write_json(JsonWriter& w, const Point& p) {
    w.begin_array();
    for (std::size_t i = 0; i < p.dim(); ++i) w.value(p[i]);
    w.end_array();
}

inline void write_json(JsonWriter& w, const ViolationReport& r) {
    w.begin_object();
    w.key("check"); w.value(r.check);
    w.key("seed"); w.value(r.seed);
    w.key("samples_tested"); w.value(r.samples_tested);
    w.key("eligible"); w.value(r.eligible);
    w.key("violation_count"); w.value(r.violation_count);
    w.key("worst_margin"); w.value(r.worst_margin);
    w.key("violations");
    w.begin_array();
    for (const auto& v : r.violations) {
        w.begin_object();
        w.key("witness");
        w.begin_array();
        for (const auto& p : v.witness) write_json(w, p);
        w.end_array();
        w.key("lhs"); w.value(v.lhs);
        w.key("rhs"); w.value(v.rhs);
        w.key("margin"); w.value(v.margin);
        w.key("label"); w.value(v.label);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

} // namespace gcfp
