#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcfp/errors.hpp"
#include "gcfp/point.hpp"
#include "gcfp/space.hpp"

namespace gcfp {

enum class RelationKind {
    componentwise_order,          // u -> v iff u_i <= v_i for all i
    fixed_first_coordinate_order, // u -> v iff u_1 == v_1 and u_2 <= v_2 (dim 2)
    finite_table,                 // explicit vertex list + adjacency matrix
    custom_affine_order           // u -> v iff M (v - u) >= 0 componentwise
};

inline std::string to_string(RelationKind k) {
    switch (k) {
        case RelationKind::componentwise_order: return "componentwise-order";
        case RelationKind::fixed_first_coordinate_order: return "fixed-first-coordinate-order";
        case RelationKind::finite_table: return "finite-table";
        case RelationKind::custom_affine_order: return "custom-affine-order";
    }
    return "?";
}

inline RelationKind relation_from_string(const std::string& s) {
    if (s == "componentwise-order") return RelationKind::componentwise_order;
    if (s == "fixed-first-coordinate-order") return RelationKind::fixed_first_coordinate_order;
    if (s == "finite-table") return RelationKind::finite_table;
    if (s == "custom-affine-order") return RelationKind::custom_affine_order;
    throw config_error("unknown relation kind: " + s);
}

// Reflexive edge predicate over the space. Continuous kinds are evaluated
// lazily; the finite table exists for exhaustive verification.
class EdgeRelation {
public:
    static EdgeRelation componentwise_order() { return EdgeRelation(RelationKind::componentwise_order); }

    static EdgeRelation fixed_first_coordinate_order() {
        return EdgeRelation(RelationKind::fixed_first_coordinate_order);
    }

    static EdgeRelation finite_table(std::vector<Point> vertices,
                                     std::vector<std::vector<std::uint8_t>> adjacency) {
        EdgeRelation r(RelationKind::finite_table);
        if (vertices.empty()) throw config_error("finite-table: vertex list is empty");
        if (adjacency.size() != vertices.size()) {
            throw config_error("finite-table: adjacency matrix is not square");
        }
        for (std::size_t i = 0; i < adjacency.size(); ++i) {
            if (adjacency[i].size() != vertices.size()) {
                throw config_error("finite-table: adjacency matrix is not square");
            }
            if (!adjacency[i][i]) {
                throw config_error("finite-table: diagonal must be all true (reflexive digraph)");
            }
        }
        r.vertices_ = std::move(vertices);
        r.adjacency_ = std::move(adjacency);
        return r;
    }

    static EdgeRelation custom_affine_order(Matrix m) {
        EdgeRelation r(RelationKind::custom_affine_order);
        if (m.rows() == 0 || m.rows() != m.cols()) {
            throw config_error("custom-affine-order: matrix must be square and nonempty");
        }
        if (!m.nonnegative()) {
            throw config_error("custom-affine-order: matrix entries must be nonnegative");
        }
        r.order_matrix_ = std::move(m);
        return r;
    }

    RelationKind kind() const { return kind_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<std::vector<std::uint8_t>>& adjacency() const { return adjacency_; }
    const Matrix& order_matrix() const { return order_matrix_; }

    friend bool operator==(const EdgeRelation&, const EdgeRelation&) = default;

private:
    explicit EdgeRelation(RelationKind k) : kind_(k) {}

    RelationKind kind_;
    std::vector<Point> vertices_;
    std::vector<std::vector<std::uint8_t>> adjacency_;
    Matrix order_matrix_;
};

class Digraph {
public:
    Digraph(ConvexSpace space, EdgeRelation relation, bool transitive_claimed = true)
        : space_(std::move(space)), relation_(std::move(relation)),
          transitive_claimed_(transitive_claimed) {
        if (relation_.kind() == RelationKind::fixed_first_coordinate_order && space_.dimension() != 2) {
            throw config_error("fixed-first-coordinate-order requires dimension 2");
        }
        if (relation_.kind() == RelationKind::custom_affine_order &&
            relation_.order_matrix().rows() != space_.dimension()) {
            throw config_error("custom-affine-order: matrix dimension does not match space");
        }
        if (relation_.kind() == RelationKind::finite_table) {
            for (const auto& v : relation_.vertices()) {
                if (v.dim() != space_.dimension()) {
                    throw config_error("finite-table: vertex dimension does not match space");
                }
            }
            if (transitive_claimed_) enforce_table_transitive();
        }
    }

    const ConvexSpace& space() const { return space_; }
    const EdgeRelation& relation() const { return relation_; }
    bool transitive_claimed() const { return transitive_claimed_; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void enforce_table_transitive() const;

    ConvexSpace space_;
    EdgeRelation relation_;
    bool transitive_claimed_;
};

inline std::optional<std::size_t> table_index(const EdgeRelation& r, const Point& p) {
    const auto& vs = r.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] == p) return i;
    }
    return std::nullopt;
}

inline bool has_edge(const Digraph& g, const Point& p, const Point& q) {
    require_same_dim(p, q, "has_edge");
    const auto& r = g.relation();
    switch (r.kind()) {
        case RelationKind::componentwise_order: {
            for (std::size_t i = 0; i < p.dim(); ++i) {
                if (!(p[i] <= q[i])) return false;
            }
            return true;
        }
        case RelationKind::fixed_first_coordinate_order:
            return p[0] == q[0] && p[1] <= q[1];
        case RelationKind::finite_table: {
            auto i = table_index(r, p);
            auto j = table_index(r, q);
            if (!i || !j) throw config_error("finite-table: vertex not in table");
            return r.adjacency()[*i][*j] != 0;
        }
        case RelationKind::custom_affine_order: {
            std::vector<double> delta(p.dim());
            for (std::size_t i = 0; i < p.dim(); ++i) delta[i] = q[i] - p[i];
            for (double v : r.order_matrix().apply(delta)) {
                if (!(v >= 0.0)) return false;
            }
            return true;
        }
    }
    return false;
}

inline void Digraph::enforce_table_transitive() const {
    const auto& adj = relation_.adjacency();
    const std::size_t n = adj.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!adj[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (adj[j][k] && !adj[i][k]) {
                    throw config_error("digraph claimed transitive but finite table is not: (" +
                                       std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + ")");
                }
            }
        }
}

// Reflexivity over sampled vertices plus transitivity over sampled triples;
// exhaustive over the table for finite-table graphs.
inline ViolationReport check_graph_axioms(const Digraph& g, std::uint64_t sample_count,
                                          std::uint64_t seed) {
    ViolationReport rep;
    rep.check = "graph-axioms";
    rep.seed = seed;
    if (g.relation().kind() == RelationKind::finite_table) {
        const auto& vs = g.relation().vertices();
        const auto& adj = g.relation().adjacency();
        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            ++rep.samples_tested;
            ++rep.eligible;
            rep.record(adj[i][i] ? 0.0 : 1.0, 0.0, {vs[i]}, "reflexivity");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    ++rep.samples_tested;
                    if (!adj[i][j] || !adj[j][k]) continue;
                    ++rep.eligible;
                    rep.record(adj[i][k] ? 0.0 : 1.0, 0.0, {vs[i], vs[j], vs[k]}, "transitivity");
                }
        return rep;
    }
    const auto& space = g.space();
    const auto n = static_cast<std::uint32_t>(space.dimension());
    CounterRng rng(seed, stream::graph_axioms);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        Point p = space.sample(rng, i, 0);
        ++rep.samples_tested;
        ++rep.eligible;
        rep.record(has_edge(g, p, p) ? 0.0 : 1.0, 0.0, {p}, "reflexivity");

        Point x = space.sample(rng, i, n);
        Point y = space.sample(rng, i, 2 * n);
        Point z = space.sample(rng, i, 3 * n);
        ++rep.samples_tested;
        if (has_edge(g, x, y) && has_edge(g, y, z)) {
            ++rep.eligible;
            rep.record(has_edge(g, x, z) ? 0.0 : 1.0, 0.0, {x, y, z}, "transitivity");
        }
    }
    return rep;
}

namespace detail {

inline constexpr std::uint64_t kIntervalDrawCap = 64;       // rejections per draw, then skip
inline constexpr std::uint64_t kIntervalRejectionCap = 1000000; // total budget, then error

// Rejection-samples a point of [x,->) (forward) or (<-,x] (backward).
// Returns nullopt when the per-draw cap runs out.
inline std::optional<Point> sample_in_interval(const Digraph& g, const CounterRng& rng,
                                               const Point& x, bool forward, std::uint64_t draw_id,
                                               std::uint64_t& rejections) {
    const auto& space = g.space();
    const auto n = static_cast<std::uint32_t>(space.dimension());
    for (std::uint64_t attempt = 0; attempt < kIntervalDrawCap; ++attempt) {
        Point y = space.sample(rng, draw_id * kIntervalDrawCap + attempt, n);
        const bool ok = forward ? has_edge(g, x, y) : has_edge(g, y, x);
        if (ok) return y;
        ++rejections;
    }
    return std::nullopt;
}

} // namespace detail

// G-interval convexity: y1, y2 in [x,->) implies every combine(y1,y2,beta)
// stays in [x,->); mirrored for (<-,x]. Draws that exhaust the per-draw
// rejection cap skip the sample; exceeding the total budget of 1e6 rejections
// (or sampling nothing at all) reports the interval as too thin to sample.
inline ViolationReport check_interval_convexity(const Digraph& g, std::uint64_t sample_count,
                                                std::uint64_t seed) {
    if (g.relation().kind() == RelationKind::finite_table) {
        throw config_error("check_interval_convexity: convexity undefined for finite tables");
    }
    const auto& space = g.space();
    const auto n = static_cast<std::uint32_t>(space.dimension());
    CounterRng rng(seed, stream::interval_convexity);
    ViolationReport rep;
    rep.check = "interval-convexity";
    rep.seed = seed;
    std::uint64_t rejections = 0;
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        if (rejections > detail::kIntervalRejectionCap) {
            throw config_error("check_interval_convexity: interval too thin to sample (cap of "
                               "1000000 rejections exceeded)");
        }
        Point x = space.sample(rng, i, 0);
        const double beta = rng.unit(i, 2 * n);
        for (bool forward : {true, false}) {
            const std::uint64_t draw_base = 4 * i + (forward ? 0 : 2);
            ++rep.samples_tested;
            auto y1 = detail::sample_in_interval(g, rng, x, forward, draw_base, rejections);
            if (!y1) continue;
            auto y2 = detail::sample_in_interval(g, rng, x, forward, draw_base + 1, rejections);
            if (!y2) continue;
            ++rep.eligible;
            const Point m = space.combine(*y1, *y2, beta);
            const bool ok = forward ? has_edge(g, x, m) : has_edge(g, m, x);
            rep.record(ok ? 0.0 : 1.0, 0.0, {x, *y1, *y2},
                       forward ? "forward-interval" : "backward-interval");
        }
    }
    if (rep.eligible == 0) {
        throw config_error("check_interval_convexity: interval too thin to sample (no admissible "
                           "pairs found)");
    }
    return rep;
}

struct PropertyStarReport {
    std::string direction;  // "increasing" or "decreasing"
    bool holds_for_all = false;
    std::vector<std::size_t> edge_indices; // indices with an edge to the limit
    std::size_t checked = 0;
    double limit_distance = 0.0;
};

// For a convergent G-monotone sequence, every element should carry an edge to
// the limit (the transitive-graph strengthening of the subsequence property).
inline PropertyStarReport check_property_star(const Digraph& g, const std::vector<Point>& seq,
                                              const Point& limit, double tolerance = 1e-6) {
    if (seq.empty()) throw config_error("check_property_star: empty sequence");
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!has_edge(g, seq[i], seq[i + 1])) increasing = false;
        if (!has_edge(g, seq[i + 1], seq[i])) decreasing = false;
    }
    if (!increasing && !decreasing) {
        throw config_error("check_property_star: sequence is not G-monotone");
    }
    PropertyStarReport rep;
    rep.direction = increasing ? "increasing" : "decreasing";
    rep.limit_distance = g.space().distance(seq.back(), limit);
    if (rep.limit_distance > tolerance) {
        throw config_error("check_property_star: sequence is not within tolerance of the limit (d = " +
                           std::to_string(rep.limit_distance) + ")");
    }
    rep.holds_for_all = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        ++rep.checked;
        const bool ok = increasing ? has_edge(g, seq[i], limit) : has_edge(g, limit, seq[i]);
        if (ok) {
            rep.edge_indices.push_back(i);
        } else {
            rep.holds_for_all = false;
        }
    }
    return rep;
}

struct SequenceCertificate {
    std::vector<Point> terms;
    std::string direction; // "increasing", "decreasing" or "none"
    bool g_monotone = false;
    bool cauchy = false;
    std::vector<double> tail_diameters; // diam of {x_j, ..., x_N} for each j
    Point limit;
    bool limit_in_domain = false;
};

struct GCompleteDemoReport {
    SequenceCertificate monotone;  // stays in the strip; limit inside
    SequenceCertificate escaping;  // Cauchy, not G-monotone; limit escapes
    bool g_complete_evidence = false;
    bool incompleteness_evidence = false;
};

namespace detail {

inline SequenceCertificate certify_sequence(const Digraph& g, std::vector<Point> terms,
                                            Point limit) {
    SequenceCertificate cert;
    cert.terms = std::move(terms);
    cert.limit = std::move(limit);
    const auto& space = g.space();
    bool inc = true;
    bool dec = true;
    for (std::size_t i = 0; i + 1 < cert.terms.size(); ++i) {
        if (!has_edge(g, cert.terms[i], cert.terms[i + 1])) inc = false;
        if (!has_edge(g, cert.terms[i + 1], cert.terms[i])) dec = false;
    }
    cert.g_monotone = inc || dec;
    cert.direction = inc ? "increasing" : (dec ? "decreasing" : "none");
    const std::size_t n = cert.terms.size();
    cert.tail_diameters.resize(n > 1 ? n - 1 : 0, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        double diam = 0.0;
        for (std::size_t a = j; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                diam = std::max(diam, space.distance(cert.terms[a], cert.terms[b]));
        cert.tail_diameters[j] = diam;
    }
    bool nonincreasing = true;
    for (std::size_t j = 0; j + 1 < cert.tail_diameters.size(); ++j) {
        if (cert.tail_diameters[j + 1] > cert.tail_diameters[j] + 1e-15) nonincreasing = false;
    }
    const double final_diam = cert.tail_diameters.empty() ? 0.0 : cert.tail_diameters.back();
    cert.cauchy = nonincreasing && final_diam <= 4.0 / static_cast<double>(n);
    cert.limit_in_domain = space.contains(cert.limit);
    return cert;
}

} // namespace detail

// The half-open strip X = [0,1) x [0,1] with the "same first coordinate and
// second coordinate grows" relation: not complete as a metric space, yet every
// Cauchy G-monotone sequence converges inside it.
inline ConvexSpace strip_space() {
    Box box;
    box.lower = {{0.0, false}, {0.0, false}};
    box.upper = {{1.0, true}, {1.0, false}};
    return ConvexSpace(2, MetricKind::euclidean, box);
}

inline Digraph strip_digraph() {
    return Digraph(strip_space(), EdgeRelation::fixed_first_coordinate_order(), true);
}

inline GCompleteDemoReport demo_g_complete_strip(std::size_t n_terms) {
    if (n_terms < 2) throw config_error("demo_g_complete_strip: n_terms must be >= 2");
    Digraph g = strip_digraph();
    std::vector<Point> monotone_terms;
    std::vector<Point> escaping_terms;
    for (std::size_t k = 1; k <= n_terms; ++k) {
        const double t = 1.0 - 1.0 / static_cast<double>(k);
        monotone_terms.push_back(Point{0.5, t});
        escaping_terms.push_back(Point{t, 0.0});
    }
    GCompleteDemoReport rep;
    rep.monotone = detail::certify_sequence(g, std::move(monotone_terms), Point{0.5, 1.0});
    rep.escaping = detail::certify_sequence(g, std::move(escaping_terms), Point{1.0, 0.0});
    rep.g_complete_evidence =
        rep.monotone.g_monotone && rep.monotone.cauchy && rep.monotone.limit_in_domain;
    rep.incompleteness_evidence = rep.escaping.cauchy && !rep.escaping.limit_in_domain;
    return rep;
}

inline void write_json(JsonWriter& w, const SequenceCertificate& c) {
    w.begin_object();
    w.key("direction"); w.value(c.direction);
    w.key("g_monotone"); w.value(c.g_monotone);
    w.key("cauchy"); w.value(c.cauchy);
    w.key("limit"); write_json(w, c.limit);
    w.key("limit_in_domain"); w.value(c.limit_in_domain);
    w.key("tail_diameters");
    w.begin_array();
    for (double d : c.tail_diameters) w.value(d);
    w.end_array();
    w.key("terms");
    w.begin_array();
    for (const auto& p : c.terms) write_json(w, p);
    w.end_array();
    w.end_object();
}

inline void write_json(JsonWriter& w, const GCompleteDemoReport& r) {
    w.begin_object();
    w.key("monotone"); write_json(w, r.monotone);
    w.key("escaping"); write_json(w, r.escaping);
    w.key("g_complete_evidence"); w.value(r.g_complete_evidence);
    w.key("incompleteness_evidence"); w.value(r.incompleteness_evidence);
    w.end_object();
}

} // namespace gcfp
