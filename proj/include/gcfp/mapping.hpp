#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gcfp/errors.hpp"
#include "gcfp/point.hpp"
#include "gcfp/rng.hpp"
#include "gcfp/space.hpp"

namespace gcfp {

enum class MapKind { affine, shift, halving_to_anchor, named_builtin };

inline std::string to_string(MapKind k) {
    switch (k) {
        case MapKind::affine: return "affine";
        case MapKind::shift: return "shift";
        case MapKind::halving_to_anchor: return "halving-to-anchor";
        case MapKind::named_builtin: return "named-builtin";
    }
    return "?";
}

inline MapKind map_kind_from_string(const std::string& s) {
    if (s == "affine") return MapKind::affine;
    if (s == "shift") return MapKind::shift;
    if (s == "halving-to-anchor") return MapKind::halving_to_anchor;
    if (s == "named-builtin") return MapKind::named_builtin;
    throw config_error("unknown map kind: " + s);
}

// Evaluatable self-map T of the space's domain. The declared kinds are the
// whole vocabulary; named builtins exist for maps that are not affine data.
class MappingHandle {
public:
    static MappingHandle affine(Matrix a, Point v) {
        if (a.rows() != a.cols() || a.rows() != v.dim()) {
            throw config_error("affine map: matrix must be square and match the vector dimension");
        }
        MappingHandle m(MapKind::affine);
        m.matrix_ = std::move(a);
        m.vector_ = std::move(v);
        return m;
    }

    static MappingHandle shift(Point v) {
        MappingHandle m(MapKind::shift);
        m.vector_ = std::move(v);
        return m;
    }

    static MappingHandle halving_to_anchor(Point anchor) {
        MappingHandle m(MapKind::halving_to_anchor);
        m.anchor_ = std::move(anchor);
        return m;
    }

    static MappingHandle named(std::string name) {
        if (name != "identity" && name != "coordinate-swap") {
            throw config_error("unknown named-builtin map: " + name);
        }
        MappingHandle m(MapKind::named_builtin);
        m.name_ = std::move(name);
        return m;
    }

    Point operator()(const Point& x) const {
        switch (kind_) {
            case MapKind::affine: {
                std::vector<double> y = matrix_.apply(x.coords());
                for (std::size_t i = 0; i < y.size(); ++i) y[i] += vector_[i];
                return Point(std::move(y));
            }
            case MapKind::shift: {
                require_same_dim(x, vector_, "shift map");
                std::vector<double> y(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i) y[i] = x[i] + vector_[i];
                return Point(std::move(y));
            }
            case MapKind::halving_to_anchor: {
                require_same_dim(x, anchor_, "halving-to-anchor map");
                std::vector<double> y(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i) {
                    y[i] = anchor_[i] + (x[i] - anchor_[i]) / 2.0;
                }
                return Point(std::move(y));
            }
            case MapKind::named_builtin: {
                if (name_ == "identity") return x;
                // coordinate-swap
                if (x.dim() != 2) throw config_error("coordinate-swap needs dimension 2");
                return Point{x[1], x[0]};
            }
        }
        throw config_error("mapping: bad kind");
    }

    MapKind kind() const { return kind_; }
    const Matrix& matrix() const { return matrix_; }
    const Point& vector() const { return vector_; }
    const Point& anchor() const { return anchor_; }
    const std::string& name() const { return name_; }

    // affine maps with an entrywise nonnegative matrix preserve the
    // componentwise order
    bool nonnegative_affine() const { return kind_ == MapKind::affine && matrix_.nonnegative(); }

    friend bool operator==(const MappingHandle&, const MappingHandle&) = default;

private:
    explicit MappingHandle(MapKind k) : kind_(k) {}

    MapKind kind_;
    Matrix matrix_;
    Point vector_;
    Point anchor_;
    std::string name_;
};

// Construction-time invariant: T maps the domain into itself. Sampled; a
// violation is a configuration error carrying the escape witness.
template <typename Map>
void check_self_map(const ConvexSpace& space, const Map& map, std::uint64_t sample_count = 4096,
                    std::uint64_t seed = 0) {
    CounterRng rng(seed, stream::self_map);
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        Point x = space.sample(rng, i, 0);
        Point y = map(x);
        if (!space.contains(y)) {
            throw config_error("mapping does not map the domain into itself: T" + to_string(x) +
                               " = " + to_string(y) + " escapes");
        }
    }
}

} // namespace gcfp
