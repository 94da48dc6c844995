#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gcfp/errors.hpp"

namespace gcfp {

// A point of R^n. Coordinates are finite by construction.
class Point {
public:
    Point() = default;

    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
        for (double v : coords_) {
            if (!std::isfinite(v)) {
                throw config_error("point has a non-finite coordinate");
            }
        }
    }

    Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

    static Point zeros(std::size_t n) { return Point(std::vector<double>(n, 0.0)); }

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

inline std::string to_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) s += ", ";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

inline void require_same_dim(const Point& p, const Point& q, const char* where) {
    if (p.dim() != q.dim()) {
        throw config_error(std::string(where) + ": dimension mismatch (" +
                           std::to_string(p.dim()) + " vs " + std::to_string(q.dim()) + ")");
    }
}

// Small dense row-major matrix; enough for affine maps and affine order cones.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
        : rows_(rows), cols_(cols), a_(std::move(row_major)) {
        if (a_.size() != rows_ * cols_) {
            throw config_error("matrix: entry count does not match rows*cols");
        }
        for (double v : a_) {
            if (!std::isfinite(v)) throw config_error("matrix has a non-finite entry");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<double>& entries() const { return a_; }

    std::vector<double> apply(const std::vector<double>& x) const {
        if (x.size() != cols_) throw config_error("matrix: vector dimension mismatch");
        std::vector<double> y(rows_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

    bool nonnegative() const {
        for (double v : a_) {
            if (v < 0.0) return false;
        }
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

} // namespace gcfp
