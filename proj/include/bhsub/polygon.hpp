#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bhsub/errors.hpp"

namespace bhsub {

/// Ordered vertex list in d-dimensional Euclidean coordinates, stored
/// row-major, plus the open/closed flag.
struct Polygon {
    std::vector<double> coords;
    int dim = 2;
    bool closed = true;

    Polygon() = default;
    Polygon(std::vector<double> data, int dimension, bool is_closed)
        : coords(std::move(data)), dim(dimension), closed(is_closed) {
        if (dim < 1) throw invalid_input("polygon: dimension must be >= 1");
        if (coords.size() % static_cast<std::size_t>(dim) != 0)
            throw invalid_input("polygon: coordinate count not divisible by dimension");
    }

    std::size_t size() const { return coords.size() / static_cast<std::size_t>(dim); }

    std::span<const double> vertex(std::size_t j) const {
        return {coords.data() + j * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
    std::span<double> vertex(std::size_t j) {
        return {coords.data() + j * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }

    static Polygon from_points(const std::vector<std::vector<double>>& pts, bool closed);
};

} // namespace bhsub
