#include "bhsub/polygon.hpp"

namespace bhsub {

Polygon Polygon::from_points(const std::vector<std::vector<double>>& pts, bool closed) {
    if (pts.empty()) throw invalid_input("polygon: no vertices");
    const int dim = static_cast<int>(pts.front().size());
    std::vector<double> coords;
    coords.reserve(pts.size() * static_cast<std::size_t>(dim));
    for (const auto& p : pts) {
        if (static_cast<int>(p.size()) != dim)
            throw invalid_input("polygon: inconsistent vertex dimensions");
        coords.insert(coords.end(), p.begin(), p.end());
    }
    return Polygon(std::move(coords), dim, closed);
}

} // namespace bhsub
