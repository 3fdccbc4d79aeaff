#pragma once

#include <optional>
#include <string>

#include "bhsub/manifold.hpp"
#include "bhsub/polygon.hpp"

namespace bhsub {

/// "%.17g" formatting used for every floating-point value we emit.
std::string format_double(double v);

/// Polygon file formats.
///   JSON: {"closed": bool, "dimension": d, "vertices": [[x,y,...], ...]}
///   CSV:  header "x,y[,z]", one vertex per row; closedness comes from the
///         caller since CSV carries no flag.
Polygon read_polygon_json(const std::string& path);
Polygon read_polygon_csv(const std::string& path, bool closed);

/// Reads by extension (".csv" vs anything else = JSON). closed_override
/// forces the flag regardless of the file contents.
Polygon read_polygon(const std::string& path, std::optional<bool> closed_override);

void write_polygon_json(const Polygon& poly, const std::string& path);
void write_polygon_csv(const Polygon& poly, const std::string& path);

/// Manifold polygon JSON:
///   {"geometry": "sphere"|"disk", "closed": bool, "vertices": [...]}
ManifoldPolygon read_manifold_polygon(const std::string& path);
void write_manifold_polygon(const ManifoldPolygon& poly, const std::string& path);

/// Writes text to path atomically (temp file in the same directory, then
/// rename).
void atomic_write_text(const std::string& path, const std::string& contents);

} // namespace bhsub
