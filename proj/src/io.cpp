#include "bhsub/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bhsub {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw invalid_input("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace

Polygon read_polygon_json(const std::string& path) {
    const json j = load_json(path);
    try {
        const bool closed = j.at("closed").get<bool>();
        const int dim = j.at("dimension").get<int>();
        const auto& verts = j.at("vertices");
        std::vector<double> coords;
        for (const auto& v : verts) {
            if (static_cast<int>(v.size()) != dim)
                throw invalid_input("polygon vertex arity does not match dimension in '" + path + "'");
            for (const auto& x : v) coords.push_back(x.get<double>());
        }
        return Polygon(std::move(coords), dim, closed);
    } catch (const json::exception& e) {
        throw invalid_input("malformed polygon file '" + path + "': " + e.what());
    }
}

Polygon read_polygon_csv(const std::string& path, bool closed) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw invalid_input("empty CSV file '" + path + "'");
    int dim = 1;
    for (char c : line)
        if (c == ',') ++dim;
    if (dim < 1 || dim > 3) throw invalid_input("CSV header must be x[,y[,z]] in '" + path + "'");
    std::vector<double> coords;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        int got = 0;
        while (std::getline(ss, cell, ',')) {
            try {
                coords.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw invalid_input("bad number '" + cell + "' at row " + std::to_string(row) +
                                    " of '" + path + "'");
            }
            ++got;
        }
        if (got != dim)
            throw invalid_input("row " + std::to_string(row) + " of '" + path + "' has " +
                                std::to_string(got) + " fields, expected " + std::to_string(dim));
    }
    return Polygon(std::move(coords), dim, closed);
}

Polygon read_polygon(const std::string& path, std::optional<bool> closed_override) {
    const bool is_csv = path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
    Polygon poly = is_csv ? read_polygon_csv(path, closed_override.value_or(true))
                          : read_polygon_json(path);
    if (closed_override) poly.closed = *closed_override;
    return poly;
}

void write_polygon_json(const Polygon& poly, const std::string& path) {
    std::ostringstream out;
    out << "{\n  \"closed\": " << (poly.closed ? "true" : "false")
        << ",\n  \"dimension\": " << poly.dim << ",\n  \"vertices\": [\n";
    for (std::size_t j = 0; j < poly.size(); ++j) {
        auto v = poly.vertex(j);
        out << "    [";
        for (int c = 0; c < poly.dim; ++c)
            out << (c ? ", " : "") << format_double(v[static_cast<std::size_t>(c)]);
        out << (j + 1 < poly.size() ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
    atomic_write_text(path, out.str());
}

void write_polygon_csv(const Polygon& poly, const std::string& path) {
    if (poly.dim < 1 || poly.dim > 3)
        throw invalid_input("CSV polygon output supports dimensions 1..3");
    static const char* headers[] = {"x", "x,y", "x,y,z"};
    std::ostringstream out;
    out << headers[poly.dim - 1] << "\n";
    for (std::size_t j = 0; j < poly.size(); ++j) {
        auto v = poly.vertex(j);
        for (int c = 0; c < poly.dim; ++c)
            out << (c ? "," : "") << format_double(v[static_cast<std::size_t>(c)]);
        out << "\n";
    }
    atomic_write_text(path, out.str());
}

ManifoldPolygon read_manifold_polygon(const std::string& path) {
    const json j = load_json(path);
    try {
        ManifoldPolygon poly;
        const std::string geom = j.at("geometry").get<std::string>();
        if (geom == "sphere")
            poly.geometry = Geometry::sphere;
        else if (geom == "disk")
            poly.geometry = Geometry::disk;
        else
            throw invalid_input("unknown geometry '" + geom + "' in '" + path + "'");
        poly.closed = j.at("closed").get<bool>();
        for (const auto& v : j.at("vertices")) {
            if (static_cast<int>(v.size()) != poly.vdim())
                throw invalid_input("vertex arity does not match geometry in '" + path + "'");
            for (const auto& x : v) poly.coords.push_back(x.get<double>());
        }
        poly.validate();
        return poly;
    } catch (const json::exception& e) {
        throw invalid_input("malformed manifold polygon file '" + path + "': " + e.what());
    }
}

void write_manifold_polygon(const ManifoldPolygon& poly, const std::string& path) {
    std::ostringstream out;
    out << "{\n  \"geometry\": \""
        << (poly.geometry == Geometry::sphere ? "sphere" : "disk")
        << "\",\n  \"closed\": " << (poly.closed ? "true" : "false") << ",\n  \"vertices\": [\n";
    for (std::size_t j = 0; j < poly.size(); ++j) {
        auto v = poly.vertex(j);
        out << "    [";
        for (int c = 0; c < poly.vdim(); ++c)
            out << (c ? ", " : "") << format_double(v[static_cast<std::size_t>(c)]);
        out << (j + 1 < poly.size() ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
    atomic_write_text(path, out.str());
}

void atomic_write_text(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw invalid_input("cannot write '" + tmp.string() + "'");
        out << contents;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw invalid_input("cannot rename '" + tmp.string() + "' to '" + path + "'");
}

} // namespace bhsub
