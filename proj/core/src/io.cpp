#include "ordconic/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ordconic/errors.hpp"

namespace ordconic {

using nlohmann::json;

int PointFile::size() const {
    return is_float() ? static_cast<int>(floats().points.size()) : exact().size();
}

FileFormat format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "csv") return FileFormat::csv;
    return FileFormat::json;
}

std::string format_bigfloat(const BigFloat& x, unsigned precision_bits) {
    unsigned digits = static_cast<unsigned>(std::ceil(precision_bits * 0.30103)) + 4;
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

namespace {

bool looks_float(const std::string& s) {
    return s.find_first_of(".eE") != std::string::npos && s.find('/') == std::string::npos;
}

PointFile from_parsed(std::vector<std::string> xs, std::vector<std::string> ys,
                      std::optional<std::vector<std::string>> labels, json metadata) {
    bool float_mode = metadata.contains("mode") && metadata["mode"] == "float";
    if (!float_mode)
        for (const auto& s : xs)
            if (looks_float(s)) {
                float_mode = true;
                break;
            }
    PointFile pf;
    pf.metadata = std::move(metadata);
    if (float_mode) {
        FloatPointData fd;
        fd.precision_bits = pf.metadata.value("precision_bits", 128u);
        PrecisionGuard guard(fd.precision_bits + 16);
        for (size_t i = 0; i < xs.size(); ++i) {
            try {
                fd.points.push_back(FloatPoint2{BigFloat(xs[i]), BigFloat(ys[i])});
            } catch (const std::exception&) {
                throw ParseError("point " + std::to_string(i + 1) + ": bad float coordinate");
            }
        }
        fd.labels = std::move(labels);
        pf.data = std::move(fd);
    } else {
        std::vector<Point2> pts;
        for (size_t i = 0; i < xs.size(); ++i) {
            try {
                pts.push_back(Point2{parse_rational(xs[i]), parse_rational(ys[i])});
            } catch (const ParseError& e) {
                throw ParseError("point " + std::to_string(i + 1) + ": " + e.what());
            }
        }
        try {
            pf.data = PointSet(std::move(pts), std::move(labels));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    return pf;
}

PointFile read_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw ParseError("expected an object with a \"points\" array");
    std::vector<std::string> xs, ys;
    std::vector<std::string> labels;
    bool any_label = false;
    for (size_t i = 0; i < doc["points"].size(); ++i) {
        const json& p = doc["points"][i];
        if (!p.is_object() || !p.contains("x") || !p.contains("y"))
            throw ParseError("point " + std::to_string(i + 1) + ": expected {\"x\", \"y\"}");
        auto coord = [&](const json& v) -> std::string {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_number_integer()) return std::to_string(v.get<long long>());
            throw ParseError("point " + std::to_string(i + 1) +
                             ": coordinates must be \"p/q\" strings (or decimal strings in float mode)");
        };
        xs.push_back(coord(p["x"]));
        ys.push_back(coord(p["y"]));
        if (p.contains("label")) {
            any_label = true;
            labels.push_back(p["label"].get<std::string>());
        } else {
            labels.emplace_back();
        }
    }
    json metadata = doc.value("metadata", json::object());
    return from_parsed(std::move(xs), std::move(ys),
                       any_label ? std::optional(std::move(labels)) : std::nullopt, std::move(metadata));
}

PointFile read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("line 1: missing CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y") throw ParseError("line 1: CSV header must be exactly \"x,y\"");
    std::vector<std::string> xs, ys;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected exactly two columns");
        xs.push_back(line.substr(0, comma));
        ys.push_back(line.substr(comma + 1));
    }
    try {
        return from_parsed(std::move(xs), std::move(ys), std::nullopt, json::object());
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " (CSV body)");
    }
}

} // namespace

PointFile read_point_file(std::istream& in, FileFormat fmt) {
    return fmt == FileFormat::json ? read_json(in) : read_csv(in);
}

PointFile read_point_file(const std::string& path, std::optional<FileFormat> fmt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_point_file(in, fmt.value_or(format_from_path(path)));
}

void write_point_file(std::ostream& out, const PointFile& pf, FileFormat fmt) {
    const auto* labels = pf.is_float() ? (pf.floats().labels ? &*pf.floats().labels : nullptr)
                                       : (pf.exact().labels() ? &*pf.exact().labels() : nullptr);
    std::vector<std::string> xs, ys;
    if (pf.is_float()) {
        for (const auto& p : pf.floats().points) {
            xs.push_back(format_bigfloat(p.x, pf.floats().precision_bits));
            ys.push_back(format_bigfloat(p.y, pf.floats().precision_bits));
        }
    } else {
        for (const auto& p : pf.exact().points()) {
            xs.push_back(format_rational(p.x));
            ys.push_back(format_rational(p.y));
        }
    }
    if (fmt == FileFormat::csv) {
        out << "x,y\n";
        for (size_t i = 0; i < xs.size(); ++i) out << xs[i] << ',' << ys[i] << '\n';
        return;
    }
    json doc;
    json pts = json::array();
    for (size_t i = 0; i < xs.size(); ++i) {
        json p{{"x", xs[i]}, {"y", ys[i]}};
        if (labels && !(*labels)[i].empty()) p["label"] = (*labels)[i];
        pts.push_back(std::move(p));
    }
    doc["points"] = std::move(pts);
    if (!pf.metadata.empty()) doc["metadata"] = pf.metadata;
    out << doc.dump(2) << '\n';
}

void write_point_file(const std::string& path, const PointFile& pf, std::optional<FileFormat> fmt) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_point_file(out, pf, fmt.value_or(format_from_path(path)));
}

PointFile construction_point_file(const CyclicConstruction& c) {
    PointFile pf;
    FloatPointData fd;
    fd.points = c.points;
    fd.precision_bits = c.precision_bits;
    std::vector<std::string> labels;
    json indices = json::array();
    for (const auto& gi : c.indices) {
        labels.push_back(std::string(to_string(gi.component)) + ":" + std::to_string(gi.index));
        indices.push_back(json{{"component", to_string(gi.component)}, {"index", gi.index}});
    }
    fd.labels = std::move(labels);
    pf.data = std::move(fd);

    json chart = json::array();
    for (const auto& row : c.chart) {
        json r = json::array();
        for (const auto& v : row) r.push_back(format_rational(v));
        chart.push_back(std::move(r));
    }
    pf.metadata = json{{"mode", "float"},
                       {"kind", to_string(c.kind)},
                       {"n", c.n},
                       {"indices", std::move(indices)},
                       {"chart", std::move(chart)},
                       {"precision_bits", c.precision_bits}};
    return pf;
}

} // namespace ordconic
