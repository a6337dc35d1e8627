#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordconic/constructions.hpp"
#include "ordconic/points.hpp"

namespace ordconic {

enum class FileFormat { json, csv };

/// Float-mode payload: decimal-serialized points with their recorded
/// precision.
struct FloatPointData {
    std::vector<FloatPoint2> points;
    unsigned precision_bits = 128;
    std::optional<std::vector<std::string>> labels;
};

/// A parsed point file: exact rational sets are the default; generated
/// constructions are float mode with a metadata block.
struct PointFile {
    std::variant<PointSet, FloatPointData> data;
    nlohmann::json metadata = nlohmann::json::object();

    bool is_float() const { return std::holds_alternative<FloatPointData>(data); }
    const PointSet& exact() const { return std::get<PointSet>(data); }
    const FloatPointData& floats() const { return std::get<FloatPointData>(data); }
    int size() const;
};

FileFormat format_from_path(const std::string& path);

PointFile read_point_file(std::istream& in, FileFormat fmt);
PointFile read_point_file(const std::string& path, std::optional<FileFormat> fmt = std::nullopt);

void write_point_file(std::ostream& out, const PointFile& pf, FileFormat fmt);
void write_point_file(const std::string& path, const PointFile& pf,
                      std::optional<FileFormat> fmt = std::nullopt);

/// Point file (float mode) for a generated construction, with the metadata
/// block recording kind, n, indices, chart, and precision.
PointFile construction_point_file(const CyclicConstruction& c);

std::string format_bigfloat(const BigFloat& x, unsigned precision_bits);

} // namespace ordconic
