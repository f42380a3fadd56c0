#pragma once

#include <string>

#include "json.hpp"

#include "chevalley/constants.hpp"
#include "chevalley/pairs.hpp"
#include "chevalley/quartets.hpp"
#include "chevalley/root_data.hpp"
#include "chevalley/verify.hpp"

namespace chevalley {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, md };

/// "json", "csv" or "md"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);

// Root table: index, coordinates, squared length.
Json roots_to_json(const RootSystem& system);
std::string emit_roots(const RootSystem& system, Format format);

// One row per non-simple positive root: its special pairs and the extraspecial seed.
Json pairs_to_json(const RootSystem& system, const SumDictionary& dict, const ExtraspecialAssignment& seeds);
std::string emit_pairs(const RootSystem& system, const SumDictionary& dict, const ExtraspecialAssignment& seeds,
                       Format format);

// Quartet table plus the report summary.
Json quartets_to_json(const RootSystem& system, bool with_coords);
std::string emit_quartets(const RootSystem& system, Format format, bool with_coords);

/// {diagram, rank, roots, entries: [[i, j, N], ...]} with i < j and N != 0.
Json matrix_to_json(const RootSystem& system, const ConstantMatrix& matrix);
std::string emit_constants(const RootSystem& system, const ConstantMatrix& matrix, Format format);

struct ImportedMatrix {
  RootSystem system;
  ConstantMatrix matrix;
};

/// Inverse of matrix_to_json. Throws std::invalid_argument on schema or
/// consistency errors (unknown diagram, root list mismatch, bad indices).
ImportedMatrix matrix_from_json(const Json& doc);

Json report_to_json(const RootSystem& system, const VerificationReport& report);
/// One line per check plus witness lines for failures.
std::string report_summary(const RootSystem& system, const VerificationReport& report);

} // namespace chevalley
