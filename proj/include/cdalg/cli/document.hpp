// JSON algebra documents.
//
// {
//   "format_version": 1,
//   "involution": [[...], ...],    row-major d x d
//   "labels": ["1", "i", ...],
//   "modulus": n,
//   "provenance": {...},
//   "rank": d,
//   "structure": [...],            c[(i*d + j)*d + k], length d^3
//   "unit": [...]
// }
//
// Keys are written in sorted order with two-space indentation, so saving a
// loaded document reproduces the input byte for byte.

#pragma once

#include "cdalg/algebra.hpp"
#include "cdalg/cayley_dickson.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cdalg::cli {

inline constexpr int kFormatVersion = 1;

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgebraDocument {
  FiniteAlgebra algebra;
  nlohmann::json provenance = nlohmann::json::object();
};

nlohmann::json to_json(const AlgebraDocument& doc);
/// Throws DocumentError on schema problems or if the algebra fails validation.
AlgebraDocument from_json(const nlohmann::json& j);

std::string dump(const AlgebraDocument& doc);
AlgebraDocument parse(std::string_view text);

void save(const std::filesystem::path& path, const AlgebraDocument& doc);
AlgebraDocument load(const std::filesystem::path& path);

/// {"kind": "tower", "base": n, "params": [...]}; explicit parameters are
/// stored as coordinate arrays.
nlohmann::json tower_provenance(const TowerSpec& spec);
std::optional<TowerSpec> tower_from_provenance(const nlohmann::json& provenance);

/// {"kind": "presentation", "name": "quaternion" | "octonion", "params": [n, a, b(, c)]}
nlohmann::json presentation_provenance(const std::string& name, const std::vector<Residue>& params);

}  // namespace cdalg::cli
