#include "cdalg/cli/document.hpp"

#include <fstream>
#include <sstream>

namespace cdalg::cli {

using nlohmann::json;

json to_json(const AlgebraDocument& doc) {
  const FiniteAlgebra& a = doc.algebra;
  const Eigen::Index d = a.rank();
  json inv = json::array();
  for (Eigen::Index i = 0; i < d; ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < d; ++j) row.push_back(a.involution()(i, j));
    inv.push_back(std::move(row));
  }
  json unit = json::array();
  for (Eigen::Index i = 0; i < d; ++i) unit.push_back(a.unit()[i]);
  return json{{"format_version", kFormatVersion},
              {"modulus", a.modulus()},
              {"rank", d},
              {"labels", a.labels()},
              {"structure", a.tables().structure},
              {"unit", std::move(unit)},
              {"involution", std::move(inv)},
              {"provenance", doc.provenance}};
}

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DocumentError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

AlgebraDocument from_json(const json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  const int version = field<int>(j, "format_version");
  if (version != kFormatVersion) throw DocumentError("unsupported format_version " + std::to_string(version));

  AlgebraTables t;
  t.modulus = field<Residue>(j, "modulus");
  t.rank = field<Eigen::Index>(j, "rank");
  if (t.rank < 1 || t.rank > 1024) throw DocumentError("rank out of range");
  t.labels = field<std::vector<std::string>>(j, "labels");
  t.structure = field<std::vector<Residue>>(j, "structure");
  const auto unit = field<std::vector<Residue>>(j, "unit");
  t.unit = Eigen::Map<const Vector>(unit.data(), static_cast<Eigen::Index>(unit.size()));
  const auto inv = field<std::vector<std::vector<Residue>>>(j, "involution");
  t.involution = Matrix::Zero(static_cast<Eigen::Index>(inv.size()), inv.empty() ? 0 : static_cast<Eigen::Index>(inv[0].size()));
  for (std::size_t r = 0; r < inv.size(); ++r) {
    if (inv[r].size() != inv[0].size()) throw DocumentError("involution rows have unequal length");
    for (std::size_t c = 0; c < inv[r].size(); ++c) t.involution(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = inv[r][c];
  }
  json provenance = j.contains("provenance") ? j.at("provenance") : json::object();
  try {
    return {FiniteAlgebra(std::move(t)), std::move(provenance)};
  } catch (const InvalidAlgebra& e) {
    throw DocumentError(e.what());
  }
}

std::string dump(const AlgebraDocument& doc) { return to_json(doc).dump(2) + "\n"; }

AlgebraDocument parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

void save(const std::filesystem::path& path, const AlgebraDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path.string());
  out << dump(doc);
}

AlgebraDocument load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

json tower_provenance(const TowerSpec& spec) {
  json params = json::array();
  for (const auto& p : spec.params) {
    if (const auto* c = std::get_if<Residue>(&p)) {
      params.push_back(*c);
    } else {
      const Vector& v = std::get<Vector>(p);
      params.push_back(std::vector<Residue>(v.data(), v.data() + v.size()));
    }
  }
  return json{{"kind", "tower"}, {"base", spec.base_modulus}, {"params", std::move(params)}};
}

std::optional<TowerSpec> tower_from_provenance(const json& provenance) {
  if (!provenance.is_object() || provenance.value("kind", "") != "tower") return std::nullopt;
  try {
    TowerSpec spec;
    spec.base_modulus = provenance.at("base").get<Residue>();
    for (const auto& p : provenance.at("params")) {
      if (p.is_number_integer()) {
        spec.params.emplace_back(p.get<Residue>());
      } else {
        const auto v = p.get<std::vector<Residue>>();
        spec.params.emplace_back(Vector(Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()))));
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed tower provenance: ") + e.what());
  }
}

json presentation_provenance(const std::string& name, const std::vector<Residue>& params) {
  return json{{"kind", "presentation"}, {"name", name}, {"params", params}};
}

}  // namespace cdalg::cli
