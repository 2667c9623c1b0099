#include "spinwire/serialization.hpp"

#include <json.hpp>

#include "spinwire/error.hpp"

namespace spinwire {

using nlohmann::json;

std::string chain_to_json(const ChainSpec& spec, int indent) {
  json doc;
  doc["n"] = spec.n();
  doc["model"] = std::string(to_string(spec.model()));
  doc["couplings"] = std::vector<double>(spec.couplings().begin(), spec.couplings().end());
  doc["family"] = std::string(to_string(spec.family()));
  doc["scale"] = spec.scale();
  if (spec.is_long_range()) {
    const Eigen::MatrixXd pairs = spec.coupling_matrix();
    json rows = json::array();
    for (Eigen::Index j = 0; j < pairs.rows(); ++j) {
      std::vector<double> row(static_cast<std::size_t>(pairs.cols()));
      for (Eigen::Index l = 0; l < pairs.cols(); ++l) row[static_cast<std::size_t>(l)] = pairs(j, l);
      rows.push_back(std::move(row));
    }
    doc["coupling_matrix"] = std::move(rows);
  }
  return doc.dump(indent);
}

ChainSpec chain_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const Model model = parse_model(doc.at("model").get<std::string>());
    const Family family =
        doc.contains("family") ? parse_family(doc["family"].get<std::string>()) : Family::kCustom;
    const double scale = doc.value("scale", 0.0);
    if (doc.contains("coupling_matrix")) {
      const auto rows = doc["coupling_matrix"].get<std::vector<std::vector<double>>>();
      if (rows.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::kInvalidDimension, "coupling_matrix must have n rows");
      }
      Eigen::MatrixXd pairs(n, n);
      for (int j = 0; j < n; ++j) {
        if (rows[static_cast<std::size_t>(j)].size() != static_cast<std::size_t>(n)) {
          throw Error(ErrorCode::kInvalidDimension, "coupling_matrix must be n x n");
        }
        for (int l = 0; l < n; ++l) pairs(j, l) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
      }
      return ChainSpec::long_range(std::move(pairs), family, scale);
    }
    return ChainSpec(n, doc.at("couplings").get<std::vector<double>>(), model, family, scale);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

}  // namespace spinwire
