#include "qcap/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qcap {

namespace {

using nlohmann::json;
using Index = Eigen::Index;

json encode(const Matrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
  return out;
}

Matrix decode(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows * cols)
    throw std::invalid_argument(what + ": expected " + std::to_string(rows * cols) +
                                " [re, im] entries");
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  std::size_t k = 0;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c, ++k) {
      const auto& e = j[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw std::invalid_argument(what + ": entry " + std::to_string(k) + " is not [re, im]");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string channel_to_json(const QuantumChannel& ch, int indent) {
  json j;
  j["name"] = ch.name();
  j["in_dim"] = ch.in_dim();
  j["out_dim"] = ch.out_dim();
  j["kraus"] = json::array();
  for (const auto& k : ch.kraus()) j["kraus"].push_back(encode(k));
  return j.dump(indent);
}

QuantumChannel channel_from_json(std::string_view text) {
  const json j = parse(text);
  const auto in_dim = field<std::size_t>(j, "in_dim");
  const auto out_dim = field<std::size_t>(j, "out_dim");
  const auto& ks = j.contains("kraus") ? j["kraus"] : json();
  if (!ks.is_array()) throw std::invalid_argument("field 'kraus' must be an array");
  std::vector<Matrix> kraus;
  for (std::size_t i = 0; i < ks.size(); ++i)
    kraus.push_back(decode(ks[i], out_dim, in_dim, "kraus[" + std::to_string(i) + "]"));
  return QuantumChannel(j.value("name", std::string("channel")), in_dim, out_dim, std::move(kraus));
}

std::string pdit_to_json(const PditState& gamma, int indent) {
  json j;
  j["d"] = gamma.d();
  j["shield_labels"] = gamma.shield_layout().labels();
  j["shield_dims"] = gamma.shield_layout().dims();
  j["shield"] = encode(gamma.shield().matrix());
  j["twists"] = json::array();
  for (const auto& u : gamma.twists()) j["twists"].push_back(encode(u.matrix()));
  return j.dump(indent);
}

PditState pdit_from_json(std::string_view text) {
  const json j = parse(text);
  const auto d = field<std::size_t>(j, "d");
  const auto labels = field<std::vector<std::string>>(j, "shield_labels");
  const auto dims = field<std::vector<std::size_t>>(j, "shield_dims");
  if (labels.size() != 2 || dims.size() != 2)
    throw std::invalid_argument("shield must have two labels and two dims");
  const SystemLayout layout({{labels[0], dims[0]}, {labels[1], dims[1]}});
  const std::size_t n = layout.total_dim();
  DensityOperator shield(layout, decode(j.contains("shield") ? j["shield"] : json(), n, n, "shield"));
  const auto& ts = j.contains("twists") ? j["twists"] : json();
  if (!ts.is_array()) throw std::invalid_argument("field 'twists' must be an array");
  std::vector<UnitaryOperator> twists;
  for (std::size_t i = 0; i < ts.size(); ++i)
    twists.emplace_back(decode(ts[i], n, n, "twists[" + std::to_string(i) + "]"));
  return make_pdit(d, shield, twists);
}

}  // namespace qcap
