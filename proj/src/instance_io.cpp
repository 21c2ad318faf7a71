#include "tetracenters/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace tc {

namespace {

std::array<Rational, 3> triple(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
    throw Error(ErrorCode::InvalidInstance, std::string("field '") + key + "' must be an array of 3 rationals");
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    const auto& v = j[key][i];
    try {
      if (v.is_string())
        out[i] = Rational::parse(v.get<std::string>());
      else if (v.is_number_integer())
        out[i] = Rational(v.get<long>());
      else
        throw Error(ErrorCode::InvalidInstance, "not a rational");
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidInstance, std::string("bad rational in '") + key + "'");
    }
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const EdgeLengths& e) {
  nlohmann::json j;
  for (int i = 0; i < 3; ++i) {
    j["a"].push_back(e.a[i].str());
    j["b"].push_back(e.b[i].str());
  }
  return j;
}

EdgeLengths edges_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInstance, "instance must be a JSON object");
  EdgeLengths e{triple(j, "a"), triple(j, "b")};
  Validation v = validate(e);
  if (!v) throw Error(ErrorCode::InvalidInstance, e.str() + ": " + v.reason);
  return e;
}

std::vector<EdgeLengths> load_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidInstance, path + ": " + ex.what());
  }
  std::vector<EdgeLengths> out;
  if (j.is_array())
    for (const auto& x : j) out.push_back(edges_from_json(x));
  else
    out.push_back(edges_from_json(j));
  return out;
}

void save_instances(const std::string& path, const std::vector<EdgeLengths>& instances) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : instances) j.push_back(to_json(e));
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace tc
