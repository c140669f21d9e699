#include "jordan/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace jordan {

using nlohmann::json;

json tensor_to_json(const StructureTensor& mu) {
  const int n = mu.dim();
  json products = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const cd v = mu(i, j, k);
        if (v == cd(0)) continue;
        products.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"re", v.real()}, {"im", v.imag()}});
      }
  return {{"dim", n}, {"products", products}};
}

namespace {

int index_field(const json& p, const char* key, int n) {
  if (!p.contains(key) || !p[key].is_number_integer()) throw FormatError(std::string("product needs integer '") + key + "'");
  const int v = p[key].get<int>();
  if (v < 1 || v > n) throw FormatError(std::string("index '") + key + "' = " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return v - 1;
}

double number_field(const json& p, const char* key, bool required) {
  if (!p.contains(key)) {
    if (required) throw FormatError(std::string("product needs number '") + key + "'");
    return 0.0;
  }
  if (!p[key].is_number()) throw FormatError(std::string("'") + key + "' must be a number");
  const double v = p[key].get<double>();
  if (!std::isfinite(v)) throw FormatError(std::string("'") + key + "' is not finite");
  return v;
}

}  // namespace

StructureTensor tensor_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("tensor must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw FormatError("missing integer 'dim'");
  const int n = j["dim"].get<int>();
  if (n < 1) throw FormatError("'dim' must be positive");
  if (!j.contains("products") || !j["products"].is_array()) throw FormatError("missing array 'products'");
  StructureTensor mu(n);
  std::set<std::tuple<int, int, int>> seen;
  for (const json& p : j["products"]) {
    if (!p.is_object()) throw FormatError("each product must be an object");
    const int a = index_field(p, "i", n), b = index_field(p, "j", n), c = index_field(p, "k", n);
    if (a > b)
      throw FormatError("product (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                        std::to_string(c + 1) + ") violates i <= j");
    if (!seen.insert({a, b, c}).second)
      throw FormatError("duplicate product (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                        std::to_string(c + 1) + ")");
    mu.set(a, b, c, cd(number_field(p, "re", true), number_field(p, "im", false)));
  }
  return mu;
}

StructureTensor load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return tensor_from_json(j);
}

std::string dump_tensor(const StructureTensor& mu) { return tensor_to_json(mu).dump(2); }

json matrix_to_json(const CMat& A) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < A.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < A.cols(); ++c) row.push_back({A(r, c).real(), A(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json report_to_json(const MomentReport& r) {
  json j;
  j["M"] = matrix_to_json(r.M);
  j["m"] = matrix_to_json(r.m);
  j["energy"] = r.energy;
  j["c"] = r.c;
  j["D"] = matrix_to_json(r.D);
  j["soliton_residual"] = r.soliton_residual;
  j["is_soliton"] = r.is_soliton;
  j["derivation_pairing"] = r.derivation_pairing;
  return j;
}

namespace {

json fractions(const std::vector<Fraction>& v) {
  json a = json::array();
  for (const Fraction& f : v) a.push_back(f.str());
  return a;
}

}  // namespace

json type_to_json(const SolitonType& t) {
  return {{"type", t.str()}, {"d", t.d}, {"mult", t.mult}, {"beta", fractions(t.beta)}, {"energy", t.energy.str()}};
}

json label_to_json(const StratumLabel& l) {
  json j;
  if (l.snapped) {
    j["beta"] = fractions(l.beta);
    j["energy"] = l.norm_sq.str();
  } else {
    j["beta"] = std::vector<double>(l.beta_float.data(), l.beta_float.data() + l.beta_float.size());
    j["energy"] = l.norm_sq_float;
  }
  j["snapped"] = l.snapped;
  return j;
}

json fingerprint_to_json(const Fingerprint& f) {
  return {{"dim", f.dim},
          {"dim_der", f.dim_der},
          {"power_dims", f.power_dims},
          {"product_rank", f.product_rank},
          {"nilpotent", f.is_nilpotent},
          {"semisimple", f.is_semisimple},
          {"associative", f.is_associative},
          {"unital", f.has_unit},
          {"stratum_energy", f.stratum_energy}};
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string fmt(cd z) {
  if (std::fabs(z.imag()) <= 1e-15 * std::max(1.0, std::fabs(z.real()))) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::fabs(z.imag())) + "i";
}

}  // namespace jordan
