#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "jordan/catalog.hpp"
#include "jordan/moment.hpp"
#include "jordan/stratify.hpp"
#include "jordan/tensor.hpp"

namespace jordan {

// Format errors raised while reading tensors.
class FormatError : public JordanError {
 public:
  using JordanError::JordanError;
};

// {"dim": n, "products": [{"i","j","k","re","im"}]}, 1-based, i <= j.
nlohmann::json tensor_to_json(const StructureTensor& mu);
StructureTensor tensor_from_json(const nlohmann::json& j);
StructureTensor load_tensor(const std::string& path);
std::string dump_tensor(const StructureTensor& mu);

nlohmann::json matrix_to_json(const CMat& A);
nlohmann::json report_to_json(const MomentReport& r);
nlohmann::json type_to_json(const SolitonType& t);
nlohmann::json label_to_json(const StratumLabel& l);
nlohmann::json fingerprint_to_json(const Fingerprint& f);

// 12 significant digits
std::string fmt(double x);
std::string fmt(cd z);

}  // namespace jordan
