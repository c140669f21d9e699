#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordan/flow.hpp"
#include "jordan/rational.hpp"
#include "jordan/tensor.hpp"

namespace jordan {

struct Flags {
  bool associative = false;
  bool simple = false;
  bool semisimple = false;
  bool nilpotent = false;
  bool unital = false;
  bool decomposable = false;

  std::string str() const;  // "A, SS, D" style, "-" when empty
  friend bool operator==(const Flags&, const Flags&) = default;
};
// Recomputed from the tensor.
Flags compute_flags(const StructureTensor& mu);

// One table coefficient: provenance text plus its value.
struct Coefficient {
  int i, j, k;  // 0-based
  std::string tag;
  double value;
};

struct CatalogEntry {
  std::string name;  // "A_3_7"
  int dim = 0;
  std::vector<std::string> labels;  // basis names, e.g. e1 n1 n2
  std::vector<Coefficient> coefficients;
  StructureTensor tensor;
  Flags table_flags;       // as printed
  Flags expected_flags;    // table flags with S => SS => U applied and omitted cells filled in
  std::vector<std::string> decomposition;
  bool distinguished = true;     // false only for A_4_63
  bool approximate = false;      // parameters printed to finite precision
  std::string expected_type;     // "(0<1<2;1,1,1)"
  std::vector<Fraction> expected_beta;  // ascending
  Fraction expected_energy;
  std::string note;
};

const std::vector<CatalogEntry>& catalog();
std::vector<const CatalogEntry*> catalog_dim(int n);
const CatalogEntry& builtin(const std::string& name);
bool has_entry(const std::string& name);

StructureTensor heisenberg(int n);  // n1^2 = n2
StructureTensor hyperbolic(int n);  // e^2 = e, e n_i = n_i / 2
StructureTensor zero_tensor(int n);

// Flow refinement of entries whose table parameters are approximate.
StructureTensor refined_tensor(const CatalogEntry& e);

struct Fingerprint {
  int dim = 0;
  int dim_der = 0;
  std::vector<int> power_dims;
  int product_rank = 0;
  bool is_nilpotent = false;
  bool is_semisimple = false;
  bool is_associative = false;
  bool has_unit = false;
  double stratum_energy = 0;

  bool matches(const Fingerprint& o, double energy_tol = 1e-6) const;
};
Fingerprint fingerprint(const StructureTensor& mu, const FlowOptions& opts = {});
const Fingerprint& catalog_fingerprint(const std::string& name);
std::vector<std::string> match(const StructureTensor& mu, const FlowOptions& opts = {});

struct ReproRow {
  std::string name;
  int dim = 0;
  bool soliton = false;
  double residual = 0;
  std::string type;
  std::string expected_type;
  std::vector<Fraction> beta;
  std::vector<Fraction> expected_beta;
  std::string energy;
  Fraction expected_energy;
  bool pass = false;
  std::string detail;
};
struct ReproReport {
  std::vector<ReproRow> rows;
  int failures = 0;
  int strata = 0;  // distinct expected labels among the rows
};
// dim 0 means every dimension; jobs <= 0 leaves the OpenMP default.
ReproReport reproduce_tables(int dim = 0, int jobs = 0);
ReproRow reproduce_entry(const CatalogEntry& e);
void write_report_csv(const ReproReport& r, std::ostream& os);
void write_report_md(const ReproReport& r, std::ostream& os);

}  // namespace jordan
