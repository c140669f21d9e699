#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "jordan/moment.hpp"
#include "jordan/tensor.hpp"

namespace jordan {

struct FlowOptions {
  int max_steps = 200000;
  double step0 = 1e-2;
  double grad_tol = 1e-9;
  double energy_plateau_tol = 1e-12;
  int plateau_window = 500;
  double armijo = 1e-4;
  bool renormalize = true;
  // Replace a slowly converging terminal by the soliton it approaches.
  bool extract_limit = true;
  double soliton_tol = kSolitonTol;
  // Seeds random_start; the flow itself is deterministic.
  std::uint64_t seed = 0;
  bool random_start = false;
};

enum class FlowStop { Gradient, Plateau, Stalled, MaxSteps };
const char* to_string(FlowStop s);

struct FlowTrace {
  std::vector<double> energies;    // energies[0] is the start
  std::vector<double> grad_norms;  // aligned with energies
  StructureTensor terminal;        // unit norm when renormalizing
  StructureTensor last_iterate;    // before limit extraction
  int steps_taken = 0;
  bool converged = false;
  FlowStop stop = FlowStop::MaxSteps;
  bool limit_extracted = false;
  MomentReport terminal_report;
  std::optional<SolitonType> terminal_type;  // nullopt: unsnapped

  bool plateau() const { return stop == FlowStop::Plateau; }
  double terminal_energy() const { return terminal_report.energy; }
};

// Descent of E along the orbit. Each step finds the minimum-norm A in gl_n with
// A.mu = grad E(mu) and moves to cayley(A, s).mu, so iterates never leave G.mu.
FlowTrace run_flow(const StructureTensor& mu, const FlowOptions& opts = {});

// Keeps the coefficients whose weights (in the eigenbasis of m) lie on the
// minimal face of the support hull containing beta in its relative interior.
// Returns nullopt when the result is not a soliton close to mu.
std::optional<StructureTensor> extract_limit(const StructureTensor& mu, const FlowOptions& opts);

void write_trace_csv(const FlowTrace& trace, std::ostream& os);

struct DegenerationCurve {
  std::vector<double> exponents;
};
// act(g_t^-1, mu), g_t = diag(t^a_i): coefficient mu_ij^k scales by t^(a_i+a_j-a_k).
StructureTensor apply_curve(const StructureTensor& mu, const DegenerationCurve& curve, double t);

// Basis x, x^2, ... in which diag(t, t^2, ..., t^2) degenerates mu to mu_Heis.
// Returns g with mu' = act(g^-1, mu) expressed in that basis.
std::optional<CMat> heisenberg_basis(const StructureTensor& mu);

}  // namespace jordan
