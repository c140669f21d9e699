#include "jordan/flow.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>

#include "jordan/algebra.hpp"
#include "jordan/stratify.hpp"

namespace jordan {

const char* to_string(FlowStop s) {
  switch (s) {
    case FlowStop::Gradient: return "gradient";
    case FlowStop::Plateau: return "plateau";
    case FlowStop::Stalled: return "stalled";
    case FlowStop::MaxSteps: return "max_steps";
  }
  return "?";
}

namespace {

struct Point {
  StructureTensor mu;
  CMat M;
  double E = 0;
  StructureTensor grad;
  double gn = 0;
};

Point evaluate_point(StructureTensor mu) {
  Point p;
  p.M = moment_matrix(mu);
  const double nn = mu.norm_sq();
  const CMat m = p.M / nn;
  p.E = mat_norm_sq(m);
  p.grad = cd(4.0 / nn) * (inf_act(m, mu) - cd(p.E) * mu);
  p.gn = p.grad.norm();
  p.mu = std::move(mu);
  return p;
}

double energy_only(const StructureTensor& mu, CMat& M) {
  M = moment_matrix(mu);
  const double nn = mu.norm_sq();
  return mat_norm_sq(M) / (nn * nn);
}

// Minimum-norm A with A.mu = target in the least-squares sense.
CMat min_norm_generator(const StructureTensor& mu, const StructureTensor& target) {
  const int n = mu.dim();
  Eigen::CompleteOrthogonalDecomposition<CMat> cod;
  cod.setThreshold(1e-10);
  cod.compute(action_operator(mu));
  CVec a = cod.solve(target.packed());
  CMat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = a(i * n + j);
  return A;
}

}  // namespace

FlowTrace run_flow(const StructureTensor& start, const FlowOptions& opts) {
  if (start.is_zero()) throw JordanError("flow needs a nonzero tensor");
  if (opts.grad_tol <= 0 || opts.energy_plateau_tol <= 0 || opts.step0 <= 0)
    throw JordanError("flow tolerances must be positive");
  StructureTensor x0 = start;
  if (opts.random_start) {
    std::mt19937_64 rng(opts.seed);
    x0 = act(random_group_element(start.dim(), rng), x0);
  }
  if (opts.renormalize) x0 = x0.normalized();

  FlowTrace tr;
  Point cur = evaluate_point(std::move(x0));
  tr.energies.push_back(cur.E);
  tr.grad_norms.push_back(cur.gn);
  double s = opts.step0;
  int flat = 0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  tr.stop = FlowStop::MaxSteps;
  int step = 0;
  for (; step < opts.max_steps; ++step) {
    if (cur.gn <= opts.grad_tol) {
      tr.stop = FlowStop::Gradient;
      break;
    }
    const CMat A = min_norm_generator(cur.mu, cur.grad);
    const double slope = cur.gn * cur.gn;
    const double noise = 16 * eps * std::max(1.0, cur.E);
    std::optional<Point> next;
    while (!next) {
      StructureTensor y = act(cayley(A, s), cur.mu);
      if (opts.renormalize) y = y.normalized();
      CMat My;
      const double Ey = energy_only(y, My);
      const double pred = opts.armijo * s * slope;
      if (Ey <= cur.E - pred) {
        next = evaluate_point(std::move(y));
      } else if (pred < noise && Ey <= cur.E + noise) {
        // Below rounding, accept only if the gradient still shrinks.
        Point p = evaluate_point(std::move(y));
        if (p.gn < cur.gn) next = std::move(p);
      }
      if (next) break;
      s *= 0.5;
      if (s < 1e-16) break;
    }
    if (!next) {
      tr.stop = FlowStop::Stalled;
      break;
    }
    const double dE = cur.E - next->E;
    cur = std::move(*next);
    tr.energies.push_back(cur.E);
    tr.grad_norms.push_back(cur.gn);
    s *= 1.1;
    flat = std::fabs(dE) < opts.energy_plateau_tol ? flat + 1 : 0;
    if (flat >= opts.plateau_window) {
      ++step;
      tr.stop = FlowStop::Plateau;
      break;
    }
  }
  tr.steps_taken = static_cast<int>(tr.energies.size()) - 1;
  tr.converged = tr.stop != FlowStop::MaxSteps;
  tr.last_iterate = cur.mu;
  tr.terminal = cur.mu;
  tr.terminal_report = soliton_check(tr.terminal, opts.soliton_tol);
  if (!tr.terminal_report.is_soliton && opts.extract_limit) {
    if (auto lim = extract_limit(tr.terminal, opts)) {
      tr.terminal = *lim;
      tr.limit_extracted = true;
      tr.terminal_report = soliton_check(tr.terminal, opts.soliton_tol);
    }
  }
  tr.terminal_type = try_soliton_type(tr.terminal);
  return tr;
}

std::optional<StructureTensor> extract_limit(const StructureTensor& mu, const FlowOptions& opts) {
  const int n = mu.dim();
  Eigen::SelfAdjointEigenSolver<CMat> es(moment_matrix(mu));
  StructureTensor nu = act(es.eigenvectors().adjoint(), mu);
  const double cut = 1e-6 * nu.max_abs();
  for (auto& z : nu.raw())
    if (std::abs(z) <= cut) z = 0.0;

  const auto sup = support_weights(nu, 1e-6);
  std::vector<RVec> pts;
  for (const auto& w : sup) pts.push_back(w.w.cast<double>());
  const RVec beta = min_norm_point(pts).point;
  const double nb = beta.squaredNorm();

  std::vector<RVec> hyper;
  for (const RVec& v : pts)
    if (std::fabs(beta.dot(v) - nb) <= 1e-9 * std::max(1.0, nb)) hyper.push_back(v);
  // v is on the minimal face iff beta can be pushed away from v inside the hull.
  constexpr double push = 1e-5;
  std::vector<RVec> face;
  for (const RVec& v : hyper) {
    const RVec q = beta - push * (v - beta);
    std::vector<RVec> shifted;
    for (const RVec& w : hyper) shifted.push_back(w - q);
    if (min_norm_point(shifted).point.norm() <= 1e-9) face.push_back(v);
  }
  if (face.size() == pts.size()) return std::nullopt;

  StructureTensor lim(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (nu(i, j, k) == 0.0) continue;
        const RVec w = weight(n, i, j, k).w.cast<double>();
        for (const RVec& f : face)
          if ((f - w).norm() == 0.0) {
            lim.set(i, j, k, nu(i, j, k));
            break;
          }
      }
  if (lim.is_zero()) return std::nullopt;
  if (distance(lim.normalized(), nu.normalized()) > 0.05) return std::nullopt;

  FlowOptions sub = opts;
  sub.extract_limit = false;
  sub.random_start = false;
  sub.max_steps = std::min(opts.max_steps, 20000);
  FlowTrace polish = run_flow(lim, sub);
  if (!polish.terminal_report.is_soliton) return std::nullopt;
  if (std::fabs(polish.terminal_report.energy - energy(mu)) > 1e-6) return std::nullopt;
  return polish.terminal;
}

void write_trace_csv(const FlowTrace& trace, std::ostream& os) {
  os << "step,energy,grad_norm\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < trace.energies.size(); ++i)
    os << i << ',' << trace.energies[i] << ',' << trace.grad_norms[i] << '\n';
}

StructureTensor apply_curve(const StructureTensor& mu, const DegenerationCurve& curve, double t) {
  const int n = mu.dim();
  if (t == 0.0) throw JordanError("degeneration parameter must be nonzero");
  if (static_cast<int>(curve.exponents.size()) != n) throw JordanError("curve has wrong length");
  const auto& a = curve.exponents;
  StructureTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.set(i, j, k, std::pow(t, a[i] + a[j] - a[k]) * mu(i, j, k));
  return out;
}

std::optional<CMat> heisenberg_basis(const StructureTensor& mu) {
  const int n = mu.dim();
  if (n < 2) return std::nullopt;
  std::vector<CVec> candidates;
  for (int i = 0; i < n; ++i) candidates.push_back(basis_vector(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) candidates.push_back(basis_vector(n, i) + basis_vector(n, j));
  std::mt19937_64 rng(7);
  for (int r = 0; r < 8; ++r) candidates.push_back(random_complex(n, rng).col(0));
  for (const CVec& x : candidates) {
    const CVec x2 = evaluate(mu, x, x);
    CMat pair(n, 2);
    pair << x, x2;
    if (numerical_rank(pair, 1e-6).rank < 2) continue;
    // Complete x, x^2 to a basis with an orthonormal complement.
    CMat g(n, n);
    g.col(0) = x;
    g.col(1) = x2;
    Eigen::HouseholderQR<CMat> qr(pair);
    CMat Q = qr.householderQ() * CMat::Identity(n, n);
    for (int c = 2; c < n; ++c) g.col(c) = Q.col(c);
    return g;
  }
  return std::nullopt;
}

}  // namespace jordan
