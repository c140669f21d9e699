#include "jordan/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace jordan {

namespace {

// Singular values padded with zeros up to the column count.
RVec padded_singular_values(const CMat& A) {
  RVec s = RVec::Zero(A.cols());
  if (A.rows() == 0 || A.cols() == 0) return s;
  Eigen::BDCSVD<CMat> svd(A);
  const RVec& sv = svd.singularValues();
  s.head(sv.size()) = sv;
  return s;
}

RankInfo rank_from(const RVec& s, double tol) {
  RankInfo info;
  if (s.size() == 0 || s(0) == 0.0) return info;
  const double cut = tol * s(0);
  int r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  info.rank = r;
  if (r < s.size()) info.gap_ratio = s(r) > 0 ? s(r - 1) / s(r) : std::numeric_limits<double>::infinity();
  return info;
}

}  // namespace

double Subspace::residual(const CVec& v) const {
  if (basis.cols() == 0) return v.norm();
  return (v - basis * (basis.adjoint() * v)).norm();
}

RankInfo numerical_rank(const CMat& A, double tol) {
  return rank_from(padded_singular_values(A), tol);
}

Subspace kernel(const CMat& A, double tol) {
  Subspace out;
  out.ambient_dim = static_cast<int>(A.cols());
  if (A.cols() == 0) return out;
  if (A.rows() == 0 || A.norm() == 0.0) {
    out.basis = CMat::Identity(A.cols(), A.cols());
    return out;
  }
  // Full V needed for the nullspace; a wide A gets zero rows appended.
  CMat B = A;
  if (B.rows() < B.cols()) {
    B.conservativeResize(A.cols(), Eigen::NoChange);
    B.bottomRows(A.cols() - A.rows()).setZero();
  }
  Eigen::JacobiSVD<CMat> svd(B, Eigen::ComputeFullV);
  RankInfo info = rank_from(svd.singularValues(), tol);
  out.gap_ratio = info.gap_ratio;
  out.basis = svd.matrixV().rightCols(A.cols() - info.rank);
  return out;
}

Subspace column_span(const CMat& A, double tol) {
  Subspace out;
  out.ambient_dim = static_cast<int>(A.rows());
  out.basis = CMat(A.rows(), 0);
  if (A.cols() == 0 || A.rows() == 0 || A.norm() == 0.0) return out;
  Eigen::JacobiSVD<CMat> svd(A, Eigen::ComputeThinU);
  RankInfo info = rank_from(svd.singularValues(), tol);
  out.gap_ratio = info.gap_ratio;
  out.basis = svd.matrixU().leftCols(info.rank);
  return out;
}

cd mat_inner(const CMat& A, const CMat& B) { return (A * B.adjoint()).trace(); }

double mat_norm_sq(const CMat& A) { return A.squaredNorm(); }

bool is_hermitian(const CMat& A, double tol) {
  return A.rows() == A.cols() && (A - A.adjoint()).norm() <= tol * std::max(1.0, A.norm());
}

CMat cayley(const CMat& A, double s) {
  const auto n = A.rows();
  CMat I = CMat::Identity(n, n);
  return (I + 0.5 * s * A).partialPivLu().solve(I - 0.5 * s * A);
}

CMat expm_hermitian(const CMat& A, double t) {
  Eigen::SelfAdjointEigenSolver<CMat> es(A);
  CVec e = (t * es.eigenvalues().array()).exp().cast<cd>();
  return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

CMat random_complex(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = cd(g(rng), g(rng));
  return A;
}

CMat random_hermitian(int n, std::mt19937_64& rng) {
  CMat A = random_complex(n, rng);
  return 0.5 * (A + A.adjoint());
}

CMat random_unitary(int n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMat> qr(random_complex(n, rng));
  CMat Q = qr.householderQ() * CMat::Identity(n, n);
  // Fix phases so the distribution does not depend on the QR convention.
  CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(R(i, i));
    if (a > 0) Q.col(i) *= R(i, i) / a;
  }
  return Q;
}

CMat random_group_element(int n, std::mt19937_64& rng) {
  CMat g = CMat::Identity(n, n) + 0.5 * random_complex(n, rng);
  while (condition_number(g) > 1e3) g = CMat::Identity(n, n) + 0.5 * random_complex(n, rng);
  return g;
}

double condition_number(const CMat& g) {
  Eigen::JacobiSVD<CMat> svd(g);
  const RVec& s = svd.singularValues();
  if (s(s.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

}  // namespace jordan
