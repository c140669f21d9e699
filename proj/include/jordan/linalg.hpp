#pragma once

#include <complex>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace jordan {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Relative singular-value cut used by every rank decision.
inline constexpr double kRankTol = 1e-8;
// A rank cut whose kept/dropped singular-value ratio is below this is borderline.
inline constexpr double kGapWarn = 1e3;

class JordanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Orthonormal basis (columns) of a subspace of C^n, plus the singular-value
// gap at the rank cut that produced it.
struct Subspace {
  int ambient_dim = 0;
  CMat basis;
  double gap_ratio = std::numeric_limits<double>::infinity();

  int dim() const { return static_cast<int>(basis.cols()); }
  bool borderline() const { return gap_ratio < kGapWarn; }
  // Distance of v from the subspace.
  double residual(const CVec& v) const;
};

struct RankInfo {
  int rank = 0;
  double gap_ratio = std::numeric_limits<double>::infinity();
};

// Rank of A with singular values below tol * sigma_max treated as zero.
// Implicit zero singular values (cols > rows) count toward the gap.
RankInfo numerical_rank(const CMat& A, double tol = kRankTol);
Subspace kernel(const CMat& A, double tol = kRankTol);
Subspace column_span(const CMat& A, double tol = kRankTol);

// <A,B> = Tr(A B*)
cd mat_inner(const CMat& A, const CMat& B);
double mat_norm_sq(const CMat& A);

bool is_hermitian(const CMat& A, double tol = 1e-12);
CMat cayley(const CMat& A, double s);
CMat expm_hermitian(const CMat& A, double t);

// Random matrices for tests, benches and randomized CLI preprocessing.
CMat random_complex(int n, std::mt19937_64& rng);
CMat random_hermitian(int n, std::mt19937_64& rng);
CMat random_unitary(int n, std::mt19937_64& rng);
// Gaussian matrix shifted toward the identity, so the condition number stays modest.
CMat random_group_element(int n, std::mt19937_64& rng);
double condition_number(const CMat& g);

}  // namespace jordan
