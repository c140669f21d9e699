#pragma once

#include <optional>
#include <vector>

#include "jordan/tensor.hpp"

namespace jordan {

CVec evaluate(const StructureTensor& mu, const CVec& x, const CVec& y);
// Columns mu(x, e_j).
CMat left_mult(const StructureTensor& mu, const CVec& x);
CMat left_mult_basis(const StructureTensor& mu, int i);
CVec basis_vector(int n, int i);

// Max over basis quadruples of |(ab,c,d) + (bd,c,a) + (da,c,b)|.
double jordan_defect(const StructureTensor& mu);
bool is_jordan(const StructureTensor& mu, double tol = 1e-9);
// Max over basis triples of |(ab)c - a(bc)|.
double associator_defect(const StructureTensor& mu);
bool is_associative(const StructureTensor& mu, double tol = 1e-9);

// tau(e_i, e_j) = Tr L_{e_i e_j}; complex symmetric.
CMat trace_form(const StructureTensor& mu);
Subspace radical(const StructureTensor& mu, double tol = kRankTol);
bool is_semisimple(const StructureTensor& mu);

struct Derivations {
  int dim = 0;
  std::vector<CMat> basis;  // orthonormal for <A,B> = Tr(AB*)
  double gap_ratio = 0;
};
// Matrix of A -> A.mu on gl_n (column a*n+b is E_ab), rows in packed coordinates.
CMat action_operator(const StructureTensor& mu);
Derivations derivation_algebra(const StructureTensor& mu, double tol = kRankTol);

Subspace annihilator(const StructureTensor& mu, double tol = kRankTol);

struct PowerChain {
  std::vector<int> dims;  // dim A, dim A^2, ... up to stabilization (no repeat)
  bool nilpotent = false;
};
PowerChain power_dims(const StructureTensor& mu, double tol = kRankTol);
// dim mu(C^n, C^n)
int product_rank(const StructureTensor& mu, double tol = kRankTol);

// Least-squares solve of L_u = I; accepted when the residual is below 1e-9.
std::optional<CVec> unit_element(const StructureTensor& mu);
bool has_unit(const StructureTensor& mu);

// Centroid {T : T(xy) = T(x)y} and a decomposability test: the algebra is a
// direct product of two nonzero ideals iff its centroid has a nontrivial
// idempotent, i.e. iff a generic centroid element has two distinct eigenvalues.
Subspace centroid(const StructureTensor& mu, double tol = kRankTol);
bool is_decomposable(const StructureTensor& mu);
// Simple: semisimple with one-dimensional center.
bool is_simple(const StructureTensor& mu);

// g.mu(a, b) = g mu(g^-1 a, g^-1 b)
StructureTensor act(const CMat& g, const StructureTensor& mu);
// A.mu(x, y) = A mu(x, y) - mu(Ax, y) - mu(x, Ay)
StructureTensor inf_act(const CMat& A, const StructureTensor& mu);
// New basis listed by old indices: result(e_a, e_b) uses old e_perm[a], e_perm[b].
StructureTensor permute(const StructureTensor& mu, const std::vector<int>& perm);

StructureTensor direct_product(const StructureTensor& mu, const StructureTensor& nu);
// c = -||M||^2 / ||mu||^2 of the moment decomposition M = cI + D.
double soliton_constant(const StructureTensor& mu);
// mu x c nu with c = sqrt(c_mu / c_nu)
StructureTensor soliton_product(const StructureTensor& mu, const StructureTensor& nu);
// Appends a unit u as the last basis vector. Throws if mu is already unital.
StructureTensor adjoin_unit(const StructureTensor& mu);
// adjoin_unit(sqrt(c) mu) with c = (2n+1)/(-c_mu); checks the block moment matrix.
StructureTensor soliton_unitalize(const StructureTensor& mu);
// S + N with N = C^n as the regular module: s.n_j = (L_s e_j) in N, N^2 = 0.
StructureTensor regular_representation(const StructureTensor& mu);

}  // namespace jordan
