// Inertia of Hermitian matrices, right-half-plane eigenvalue counts, and the
// indefinite-inner-product tools [phi, psi] = <U phi, psi> = psi^H U phi.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sik/fourier.hpp"

namespace sik {

class NonHermitianInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rank decision in the addition rule fell within a factor 10 of its cutoff.
class DegenerateRestriction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gram-Schmidt met a (numerically) neutral vector, [v, v] ~ 0.
class NeutralVectorEncountered : public std::runtime_error {
 public:
  NeutralVectorEncountered(std::size_t position, double pivot);
  std::size_t position() const { return position_; }
  double pivot() const { return pivot_; }

 private:
  std::size_t position_;
  double pivot_;
};

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  double zero_tol = 0.0;

  int dimension() const { return n_plus + n_minus + n_zero; }
};

/// Signs of the eigenvalues of H, with |lambda| <= zero_tol counted as zero.
/// The default tolerance is 1e-8 ||H||_2.
Inertia inertia_hermitian(const CMatrix& H, std::optional<double> zero_tol = std::nullopt);
/// Same count from precomputed eigenvalues.
Inertia inertia_from_eigenvalues(const Eigen::VectorXd& eigenvalues, double zero_tol);

/// Right-half-plane count of a general matrix.
struct SpectralCount {
  Inertia counts;        // n_plus = Re > tol, n_minus = Re < -tol
  double axis_gap = 0.0; // min |Re lambda|
  std::vector<Complex> eigenvalues;
};

/// Schur-based count. Default axis tolerance 1e-8 ||A||_2.
SpectralCount instability_index_general(const CMatrix& A, std::optional<double> axis_tol = std::nullopt);
SpectralCount count_from_eigenvalues(std::vector<Complex> eigenvalues, double axis_tol);

/// How far the computed eigenvalues can be trusted.
struct EigenConditioning {
  double reconstruction_residual = 0.0;  // ||A - V E V^{-1}||_2 / ||A||_2
  double max_condition = 0.0;            // max_i 1 / |y_i^H x_i| over unit eigenvectors
  double perturbation_bound = 0.0;       // max_condition * eps * ||A||_2
  double axis_gap = 0.0;
  /// Set when the perturbation bound reaches the axis gap or the
  /// eigen-decomposition fails to reproduce A to 1e-8.
  bool unreliable = false;
};

EigenConditioning conditioning_diagnostic(const CMatrix& A);

/// Orthonormal basis of {phi : <U phi, s> = 0 for all columns s of S}, i.e.
/// the null space of S^H U.
CMatrix u_orth_complement(const CMatrix& U, const CMatrix& S);

struct AdditionRule {
  int lhs = 0;             // kappa(U)
  int kappa_restricted1 = 0;
  int kappa_restricted2 = 0;
  int intersection_dim = 0;
  int rhs() const { return kappa_restricted1 + kappa_restricted2 + intersection_dim; }
};

/// Both sides of kappa(U) = kappa(U|Pi1) + kappa(U|Pi2) + dim(Pi1 n Pi2) with
/// Pi1 = span(S1) and Pi2 its U-orthogonal complement. Rank decisions use
/// singular values with cutoff 1e-8.
AdditionRule addition_rule_check(const CMatrix& U, const CMatrix& S1);

struct IndefiniteBasis {
  CMatrix vectors;          // columns v_i with [v_i, v_j] = 0 for i != j
  std::vector<int> signs;   // [v_i, v_i]
};

/// Gram-Schmidt with [., .] in place of the inner product. Throws
/// NeutralVectorEncountered when |[w, w]| <= tol ||U||_2 ||w||^2.
IndefiniteBasis indefinite_gram_schmidt(const CMatrix& U, const CMatrix& vectors, double tol = 1e-10);

}  // namespace sik
