#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace polyadp {

/// One cone block. Diagonal blocks hold independent non-negative scalars and
/// only accept i == j entries.
struct SdpBlockDesc {
  int dim = 1;
  bool diagonal = false;
};

/// Entry of a symmetric coefficient matrix, upper triangle (i <= j). The full
/// matrix has the same value mirrored at (j, i).
struct SdpEntry {
  int block;
  int i, j;
  double value;
};

/// Sparse symmetric linear functional <A, X> over the block-diagonal cone.
struct SdpCoeffs {
  std::vector<SdpEntry> entries;

  void add(int block, int i, int j, double value);
  /// Sorts by (block, i, j) and merges duplicates; drops exact zeros.
  void canonicalize();
};

/// Standard-form semidefinite program over block-diagonal X >= 0:
///
///   maximize    <C, X>
///   subject to  <A_k, X> = b_k,  k = 1..m
///               X  block-diagonal PSD.
struct SdpProblem {
  std::vector<SdpBlockDesc> blocks;
  SdpCoeffs objective;              // C
  std::vector<SdpCoeffs> constraints;  // A_k
  std::vector<double> rhs;          // b

  void validate() const;
  /// Structural equality after canonicalization (entry order insensitive,
  /// values compared exactly).
  bool structurally_equal(const SdpProblem& other) const;
};

enum class SdpStatus { optimal, infeasible, unbounded, max_iter, numerical_error };

const char* to_string(SdpStatus s);

struct SdpSolution {
  SdpStatus status = SdpStatus::numerical_error;
  std::vector<Eigen::MatrixXd> x_blocks;  // primal X
  std::vector<Eigen::MatrixXd> s_blocks;  // dual slack S
  Eigen::VectorXd y;                      // equality multipliers
  double primal_objective = 0.0;          // <C, X>
  double dual_objective = 0.0;            // b^T y
  double gap = 0.0;                       // |p - d| / (1 + max(|p|, |d|))
  double primal_residual = 0.0;           // ||b - A(X)|| / (1 + ||b||)
  double dual_residual = 0.0;             // ||C - S - A^T y||_F / (1 + ||C||_F)
  int iterations = 0;
};

struct SdpOptions {
  double tol = 1e-8;
  int max_iter = 100;
  bool verbose = false;
};

/// Primal-dual path-following interior-point solver (Nesterov-Todd scaling,
/// Mehrotra predictor-corrector, dense Schur complement). Deterministic for
/// identical inputs.
SdpSolution solve(const SdpProblem& prob, const SdpOptions& opts = {});

struct KktReport {
  double primal_residual = 0.0;   // ||b - A(X)||_2
  double dual_residual = 0.0;     // ||C - S - A^T y||_F
  double complementarity = 0.0;   // <X, S>
  double min_eigenvalue_x = 0.0;  // over all blocks
  double min_eigenvalue_s = 0.0;
};

KktReport check_kkt(const SdpProblem& prob, const SdpSolution& sol);

}  // namespace polyadp
