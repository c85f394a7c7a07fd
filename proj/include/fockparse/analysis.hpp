#pragma once

// Parse trajectories in Fock space and their principal-component projection.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "fockparse/fock.hpp"
#include "fockparse/grammar.hpp"

namespace fockparse {

struct Trajectory {
  std::vector<std::string> labels;  // operation that follows each state
  std::vector<Term> terms;
  std::vector<FockVector> vectors;
  std::vector<std::size_t> depths;
  std::vector<std::uint64_t> nominal_dims;  // fock_dim(n, role_dim, depth)
};

// Embeds the interactive parse states of `sentence`. Throws ParseFailure if
// the sentence is rejected.
Trajectory trajectory(const Grammar& g, const Sentence& sentence);

struct DenseMatrix {
  Eigen::MatrixXd values;          // one row per vector
  std::vector<BasisKey> basis;     // column keys, sorted by key text
};

// Union of the occurring keys as columns. Throws DomainError on mixed role
// dimensions.
DenseMatrix densify(const std::vector<FockVector>& vs);

struct PcaResult {
  Eigen::MatrixXd projected;   // rows x k
  Eigen::MatrixXd components;  // k x basis size, orthonormal rows
  Eigen::VectorXd explained_variance;
  std::vector<BasisKey> basis;
};

// Mean-centred PCA over the union basis. Variances use the n - 1
// denominator (zero for a single vector). The largest-magnitude entry of
// each component is positive. Throws DomainError unless
// 1 <= k <= min(#vectors, basis size).
PcaResult pca_project(const std::vector<FockVector>& vs, std::size_t k);

// Header `label,pc1,...,pck`, one row per vector, 17 significant digits.
std::string pca_csv(const PcaResult& r, const std::vector<std::string>& labels);

struct CsvTable {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
};
CsvTable parse_pca_csv(std::string_view text);

}  // namespace fockparse
