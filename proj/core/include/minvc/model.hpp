#pragma once

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "minvc/graph.hpp"

namespace minvc {

using BinaryConfig = std::vector<int>;  // entries in {0, 1}
using SpinConfig = std::vector<int>;    // entries in {+1, -1}

SpinConfig binary_to_spins(const BinaryConfig& x);
BinaryConfig spins_to_binary(const SpinConfig& s);

/// Quadratic binary objective
///   E(x) = offset + sum_i linear_i x_i + sum_{i<j} quadratic_{ij} x_i x_j.
class QuboModel {
 public:
  QuboModel() = default;
  explicit QuboModel(int n_vars) : linear_(n_vars, 0.0) {}

  int num_vars() const { return static_cast<int>(linear_.size()); }
  double offset() const { return offset_; }
  const std::vector<double>& linear() const { return linear_; }
  const std::map<Edge, double>& quadratic() const { return quadratic_; }

  void add_offset(double c) { offset_ += c; }
  void add_linear(int i, double coeff);
  void add_quadratic(int i, int j, double coeff);

  double energy(const BinaryConfig& x) const;

 private:
  std::vector<double> linear_;
  std::map<Edge, double> quadratic_;  // canonical keys, single counted
  double offset_ = 0.0;
};

/// Ising objective over +-1 spins, couplings stored single counted:
///   E(s) = offset + sum_{i<j} J_{ij} s_i s_j + sum_i h_i s_i.
class IsingModel {
 public:
  IsingModel() = default;
  explicit IsingModel(int n_spins) : fields_(n_spins, 0.0) {}

  int num_spins() const { return static_cast<int>(fields_.size()); }
  double offset() const { return offset_; }
  const std::vector<double>& fields() const { return fields_; }
  const std::map<Edge, double>& couplings() const { return couplings_; }

  void add_offset(double c) { offset_ += c; }
  void add_field(int i, double coeff);
  void add_coupling(int i, int j, double coeff);

  double energy(const SpinConfig& s) const;

  // Per-spin neighbor lists (neighbor index, coupling), sorted by neighbor.
  std::vector<std::vector<std::pair<int, double>>> adjacency() const;

 private:
  std::vector<double> fields_;
  std::map<Edge, double> couplings_;
  double offset_ = 0.0;
};

// QUBO of minimum vertex cover with penalty lambda > 0:
//   sum_i x_i + lambda * sum_{(i,j) in E} (1 - x_i)(1 - x_j).
QuboModel build_minvc_qubo(const Graph& g, double lambda);

// Exact substitution x = (1 + s) / 2 and its inverse.
IsingModel qubo_to_ising(const QuboModel& q);
QuboModel ising_to_qubo(const IsingModel& m);

/// Subproblem over the free spins after clamping the fixed ones.
/// index_map[k] is the original index of reduced spin k, ascending.
struct ReducedIsing {
  IsingModel model;
  std::vector<int> index_map;
};

// Clamps `fixed` (index -> spin) into the model: couplings restricted to
// free pairs, fields absorb coupling to fixed spins, offset absorbs the
// rest, so reduced.energy(free) == full.energy(free + fixed) exactly.
ReducedIsing reduce_with_fixed(const IsingModel& m, const std::map<int, int>& fixed);

// Reassembles a full spin configuration from fixed values and the reduced
// solution.
SpinConfig expand_with_fixed(int n_full, const std::map<int, int>& fixed,
                             const std::vector<int>& index_map,
                             const SpinConfig& free_values);

struct CoverStats {
  int cover_size = 0;
  int violated_edges = 0;
};

CoverStats evaluate_cover(const Graph& g, const BinaryConfig& x);

// Text coordinate export: "i j coeff" per line, diagonal entries are the
// linear terms. Offset and size go into leading comments.
void export_qubo_coord(const QuboModel& q, std::ostream& out);

}  // namespace minvc
