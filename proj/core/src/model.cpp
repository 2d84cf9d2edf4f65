#include "minvc/model.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace minvc {

SpinConfig binary_to_spins(const BinaryConfig& x) {
  SpinConfig s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? 1 : -1;
  return s;
}

BinaryConfig spins_to_binary(const SpinConfig& s) {
  BinaryConfig x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i] > 0 ? 1 : 0;
  return x;
}

void QuboModel::add_linear(int i, double coeff) {
  if (i < 0 || i >= num_vars()) throw std::invalid_argument("linear index out of range");
  linear_[i] += coeff;
}

void QuboModel::add_quadratic(int i, int j, double coeff) {
  if (i == j) throw std::invalid_argument("quadratic term needs distinct endpoints");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= num_vars()) throw std::invalid_argument("quadratic index out of range");
  quadratic_[{i, j}] += coeff;
}

double QuboModel::energy(const BinaryConfig& x) const {
  if (static_cast<int>(x.size()) != num_vars())
    throw std::invalid_argument("config length mismatch");
  double e = offset_;
  for (int i = 0; i < num_vars(); ++i) {
    if (x[i]) e += linear_[i];
  }
  for (const auto& [edge, coeff] : quadratic_) {
    if (x[edge.first] && x[edge.second]) e += coeff;
  }
  return e;
}

void IsingModel::add_field(int i, double coeff) {
  if (i < 0 || i >= num_spins()) throw std::invalid_argument("field index out of range");
  fields_[i] += coeff;
}

void IsingModel::add_coupling(int i, int j, double coeff) {
  if (i == j) throw std::invalid_argument("coupling needs distinct endpoints");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= num_spins()) throw std::invalid_argument("coupling index out of range");
  couplings_[{i, j}] += coeff;
}

double IsingModel::energy(const SpinConfig& s) const {
  if (static_cast<int>(s.size()) != num_spins())
    throw std::invalid_argument("config length mismatch");
  double e = offset_;
  for (int i = 0; i < num_spins(); ++i) e += fields_[i] * s[i];
  for (const auto& [edge, j] : couplings_) e += j * s[edge.first] * s[edge.second];
  return e;
}

std::vector<std::vector<std::pair<int, double>>> IsingModel::adjacency() const {
  std::vector<std::vector<std::pair<int, double>>> adj(num_spins());
  for (const auto& [edge, j] : couplings_) {
    adj[edge.first].emplace_back(edge.second, j);
    adj[edge.second].emplace_back(edge.first, j);
  }
  return adj;
}

QuboModel build_minvc_qubo(const Graph& g, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("penalty must be positive");
  QuboModel q(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) q.add_linear(i, 1.0);
  for (const auto& [u, v] : g.edges()) {
    // lambda (1 - x_u)(1 - x_v) expanded
    q.add_offset(lambda);
    q.add_linear(u, -lambda);
    q.add_linear(v, -lambda);
    q.add_quadratic(u, v, lambda);
  }
  return q;
}

IsingModel qubo_to_ising(const QuboModel& q) {
  IsingModel m(q.num_vars());
  m.add_offset(q.offset());
  for (int i = 0; i < q.num_vars(); ++i) {
    double a = q.linear()[i];
    if (a != 0.0) {
      m.add_field(i, a / 2);
      m.add_offset(a / 2);
    }
  }
  for (const auto& [edge, b] : q.quadratic()) {
    if (b == 0.0) continue;
    m.add_coupling(edge.first, edge.second, b / 4);
    m.add_field(edge.first, b / 4);
    m.add_field(edge.second, b / 4);
    m.add_offset(b / 4);
  }
  return m;
}

QuboModel ising_to_qubo(const IsingModel& m) {
  QuboModel q(m.num_spins());
  q.add_offset(m.offset());
  for (int i = 0; i < m.num_spins(); ++i) {
    double h = m.fields()[i];
    if (h != 0.0) {
      q.add_linear(i, 2 * h);
      q.add_offset(-h);
    }
  }
  for (const auto& [edge, j] : m.couplings()) {
    if (j == 0.0) continue;
    q.add_quadratic(edge.first, edge.second, 4 * j);
    q.add_linear(edge.first, -2 * j);
    q.add_linear(edge.second, -2 * j);
    q.add_offset(j);
  }
  return q;
}

ReducedIsing reduce_with_fixed(const IsingModel& m, const std::map<int, int>& fixed) {
  const int n = m.num_spins();
  for (const auto& [i, s] : fixed) {
    if (i < 0 || i >= n) throw std::invalid_argument("fixed index out of range");
    if (s != 1 && s != -1) throw std::invalid_argument("fixed value must be +1 or -1");
  }
  std::vector<int> position(n, -1);
  std::vector<int> index_map;
  index_map.reserve(n - fixed.size());
  for (int i = 0; i < n; ++i) {
    if (!fixed.count(i)) {
      position[i] = static_cast<int>(index_map.size());
      index_map.push_back(i);
    }
  }
  IsingModel sub(static_cast<int>(index_map.size()));
  sub.add_offset(m.offset());
  for (int i = 0; i < n; ++i) {
    double h = m.fields()[i];
    if (h == 0.0) continue;
    if (position[i] >= 0)
      sub.add_field(position[i], h);
    else
      sub.add_offset(h * fixed.at(i));
  }
  for (const auto& [edge, j] : m.couplings()) {
    int pu = position[edge.first], pv = position[edge.second];
    if (pu >= 0 && pv >= 0) {
      sub.add_coupling(pu, pv, j);
    } else if (pu >= 0) {
      sub.add_field(pu, j * fixed.at(edge.second));
    } else if (pv >= 0) {
      sub.add_field(pv, j * fixed.at(edge.first));
    } else {
      sub.add_offset(j * fixed.at(edge.first) * fixed.at(edge.second));
    }
  }
  return {std::move(sub), std::move(index_map)};
}

SpinConfig expand_with_fixed(int n_full, const std::map<int, int>& fixed,
                             const std::vector<int>& index_map,
                             const SpinConfig& free_values) {
  if (index_map.size() != free_values.size())
    throw std::invalid_argument("reduced solution length mismatch");
  SpinConfig s(n_full, 0);
  for (const auto& [i, v] : fixed) s[i] = v;
  for (std::size_t k = 0; k < index_map.size(); ++k) s[index_map[k]] = free_values[k];
  for (int v : s)
    if (v != 1 && v != -1) throw std::invalid_argument("incomplete spin assembly");
  return s;
}

CoverStats evaluate_cover(const Graph& g, const BinaryConfig& x) {
  if (static_cast<int>(x.size()) != g.num_vertices())
    throw std::invalid_argument("config length mismatch");
  CoverStats stats;
  for (int v : x) stats.cover_size += v ? 1 : 0;
  for (const auto& [u, v] : g.edges()) {
    if (!x[u] && !x[v]) ++stats.violated_edges;
  }
  return stats;
}

void export_qubo_coord(const QuboModel& q, std::ostream& out) {
  out << "# qubo coordinate format: i j coeff, diagonal = linear\n";
  out << "# n_vars " << q.num_vars() << "\n";
  out << "# offset " << q.offset() << "\n";
  for (int i = 0; i < q.num_vars(); ++i) {
    if (q.linear()[i] != 0.0) out << i << ' ' << i << ' ' << q.linear()[i] << '\n';
  }
  for (const auto& [edge, coeff] : q.quadratic()) {
    if (coeff != 0.0) out << edge.first << ' ' << edge.second << ' ' << coeff << '\n';
  }
}

}  // namespace minvc
