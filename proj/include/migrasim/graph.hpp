#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "migrasim/rng.hpp"

namespace migrasim {

/// Weighted directed communication network. Entry w(i, j) is the weight
/// of the arc FROM vertex j TO vertex i; the in-degree of vertex i is
/// the i-th row sum. Immutable after construction in practice.
class SocialGraph {
public:
    SocialGraph(std::size_t n, std::vector<double> weights);

    std::size_t order() const { return n_; }
    double weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
    const std::vector<double>& data() const { return w_; }

    std::uint64_t generation_seed = 0; // informational, carried into exports

private:
    std::size_t n_;
    std::vector<double> w_; // row-major, n x n
};

/// Random graph per the simulation protocol: every off-diagonal entry is
/// drawn uniform on (0, weight_upper) in row-major order (diagonal skipped,
/// no draw consumed for it), then zeroed if below sparse_factor.
SocialGraph random_graph(std::size_t n, double weight_upper, double sparse_factor,
                         RandomStream& rng);

/// Laplacian L = D - W with D_ii the i-th row sum of W, accumulated in
/// ascending column order. Row-major, n x n.
std::vector<double> laplacian(const SocialGraph& g);

/// True iff some root vertex reaches every vertex along arc directions
/// (arc j -> i exists iff w(i, j) > 0).
bool has_spanning_tree(const SocialGraph& g);

/// Edge-list text format: header line "# migrasim graph n=<n> seed=<seed>",
/// then one "from to weight" line per arc, floats in shortest round-trip
/// decimal form.
void write_edge_list(const SocialGraph& g, std::ostream& out);
SocialGraph read_edge_list(std::istream& in);

} // namespace migrasim
