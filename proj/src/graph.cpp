#include "migrasim/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "migrasim/text.hpp"

namespace migrasim {

SocialGraph::SocialGraph(std::size_t n, std::vector<double> weights)
    : n_(n), w_(std::move(weights)) {
    if (n_ < 2) {
        throw std::invalid_argument("SocialGraph: order must be at least 2");
    }
    if (w_.size() != n_ * n_) {
        throw std::invalid_argument("SocialGraph: weight matrix size mismatch");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const double w = w_[i * n_ + j];
            if (i == j && w != 0.0) {
                throw std::invalid_argument("SocialGraph: self-loops are not allowed");
            }
            if (w < 0.0) {
                throw std::invalid_argument("SocialGraph: negative arc weight");
            }
        }
    }
}

SocialGraph random_graph(std::size_t n, double weight_upper, double sparse_factor,
                         RandomStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("random_graph: n must be at least 2");
    }
    if (!(weight_upper > 0.0) || sparse_factor < 0.0 || sparse_factor >= weight_upper) {
        throw std::invalid_argument(
            "random_graph: requires 0 <= sparse_factor < weight_upper");
    }
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double draw = rng.uniform(weight_upper);
            w[i * n + j] = draw < sparse_factor ? 0.0 : draw;
        }
    }
    return SocialGraph(n, std::move(w));
}

std::vector<double> laplacian(const SocialGraph& g) {
    const std::size_t n = g.order();
    std::vector<double> l(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        double degree = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            degree += g.weight(i, j); // fixed ascending-j summation order
        }
        for (std::size_t j = 0; j < n; ++j) {
            l[i * n + j] = (i == j) ? degree - g.weight(i, j) : -g.weight(i, j);
        }
    }
    return l;
}

bool has_spanning_tree(const SocialGraph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> stack;
    std::vector<char> seen(n);
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, root);
        seen[root] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t j = stack.back();
            stack.pop_back();
            // out-neighbors of j: all i with an arc j -> i, i.e. w(i, j) > 0
            for (std::size_t i = 0; i < n; ++i) {
                if (!seen[i] && g.weight(i, j) > 0.0) {
                    seen[i] = 1;
                    ++reached;
                    stack.push_back(i);
                }
            }
        }
        if (reached == n) return true;
    }
    return false;
}

void write_edge_list(const SocialGraph& g, std::ostream& out) {
    out << "# migrasim graph n=" << g.order() << " seed=" << g.generation_seed
        << "\n";
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = g.weight(i, j);
            if (w > 0.0) {
                out << j << ' ' << i << ' ' << shortest(w) << '\n';
            }
        }
    }
}

SocialGraph read_edge_list(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw std::runtime_error("edge list: missing header");
    }
    std::size_t n = 0;
    std::uint64_t seed = 0;
    {
        const auto npos = header.find("n=");
        const auto spos = header.find("seed=");
        if (header.rfind("# migrasim graph", 0) != 0 || npos == std::string::npos ||
            spos == std::string::npos) {
            throw std::runtime_error("edge list: malformed header");
        }
        n = std::stoull(header.substr(npos + 2));
        seed = std::stoull(header.substr(spos + 5));
    }
    std::vector<double> w(n * n, 0.0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::size_t from = 0, to = 0;
        double weight = 0.0;
        if (!(ls >> from >> to >> weight)) {
            throw std::runtime_error("edge list: malformed arc line: " + line);
        }
        if (from >= n || to >= n) {
            throw std::runtime_error("edge list: vertex index out of range");
        }
        w[to * n + from] = weight;
    }
    SocialGraph g(n, std::move(w));
    g.generation_seed = seed;
    return g;
}

} // namespace migrasim
