#pragma once

#include "wheeldist/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace wheeldist {

/// Simple undirected graph on vertices 0..n-1 with a dense 0/1 adjacency.
class Graph {
public:
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    std::size_t order() const { return n_; }
    void add_edge(std::size_t i, std::size_t j);
    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
    std::size_t degree(std::size_t i) const;
    /// Edges (i, j) with i < j, 0-based, in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    bool is_symmetric() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> adj_;
};

/// W_n: hub at 0-based vertex 0 (label 1), rim vertices 1..n-1 (labels
/// 2..n) forming a cycle in label order with n closing back to 2.
struct WheelModel {
    std::size_t n;
    Graph graph;
};

/// Throws std::invalid_argument("too small") for n < 4.
WheelModel build_wheel(std::size_t n);

/// C_n on vertices 0..n-1. Used as a non-wheel control.
Graph cycle_graph(std::size_t n);

/// All-pairs shortest path lengths by one BFS per source.
/// Throws std::invalid_argument("disconnected") if some pair is unreachable.
Matrix bfs_distances(const Graph& g);
inline Matrix bfs_distances(const WheelModel& w) { return bfs_distances(w.graph); }

struct DistanceMatrix {
    Matrix matrix;
};

struct SpecialLaplacian {
    Matrix matrix;
};

/// u = (0, 1, 2, ..., 2, 1) of length n-1 with n-4 twos; D~ = Circ(u').
CirculantSpec rim_distance_generator(std::size_t n);

/// [[0, 1'], [1, D~]]. Accepts odd n. Throws for n < 4.
DistanceMatrix distance_matrix(std::size_t n);

/// c^k: ones at 1-based positions k+1 and n-k, length n-1.
/// Requires n even >= 4 and 1 <= k <= n/2 - 1.
Vector c_vector(std::size_t n, std::size_t k);

/// The special Laplacian of W_n, assembled from its defining sum of signed,
/// weighted circulant blocks. Throws std::invalid_argument("even n required")
/// for odd n or n < 4.
SpecialLaplacian special_laplacian(std::size_t n);

/// (sum_{k=1}^{n/2-1} (-1)^k (n-1-2k), (2-n)/2). Both components agree.
std::pair<BigRational, BigRational> alternating_sum_identity(std::size_t n);

/// Weight (-1)^k (n-1-2k)/2 of the k-th circulant block.
BigRational block_weight(std::size_t n, std::size_t k);

/// q^k = c^k' D~ by exact vector-matrix multiplication.
Vector q_row_product(std::size_t n, std::size_t k);
/// Same, reusing an already materialized D~.
Vector q_row_product(const Matrix& rim, std::size_t n, std::size_t k);

/// q^k from the case table: k = 1, k = n/2-1, and 1 < k < n/2-1.
/// n = 4 has no applicable closed form and throws.
Vector q_row_closed_form(std::size_t n, std::size_t k);

/// sum_k (-1)^k ((n-1-2k)/2) q^k summed directly.
Vector f_vector_direct(std::size_t n);

/// (-1, (3-n)/2, 2-n, ..., 2-n, (3-n)/2). Requires n even >= 6.
Vector f_vector(std::size_t n);

/// (1/4)(5-n, 1, ..., 1) of length n. Requires n even >= 4.
Vector w_vector(std::size_t n);

/// Edge list JSON {"n": n, "edges": [[i, j], ...]} with 1-based labels.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace wheeldist
