#include "wheeldist/wheel.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace wheeldist {

namespace {

void require_even(std::size_t n)
{
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("even n required");
}

void require_k(std::size_t n, std::size_t k)
{
    require_even(n);
    if (k < 1 || k > n / 2 - 1) throw std::out_of_range("k out of range");
}

}  // namespace

void Graph::add_edge(std::size_t i, std::size_t j)
{
    if (i >= n_ || j >= n_ || i == j) throw std::invalid_argument("bad edge");
    adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
}

std::size_t Graph::degree(std::size_t i) const
{
    std::size_t d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += adj_[i * n_ + j];
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

bool Graph::is_symmetric() const
{
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (adj_[i * n_ + j] != adj_[j * n_ + i]) return false;
    return true;
}

WheelModel build_wheel(std::size_t n)
{
    if (n < 4) throw std::invalid_argument("too small");
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v + 1 < n ? v + 1 : 1);
    }
    return WheelModel{n, std::move(g)};
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3) throw std::invalid_argument("too small");
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Matrix bfs_distances(const Graph& g)
{
    constexpr long unseen = std::numeric_limits<long>::max();
    const std::size_t n = g.order();
    Matrix d(n, n);
    std::vector<long> dist(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t u = 0; u < n; ++u)
                if (g.adjacent(v, u) && dist[u] == unseen) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (dist[t] == unseen) throw std::invalid_argument("disconnected");
            d(s, t) = dist[t];
        }
    }
    return d;
}

CirculantSpec rim_distance_generator(std::size_t n)
{
    if (n < 4) throw std::invalid_argument("too small");
    Vector u(n - 1, BigRational(2));
    u[0] = 0;
    u[1] = 1;
    u[n - 2] = 1;
    return CirculantSpec{std::move(u)};
}

DistanceMatrix distance_matrix(std::size_t n)
{
    const Matrix rim = circulant(rim_distance_generator(n));
    Matrix d(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        d(0, i) = d(i, 0) = 1;
        for (std::size_t j = 1; j < n; ++j) d(i, j) = rim(i - 1, j - 1);
    }
    return DistanceMatrix{std::move(d)};
}

Vector c_vector(std::size_t n, std::size_t k)
{
    require_k(n, k);
    Vector c(n - 1);
    c[k] = 1;          // position k+1
    c[n - k - 1] = 1;  // position n-k
    return c;
}

BigRational block_weight(std::size_t n, std::size_t k)
{
    const BigRational magnitude(static_cast<long>(n) - 1 - 2 * static_cast<long>(k), 2);
    return k % 2 == 0 ? magnitude : -magnitude;
}

SpecialLaplacian special_laplacian(std::size_t n)
{
    require_even(n);
    Matrix l = BigRational(static_cast<long>(n) - 1, 2) * Matrix::identity(n);
    const BigRational half(1, 2);
    for (std::size_t i = 1; i < n; ++i) {
        l(0, i) -= half;
        l(i, 0) -= half;
    }
#ifdef WHEELDIST_INJECT_LAPLACIAN_FAULT
    // Deliberate off-by-one for the CLI fault-injection test: drops the last block.
    const std::size_t last_k = n / 2 - 2;
#else
    const std::size_t last_k = n / 2 - 1;
#endif
    // Circ(c^k) row i has c^k_g at column (i + g) mod (n-1); only the two
    // nonzero generator entries contribute.
    const std::size_t m = n - 1;
    for (std::size_t k = 1; k <= last_k; ++k) {
        const Vector c = c_vector(n, k);
        const BigRational weight = block_weight(n, k);
        for (std::size_t g = 0; g < m; ++g) {
            if (c[g].is_zero()) continue;
            const BigRational entry = weight * c[g];
            for (std::size_t i = 0; i < m; ++i) l(i + 1, (i + g) % m + 1) += entry;
        }
    }
    return SpecialLaplacian{std::move(l)};
}

std::pair<BigRational, BigRational> alternating_sum_identity(std::size_t n)
{
    require_even(n);
    BigRational lhs(0);
    for (std::size_t k = 1; k <= n / 2 - 1; ++k) lhs += 2 * block_weight(n, k);
    return {lhs, BigRational(2 - static_cast<long>(n), 2)};
}

Vector q_row_product(std::size_t n, std::size_t k)
{
    return q_row_product(circulant(rim_distance_generator(n)), n, k);
}

Vector q_row_product(const Matrix& rim, std::size_t n, std::size_t k)
{
    if (rim.rows() != n - 1 || rim.cols() != n - 1) throw std::invalid_argument("rim block has wrong order");
    return c_vector(n, k) * rim;
}

Vector q_row_closed_form(std::size_t n, std::size_t k)
{
    require_k(n, k);
    if (n < 6) throw std::invalid_argument("no closed form for n = 4");
    const std::size_t len = n - 1;
    Vector q(len, BigRational(4));
    // Positions below are 1-based, as in the case table.
    const auto set = [&](std::size_t pos, long value) { q[pos - 1] = value; };
    const std::size_t half = n / 2;
    if (k == 1) {
        // (2, 2, 3, 4, ..., 4, 3, 2) with n-6 fours
        set(1, 2);
        set(2, 2);
        set(3, 3);
        set(len - 1, 3);
        set(len, 2);
    } else if (k == half - 1) {
        // n/2-2 fours, then 3, 1, 1, 3, then n/2-3 fours
        set(half - 1, 3);
        set(half, 1);
        set(half + 1, 1);
        set(half + 2, 3);
    } else {
        set(k + 1, 2);
        set(n - k, 2);
        set(k, 3);
        set(k + 2, 3);
        set(n - k - 1, 3);
        set(n - k + 1, 3);
    }
    return q;
}

Vector f_vector_direct(std::size_t n)
{
    require_even(n);
    const Matrix rim = circulant(rim_distance_generator(n));
    Vector f(n - 1);
    for (std::size_t k = 1; k <= n / 2 - 1; ++k) f += block_weight(n, k) * (c_vector(n, k) * rim);
    return f;
}

Vector f_vector(std::size_t n)
{
    require_even(n);
    if (n < 6) throw std::invalid_argument("f closed form requires n >= 6");
    const long nn = static_cast<long>(n);
    Vector f(n - 1, BigRational(2 - nn));
    f[0] = -1;
    f[1] = BigRational(3 - nn, 2);
    f[n - 2] = BigRational(3 - nn, 2);
    return f;
}

Vector w_vector(std::size_t n)
{
    require_even(n);
    Vector w(n, BigRational(1, 4));
    w[0] = BigRational(5 - static_cast<long>(n), 4);
    return w;
}

nlohmann::json to_json(const Graph& g)
{
    auto edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
    return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    Graph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) {
        const auto a = e.at(0).get<std::size_t>();
        const auto b = e.at(1).get<std::size_t>();
        if (a < 1 || b < 1) throw std::invalid_argument("labels are 1-based");
        g.add_edge(a - 1, b - 1);
    }
    return g;
}

}  // namespace wheeldist
