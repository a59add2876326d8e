#include "monochrome/multigraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

#include "monochrome/errors.hpp"

namespace monochrome {

namespace {

using Matrix = std::array<std::array<std::uint8_t, MultiGraphPattern::kMaxVertices>, MultiGraphPattern::kMaxVertices>;

char digit(std::uint8_t m) { return static_cast<char>(m < 10 ? '0' + m : 'a' + (m - 10)); }

// Vertex invariant used to split vertices into cells before the permutation
// search: (weighted degree, simple degree, sorted incident multiplicities).
using Invariant = std::tuple<std::size_t, std::size_t, std::vector<std::uint8_t>>;

std::vector<Invariant> invariants(std::size_t n, const Matrix& mat) {
    std::vector<Invariant> inv(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t weighted = 0, simple = 0;
        std::vector<std::uint8_t> mults;
        for (std::size_t w = 0; w < n; ++w) {
            if (mat[v][w] == 0) continue;
            weighted += mat[v][w];
            ++simple;
            mults.push_back(mat[v][w]);
        }
        std::sort(mults.begin(), mults.end());
        inv[v] = {weighted, simple, std::move(mults)};
    }
    return inv;
}

// Branch-and-bound search for the lexicographically smallest column-major
// upper-triangle string among orderings that keep vertices in invariant
// order.
class CanonicalSearch {
public:
    CanonicalSearch(std::size_t n, const Matrix& mat) : n_(n), mat_(mat) {
        auto inv = invariants(n, mat);
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return inv[a] < inv[b]; });
        cell_of_position_.resize(n);
        std::size_t cell = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (p > 0 && inv[order[p]] != inv[order[p - 1]]) ++cell;
            cell_of_position_[p] = cell;
        }
        cell_of_vertex_.resize(n);
        for (std::size_t p = 0; p < n; ++p) cell_of_vertex_[order[p]] = cell_of_position_[p];
        for (std::size_t p = 0; p < n; ++p) {
            signature_ += std::to_string(std::get<0>(inv[order[p]])) + ".";
        }
    }

    std::string run() {
        used_.assign(n_, false);
        assignment_.assign(n_, 0);
        current_.clear();
        best_.clear();
        have_best_ = false;
        search(0, true);
        return "v" + std::to_string(n_) + "|" + signature_ + "|" + best_;
    }

    /// Vertex placed at each canonical position by the last run().
    const std::vector<std::size_t>& best_order() const noexcept { return best_order_; }

private:
    void search(std::size_t position, bool tied) {
        if (position == n_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                best_order_ = assignment_;
                have_best_ = true;
            }
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v] || cell_of_vertex_[v] != cell_of_position_[position]) continue;
            const std::size_t mark = current_.size();
            for (std::size_t i = 0; i < position; ++i) current_.push_back(digit(mat_[assignment_[i]][v]));
            bool still_tied = false;
            if (have_best_ && tied) {
                const int cmp = current_.compare(0, current_.size(), best_, 0, current_.size());
                if (cmp > 0) {
                    current_.resize(mark);
                    continue;
                }
                still_tied = cmp == 0;
            }
            used_[v] = true;
            assignment_[position] = v;
            search(position + 1, have_best_ ? still_tied : true);
            used_[v] = false;
            current_.resize(mark);
        }
    }

    std::size_t n_;
    const Matrix& mat_;
    std::vector<std::size_t> cell_of_position_;
    std::vector<std::size_t> cell_of_vertex_;
    std::string signature_;
    std::vector<bool> used_;
    std::vector<std::size_t> assignment_;
    std::string current_;
    std::string best_;
    std::vector<std::size_t> best_order_;
    bool have_best_ = false;
};

}  // namespace

MultiGraphPattern MultiGraphPattern::from_edges(std::size_t n, std::span<const std::pair<int, int>> edges) {
    if (n > kMaxVertices) {
        fail(ErrorCode::PatternTooLarge, "multigraph pattern with " + std::to_string(n) + " vertices exceeds " +
                                             std::to_string(kMaxVertices));
    }
    std::map<std::pair<int, int>, int> mult;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
            fail(ErrorCode::OutOfRange, "pattern edge outside vertex range");
        }
        if (a == b) fail(ErrorCode::SelfLoop, "pattern edge is a loop");
        ++mult[{std::min(a, b), std::max(a, b)}];
    }
    MultiGraphPattern p;
    p.n_ = n;
    p.total_edges_ = edges.size();
    for (auto [pair, m] : mult) {
        p.edges_.push_back({static_cast<std::uint8_t>(pair.first), static_cast<std::uint8_t>(pair.second),
                            static_cast<std::uint8_t>(m)});
    }
    p.finalize();
    return p;
}

MultiGraphPattern MultiGraphPattern::from_graph(const Graph& simple) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : simple.edges()) edges.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
    return from_edges(simple.vertex_count(), edges);
}

void MultiGraphPattern::finalize() {
    degree_.assign(n_, 0);
    Matrix mat{};
    for (const auto& e : edges_) {
        degree_[e.u] += e.multiplicity;
        degree_[e.v] += e.multiplicity;
        mat[e.u][e.v] = mat[e.v][e.u] = e.multiplicity;
    }
    for (std::size_t v = 0; v < n_; ++v) {
        if (degree_[v] == 0) fail(ErrorCode::PreconditionViolated, "multigraph pattern has an isolated vertex");
    }
    // Components are canonicalized separately and their keys sorted, which
    // keeps the permutation search inside a single component.
    std::vector<int> comp(n_, -1);
    std::vector<std::string> keys;
    std::vector<std::vector<std::size_t>> orders;
    for (std::size_t start = 0; start < n_; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<std::size_t> members{start};
        comp[start] = static_cast<int>(keys.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t w = 0; w < n_; ++w) {
                if (mat[members[i]][w] != 0 && comp[w] < 0) {
                    comp[w] = comp[start];
                    members.push_back(w);
                }
            }
        }
        Matrix sub{};
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b) sub[a][b] = mat[members[a]][members[b]];
        CanonicalSearch search(members.size(), sub);
        keys.push_back(search.run());
        std::vector<std::size_t> order;
        for (auto local : search.best_order()) order.push_back(members[local]);
        orders.push_back(std::move(order));
    }
    std::vector<std::size_t> by_key(keys.size());
    for (std::size_t i = 0; i < by_key.size(); ++i) by_key[i] = i;
    std::stable_sort(by_key.begin(), by_key.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });

    key_.clear();
    std::vector<std::size_t> label(n_);
    std::size_t next = 0;
    for (auto c : by_key) {
        key_ += (key_.empty() ? "" : "+") + keys[c];
        for (auto v : orders[c]) label[v] = next++;
    }
    std::vector<MultiEdge> relabeled;
    for (const auto& e : edges_) {
        const auto a = static_cast<std::uint8_t>(label[e.u]);
        const auto b = static_cast<std::uint8_t>(label[e.v]);
        relabeled.push_back({std::min(a, b), std::max(a, b), e.multiplicity});
    }
    std::sort(relabeled.begin(), relabeled.end(),
              [](const MultiEdge& x, const MultiEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    canonical_listing_ = listing(relabeled);
}

std::size_t MultiGraphPattern::min_degree() const noexcept {
    return n_ == 0 ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

std::size_t MultiGraphPattern::component_count() const { return monochrome::component_count(simple_graph()); }

Graph MultiGraphPattern::simple_graph() const {
    std::vector<Edge> edges;
    for (const auto& e : edges_) edges.push_back({e.u, e.v});
    return Graph::from_edges(n_, edges);
}

bool MultiGraphPattern::is_simple() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(), [](const MultiEdge& e) { return e.multiplicity == 1; });
}

std::string MultiGraphPattern::describe() const { return listing(edges_); }

std::string MultiGraphPattern::listing(const std::vector<MultiEdge>& edges) {
    std::ostringstream out;
    bool first = true;
    for (const auto& e : edges) {
        if (!first) out << ' ';
        first = false;
        out << int(e.u) << '-' << int(e.v);
        if (e.multiplicity > 1) out << 'x' << int(e.multiplicity);
    }
    return out.str();
}

std::string MultiGraphPattern::name() const {
    const std::size_t distinct = edges_.size();
    const std::size_t components = component_count();
    if (distinct == 1) {
        static const char* names[] = {"", "single-edge", "doubled-edge", "tripled-edge", "quadrupled-edge"};
        if (edges_[0].multiplicity <= 4) return names[edges_[0].multiplicity];
    }
    if (is_simple()) {
        bool all_deg_le2 = std::all_of(degree_.begin(), degree_.end(), [](auto d) { return d <= 2; });
        if (components == distinct && n_ == 2 * distinct) return std::to_string(distinct) + "-matching";
        if (components == 1 && all_deg_le2) {
            if (distinct == n_) return std::to_string(n_) + "-cycle";
            if (distinct + 1 == n_) return std::to_string(distinct) + "-path";
        }
        if (components == 1 && distinct + 1 == n_ && *std::max_element(degree_.begin(), degree_.end()) == distinct)
            return std::to_string(distinct) + "-star";
    }
    if (components == distinct && n_ == 2 * distinct &&
        std::all_of(edges_.begin(), edges_.end(), [](const MultiEdge& e) { return e.multiplicity == 2; })) {
        return std::to_string(distinct) + "-doubled-matching";
    }
    return canonical_listing_;
}

std::uint64_t automorphism_count(const Graph& h) {
    const std::size_t n = h.vertex_count();
    if (n > kMaxAutomorphismVertices) {
        fail(ErrorCode::PatternTooLarge, "automorphism search limited to " +
                                             std::to_string(kMaxAutomorphismVertices) + " vertices");
    }
    std::vector<Vertex> image(n);
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;
    // Extend the partial map vertex by vertex, checking adjacency against the
    // already-mapped prefix.
    auto extend = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || h.degree(w) != h.degree(static_cast<Vertex>(v))) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) {
                ok = h.has_edge(u, static_cast<Vertex>(v)) == h.has_edge(image[u], w);
            }
            if (!ok) continue;
            used[w] = true;
            image[v] = w;
            self(self, v + 1);
            used[w] = false;
        }
    };
    extend(extend, 0);
    return count;
}

}  // namespace monochrome
