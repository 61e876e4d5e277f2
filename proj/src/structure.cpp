#include "rcds/structure.hpp"

#include <algorithm>

namespace rcds {

namespace {

struct Kuhn {
    const Pattern& A;
    std::vector<int> row_match, col_match;
    std::vector<char> visited;

    explicit Kuhn(const Pattern& a)
        : A(a),
          row_match(static_cast<std::size_t>(a.rows()), -1),
          col_match(static_cast<std::size_t>(a.cols()), -1),
          visited(static_cast<std::size_t>(a.cols()), 0) {}

    bool augment(int i) {
        for (int j = 0; j < A.cols(); ++j) {
            if (!A.at(i, j) || visited[static_cast<std::size_t>(j)]) continue;
            visited[static_cast<std::size_t>(j)] = 1;
            int other = col_match[static_cast<std::size_t>(j)];
            if (other == -1 || augment(other)) {
                row_match[static_cast<std::size_t>(i)] = j;
                col_match[static_cast<std::size_t>(j)] = i;
                return true;
            }
        }
        return false;
    }

    Matching run() {
        Matching m;
        m.row_match.assign(static_cast<std::size_t>(A.rows()), -1);
        for (int i = 0; i < A.rows(); ++i) {
            std::fill(visited.begin(), visited.end(), 0);
            if (augment(i)) ++m.size;
        }
        m.row_match = row_match;
        return m;
    }
};

} // namespace

Matching max_matching(const Pattern& A) {
    return Kuhn(A).run();
}

std::optional<Permutation> find_support_diagonal(const Pattern& A) {
    const int n = A.n();
    Matching m = max_matching(A);
    if (m.size != n) return std::nullopt;
    return Permutation(m.row_match);
}

bool is_fully_indecomposable(const Pattern& A) {
    const int n = A.n();
    if (n == 1) return A.at(0, 0);

    auto diag = find_support_diagonal(A);
    if (!diag) return false;  // fully indecomposable implies total support

    // Permute columns so the diagonal sits on the main diagonal, then test
    // strong connectivity of the digraph with an edge i -> j per off-diagonal 1.
    const Permutation& p = *diag;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && A.at(i, p(j))) adj[static_cast<std::size_t>(i)].push_back(j);

    // Tarjan SCC, iterative.
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int next_index = 0, components = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int start = 0; start < n; ++start) {
        if (index[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        index[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = next_index++;
        stack.push_back(start);
        on_stack[static_cast<std::size_t>(start)] = 1;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < adj[static_cast<std::size_t>(v)].size()) {
                int w = adj[static_cast<std::size_t>(v)][child++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    ++components;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = 0;
                    } while (w != v);
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty())
                    low[static_cast<std::size_t>(frames.back().v)] =
                        std::min(low[static_cast<std::size_t>(frames.back().v)],
                                 low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return components == 1;
}

} // namespace rcds
