#include "chordck/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

namespace chordck {

namespace {

// Individualization-refinement search for the lexicographically least
// adjacency bit string over all refinement-compatible orderings. Automorphisms
// discovered at equal-code leaves prune sibling branches (orbit pruning), which
// keeps highly symmetric graphs like complete graphs linear instead of
// factorial.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
        code_bytes_ = static_cast<std::size_t>((n_ * (n_ - 1) / 2 + 7) / 8);
    }

    std::string run() {
        if (n_ == 0) return {};
        std::array<int, kCapacity> col{};
        col.fill(0);
        prefix_len_ = 0;
        have_best_ = false;
        generators_.clear();
        search(col, 1);
        return best_;
    }

    std::vector<int> best_ordering() const {
        return {best_pos_.begin(), best_pos_.begin() + n_};
    }

private:
    using Coloring = std::array<int, kCapacity>;
    using Perm = std::array<int, kCapacity>;

    // Equitable refinement of the ordered partition described by col. Cell ids
    // are contiguous and their order is label-invariant: sub-cells inherit the
    // parent cell position and tie-break by neighbor-count signature.
    void refine(Coloring& col, int& k) const {
        std::array<VertexSet, kCapacity> mask;
        std::array<std::array<int, kCapacity>, kCapacity> cnt;
        std::array<int, kCapacity> order;
        while (k < n_) {
            for (int c = 0; c < k; ++c) mask[static_cast<std::size_t>(c)] = 0;
            for (int v = 0; v < n_; ++v)
                mask[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])] |= vbit(v);
            for (int v = 0; v < n_; ++v)
                for (int c = 0; c < k; ++c)
                    cnt[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] =
                        set_size(g_.neighbors(v) & mask[static_cast<std::size_t>(c)]);
            std::iota(order.begin(), order.begin() + n_, 0);
            const auto less = [&](int a, int b) {
                if (col[static_cast<std::size_t>(a)] != col[static_cast<std::size_t>(b)])
                    return col[static_cast<std::size_t>(a)] < col[static_cast<std::size_t>(b)];
                return std::lexicographical_compare(
                    cnt[static_cast<std::size_t>(a)].begin(), cnt[static_cast<std::size_t>(a)].begin() + k,
                    cnt[static_cast<std::size_t>(b)].begin(), cnt[static_cast<std::size_t>(b)].begin() + k);
            };
            std::sort(order.begin(), order.begin() + n_, less);
            Coloring next{};
            int nk = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && less(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(i)]))
                    ++nk;
                next[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = nk;
            }
            ++nk;
            if (nk == k) break;
            col = next;
            k = nk;
        }
    }

    void search(Coloring col, int k) {
        refine(col, k);
        if (k == n_) {
            leaf(col);
            return;
        }
        // First (smallest id) cell with at least two members.
        std::array<int, kCapacity> size{};
        for (int v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
        int cell = 0;
        while (size[static_cast<std::size_t>(cell)] < 2) ++cell;

        std::array<int, kCapacity> tried;
        int tried_count = 0;
        for (int v = 0; v < n_; ++v) {
            if (col[static_cast<std::size_t>(v)] != cell) continue;
            if (in_tried_orbit(v, tried, tried_count)) continue;
            tried[static_cast<std::size_t>(tried_count++)] = v;

            Coloring child = col;
            for (int u = 0; u < n_; ++u) {
                if (child[static_cast<std::size_t>(u)] > cell ||
                    (child[static_cast<std::size_t>(u)] == cell && u != v))
                    ++child[static_cast<std::size_t>(u)];
            }
            prefix_[static_cast<std::size_t>(prefix_len_++)] = v;
            search(child, k + 1);
            --prefix_len_;
        }
    }

    // True when v lies in the orbit of an already-tried candidate under the
    // subgroup of discovered automorphisms fixing the current prefix
    // pointwise. Such a branch reproduces an explored subtree's code set.
    bool in_tried_orbit(int v, const std::array<int, kCapacity>& tried, int tried_count) {
        if (tried_count == 0 || generators_.empty()) return false;
        std::array<int, kCapacity> parent;
        std::iota(parent.begin(), parent.begin() + n_, 0);
        const auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const Perm& p : generators_) {
            bool fixes = true;
            for (int i = 0; i < prefix_len_; ++i) {
                const int u = prefix_[static_cast<std::size_t>(i)];
                if (p[static_cast<std::size_t>(u)] != u) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x), b = find(p[static_cast<std::size_t>(x)]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        }
        if (!any) return false;
        const int root = find(v);
        for (int i = 0; i < tried_count; ++i)
            if (find(tried[static_cast<std::size_t>(i)]) == root) return true;
        return false;
    }

    void leaf(const Coloring& col) {
        std::array<int, kCapacity> pos;
        for (int v = 0; v < n_; ++v) pos[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])] = v;

        std::string code(code_bytes_, '\0');
        int bit = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                if (g_.adjacent(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]))
                    code[static_cast<std::size_t>(bit >> 3)] |=
                        static_cast<char>(0x80u >> (bit & 7));
                ++bit;
            }

        if (!have_best_ || code < best_) {
            best_ = std::move(code);
            best_pos_ = pos;
            have_best_ = true;
        } else if (code == best_) {
            // Two orderings with identical codes compose to an automorphism.
            Perm gamma;
            for (int i = 0; i < n_; ++i)
                gamma[static_cast<std::size_t>(best_pos_[static_cast<std::size_t>(i)])] =
                    pos[static_cast<std::size_t>(i)];
            bool identity = true;
            for (int v = 0; v < n_ && identity; ++v)
                identity = gamma[static_cast<std::size_t>(v)] == v;
            if (!identity &&
                std::find(generators_.begin(), generators_.end(), gamma) == generators_.end())
                generators_.push_back(gamma);
        }
    }

    const Graph& g_;
    int n_;
    std::size_t code_bytes_;
    std::string best_;
    Perm best_pos_{};
    bool have_best_ = false;
    std::vector<Perm> generators_;
    std::array<int, kCapacity> prefix_{};
    int prefix_len_ = 0;
};

} // namespace

CanonicalCode canonical_form(const Graph& g) {
    Canonizer c(g);
    std::string bits = c.run();
    std::string bytes;
    bytes.reserve(1 + bits.size());
    bytes.push_back(static_cast<char>(g.order()));
    bytes += bits;
    return CanonicalCode{std::move(bytes)};
}

std::vector<int> canonical_ordering(const Graph& g) {
    Canonizer c(g);
    c.run();
    return c.best_ordering();
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(static_cast<std::size_t>(g.order())), dh(dg.size());
    for (int v = 0; v < g.order(); ++v) {
        dg[static_cast<std::size_t>(v)] = g.degree(v);
        dh[static_cast<std::size_t>(v)] = h.degree(v);
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace chordck
