#include "qehrhart/poset.hpp"

#include <algorithm>
#include <map>

#include "qehrhart/algebra.hpp"
#include "qehrhart/errors.hpp"

namespace qe {

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0) throw PreconditionError("negative poset size");
    Poset p;
    p.n_ = n;
    p.leq_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) p.leq_[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    for (const auto& [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw PreconditionError("cover index out of range");
        p.leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!p.leq_[static_cast<size_t>(i)][static_cast<size_t>(k)]) continue;
            for (int j = 0; j < n; ++j)
                if (p.leq_[static_cast<size_t>(k)][static_cast<size_t>(j)])
                    p.leq_[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.leq(i, j) && p.leq(j, i))
                throw ParseError("cover relations contain a cycle through " + std::to_string(i) + " and " +
                                 std::to_string(j));
    return p;
}

Poset Poset::chain(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::chain_product(int m, int n) {
    std::vector<std::pair<int, int>> covers;
    auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (i + 1 < m) covers.emplace_back(id(i, j), id(i + 1, j));
            if (j + 1 < n) covers.emplace_back(id(i, j), id(i, j + 1));
        }
    return from_covers(m * n, covers);
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!less(i, j)) continue;
            bool direct = true;
            for (int k = 0; k < n_ && direct; ++k)
                if (less(i, k) && less(k, j)) direct = false;
            if (direct) out.emplace_back(i, j);
        }
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
        bool minimal = true;
        for (int j = 0; j < n_ && minimal; ++j)
            if (less(j, i)) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
        bool maximal = true;
        for (int j = 0; j < n_ && maximal; ++j)
            if (less(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::topological_order() const {
    std::vector<int> order;
    std::vector<bool> placed(static_cast<size_t>(n_), false);
    for (int step = 0; step < n_; ++step) {
        for (int i = 0; i < n_; ++i) {
            if (placed[static_cast<size_t>(i)]) continue;
            bool ready = true;
            for (int j = 0; j < n_ && ready; ++j)
                if (!placed[static_cast<size_t>(j)] && less(j, i)) ready = false;
            if (ready) {
                order.push_back(i);
                placed[static_cast<size_t>(i)] = true;
                break;
            }
        }
    }
    return order;
}

std::vector<std::vector<int>> Poset::linear_extensions() const {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<bool> placed(static_cast<size_t>(n_), false);
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == n_) {
            out.push_back(current);
            return;
        }
        for (int i = 0; i < n_; ++i) {
            if (placed[static_cast<size_t>(i)]) continue;
            bool ready = true;
            for (int j = 0; j < n_ && ready; ++j)
                if (!placed[static_cast<size_t>(j)] && less(j, i)) ready = false;
            if (!ready) continue;
            placed[static_cast<size_t>(i)] = true;
            current.push_back(i);
            self(self);
            current.pop_back();
            placed[static_cast<size_t>(i)] = false;
        }
    };
    recurse(recurse);
    return out;
}

Poset derive_poset(const Poset& p, PosetDerivation kind) {
    int n = p.size();
    std::vector<std::pair<int, int>> covers;
    switch (kind) {
        case PosetDerivation::Opposite:
            for (const auto& [a, b] : p.covers()) covers.emplace_back(b, a);
            return Poset::from_covers(n, covers);
        case PosetDerivation::AddMin:
            covers = p.covers();
            for (int i = 0; i < n; ++i) covers.emplace_back(n, i);
            return Poset::from_covers(n + 1, covers);
        case PosetDerivation::AddMax:
            covers = p.covers();
            for (int i = 0; i < n; ++i) covers.emplace_back(i, n);
            return Poset::from_covers(n + 1, covers);
    }
    throw PreconditionError("unknown poset derivation");
}

std::pair<LatticePolytope, LinearForm> order_polytope(const Poset& p) {
    int n = p.size();
    std::vector<Point> vertices;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool filter = true;
        for (int i = 0; i < n && filter; ++i) {
            if (!((mask >> i) & 1)) continue;
            for (int j = 0; j < n && filter; ++j)
                if (p.less(i, j) && !((mask >> j) & 1)) filter = false;
        }
        if (!filter) continue;
        Point v(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = (mask >> i) & 1;
        vertices.push_back(std::move(v));
    }
    std::vector<Facet> facets;
    for (int i : p.minimal_elements()) {
        Point normal(static_cast<size_t>(n), 0);
        normal[static_cast<size_t>(i)] = -1;
        facets.push_back({std::move(normal), 0});
    }
    for (int i : p.maximal_elements()) {
        Point normal(static_cast<size_t>(n), 0);
        normal[static_cast<size_t>(i)] = 1;
        facets.push_back({std::move(normal), 1});
    }
    for (const auto& [a, b] : p.covers()) {
        Point normal(static_cast<size_t>(n), 0);
        normal[static_cast<size_t>(a)] = 1;
        normal[static_cast<size_t>(b)] = -1;
        facets.push_back({std::move(normal), 0});
    }
    LatticePolytope q = LatticePolytope::from_derived(n, std::move(vertices), std::move(facets), {});
    LinearForm lambda{std::vector<Coord>(static_cast<size_t>(n), 1)};
    return {std::move(q), std::move(lambda)};
}

QRat colouring_sum(const Poset& p, int n, bool strict) {
    if (n < 0) throw PreconditionError("negative colour bound");
    int lo = strict ? 1 : 0;
    int hi = strict ? n - 1 : n;
    std::vector<int> order = p.topological_order();
    std::map<long, mpz_class> by_total;
    std::vector<int> colour(static_cast<size_t>(p.size()), 0);
    auto recurse = [&](auto&& self, size_t pos, long total) -> void {
        if (pos == order.size()) {
            by_total[total] += 1;
            return;
        }
        int element = order[pos];
        int least = lo;
        for (size_t prev = 0; prev < pos; ++prev) {
            int other = order[prev];
            if (!p.less(other, element)) continue;
            int bound = colour[static_cast<size_t>(other)] + (strict ? 1 : 0);
            least = std::max(least, bound);
        }
        for (int c = least; c <= hi; ++c) {
            colour[static_cast<size_t>(element)] = c;
            self(self, pos + 1, total + c);
        }
    };
    recurse(recurse, 0, 0);
    QRat acc;
    for (const auto& [total, count] : by_total)
        acc += QRat(ZPoly(count)) * QRat::q_power(strict ? -static_cast<int>(total) : static_cast<int>(total));
    return acc;
}

SeriesTQ descent_numerator(const Poset& p) {
    // Stanley's descent formula applies to the opposite order: its linear
    // extensions under a natural labelling generate the series of Q_P.
    Poset opposite = derive_poset(p, PosetDerivation::Opposite);
    std::vector<int> topo = opposite.topological_order();
    std::vector<int> label(static_cast<size_t>(p.size()), 0);
    for (size_t pos = 0; pos < topo.size(); ++pos) label[static_cast<size_t>(topo[pos])] = static_cast<int>(pos) + 1;
    std::map<int, std::map<int, mpz_class>> by_descents;  // des -> maj -> count
    for (const auto& extension : opposite.linear_extensions()) {
        int des = 0, maj = 0;
        for (size_t i = 0; i + 1 < extension.size(); ++i) {
            if (label[static_cast<size_t>(extension[i])] > label[static_cast<size_t>(extension[i + 1])]) {
                des += 1;
                maj += static_cast<int>(i) + 1;
            }
        }
        by_descents[des][maj] += 1;
    }
    std::vector<QRat> numerator;
    for (const auto& [des, majs] : by_descents) {
        if (des >= static_cast<int>(numerator.size())) numerator.resize(static_cast<size_t>(des) + 1);
        std::vector<mpz_class> coeffs;
        for (const auto& [maj, count] : majs) {
            if (maj >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(maj) + 1);
            coeffs[static_cast<size_t>(maj)] = count;
        }
        numerator[static_cast<size_t>(des)] = QRat(ZPoly(std::move(coeffs)));
    }
    std::vector<int> exps(static_cast<size_t>(p.size()) + 1);
    for (int j = 0; j <= p.size(); ++j) exps[static_cast<size_t>(j)] = j;
    return SeriesTQ(std::move(numerator), std::move(exps));
}

XPoly poset_polynomial(const Poset& p) { return series_to_xpoly(descent_numerator(p)); }

QRat q_volume(const Poset& p) {
    XPoly poly = poset_polynomial(p);
    return poly.leading() * QRat(q_factorial(p.size()));
}

XPoly macmahon_polynomial(int m, int n) {
    if (m < 1 || n < 1) throw PreconditionError("chain sizes must be positive");
    XPoly acc{QRat(1)};
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            QRat qint = q_integer(i + j - 1);
            XPoly factor({qint, QRat::q_power(i + j - 1)});
            acc = acc * factor / qint;
        }
    return acc;
}

int longest_chain(const Poset& p) {
    std::vector<int> order = p.topological_order();
    std::vector<int> height(static_cast<size_t>(p.size()), 1);
    int best = p.size() == 0 ? 0 : 1;
    for (int i : order) {
        for (int j : order) {
            if (!p.less(j, i)) continue;
            height[static_cast<size_t>(i)] =
                std::max(height[static_cast<size_t>(i)], height[static_cast<size_t>(j)] + 1);
        }
        best = std::max(best, height[static_cast<size_t>(i)]);
    }
    return best;
}

}  // namespace qe
