#include "qehrhart/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace qe::corpus {

namespace {

NamedPair make(const std::string& name, int dim, std::vector<Point> points, std::vector<Coord> lambda) {
    return {name, LatticePolytope::from_points(dim, std::move(points)), LinearForm{std::move(lambda)}};
}

}  // namespace

NamedPair example_a() { return make("exa", 1, {{0}, {1}}, {1}); }

NamedPair example_b() { return make("exb", 2, {{0, 0}, {1, 0}, {1, 1}}, {1, 1}); }

NamedPair example_c() { return make("exc", 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}}, {1, 1}); }

NamedPair example_d() { return make("exd", 2, {{0, 0}, {1, 0}, {1, 1}, {0, 3}}, {1, 1}); }

std::vector<NamedPair> golden_examples() {
    std::vector<NamedPair> out;
    out.push_back(example_a());
    out.push_back(example_b());
    out.push_back(example_c());
    out.push_back(example_d());
    return out;
}

Poset claw() { return Poset::from_covers(4, {{0, 1}, {0, 2}, {0, 3}}); }

std::vector<NamedPoset> poset_corpus() {
    std::vector<NamedPoset> out;
    for (int n = 1; n <= 4; ++n) out.push_back({"chain" + std::to_string(n), Poset::chain(n)});
    for (int n = 2; n <= 4; ++n) out.push_back({"antichain" + std::to_string(n), Poset::antichain(n)});
    out.push_back({"claw", claw()});
    out.push_back({"claw_opposite", derive_poset(claw(), PosetDerivation::Opposite)});
    for (int m = 2; m <= 3; ++m)
        for (int n = 2; n <= m; ++n)
            out.push_back({"chain_product" + std::to_string(m) + "x" + std::to_string(n),
                           Poset::chain_product(m, n)});
    return out;
}

namespace {

// Canonical signature of a rooted tree: sorted child signatures.
std::string tree_signature(int node, const std::vector<std::vector<int>>& children) {
    std::vector<std::string> parts;
    for (int c : children[static_cast<size_t>(node)]) parts.push_back(tree_signature(c, children));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    return out + ")";
}

}  // namespace

std::vector<NamedPoset> rooted_trees(int max_nodes) {
    std::vector<NamedPoset> out;
    std::map<std::string, bool> seen;
    for (int n = 1; n <= max_nodes; ++n) {
        // Parent arrays parent[i] < i enumerate all labeled rooted trees on
        // {0..n-1} with root 0; deduplicate up to isomorphism.
        std::vector<int> parent(static_cast<size_t>(n), -1);
        std::function<void(int)> assign = [&](int i) {
            if (i == n) {
                std::vector<std::vector<int>> children(static_cast<size_t>(n));
                for (int v = 1; v < n; ++v) children[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
                std::string sig = tree_signature(0, children);
                if (seen.emplace(sig, true).second) {
                    // Root as maximum: each node lies below its parent.
                    std::vector<std::pair<int, int>> covers;
                    for (int v = 1; v < n; ++v) covers.emplace_back(v, parent[static_cast<size_t>(v)]);
                    out.push_back({"tree" + std::to_string(n) + "_" + std::to_string(out.size()),
                                   Poset::from_covers(n, covers)});
                }
                return;
            }
            for (int p = 0; p < i; ++p) {
                parent[static_cast<size_t>(i)] = p;
                assign(i + 1);
            }
        };
        assign(1);
    }
    return out;
}

std::vector<NamedPair> random_valid_pairs(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim_dist(1, 3);
    std::uniform_int_distribution<Coord> coord_dist(0, 4);
    std::uniform_int_distribution<Coord> form_dist(0, 3);
    std::vector<NamedPair> out;
    while (static_cast<int>(out.size()) < count) {
        int dim = dim_dist(rng);
        std::uniform_int_distribution<int> npoints(dim + 1, dim + 3);
        int k = npoints(rng);
        std::vector<Point> points;
        for (int i = 0; i < k; ++i) {
            Point p(static_cast<size_t>(dim));
            for (auto& c : p) c = coord_dist(rng);
            points.push_back(std::move(p));
        }
        LinearForm lambda;
        lambda.coefficients.resize(static_cast<size_t>(dim));
        for (auto& c : lambda.coefficients) c = form_dist(rng);
        LatticePolytope q = LatticePolytope::from_points(dim, std::move(points));
        if (!validate_pair(q, lambda).empty()) continue;
        out.push_back({"random" + std::to_string(out.size()), std::move(q), std::move(lambda)});
    }
    return out;
}

}  // namespace qe::corpus
