#include "qehrhart/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <vector>

#include "qehrhart/algebra.hpp"
#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/errors.hpp"
#include "qehrhart/poset.hpp"
#include "qehrhart/triangulation.hpp"

namespace qe::verify {

namespace {

class Report {
  public:
    void record(const std::string& identity, const std::string& instance, bool ok) {
        auto [it, inserted] = index_.try_emplace(identity, entries_.size());
        if (inserted) entries_.push_back({identity, 0, {}});
        Entry& e = entries_[it->second];
        e.total += 1;
        if (!ok) e.failures.push_back(instance);
    }

    template <typename F>
    void run(const std::string& identity, const std::string& instance, F&& check) {
        bool ok = false;
        std::string note;
        try {
            ok = check();
        } catch (const Error& err) {
            note = err.what();
        }
        record(identity, note.empty() ? instance : instance + ": " + note, ok);
    }

    bool summarize(std::ostream& out) const {
        bool all_ok = true;
        for (const auto& e : entries_) {
            if (e.failures.empty()) {
                out << "ok   " << e.identity << " (" << e.total << " checks)\n";
            } else {
                all_ok = false;
                out << "FAIL " << e.identity << " (" << e.failures.size() << "/" << e.total << " failed)";
                for (const auto& f : e.failures) out << "\n     - " << f;
                out << "\n";
            }
        }
        return all_ok;
    }

  private:
    struct Entry {
        std::string identity;
        int total;
        std::vector<std::string> failures;
    };
    std::vector<Entry> entries_;
    std::map<std::string, size_t> index_;
};

// The functional-equation identities construct derived polytopes whose
// maximal form value can double; they run on the desk-scale corpus, while
// route equivalence, reciprocity and the structural claims also run on the
// random instances.
void check_pair_identities(Report& report, const corpus::NamedPair& pair, bool functional_equations) {
    const auto& [name, q, lambda] = pair;
    EhrhartData data = ehrhart_data(q, lambda);

    report.run("route-equivalence", name,
               [&] { return series_via_triangulation(q, lambda) == data.series; });
    for (int n = 1; n <= 5; ++n)
        report.run("reciprocity", name + " n=" + std::to_string(n), [&, n] {
            QRat interior = weighted_sum(lattice_points(q, n, Region::Interior), lambda, true);
            QRat sign = data.d % 2 == 0 ? QRat(1) : QRat(-1);
            return eval_at_q_integer(data.polynomial, -n) - sign * interior == QRat(0);
        });
    report.run("series-constant-term", name, [&] { return data.series.taylor(0)[0] == QRat(1); });
    report.run("series-squarefree-denominator", name, [&] { return data.series.denominator_squarefree(); });
    report.run("series-pole-exponents", name, [&] {
        std::vector<int> values;
        for (const auto& v : q.vertices()) values.push_back(static_cast<int>(lambda.apply(v)));
        auto [lo, hi] = lambda_range(q, lambda);
        const auto& exps = data.series.denominator_exponents();
        bool has_min = false, has_max = false;
        for (int j : exps) {
            if (j == lo) has_min = true;
            if (j == hi) has_max = true;
            if (std::find(values.begin(), values.end(), j) == values.end()) return false;
        }
        return has_min && has_max;
    });
    report.run("polynomial-degree", name, [&] { return data.polynomial.degree() == data.m; });
    report.run("q1-degeneration", name, [&] {
        XPoly specialized = specialize_q1(data.polynomial);
        return specialized == classical_ehrhart(q);
    });
    if (!functional_equations) return;

    report.run("shift", name, [&] {
        // Translate by the lambda-maximal vertex; its value is m >= 0.
        Point v = q.vertices().front();
        for (const auto& w : q.vertices())
            if (lambda.apply(w) == data.m) v = w;
        LatticePolytope shifted = translate(q, lambda, v);
        XPoly factor({QRat(1), QRat(ZPoly({-1, 1}))});  // 1 + (q-1) x
        XPoly expected = factor.pow(static_cast<int>(data.m)) * data.polynomial;
        if (!(qehrhart_polynomial(shifted, lambda) == expected)) return false;
        return qehrhart_series(shifted, lambda) == data.series.subst_t_scaled(static_cast<int>(data.m));
    });
    report.run("reversal", name, [&] {
        LatticePolytope reversed = reverse(q, lambda);
        return qehrhart_series(reversed, lambda) == data.series.subst_reversal(static_cast<int>(data.m));
    });
    report.run("pyramid", name, [&] {
        auto [pyr, extended] = pyramid(q, lambda, data.m + 1);
        return qehrhart_series(pyr, extended) == data.series.with_extra_pole(static_cast<int>(data.m) + 1);
    });
    report.run("bplus-hahn", name, [&] {
        auto [lifted, extended] = bplus(q, lambda);
        XPoly shift({QRat(1), QRat::q_power(1)});
        XPoly expected = data.polynomial.compose(shift) * QRat::q_power(1);
        return hahn_delta(qehrhart_polynomial(lifted, extended)) == expected;
    });
}

void polytope_suite(Report& report, const Options& options) {
    for (const auto& pair : corpus::golden_examples()) check_pair_identities(report, pair, true);
    for (const auto& named : corpus::poset_corpus()) {
        if (named.poset.size() > 4) continue;  // keep the geometric corpus desk-scale
        auto [q, lambda] = order_polytope(named.poset);
        check_pair_identities(report, {"order_polytope(" + named.name + ")", std::move(q), std::move(lambda)},
                              true);
    }
    for (const auto& pair : corpus::random_valid_pairs(options.seed, options.random_count))
        check_pair_identities(report, pair, false);

    const auto exa = corpus::example_a();
    const auto exb = corpus::example_b();
    for (int N : {2, 3})
        report.run("periodicity-certificate", "exa N=" + std::to_string(N),
                   [&] { return periodicity_certificate(exa.polytope, exa.lambda, 1, N, {1, 2}); });
    report.run("periodicity-certificate", "exb N=4",
               [&] { return periodicity_certificate(exb.polytope, exb.lambda, 1, 4, {1, 2}); });
}

void poset_suite(Report& report) {
    for (const auto& [name, poset] : corpus::poset_corpus()) {
        SeriesTQ series = descent_numerator(poset);
        XPoly poly = poset_polynomial(poset);
        int n_elems = poset.size();

        report.run("descent-numerator-positivity", name, [&] {
            for (const auto& c : series.numerator()) {
                if (!c.is_polynomial()) return false;
                for (const auto& coeff : c.num().coeffs())
                    if (coeff < 0) return false;
            }
            return series.numerator().size() > 0 && series.numerator()[0] == QRat(1);
        });
        if (n_elems <= 6) {
            auto [q, lambda] = order_polytope(poset);
            report.run("descent-numerator-geometric", name,
                       [&] { return qehrhart_series(q, lambda) == series; });
            for (int n = 0; n <= n_elems + 2; ++n)
                report.run("colouring-oracle", name + " n=" + std::to_string(n), [&, n] {
                    return colouring_sum(poset, n, false) ==
                           weighted_sum(lattice_points(q, n, Region::Closed), lambda);
                });
        }
        for (int n = 1; n <= 5; ++n)
            report.run("poset-reciprocity", name + " n=" + std::to_string(n), [&, n] {
                QRat sign = n_elems % 2 == 0 ? QRat(1) : QRat(-1);
                return sign * eval_at_q_integer(poly, -n) == colouring_sum(poset, n, true);
            });
        report.run("pminus", name, [&] {
            Poset extended = derive_poset(poset, PosetDerivation::AddMin);
            return descent_numerator(extended) == series.with_extra_pole(1 + n_elems);
        });
        report.run("pplus", name, [&] {
            Poset extended = derive_poset(poset, PosetDerivation::AddMax);
            return descent_numerator(extended) == series.subst_t_scaled(1).with_extra_pole(0);
        });
        report.run("opposite-reversal", name, [&] {
            Poset opposite = derive_poset(poset, PosetDerivation::Opposite);
            return descent_numerator(opposite) == series.subst_reversal(n_elems);
        });
        report.run("chain-divisibility", name, [&] {
            XPoly divisor{QRat(1)};
            for (int n = 1; n <= longest_chain(poset); ++n)
                divisor = divisor * XPoly({q_integer(n), QRat::q_power(n)});
            return (poly.divmod(divisor).second).is_zero();
        });
        report.run("q-volume-via-reversal", name, [&] {
            SeriesTQ opposite = descent_numerator(derive_poset(poset, PosetDerivation::Opposite));
            QRat numerator_at_1;
            for (const auto& c : opposite.numerator()) numerator_at_1 += c;
            QRat expected =
                QRat::q_power(n_elems * (n_elems + 1) / 2) * numerator_at_1.subst_inverse_q();
            return q_volume(poset) == expected;
        });
        report.run("value-at-infinity", name,
                   [&] { return value_at_infinity(poly) == series_limit_t1(series); });
    }
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}})
        report.run("macmahon", std::to_string(m) + "x" + std::to_string(n), [&, m, n] {
            auto [q, lambda] = order_polytope(Poset::chain_product(m, n));
            return macmahon_polynomial(m, n) == qehrhart_polynomial(q, lambda);
        });
}

void umbral_suite(Report& report) {
    const std::vector<mpq_class> bernoulli_at_1 = {
        mpq_class(1), mpq_class(-1, 2), mpq_class(1, 6), mpq_class(0), mpq_class(-1, 30),
        mpq_class(0), mpq_class(1, 42), mpq_class(0),    mpq_class(-1, 30)};
    for (int n = 0; n <= 8; ++n) {
        report.run("bernoulli-classical-limit", "n=" + std::to_string(n),
                   [&, n] { return carlitz_bernoulli(n).eval(1) == bernoulli_at_1[static_cast<size_t>(n)]; });
        report.run("bernoulli-simple-poles", "n=" + std::to_string(n),
                   [&, n] { return has_simple_cyclotomic_poles(carlitz_bernoulli(n)); });
    }

    const std::vector<QRat> expected_specials = {
        QRat(1), QRat(ZPoly(1), ZPoly({1, 1})), QRat(0), -QRat::q_power(-1)};
    auto golden = corpus::golden_examples();
    for (size_t i = 0; i < golden.size(); ++i) {
        const auto& [name, q, lambda] = golden[i];
        report.run("special-value", name,
                   [&] { return special_value(q, lambda) == expected_specials[i]; });
        report.run("special-value-simple-poles", name,
                   [&] { return has_simple_cyclotomic_poles(special_value(q, lambda)); });
    }
    report.run("special-value-umbra-chain", "exa", [&] {
        const auto exa = corpus::example_a();
        auto [lifted, extended] = bplus(exa.polytope, exa.lambda);
        QRat expected(ZPoly(1), ZPoly({1, 1}));
        return special_value(lifted, extended) == umbra(XPoly({QRat(1), QRat::q_power(1)})) &&
               special_value(lifted, extended) == expected;
    });

    for (const auto& [name, tree] : corpus::rooted_trees(5)) {
        auto [q, lambda] = order_polytope(tree);
        XPoly poly = poset_polynomial(tree);
        report.run("tree-special-value-simple-poles", name, [&] {
            if (!is_empty(q)) return false;
            return has_simple_cyclotomic_poles(special_value_of(poly));
        });
        report.run("umbral-bplus", name, [&] {
            auto [lifted, extended] = bplus(q, lambda);
            return special_value(lifted, extended) == umbra(poly);
        });
        report.run("umbral-double-bplus", name, [&] {
            auto [lifted, extended] = bplus(q, lambda);
            auto [twice, extended2] = bplus(lifted, extended);
            return special_value(twice, extended2) == umbra(-(XPoly::x() * poly));
        });
    }
}

}  // namespace

Scope scope_from_string(const std::string& name) {
    if (name == "all") return Scope::All;
    if (name == "polytopes") return Scope::Polytopes;
    if (name == "posets") return Scope::Posets;
    if (name == "umbral") return Scope::Umbral;
    throw PreconditionError("unknown verification scope '" + name + "'");
}

bool run(const Options& options, std::ostream& report_stream) {
    Report report;
    if (options.scope == Scope::All || options.scope == Scope::Polytopes) polytope_suite(report, options);
    if (options.scope == Scope::All || options.scope == Scope::Posets) poset_suite(report);
    if (options.scope == Scope::All || options.scope == Scope::Umbral) umbral_suite(report);
    bool ok = report.summarize(report_stream);
    report_stream << (ok ? "verify: all identities hold\n" : "verify: FAILURES detected\n");
    return ok;
}

}  // namespace qe::verify
