#include <doctest.h>

#include <set>

#include "qehrhart/algebra.hpp"
#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/errors.hpp"
#include "qehrhart/poset.hpp"
#include "qehrhart/render.hpp"

using namespace qe;

namespace {

const QRat kQ = QRat::q_power(1);

ZPoly zp(std::vector<long> coeffs) {
    std::vector<mpz_class> v(coeffs.begin(), coeffs.end());
    return ZPoly(std::move(v));
}

}  // namespace

TEST_CASE("rooted tree corpus is complete up to isomorphism") {
    // 1, 1, 2, 4, 9 unlabeled rooted trees on 1..5 nodes.
    CHECK(corpus::rooted_trees(5).size() == 17);
    for (const auto& [name, tree] : corpus::rooted_trees(5))
        CHECK(tree.maximal_elements().size() == 1);
}

TEST_CASE("poset construction") {
    Poset one = Poset::from_covers(1, {});
    CHECK(one.size() == 1);
    Poset claw = corpus::claw();
    CHECK(claw.leq(0, 3));
    CHECK_FALSE(claw.leq(1, 2));
    CHECK(claw.minimal_elements() == std::vector<int>{0});
    CHECK(claw.maximal_elements() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), ParseError);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 5}}), PreconditionError);
    SUBCASE("transitive closure") {
        Poset chain = Poset::from_covers(3, {{0, 1}, {1, 2}});
        CHECK(chain.leq(0, 2));
        CHECK(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    }
}

TEST_CASE("order polytopes") {
    SUBCASE("one element gives the unit segment") {
        auto [q, lambda] = order_polytope(Poset::chain(1));
        CHECK(q.vertices().size() == 2);
        CHECK(q.facets().size() == 2);
        CHECK(validate_pair(q, lambda).empty());
        CHECK(qehrhart_polynomial(q, lambda) == XPoly({QRat(1), kQ}));
    }
    SUBCASE("two-element chain gives a unimodular triangle") {
        auto [q, lambda] = order_polytope(Poset::chain(2));
        CHECK(q.vertices().size() == 3);
        XPoly expected = XPoly({QRat(1), kQ}) * XPoly({QRat(zp({1, 1})), QRat::q_power(2)}) /
                         QRat(zp({1, 1}));
        CHECK(qehrhart_polynomial(q, lambda) == expected);
    }
    SUBCASE("two-element antichain gives the unit square") {
        auto [q, lambda] = order_polytope(Poset::antichain(2));
        CHECK(q.vertices().size() == 4);
        XPoly qx1({QRat(1), kQ});
        CHECK(qehrhart_polynomial(q, lambda) == qx1 * qx1);
        for (int n = 0; n <= 2; ++n) {
            QRat w = dilate_weighted_sum(q, lambda, n);
            CHECK(w == q_integer(n + 1) * q_integer(n + 1));
        }
    }
    SUBCASE("facets match a fresh hull computation") {
        for (const auto& name : {"chain3", "antichain3"}) {
            Poset p = std::string(name) == "chain3" ? Poset::chain(3) : Poset::antichain(3);
            auto [q, lambda] = order_polytope(p);
            auto direct = LatticePolytope::from_points(q.ambient_dim(), q.vertices());
            CHECK(direct.vertices().size() == q.vertices().size());
            CHECK(direct.facets().size() == q.facets().size());
            CHECK(std::set<std::pair<int, int>>(direct.edges().begin(), direct.edges().end()) ==
                  std::set<std::pair<int, int>>(q.edges().begin(), q.edges().end()));
        }
    }
    SUBCASE("order polytopes are empty and generic") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 6) continue;
            auto [q, lambda] = order_polytope(poset);
            CAPTURE(name);
            CHECK(validate_pair(q, lambda).empty());
            CHECK(is_empty(q));
            auto [lo, hi] = lambda_range(q, lambda);
            CHECK(lo == 0);
            CHECK(hi == poset.size());
        }
    }
}

TEST_CASE("colouring sums") {
    Poset one = Poset::chain(1);
    CHECK(colouring_sum(one, 1, false) == QRat(zp({1, 1})));
    CHECK(colouring_sum(Poset::chain(2), 2, true) == QRat(0));
    for (const auto& [name, poset] : corpus::poset_corpus()) {
        CAPTURE(name);
        CHECK(colouring_sum(poset, 0, false) == QRat(1));
    }
    SUBCASE("weak colourings count dilated order polytope points") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 5) continue;
            auto [q, lambda] = order_polytope(poset);
            CAPTURE(name);
            for (int n = 0; n <= poset.size() + 2; ++n)
                CHECK(colouring_sum(poset, n, false) == dilate_weighted_sum(q, lambda, n));
        }
    }
    SUBCASE("strict colourings give reciprocity values") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 6) continue;
            CAPTURE(name);
            XPoly poly = poset_polynomial(poset);
            QRat sign = poset.size() % 2 == 0 ? QRat(1) : QRat(-1);
            for (int n = 1; n <= 5; ++n)
                CHECK(sign * eval_at_q_integer(poly, -n) == colouring_sum(poset, n, true));
        }
    }
}

TEST_CASE("descent numerators") {
    SUBCASE("pinned conventions") {
        CHECK(descent_numerator(Poset::chain(1)) == SeriesTQ({QRat(1)}, {0, 1}));
        CHECK(descent_numerator(Poset::chain(2)) == SeriesTQ({QRat(1)}, {0, 1, 2}));
        CHECK(descent_numerator(Poset::antichain(2)) ==
              SeriesTQ({QRat(1), QRat(zp({0, 1}))}, {0, 1, 2}));
    }
    SUBCASE("agreement with the geometric series") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 6) continue;
            auto [q, lambda] = order_polytope(poset);
            CAPTURE(name);
            CHECK(descent_numerator(poset) == qehrhart_series(q, lambda));
        }
    }
    SUBCASE("nonnegative integer coefficients, constant term one") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            CAPTURE(name);
            SeriesTQ series = descent_numerator(poset);
            REQUIRE(!series.numerator().empty());
            CHECK(series.numerator()[0] == QRat(1));
            for (const auto& c : series.numerator()) {
                CHECK(c.is_polynomial());
                for (const auto& coeff : c.num().coeffs()) CHECK(coeff >= 0);
            }
        }
    }
}

TEST_CASE("derived posets") {
    SUBCASE("adding a minimum to the one-element poset gives the two-chain") {
        Poset extended = derive_poset(Poset::chain(1), PosetDerivation::AddMin);
        CHECK(descent_numerator(extended) == SeriesTQ({QRat(1)}, {0, 1, 2}));
        CHECK(descent_numerator(extended) ==
              descent_numerator(Poset::chain(1)).with_extra_pole(2));
    }
    SUBCASE("opposite of the claw") {
        Poset opp = derive_poset(corpus::claw(), PosetDerivation::Opposite);
        CHECK(opp.maximal_elements() == std::vector<int>{0});
        CHECK(descent_numerator(opp) == descent_numerator(corpus::claw()).subst_reversal(4));
    }
    SUBCASE("chains are self-opposite") {
        Poset chain = Poset::chain(3);
        CHECK(descent_numerator(derive_poset(chain, PosetDerivation::Opposite)) ==
              descent_numerator(chain));
    }
    SUBCASE("series identities for added extrema") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 5) continue;
            CAPTURE(name);
            SeriesTQ base = descent_numerator(poset);
            CHECK(descent_numerator(derive_poset(poset, PosetDerivation::AddMin)) ==
                  base.with_extra_pole(1 + poset.size()));
            CHECK(descent_numerator(derive_poset(poset, PosetDerivation::AddMax)) ==
                  base.subst_t_scaled(1).with_extra_pole(0));
        }
    }
}

TEST_CASE("q-volumes") {
    SUBCASE("one-element poset") { CHECK(q_volume(Poset::chain(1)) == kQ); }
    SUBCASE("claw and its opposite match the displayed products") {
        QRat claw_volume = QRat::q_power(5) * QRat(zp({1, 1})) * QRat(zp({1, -1, 3, -1, 1}));
        CHECK(q_volume(corpus::claw()) == claw_volume);
        QRat opp_volume = QRat::q_power(7) * QRat(zp({1, 1})) * QRat(zp({1, 1, 1}));
        CHECK(q_volume(derive_poset(corpus::claw(), PosetDerivation::Opposite)) == opp_volume);
    }
    SUBCASE("reversal formula") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            CAPTURE(name);
            int n = poset.size();
            SeriesTQ opposite = descent_numerator(derive_poset(poset, PosetDerivation::Opposite));
            QRat at_1;
            for (const auto& c : opposite.numerator()) at_1 += c;
            CHECK(q_volume(poset) == QRat::q_power(n * (n + 1) / 2) * at_1.subst_inverse_q());
        }
    }
}

TEST_CASE("macmahon product formula") {
    CHECK(macmahon_polynomial(1, 1) == XPoly({QRat(1), kQ}));
    XPoly expected_21 = XPoly({QRat(1), kQ}) * XPoly({QRat(zp({1, 1})), QRat::q_power(2)}) /
                        QRat(zp({1, 1}));
    CHECK(macmahon_polynomial(2, 1) == expected_21);
    SUBCASE("agreement with the geometric computation") {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
            auto [q, lambda] = order_polytope(Poset::chain_product(m, n));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(macmahon_polynomial(m, n) == qehrhart_polynomial(q, lambda));
        }
    }
    SUBCASE("matches the combinatorial route for 3 x 3") {
        CHECK(macmahon_polynomial(3, 3) == poset_polynomial(Poset::chain_product(3, 3)));
    }
}

TEST_CASE("longest chains and divisibility") {
    CHECK(longest_chain(Poset::antichain(3)) == 1);
    CHECK(longest_chain(Poset::chain(3)) == 3);
    CHECK(longest_chain(corpus::claw()) == 2);
    SUBCASE("the polynomial vanishes at small negative q-integers") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            if (poset.size() > 6) continue;
            CAPTURE(name);
            XPoly poly = poset_polynomial(poset);
            XPoly divisor{QRat(1)};
            for (int n = 1; n <= longest_chain(poset); ++n)
                divisor = divisor * XPoly({q_integer(n), QRat::q_power(n)});
            CHECK(poly.divmod(divisor).second.is_zero());
        }
    }
}

TEST_CASE("value at infinity for the claw") {
    ZPoly q_minus_1 = zp({-1, 1});
    SUBCASE("claw") {
        QRat expected(ZPoly(1), q_minus_1.pow(4) * cyclotomic(2) * cyclotomic(4));
        CHECK(value_at_infinity(poset_polynomial(corpus::claw())) == expected);
    }
    SUBCASE("opposite claw") {
        QRat expected(zp({1, -1, 3, -1, 1}),
                      q_minus_1.pow(4) * cyclotomic(2) * cyclotomic(3) * cyclotomic(4));
        CHECK(value_at_infinity(poset_polynomial(derive_poset(corpus::claw(), PosetDerivation::Opposite))) ==
              expected);
    }
    SUBCASE("limit route agrees") {
        for (const auto& [name, poset] : corpus::poset_corpus()) {
            CAPTURE(name);
            CHECK(value_at_infinity(poset_polynomial(poset)) ==
                  series_limit_t1(descent_numerator(poset)));
        }
    }
}

TEST_CASE("claw polynomial matches the cyclotomic-factored display") {
    // (q x + 1) (q^2 x + q + 1)
    //   (Phi3 Phi4 + q (2q^4 + 4q^2 + q + 2) x + q^2 (q^4 - q^3 + 3q^2 - q + 1) x^2)
    //   / (Phi2 Phi3 Phi4)
    ZPoly phi2 = cyclotomic(2), phi3 = cyclotomic(3), phi4 = cyclotomic(4);
    XPoly quad({QRat(phi3 * phi4), kQ * QRat(zp({2, 1, 4, 0, 2})),
                QRat::q_power(2) * QRat(zp({1, -1, 3, -1, 1}))});
    XPoly expected = XPoly({QRat(1), kQ}) * XPoly({QRat(zp({1, 1})), QRat::q_power(2)}) * quad /
                     QRat(phi2 * phi3 * phi4);
    CHECK(poset_polynomial(corpus::claw()) == expected);

    // Opposite: (q x + 1)(q^2 x + q + 1)
    //   (Phi3 q^4 x^2 + (2q^3 + 2q^2 + 3q + 2) q^2 x + Phi4 Phi3) / (Phi2 Phi3 Phi4)
    XPoly quad_opp({QRat(phi4 * phi3), QRat::q_power(2) * QRat(zp({2, 3, 2, 2})),
                    QRat::q_power(4) * QRat(phi3)});
    XPoly expected_opp = XPoly({QRat(1), kQ}) * XPoly({QRat(zp({1, 1})), QRat::q_power(2)}) * quad_opp /
                         QRat(phi2 * phi3 * phi4);
    CHECK(poset_polynomial(derive_poset(corpus::claw(), PosetDerivation::Opposite)) == expected_opp);
    SUBCASE("geometric route agrees") {
        auto [q, lambda] = order_polytope(corpus::claw());
        CHECK(qehrhart_polynomial(q, lambda) == poset_polynomial(corpus::claw()));
    }
}
