#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "nsfusion/zhu.hpp"

using namespace nsf;

namespace {
ns::PBWWord word(std::vector<long> g_tw, std::vector<long> l) {
    ns::PBWWord w;
    for (long t : g_tw) w.g.push_back(HalfInt(t));
    w.l = std::move(l);
    return w;
}

std::set<std::string> root_set(const Polynomial& p, long span) {
    std::set<std::string> out;
    for (long s = 1; s <= span; s += 2) {
        RadicalNumber h(ns::h_label(s));
        if (p.root_multiplicity(h) > 0) out.insert(h.to_string());
    }
    return out;
}
}  // namespace

TEST_CASE("single-word reductions") {
    // [G(-3/2) v] = [G(-1/2) v]
    zhu::BimoduleElement e = zhu::zhu_reduce(word({3}, {}), 3, ns::h_label(3));
    CHECK(e.even_part.is_zero());
    CHECK(e.odd_part == Polynomial::constant(Var::x, RadicalNumber(1)));

    // [L(-1) G(-1/2) v] at q=3: (y - x + 1)[G(-1/2)v], y = h_{1,3} = 1/2
    zhu::BimoduleElement e2 = zhu::zhu_reduce(word({1}, {1}), 3, ns::h_label(3));
    CHECK(e2.even_part.is_zero());
    CHECK(e2.odd_part == Polynomial::linear(Var::x, RadicalNumber(Rational(3, 2)), RadicalNumber(-1)));

    // abstract pair rule via the engine: G(-1/2)G(-3/2)vac normal ordered,
    // then reduced, equals (3y - x + h_q)[v]
    const RadicalNumber c32{Rational(3, 2)};
    ns::VermaElement pair = ns::apply_mode(ns::Mode::Gmode(HalfInt(-1)),
                                           ns::word_element(c32, RadicalNumber(ns::h_label(3)), word({3}, {})));
    zhu::BimoduleElement e3 = zhu::zhu_reduce(pair, 3, ns::h_label(3));
    CHECK(e3.odd_part.is_zero());
    CHECK(e3.even_part == Polynomial::linear(Var::x, RadicalNumber(2), RadicalNumber(-1)));
}

TEST_CASE("fusion polynomials at (3,3)") {
    zhu::QPolynomials qp = zhu::q_polynomials(3, 3);
    CHECK(qp.q1 == Polynomial::linear(Var::x, RadicalNumber(Rational(1, 2)), RadicalNumber(-1)));
    // Q2 = x(x - 2)
    CHECK(qp.q2 == Polynomial(Var::x, {RadicalNumber(0), RadicalNumber(-2), RadicalNumber(1)}));
}

TEST_CASE("fusion polynomials at q = 1: vacuum acts trivially") {
    for (long r : {1L, 3L, 5L}) {
        zhu::QPolynomials qp = zhu::q_polynomials(1, r);
        CHECK(qp.q1 == Polynomial::constant(Var::x, RadicalNumber(1)));
        CHECK(qp.q2.degree() == 1);
        CHECK(qp.q2.eval(RadicalNumber(ns::h_label(r))).is_zero());
    }
}

TEST_CASE("fusion polynomials at (3,5)") {
    zhu::QPolynomials qp = zhu::q_polynomials(3, 5);
    CHECK(root_set(qp.q1, 11) == std::set<std::string>{RadicalNumber(ns::h_label(5)).to_string()});
    CHECK(root_set(qp.q2, 11) == std::set<std::string>{RadicalNumber(ns::h_label(3)).to_string(),
                                                       RadicalNumber(ns::h_label(7)).to_string()});
}

TEST_CASE("verma fusion dimensions") {
    CHECK(zhu::verma_fusion_dim(3, 3, 5) == 1);
    CHECK(zhu::verma_fusion_dim(3, 3, 7) == 0);
    for (long r : {1L, 3L, 5L}) {
        CHECK(zhu::verma_fusion_dim(1, r, r) == 1);
        CHECK(zhu::verma_fusion_dim(1, r, r + 2) == 0);
    }
}

TEST_CASE("irreducible fusion dimensions symmetrize the verma rule") {
    for (long s = 1; s <= 9; s += 2) {
        CHECK(zhu::irreducible_fusion_dim(3, 3, s) == ((s == 1 || s == 3 || s == 5) ? 1 : 0));
        CHECK(zhu::irreducible_fusion_dim(5, 3, s) == ((s == 3 || s == 5 || s == 7) ? 1 : 0));
        CHECK(zhu::irreducible_fusion_dim(5, 1, s) == (s == 5 ? 1 : 0));
    }
    for (long q = 1; q <= 7; q += 2)
        for (long r = 1; r <= 7; r += 2)
            for (long s = 1; s <= q + r + 1; s += 2)
                CHECK(zhu::irreducible_fusion_dim(q, r, s) == zhu::irreducible_fusion_dim(r, q, s));
}

TEST_CASE("parity classification") {
    CHECK(zhu::fusion_parity(3, 3, 5) == zhu::Parity::even);
    CHECK(zhu::fusion_parity(3, 3, 3) == zhu::Parity::odd);
    CHECK(zhu::fusion_parity(3, 3, 1) == zhu::Parity::even);
    CHECK(zhu::fusion_parity(5, 3, 5) == zhu::Parity::odd);
    CHECK(zhu::fusion_parity(5, 1, 5) == zhu::Parity::even);
    CHECK(zhu::fusion_parity(3, 3, 7) == zhu::Parity::zero);
    CHECK_THROWS_AS(zhu::fusion_parity(3, 5, 3), CalcError);  // requires q >= r
}

TEST_CASE("degree sum and root sets across the table") {
    for (long q = 1; q <= 9; q += 2)
        for (long r = 1; r <= 9; r += 2) {
            zhu::QPolynomials qp = zhu::q_polynomials(q, r);
            CHECK(qp.q1.degree() + qp.q2.degree() == q);
            for (bool even : {true, false}) {
                const Polynomial& p = even ? qp.q2 : qp.q1;
                std::set<std::string> expect;
                for (long s : zhu::expected_labels(q, r, even))
                    expect.insert(RadicalNumber(ns::h_label(s)).to_string());
                CHECK(root_set(p, q + r + 1) == expect);
                // degree audit: every root lies in the candidate set
                long mult_total = 0;
                for (long s = 1; s <= q + r + 1; s += 2)
                    mult_total += p.root_multiplicity(RadicalNumber(ns::h_label(s)));
                CHECK(mult_total == p.degree());
            }
        }
}
