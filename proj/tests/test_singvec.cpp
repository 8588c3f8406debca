#include <catch2/catch_amalgamated.hpp>

#include "nsfusion/singvec.hpp"

using namespace nsf;
using singvec::OddComposition;

namespace {
ns::PBWWord word(std::vector<long> g_tw, std::vector<long> l) {
    ns::PBWWord w;
    for (long t : g_tw) w.g.push_back(HalfInt(t));
    w.l = std::move(l);
    return w;
}
}  // namespace

TEST_CASE("odd compositions enumerate in lexicographic order") {
    CHECK(singvec::odd_compositions(1) == std::vector<OddComposition>{{1}});
    CHECK(singvec::odd_compositions(3) == std::vector<OddComposition>{{1, 1, 1}, {3}});
    CHECK(singvec::odd_compositions(5) ==
          std::vector<OddComposition>{{1, 1, 1, 1, 1}, {1, 1, 3}, {1, 3, 1}, {3, 1, 1}, {5}});
    CHECK_THROWS_AS(singvec::odd_compositions(4), CalcError);
}

TEST_CASE("composition counts follow the odd-part generating function") {
    // counts of compositions of q into odd parts: Fibonacci numbers
    std::vector<size_t> counts;
    for (long q = 1; q <= 11; q += 2) counts.push_back(singvec::odd_compositions(q).size());
    CHECK(counts == std::vector<size_t>{1, 2, 5, 13, 34, 89});
}

TEST_CASE("coefficient formula on explicit compositions") {
    CHECK(singvec::bsa_coefficient({1}) == Rational(1));
    CHECK(singvec::bsa_coefficient({3}) == Rational(-2));
    CHECK(singvec::bsa_coefficient({1, 1, 1}) == Rational(1));
    CHECK(singvec::bsa_coefficient({5}) == Rational(6));
    CHECK(singvec::bsa_coefficient({1, 1, 3}) == Rational(-1));
    CHECK(singvec::bsa_coefficient({1, 3, 1}) == Rational(-1, 2));
    CHECK(singvec::bsa_coefficient({3, 1, 1}) == Rational(-1));
    CHECK(singvec::bsa_coefficient({1, 1, 1, 1, 1}) == Rational(1, 4));
}

TEST_CASE("transcribed vector at q = 3") {
    ns::VermaElement v = singvec::bsa_vector(3);
    REQUIRE(v.terms.size() == 2);
    CHECK(v.terms.at(word({1}, {1})) == RadicalNumber(6));
    CHECK(v.terms.at(word({3}, {})) == RadicalNumber(-2));
}

TEST_CASE("transcribed vectors are homogeneous of level q/2 and odd") {
    for (long q = 1; q <= 9; q += 2) {
        ns::VermaElement v = singvec::bsa_vector(q);
        CHECK(v.homogeneous_level() == HalfInt(q));
        for (const auto& [w, coeff] : v.terms) CHECK(w.parity() == 1);
    }
}

TEST_CASE("kernel singular vectors at small q") {
    ns::VermaElement s1 = singvec::singular_vector(1);
    REQUIRE(s1.terms.size() == 1);
    CHECK(s1.terms.count(word({1}, {})) == 1);

    ns::VermaElement s3 = singvec::singular_vector(3);
    REQUIRE(s3.terms.size() == 2);
    CHECK(s3.terms.at(word({1}, {1})) == RadicalNumber(1));
    CHECK(s3.terms.at(word({3}, {})) == RadicalNumber(-1));

    ns::VermaElement s5 = singvec::singular_vector(5);
    REQUIRE(s5.terms.size() == 4);
    CHECK(s5.terms.at(word({1}, {1, 1})) == RadicalNumber(1));
    CHECK(s5.terms.at(word({1}, {2})) == RadicalNumber(-2));
    CHECK(s5.terms.at(word({3}, {1})) == RadicalNumber(-3));
    CHECK(s5.terms.at(word({5}, {})) == RadicalNumber(5));
}

TEST_CASE("kernel vectors are singular with weight h_{1,q+2}") {
    for (long q = 1; q <= 9; q += 2) {
        ns::VermaElement sv = singvec::singular_vector(q);
        CHECK(ns::singular_verify(sv));
        CHECK(sv.homogeneous_level() == HalfInt(q));
        // conformal weight h_{1,q} + q/2 = h_{1,q+2}
        CHECK(ns::h_label(q) + Rational(q, 2) == ns::h_label(q + 2));
        // normalization: lexicographically largest word has coefficient 1
        CHECK(sv.terms.rbegin()->second == RadicalNumber(1));
    }
}

TEST_CASE("transcription validation: q = 1 matches, q = 3 does not") {
    singvec::ValidationReport r1 = singvec::bsa_validate(1);
    CHECK(r1.proportional);
    CHECK(r1.ratio == RadicalNumber(1));

    singvec::ValidationReport r3 = singvec::bsa_validate(3);
    CHECK_FALSE(r3.proportional);
    // G(1/2) residual of 6 G(-1/2)L(-1) - 2 G(-3/2) is 8 L(-1) vac
    ns::VermaElement expect(r3.bsa.c, r3.bsa.h);
    expect.add_term(word({}, {1}), RadicalNumber(8));
    CHECK(r3.residual_g12 == expect);
}

TEST_CASE("validation completes for every q up to 9") {
    for (long q = 1; q <= 9; q += 2) {
        singvec::ValidationReport rep = singvec::bsa_validate(q);
        CHECK(rep.q == q);
        if (!rep.proportional) {
            bool nonzero_residual = !rep.residual_g12.is_zero() || !rep.residual_g32.is_zero();
            CHECK(nonzero_residual);
        }
    }
}
