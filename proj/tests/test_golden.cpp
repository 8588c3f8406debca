#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "nsfusion/report.hpp"

using namespace nsf;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream f(std::string(NSFUSION_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("singular vectors match the golden corpus byte for byte") {
    for (long q = 1; q <= 9; q += 2) {
        ns::VermaElement sv = singvec::singular_vector(q);
        CHECK(ns::render_element(sv) == slurp("singvec_q" + std::to_string(q) + ".txt"));
    }
}

TEST_CASE("fusion table json matches the golden corpus") {
    fusion::Ring ring;
    CHECK(report::fusion_table(ring, 9).dump(2) + "\n" == slurp("fusion_table_max9.json"));
}

TEST_CASE("zhu and density reports match the golden corpus") {
    CHECK(report::zhu_qpoly(3, 3).dump(2) + "\n" == slurp("zhu_qpoly_3_3.json"));
    CHECK(report::density_project(3, 3).dump(2) + "\n" == slurp("density_project_3_3.json"));
}

TEST_CASE("locus report matches the golden corpus") {
    RadicalNumber c = RadicalNumber(Rational(15, 2)) - RadicalNumber::term(Rational(3), 5);
    CHECK(report::ns_locus(c, HalfInt(6)).dump(2) + "\n" == slurp("locus_irrational.json"));
}
