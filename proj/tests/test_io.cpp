#include "doctest.h"
#include "hfgrowth/io.hpp"

#include <sstream>

using namespace hfg;

namespace {

std::string error_of(auto&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("monomial ideal files") {
    std::istringstream in("# x^2, xy\nvars 3\n2 0 0\n\n1 1 0\n3 0 0\n");
    MonomialIdeal m = read_monomial_ideal(in);
    CHECK(m.num_vars == 3);
    CHECK(m.generators.size() == 2);  // x^3 is not minimal
    std::ostringstream out;
    write_monomial_ideal(out, m);
    std::istringstream back(out.str());
    CHECK(read_monomial_ideal(back).generators == m.generators);

    std::istringstream bad("vars 2\n1 0\n1 x\n");
    CHECK(error_of([&] { read_monomial_ideal(bad); }).starts_with("line 3:"));
    std::istringstream short_row("vars 3\n1 0\n");
    CHECK(error_of([&] { read_monomial_ideal(short_row); }).starts_with("line 2:"));
    std::istringstream negative("vars 2\n-1 2\n");
    CHECK(error_of([&] { read_monomial_ideal(negative); }).starts_with("line 2:"));
}

TEST_CASE("form list files") {
    std::istringstream in("vars 3 deg 2\n1 2 0 0\n-1/2 0 1 1\n\n3 0 0 2\ndeg 3\n1 1 1 1\n");
    std::vector<Form> fs = read_forms(in);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].coefficient({0, 1, 1}) == Rational(-1, 2));
    CHECK(fs[2].degree() == 3);
    std::ostringstream out;
    write_forms(out, 3, fs);
    std::istringstream back(out.str());
    CHECK(read_forms(back) == fs);

    std::istringstream wrong_degree("vars 2 deg 2\n1 1 0\n");
    CHECK(error_of([&] { read_forms(wrong_degree); }).starts_with("line 2:"));
    std::istringstream bad_rational("vars 2 deg 1\n1/0 1 0\n");
    CHECK(error_of([&] { read_forms(bad_rational); }).starts_with("line 2:"));
    std::istringstream bad_header("vars 2 degree 1\n");
    CHECK(error_of([&] { read_forms(bad_header); }).starts_with("line 1:"));
}

TEST_CASE("point files") {
    std::istringstream in("ambient 2\n1 2 1\n2/3 4/3 2/3\n0 1 0\n");
    CHECK(error_of([&] { read_points(in); }) != "");  // the second row repeats the first point

    std::istringstream ok("ambient 2\n1 2 1\n\n0 1 0\n1/2 -3 1\n");
    PointSet z = read_points(ok);
    CHECK(z.size() == 3);
    std::ostringstream out;
    write_points(out, z);
    std::istringstream back(out.str());
    CHECK(read_points(back).points() == z.points());

    std::istringstream bad("ambient 2\n1 2 1\n1 2\n");
    CHECK(error_of([&] { read_points(bad); }).starts_with("line 3:"));
    std::istringstream junk("ambient 2\n1 2 1\n1 2 1.5\n");
    CHECK(error_of([&] { read_points(junk); }).starts_with("line 3:"));
    std::istringstream zero("ambient 1\n0 0\n");
    CHECK(error_of([&] { read_points(zero); }).starts_with("line 2:"));
}

TEST_CASE("either ideal format") {
    std::istringstream mono("vars 3\n1 0 0\n");
    IdealInput a = read_ideal(mono);
    REQUIRE(a.monomial);
    CHECK(hilbert_function(a.span(4), 4) == 5);

    std::istringstream forms("vars 3 deg 1\n1 1 0 0\n-1 0 1 0\n");
    IdealInput b = read_ideal(forms);
    CHECK_FALSE(b.monomial);
    CHECK(hilbert_function(b.span(4), 4) == 5);
}
