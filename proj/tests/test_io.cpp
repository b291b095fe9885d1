#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"

#include "freespec/brown.hpp"
#include "freespec/errors.hpp"
#include "freespec/io.hpp"

using namespace freespec;

TEST_CASE("matrix parsing") {
    const Mat2 m = io::parse_matrix("[[1, [0, 2]], [-0.5, [3, -1]]]");
    CHECK(m(0, 0) == cplx(1.0));
    CHECK(m(0, 1) == cplx(0.0, 2.0));
    CHECK(m(1, 0) == cplx(-0.5));
    CHECK(m(1, 1) == cplx(3.0, -1.0));
    CHECK_THROWS_AS(io::parse_matrix("[[1, 2], [3]]"), PreconditionError);
    CHECK_THROWS_AS(io::parse_matrix("[[1, 2], [3, \"x\"]]"), PreconditionError);
    CHECK_THROWS_AS(io::parse_matrix("not json"), PreconditionError);
    CHECK(io::parse_scalar("2.5") == cplx(2.5));
    CHECK(io::parse_scalar("[1, -1]") == cplx(1.0, -1.0));
}

TEST_CASE("property: matrix JSON round trip") {
    auto e = gen::engine(71);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat2 m = gen::matrix(e);
        CHECK(io::parse_matrix(io::matrix_to_json(m).dump()) == m);
    }
}

TEST_CASE("number encoding") {
    CHECK(io::number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(io::number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(io::number(std::nan("")) == "nan");
    CHECK(io::number(0.25) == 0.25);
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("CSV quoting and round trip") {
    std::ostringstream os;
    io::CsvWriter w(os);
    w.row({"a", "b,c", "say \"hi\""});
    w.row({"line\nbreak", "", "x"});
    const std::string first = "a,\"b,c\",\"say \"\"hi\"\"\"\r\n";
    CHECK(os.str().substr(0, first.size()) == first);
    std::istringstream is(os.str());
    const auto rows = io::read_csv(is);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][1] == "b,c");
    CHECK(rows[0][2] == "say \"hi\"");
    CHECK(rows[1][0] == "line\nbreak");
    CHECK(rows[1][1].empty());
}

TEST_CASE("measure CSV round trip") {
    const MeasureR mu = MeasureR::from_atoms({{0.0, 0.25}, {2.0, 0.75}});
    std::stringstream ss;
    io::write_measure_csv(ss, mu);
    const MeasureR back = io::read_measure_csv(ss);
    CHECK(integrate_moment(back, 1) == doctest::Approx(1.5));
    CHECK(integrate_moment(back, 2) == doctest::Approx(3.0));

    std::stringstream arc;
    io::write_measure_csv(arc, arcsine01());
    const MeasureR a = io::read_measure_csv(arc);
    CHECK(integrate_moment(a, 2) == doctest::Approx(0.375).epsilon(1e-4));
}

TEST_CASE("load_measure names") {
    CHECK(*io::load_measure("dirac:3").dirac_location() == 3.0);
    CHECK(integrate_moment(io::load_measure("atoms:1:0.5,4:0.5"), 1) == doctest::Approx(2.5));
    CHECK(integrate_moment(io::load_measure("arcsine01"), 1) == doctest::Approx(0.5));
    CHECK(std::abs(integrate_moment(io::load_measure("arcsine_sym"), 1)) < 1e-12);
    CHECK_THROWS_AS(io::load_measure("atoms:1"), PreconditionError);
    CHECK_THROWS_AS(io::load_measure("/nonexistent/measure.csv"), IoError);
}

TEST_CASE("radial CSV and summary") {
    const RadialMeasure nu = brown_sum_nilpotents(1.0, 1.0);
    std::stringstream ss;
    io::write_radial_csv(ss, nu);
    const auto rows = io::read_csv(ss);
    REQUIRE(rows.size() == nu.s_table().size() + 1);
    CHECK(rows[0] == std::vector<std::string>{"s", "F", "r_inner", "r_outer", "atom_at_zero"});
    CHECK(std::stod(rows[1][3]) == doctest::Approx(nu.r_outer()));
    CHECK(rows[2][3].empty());
    const auto j = io::radial_summary(nu);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "radial");
    CHECK(j["support"] == "disk");
}

TEST_CASE("region JSON") {
    const auto j = io::region_to_json(spectrum_product_traceless(mat2::make(0.0, 1.0, 1.0, 0.0), mat2::make(0.0, 6.0, 1.0, 0.0)));
    CHECK(j["kind"] == "annulus");
    CHECK(j["parameters"]["r_outer"].get<double>() == doctest::Approx(6.0));
}

TEST_CASE("write_output reports unwritable paths") {
    CHECK_THROWS_AS(io::write_output("/nonexistent/dir/out.csv", "x"), IoError);
}
