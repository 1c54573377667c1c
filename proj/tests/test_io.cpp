// Exchange formats (GTM1 / GTV1 / observation) and the Monte-Carlo sweep.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "grouptest/bit_matrix.hpp"
#include "grouptest/errors.hpp"
#include "grouptest/formats.hpp"
#include "grouptest/function_table.hpp"
#include "grouptest/induced_code.hpp"
#include "grouptest/sweep.hpp"

using namespace gt;

namespace {

BitMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return from_gtm1(in);
}

SupportSet parse_support(const std::string& text) {
    std::istringstream in(text);
    return from_gtv1(in);
}

// Split a CSV body into fields per row, skipping the header.
std::vector<std::vector<std::uint64_t>> csv_rows(const std::string& csv) {
    std::vector<std::vector<std::uint64_t>> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::uint64_t> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(std::stoull(field));
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace

TEST_CASE("gtm1 golden bytes") {
    BitMatrix A(3, 4, {{0, 1}, {1, 2}, {3}});
    CHECK(to_gtm1(A) == "GTM1 3 4\n2 0 1\n2 1 2\n1 3\n");
}

TEST_CASE("gtm1 round-trip") {
    BitMatrix A(4, 6, {{0, 5}, {}, {1, 2, 3}, {4}});
    BitMatrix B = parse_matrix(to_gtm1(A));
    CHECK(B.rows() == A.rows());
    CHECK(B.cols() == A.cols());
    CHECK(B == A); // row data compares exactly
    CHECK(to_gtm1(B) == to_gtm1(A));
}

TEST_CASE("gtm1 rejects malformed input") {
    CHECK_THROWS_AS(parse_matrix("GTMX 1 1\n0\n"), FormatError);
    CHECK_THROWS_AS(parse_matrix("GTM1 2 2\n1 0\n"), FormatError);       // missing row
    CHECK_THROWS_AS(parse_matrix("GTM1 1 2\n3 0 1\n"), FormatError);     // bad count
    CHECK_THROWS_AS(parse_matrix("GTM1 1 2\n2 1 0\n"), FormatError);     // not ascending
    CHECK_THROWS_AS(parse_matrix("GTM1 1 2\n2 0 0\n"), FormatError);     // duplicate
    CHECK_THROWS_AS(parse_matrix("GTM1 1 2\n1 2\n"), FormatError);       // out of range
    CHECK_THROWS_AS(parse_matrix("GTM1 1 2\n1 0\ntrailing\n"), FormatError);
}

TEST_CASE("gtv1 golden bytes and round-trip") {
    SupportSet x(256, {57, 3, 200});
    CHECK(to_gtv1(x) == "GTV1 256\n3 57 200\n");
    CHECK(parse_support(to_gtv1(x)) == x);

    SupportSet empty(9);
    CHECK(to_gtv1(empty) == "GTV1 9\n\n");
    CHECK(parse_support(to_gtv1(empty)) == empty);

    CHECK_THROWS_AS(parse_support("GTV1 4\n4\n"), FormatError);
    CHECK_THROWS_AS(parse_support("GTV1 4\n2 1\n"), FormatError); // not ascending
}

TEST_CASE("observation golden bytes and round-trip") {
    BitVec y = BitVec::from_string("0010");
    CHECK(to_observation(y) == "0010\n");
    std::istringstream in(to_observation(y));
    CHECK(from_observation(in) == y);

    std::istringstream bad("01x1\n");
    CHECK_THROWS_AS(from_observation(bad), FormatError);
}

TEST_CASE("file helpers round-trip through disk") {
    const std::string dir = "io_test_tmp_";
    BitMatrix A(2, 3, {{0, 2}, {1}});
    write_gtm1(dir + "m.gtm", A);
    CHECK(to_gtm1(read_gtm1(dir + "m.gtm")) == to_gtm1(A));

    SupportSet x(3, {1, 2});
    write_gtv1(dir + "x.gtv", x);
    CHECK(read_gtv1(dir + "x.gtv") == x);

    BitVec y = encode(A, x);
    write_observation(dir + "y.obs", y);
    CHECK(read_observation(dir + "y.obs") == y);

    CHECK_THROWS(read_gtm1(dir + "missing.gtm"));
    std::remove((dir + "m.gtm").c_str());
    std::remove((dir + "x.gtv").c_str());
    std::remove((dir + "y.obs").c_str());
}

TEST_CASE("sweep: noiseless grid point succeeds in every row") {
    auto code = induced_code(random_function(5, 3, 3, 77));
    BitMatrix A = codeword_graph_matrix(code);

    SweepConfig config;
    config.sparsity = 2;
    config.trials = 25;
    config.seed = 1;
    config.block_length = 8;
    config.nu_over_gamma = Rational(0);
    config.weight_cap = 16;
    config.grid = {{0, 0}};

    std::string csv = run_sweep(A, config);
    auto rows = csv_rows(csv);
    REQUIRE(rows.size() == 25);
    for (const auto& row : rows) {
        REQUIRE(row.size() == 7);
        CHECK(row[1] == 0); // e0_applied
        CHECK(row[2] == 0); // e1_applied
        CHECK(row[5] == 0); // false_neg
        CHECK(row[6] == 1); // success
    }
}

TEST_CASE("sweep: applied noise stays within each grid budget") {
    auto code = induced_code(random_function(5, 3, 3, 78));
    BitMatrix A = codeword_graph_matrix(code);

    SweepConfig config;
    config.sparsity = 2;
    config.trials = 10;
    config.seed = 3;
    config.block_length = 8;
    config.nu_over_gamma = Rational(1, 4);
    config.weight_cap = 16;
    config.grid = {{5, 1}, {0, 2}, {12, 0}};

    auto rows = csv_rows(run_sweep(A, config));
    REQUIRE(rows.size() == 30);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const GridPoint& g = config.grid[i / 10];
        CHECK(rows[i][0] == i % 10); // trial column resets per grid point
        CHECK(rows[i][1] <= g.e0);
        CHECK(rows[i][2] <= g.e1);
    }
}

TEST_CASE("sweep: identical configs give byte-identical CSV") {
    auto code = induced_code(random_function(6, 3, 3, 79));
    BitMatrix A = codeword_graph_matrix(code);

    SweepConfig config;
    config.sparsity = 3;
    config.trials = 40;
    config.seed = 99;
    config.block_length = 8;
    config.nu_over_gamma = Rational(1, 8);
    config.weight_cap = 20;
    config.grid = {{4, 1}, {8, 2}};

    std::string csv = run_sweep(A, config);
    CHECK(csv == run_sweep(A, config));
    CHECK(csv.rfind("trial,e0_applied,e1_applied,decoded_weight,false_pos,false_neg,success\n",
                    0) == 0);
}

TEST_CASE("sweep: config validation") {
    auto code = induced_code(random_function(4, 2, 2, 80));
    BitMatrix A = codeword_graph_matrix(code);
    SweepConfig config;
    config.sparsity = 1;
    config.trials = 1;
    config.block_length = 4;
    config.weight_cap = 4;

    SUBCASE("empty grid") {
        CHECK_THROWS_AS(run_sweep(A, config), std::invalid_argument);
    }
    SUBCASE("zero trials") {
        config.grid = {{0, 0}};
        config.trials = 0;
        CHECK_THROWS_AS(run_sweep(A, config), std::invalid_argument);
    }
}
