#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "twospin/csv.hpp"

using namespace twospin;

TEST(Csv, FormatTwelveSignificantDigits) {
    EXPECT_EQ(csv::format_number(1.0), "1");
    EXPECT_EQ(csv::format_number(0.1234567890123456), "0.123456789012");
    EXPECT_EQ(csv::format_number(-1.5e-20), "-1.5e-20");
}

TEST(Csv, RoundTrip) {
    csv::Table t;
    t.metadata = {"twospin test", "note: with, comma"};
    t.header = {"x[-]", "y, quoted[bits]"};
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 50; ++i) t.add_row({u(rng), u(rng) * 1e-9});

    std::stringstream ss;
    csv::write(ss, t);
    const auto back = csv::read(ss);
    EXPECT_EQ(back.metadata, t.metadata);
    EXPECT_EQ(back.header, t.header);
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            EXPECT_EQ(csv::format_number(back.rows[i][j]), csv::format_number(t.rows[i][j]));
            EXPECT_NEAR(back.rows[i][j], t.rows[i][j], 1e-11 * std::abs(t.rows[i][j]));
        }
}

TEST(Csv, RowWidthAndColumnLookup) {
    csv::Table t;
    t.header = {"a", "b"};
    EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
    EXPECT_EQ(t.column("b"), 1u);
    EXPECT_THROW(t.column("c"), std::out_of_range);
}

TEST(Csv, FileRoundTrip) {
    csv::Table t;
    t.header = {"v"};
    t.add_row({3.25});
    const std::string path = ::testing::TempDir() + "twospin_csv_test.csv";
    csv::write_file(path, t);
    EXPECT_EQ(csv::read_file(path).rows[0][0], 3.25);
    std::remove(path.c_str());
    EXPECT_THROW(csv::read_file(path), std::runtime_error);
}
