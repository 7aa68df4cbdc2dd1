#include "oseenvb/study.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace oseenvb;

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(s);
    while (std::getline(is, cell, sep)) out.push_back(cell);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

} // namespace

TEST(Csv, Headers)
{
    EXPECT_EQ(csv_header(false), "level,h,dofs,err_omega,rate_omega,err_p,rate_p,err_u_direct,rate_u_direct,err_u_elliptic,"
                                 "rate_u_elliptic,err_V,rate_V,err_Vw,rate_Vw,eta,eff1,eff2");
    EXPECT_EQ(csv_header(true).substr(0, 14), "step,heff,dofs");
    EXPECT_EQ(csv_header(true).substr(9), csv_header(false).substr(7));
}

TEST(Csv, RowsRatesAndDeterminism)
{
    const ManufacturedCase c = manufactured_case("ex1");
    std::ostringstream a, b;
    const StudyReport r = uniform_study(c, 1, 3, 1.0, 4);
    write_csv(a, r);
    write_csv(b, uniform_study(c, 1, 3, 1.0, 4));
    EXPECT_EQ(a.str(), b.str());
    std::istringstream is(a.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, csv_header(false));
    int rows = 0;
    while (std::getline(is, line)) {
        const auto cells = split(line, ',');
        ASSERT_EQ(cells.size(), 18u);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const bool rate = i >= 4 && i <= 14 && i % 2 == 0;
            if (rate && rows == 0) {
                EXPECT_TRUE(cells[i].empty());
                continue;
            }
            std::size_t used = 0;
            const double v = std::stod(cells[i], &used);
            EXPECT_EQ(used, cells[i].size());
            EXPECT_TRUE(std::isfinite(v));
        }
        ++rows;
    }
    EXPECT_EQ(rows, 3);
    EXPECT_FALSE(r.rows[0].rate);
    ASSERT_TRUE(r.rows[1].rate);
    EXPECT_NEAR(r.rows[1].rate->omega,
                convergence_rate(r.rows[0].err.omega, r.rows[1].err.omega, r.rows[0].h, r.rows[1].h), 1e-15);
}

TEST(Csv, FormatNumber)
{
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(format_number(std::nan("")), "");
    const double x = 0.1 + 0.2;
    EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Study, TailRate)
{
    StudyReport r;
    for (int i = 0; i < 5; ++i) {
        StudyRow row;
        row.level = i;
        row.h = std::pow(0.5, i);
        row.err.omega = std::pow(row.h, 2.0);
        r.add(row);
    }
    EXPECT_NEAR(r.tail_rate(&ErrorRecord::omega), 2.0, 1e-14);
    EXPECT_NEAR(r.last_rate(&ErrorRecord::omega), 2.0, 1e-14);
    EXPECT_TRUE(std::isnan(r.tail_rate(&ErrorRecord::omega, 5)));
    EXPECT_THROW(uniform_study(manufactured_case("ex1"), 1, 0, 1.0, 4), ConfigError);
}

TEST(Study, ThreadedMatchesSerial)
{
    const ManufacturedCase c = manufactured_case("ex2b");
    StudyOptions two;
    two.threads = 2;
    const StudyReport a = uniform_study(c, 2, 2, c.delta, 2);
    const StudyReport b = uniform_study(c, 2, 2, c.delta, 2, two);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_NEAR(a.rows[i].err.omega, b.rows[i].err.omega, 1e-12 * a.rows[i].err.omega);
        EXPECT_NEAR(a.rows[i].eta, b.rows[i].eta, 1e-12 * a.rows[i].eta);
    }
}
