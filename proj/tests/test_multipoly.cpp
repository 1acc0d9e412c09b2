#include <gtest/gtest.h>

#include <map>
#include <random>

#include "charpoly/interpolate.hpp"
#include "charpoly/multipoly.hpp"
#include "charpoly/unipoly.hpp"

using namespace charpoly;

namespace {
const std::vector<std::string> NK{"n", "k"};
MultiPoly var(const std::string& v) { return MultiPoly::variable(NK, v); }
} // namespace

TEST(MultiPoly, TermOrderIsGradedLex) {
    MultiPoly p(NK);
    p.add_term({0, 0}, 1);
    p.add_term({1, 1}, 2);
    p.add_term({2, 0}, 3);
    p.add_term({0, 1}, 4);
    std::vector<std::vector<int>> order;
    for (const auto& [e, c] : p.terms())
        order.push_back(e);
    std::vector<std::vector<int>> expected{{2, 0}, {1, 1}, {0, 1}, {0, 0}};
    EXPECT_EQ(order, expected);
    EXPECT_EQ(p.str(), "3*n^2 + 2*n*k + 4*k + 1");
}

TEST(MultiPoly, ArithmeticAndNoZeroTerms) {
    MultiPoly n = var("n"), k = var("k");
    MultiPoly p = (n + k) * (n - k);
    EXPECT_EQ(p, n * n - k * k);
    MultiPoly zero = p - p;
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.terms().size(), 0u);
    EXPECT_EQ(p.degree("n"), 2);
    EXPECT_EQ(p.total_degree(), 2);
    EXPECT_EQ((n * k).pow(3).coeff({3, 3}), Rat(1));
    EXPECT_EQ(p.eval({Rat(5), Rat(3)}), Rat(16));
    EXPECT_EQ(p.derivative("n"), n * Rat(2));
}

TEST(MultiPoly, ComposeAndExtend) {
    MultiPoly n = var("n"), k = var("k");
    MultiPoly p = n * n - k;
    std::vector<std::string> st{"s", "t"};
    MultiPoly s = MultiPoly::variable(st, "s"), t = MultiPoly::variable(st, "t");
    MultiPoly q = p.compose({s + t, s * t});
    EXPECT_EQ(q, (s + t) * (s + t) - s * t);
    MultiPoly one_var = MultiPoly::variable({"k"}, "k");
    MultiPoly widened = one_var.extend_vars(NK);
    EXPECT_EQ(widened, k);
    EXPECT_THROW(p + q, error);
}

TEST(Interpolate, KnownCases) {
    // {0 -> 1, 1 -> 2} with deg <= 1 in n is n + 1
    std::map<std::vector<long>, Rat> line{{{0}, 1}, {{1}, 2}};
    MultiPoly p = interp_grid(line, {"n"}, {1});
    EXPECT_EQ(p, MultiPoly::variable({"n"}, "n") + MultiPoly::constant({"n"}, 1));

    // 2x2 grid of n*k values reproduces n*k
    std::map<std::vector<long>, Rat> grid;
    for (long n = 1; n <= 2; ++n)
        for (long k = 3; k <= 4; ++k)
            grid[{n, k}] = Rat(n * k);
    MultiPoly nk = interp_grid(grid, NK, {1, 1});
    EXPECT_EQ(nk, var("n") * var("k"));

    // degree bound not saturated: values of k - 1 at k in {0..3}, bound 3
    std::map<std::vector<long>, Rat> cube;
    for (long k = 0; k <= 3; ++k)
        cube[{k}] = Rat(k - 1);
    MultiPoly km1 = interp_grid(cube, {"k"}, {3});
    EXPECT_EQ(km1, MultiPoly::variable({"k"}, "k") - MultiPoly::constant({"k"}, 1));
}

TEST(Interpolate, RoundTripOnShearedGrid) {
    // sheared grid: per-k node sets for n differ, as the ahat grids do
    MultiPoly truth = var("n") * var("n") * var("k") - var("k") * Rat(7) +
                      MultiPoly::constant(NK, Rat(Int(1), Int(3)));
    std::map<std::vector<long>, Rat> values;
    for (long k = 1; k <= 2; ++k)
        for (long n = k + 5; n <= k + 7; ++n)
            values[{n, k}] = truth.eval({Rat(n), Rat(k)});
    MultiPoly got = interp_grid(values, NK, {2, 1});
    EXPECT_EQ(got, truth);
    for (const auto& [pt, v] : values)
        EXPECT_EQ(got.eval({Rat(pt[0]), Rat(pt[1])}), v);
}

TEST(Interpolate, RejectsBadGrids) {
    std::map<std::vector<long>, Rat> missing{{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 3}};
    EXPECT_THROW(interp_grid(missing, NK, {1, 1}), error);
    std::map<std::vector<long>, Rat> short_line{{{0}, 1}};
    EXPECT_THROW(interp_grid(short_line, {"n"}, {1}), error);
}

TEST(UniPoly, CoreOperations) {
    UniPoly p({Rat(-4), Rat(0), Rat(1)});  // n^2 - 4
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.eval(Rat(3)), Rat(5));
    UniPoly x = UniPoly::x();
    UniPoly q = (x - UniPoly::constant(1)) * (x - UniPoly::constant(1)) *
                (x + UniPoly::constant(2));
    EXPECT_EQ(UniPoly::gcd(q, q.derivative()).degree(), 1);
    UniPoly sqf = q.squarefree_part();
    EXPECT_EQ(sqf.degree(), 2);
    EXPECT_TRUE(sqf.rem(x - UniPoly::constant(1)).is_zero());
    EXPECT_TRUE(sqf.rem(x + UniPoly::constant(2)).is_zero());
    EXPECT_EQ(q.exact_div(x + UniPoly::constant(2)),
              (x - UniPoly::constant(1)) * (x - UniPoly::constant(1)));
    EXPECT_THROW(q.exact_div(x - UniPoly::constant(7)), error);
}

TEST(UniPoly, NewtonInterpolation) {
    std::vector<Rat> xs{0, 1, 2, 5}, ys;
    UniPoly truth({Rat(2), Rat(Int(-1), Int(2)), Rat(0), Rat(3)});
    for (const auto& x : xs)
        ys.push_back(truth.eval(x));
    EXPECT_EQ(newton_interpolate(xs, ys), truth);
    EXPECT_THROW(newton_interpolate({Rat(1), Rat(1)}, {Rat(0), Rat(1)}), error);
}
