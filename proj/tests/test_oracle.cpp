#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace oracle;

TEST(Oracle, ApplyPauli) {
    Vec e0 = {1, 0};
    Vec x = apply_gen(parse_gen("X"), e0);
    EXPECT_DOUBLE_EQ(x[1], 1.0);
    EXPECT_DOUBLE_EQ(x[0], 0.0);

    Vec e1 = {0, 1};
    Vec z = apply_gen(parse_gen("Z"), e1);
    EXPECT_DOUBLE_EQ(z[1], -1.0);

    Vec y = apply_gen(parse_gen("Y"), e0);  // XZ|0> = X|0> = |1>
    EXPECT_DOUBLE_EQ(y[1], 1.0);
    Vec y1 = apply_gen(parse_gen("Y"), e1);  // XZ|1> = -X|1> = -|0>
    EXPECT_DOUBLE_EQ(y1[0], -1.0);
}

TEST(Oracle, StabilizedStates) {
    Vec plus = stabilized_state({parse_gen("X")}, 1);
    EXPECT_NEAR(plus[0], plus[1], 1e-12);
    EXPECT_NEAR(norm(plus), 1.0, 1e-12);

    Vec bell = stabilized_state({parse_gen("XX"), parse_gen("ZZ")}, 2);
    EXPECT_NEAR(std::abs(bell[0]), std::abs(bell[3]), 1e-12);
    EXPECT_NEAR(bell[1], 0.0, 1e-12);
    EXPECT_NEAR(bell[2], 0.0, 1e-12);

    Vec xbell = stabilized_state({parse_gen("XX"), parse_gen("-ZZ")}, 2);
    EXPECT_NEAR(std::abs(xbell[1]), std::abs(xbell[2]), 1e-12);
    EXPECT_NEAR(xbell[0], 0.0, 1e-12);

    Vec ghz = stabilized_state({parse_gen("XXX"), parse_gen("ZZI"), parse_gen("IZZ")}, 3);
    EXPECT_NEAR(std::abs(ghz[0]), std::abs(ghz[7]), 1e-12);
    for (int i = 1; i < 7; ++i) EXPECT_NEAR(ghz[i], 0.0, 1e-12);
}

TEST(Oracle, BellContract) {
    Vec bell = stabilized_state({parse_gen("XX"), parse_gen("ZZ")}, 2);
    Vec closed = bell_contract(bell, 2, 0, 1);
    ASSERT_EQ(closed.size(), 1u);
    EXPECT_GT(std::abs(closed[0]), 0.5);  // closed loop is a nonzero scalar

    Vec xbell = stabilized_state({parse_gen("XX"), parse_gen("-ZZ")}, 2);
    Vec null = bell_contract(xbell, 2, 0, 1);
    EXPECT_NEAR(std::abs(null[0]), 0.0, 1e-12);  // orthogonal Bell flavors
}

TEST(Oracle, SpiderFusion) {
    // Two 3-leg GHZ tensors glued on one leg give the 4-leg GHZ tensor.
    std::vector<Gen> spider3 = {parse_gen("XXX"), parse_gen("ZZI"), parse_gen("IZZ")};
    Vec a = stabilized_state(spider3, 3);
    Vec prod = kron(a, 3, a);
    // Glue leg 2 of the first to leg 0 of the second (global legs 2 and 3).
    Vec fused = bell_contract(prod, 6, 2, 3);
    std::vector<Gen> spider4 = {parse_gen("XXXX"), parse_gen("ZZII"), parse_gen("IZZI"),
                                parse_gen("IIZZ")};
    Vec expect = stabilized_state(spider4, 4);
    EXPECT_TRUE(same_ray(fused, expect));
}

TEST(Oracle, KronIndexConvention) {
    Vec e1 = {0, 1};  // |1> on one leg
    Vec e0 = {1, 0};
    Vec v = kron(e1, 1, e0);  // leg 0 carries the 1
    ASSERT_EQ(v.size(), 4u);
    EXPECT_DOUBLE_EQ(v[1], 1.0);
    Vec w = kron(e0, 1, e1);  // leg 1 carries the 1
    EXPECT_DOUBLE_EQ(w[2], 1.0);
}
