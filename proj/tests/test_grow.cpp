#include "qgrow/grow.hpp"

#include <gtest/gtest.h>

#include "qgrow/distance.hpp"
#include "test_util.hpp"

using namespace qgrow;

// [[4,1,2]] with Z-bare on {0,1}: one X-type concatenation copies the support,
// stretches the X check to weight 6, and pairs each support qubit with its
// partner by a new ZZ row.
TEST(Concatenate, WorkedFourQubitExample) {
    CssSubsystemCode seed =
        testutil::make_code(4, 1, {"1111"}, {"1010", "0101"}, {"1010"}, {"1100"});
    ASSERT_TRUE(validate(seed).ok());

    CssSubsystemCode out = concatenate_support(seed, 0, PauliType::X);
    EXPECT_EQ(out.n, 6u);
    EXPECT_EQ(out.k, 1u);
    EXPECT_EQ(out.gauge_x, BinaryMatrix::from_strings({"111111"}));
    EXPECT_EQ(out.gauge_z,
              BinaryMatrix::from_strings({"101000", "010100", "100010", "010001"}));
    EXPECT_EQ(out.bare_x, BinaryMatrix::from_strings({"101010"}));
    EXPECT_EQ(out.bare_z, BinaryMatrix::from_strings({"110000"}));
    EXPECT_TRUE(validate(out).ok());
}

TEST(Concatenate, RejectsBadArguments) {
    CssSubsystemCode seed = testutil::bs2x2_fixture();
    EXPECT_THROW(concatenate_support(seed, 5, PauliType::X), std::invalid_argument);
    CssSubsystemCode empty_support = seed;
    empty_support.bare_z.rows[0] = BitVector(4);
    EXPECT_THROW(concatenate_support(empty_support, 0, PauliType::X), std::invalid_argument);
}

// Weight reduction sheds new-section pairs two at a time, removing each pair
// from every row that contains both bits before appending it as its own row.
TEST(Reduce, ShedsPairsAndRewritesSharingRows) {
    CssSubsystemCode code(8);
    code.gauge_x = BinaryMatrix::from_strings({"11111111", "00001111"});
    code.gauge_z = BinaryMatrix(8);
    code.metadata["grown_section_start"] = "4";
    code.metadata["grown_type"] = "X";

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    CssSubsystemCode out = nonisometric_reduce(code, PauliType::X, 4, &pairs);
    EXPECT_EQ(out.gauge_x, BinaryMatrix::from_strings(
                               {"11110000", "00000000", "00001100", "00000011"}));
    EXPECT_EQ(pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{4, 5}, {6, 7}}));
    EXPECT_EQ(out.gauge_z.row_count(), 0u);
}

TEST(Reduce, ErrorsWhenSectionExhausted) {
    CssSubsystemCode seed =
        testutil::make_code(4, 1, {"1111"}, {"1010", "0101"}, {"1010"}, {"1100"});
    CssSubsystemCode grown = concatenate_support(seed, 0, PauliType::X);
    // Weight-6 row, cap 2: one shed gets it to 4, then the section is empty.
    EXPECT_THROW(nonisometric_reduce(grown, PauliType::X, 2), std::runtime_error);
    EXPECT_THROW(nonisometric_reduce(grown, PauliType::X, 1), std::invalid_argument);
    // Without a matching concatenation the move is undefined.
    EXPECT_THROW(nonisometric_reduce(seed, PauliType::X, 4), std::invalid_argument);
    EXPECT_THROW(nonisometric_reduce(grown, PauliType::Z, 4), std::invalid_argument);
}

TEST(Reduce, CapFourSplitsStretchedCheck) {
    CssSubsystemCode seed =
        testutil::make_code(4, 1, {"1111"}, {"1010", "0101"}, {"1010"}, {"1100"});
    CssSubsystemCode grown = concatenate_support(seed, 0, PauliType::X);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    CssSubsystemCode out = nonisometric_reduce(grown, PauliType::X, 4, &pairs);
    EXPECT_EQ(out.gauge_x, BinaryMatrix::from_strings({"111100", "000011"}));
    EXPECT_EQ(pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{4, 5}}));
    EXPECT_TRUE(validate(out).ok());
}

// Shifting adds a pairing row into the lowest-index pre-existing row carrying
// an over-covered column; the row space (hence the code) is unchanged.
TEST(Shift, MovesColumnsOffOverCoveredQubits) {
    CssSubsystemCode seed =
        testutil::make_code(4, 1, {"1111"}, {"1010", "0101"}, {"1010"}, {"1100"});
    CssSubsystemCode grown = concatenate_support(seed, 0, PauliType::X);
    grown = nonisometric_reduce(grown, PauliType::X, 4);

    std::vector<std::pair<std::size_t, std::size_t>> shifts;
    CssSubsystemCode out = shift_checks(grown, PauliType::X, 1, &shifts, 1);
    EXPECT_EQ(out.gauge_z,
              BinaryMatrix::from_strings({"001010", "000101", "100010", "010001"}));
    EXPECT_EQ(shifts, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}}));
    // Row space unchanged.
    EXPECT_EQ(rref(out.gauge_z).mat, rref(grown.gauge_z).mat);
    for (std::size_t c = 0; c < out.n; ++c)
        EXPECT_LE(column_degrees(out.gauge_z)[c], 2u);
}

TEST(Shift, NoOpWhenWithinCap) {
    CssSubsystemCode seed =
        testutil::make_code(4, 1, {"1111"}, {"1010", "0101"}, {"1010"}, {"1100"});
    CssSubsystemCode grown = concatenate_support(seed, 0, PauliType::X);
    std::vector<std::pair<std::size_t, std::size_t>> shifts;
    CssSubsystemCode out = shift_checks(grown, PauliType::X, 2, &shifts);
    EXPECT_TRUE(shifts.empty());
    EXPECT_EQ(out.gauge_z, grown.gauge_z);
    EXPECT_THROW(shift_checks(seed, PauliType::X, 2), std::invalid_argument);
}

// One full iteration on the 2x2 Bacon-Shor seed with all caps at 2 lands
// exactly on the 3x3 Bacon-Shor gauge matrices (hand-checked).
TEST(GrowIteration, Bs2x2BecomesBs3x3) {
    GrowthConfig cfg;
    cfg.w_x = cfg.w_z = cfg.q_x = cfg.q_z = 2;
    auto [code, log] = grow_iteration(testutil::bs2x2_fixture(), cfg);

    EXPECT_EQ(code.n, 9u);
    EXPECT_EQ(code.k, 1u);
    EXPECT_EQ(code.gauge_x,
              BinaryMatrix::from_strings({"110000000", "001100000", "000011000",
                                          "010000100", "000100010", "000001001"}));
    EXPECT_EQ(code.gauge_z,
              BinaryMatrix::from_strings({"101000000", "010100000", "100010000",
                                          "010001000", "000000110", "000000101"}));
    EXPECT_EQ(code.bare_x, BinaryMatrix::from_strings({"010101000"}));
    EXPECT_EQ(code.bare_z, BinaryMatrix::from_strings({"110000100"}));
    ASSERT_TRUE(validate(code).ok());

    DistanceBounds b = distance_bounds(log, code);
    EXPECT_EQ(b.lower, 3u);
    EXPECT_EQ(b.lower_x, 3u);
    EXPECT_EQ(b.lower_z, 3u);
    EXPECT_EQ(b.upper_x, std::vector<std::size_t>{3});
    EXPECT_EQ(b.upper_z, std::vector<std::size_t>{3});
    EXPECT_EQ(dressed_distance(code, PauliType::X), 3u);
    EXPECT_EQ(dressed_distance(code, PauliType::Z), 3u);
}

// The iteration contract on assorted seeds: validity, k, and Tanner caps are
// preserved, and the enumerated distances respect the +1 lower bound.
TEST(GrowIteration, RaisesDistanceAndKeepsInvariants) {
    std::vector<CssSubsystemCode> seeds = {testutil::seed422_fixture(),
                                           testutil::bs2x2_fixture(),
                                           testutil::bs3x3_fixture()};
    for (const CssSubsystemCode& seed : seeds) {
        WeightProfile p = weight_profile(seed);
        GrowthConfig cfg;
        cfg.w_x = std::max<std::size_t>(p.w_x, 2);
        cfg.w_z = std::max<std::size_t>(p.w_z, 2);
        cfg.q_x = std::max<std::size_t>(p.q_x, 2);
        cfg.q_z = std::max<std::size_t>(p.q_z, 2);

        std::size_t d0x = *dressed_distance(seed, PauliType::X, seed.n);
        std::size_t d0z = *dressed_distance(seed, PauliType::Z, seed.n);

        auto [code, log] = grow_iteration(seed, cfg);
        ASSERT_TRUE(validate(code).ok());
        EXPECT_EQ(code.k, seed.k);
        WeightProfile q = weight_profile(code);
        EXPECT_LE(q.w_x, cfg.w_x);
        EXPECT_LE(q.w_z, cfg.w_z);
        EXPECT_LE(q.q_x, cfg.q_x);
        EXPECT_LE(q.q_z, cfg.q_z);

        DistanceBounds b = distance_bounds(log, code);
        EXPECT_EQ(b.lower_x, d0x + 1);
        EXPECT_EQ(b.lower_z, d0z + 1);
        std::size_t dx = *dressed_distance(code, PauliType::X, code.n);
        std::size_t dz = *dressed_distance(code, PauliType::Z, code.n);
        EXPECT_GE(dx, b.lower_x);
        EXPECT_GE(dz, b.lower_z);
        for (std::size_t j = 0; j < code.k; ++j) {
            EXPECT_LE(dx, b.upper_x[j]);
            EXPECT_LE(dz, b.upper_z[j]);
        }
    }
}

TEST(Grow, ZeroIterationsIsIdentity) {
    CssSubsystemCode seed = testutil::bs2x2_fixture();
    GrowthConfig cfg;
    auto [code, log] = grow(seed, cfg);
    EXPECT_EQ(code.gauge_x, seed.gauge_x);
    EXPECT_EQ(code.gauge_z, seed.gauge_z);
    EXPECT_EQ(code.bare_x, seed.bare_x);
    EXPECT_EQ(code.bare_z, seed.bare_z);
    EXPECT_TRUE(log.records.empty());
    EXPECT_EQ(distance_bounds(log, code).lower, 2u);
}

TEST(Grow, RoundRobinFollowsFrequencyRatio) {
    GrowthConfig cfg;
    cfg.w_x = cfg.w_z = cfg.q_x = 5;
    cfg.q_z = 4;
    cfg.m_x = 2;
    cfg.m_z = 1;
    cfg.iterations = 6;
    auto [code, log] = grow(testutil::seed422_fixture(), cfg);
    ASSERT_TRUE(validate(code).ok());
    EXPECT_EQ(log.rounds_x, 4u);
    EXPECT_EQ(log.rounds_z, 2u);

    std::vector<PauliType> schedule;
    std::size_t last_round = static_cast<std::size_t>(-1);
    for (const GrowthRecord& rec : log.records) {
        if (rec.round != last_round) {
            schedule.push_back(rec.type);
            last_round = rec.round;
        }
    }
    EXPECT_EQ(schedule, (std::vector<PauliType>{PauliType::X, PauliType::X, PauliType::Z,
                                                PauliType::X, PauliType::X, PauliType::Z}));

    DistanceBounds b = distance_bounds(log, code);
    EXPECT_EQ(b.lower_x, 2u + 4u);
    EXPECT_EQ(b.lower_z, 2u + 2u);
    EXPECT_EQ(b.lower, 4u);
}

TEST(Grow, RejectsBadSeedsAndConfigs) {
    GrowthConfig cfg;
    cfg.iterations = 1;
    // Seed checks exceed the caps.
    EXPECT_THROW(grow(testutil::seed422_fixture(), cfg), std::invalid_argument);
    // Nothing to grow.
    CssSubsystemCode trivial = testutil::make_code(2, 0, {"11"}, {"11"}, {}, {});
    EXPECT_THROW(grow(trivial, cfg), std::invalid_argument);
    // Invalid frequency and cap settings.
    GrowthConfig bad = cfg;
    bad.m_x = bad.m_z = 0;
    EXPECT_THROW(grow(testutil::bs2x2_fixture(), bad), std::invalid_argument);
    bad = cfg;
    bad.q_z = 1;
    EXPECT_THROW(grow(testutil::bs2x2_fixture(), bad), std::invalid_argument);
    // An invalid seed is rejected outright.
    CssSubsystemCode broken = testutil::bs2x2_fixture();
    broken.bare_x.rows[0] = BitVector::from_string("1000");
    EXPECT_THROW(grow(broken, cfg), std::invalid_argument);
}

TEST(Grow, ScalingEnvelopePlugInValues) {
    EXPECT_EQ(scaling_envelope(1, 1, 1, 1), 4u);
    EXPECT_EQ(scaling_envelope(2, 10, 1, 2), 280u);
}

TEST(Grow, QubitGrowthStaysWithinEnvelope) {
    GrowthConfig cfg;
    cfg.w_x = cfg.w_z = cfg.q_x = cfg.q_z = 2;
    cfg.iterations = 6;
    CssSubsystemCode seed = testutil::bs2x2_fixture();
    auto [code, log] = grow(seed, cfg);
    ASSERT_TRUE(validate(code).ok());

    std::size_t c = 0;
    for (const GrowthRecord& rec : log.records)
        for (std::size_t o : rec.overlaps) c = std::max(c, o);
    std::size_t added = code.n - seed.n;
    EXPECT_LE(added, scaling_envelope(seed.k, cfg.iterations, c, 2));
}

// Per-phase ledger over a mixed run: every record obeys the staged weight and
// degree bounds, growth appears only where it should, and the running lower
// bounds advance one per completed round of the grown type.
TEST(Grow, LogObeysPhaseLedger) {
    GrowthConfig cfg;
    cfg.w_x = cfg.w_z = 4;
    cfg.q_x = 5;
    cfg.q_z = 4;
    cfg.iterations = 4;
    CssSubsystemCode seed = testutil::seed422_fixture();
    auto [code, log] = grow(seed, cfg);
    ASSERT_TRUE(validate(code).ok());

    for (const GrowthRecord& rec : log.records) {
        bool x_round = rec.type == PauliType::X;
        std::size_t cap_same_w = x_round ? cfg.w_x : cfg.w_z;
        std::size_t cap_opp_w = x_round ? cfg.w_z : cfg.w_x;
        std::size_t cap_same_q = x_round ? cfg.q_x : cfg.q_z;
        std::size_t cap_opp_q = x_round ? cfg.q_z : cfg.q_x;
        std::size_t same_w = x_round ? rec.profile.w_x : rec.profile.w_z;
        std::size_t opp_w = x_round ? rec.profile.w_z : rec.profile.w_x;
        std::size_t same_q = x_round ? rec.profile.q_x : rec.profile.q_z;
        std::size_t opp_q = x_round ? rec.profile.q_z : rec.profile.q_x;

        std::size_t max_gauge_overlap = 0;
        for (std::size_t o : rec.gauge_overlaps) {
            EXPECT_EQ(o % 2, 0u);  // even-overlap invariant
            max_gauge_overlap = std::max(max_gauge_overlap, o);
        }

        EXPECT_LE(opp_w, cap_opp_w);
        EXPECT_LE(same_q, cap_same_q);
        if (rec.phase == "concatenate") {
            EXPECT_LE(same_w, cap_same_w + max_gauge_overlap);
            EXPECT_LE(opp_q, cap_opp_q + 1);
            EXPECT_FALSE(rec.qubits_added.empty());
            EXPECT_TRUE(rec.pairs.empty());
            EXPECT_TRUE(rec.shifts.empty());
        } else if (rec.phase == "reduce") {
            EXPECT_LE(same_w, cap_same_w);
            EXPECT_LE(opp_q, cap_opp_q + 1);
            EXPECT_TRUE(rec.qubits_added.empty());
        } else {
            ASSERT_EQ(rec.phase, "shift");
            EXPECT_LE(same_w, cap_same_w);
            EXPECT_LE(opp_q, cap_opp_q);
            EXPECT_TRUE(rec.qubits_added.empty());
            EXPECT_TRUE(rec.pairs.empty());
        }
    }

    // Bare-weight growth per round is bounded by the logged overlaps.
    std::vector<std::size_t> wx, wz;
    for (const auto& row : seed.bare_x.rows) wx.push_back(row.weight());
    for (const auto& row : seed.bare_z.rows) wz.push_back(row.weight());
    std::size_t r = 0;
    while (r < log.records.size()) {
        std::size_t round = log.records[r].round;
        std::vector<std::size_t> budget(seed.k, 0);
        bool x_round = log.records[r].type == PauliType::X;
        const GrowthRecord* last = nullptr;
        for (; r < log.records.size() && log.records[r].round == round; ++r) {
            if (log.records[r].phase == "concatenate")
                for (std::size_t l = 0; l < seed.k; ++l)
                    budget[l] += log.records[r].overlaps[l];
            last = &log.records[r];
        }
        ASSERT_NE(last, nullptr);
        for (std::size_t l = 0; l < seed.k; ++l) {
            if (x_round) {
                EXPECT_LE(last->bare_x_weights[l], wx[l] + budget[l]);
                EXPECT_EQ(last->bare_z_weights[l], wz[l]);
            } else {
                EXPECT_LE(last->bare_z_weights[l], wz[l] + budget[l]);
                EXPECT_EQ(last->bare_x_weights[l], wx[l]);
            }
        }
        wx = last->bare_x_weights;
        wz = last->bare_z_weights;
    }

    // Lower bounds advance exactly one per completed round of the grown type.
    std::size_t seen_x = 0, seen_z = 0, last_round = static_cast<std::size_t>(-1);
    PauliType last_type = PauliType::X;
    for (const GrowthRecord& rec : log.records) {
        if (last_round != static_cast<std::size_t>(-1) && rec.round != last_round) {
            if (last_type == PauliType::X)
                ++seen_x;
            else
                ++seen_z;
        }
        EXPECT_EQ(rec.lower_x, log.seed_lower_x + seen_x);
        EXPECT_EQ(rec.lower_z, log.seed_lower_z + seen_z);
        last_round = rec.round;
        last_type = rec.type;
    }
    if (last_type == PauliType::X)
        ++seen_x;
    else
        ++seen_z;
    EXPECT_EQ(log.rounds_x, seen_x);
    EXPECT_EQ(log.rounds_z, seen_z);
}
