#pragma once

#include <utility>

#include "qgrow/distance.hpp"
#include "qgrow/subsystem_code.hpp"

namespace qgrow {

struct GrowthConfig {
    std::size_t w_x = 2;  // max check weight per type
    std::size_t w_z = 2;
    std::size_t q_x = 2;  // max qubit degree per type
    std::size_t q_z = 2;
    std::size_t m_x = 1;  // relative frequency of X-distance rounds
    std::size_t m_z = 1;
    std::size_t iterations = 0;  // total single-type rounds
};

// One record per phase of one (round, logical) step; profiles and bounds are
// snapshots taken right after the phase completed. Lower bounds count only
// fully completed rounds.
struct GrowthRecord {
    std::size_t round = 0;
    PauliType type = PauliType::X;
    std::size_t logical = 0;
    std::string phase;                                        // concatenate | reduce | shift
    std::vector<std::size_t> qubits_added;                    // concatenate only
    std::vector<std::pair<std::size_t, std::size_t>> pairs;   // reduce only
    std::vector<std::pair<std::size_t, std::size_t>> shifts;  // shift only: (column, row)
    std::vector<std::size_t> overlaps;  // |supp(bare_x[l]) ∩ supp(bare_z[j])| per l
    std::vector<std::size_t> gauge_overlaps;  // per same-type gauge row, vs the support, pre-concat
    std::vector<std::size_t> bare_x_weights;
    std::vector<std::size_t> bare_z_weights;
    WeightProfile profile;
    std::size_t n = 0;
    std::size_t lower_x = 0;
    std::size_t lower_z = 0;
};

struct GrowthLog {
    std::size_t seed_lower_x = 0;
    std::size_t seed_lower_z = 0;
    std::size_t rounds_x = 0;
    std::size_t rounds_z = 0;
    std::vector<GrowthRecord> records;
};

struct DistanceBounds {
    std::size_t lower = 0;
    std::size_t lower_x = 0;
    std::size_t lower_z = 0;
    std::vector<std::size_t> upper_x;  // tracked bare weight per logical
    std::vector<std::size_t> upper_z;
};

// Appendix-style worst-case count of qubits added over D rounds.
inline std::size_t scaling_envelope(std::size_t k, std::size_t D, std::size_t c,
                                    [[maybe_unused]] std::size_t d0) {
    return k * D * D + k * D * (c + 1) + c * k * k * D;
}

namespace growdetail {

constexpr const char* kSectionKey = "grown_section_start";
constexpr const char* kTypeKey = "grown_type";
constexpr const char* kLogicalKey = "grown_logical";

inline std::size_t section_start(const CssSubsystemCode& code, PauliType type,
                                 const char* op_name) {
    auto it = code.metadata.find(kSectionKey);
    auto ty = code.metadata.find(kTypeKey);
    if (it == code.metadata.end() || ty == code.metadata.end() ||
        ty->second != std::string(1, type_char(type)))
        throw std::invalid_argument(std::string(op_name) +
                                    ": requires a preceding concatenation of matching type");
    return std::stoul(it->second);
}

}  // namespace growdetail

// Repetition-code concatenation on the support of the opposite-type bare
// representative of logical j (type = the distance being grown): same-type
// checks and all same-type bare representatives gain a copy of their
// restriction to the support; the opposite-type matrix is zero-padded and
// gains one weight-2 row per support qubit pairing it with its new partner.
inline CssSubsystemCode concatenate_support(const CssSubsystemCode& code, std::size_t j,
                                            PauliType type) {
    if (j >= code.k) throw std::invalid_argument("concatenate_support: logical index out of range");
    const BinaryMatrix& support_src = type == PauliType::X ? code.bare_z : code.bare_x;
    if (j >= support_src.row_count())
        throw std::invalid_argument("concatenate_support: missing bare representative");
    std::vector<std::size_t> S = support_src.rows[j].support();
    if (S.empty()) throw std::invalid_argument("concatenate_support: empty bare support");

    const std::size_t old_n = code.n, r = S.size(), new_n = old_n + r;

    auto stretch = [&](const BitVector& row) {
        BitVector v = row;
        v.resize(new_n);
        for (std::size_t a = 0; a < r; ++a)
            if (row.get(S[a])) v.set(old_n + a, true);
        return v;
    };
    auto pad = [&](const BitVector& row) {
        BitVector v = row;
        v.resize(new_n);
        return v;
    };

    CssSubsystemCode out(new_n);
    out.k = code.k;
    out.metadata = code.metadata;

    const BinaryMatrix& same_gauge = type == PauliType::X ? code.gauge_x : code.gauge_z;
    const BinaryMatrix& opp_gauge = type == PauliType::X ? code.gauge_z : code.gauge_x;
    const BinaryMatrix& same_bare = type == PauliType::X ? code.bare_x : code.bare_z;
    const BinaryMatrix& opp_bare = type == PauliType::X ? code.bare_z : code.bare_x;

    BinaryMatrix new_same_gauge(new_n), new_opp_gauge(new_n), new_same_bare(new_n),
        new_opp_bare(new_n);
    for (const auto& row : same_gauge.rows) new_same_gauge.append_row(stretch(row));
    for (const auto& row : opp_gauge.rows) new_opp_gauge.append_row(pad(row));
    for (std::size_t a = 0; a < r; ++a) {
        BitVector v(new_n);
        v.set(S[a], true);
        v.set(old_n + a, true);
        new_opp_gauge.append_row(std::move(v));
    }
    for (const auto& row : same_bare.rows) new_same_bare.append_row(stretch(row));
    for (const auto& row : opp_bare.rows) new_opp_bare.append_row(pad(row));

    if (type == PauliType::X) {
        out.gauge_x = std::move(new_same_gauge);
        out.gauge_z = std::move(new_opp_gauge);
        out.bare_x = std::move(new_same_bare);
        out.bare_z = std::move(new_opp_bare);
    } else {
        out.gauge_z = std::move(new_same_gauge);
        out.gauge_x = std::move(new_opp_gauge);
        out.bare_z = std::move(new_same_bare);
        out.bare_x = std::move(new_opp_bare);
    }

    out.metadata[growdetail::kSectionKey] = std::to_string(old_n);
    out.metadata[growdetail::kTypeKey] = std::string(1, type_char(type));
    out.metadata[growdetail::kLogicalKey] = std::to_string(j);
    return out;
}

// Weight reduction after a matching concatenation: every same-type row above
// the cap repeatedly sheds the first two set positions of its newly-added
// section; each shed pair is removed from every row containing both bits and
// appended as its own weight-2 row. Opposite-type checks and bare logicals
// are untouched.
inline CssSubsystemCode nonisometric_reduce(
    const CssSubsystemCode& code, PauliType type, std::size_t cap,
    std::vector<std::pair<std::size_t, std::size_t>>* pairs_out = nullptr) {
    if (cap < 2) throw std::invalid_argument("nonisometric_reduce: cap must be >= 2");
    const std::size_t sect = growdetail::section_start(code, type, "nonisometric_reduce");

    CssSubsystemCode out = code;
    BinaryMatrix& H = type == PauliType::X ? out.gauge_x : out.gauge_z;
    const std::size_t original_rows = H.row_count();
    for (std::size_t i = 0; i < original_rows; ++i) {
        while (H.rows[i].weight() > cap) {
            std::size_t b1 = H.rows[i].next_set(sect);
            std::size_t b2 = b1 < out.n ? H.rows[i].next_set(b1 + 1) : out.n;
            if (b1 >= out.n || b2 >= out.n)
                throw std::runtime_error(
                    "nonisometric_reduce: row " + std::to_string(i) + " has weight " +
                    std::to_string(H.rows[i].weight()) + " > cap " + std::to_string(cap) +
                    " but fewer than two new-section bits remain");
            BitVector w(out.n);
            w.set(b1, true);
            w.set(b2, true);
            for (auto& row : H.rows)
                if (row.get(b1) && row.get(b2)) row ^= w;
            H.append_row(w);
            if (pairs_out) pairs_out->emplace_back(b1, b2);
        }
    }
    return out;
}

// Move checks off over-covered support columns: for each weight-2 pairing
// row v from the latest concatenation whose support column exceeds q_cap in
// the opposite-type matrix, add v to the lowest-index pre-existing row still
// containing that column (a pure row operation: the row space is unchanged).
inline CssSubsystemCode shift_checks(
    const CssSubsystemCode& code, PauliType type, std::size_t q_cap,
    std::vector<std::pair<std::size_t, std::size_t>>* shifts_out = nullptr,
    std::size_t shift_count = 1) {
    const std::size_t sect = growdetail::section_start(code, type, "shift_checks");

    CssSubsystemCode out = code;
    BinaryMatrix& H = type == PauliType::X ? out.gauge_z : out.gauge_x;
    const std::size_t r = out.n - sect;
    if (H.row_count() < r) throw std::logic_error("shift_checks: pairing rows missing");
    const std::size_t first_v = H.row_count() - r;

    std::vector<std::size_t> degree = column_degrees(H);
    for (std::size_t a = 0; a < r; ++a) {
        const BitVector& v = H.rows[first_v + a];
        std::size_t col = v.first_set();  // support qubit (partner bit is higher)
        std::size_t moved = 0;
        while (degree[col] > q_cap && moved < shift_count) {
            std::size_t target = first_v;
            for (std::size_t i = 0; i < first_v; ++i) {
                if (H.rows[i].get(col)) {
                    target = i;
                    break;
                }
            }
            if (target == first_v) break;  // no pre-existing row carries the column
            H.rows[target] ^= v;
            --degree[col];
            ++degree[sect + a];
            ++moved;
            if (shifts_out) shifts_out->emplace_back(col, target);
        }
    }
    return out;
}

namespace growdetail {

inline void clear_phase_keys(CssSubsystemCode& code) {
    code.metadata.erase(kSectionKey);
    code.metadata.erase(kTypeKey);
    code.metadata.erase(kLogicalKey);
}

inline std::vector<std::size_t> row_weights(const BinaryMatrix& m) {
    std::vector<std::size_t> w;
    for (const auto& row : m.rows) w.push_back(row.weight());
    return w;
}

// One full single-type round: concatenate/reduce/shift for every logical in
// ascending order, logging each phase.
inline CssSubsystemCode single_round(CssSubsystemCode code, std::size_t round_idx,
                                     PauliType type, const GrowthConfig& cfg, GrowthLog& log) {
    const std::size_t cap_w = type == PauliType::X ? cfg.w_x : cfg.w_z;
    const std::size_t cap_q_opp = type == PauliType::X ? cfg.q_z : cfg.q_x;

    for (std::size_t j = 0; j < code.k; ++j) {
        GrowthRecord base;
        base.round = round_idx;
        base.type = type;
        base.logical = j;
        base.lower_x = log.seed_lower_x + log.rounds_x;
        base.lower_z = log.seed_lower_z + log.rounds_z;

        const BinaryMatrix& same_bare = type == PauliType::X ? code.bare_x : code.bare_z;
        const BinaryMatrix& opp_bare = type == PauliType::X ? code.bare_z : code.bare_x;
        // Even-overlap invariant: same-type gauge rows meet the support being
        // concatenated an even number of times (they commute with the bare
        // representative).
        const BinaryMatrix& same_gauge = type == PauliType::X ? code.gauge_x : code.gauge_z;
        for (const auto& row : same_gauge.rows) {
            if (row.dot(opp_bare.rows[j]))
                throw std::logic_error("grow: same-type gauge row has odd overlap with support");
            base.gauge_overlaps.push_back((row & opp_bare.rows[j]).weight());
        }
        for (std::size_t l = 0; l < code.k; ++l)
            base.overlaps.push_back((same_bare.rows[l] & opp_bare.rows[j]).weight());

        std::size_t old_n = code.n;
        code = concatenate_support(code, j, type);
        GrowthRecord rec = base;
        rec.phase = "concatenate";
        for (std::size_t q = old_n; q < code.n; ++q) rec.qubits_added.push_back(q);
        rec.profile = weight_profile(code);
        rec.bare_x_weights = row_weights(code.bare_x);
        rec.bare_z_weights = row_weights(code.bare_z);
        rec.n = code.n;
        log.records.push_back(rec);

        rec = base;
        rec.phase = "reduce";
        code = nonisometric_reduce(code, type, cap_w, &rec.pairs);
        rec.profile = weight_profile(code);
        rec.bare_x_weights = row_weights(code.bare_x);
        rec.bare_z_weights = row_weights(code.bare_z);
        rec.n = code.n;
        log.records.push_back(rec);

        rec = base;
        rec.phase = "shift";
        code = shift_checks(code, type, cap_q_opp, &rec.shifts);
        rec.profile = weight_profile(code);
        rec.bare_x_weights = row_weights(code.bare_x);
        rec.bare_z_weights = row_weights(code.bare_z);
        rec.n = code.n;
        log.records.push_back(rec);

        clear_phase_keys(code);
    }
    if (type == PauliType::X)
        ++log.rounds_x;
    else
        ++log.rounds_z;
    return code;
}

inline void check_config(const GrowthConfig& cfg) {
    if (cfg.w_x < 2 || cfg.w_z < 2 || cfg.q_x < 2 || cfg.q_z < 2)
        throw std::invalid_argument("grow: all weight/degree caps must be >= 2");
    if (cfg.m_x == 0 && cfg.m_z == 0)
        throw std::invalid_argument("grow: at least one round frequency must be positive");
}

inline void check_seed(const CssSubsystemCode& seed, const GrowthConfig& cfg) {
    ValidationReport rep = validate(seed);
    if (!rep.ok()) throw std::invalid_argument("grow: invalid seed: " + rep.violations.front());
    if (seed.k == 0) throw std::invalid_argument("grow: seed has no logical qubits");
    WeightProfile p = weight_profile(seed);
    if (p.w_x > cfg.w_x || p.w_z > cfg.w_z || p.q_x > cfg.q_x || p.q_z > cfg.q_z)
        throw std::invalid_argument("grow: seed violates the weight/degree caps");
}

inline std::size_t seed_distance(const CssSubsystemCode& seed, PauliType type) {
    std::size_t cap = seed.n;
    const BinaryMatrix& reps = type == PauliType::X ? seed.bare_x : seed.bare_z;
    for (const auto& row : reps.rows) cap = std::min(cap, row.weight());
    auto d = dressed_distance(seed, type, cap);
    if (!d) throw std::logic_error("grow: seed distance exceeds its own bare weight");
    return *d;
}

}  // namespace growdetail

inline DistanceBounds distance_bounds(const GrowthLog& log, const CssSubsystemCode& code) {
    DistanceBounds b;
    b.lower_x = log.seed_lower_x + log.rounds_x;
    b.lower_z = log.seed_lower_z + log.rounds_z;
    b.lower = std::min(b.lower_x, b.lower_z);
    for (const auto& row : code.bare_x.rows) b.upper_x.push_back(row.weight());
    for (const auto& row : code.bare_z.rows) b.upper_z.push_back(row.weight());
    return b;
}

// One X round followed by one Z round over all logicals.
inline std::pair<CssSubsystemCode, GrowthLog> grow_iteration(const CssSubsystemCode& seed,
                                                             const GrowthConfig& cfg) {
    growdetail::check_config(cfg);
    growdetail::check_seed(seed, cfg);
    GrowthLog log;
    log.seed_lower_x = growdetail::seed_distance(seed, PauliType::X);
    log.seed_lower_z = growdetail::seed_distance(seed, PauliType::Z);
    CssSubsystemCode code = growdetail::single_round(seed, 0, PauliType::X, cfg, log);
    code = growdetail::single_round(std::move(code), 1, PauliType::Z, cfg, log);
    return {std::move(code), std::move(log)};
}

// Round-robin growth: cfg.iterations single-type rounds interleaved in the
// ratio m_x : m_z (the type whose completed/frequency quotient is smallest
// goes next; ties prefer X).
inline std::pair<CssSubsystemCode, GrowthLog> grow(const CssSubsystemCode& seed,
                                                   const GrowthConfig& cfg) {
    growdetail::check_config(cfg);
    growdetail::check_seed(seed, cfg);
    GrowthLog log;
    log.seed_lower_x = growdetail::seed_distance(seed, PauliType::X);
    log.seed_lower_z = growdetail::seed_distance(seed, PauliType::Z);

    CssSubsystemCode code = seed;
    for (std::size_t round = 0; round < cfg.iterations; ++round) {
        PauliType next;
        if (cfg.m_x == 0)
            next = PauliType::Z;
        else if (cfg.m_z == 0)
            next = PauliType::X;
        else {
            // Compare (done_x+1)/m_x vs (done_z+1)/m_z without division.
            std::size_t lhs = (log.rounds_x + 1) * cfg.m_z;
            std::size_t rhs = (log.rounds_z + 1) * cfg.m_x;
            next = lhs <= rhs ? PauliType::X : PauliType::Z;
        }
        code = growdetail::single_round(std::move(code), round, next, cfg, log);
    }
    return {std::move(code), std::move(log)};
}

}  // namespace qgrow
