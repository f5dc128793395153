#pragma once

#include "hfgrowth/exact_algebra.hpp"
#include "hfgrowth/point_geometry.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hfg {

struct HypothesisRecord {
    std::string name;
    bool passed = false;
    std::string evidence;
};

struct HypothesisLog {
    std::vector<HypothesisRecord> records;
    bool all_passed() const;
};

// Tail shape (k, k-1, 0 in degrees n, n+1, n+2 with 2 <= k <= n), no minimal
// generator of the reduction in degree n+1, [J]_n basepoint free, and no
// socle of S/J in degree n.
HypothesisLog check_hypotheses(const PointSet& z, int n, int k, std::uint64_t seed);

struct AnnihilatorLine {
    std::vector<Form> forms;            // r-2 linear forms of the reduction ring
    std::size_t entry_span_rank = 0;
    std::vector<Vector> entry_span;     // basis of the span of the pencil entries
};

// Linear forms killing [S/J]_{n-1} -> [S/J]_n and [S/J]_n -> [S/J]_{n+1}.
AnnihilatorLine annihilator_line(const ArtinianReduction& red, int n, std::uint64_t seed = 0);

struct DeltaRow {
    int t;
    long z, z1, z2;
};

struct PlaneCertificate {
    LinearSubspace plane;
    std::vector<std::size_t> z1_indices;
    std::vector<std::size_t> z2_indices;
    std::vector<DeltaRow> delta_table;
    HypothesisLog hypotheses;
    long required = 0;  // point-count lower bound for Z1
    long actual = 0;
    bool seeds_agree = false;
    std::vector<std::string> alarms;
};

PlaneCertificate find_plane(const PointSet& z, int n, int k, std::uint64_t seed);

long plane_point_bound(long k, int n);

nlohmann::json to_json(const HypothesisLog& log);
nlohmann::json to_json(const PlaneCertificate& c);

}  // namespace hfg
