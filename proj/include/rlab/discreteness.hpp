#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/moebius.hpp"

namespace rlab {

struct FareyFraction {
    std::int64_t p = 0;
    std::int64_t q = 1;

    FareyFraction() = default;
    FareyFraction(std::int64_t p, std::int64_t q);  // reduces and makes q >= 0, 1/0 for infinity
    friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

bool farey_neighbors(const FareyFraction& a, const FareyFraction& b);

struct MarkoffNode {
    std::array<FareyFraction, 3> vertices;
    std::array<ComplexValue, 3> values;
    int depth = 0;
};

// x^2 + y^2 + z^2 - xyz
ComplexValue markoff_cubic(const MarkoffNode& n);

enum class ExteriorStatus { Exterior, Inconclusive };
enum class WitnessSource { MarkoffTree, MarkoffTreeMirror, ShimizuWord };

struct Witness {
    WitnessSource source;
    std::optional<FareyFraction> pq;  // Markoff sources
    ComplexValue value;               // |value| < 1
    std::vector<int> word;            // Shimizu: exponents of X, Y, X, ... or Y, X, ...
    bool word_starts_with_x = true;
};

struct ExteriorVerdict {
    ExteriorStatus status = ExteriorStatus::Inconclusive;
    std::optional<Witness> witness;
    std::int64_t nodes_explored = 0;
};

struct BowditchParams {
    int max_depth = 40;
    std::int64_t node_budget = 20000;
    std::int64_t word_budget = 2000;  // 0 disables the Shimizu word search
};

inline constexpr double kWitnessBound = 1.0 - 1e-9;

bool fuchsian_two_parabolic_discrete(double gamma);
bool extension_discrete(double alpha, double eta, double theta);

enum class SlVerdict { NonDiscrete, NoInformation };
SlVerdict sl_exclusion(ComplexValue gamma);

// spherical disks of solid angle 2 eta_f, 2 eta_g around fixed points at angle fixed_point_angle
bool pingpong_disjoint(double eta_f, double eta_g, double fixed_point_angle);

MarkoffNode markoff_root(ComplexValue u);
// edge k is the edge opposite vertex k; vertex k is replaced
MarkoffNode markoff_flip(const MarkoffNode& node, int edge_index);

// breadth-first Bowditch search on the tree of markoff_root(u)
ExteriorVerdict markoff_tree_search(ComplexValue u, int max_depth, std::int64_t node_budget);
// best-first search for g in <[[1,u],[0,1]], [[1,0],[1,1]]> with 0 < |u c_g| < 1 or 0 < |b_g| < 1
ExteriorVerdict shimizu_word_search(ComplexValue u, std::int64_t word_budget);

ExteriorVerdict riley_exterior_test(ComplexValue u, const BowditchParams& p = {});
ExteriorVerdict riley_exterior_test(ComplexValue u, int max_depth, std::int64_t node_budget);

ExteriorVerdict riley_membership_for_gamma(ComplexValue gamma, const BowditchParams& p = {});
ExteriorVerdict riley_membership_for_pair(const MoebiusMap& f, const MoebiusMap& g, const BowditchParams& p = {});

const char* to_string(ExteriorStatus s);
const char* to_string(WitnessSource s);

}  // namespace rlab
