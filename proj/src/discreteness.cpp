#include "rlab/discreteness.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <queue>

#include "rlab/errors.hpp"

namespace rlab {

FareyFraction::FareyFraction(std::int64_t p_, std::int64_t q_) {
    std::int64_t g = std::gcd(p_, q_);
    if (g == 0) throw DomainError("FareyFraction: 0/0");
    p_ /= g;
    q_ /= g;
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
    p = p_;
    q = q_;
}

bool farey_neighbors(const FareyFraction& a, const FareyFraction& b) {
    std::int64_t det = a.p * b.q - b.p * a.q;
    return det == 1 || det == -1;
}

ComplexValue markoff_cubic(const MarkoffNode& n) {
    const auto& v = n.values;
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] - v[0] * v[1] * v[2];
}

bool fuchsian_two_parabolic_discrete(double gamma) {
    if (!(gamma >= 0.0)) throw DomainError("fuchsian_two_parabolic_discrete: gamma must be real and >= 0");
    return gamma >= 16.0;
}

bool extension_discrete(double alpha, double eta, double theta) {
    return 1.0 / std::cos(alpha) - std::tan(alpha) * std::tan(eta) >= std::cos(theta);
}

SlVerdict sl_exclusion(ComplexValue gamma) {
    double r = std::abs(gamma);
    return (r > 0.0 && r < 1.0) ? SlVerdict::NonDiscrete : SlVerdict::NoInformation;
}

bool pingpong_disjoint(double eta_f, double eta_g, double fixed_point_angle) {
    return 2.0 * eta_f + 2.0 * eta_g < fixed_point_angle;
}

MarkoffNode markoff_root(ComplexValue u) {
    if (u == 0.0) throw DegenerateError("markoff_root: u = 0");
    // principal root of -u; negating a zero imaginary part would land on the other side of the cut
    ComplexValue x = std::sqrt(ComplexValue(-u.real(), u.imag() == 0.0 ? 0.0 : -u.imag()));
    MarkoffNode n;
    n.vertices = {FareyFraction(0, 1), FareyFraction(1, 0), FareyFraction(1, 1)};
    n.values = {x, 0.0, x};
    n.depth = 0;
    return n;
}

MarkoffNode markoff_flip(const MarkoffNode& node, int k) {
    if (k < 0 || k > 2) throw DomainError("markoff_flip: edge_index must be 0, 1 or 2");
    int i = (k + 1) % 3, j = (k + 2) % 3;
    const FareyFraction &a = node.vertices[i], &b = node.vertices[j];
    FareyFraction m(a.p + b.p, a.q + b.q);
    if (m == node.vertices[k]) m = FareyFraction(a.p - b.p, a.q - b.q);
    MarkoffNode out = node;
    out.vertices[k] = m;
    out.values[k] = node.values[i] * node.values[j] - node.values[k];
    out.depth = node.depth + 1;
    return out;
}

ExteriorVerdict markoff_tree_search(ComplexValue u, int max_depth, std::int64_t node_budget) {
    ExteriorVerdict v;
    MarkoffNode root = markoff_root(u);
    auto found = [&](const MarkoffNode& n, int k) {
        v.status = ExteriorStatus::Exterior;
        v.witness = Witness{WitnessSource::MarkoffTree, n.vertices[k], n.values[k], {}, true};
        return v;
    };
    v.nodes_explored = 1;
    // phi(1/0) = 0 is structural
    if (std::abs(root.values[0]) < kWitnessBound) return found(root, 0);

    struct Item {
        MarkoffNode node;
        int fresh;  // index of the newest vertex, -1 at the root
    };
    std::deque<Item> queue{{root, -1}};
    while (!queue.empty()) {
        Item it = std::move(queue.front());
        queue.pop_front();
        if (it.node.depth >= max_depth) continue;
        for (int k = 0; k < 3; ++k) {
            if (k == it.fresh) continue;
            if (v.nodes_explored >= node_budget) return v;
            MarkoffNode c = markoff_flip(it.node, k);
            ++v.nodes_explored;
            double w = std::abs(c.values[k]);
            if (w < kWitnessBound) return found(c, k);
            double p = std::abs(c.values[(k + 1) % 3]), r = std::abs(c.values[(k + 2) % 3]);
            bool escaping = p > 2.0 && r > 2.0 && w > p && w > r;
            if (!escaping) queue.push_back({c, k});
        }
    }
    return v;
}

ExteriorVerdict shimizu_word_search(ComplexValue u, std::int64_t word_budget) {
    ExteriorVerdict v;
    struct State {
        ComplexValue a, b, c, d;
        int last;  // 0: ends in X^n, 1: ends in Y^m, -1: identity
        int parent;
        int exponent;
    };
    std::vector<State> arena{{1.0, 0.0, 0.0, 1.0, -1, -1, 0}};
    struct Key {
        double key;
        std::int64_t seq;
        int idx;
        bool operator>(const Key& o) const { return key != o.key ? key > o.key : seq > o.seq; }
    };
    std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
    pq.push({0.0, 0, 0});
    std::int64_t seq = 1;
    const double au = std::abs(u);

    auto witness = [&](int idx, ComplexValue value) {
        Witness w{WitnessSource::ShimizuWord, std::nullopt, value, {}, true};
        std::vector<int> word;
        int first = -1;
        for (int i = idx; arena[i].parent >= 0; i = arena[i].parent) {
            word.push_back(arena[i].exponent);
            first = arena[i].last;
        }
        w.word.assign(word.rbegin(), word.rend());
        w.word_starts_with_x = first == 0;
        v.status = ExteriorStatus::Exterior;
        v.witness = w;
        return v;
    };

    if (au > 1e-9 && au < kWitnessBound) {
        arena.push_back({1.0, u, 0.0, 1.0, 0, 0, 1});
        return witness(1, u);
    }

    while (!pq.empty() && v.nodes_explored < word_budget) {
        Key top = pq.top();
        pq.pop();
        ++v.nodes_explored;
        const State g = arena[top.idx];
        for (int step = 0; step < 2; ++step) {
            if (g.last == step) continue;
            long centre;
            if (step == 0) {
                if (std::abs(g.c) < 1e-14) continue;
                centre = std::lround(-std::real(g.d / (u * g.c)));
            } else {
                if (std::abs(g.d) < 1e-14) continue;
                centre = std::lround(-std::real(g.c / g.d));
            }
            for (long n = centre - 1; n <= centre + 1; ++n) {
                if (n == 0) continue;
                State h;
                if (step == 0) {
                    ComplexValue nu = static_cast<double>(n) * u;
                    h = {g.a, g.a * nu + g.b, g.c, g.c * nu + g.d, 0, top.idx, static_cast<int>(n)};
                } else {
                    double m = static_cast<double>(n);
                    h = {g.a + m * g.b, g.b, g.c + m * g.d, g.d, 1, top.idx, static_cast<int>(n)};
                }
                arena.push_back(h);
                int idx = static_cast<int>(arena.size()) - 1;
                double cu = std::abs(h.c * u), bb = std::abs(h.b);
                if (cu > 1e-9 && cu < kWitnessBound) return witness(idx, h.c * u);
                if (bb > 1e-9 && bb < kWitnessBound) return witness(idx, h.b);
                if (std::abs(h.c) + std::abs(h.d) < 1e8)
                    pq.push({std::min(std::abs(h.c) * au, std::abs(h.d)), seq++, idx});
            }
        }
    }
    return v;
}

ExteriorVerdict riley_exterior_test(ComplexValue u, const BowditchParams& p) {
    if (u == 0.0) throw DegenerateError("riley_exterior_test: u = 0");
    ExteriorVerdict v = markoff_tree_search(u, p.max_depth, p.node_budget);
    if (v.status == ExteriorStatus::Exterior) return v;
    std::int64_t nodes = v.nodes_explored;

    // z -> -z conjugates the group for u to the group for -u
    ExteriorVerdict m = markoff_tree_search(-u, p.max_depth, p.node_budget);
    nodes += m.nodes_explored;
    if (m.status == ExteriorStatus::Exterior) {
        m.witness->source = WitnessSource::MarkoffTreeMirror;
        m.nodes_explored = nodes;
        return m;
    }
    if (p.word_budget > 0) {
        ExteriorVerdict s = shimizu_word_search(u, p.word_budget);
        nodes += s.nodes_explored;
        s.nodes_explored = nodes;
        return s;
    }
    v.nodes_explored = nodes;
    return v;
}

ExteriorVerdict riley_exterior_test(ComplexValue u, int max_depth, std::int64_t node_budget) {
    BowditchParams p;
    p.max_depth = max_depth;
    p.node_budget = node_budget;
    return riley_exterior_test(u, p);
}

ExteriorVerdict riley_membership_for_gamma(ComplexValue gamma, const BowditchParams& p) {
    if (gamma == 0.0) throw DegenerateError("riley membership: gamma = 0 (commuting pair)");
    return riley_exterior_test(std::sqrt(gamma), p);
}

ExteriorVerdict riley_membership_for_pair(const MoebiusMap& f, const MoebiusMap& g, const BowditchParams& p) {
    ComplexValue gamma = commutator_gamma(f, g);
    if (std::abs(gamma) <= 1e-12) throw DegenerateError("riley membership: gamma = 0 (commuting pair)");
    return riley_membership_for_gamma(gamma, p);
}

const char* to_string(ExteriorStatus s) { return s == ExteriorStatus::Exterior ? "Exterior" : "Inconclusive"; }

const char* to_string(WitnessSource s) {
    switch (s) {
        case WitnessSource::MarkoffTree: return "markoff-tree";
        case WitnessSource::MarkoffTreeMirror: return "markoff-tree-mirror";
        case WitnessSource::ShimizuWord: return "shimizu-word";
    }
    return "?";
}

}  // namespace rlab
