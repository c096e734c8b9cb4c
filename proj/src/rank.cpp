#include "tfam/rank.hpp"

#include "tfam/clopen.hpp"
#include "tfam/errors.hpp"

#include <algorithm>

namespace tfam {

namespace {

// Raw automaton tower over a closed carrier; stops at the empty automaton or
// at the first fixpoint (the perfect kernel).
struct RawTower {
    std::vector<SafetyAutomaton> levels; // nonempty levels, levels[0] = input
    bool infinite = false;               // true when a nonempty fixpoint appeared
    SafetyAutomaton kernel;              // empty unless infinite
};

RawTower raw_tower(SafetyAutomaton a) {
    RawTower tw;
    // Each strict derivative kills at least one state of the minimized level-0
    // automaton, so a tower over an s-state carrier has at most s + 1 levels.
    const size_t bound = a.size() + 1;
    while (!a.empty()) {
        SafetyAutomaton d = derived_automaton(a);
        if (same_language(d, a)) {
            tw.infinite = true;
            tw.kernel = a;
            // Levels at and beyond the fixpoint all equal the kernel.
            tw.levels.push_back(std::move(a));
            break;
        }
        tw.levels.push_back(a);
        a = std::move(d);
        if (tw.levels.size() > bound)
            throw error("derivative tower exceeded its structural length bound");
    }
    return tw;
}

uint64_t count_points(const SafetyAutomaton& a) {
    if (a.empty()) return 0;
    if (!finite_language(a))
        throw error("count_points: level has infinite language (internal invariant)");
    return point_count_if_finite(a);
}

} // namespace

Family derivative(const Family& f) {
    return Family::regular(derived_automaton(closure_carrier(f)));
}

DerivativeTower derivative_tower(const Family& f) {
    RawTower tw = raw_tower(closure_carrier(f));
    DerivativeTower out;
    for (auto& a : tw.levels) out.levels.push_back(Family::regular(std::move(a)));
    out.kernel = tw.infinite ? Family::regular(tw.kernel) : Family::explicit_set({});
    return out;
}

RankResult rank(const Family& f) {
    RawTower tw = raw_tower(closure_carrier(f));
    RankResult r;
    if (tw.infinite) {
        r.is_infinite = true;
        r.rank = 0;
        r.degree = 0;
        return r;
    }
    if (tw.levels.empty()) return r; // empty family: rank -1, degree 0
    r.rank = static_cast<int>(tw.levels.size()) - 1;
    r.degree = count_points(tw.levels.back());
    return r;
}

std::optional<int> point_rank(const Family& f, const Theory& t) {
    RawTower tw = raw_tower(closure_carrier(f));
    if (tw.levels.empty() || !automaton_member(tw.levels[0], t))
        throw domain_error("point_rank: theory is not in the closure of the family");
    if (tw.infinite && automaton_member(tw.kernel, t)) return std::nullopt;
    // Stored levels are consecutive derivatives ending at the empty automaton
    // or at the kernel, so the maximum is attained among them.
    int best = 0;
    for (size_t k = 1; k < tw.levels.size(); ++k)
        if (automaton_member(tw.levels[k], t)) best = static_cast<int>(k);
    return best;
}

Family perfect_kernel(const Family& f) {
    return Family::regular(kernel_automaton(closure_carrier(f)));
}

bool is_alpha_minimal(const Family& f, int alpha) {
    RankResult r = rank(f);
    return !r.is_infinite && r.rank == alpha && r.degree == 1;
}

bool is_irreducible(const Family& f) {
    if (!is_closed_family(f)) throw domain_error("is_irreducible: family is not closed");
    RankResult r = rank(f);
    if (!r.is_infinite && r.rank == -1) return true; // the empty family
    if (r.is_infinite) return false; // a perfect part splits along any cylinder
    return r.degree == 1;
}

std::vector<std::pair<Sentence, Family>> decompose(const Family& f) {
    if (f.is_empty()) throw domain_error("decompose: family is empty");
    RawTower tw = raw_tower(closure_carrier(f));
    if (tw.infinite)
        throw unsupported_representation(
            "decompose: family has infinite rank (nonempty perfect kernel)");
    std::vector<std::pair<Sentence, Family>> out;
    if (tw.levels.empty()) return out;
    const SafetyAutomaton& top = tw.levels.back();
    if (!finite_language(top))
        throw error("decompose: top level has infinite language (internal invariant)");
    constexpr uint64_t kMaxBlocks = 1 << 16;
    uint64_t total = point_count_if_finite(top, kMaxBlocks);
    if (total > kMaxBlocks)
        throw resource_error("decompose: the degree is too large to emit one block per point");
    Enumeration en = enumerate_points(top, static_cast<size_t>(total));
    const std::vector<Theory>& pts = en.points;
    size_t n = pts.size();
    // Cylinder words: long enough to isolate each top point within the top
    // level and to make the words pairwise incomparable.
    size_t depth = 1;
    std::vector<size_t> len(n, 0);
    for (size_t i = 0; i < n; ++i) {
        auto k = isolating_prefix_len(top, pts[i]);
        if (!k) throw error("decompose: top-level point not isolated (internal invariant)");
        len[i] = *k;
        for (size_t j = i + 1; j < n; ++j)
            depth = std::max(depth, first_difference(pts[i], pts[j]) + 1);
    }
    std::vector<std::vector<uint8_t>> words(n);
    for (size_t i = 0; i < n; ++i) {
        size_t L = std::max(len[i], depth);
        for (size_t k = 0; k < L; ++k) words[i].push_back(pts[i].bit(k));
    }
    // First sentence absorbs the complement of the other cylinders so the
    // sentences cover the whole space; together they are pairwise inconsistent.
    Clopen rest{0, {}}; // empty set
    for (size_t i = 1; i < n; ++i) rest = clopen_union(rest, clopen_cylinder(words[i]));
    Clopen first = clopen_union(clopen_cylinder(words[0]), clopen_complement(rest));
    out.emplace_back(synthesize_sentence(first), restrict(f, synthesize_sentence(first)));
    for (size_t i = 1; i < n; ++i) {
        Sentence s = synthesize_sentence(clopen_cylinder(words[i]));
        out.emplace_back(s, restrict(f, s));
    }
    return out;
}

} // namespace tfam
