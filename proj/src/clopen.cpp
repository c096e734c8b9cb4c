#include "tfam/clopen.hpp"

#include "tfam/errors.hpp"

#include <algorithm>

namespace tfam {

namespace {

std::vector<uint8_t> unpack(uint32_t w, uint32_t depth) {
    std::vector<uint8_t> out(depth);
    for (uint32_t i = 0; i < depth; ++i) out[i] = (w >> i) & 1u;
    return out;
}

} // namespace

bool Clopen::contains(const Theory& t) const {
    uint32_t w = 0;
    for (uint32_t i = 0; i < depth; ++i)
        if (t.bit(i)) w |= (1u << i);
    return std::binary_search(words.begin(), words.end(), w);
}

bool Clopen::contains_word_prefix(const std::vector<uint8_t>& w) const {
    if (w.size() < depth) throw domain_error("clopen: word shorter than depth");
    uint32_t v = 0;
    for (uint32_t i = 0; i < depth; ++i)
        if (w[i]) v |= (1u << i);
    return std::binary_search(words.begin(), words.end(), v);
}

Clopen canonicalize(uint32_t depth, std::vector<uint32_t> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    // Empty set: canonical form is depth 0, no words.
    if (words.empty()) return Clopen{0, {}};
    // Drop the last position while membership never depends on it: every word
    // must appear with both values of the final bit.
    while (depth > 0) {
        const uint32_t hi = 1u << (depth - 1);
        bool reducible = true;
        for (uint32_t w : words) {
            if (!std::binary_search(words.begin(), words.end(), w ^ hi)) { reducible = false; break; }
        }
        if (!reducible) break;
        std::vector<uint32_t> shorter;
        shorter.reserve(words.size() / 2);
        for (uint32_t w : words)
            if (!(w & hi)) shorter.push_back(w);
        words = std::move(shorter);
        --depth;
    }
    return Clopen{depth, std::move(words)};
}

Clopen to_clopen(const Sentence& s) {
    const uint32_t d = s.depth();
    if (d > kMaxClopenDepth)
        throw resource_error("to_clopen: sentence mentions atom Q" + std::to_string(d - 1) +
                             ", beyond the materialization cap of depth " +
                             std::to_string(kMaxClopenDepth));
    std::vector<uint32_t> words;
    const uint32_t n = 1u << d;
    std::vector<uint8_t> w(d);
    for (uint32_t v = 0; v < n; ++v) {
        for (uint32_t i = 0; i < d; ++i) w[i] = (v >> i) & 1u;
        if (s.eval_word(w)) words.push_back(v);
    }
    return canonicalize(d, std::move(words));
}

bool semantically_equal(const Sentence& a, const Sentence& b) {
    return to_clopen(a) == to_clopen(b);
}

namespace {

// Lift a clopen to a larger depth by enumerating all extensions.
std::vector<uint32_t> lift(const Clopen& c, uint32_t depth) {
    if (c.depth == depth) return c.words;
    const uint32_t extra = depth - c.depth;
    std::vector<uint32_t> out;
    out.reserve(c.words.size() << extra);
    for (uint32_t suffix = 0; suffix < (1u << extra); ++suffix)
        for (uint32_t w : c.words)
            out.push_back(w | (suffix << c.depth));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Clopen clopen_intersect(const Clopen& a, const Clopen& b) {
    const uint32_t d = std::max(a.depth, b.depth);
    std::vector<uint32_t> wa = lift(a, d), wb = lift(b, d), out;
    std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(out));
    return canonicalize(d, std::move(out));
}

Clopen clopen_union(const Clopen& a, const Clopen& b) {
    const uint32_t d = std::max(a.depth, b.depth);
    std::vector<uint32_t> wa = lift(a, d), wb = lift(b, d), out;
    std::set_union(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(out));
    return canonicalize(d, std::move(out));
}

Clopen clopen_complement(const Clopen& a) {
    std::vector<uint32_t> out;
    const uint32_t n = 1u << a.depth;
    out.reserve(n - a.words.size());
    for (uint32_t v = 0; v < n; ++v)
        if (!std::binary_search(a.words.begin(), a.words.end(), v)) out.push_back(v);
    return canonicalize(a.depth, std::move(out));
}

Clopen clopen_cylinder(const std::vector<uint8_t>& prefix) {
    if (prefix.size() > kMaxClopenDepth)
        throw resource_error("clopen_cylinder: prefix beyond materialization cap");
    uint32_t w = 0;
    for (size_t i = 0; i < prefix.size(); ++i)
        if (prefix[i]) w |= (1u << i);
    return Clopen{static_cast<uint32_t>(prefix.size()), {w}};
}

namespace {

// A cube is a partial assignment: (mask of fixed positions, their values).
struct Cube {
    uint32_t mask;
    uint32_t bits;
    bool operator==(const Cube&) const = default;
};

Sentence cube_sentence(const Cube& c, uint32_t depth) {
    Sentence out = Sentence::top();
    bool first = true;
    for (uint32_t i = 0; i < depth; ++i) {
        if (!(c.mask & (1u << i))) continue;
        Sentence lit = (c.bits & (1u << i)) ? Sentence::atom(i)
                                            : Sentence::negation(Sentence::atom(i));
        out = first ? lit : Sentence::conjunction(out, lit);
        first = false;
    }
    return out;
}

} // namespace

Sentence synthesize_sentence(const Clopen& c) {
    if (c.empty()) return Sentence::bottom();
    if (c.full()) return Sentence::top();
    // Greedy merge of minterms into cubes, one round per dropped position:
    // two cubes with equal masks differing in exactly one fixed bit merge.
    const uint32_t all = (c.depth >= 32) ? ~0u : ((1u << c.depth) - 1);
    std::vector<Cube> cubes;
    cubes.reserve(c.words.size());
    for (uint32_t w : c.words) cubes.push_back(Cube{all, w});
    // The quadratic merge is meant for the small clopens produced by the
    // construction helpers; for big tables fall back to a plain word disjunction.
    bool merged = c.words.size() <= 1024;
    while (merged) {
        merged = false;
        std::vector<Cube> next;
        std::vector<bool> used(cubes.size(), false);
        for (size_t i = 0; i < cubes.size(); ++i) {
            for (size_t j = i + 1; j < cubes.size(); ++j) {
                if (cubes[i].mask != cubes[j].mask) continue;
                const uint32_t diff = (cubes[i].bits ^ cubes[j].bits) & cubes[i].mask;
                if (diff == 0 || (diff & (diff - 1)) != 0) continue; // not exactly one bit
                Cube m{cubes[i].mask & ~diff, cubes[i].bits & ~diff};
                if (std::find(next.begin(), next.end(), m) == next.end()) next.push_back(m);
                used[i] = used[j] = true;
                merged = true;
            }
        }
        for (size_t i = 0; i < cubes.size(); ++i)
            if (!used[i]) next.push_back(cubes[i]);
        cubes = std::move(next);
    }
    // Keep cubes in a deterministic order, then drop cubes already covered by the rest.
    std::sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
        return a.mask != b.mask ? a.mask < b.mask : a.bits < b.bits;
    });
    auto covers = [&](const std::vector<Cube>& cs, uint32_t w) {
        for (const Cube& q : cs)
            if ((w & q.mask) == (q.bits & q.mask)) return true;
        return false;
    };
    std::vector<Cube> kept;
    for (size_t i = 0; i < cubes.size(); ++i) {
        std::vector<Cube> others = kept;
        others.insert(others.end(), cubes.begin() + static_cast<long>(i) + 1, cubes.end());
        bool redundant = true;
        for (uint32_t w : c.words)
            if ((w & cubes[i].mask) == (cubes[i].bits & cubes[i].mask) && !covers(others, w)) {
                redundant = false;
                break;
            }
        if (!redundant) kept.push_back(cubes[i]);
    }
    if (kept.empty()) kept.push_back(cubes.front());
    Sentence out = cube_sentence(kept[0], c.depth);
    for (size_t i = 1; i < kept.size(); ++i)
        out = Sentence::disjunction(out, cube_sentence(kept[i], c.depth));
    return out;
}

} // namespace tfam
