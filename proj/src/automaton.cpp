#include "tfam/automaton.hpp"

#include "tfam/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tfam {

int SafetyAutomaton::state_after(const std::vector<uint8_t>& w) const {
    int q = initial;
    for (uint8_t b : w) {
        if (q < 0) return -1;
        q = step(q, b);
    }
    return q;
}

SafetyAutomaton full_space_automaton() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{0, 0}};
    return a;
}

SafetyAutomaton trim(const SafetyAutomaton& a) {
    if (a.empty()) return SafetyAutomaton{};
    const size_t n = a.size();
    // Liveness: repeatedly drop states whose every edge leads to a dropped state.
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t q = 0; q < n; ++q) {
            if (!alive[q]) continue;
            bool has_edge = false;
            for (int b = 0; b < 2; ++b) {
                int t = a.next[q][static_cast<size_t>(b)];
                if (t >= 0 && alive[static_cast<size_t>(t)]) has_edge = true;
            }
            if (!has_edge) { alive[q] = false; changed = true; }
        }
    }
    if (!alive[static_cast<size_t>(a.initial)]) return SafetyAutomaton{};
    // Reachability from the initial state within live states.
    std::vector<int> relabel(n, -1);
    std::vector<int> order;
    relabel[static_cast<size_t>(a.initial)] = 0;
    order.push_back(a.initial);
    for (size_t i = 0; i < order.size(); ++i) {
        int q = order[i];
        for (int b = 0; b < 2; ++b) {
            int t = a.next[static_cast<size_t>(q)][static_cast<size_t>(b)];
            if (t >= 0 && alive[static_cast<size_t>(t)] && relabel[static_cast<size_t>(t)] < 0) {
                relabel[static_cast<size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    SafetyAutomaton out;
    out.initial = 0;
    out.next.resize(order.size(), {-1, -1});
    for (size_t i = 0; i < order.size(); ++i) {
        for (int b = 0; b < 2; ++b) {
            int t = a.next[static_cast<size_t>(order[i])][static_cast<size_t>(b)];
            if (t >= 0 && alive[static_cast<size_t>(t)])
                out.next[i][static_cast<size_t>(b)] = relabel[static_cast<size_t>(t)];
        }
    }
    return out;
}

bool is_trim(const SafetyAutomaton& a) {
    if (a.empty()) return a.next.empty();
    const size_t n = a.size();
    std::vector<bool> reach(n, false);
    std::vector<int> stack{a.initial};
    reach[static_cast<size_t>(a.initial)] = true;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int b = 0; b < 2; ++b) {
            int t = a.step(q, b);
            if (t >= 0 && !reach[static_cast<size_t>(t)]) {
                reach[static_cast<size_t>(t)] = true;
                stack.push_back(t);
            }
        }
    }
    for (size_t q = 0; q < n; ++q)
        if (!reach[q]) return false;
    // Liveness: each state needs at least one outgoing edge, and since every
    // edge target also has one, an infinite run exists from everywhere.
    for (size_t q = 0; q < n; ++q)
        if (a.next[q][0] < 0 && a.next[q][1] < 0) return false;
    return true;
}

bool automaton_member(const SafetyAutomaton& a, const Theory& t) {
    if (a.empty()) return false;
    int q = a.initial;
    for (size_t i = 0; i < t.prefix_len(); ++i) {
        q = a.step(q, t.bit(i));
        if (q < 0) return false;
    }
    // Inside the periodic tail the pair (state, phase) determines the future;
    // a repeat proves the run survives forever.
    std::set<std::pair<int, size_t>> seen;
    size_t phase = 0;
    while (seen.insert({q, phase}).second) {
        q = a.step(q, t.period()[phase]);
        if (q < 0) return false;
        phase = (phase + 1) % t.period_len();
    }
    return true;
}

namespace {

// Breadth-first search over reachable pairs of live states. Visits each pair
// once; calls visit(aState, bState) where either component may be -1 (dead).
template <typename Fn>
void product_walk(const SafetyAutomaton& a, const SafetyAutomaton& b, Fn&& on_edge) {
    if (a.empty()) return;
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> queue;
    queue.push_back({a.initial, b.empty() ? -1 : b.initial});
    seen.insert(queue.front());
    while (!queue.empty()) {
        auto [qa, qb] = queue.front();
        queue.pop_front();
        for (int bit = 0; bit < 2; ++bit) {
            int ta = qa < 0 ? -1 : a.step(qa, bit);
            int tb = qb < 0 ? -1 : b.step(qb, bit);
            if (ta < 0) continue; // only follow edges alive on the a side
            if (!on_edge(qa, qb, bit, ta, tb)) return;
            if (seen.insert({ta, tb}).second) queue.push_back({ta, tb});
        }
    }
}

} // namespace

uint64_t point_count_if_finite(const SafetyAutomaton& a, uint64_t cap) {
    if (a.empty()) return 0;
    const size_t n = a.size();
    // Count alive words by length; 2n + 2 steps flush the dead region and let
    // a finite language settle to its cardinality.
    std::vector<uint64_t> v(n, 1);
    for (size_t i = 0; i < 2 * n + 2; ++i) {
        std::vector<uint64_t> nx(n, 0);
        for (size_t q = 0; q < n; ++q) {
            for (int b = 0; b < 2; ++b) {
                int t = a.next[q][static_cast<size_t>(b)];
                if (t >= 0) nx[q] += v[static_cast<size_t>(t)];
            }
            nx[q] = std::min(nx[q], cap + 1);
        }
        v = std::move(nx);
    }
    return v[static_cast<size_t>(a.initial)];
}

bool is_sublanguage(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    // The product search reads finite paths as run prefixes, which is only
    // sound on trim automata; normalize lazily so callers don't have to.
    if (!is_trim(a)) return is_sublanguage(trim(a), b);
    if (!is_trim(b)) return is_sublanguage(a, trim(b));
    if (a.empty()) return true;
    if (b.empty()) return false;
    bool ok = true;
    product_walk(a, b, [&](int, int, int, int, int tb) {
        if (tb < 0) { ok = false; return false; }
        return true;
    });
    return ok;
}

bool same_language(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    return is_sublanguage(a, b) && is_sublanguage(b, a);
}

std::optional<std::vector<uint8_t>> escape_word(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    if (!is_trim(a)) return escape_word(trim(a), b);
    if (!is_trim(b)) return escape_word(a, trim(b));
    if (a.empty()) return std::nullopt;
    if (b.empty()) return std::vector<uint8_t>{};
    // BFS with parent tracking to reconstruct the shortest escaping word.
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, uint8_t>> parent;
    std::deque<std::pair<int, int>> queue;
    std::pair<int, int> start{a.initial, b.initial};
    queue.push_back(start);
    parent[start] = {start, 2};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (int bit = 0; bit < 2; ++bit) {
            int ta = a.step(cur.first, bit);
            if (ta < 0) continue;
            int tb = cur.second < 0 ? -1 : b.step(cur.second, bit);
            std::pair<int, int> nxt{ta, tb};
            if (tb < 0) {
                // Reconstruct word: path to cur, then this bit.
                std::vector<uint8_t> w{static_cast<uint8_t>(bit)};
                auto node = cur;
                while (parent[node].second != 2) {
                    w.push_back(parent[node].second);
                    node = parent[node].first;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            if (!parent.count(nxt)) {
                parent[nxt] = {cur, static_cast<uint8_t>(bit)};
                queue.push_back(nxt);
            }
        }
    }
    return std::nullopt;
}

SafetyAutomaton intersect_automata(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    if (a.empty() || b.empty()) return SafetyAutomaton{};
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> states;
    auto get = [&](int qa, int qb) {
        auto [it, fresh] = id.try_emplace({qa, qb}, static_cast<int>(states.size()));
        if (fresh) states.push_back({qa, qb});
        return it->second;
    };
    get(a.initial, b.initial);
    SafetyAutomaton out;
    out.initial = 0;
    for (size_t i = 0; i < states.size(); ++i) {
        out.next.resize(states.size(), {-1, -1});
        auto [qa, qb] = states[i];
        for (int bit = 0; bit < 2; ++bit) {
            int ta = a.step(qa, bit), tb = b.step(qb, bit);
            if (ta >= 0 && tb >= 0) out.next[i][static_cast<size_t>(bit)] = get(ta, tb);
        }
        out.next.resize(states.size(), {-1, -1});
    }
    return minimize(trim(out));
}

SafetyAutomaton union_automata(const SafetyAutomaton& a, const SafetyAutomaton& b) {
    if (a.empty()) return minimize(trim(b));
    if (b.empty()) return minimize(trim(a));
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> states;
    auto get = [&](int qa, int qb) {
        auto [it, fresh] = id.try_emplace({qa, qb}, static_cast<int>(states.size()));
        if (fresh) states.push_back({qa, qb});
        return it->second;
    };
    get(a.initial, b.initial);
    SafetyAutomaton out;
    out.initial = 0;
    for (size_t i = 0; i < states.size(); ++i) {
        out.next.resize(states.size(), {-1, -1});
        auto [qa, qb] = states[i];
        for (int bit = 0; bit < 2; ++bit) {
            int ta = qa < 0 ? -1 : a.step(qa, bit);
            int tb = qb < 0 ? -1 : b.step(qb, bit);
            if (ta >= 0 || tb >= 0) out.next[i][static_cast<size_t>(bit)] = get(ta, tb);
        }
        out.next.resize(states.size(), {-1, -1});
    }
    return minimize(trim(out));
}

SafetyAutomaton minimize(const SafetyAutomaton& a0) {
    SafetyAutomaton a = trim(a0);
    if (a.empty()) return a;
    const size_t n = a.size();
    // Moore refinement: split classes by edge-definedness, then by target class.
    std::vector<int> cls(n, 0);
    auto signature = [&](size_t q) {
        std::array<int, 2> sig;
        for (int b = 0; b < 2; ++b) {
            int t = a.next[q][static_cast<size_t>(b)];
            sig[static_cast<size_t>(b)] = t < 0 ? -1 : cls[static_cast<size_t>(t)];
        }
        return sig;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::pair<int, std::array<int, 2>>, int> buckets;
        std::vector<int> next_cls(n);
        for (size_t q = 0; q < n; ++q) {
            auto key = std::make_pair(cls[q], signature(q));
            auto [it, fresh] = buckets.try_emplace(key, static_cast<int>(buckets.size()));
            next_cls[q] = it->second;
        }
        if (next_cls != cls) { cls = std::move(next_cls); changed = true; }
    }
    const int k = *std::max_element(cls.begin(), cls.end()) + 1;
    SafetyAutomaton out;
    out.initial = cls[static_cast<size_t>(a.initial)];
    out.next.assign(static_cast<size_t>(k), {-1, -1});
    for (size_t q = 0; q < n; ++q)
        for (int b = 0; b < 2; ++b) {
            int t = a.next[q][static_cast<size_t>(b)];
            out.next[static_cast<size_t>(cls[q])][static_cast<size_t>(b)] =
                t < 0 ? -1 : cls[static_cast<size_t>(t)];
        }
    return trim(out); // relabels in BFS order as a side effect
}

SafetyAutomaton canonical_form(const SafetyAutomaton& a) {
    // trim() already relabels breadth-first, so minimize∘trim is canonical.
    return minimize(a);
}

std::vector<bool> singleton_states(const SafetyAutomaton& a) {
    const size_t n = a.size();
    std::vector<bool> branching(n, false);
    for (size_t q = 0; q < n; ++q)
        branching[q] = (a.next[q][0] >= 0 && a.next[q][1] >= 0);
    // A state is a singleton state iff no branching state is reachable from it.
    // Mark states that can reach a branching one via reverse closure.
    std::vector<bool> reaches = branching;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t q = 0; q < n; ++q) {
            if (reaches[q]) continue;
            for (int b = 0; b < 2; ++b) {
                int t = a.next[q][static_cast<size_t>(b)];
                if (t >= 0 && reaches[static_cast<size_t>(t)]) { reaches[q] = true; changed = true; }
            }
        }
    }
    std::vector<bool> single(n);
    for (size_t q = 0; q < n; ++q) single[q] = !reaches[q];
    return single;
}

SafetyAutomaton restrict_states(const SafetyAutomaton& a, const std::vector<bool>& keep) {
    if (a.empty() || !keep[static_cast<size_t>(a.initial)]) return SafetyAutomaton{};
    SafetyAutomaton out = a;
    for (size_t q = 0; q < out.size(); ++q)
        for (int b = 0; b < 2; ++b) {
            int& t = out.next[q][static_cast<size_t>(b)];
            if (!keep[q] || (t >= 0 && !keep[static_cast<size_t>(t)])) {
                if (!keep[q]) t = -1;
                else if (t >= 0 && !keep[static_cast<size_t>(t)]) t = -1;
            }
        }
    return trim(out);
}

SafetyAutomaton derived_automaton(const SafetyAutomaton& a) {
    if (a.empty()) return a;
    std::vector<bool> single = singleton_states(a);
    std::vector<bool> keep(a.size());
    for (size_t q = 0; q < a.size(); ++q) keep[q] = !single[q];
    return restrict_states(a, keep);
}

SafetyAutomaton kernel_automaton(const SafetyAutomaton& a) {
    SafetyAutomaton cur = trim(a);
    while (true) {
        SafetyAutomaton nxt = derived_automaton(cur);
        if (nxt.size() == cur.size()) return cur; // no singleton states left
        cur = std::move(nxt);
        if (cur.empty()) return cur;
    }
}

SafetyAutomaton clopen_automaton(const Clopen& c) {
    if (c.empty()) return SafetyAutomaton{};
    if (c.full()) return full_space_automaton();
    // States: (level, subset of words compatible with the bits read so far).
    std::map<std::pair<uint32_t, std::vector<uint32_t>>, int> id;
    std::vector<std::pair<uint32_t, std::vector<uint32_t>>> states;
    SafetyAutomaton out;
    auto get = [&](uint32_t level, std::vector<uint32_t> ws) {
        auto key = std::make_pair(level, std::move(ws));
        auto [it, fresh] = id.try_emplace(key, static_cast<int>(states.size()));
        if (fresh) states.push_back(it->first);
        return it->second;
    };
    const int sink = get(c.depth, {}); // full sink: every continuation allowed
    get(0, c.words);
    out.initial = 1;
    for (size_t i = 0; i < states.size(); ++i) {
        out.next.resize(states.size(), {-1, -1});
        auto [level, ws] = states[i];
        if (static_cast<int>(i) == sink || level >= c.depth) {
            out.next[i] = {sink, sink};
            continue;
        }
        for (uint32_t bit = 0; bit < 2; ++bit) {
            std::vector<uint32_t> sub;
            for (uint32_t w : ws)
                if (((w >> level) & 1u) == bit) sub.push_back(w);
            if (sub.empty()) continue;
            int t = (level + 1 == c.depth) ? sink : get(level + 1, std::move(sub));
            out.next[i][bit] = t;
        }
        out.next.resize(states.size(), {-1, -1});
    }
    return minimize(trim(out));
}

SafetyAutomaton lasso_automaton(const Theory& t) {
    SafetyAutomaton out;
    const size_t p = t.prefix_len(), c = t.period_len();
    out.initial = 0;
    out.next.assign(p + c, {-1, -1});
    for (size_t i = 0; i < p + c; ++i) {
        size_t target = (i + 1 < p + c) ? i + 1 : p; // wrap into the cycle
        out.next[i][static_cast<size_t>(t.bit(i))] = static_cast<int>(target);
    }
    return out;
}

SafetyAutomaton points_automaton(const std::vector<Theory>& pts) {
    if (pts.empty()) return SafetyAutomaton{};
    SafetyAutomaton acc = lasso_automaton(pts[0]);
    for (size_t i = 1; i < pts.size(); ++i)
        acc = union_automata(acc, lasso_automaton(pts[i]));
    return acc;
}

std::optional<size_t> isolating_prefix_len(const SafetyAutomaton& a, const Theory& t) {
    if (a.empty() || !automaton_member(a, t)) return std::nullopt;
    std::vector<bool> single = singleton_states(a);
    int q = a.initial;
    if (single[static_cast<size_t>(q)]) return 0;
    size_t i = 0;
    // The run enters its periodic tail within prefix + period*states steps; a
    // singleton state is hit within that window or never.
    const size_t bound = t.prefix_len() + t.period_len() * (a.size() + 1);
    while (i < bound) {
        q = a.step(q, t.bit(i));
        ++i;
        if (q < 0) return std::nullopt;
        if (single[static_cast<size_t>(q)]) return i;
    }
    return std::nullopt;
}

SafetyAutomaton remove_point(const SafetyAutomaton& a, const Theory& t) {
    auto k = isolating_prefix_len(a, t);
    if (!k) throw domain_error("remove_point: point is not isolated in the carrier");
    if (*k == 0) return SafetyAutomaton{}; // the denotation was exactly {t}
    // Chain states 0..k-1 shadow t's run; original states are shifted by k.
    const size_t n = a.size(), kk = *k;
    SafetyAutomaton out;
    out.initial = 0;
    out.next.assign(kk + n, {-1, -1});
    int q = a.initial;
    for (size_t i = 0; i < kk; ++i) {
        const int tb = t.bit(i);
        const int stay = a.step(q, tb);
        const int other = a.step(q, 1 - tb);
        if (other >= 0)
            out.next[i][static_cast<size_t>(1 - tb)] = static_cast<int>(kk) + other;
        if (i + 1 < kk)
            out.next[i][static_cast<size_t>(tb)] = static_cast<int>(i) + 1;
        // At i == kk-1 the t-branch is dropped: that cylinder held only t.
        q = stay;
    }
    for (size_t s = 0; s < n; ++s)
        for (int b = 0; b < 2; ++b) {
            int tt = a.next[s][static_cast<size_t>(b)];
            out.next[kk + s][static_cast<size_t>(b)] = tt < 0 ? -1 : static_cast<int>(kk) + tt;
        }
    return minimize(trim(out));
}

Theory lex_least_point(const SafetyAutomaton& a, int from) {
    return greedy_point(a, from, 0);
}

Theory greedy_point(const SafetyAutomaton& a, int from, int bit) {
    if (a.empty()) throw domain_error("greedy_point: empty automaton");
    int q = from < 0 ? a.initial : from;
    std::vector<uint8_t> bits;
    std::vector<int> seen_at(a.size(), -1);
    while (seen_at[static_cast<size_t>(q)] < 0) {
        seen_at[static_cast<size_t>(q)] = static_cast<int>(bits.size());
        int b = a.step(q, bit) >= 0 ? bit : 1 - bit;
        if (a.step(q, b) < 0) throw domain_error("greedy_point: automaton not trim");
        bits.push_back(static_cast<uint8_t>(b));
        q = a.step(q, b);
    }
    const size_t start = static_cast<size_t>(seen_at[static_cast<size_t>(q)]);
    std::vector<uint8_t> prefix(bits.begin(), bits.begin() + static_cast<long>(start));
    std::vector<uint8_t> period(bits.begin() + static_cast<long>(start), bits.end());
    return Theory(std::move(prefix), std::move(period));
}

Enumeration enumerate_points(const SafetyAutomaton& a, size_t want) {
    Enumeration out;
    if (a.empty()) { out.complete = true; return out; }
    std::vector<bool> single = singleton_states(a);
    struct Node { std::vector<uint8_t> word; int state; };
    std::vector<Node> frontier{{{}, a.initial}};
    const size_t depth_cap = 4 * (a.size() + 2) * (want == SIZE_MAX ? 1 : want + 1) + 8;
    size_t depth = 0;
    auto all_single = [&]() {
        for (const Node& nd : frontier)
            if (!single[static_cast<size_t>(nd.state)]) return false;
        return true;
    };
    while (!all_single() && frontier.size() < want) {
        std::vector<Node> nxt;
        for (const Node& nd : frontier) {
            if (single[static_cast<size_t>(nd.state)]) { nxt.push_back(nd); continue; }
            for (int b = 0; b < 2; ++b) {
                int t = a.step(nd.state, b);
                if (t < 0) continue;
                Node m{nd.word, t};
                m.word.push_back(static_cast<uint8_t>(b));
                nxt.push_back(std::move(m));
            }
        }
        frontier = std::move(nxt);
        if (++depth > depth_cap)
            throw error("enumerate_points: expansion exceeded its depth bound (internal invariant)");
    }
    out.complete = all_single();
    for (const Node& nd : frontier) {
        if (out.points.size() >= want) { out.complete = false; break; }
        // Splice the frontier word onto the unique (or greedy-least) run onward.
        Theory tail = lex_least_point(a, nd.state);
        std::vector<uint8_t> pre = nd.word;
        std::vector<uint8_t> tp = tail.prefix();
        pre.insert(pre.end(), tp.begin(), tp.end());
        out.points.emplace_back(std::move(pre), tail.period());
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

bool finite_language(const SafetyAutomaton& a) {
    return derived_automaton(a).empty();
}

} // namespace tfam
