#include "tfam/oracle.hpp"

#include "tfam/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tfam {

namespace {

// One dynamic-programming step: counts of alive length-(m+1) words from counts
// of alive length-m words, within `m`-masked states. Saturating arithmetic.
std::vector<uint64_t> count_step(const SafetyAutomaton& a, const std::vector<bool>& mask,
                                 const std::vector<uint64_t>& v) {
    std::vector<uint64_t> w(a.size(), 0);
    for (size_t q = 0; q < a.size(); ++q) {
        if (!mask[q]) continue;
        for (int b = 0; b < 2; ++b) {
            int t = a.next[q][static_cast<size_t>(b)];
            if (t < 0 || !mask[static_cast<size_t>(t)]) continue;
            uint64_t s = w[q] + v[static_cast<size_t>(t)];
            w[q] = s >= kCountCap ? kCountCap : s;
        }
    }
    return w;
}

// States reachable from the initial state along edges that stay inside `mask`
// and alive within it; the canonical form a level mask is kept in.
std::vector<bool> reach_live(const SafetyAutomaton& a, const std::vector<bool>& mask) {
    std::vector<bool> out(a.size(), false);
    if (a.empty()) return out;
    ResidualCounts rc = residual_counts(a, mask);
    if (!rc.live[static_cast<size_t>(a.initial)]) return out;
    std::deque<int> queue{a.initial};
    out[static_cast<size_t>(a.initial)] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int b = 0; b < 2; ++b) {
            int t = a.next[static_cast<size_t>(s)][static_cast<size_t>(b)];
            if (t < 0 || !rc.live[static_cast<size_t>(t)] || out[static_cast<size_t>(t)])
                continue;
            out[static_cast<size_t>(t)] = true;
            queue.push_back(t);
        }
    }
    return out;
}

bool theory_excluded(const Family& f, const Theory& t) {
    const auto& ex = f.excluded();
    return std::find(ex.begin(), ex.end(), t) != ex.end();
}

} // namespace

ResidualCounts residual_counts(const SafetyAutomaton& a, const std::vector<bool>& mask) {
    size_t n = a.size();
    ResidualCounts rc;
    rc.live.assign(n, false);
    rc.unbounded.assign(n, false);
    rc.count.assign(n, 0);
    if (n == 0) return rc;
    // Liveness by counting: the dead region (states with no infinite masked
    // run) is acyclic, so every path inside it is shorter than n and dead
    // states have no alive length-n words at all.
    std::vector<uint64_t> v(n, 0);
    for (size_t q = 0; q < n; ++q) v[q] = mask[q] ? 1 : 0;
    for (size_t i = 0; i < n; ++i) v = count_step(a, mask, v);
    for (size_t q = 0; q < n; ++q) rc.live[q] = mask[q] && v[q] > 0;
    // Within the live refinement every alive word extends, so word counts are
    // nondecreasing. A finite residual set has settled to its cardinality by
    // length n (its reachable subgraph is a tree feeding exit-free cycles); an
    // infinite one owns a reachable cycle with an exit and gains a new word at
    // least once every n steps. Comparing lengths n+1 and 2n+2 decides which.
    std::vector<uint64_t> w(n, 0);
    for (size_t q = 0; q < n; ++q) w[q] = rc.live[q] ? 1 : 0;
    std::vector<uint64_t> settled;
    for (size_t i = 1; i <= 2 * n + 2; ++i) {
        w = count_step(a, rc.live, w);
        if (i == n + 1) settled = w;
    }
    for (size_t q = 0; q < n; ++q) {
        if (!rc.live[q]) continue;
        rc.unbounded[q] = w[q] != settled[q] || w[q] >= kCountCap;
        rc.count[q] = rc.unbounded[q] ? 0 : settled[q];
    }
    return rc;
}

ResidualCounts residual_counts(const SafetyAutomaton& a) {
    return residual_counts(a, std::vector<bool>(a.size(), true));
}

bool oracle_member(const SafetyAutomaton& a, const Theory& t) {
    if (a.empty()) return false;
    size_t steps = t.prefix_len() + t.period_len() * (a.size() + 1);
    int q = a.initial;
    for (size_t i = 0; i < steps; ++i) {
        q = a.next[static_cast<size_t>(q)][static_cast<size_t>(t.bit(i))];
        if (q < 0) return false;
    }
    return true;
}

bool oracle_accumulation(const SafetyAutomaton& a, const Theory& t) {
    // Non-members sit in a dead cylinder, which contains no points at all.
    if (!oracle_member(a, t)) return false;
    ResidualCounts rc = residual_counts(a);
    // Every state of t's run appears within prefix + period * (states + 1)
    // steps (a state/phase pair repeats by then). t accumulates iff every one
    // of those cylinders holds infinitely many points: a finite cylinder count
    // would shrink to 1 (the other points diverge), isolating t.
    size_t steps = t.prefix_len() + t.period_len() * (a.size() + 1);
    int q = a.initial;
    for (size_t i = 0;; ++i) {
        if (!rc.unbounded[static_cast<size_t>(q)]) return false;
        if (i >= steps) return true;
        q = a.next[static_cast<size_t>(q)][static_cast<size_t>(t.bit(i))];
    }
}

bool oracle_in_closure(const Family& f, const Theory& t) {
    if (f.is_explicit()) {
        const auto& pts = f.points();
        return std::find(pts.begin(), pts.end(), t) != pts.end();
    }
    if (!oracle_member(f.carrier(), t)) return false;
    // Excluded points return to the closure exactly when they accumulate.
    if (theory_excluded(f, t)) return oracle_accumulation(f.carrier(), t);
    return true;
}

std::vector<bool> oracle_infinite_states(const SafetyAutomaton& a) {
    ResidualCounts rc = residual_counts(a);
    std::vector<bool> out(a.size(), false);
    for (size_t q = 0; q < a.size(); ++q) out[q] = rc.live[q] && rc.unbounded[q];
    return out;
}

RankResult oracle_rank_automaton(const SafetyAutomaton& a) {
    RankResult r;
    if (a.empty()) return r;
    std::vector<bool> mask = reach_live(a, std::vector<bool>(a.size(), true));
    if (!mask[static_cast<size_t>(a.initial)]) return r;
    for (;;) {
        ResidualCounts rc = residual_counts(a, mask);
        if (!rc.unbounded[static_cast<size_t>(a.initial)]) {
            // This level is finite: it is the last nonempty one.
            r.rank += 1;
            r.degree = rc.count[static_cast<size_t>(a.initial)];
            return r;
        }
        std::vector<bool> next(a.size(), false);
        for (size_t q = 0; q < a.size(); ++q) next[q] = mask[q] && rc.unbounded[q];
        next = reach_live(a, next);
        if (next == mask) { // the level equals its derivative: perfect
            r.is_infinite = true;
            r.rank = 0;
            r.degree = 0;
            return r;
        }
        if (!next[static_cast<size_t>(a.initial)])
            throw error("oracle_rank_automaton: infinite level with empty derivative");
        mask = std::move(next);
        r.rank += 1;
    }
}

bool oracle_forces_exact(const Family& f, const Sentence& phi, const Sentence& psi) {
    Sentence chi = Sentence::conjunction(phi, Sentence::negation(psi));
    if (f.is_explicit()) {
        for (const auto& t : f.points())
            if (chi.eval(t)) return false;
        return true;
    }
    const SafetyAutomaton& a = f.carrier();
    if (a.empty()) return true;
    ResidualCounts rc = residual_counts(a);
    size_t depth = chi.depth();
    std::vector<uint8_t> w;
    // Every word of length depth(chi) settles chi; forcing fails iff some
    // cylinder where chi holds contains a family member.
    auto rec = [&](auto&& self, int q) -> bool {
        if (!rc.live[static_cast<size_t>(q)]) return true;
        if (w.size() == depth) {
            if (!chi.eval_word(w)) return true;
            if (rc.unbounded[static_cast<size_t>(q)]) return false;
            uint64_t ex = 0;
            for (const auto& e : f.excluded())
                if (is_prefix_of(w, e)) ++ex;
            return rc.count[static_cast<size_t>(q)] <= ex;
        }
        for (int b = 0; b < 2; ++b) {
            int t = a.next[static_cast<size_t>(q)][static_cast<size_t>(b)];
            if (t < 0) continue;
            w.push_back(static_cast<uint8_t>(b));
            bool ok = self(self, t);
            w.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, a.initial);
}

PointCloud cloud_from_family(const Family& f, size_t horizon) {
    PointCloud pc;
    pc.horizon = horizon;
    pc.generator = f;
    std::set<Theory> pts;
    if (f.is_explicit()) {
        pts.insert(f.points().begin(), f.points().end());
    } else if (!f.carrier().empty()) {
        const SafetyAutomaton& a = f.carrier();
        ResidualCounts rc = residual_counts(a);
        size_t sample_depth = std::max<size_t>(horizon / 2, 1);
        std::vector<uint8_t> w;
        // For each alive word, sample the least and the 1-preferring
        // completion; both together expose isolated teeth and their limits.
        auto emit = [&](int q) {
            for (const Theory& tail : {lex_least_point(a, q), greedy_point(a, q, 1)}) {
                std::vector<uint8_t> pre = w;
                pre.insert(pre.end(), tail.prefix().begin(), tail.prefix().end());
                Theory t(pre, tail.period());
                if (!theory_excluded(f, t)) {
                    pts.insert(t);
                    continue;
                }
                // The natural completion is excluded: take the first member
                // of the cylinder instead (n+2 candidates beat n exclusions).
                SafetyAutomaton res = a;
                res.initial = q;
                Enumeration en = enumerate_points(res, f.excluded().size() + 2);
                for (const auto& cand : en.points) {
                    std::vector<uint8_t> pw = w;
                    pw.insert(pw.end(), cand.prefix().begin(), cand.prefix().end());
                    Theory full(pw, cand.period());
                    if (!theory_excluded(f, full)) {
                        pts.insert(full);
                        break;
                    }
                }
            }
        };
        auto rec = [&](auto&& self, int q) -> void {
            if (!rc.live[static_cast<size_t>(q)]) return;
            if (w.size() == sample_depth) {
                emit(q);
                return;
            }
            for (int b = 0; b < 2; ++b) {
                int t = a.next[static_cast<size_t>(q)][static_cast<size_t>(b)];
                if (t < 0) continue;
                w.push_back(static_cast<uint8_t>(b));
                self(self, t);
                w.pop_back();
            }
        };
        rec(rec, a.initial);
    }
    pc.points.assign(pts.begin(), pts.end());
    for (const auto& t : pc.points)
        pc.horizon = std::max(pc.horizon, t.prefix_len() + 2 * t.period_len());
    return pc;
}

PointCloud oracle_closure(const PointCloud& pc) {
    if (!pc.generator)
        throw domain_error("oracle_closure: cloud carries no generator, so infinitude "
                           "cannot be decided from a finite sample");
    const Family& f = *pc.generator;
    if (f.is_explicit()) return pc; // a finite family is closed already
    const SafetyAutomaton& a = f.carrier();
    SafetyAutomaton sub = trim(restrict_states(a, oracle_infinite_states(a)));
    // The accumulation set may be infinite; a cloud is a sample, so sample it
    // the way the cloud sampled the family: walk the alive words to a bounded
    // depth and emit the least and the 1-preferring completion of each.
    PointCloud out = pc;
    std::set<Theory> have(pc.points.begin(), pc.points.end());
    if (!sub.empty()) {
        size_t depth = std::min<size_t>(pc.horizon / 2, 12);
        std::vector<uint8_t> w;
        auto rec = [&](auto&& self, int q) -> void {
            if (w.size() == depth) {
                for (const Theory& tail : {lex_least_point(sub, q), greedy_point(sub, q, 1)}) {
                    std::vector<uint8_t> pre = w;
                    pre.insert(pre.end(), tail.prefix().begin(), tail.prefix().end());
                    Theory t(pre, tail.period());
                    // Admission by counting: every cylinder along t's run
                    // carries infinitely many members.
                    if (!have.count(t) && oracle_accumulation(a, t)) {
                        have.insert(t);
                        out.points.push_back(t);
                    }
                }
                return;
            }
            for (int b = 0; b < 2; ++b) {
                int t = sub.next[static_cast<size_t>(q)][static_cast<size_t>(b)];
                if (t < 0) continue;
                w.push_back(static_cast<uint8_t>(b));
                self(self, t);
                w.pop_back();
            }
        };
        rec(rec, sub.initial);
    }
    for (const auto& t : out.points)
        out.horizon = std::max(out.horizon, t.prefix_len() + 2 * t.period_len());
    return out;
}

namespace {

RankResult oracle_rank_core(const PointCloud& pc) {
    if (!pc.generator)
        throw domain_error("oracle_rank: cloud carries no generator, so infinitude "
                           "cannot be decided from a finite sample");
    const Family& f = *pc.generator;
    for (const auto& t : pc.points)
        if (t.prefix_len() + 2 * t.period_len() > pc.horizon)
            throw domain_error("oracle_rank: horizon below prefix + 2 periods of a point");
    std::set<Theory> cloud(pc.points.begin(), pc.points.end());
    RankResult r;
    if (f.is_explicit()) {
        std::set<Theory> real(f.points().begin(), f.points().end());
        if (cloud != real)
            throw inconclusive_error("oracle_rank: cloud does not cover the finite family");
        if (cloud.empty()) return r;
        r.rank = 0;
        r.degree = cloud.size();
        return r;
    }
    const SafetyAutomaton& a = f.carrier();
    for (const auto& t : cloud)
        if (!oracle_member(a, t) || theory_excluded(f, t))
            throw domain_error("oracle_rank: cloud point outside the generator family");
    std::vector<Theory> level_pts(cloud.begin(), cloud.end());
    std::vector<bool> mask = reach_live(a, std::vector<bool>(a.size(), true));
    if (a.empty() || !mask[static_cast<size_t>(a.initial)]) {
        if (!level_pts.empty())
            throw domain_error("oracle_rank: cloud point outside the generator family");
        return r;
    }
    for (int level = 0; level <= 64; ++level) {
        ResidualCounts rc = residual_counts(a, mask);
        if (!rc.unbounded[static_cast<size_t>(a.initial)]) {
            // Finite level: the last nonempty one. Level 0 is the family
            // itself, so exclusions thin both the count and the degree.
            // Deeper levels live in the closure: an excluded theory there is
            // counted by the automaton but can never appear in the cloud, so
            // discount it from the coverage check while keeping the degree.
            uint64_t deg = rc.count[static_cast<size_t>(a.initial)];
            uint64_t hidden = 0;
            if (level == 0) {
                deg -= std::min<uint64_t>(deg, f.excluded().size());
            } else {
                SafetyAutomaton lvl = restrict_states(a, mask);
                for (const auto& e : f.excluded())
                    if (automaton_member(lvl, e)) ++hidden;
            }
            if (level_pts.size() + hidden != deg)
                throw inconclusive_error("oracle_rank: cloud undersamples the last "
                                         "derivative level");
            r.rank = level;
            r.degree = deg;
            return r;
        }
        // Infinite level: drop exactly the points the generator confirms
        // isolated — those whose run passes a finite-residual cylinder.
        std::vector<Theory> keep;
        for (const auto& t : level_pts) {
            bool isolated = false;
            size_t steps = t.prefix_len() + t.period_len() * (a.size() + 1);
            int q = a.initial;
            for (size_t i = 0;; ++i) {
                if (q < 0 || !rc.live[static_cast<size_t>(q)])
                    throw inconclusive_error("oracle_rank: a cloud point fell out of "
                                             "its level");
                if (!rc.unbounded[static_cast<size_t>(q)]) {
                    isolated = true;
                    break;
                }
                if (i >= steps) break;
                q = a.next[static_cast<size_t>(q)][static_cast<size_t>(t.bit(i))];
            }
            if (!isolated) keep.push_back(t);
        }
        std::vector<bool> next(a.size(), false);
        for (size_t q = 0; q < a.size(); ++q) next[q] = mask[q] && rc.unbounded[q];
        next = reach_live(a, next);
        if (next == mask) { // perfect level: no isolated points at any depth
            r.is_infinite = true;
            r.rank = 0;
            r.degree = 0;
            return r;
        }
        mask = std::move(next);
        level_pts = std::move(keep);
    }
    throw inconclusive_error("oracle_rank: rank exceeds the oracle bound");
}

} // namespace

RankResult oracle_rank(const PointCloud& pc) {
    try {
        return oracle_rank_core(pc);
    } catch (const inconclusive_error&) {
        if (!pc.generator) throw;
        // One horizon-doubling retry with a fresh, denser sample.
        return oracle_rank_core(cloud_from_family(*pc.generator, pc.horizon * 2));
    }
}

bool oracle_forces(const PointCloud& pc, const Sentence& phi, const Sentence& psi) {
    for (const auto& t : pc.points)
        if (phi.eval(t) && !psi.eval(t)) return false;
    return true;
}

} // namespace tfam
