#include "tfam/family.hpp"

#include "tfam/clopen.hpp"
#include "tfam/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace tfam {

namespace {

void sort_unique(std::vector<Theory>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

constexpr uint64_t kMaxExplicitPoints = 1 << 20;

bool contains_point(const std::vector<Theory>& v, const Theory& t) {
    return std::binary_search(v.begin(), v.end(), t);
}

} // namespace

Family Family::explicit_set(std::vector<Theory> points) {
    Family f;
    sort_unique(points);
    f.points_ = std::move(points);
    return f;
}

Family Family::regular(SafetyAutomaton carrier, std::vector<Theory> excluded) {
    SafetyAutomaton a = trim(carrier);
    // Keep only exclusions that actually lie in the carrier.
    std::vector<Theory> ex;
    for (const auto& e : excluded)
        if (automaton_member(a, e)) ex.push_back(e);
    sort_unique(ex);
    if (finite_language(a)) {
        uint64_t total = point_count_if_finite(a, kMaxExplicitPoints);
        if (total > kMaxExplicitPoints)
            throw resource_error("regular family: finite carrier has too many points "
                                 "to list explicitly");
        Enumeration en = enumerate_points(a, static_cast<size_t>(total));
        std::vector<Theory> pts;
        for (const auto& p : en.points)
            if (!contains_point(ex, p)) pts.push_back(p);
        return explicit_set(std::move(pts));
    }
    Family f;
    f.aut_ = std::move(a);
    f.excluded_ = std::move(ex);
    return f;
}

const std::vector<Theory>& Family::points() const {
    if (!is_explicit()) throw domain_error("points(): family has a regular carrier");
    return points_;
}

const SafetyAutomaton& Family::carrier() const {
    if (is_explicit()) throw domain_error("carrier(): family is an explicit finite set");
    return *aut_;
}

std::string Family::str() const {
    std::ostringstream os;
    if (is_explicit()) {
        os << "{";
        for (size_t i = 0; i < points_.size(); ++i) {
            if (i) os << ", ";
            os << points_[i].str();
        }
        os << "}";
        return os.str();
    }
    os << "regular(" << aut_->size() << " states";
    if (!excluded_.empty()) {
        os << "; minus {";
        for (size_t i = 0; i < excluded_.size(); ++i) {
            if (i) os << ", ";
            os << excluded_[i].str();
        }
        os << "}";
    }
    os << ")";
    return os.str();
}

Scheme Scheme::finite_set(std::vector<Sentence> sentences) {
    Scheme s;
    s.kind_ = Kind::FiniteSet;
    s.sentences_ = std::move(sentences);
    return s;
}

Scheme Scheme::diagram(Theory t) {
    Scheme s;
    s.kind_ = Kind::Diagram;
    s.theory_ = std::move(t);
    return s;
}

Scheme Scheme::closed_target(SafetyAutomaton a) {
    Scheme s;
    s.kind_ = Kind::ClosedTarget;
    s.target_ = trim(a);
    return s;
}

const Theory& Scheme::theory() const {
    if (kind_ != Kind::Diagram) throw domain_error("theory(): scheme is not a diagram");
    return *theory_;
}

std::string Scheme::str() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::FiniteSet:
        os << "{";
        for (size_t i = 0; i < sentences_.size(); ++i) {
            if (i) os << ", ";
            os << sentences_[i].str();
        }
        os << "}";
        break;
    case Kind::Diagram:
        os << "diagram(" << theory_->str() << ")";
        break;
    case Kind::ClosedTarget:
        os << "closed_target(" << target_.size() << " states)";
        break;
    }
    return os.str();
}

bool member(const Family& f, const Theory& t) {
    if (f.is_explicit()) return contains_point(f.points(), t);
    if (contains_point(f.excluded(), t)) return false;
    return automaton_member(f.carrier(), t);
}

Family restrict(const Family& f, const Sentence& s) {
    if (f.is_explicit()) {
        std::vector<Theory> pts;
        for (const auto& p : f.points())
            if (s.eval(p)) pts.push_back(p);
        return Family::explicit_set(std::move(pts));
    }
    SafetyAutomaton cap = intersect_automata(f.carrier(), clopen_automaton(to_clopen(s)));
    return Family::regular(std::move(cap), f.excluded());
}

Family restrict_scheme(const Family& f, const Scheme& sch) {
    switch (sch.kind()) {
    case Scheme::Kind::FiniteSet: {
        Family r = f;
        for (const auto& s : sch.sentences()) r = restrict(r, s);
        return r;
    }
    case Scheme::Kind::Diagram: {
        // Models of the full diagram of t are exactly t itself.
        const Theory& t = sch.theory();
        if (member(f, t)) return Family::explicit_set({t});
        return Family::explicit_set({});
    }
    case Scheme::Kind::ClosedTarget: {
        if (f.is_explicit()) {
            std::vector<Theory> pts;
            for (const auto& p : f.points())
                if (automaton_member(sch.target(), p)) pts.push_back(p);
            return Family::explicit_set(std::move(pts));
        }
        SafetyAutomaton cap = intersect_automata(f.carrier(), sch.target());
        return Family::regular(std::move(cap), f.excluded());
    }
    }
    throw domain_error("restrict_scheme: unknown scheme kind");
}

SafetyAutomaton closure_carrier(const Family& f) {
    if (f.is_explicit()) return points_automaton(f.points());
    SafetyAutomaton a = f.carrier();
    // Accumulation points among the exclusions rejoin the closure; isolated
    // ones are carved out of the carrier. Removing an isolated point never
    // changes which other points are isolated.
    for (const auto& e : f.excluded()) {
        if (isolating_prefix_len(a, e).has_value()) a = remove_point(a, e);
    }
    return a;
}

Family closure(const Family& f) {
    if (f.is_explicit()) return f;
    return Family::regular(closure_carrier(f));
}

bool is_closed_family(const Family& f) {
    if (f.is_explicit()) return true;
    for (const auto& e : f.excluded())
        if (!isolating_prefix_len(f.carrier(), e).has_value()) return false;
    return true;
}

bool is_accumulation_point(const Family& f, const Theory& t) {
    if (f.is_explicit()) return false;
    // Finite exclusions never affect the derived set.
    return automaton_member(derived_automaton(f.carrier()), t);
}

Family family_union(const Family& a, const Family& b) {
    if (a.is_explicit() && b.is_explicit()) {
        std::vector<Theory> pts = a.points();
        pts.insert(pts.end(), b.points().begin(), b.points().end());
        return Family::explicit_set(std::move(pts));
    }
    SafetyAutomaton ca = a.is_explicit() ? points_automaton(a.points()) : a.carrier();
    SafetyAutomaton cb = b.is_explicit() ? points_automaton(b.points()) : b.carrier();
    std::vector<Theory> ex;
    for (const auto& e : a.excluded())
        if (!member(b, e)) ex.push_back(e);
    for (const auto& e : b.excluded())
        if (!member(a, e)) ex.push_back(e);
    return Family::regular(union_automata(ca, cb), std::move(ex));
}

Family family_intersect(const Family& a, const Family& b) {
    if (a.is_explicit() || b.is_explicit()) {
        const Family& fin = a.is_explicit() ? a : b;
        const Family& other = a.is_explicit() ? b : a;
        std::vector<Theory> pts;
        for (const auto& p : fin.points())
            if (member(other, p)) pts.push_back(p);
        return Family::explicit_set(std::move(pts));
    }
    std::vector<Theory> ex = a.excluded();
    ex.insert(ex.end(), b.excluded().begin(), b.excluded().end());
    return Family::regular(intersect_automata(a.carrier(), b.carrier()), std::move(ex));
}

bool family_subset(const Family& a, const Family& b) {
    if (a.is_explicit()) {
        for (const auto& p : a.points())
            if (!member(b, p)) return false;
        return true;
    }
    if (b.is_explicit()) return false; // regular families are infinite
    // a is dense in its closure, and den(b's carrier) is closed, so comparing
    // through the closure of a loses nothing; b's exclusions are then the only
    // possible violations.
    if (!is_sublanguage(closure_carrier(a), b.carrier())) return false;
    for (const auto& e : b.excluded())
        if (member(a, e)) return false;
    return true;
}

bool family_equal(const Family& a, const Family& b) {
    return family_subset(a, b) && family_subset(b, a);
}

Family isolated_points(const Family& f) {
    if (f.is_explicit()) return f;
    const SafetyAutomaton& a = f.carrier();
    std::vector<bool> single = singleton_states(a);
    // States from which some singleton state is reachable: runs through them
    // can still become isolated; all others support only accumulation points.
    size_t n = a.size();
    std::vector<bool> reach_single(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t q = 0; q < n; ++q) {
            if (reach_single[q]) continue;
            bool hit = single[q];
            for (int b = 0; b < 2 && !hit; ++b) {
                int r = a.next[q][b];
                if (r >= 0 && reach_single[static_cast<size_t>(r)]) hit = true;
            }
            if (hit) {
                reach_single[q] = true;
                changed = true;
            }
        }
    }
    SafetyAutomaton candidates = restrict_states(a, reach_single);
    // candidates denotes runs that stay within sight of a singleton state; the
    // isolated points are those that eventually enter one. The leftovers are
    // runs that forever see singletons ahead without entering: exactly the
    // denotation of the same states minus the singletons. If that language is
    // infinite, the isolated points are not a carrier-minus-finite-set family.
    std::vector<bool> keep_acc(n, false);
    for (size_t q = 0; q < n; ++q) keep_acc[q] = reach_single[q] && !single[q];
    SafetyAutomaton stragglers = restrict_states(a, keep_acc);
    if (!finite_language(stragglers))
        throw unsupported_representation(
            "isolated_points: the isolated points accumulate along infinitely many runs "
            "and cannot be written as a carrier minus a finite set");
    uint64_t straggler_count = point_count_if_finite(stragglers, kMaxExplicitPoints);
    if (straggler_count > kMaxExplicitPoints)
        throw resource_error("isolated_points: too many accumulation points to list");
    Enumeration en = enumerate_points(stragglers, static_cast<size_t>(straggler_count));
    std::vector<Theory> ex = en.points;
    ex.insert(ex.end(), f.excluded().begin(), f.excluded().end());
    return Family::regular(std::move(candidates), std::move(ex));
}

std::optional<Family> least_generating_set(const Family& f) {
    if (!is_closed_family(f))
        throw domain_error("least_generating_set: family is not closed");
    Family iso = isolated_points(f);
    if (family_equal(closure(iso), f)) return iso;
    return std::nullopt;
}

Enumeration enumerate_members(const Family& f, size_t want) {
    if (f.is_explicit()) {
        Enumeration en;
        en.complete = true;
        en.points = f.points();
        if (en.points.size() > want) {
            en.points.erase(en.points.begin() + static_cast<long>(want), en.points.end());
            en.complete = false;
        }
        return en;
    }
    // Over-ask to survive the excluded points, then filter.
    Enumeration en = enumerate_points(f.carrier(), want + f.excluded().size());
    std::vector<Theory> pts;
    for (const auto& p : en.points)
        if (!member(f, p)) continue; else pts.push_back(p);
    bool complete = en.complete;
    if (pts.size() > want) {
        pts.erase(pts.begin() + static_cast<long>(want), pts.end());
        complete = false;
    }
    return Enumeration{std::move(pts), complete};
}

std::optional<Theory> find_member_outside(const Family& a, const Family& b) {
    if (a.is_explicit()) {
        for (const auto& p : a.points())
            if (!member(b, p)) return p;
        return std::nullopt;
    }
    // Points of a that b explicitly excludes.
    for (const auto& e : b.excluded())
        if (member(a, e)) return e;
    if (b.is_explicit()) {
        // a is infinite: grab more members than b has points.
        Enumeration en = enumerate_members(a, b.points().size() + 1);
        for (const auto& p : en.points)
            if (!member(b, p)) return p;
        return std::nullopt;
    }
    // Search den(closure(a)) for an escape from b's carrier, then thicken the
    // escape word into an actual member of a (the closure only adds formerly
    // excluded accumulation points, so a member nearby always exists).
    SafetyAutomaton ca = closure_carrier(a);
    if (auto esc = escape_word(ca, b.carrier())) {
        int q = ca.state_after(*esc);
        SafetyAutomaton tail = ca;
        tail.initial = q;
        tail = trim(tail);
        Enumeration en = enumerate_points(tail, a.excluded().size() + 1);
        for (const auto& p : en.points) {
            std::vector<uint8_t> bits = *esc;
            bits.insert(bits.end(), p.prefix().begin(), p.prefix().end());
            Theory cand(bits, p.period());
            if (member(a, cand) && !member(b, cand)) return cand;
        }
        return std::nullopt; // all escapes were excluded points of a
    }
    return std::nullopt;
}

bool locally_consistent(const Family& f, const Scheme& sch) {
    switch (sch.kind()) {
    case Scheme::Kind::FiniteSet:
        return !restrict_scheme(f, sch).is_empty();
    case Scheme::Kind::Diagram: {
        // Finite fragments of a diagram pin down arbitrarily long prefixes of
        // t, no more: all fragments are satisfiable in f iff t lies in the
        // closure of f.
        const Theory& t = sch.theory();
        return member(f, t) || is_accumulation_point(f, t);
    }
    case Scheme::Kind::ClosedTarget: {
        // Finite fragments only ever exclude cylinders missing the target, so
        // local consistency asks whether closure(f) meets the target.
        if (f.is_explicit()) {
            for (const auto& p : f.points())
                if (automaton_member(sch.target(), p)) return true;
            return false;
        }
        return !intersect_automata(closure_carrier(f), sch.target()).empty();
    }
    }
    throw domain_error("locally_consistent: unknown scheme kind");
}

bool consistent(const Family& f, const Scheme& sch) {
    return !restrict_scheme(f, sch).is_empty();
}

namespace {

// All shortest words u with [u] alive in `a` but dead in `b`, i.e. a-alive
// words whose last step leaves b. Local inconsistency guarantees the alive
// product graph is acyclic, so the path enumeration below terminates.
void dead_cylinder_cover(const SafetyAutomaton& a, const SafetyAutomaton& b,
                         std::vector<std::vector<uint8_t>>& out) {
    std::vector<uint8_t> word;
    // depth bound: a simple path through the product has at most |a|*|b| pairs
    size_t bound = a.size() * b.size() + 1;
    auto rec = [&](auto&& self, int qa, int qb) -> void {
        if (word.size() > bound)
            throw error("refutation_certificate: alive product path exceeded its bound "
                        "(internal invariant)");
        for (int bit = 0; bit < 2; ++bit) {
            int na = a.next[static_cast<size_t>(qa)][bit];
            if (na < 0) continue;
            int nb = b.next[static_cast<size_t>(qb)][bit];
            word.push_back(static_cast<uint8_t>(bit));
            if (nb < 0)
                out.push_back(word);
            else
                self(self, na, nb);
            word.pop_back();
        }
    };
    if (!a.empty() && !b.empty()) rec(rec, a.initial, b.initial);
}

} // namespace

std::optional<std::vector<Sentence>> refutation_certificate(const Family& f, const Scheme& sch) {
    if (locally_consistent(f, sch)) return std::nullopt;
    switch (sch.kind()) {
    case Scheme::Kind::FiniteSet:
        // The scheme is its own finite refuting fragment.
        return sch.sentences();
    case Scheme::Kind::Diagram: {
        // Shortest prefix of t whose cylinder misses closure(f); the matching
        // diagram sentence chi_u is already unsatisfiable in f.
        const Theory& t = sch.theory();
        SafetyAutomaton cl = closure_carrier(f);
        if (cl.empty())
            return std::vector<Sentence>{cylinder_sentence({static_cast<uint8_t>(t.bit(0))})};
        size_t q = static_cast<size_t>(cl.initial);
        std::vector<uint8_t> u;
        for (size_t i = 0;; ++i) {
            uint8_t bit = static_cast<uint8_t>(t.bit(i));
            int nq = cl.next[q][bit];
            u.push_back(bit);
            if (nq < 0) break;
            q = static_cast<size_t>(nq);
            if (i > t.prefix_len() + t.period_len() * (cl.size() + 2))
                throw error("refutation_certificate: diagram run failed to die "
                            "(internal invariant)");
        }
        return std::vector<Sentence>{cylinder_sentence(u)};
    }
    case Scheme::Kind::ClosedTarget: {
        // Finitely many dead cylinders covering closure(f): for each shortest
        // word leaving the target while alive in the closure, the scheme
        // member "not chi_u" is violated by everything in [u].
        SafetyAutomaton cl = closure_carrier(f);
        std::vector<std::vector<uint8_t>> words;
        if (cl.empty()) return std::vector<Sentence>{}; // nothing to refute: f is empty
        if (sch.target().empty())
            return std::vector<Sentence>{Sentence::negation(cylinder_sentence({}))};
        dead_cylinder_cover(cl, sch.target(), words);
        std::vector<Sentence> cert;
        for (const auto& w : words) cert.push_back(Sentence::negation(cylinder_sentence(w)));
        return cert;
    }
    }
    throw domain_error("refutation_certificate: unknown scheme kind");
}

} // namespace tfam
