#include "tfam/construct.hpp"

#include "tfam/clopen.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace tfam {

// ---------------------------------------------------------------- OrdinalCnf

OrdinalCnf OrdinalCnf::finite(uint64_t n) {
    OrdinalCnf o;
    if (n > 0) o.terms_.push_back({0, n});
    return o;
}

OrdinalCnf OrdinalCnf::omega_power(uint32_t exp, uint64_t coeff) {
    OrdinalCnf o;
    if (coeff > 0) o.terms_.push_back({exp, coeff});
    return o;
}

OrdinalCnf OrdinalCnf::parse(const std::string& text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> uint64_t {
        skip();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("ordinal: expected a number", i);
        uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<uint64_t>(text[i] - '0');
            if (v > (uint64_t{1} << 40)) throw parse_error("ordinal: number too large", i);
            ++i;
        }
        return v;
    };
    OrdinalCnf o;
    bool first = true;
    for (;;) {
        skip();
        if (!first) {
            if (i >= text.size()) break;
            if (text[i] != '+') throw parse_error("ordinal: expected '+'", i);
            ++i;
        }
        skip();
        if (i >= text.size()) throw parse_error("ordinal: expected a term", i);
        uint32_t exp = 0;
        uint64_t coeff = 0;
        if (text[i] == 'w') {
            ++i;
            skip();
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                uint64_t e = number();
                if (e > 64) throw parse_error("ordinal: exponent too large", i);
                exp = static_cast<uint32_t>(e);
            }
            skip();
            coeff = 1;
            if (i < text.size() && text[i] == '*') {
                ++i;
                coeff = number();
            }
        } else {
            coeff = number();
        }
        if (coeff == 0) {
            if (exp == 0 && first && o.terms_.empty()) {
                skip();
                if (i < text.size()) throw parse_error("ordinal: trailing input after 0", i);
                return o;
            }
            throw parse_error("ordinal: zero coefficient", i);
        }
        if (!o.terms_.empty() && o.terms_.back().first <= exp)
            throw parse_error("ordinal: exponents must strictly decrease", i);
        o.terms_.push_back({exp, coeff});
        first = false;
        skip();
        if (i >= text.size()) break;
    }
    return o;
}

uint64_t OrdinalCnf::finite_value() const {
    if (!is_finite()) throw domain_error("finite_value: ordinal is transfinite");
    return terms_.empty() ? 0 : terms_[0].second;
}

OrdinalCnf OrdinalCnf::plus_one() const {
    OrdinalCnf o = *this;
    if (o.is_successor())
        o.terms_.back().second += 1;
    else
        o.terms_.push_back({0, 1});
    return o;
}

OrdinalCnf OrdinalCnf::predecessor() const {
    if (!is_successor()) throw domain_error("predecessor: ordinal is zero or a limit");
    OrdinalCnf o = *this;
    if (--o.terms_.back().second == 0) o.terms_.pop_back();
    return o;
}

int OrdinalCnf::compare(const OrdinalCnf& a, const OrdinalCnf& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.terms_[i].first != b.terms_[i].first)
            return a.terms_[i].first < b.terms_[i].first ? -1 : 1;
        if (a.terms_[i].second != b.terms_[i].second)
            return a.terms_[i].second < b.terms_[i].second ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string OrdinalCnf::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        auto [e, c] = terms_[i];
        if (e == 0) {
            os << c;
        } else {
            os << "w";
            if (e > 1) os << "^" << e;
            if (c > 1) os << "*" << c;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- FamilyExpr

struct FamilyExpr::Node {
    Kind kind;
    std::optional<Theory> point;
    std::vector<Branch> branches;
    std::optional<FamilyExpr> body;
    uint8_t bit = 1;
    OrdinalCnf limit;
};

FamilyExpr FamilyExpr::point(Theory t) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Point;
    n->point = std::move(t);
    return FamilyExpr(std::move(n));
}

FamilyExpr FamilyExpr::prefixed_union(std::vector<Branch> branches) {
    if (branches.empty())
        throw domain_error("prefixed_union: at least one branch is required");
    for (size_t i = 0; i < branches.size(); ++i)
        for (size_t j = i + 1; j < branches.size(); ++j) {
            const auto& p = branches[i].prefix;
            const auto& q = branches[j].prefix;
            size_t m = std::min(p.size(), q.size());
            if (std::equal(p.begin(), p.begin() + m, q.begin()))
                throw domain_error("prefixed_union: branch prefixes must be pairwise incomparable");
        }
    auto n = std::make_shared<Node>();
    n->kind = Kind::PrefixedUnion;
    n->branches = std::move(branches);
    return FamilyExpr(std::move(n));
}

FamilyExpr FamilyExpr::limit_stack(FamilyExpr body, uint8_t branch_bit) {
    if (branch_bit > 1) throw domain_error("limit_stack: branch bit must be 0 or 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::LimitStack;
    n->body = std::move(body);
    n->bit = branch_bit;
    return FamilyExpr(std::move(n));
}

FamilyExpr FamilyExpr::omega_stack(OrdinalCnf limit, uint8_t branch_bit) {
    if (branch_bit > 1) throw domain_error("omega_stack: branch bit must be 0 or 1");
    if (!limit.is_limit())
        throw domain_error("omega_stack: stage ordinal must be a limit ordinal");
    auto n = std::make_shared<Node>();
    n->kind = Kind::OmegaStack;
    n->limit = std::move(limit);
    n->bit = branch_bit;
    return FamilyExpr(std::move(n));
}

FamilyExpr::Kind FamilyExpr::kind() const { return node_->kind; }

const Theory& FamilyExpr::point_value() const {
    if (kind() != Kind::Point) throw domain_error("point_value: not a point expression");
    return *node_->point;
}

const std::vector<FamilyExpr::Branch>& FamilyExpr::branches() const {
    if (kind() != Kind::PrefixedUnion) throw domain_error("branches: not a prefixed union");
    return node_->branches;
}

const FamilyExpr& FamilyExpr::body() const {
    if (kind() != Kind::LimitStack) throw domain_error("body: not a limit stack");
    return *node_->body;
}

uint8_t FamilyExpr::branch_bit() const { return node_->bit; }

const OrdinalCnf& FamilyExpr::limit() const {
    if (kind() != Kind::OmegaStack) throw domain_error("limit: not a transfinite stack");
    return node_->limit;
}

std::pair<OrdinalCnf, uint64_t> FamilyExpr::recipe_rank() const {
    switch (kind()) {
    case Kind::Point:
        return {OrdinalCnf::finite(0), 1};
    case Kind::PrefixedUnion: {
        // Branches live in disjoint cylinders: the rank is the maximum branch
        // rank and the degree adds up over the branches attaining it.
        OrdinalCnf best;
        uint64_t deg = 0;
        bool first = true;
        for (const auto& br : node_->branches) {
            auto [a, d] = br.child.recipe_rank();
            int c = first ? 1 : OrdinalCnf::compare(a, best);
            if (c > 0) {
                best = a;
                deg = d;
            } else if (c == 0) {
                deg += d;
            }
            first = false;
        }
        return {best, deg};
    }
    case Kind::LimitStack: {
        // Infinitely many copies of the body accumulate on the spine limit:
        // one derivation step past the body's rank leaves that single point.
        auto [a, d] = node_->body->recipe_rank();
        (void)d;
        return {a.plus_one(), 1};
    }
    case Kind::OmegaStack:
        return {node_->limit, 1};
    }
    throw domain_error("recipe_rank: unknown expression kind");
}

namespace {

SafetyAutomaton prepend_word(const std::vector<uint8_t>& w, const SafetyAutomaton& a) {
    if (a.empty()) return {};
    if (w.empty()) return a;
    SafetyAutomaton out;
    size_t n = w.size();
    out.next.assign(n + a.size(), {-1, -1});
    for (size_t i = 0; i < n; ++i)
        out.next[i][w[i]] =
            static_cast<int>(i + 1 < n ? i + 1 : n + static_cast<size_t>(a.initial));
    for (size_t q = 0; q < a.size(); ++q)
        for (int b = 0; b < 2; ++b) {
            int t = a.next[q][b];
            out.next[n + q][b] = t < 0 ? -1 : static_cast<int>(n + static_cast<size_t>(t));
        }
    out.initial = 0;
    return minimize(trim(out));
}

} // namespace

SafetyAutomaton FamilyExpr::compile() const {
    switch (kind()) {
    case Kind::Point:
        return lasso_automaton(*node_->point);
    case Kind::PrefixedUnion: {
        SafetyAutomaton acc;
        bool first = true;
        for (const auto& br : node_->branches) {
            SafetyAutomaton part = prepend_word(br.prefix, br.child.compile());
            acc = first ? std::move(part) : union_automata(acc, part);
            first = false;
        }
        return acc;
    }
    case Kind::LimitStack: {
        SafetyAutomaton body = node_->body->compile();
        uint8_t b = node_->bit;
        SafetyAutomaton out;
        out.next.assign(1 + body.size(), {-1, -1});
        out.initial = 0;
        out.next[0][b] = 0; // the spine
        out.next[0][1 - b] = static_cast<int>(1 + static_cast<size_t>(body.initial));
        for (size_t q = 0; q < body.size(); ++q)
            for (int bb = 0; bb < 2; ++bb) {
                int t = body.next[q][bb];
                out.next[1 + q][bb] = t < 0 ? -1 : static_cast<int>(1 + static_cast<size_t>(t));
            }
        return minimize(trim(out));
    }
    case Kind::OmegaStack:
        throw domain_error(
            "compile: transfinite recipe stages have no finite-state carrier");
    }
    throw domain_error("compile: unknown expression kind");
}

std::string FamilyExpr::str() const {
    std::ostringstream os;
    switch (kind()) {
    case Kind::Point:
        os << "point(" << node_->point->str() << ")";
        break;
    case Kind::PrefixedUnion: {
        os << "union(";
        bool first = true;
        for (const auto& br : node_->branches) {
            if (!first) os << ", ";
            os << "[" << word_str(br.prefix) << "]" << br.child.str();
            first = false;
        }
        os << ")";
        break;
    }
    case Kind::LimitStack:
        os << "stack" << int(node_->bit) << "(" << node_->body->str() << ")";
        break;
    case Kind::OmegaStack:
        os << "omega" << int(node_->bit) << "(" << node_->limit.str() << ")";
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------- operations

relative_closure_error::relative_closure_error(Theory counterexample)
    : domain_error("subfamily is not relatively closed; counterexample: " +
                   counterexample.str()),
      counterexample_(std::move(counterexample)) {}

std::vector<Sentence> complete_decomposition(const Family& f, const Sentence& phi) {
    Family r = restrict(f, phi);
    if (!r.is_finite())
        throw domain_error("complete_decomposition: the restriction is infinite");
    if (r.is_empty())
        throw domain_error("complete_decomposition: the restriction is empty");
    const auto& pts = r.points();
    size_t n = pts.size();
    Sentence sphi = synthesize_sentence(to_clopen(phi));
    if (n == 1) return {sphi};
    // psi_i: conjunction of the first-difference literals separating point i
    // from every other point.
    std::vector<Sentence> psi;
    for (size_t i = 0; i < n; ++i) {
        std::set<std::pair<size_t, int>> lits;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            size_t d = first_difference(pts[i], pts[j]);
            lits.insert({d, pts[i].bit(d)});
        }
        std::optional<Sentence> acc;
        for (const auto& [pos, b] : lits) {
            Sentence lit = b ? Sentence::atom(static_cast<uint32_t>(pos))
                             : Sentence::negation(Sentence::atom(static_cast<uint32_t>(pos)));
            acc = acc ? Sentence::conjunction(*acc, lit) : lit;
        }
        psi.push_back(*acc);
    }
    std::vector<Sentence> out;
    for (size_t i = 0; i < n; ++i) {
        Sentence F = phi;
        if (i + 1 < n) {
            for (size_t j = 0; j < n; ++j)
                F = Sentence::conjunction(F, j == i ? psi[j] : Sentence::negation(psi[j]));
        } else {
            // the last point needs no positive marker of its own
            for (size_t j = 0; j + 1 < n; ++j)
                F = Sentence::conjunction(F, Sentence::negation(psi[j]));
        }
        out.push_back(synthesize_sentence(to_clopen(F)));
    }
    return out;
}

Scheme ddef_witness(const Family& f, const Family& sub) {
    if (!family_subset(sub, f))
        throw domain_error("ddef_witness: the candidate is not a subfamily");
    Family rc = family_intersect(closure(sub), f);
    if (family_equal(rc, sub)) return Scheme::closed_target(closure_carrier(sub));
    auto cex = find_member_outside(rc, sub);
    if (!cex)
        throw error("ddef_witness: relative closure differs but no counterexample found "
                    "(internal invariant)");
    throw relative_closure_error(*cex);
}

Sentence alpha_ranking_sentence(const Family& f, int alpha) {
    if (alpha < 0)
        throw domain_error("alpha_ranking_sentence: alpha must be a natural number");
    SafetyAutomaton a = closure_carrier(f);
    for (int k = 0; k < alpha; ++k) {
        if (a.empty()) break;
        a = derived_automaton(a);
    }
    if (a.empty())
        throw domain_error("alpha_ranking_sentence: alpha exceeds the rank of the family");
    // Shortest (then lexicographically least) word whose cylinder pins down a
    // single point of the level: breadth-first search for a singleton state.
    std::vector<bool> single = singleton_states(a);
    std::vector<bool> seen(a.size(), false);
    std::deque<std::pair<int, std::vector<uint8_t>>> queue;
    queue.push_back({a.initial, {}});
    seen[static_cast<size_t>(a.initial)] = true;
    while (!queue.empty()) {
        auto [q, w] = queue.front();
        queue.pop_front();
        if (single[static_cast<size_t>(q)]) return cylinder_sentence(w);
        for (int b = 0; b < 2; ++b) {
            int t = a.next[static_cast<size_t>(q)][b];
            if (t < 0 || seen[static_cast<size_t>(t)]) continue;
            seen[static_cast<size_t>(t)] = true;
            auto w2 = w;
            w2.push_back(static_cast<uint8_t>(b));
            queue.push_back({t, std::move(w2)});
        }
    }
    throw domain_error("alpha_ranking_sentence: the level has no isolated points "
                       "(the rank of the family is infinite)");
}

namespace {

// Shortest 0-preferring path from `from` to a state with both edges defined.
std::pair<std::vector<uint8_t>, int> path_to_branching(const SafetyAutomaton& k, int from) {
    std::vector<int> par(k.size(), -2);
    std::vector<uint8_t> pbit(k.size(), 0);
    std::deque<int> q{from};
    par[static_cast<size_t>(from)] = -1;
    int found = -1;
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        if (k.next[static_cast<size_t>(s)][0] >= 0 && k.next[static_cast<size_t>(s)][1] >= 0) {
            found = s;
            break;
        }
        for (int b = 0; b < 2; ++b) {
            int t = k.next[static_cast<size_t>(s)][b];
            if (t < 0 || par[static_cast<size_t>(t)] != -2) continue;
            par[static_cast<size_t>(t)] = s;
            pbit[static_cast<size_t>(t)] = static_cast<uint8_t>(b);
            q.push_back(t);
        }
    }
    if (found < 0)
        throw error("build_rank1_subfamily: perfect kernel without branching states "
                    "(internal invariant)");
    std::vector<uint8_t> w;
    for (int s = found; par[static_cast<size_t>(s)] >= 0; s = par[static_cast<size_t>(s)])
        w.push_back(pbit[static_cast<size_t>(s)]);
    std::reverse(w.begin(), w.end());
    return {std::move(w), found};
}

// A comb inside den(K) under the cylinder [u], rooted at kernel state `start`:
// a 1-preferring spine (eventually a pumped kernel cycle) with one tooth at
// every spine state whose unused kernel edge exists; each tooth is the
// lexicographically least kernel continuation. Denotes a family of rank (1,1):
// infinitely many isolated teeth accumulating exactly on the spine limit.
SafetyAutomaton comb_automaton(const SafetyAutomaton& K, const std::vector<uint8_t>& u,
                               int start) {
    std::vector<int> order;
    std::vector<uint8_t> sbits;
    std::vector<int> seen(K.size(), -1);
    int q = start;
    int cyc = -1;
    for (;;) {
        if (seen[static_cast<size_t>(q)] >= 0) {
            cyc = seen[static_cast<size_t>(q)];
            break;
        }
        seen[static_cast<size_t>(q)] = static_cast<int>(order.size());
        order.push_back(q);
        int n1 = K.next[static_cast<size_t>(q)][1];
        uint8_t b = n1 >= 0 ? 1 : 0;
        sbits.push_back(b);
        q = b ? n1 : K.next[static_cast<size_t>(q)][0];
    }
    size_t m = order.size();
    size_t off = u.size();
    std::vector<std::array<int, 2>> nx(off + m, {-1, -1});
    for (size_t i = 0; i < off; ++i)
        nx[i][u[i]] = static_cast<int>(i + 1 < off ? i + 1 : off);
    for (size_t j = 0; j < m; ++j)
        nx[off + j][sbits[j]] =
            static_cast<int>(j + 1 < m ? off + j + 1 : off + static_cast<size_t>(cyc));
    for (size_t j = 0; j < m; ++j) {
        uint8_t other = 1 - sbits[j];
        int z = K.next[static_cast<size_t>(order[j])][other];
        if (z < 0) continue;
        Theory tail = lex_least_point(K, z);
        const auto& p = tail.prefix();
        const auto& c = tail.period();
        size_t base = nx.size();
        nx.resize(base + p.size() + c.size(), {-1, -1});
        for (size_t i = 0; i < p.size(); ++i)
            nx[base + i][p[i]] = static_cast<int>(base + i + 1);
        for (size_t i = 0; i < c.size(); ++i)
            nx[base + p.size() + i][c[i]] =
                static_cast<int>(i + 1 < c.size() ? base + p.size() + i + 1 : base + p.size());
        nx[off + j][other] = static_cast<int>(base);
    }
    SafetyAutomaton out;
    out.initial = 0;
    out.next = std::move(nx);
    return minimize(trim(out));
}

} // namespace

RankingReport build_rank1_subfamily(const Family& f, uint64_t n) {
    if (n < 1) throw domain_error("build_rank1_subfamily: the degree must be positive");
    if (n > 4096) throw resource_error("build_rank1_subfamily: degree too large");
    if (f.is_explicit())
        throw domain_error("build_rank1_subfamily: the family has finite rank");
    SafetyAutomaton K = kernel_automaton(closure_carrier(f));
    if (K.empty())
        throw domain_error(
            "build_rank1_subfamily: the family has finite rank (empty perfect kernel)");
    // n pairwise disjoint cylinders meeting the kernel, by repeated splitting
    // at the nearest branching state.
    std::deque<std::pair<std::vector<uint8_t>, int>> cyls;
    cyls.push_back({{}, K.initial});
    while (cyls.size() < n) {
        auto [u, q0] = cyls.front();
        cyls.pop_front();
        auto [w, s] = path_to_branching(K, q0);
        for (int b = 0; b < 2; ++b) {
            auto u2 = u;
            u2.insert(u2.end(), w.begin(), w.end());
            u2.push_back(static_cast<uint8_t>(b));
            cyls.push_back({std::move(u2), K.next[static_cast<size_t>(s)][b]});
        }
    }
    SafetyAutomaton acc;
    bool first = true;
    for (const auto& [u, q0] : cyls) {
        SafetyAutomaton comb = comb_automaton(K, u, q0);
        acc = first ? std::move(comb) : union_automata(acc, comb);
        first = false;
    }
    Family witness = Family::regular(std::move(acc), f.excluded());
    RankResult r = rank(witness);
    RankingReport rep;
    rep.rank = OrdinalCnf::finite(1);
    rep.degree = n;
    rep.witness = witness;
    rep.verified = !r.is_infinite && r.rank == 1 && r.degree == n;
    if (!rep.verified)
        throw error("build_rank1_subfamily: witness failed rank verification "
                    "(internal invariant)");
    rep.scheme = Scheme::closed_target(closure_carrier(witness));
    return rep;
}

namespace {

FamilyExpr recipe_single(const OrdinalCnf& a) {
    if (a.is_zero()) return FamilyExpr::point(Theory({}, {0}));
    if (a.is_successor()) return FamilyExpr::limit_stack(recipe_single(a.predecessor()), 1);
    return FamilyExpr::omega_stack(a, 1);
}

} // namespace

FamilyExpr build_recipe(const OrdinalCnf& alpha, uint64_t n) {
    if (n < 1) throw domain_error("build_recipe: the degree must be positive");
    if (n > 4096) throw resource_error("build_recipe: degree too large");
    // The finite part of alpha becomes that many nested stacks; keep it sane.
    if (alpha.is_successor() && alpha.terms().back().second > 4096)
        throw resource_error("build_recipe: rank too large");
    if (n == 1) return recipe_single(alpha);
    std::vector<FamilyExpr::Branch> brs;
    for (uint64_t i = 0; i < n; ++i) {
        std::vector<uint8_t> pfx(static_cast<size_t>(i), 1);
        if (i + 1 < n) pfx.push_back(0);
        brs.push_back({std::move(pfx), recipe_single(alpha)});
    }
    return FamilyExpr::prefixed_union(std::move(brs));
}

RankingReport build_family(int alpha, uint64_t n) {
    if (alpha < 0) throw domain_error("build_family: alpha must be a natural number");
    if (alpha > 64) throw resource_error("build_family: rank too large");
    if (n < 1) throw domain_error("build_family: the degree must be positive");
    if (n > 4096) throw resource_error("build_family: degree too large");
    FamilyExpr rec = build_recipe(OrdinalCnf::finite(static_cast<uint64_t>(alpha)), n);
    Family fam = Family::regular(rec.compile());
    RankResult r = rank(fam);
    RankingReport rep;
    rep.rank = OrdinalCnf::finite(static_cast<uint64_t>(alpha));
    rep.degree = n;
    rep.recipe = rec;
    rep.witness = fam;
    rep.verified = !r.is_infinite && r.rank == alpha && r.degree == n;
    if (!rep.verified)
        throw error("build_family: witness failed rank verification (internal invariant)");
    return rep;
}

std::pair<Theory, Scheme> nonsdefinable_witness(const Family& f) {
    if (!is_closed_family(f))
        throw domain_error("nonsdefinable_witness: the family is not closed");
    if (f.is_explicit())
        throw domain_error("nonsdefinable_witness: in a finite family every subfamily "
                           "is definable by a single sentence");
    SafetyAutomaton d = derived_automaton(closure_carrier(f));
    if (d.empty())
        throw error("nonsdefinable_witness: infinite carrier without accumulation points "
                    "(internal invariant)");
    Theory t = lex_least_point(d);
    return {t, Scheme::diagram(t)};
}

} // namespace tfam
