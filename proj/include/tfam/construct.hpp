#pragma once

#include "tfam/errors.hpp"
#include "tfam/family.hpp"
#include "tfam/rank.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tfam {

// Ordinals below w^w in Cantor normal form: a sum of terms w^exp * coeff with
// strictly decreasing exponents and positive coefficients. Zero is the empty
// sum. Textual form: "w^3*2 + w*4 + 7", with "^1" and "*1" omitted.
class OrdinalCnf {
public:
    OrdinalCnf() = default; // zero

    static OrdinalCnf finite(uint64_t n);
    static OrdinalCnf omega_power(uint32_t exp, uint64_t coeff = 1);
    static OrdinalCnf parse(const std::string& text);

    const std::vector<std::pair<uint32_t, uint64_t>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const { return terms_.empty() || terms_[0].first == 0; }
    uint64_t finite_value() const; // requires is_finite()
    bool is_limit() const { return !terms_.empty() && terms_.back().first > 0; }
    bool is_successor() const { return !terms_.empty() && terms_.back().first == 0; }

    OrdinalCnf plus_one() const;
    OrdinalCnf predecessor() const; // requires is_successor()

    // -1 / 0 / +1 ordinal comparison.
    static int compare(const OrdinalCnf& a, const OrdinalCnf& b);
    bool operator==(const OrdinalCnf& o) const { return terms_ == o.terms_; }
    bool operator<(const OrdinalCnf& o) const { return compare(*this, o) < 0; }

    std::string str() const;

private:
    std::vector<std::pair<uint32_t, uint64_t>> terms_; // (exponent, coefficient), exps strictly decreasing
};

// A recipe for a family of prescribed rank, built from four combinators:
//   point(t)                 the single theory t                rank (0, 1)
//   prefixed_union(branches) disjoint cylinder copies           rank (max, sum)
//   limit_stack(body, b)     copies of body hanging off the     rank (alpha+1, 1)
//                            constant-b spine, limit b^w
//   omega_stack(lambda, b)   stage-n recipes of a limit ordinal rank (lambda, 1)
//                            along the spine; transfinite only,
//                            not compilable to an automaton
class FamilyExpr {
public:
    enum class Kind { Point, PrefixedUnion, LimitStack, OmegaStack };

    struct Branch; // prefix + child expression; defined after the class

    static FamilyExpr point(Theory t);
    static FamilyExpr prefixed_union(std::vector<Branch> branches);
    static FamilyExpr limit_stack(FamilyExpr body, uint8_t branch_bit = 1);
    static FamilyExpr omega_stack(OrdinalCnf limit, uint8_t branch_bit = 1);

    Kind kind() const;
    const Theory& point_value() const;
    const std::vector<Branch>& branches() const;
    const FamilyExpr& body() const;
    uint8_t branch_bit() const;
    const OrdinalCnf& limit() const;

    // Rank and degree of the denoted family, computed from the structure.
    std::pair<OrdinalCnf, uint64_t> recipe_rank() const;

    // Safety automaton denoting the family. Throws domain_error on recipes
    // with transfinite stages (OmegaStack), which have no finite-state carrier.
    SafetyAutomaton compile() const;

    std::string str() const;

private:
    struct Node;
    explicit FamilyExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct FamilyExpr::Branch {
    std::vector<uint8_t> prefix;
    FamilyExpr child;
};

// Result of a constructive operation: the target rank and degree, the recipe
// when one exists, the compiled witness family (finite stages only) with its
// rank re-verified, and the defining scheme when the construction is relative
// to an ambient family.
struct RankingReport {
    OrdinalCnf rank;
    uint64_t degree = 0;
    std::optional<FamilyExpr> recipe;
    std::optional<Family> witness;
    bool verified = false;
    std::optional<Scheme> scheme;
};

// Thrown by ddef_witness when the candidate subfamily is not relatively
// closed; carries a point of (closure(sub) intersect f) \ sub.
class relative_closure_error : public domain_error {
public:
    explicit relative_closure_error(Theory counterexample);
    const Theory& counterexample() const { return counterexample_; }

private:
    Theory counterexample_;
};

// Sentences splitting the finite nonempty restriction restrict(f, phi) into
// singletons: the i-th sentence holds in f exactly at the i-th point (in
// increasing order). Built from difference literals and simplified.
std::vector<Sentence> complete_decomposition(const Family& f, const Sentence& phi);

// A scheme defining `sub` inside `f`, for sub relatively closed in f; throws
// relative_closure_error (with a counterexample point) otherwise.
Scheme ddef_witness(const Family& f, const Family& sub);

// A sentence whose restriction of f is alpha-minimal (rank alpha, degree 1).
// Requires rank(f) finite and >= alpha.
Sentence alpha_ranking_sentence(const Family& f, int alpha);

// For f of infinite rank: a subfamily of rank exactly (1, n), relatively
// closed in f, carved out of the perfect kernel, with its defining scheme.
RankingReport build_rank1_subfamily(const Family& f, uint64_t n);

// A standalone family of rank exactly (alpha, n), with recipe and witness.
RankingReport build_family(int alpha, uint64_t n);

// A recipe with recipe_rank == (alpha, n); compiles iff alpha is finite.
FamilyExpr build_recipe(const OrdinalCnf& alpha, uint64_t n);

// For an infinite closed family: a theory t in f such that {t} is definable
// by a scheme (the diagram of t) but by no single sentence.
std::pair<Theory, Scheme> nonsdefinable_witness(const Family& f);

} // namespace tfam
