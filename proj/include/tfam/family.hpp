#pragma once

#include "tfam/automaton.hpp"
#include "tfam/sentence.hpp"
#include "tfam/theory.hpp"

#include <optional>
#include <vector>

namespace tfam {

// A family of complete theories: either an explicit finite set of points, or a
// closed regular carrier (safety automaton) minus a finite excluded set. Every
// excluded point lies in the carrier's denotation, and carriers with finite
// denotation are normalized to explicit form, so a regular family is always
// infinite. Explicit families keep an empty excluded list (folded away).
class Family {
public:
    // Empty family.
    Family() = default;

    static Family explicit_set(std::vector<Theory> points);
    static Family regular(SafetyAutomaton carrier, std::vector<Theory> excluded = {});

    bool is_explicit() const { return !aut_.has_value(); }
    bool is_empty() const { return is_explicit() && points_.empty(); }
    // Explicit families are exactly the finite ones.
    bool is_finite() const { return is_explicit(); }

    const std::vector<Theory>& points() const;          // explicit only
    const SafetyAutomaton& carrier() const;             // regular only
    const std::vector<Theory>& excluded() const { return excluded_; }

    std::string str() const; // human-readable description

private:
    std::optional<SafetyAutomaton> aut_;
    std::vector<Theory> points_;
    std::vector<Theory> excluded_;
};

// A scheme describes a (possibly infinite) set of sentences given finitely:
// an explicit finite list, the diagram of a theory (all sentences true in it),
// or a closed target automaton A standing for all cylinder negations
// { not chi_u : [u] does not meet den(A) }.
class Scheme {
public:
    enum class Kind { FiniteSet, Diagram, ClosedTarget };

    static Scheme finite_set(std::vector<Sentence> sentences);
    static Scheme diagram(Theory t);
    static Scheme closed_target(SafetyAutomaton a);

    Kind kind() const { return kind_; }
    const std::vector<Sentence>& sentences() const { return sentences_; }
    const Theory& theory() const;
    const SafetyAutomaton& target() const { return target_; }

    std::string str() const;

private:
    Kind kind_ = Kind::FiniteSet;
    std::vector<Sentence> sentences_;
    std::optional<Theory> theory_;
    SafetyAutomaton target_;
};

// Membership of a point.
bool member(const Family& f, const Theory& t);

// The subfamily satisfying a sentence / a scheme.
Family restrict(const Family& f, const Sentence& s);
Family restrict_scheme(const Family& f, const Scheme& sch);

// Topological closure of the family inside the space of all theories: excluded
// accumulation points return, excluded isolated points stay removed (the
// carrier is rebuilt to avoid them). The result carries no exclusions.
Family closure(const Family& f);

// Is the family equal to its closure?
bool is_closed_family(const Family& f);

// Is t an accumulation point of f (t itself need not belong to f)?
bool is_accumulation_point(const Family& f, const Theory& t);

// Set algebra and comparisons (all denotational).
Family family_union(const Family& a, const Family& b);
Family family_intersect(const Family& a, const Family& b);
bool family_subset(const Family& a, const Family& b);
bool family_equal(const Family& a, const Family& b);

// The subfamily of points isolated in f. Throws unsupported_representation if
// the result is not expressible as a carrier minus finitely many points.
Family isolated_points(const Family& f);

// For a closed family: its least generating set (the isolated points) when
// they generate the whole family under closure, absent otherwise.
std::optional<Family> least_generating_set(const Family& f);

// Scheme satisfiability relative to f. `consistent` asks for a common model in
// f of the whole scheme; `locally_consistent` asks every finite part to have
// one. For finite schemes the notions coincide.
bool consistent(const Family& f, const Scheme& sch);
bool locally_consistent(const Family& f, const Scheme& sch);

// When the scheme is locally inconsistent, a finite subset of it with no model
// in f; absent when locally consistent.
std::optional<std::vector<Sentence>> refutation_certificate(const Family& f, const Scheme& sch);

// --- helpers shared by the higher modules ---

// Automaton denoting closure(f).
SafetyAutomaton closure_carrier(const Family& f);

// Up to `want` members of f (complete=true when that is all of them).
Enumeration enumerate_members(const Family& f, size_t want);

// Some point of a \ b, if the difference is nonempty.
std::optional<Theory> find_member_outside(const Family& a, const Family& b);

} // namespace tfam
