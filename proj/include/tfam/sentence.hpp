#pragma once

#include "tfam/theory.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tfam {

// Propositional sentences over countably many atoms Q0, Q1, ... where atom Qi
// reads bit i of a theory. Immutable tree; cheap to copy (shared nodes).
class Sentence {
public:
    enum class Kind { Top, Bottom, Atom, Not, And, Or, Implies, Iff };

    static Sentence top();
    static Sentence bottom();
    static Sentence atom(uint32_t index);
    static Sentence negation(Sentence s);
    static Sentence conjunction(Sentence a, Sentence b);
    static Sentence disjunction(Sentence a, Sentence b);
    static Sentence implication(Sentence a, Sentence b);
    static Sentence equivalence(Sentence a, Sentence b);

    Kind kind() const { return node_->kind; }
    uint32_t atom_index() const { return node_->index; }
    Sentence child(size_t i) const;
    size_t arity() const;

    // Truth of the sentence in theory t (atom Qi holds iff bit i of t is 1).
    bool eval(const Theory& t) const;
    // Truth under a finite word: every atom index must be < |w|.
    bool eval_word(const std::vector<uint8_t>& w) const;

    // 1 + the largest atom index mentioned; 0 for constant sentences.
    uint32_t depth() const;

    // Canonical print; parse(str()) round-trips.
    std::string str() const;

private:
    struct Node {
        Kind kind;
        uint32_t index = 0;
        std::shared_ptr<const Node> lhs, rhs;
    };
    explicit Sentence(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
    friend Sentence make(Sentence::Kind, uint32_t, const Sentence*, const Sentence*);
};

// Largest accepted atom index in parsed text.
inline constexpr uint32_t kMaxAtomIndex = 1000000;

// Grammar: atoms Q<digits>, constants T and F, precedence ! > & > | > -> > <->,
// -> right-associative, <-> left-associative, parentheses, ASCII whitespace ignored.
Sentence parse_sentence(const std::string& text);

// Conjunction of literals pinning the first |prefix| bits; top for the empty prefix.
Sentence cylinder_sentence(const std::vector<uint8_t>& prefix);

// All atom indices mentioned, sorted, deduplicated.
std::vector<uint32_t> atoms_of(const Sentence& s);

} // namespace tfam
