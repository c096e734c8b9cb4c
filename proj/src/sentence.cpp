#include "tfam/sentence.hpp"

#include "tfam/errors.hpp"

#include <algorithm>
#include <cctype>

namespace tfam {

Sentence make(Sentence::Kind k, uint32_t idx, const Sentence* a, const Sentence* b) {
    auto n = std::make_shared<Sentence::Node>();
    n->kind = k;
    n->index = idx;
    if (a) n->lhs = a->node_;
    if (b) n->rhs = b->node_;
    return Sentence(std::move(n));
}

Sentence Sentence::top() { return make(Kind::Top, 0, nullptr, nullptr); }
Sentence Sentence::bottom() { return make(Kind::Bottom, 0, nullptr, nullptr); }
Sentence Sentence::atom(uint32_t i) { return make(Kind::Atom, i, nullptr, nullptr); }
Sentence Sentence::negation(Sentence s) { return make(Kind::Not, 0, &s, nullptr); }
Sentence Sentence::conjunction(Sentence a, Sentence b) { return make(Kind::And, 0, &a, &b); }
Sentence Sentence::disjunction(Sentence a, Sentence b) { return make(Kind::Or, 0, &a, &b); }
Sentence Sentence::implication(Sentence a, Sentence b) { return make(Kind::Implies, 0, &a, &b); }
Sentence Sentence::equivalence(Sentence a, Sentence b) { return make(Kind::Iff, 0, &a, &b); }

Sentence Sentence::child(size_t i) const {
    return Sentence(i == 0 ? node_->lhs : node_->rhs);
}

size_t Sentence::arity() const {
    switch (node_->kind) {
        case Kind::Top:
        case Kind::Bottom:
        case Kind::Atom: return 0;
        case Kind::Not: return 1;
        default: return 2;
    }
}

namespace {

template <typename BitFn>
bool eval_impl(const Sentence& s, const BitFn& bit) {
    switch (s.kind()) {
        case Sentence::Kind::Top: return true;
        case Sentence::Kind::Bottom: return false;
        case Sentence::Kind::Atom: return bit(s.atom_index());
        case Sentence::Kind::Not: return !eval_impl(s.child(0), bit);
        case Sentence::Kind::And: {
            bool a = eval_impl(s.child(0), bit);
            bool b = eval_impl(s.child(1), bit);
            return a && b;
        }
        case Sentence::Kind::Or: {
            bool a = eval_impl(s.child(0), bit);
            bool b = eval_impl(s.child(1), bit);
            return a || b;
        }
        case Sentence::Kind::Implies: {
            bool a = eval_impl(s.child(0), bit);
            bool b = eval_impl(s.child(1), bit);
            return !a || b;
        }
        case Sentence::Kind::Iff: {
            bool a = eval_impl(s.child(0), bit);
            bool b = eval_impl(s.child(1), bit);
            return a == b;
        }
    }
    throw error("eval: corrupt sentence");
}

} // namespace

bool Sentence::eval(const Theory& t) const {
    return eval_impl(*this, [&](uint32_t i) { return t.bit(i) == 1; });
}

bool Sentence::eval_word(const std::vector<uint8_t>& w) const {
    return eval_impl(*this, [&](uint32_t i) {
        if (i >= w.size()) throw domain_error("eval_word: atom index beyond word length");
        return w[i] == 1;
    });
}

uint32_t Sentence::depth() const {
    uint32_t d = 0;
    for (uint32_t a : atoms_of(*this)) d = std::max(d, a + 1);
    return d;
}

std::vector<uint32_t> atoms_of(const Sentence& s) {
    std::vector<uint32_t> out;
    // Iterative walk keeps deep sentences off the call stack.
    std::vector<Sentence> stack{s};
    while (!stack.empty()) {
        Sentence cur = stack.back();
        stack.pop_back();
        if (cur.kind() == Sentence::Kind::Atom) out.push_back(cur.atom_index());
        for (size_t i = 0; i < cur.arity(); ++i) stack.push_back(cur.child(i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    bool eat2(char c1, char c2) {
        skip_ws();
        if (pos + 1 < s.size() && s[pos] == c1 && s[pos + 1] == c2) { pos += 2; return true; }
        return false;
    }

    // Lowest precedence: iff chains, left-associative.
    Sentence parse_iff() {
        Sentence lhs = parse_implies();
        while (true) {
            skip_ws();
            if (pos + 2 < s.size() && s[pos] == '<' && s[pos + 1] == '-' && s[pos + 2] == '>') {
                pos += 3;
                lhs = Sentence::equivalence(lhs, parse_implies());
            } else {
                return lhs;
            }
        }
    }

    // Right-associative implication.
    Sentence parse_implies() {
        Sentence lhs = parse_or();
        skip_ws();
        if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == '>') {
            pos += 2;
            return Sentence::implication(lhs, parse_implies());
        }
        return lhs;
    }

    Sentence parse_or() {
        Sentence lhs = parse_and();
        while (eat('|')) lhs = Sentence::disjunction(lhs, parse_and());
        return lhs;
    }

    Sentence parse_and() {
        Sentence lhs = parse_unary();
        while (eat('&')) lhs = Sentence::conjunction(lhs, parse_unary());
        return lhs;
    }

    Sentence parse_unary() {
        if (eat('!')) return Sentence::negation(parse_unary());
        return parse_primary();
    }

    Sentence parse_primary() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("sentence: unexpected end of input", pos);
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            Sentence inner = parse_iff();
            if (!eat(')')) throw parse_error("sentence: missing ')'", pos);
            return inner;
        }
        if (c == 'T') { ++pos; return Sentence::top(); }
        if (c == 'F') { ++pos; return Sentence::bottom(); }
        if (c == 'Q') {
            ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                throw parse_error("sentence: atom needs digits after Q", pos);
            uint64_t v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
                if (v > kMaxAtomIndex)
                    throw parse_error("sentence: atom index exceeds " + std::to_string(kMaxAtomIndex), pos);
                ++pos;
            }
            return Sentence::atom(static_cast<uint32_t>(v));
        }
        throw parse_error("sentence: unexpected character '" + std::string(1, c) + "'", pos);
    }
};

// Precedence levels for printing, higher binds tighter.
int prec(Sentence::Kind k) {
    switch (k) {
        case Sentence::Kind::Iff: return 1;
        case Sentence::Kind::Implies: return 2;
        case Sentence::Kind::Or: return 3;
        case Sentence::Kind::And: return 4;
        case Sentence::Kind::Not: return 5;
        default: return 6;
    }
}

void print(const Sentence& s, int parent_prec, bool right_operand, std::string& out) {
    const int p = prec(s.kind());
    // A child needs parentheses when looser than the parent, or equally tight on
    // the side the operator does not associate with.
    bool need_parens = false;
    if (s.arity() == 2) {
        if (p < parent_prec) need_parens = true;
        else if (p == parent_prec) {
            const bool right_assoc = (s.kind() == Sentence::Kind::Implies);
            need_parens = right_assoc ? !right_operand : right_operand;
        }
    } else if (p < parent_prec) {
        need_parens = true;
    }
    if (need_parens) out += '(';
    switch (s.kind()) {
        case Sentence::Kind::Top: out += 'T'; break;
        case Sentence::Kind::Bottom: out += 'F'; break;
        case Sentence::Kind::Atom: out += 'Q' + std::to_string(s.atom_index()); break;
        case Sentence::Kind::Not:
            out += '!';
            print(s.child(0), prec(Sentence::Kind::Not), false, out);
            break;
        case Sentence::Kind::And:
        case Sentence::Kind::Or:
        case Sentence::Kind::Implies:
        case Sentence::Kind::Iff: {
            print(s.child(0), p, false, out);
            switch (s.kind()) {
                case Sentence::Kind::And: out += " & "; break;
                case Sentence::Kind::Or: out += " | "; break;
                case Sentence::Kind::Implies: out += " -> "; break;
                default: out += " <-> "; break;
            }
            print(s.child(1), p, true, out);
            break;
        }
    }
    if (need_parens) out += ')';
}

} // namespace

std::string Sentence::str() const {
    std::string out;
    print(*this, 0, false, out);
    return out;
}

Sentence parse_sentence(const std::string& text) {
    Parser p(text);
    Sentence s = p.parse_iff();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("sentence: trailing input", p.pos);
    return s;
}

Sentence cylinder_sentence(const std::vector<uint8_t>& prefix) {
    if (prefix.empty()) return Sentence::top();
    Sentence out = prefix[0] ? Sentence::atom(0) : Sentence::negation(Sentence::atom(0));
    for (size_t i = 1; i < prefix.size(); ++i) {
        Sentence lit = prefix[i] ? Sentence::atom(static_cast<uint32_t>(i))
                                 : Sentence::negation(Sentence::atom(static_cast<uint32_t>(i)));
        out = Sentence::conjunction(out, lit);
    }
    return out;
}

} // namespace tfam
