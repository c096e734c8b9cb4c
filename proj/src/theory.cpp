#include "tfam/theory.hpp"

#include "tfam/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tfam {

namespace {

// Smallest d dividing n such that w is a power of its first d bits.
size_t primitive_root_len(const std::vector<uint8_t>& w) {
    const size_t n = w.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
        if (ok) return d;
    }
    return n;
}

} // namespace

Theory::Theory(std::vector<uint8_t> prefix, std::vector<uint8_t> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw domain_error("theory: empty period");
    for (uint8_t b : prefix_)
        if (b > 1) throw domain_error("theory: bits must be 0/1");
    for (uint8_t b : period_)
        if (b > 1) throw domain_error("theory: bits must be 0/1");
    period_.resize(primitive_root_len(period_));
    // Absorb the prefix tail into the period: while the last prefix bit equals
    // the last period bit, rotating the period right lets the prefix shrink.
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
        prefix_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
}

Theory Theory::parse(const std::string& text) {
    size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    const std::string s = text.substr(a, b - a);
    const size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw parse_error("theory literal must look like <bits>(<bits>): " + text);
    auto bits = [&](size_t from, size_t to) {
        std::vector<uint8_t> out;
        for (size_t i = from; i < to; ++i) {
            if (s[i] == '0') out.push_back(0);
            else if (s[i] == '1') out.push_back(1);
            else throw parse_error("theory literal: bad character '" + std::string(1, s[i]) + "'", i);
        }
        return out;
    };
    std::vector<uint8_t> pre = bits(0, open);
    std::vector<uint8_t> per = bits(open + 1, s.size() - 1);
    if (per.empty()) throw parse_error("theory literal: empty period: " + text);
    return Theory(std::move(pre), std::move(per));
}

std::string Theory::str() const {
    std::string out = word_str(prefix_);
    out += '(';
    out += word_str(period_);
    out += ')';
    return out;
}

int Theory::bit(size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
}

std::vector<uint8_t> Theory::prefix_word(size_t i) const {
    std::vector<uint8_t> out(i);
    for (size_t k = 0; k < i; ++k) out[k] = static_cast<uint8_t>(bit(k));
    return out;
}

bool Theory::operator<(const Theory& o) const {
    if (*this == o) return false;
    return bit(first_difference(*this, o)) < o.bit(first_difference(*this, o));
}

bool is_prefix_of(const std::vector<uint8_t>& w, const Theory& t) {
    for (size_t i = 0; i < w.size(); ++i)
        if (t.bit(i) != w[i]) return false;
    return true;
}

size_t first_difference(const Theory& a, const Theory& b) {
    const size_t pa = a.period_len(), pb = b.period_len();
    const size_t bound = std::max(a.prefix_len(), b.prefix_len()) + std::lcm(pa, pb);
    for (size_t i = 0; i < bound; ++i)
        if (a.bit(i) != b.bit(i)) return i;
    throw domain_error("first_difference: theories are equal");
}

std::string word_str(const std::vector<uint8_t>& w) {
    std::string out;
    out.reserve(w.size());
    for (uint8_t b : w) out += (b ? '1' : '0');
    return out;
}

std::vector<uint8_t> parse_word(const std::string& s) {
    std::vector<uint8_t> out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '0') out.push_back(0);
        else if (s[i] == '1') out.push_back(1);
        else throw parse_error("bit word: bad character '" + std::string(1, s[i]) + "'", i);
    }
    return out;
}

} // namespace tfam
