#include "tfam/calculus.hpp"

namespace tfam {

bool forces(const Family& f, const Sentence& phi, const Sentence& psi) {
    return family_subset(restrict(f, phi), restrict(f, psi));
}

bool forces_scheme(const Family& f, const Scheme& from, const Scheme& to) {
    return family_subset(restrict_scheme(f, from), restrict_scheme(f, to));
}

bool provable(const Family& f, const Sentence& psi) {
    return family_subset(f, restrict(f, psi));
}

bool inconsistent(const Family& f, const Sentence& phi) {
    return restrict(f, phi).is_empty();
}

bool equivalent_mod(const Family& f, const Scheme& a, const Scheme& b) {
    return family_equal(restrict_scheme(f, a), restrict_scheme(f, b));
}

} // namespace tfam
