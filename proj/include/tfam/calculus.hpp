#pragma once

#include "tfam/family.hpp"

namespace tfam {

// phi forces psi over f: every member of f satisfying phi satisfies psi.
bool forces(const Family& f, const Sentence& phi, const Sentence& psi);

// Scheme-level forcing: every member of f realizing all of `from` realizes
// all of `to`.
bool forces_scheme(const Family& f, const Scheme& from, const Scheme& to);

// psi holds throughout f.
bool provable(const Family& f, const Sentence& psi);

// phi has no model in f.
bool inconsistent(const Family& f, const Sentence& phi);

// The two schemes have the same models inside f.
bool equivalent_mod(const Family& f, const Scheme& a, const Scheme& b);

} // namespace tfam
