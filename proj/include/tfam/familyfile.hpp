#pragma once

#include "tfam/construct.hpp"
#include "tfam/family.hpp"

#include <string>

namespace tfam {

// JSON family descriptions, one object per file:
//   {"kind":"explicit","points":["(0)","11(0)"]}
//   {"kind":"automaton","states":2,"initial":0,
//    "edges":[[0,1,0],[0,0,1],[1,0,1]],"exclude":["(1)"]}
//   {"kind":"expr","expr":{...},"exclude":[...]}
// Expr trees:
//   {"op":"point","theory":"(0)"}
//   {"op":"union","branches":[["0",expr],["1",expr]]}
//   {"op":"stack","body":expr,"bit":1}
//   {"op":"omega","limit":"w*2+1","bit":1}
// Theory literals use the prefix(period) syntax; prefixes are bit strings.
Family parse_family_json(const std::string& text);
std::string family_json(const Family& f);
Family load_family(const std::string& path);
void save_family(const Family& f, const std::string& path);

// Recipe subtrees, exposed for the construct command and tests.
FamilyExpr parse_expr_json(const std::string& text);
std::string expr_json(const FamilyExpr& e);

// Scheme descriptions:
//   {"kind":"finite","sentences":["Q0","!Q1"]}
//   {"kind":"diagram","theory":"(1)"}
//   {"kind":"target","automaton":{"states":N,"initial":0,"edges":[...]}}
Scheme parse_scheme_json(const std::string& text);
std::string scheme_json(const Scheme& s);
Scheme load_scheme(const std::string& path);

} // namespace tfam
