#pragma once

#include "osculant/schur.hpp"

namespace osculant::exper {

// Problem grammar: GR(k,n): cond(,cond)* with cond := partition('^'mult)?
// and partition := int('.'int)*, e.g. "GR(3,6): 2.1^2, 1^3".
combinat::SchubertProblemSpec parse_problem(const std::string& text);

// "outer/inner" or plain "outer"
combinat::SkewShape parse_skew(const std::string& text);

} // namespace osculant::exper
