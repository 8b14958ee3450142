#pragma once

#include "wha/element.hpp"

namespace wha {

// Expression syntax: `+ - * / ^ ( )`, integer literals, generator names, and
// the presentation's scalar variable. Products are free concatenation;
// division is scalar-only. Round-trips exactly with Element::str.
Element parse_element(const std::string& text, const Alphabet& alph, char variable);

// "lhs = rhs", one relation per line.
std::pair<Element, Element> parse_relation(const std::string& line, const Alphabet& alph,
                                           char variable);

} // namespace wha
