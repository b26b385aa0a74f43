#pragma once

#include "qosp/radical.hpp"

#include <string>
#include <string_view>

namespace qosp {

// Grammar: terms "<cyclo>*s^<int>" joined by " + "; a non-trivial denominator is
// written "(<num>)/(<den>)". <cyclo> = "((p/q)+(p/q)*w+(p/q)*w^2+(p/q)*w^3)" listing nonzero parts.
std::string to_string(const Laurent& p);
std::string to_string(const ExactScalar& v);
// "coeff * sqrt([2][3])" style, for humans.
std::string to_string(const Surd& v);
std::string to_string(const RadicalScalar& v);

Laurent parse_laurent(std::string_view text);
ExactScalar parse_scalar(std::string_view text);

}  // namespace qosp
