#pragma once

#include <string>
#include <string_view>

#include "rigidwitt/form.hpp"

namespace rigidwitt {

/// `F3[t1,t2]`, `R[]`, `C[t1]`, `F9[t1]` (F9 is the level-one base with two unit classes).
FieldDesc parse_field(std::string_view text);

/// `-t1*t3`, `1`, `-1`; over F9 the nonsquare unit is written `u` (e.g. `u*t2`).
SquareClass parse_class(std::string_view text, const FieldDesc& field);

/// `<e1,...,ek>`, `<>`, `<<a,b>>`, `c*<<a,b>>`; pieces may be joined by `+` (orthogonal sum).
DiagonalForm parse_form(std::string_view text, const FieldDesc& field);

/// `<<a,b>>` or `c*<<a,b>>`.
PfisterSpec parse_pfister(std::string_view text, const FieldDesc& field);

std::string to_string(const SquareClass& a);
std::string to_string(const DiagonalForm& phi);
std::string to_string(const PfisterSpec& spec);

}  // namespace rigidwitt
