#pragma once

#include <gmpxx.h>

#include <string>

namespace rectsym {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }
inline std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace rectsym
