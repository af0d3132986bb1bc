#pragma once

#include "kpferm/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

inline kpferm::Rational q(const char* text) { return kpferm::parse_rational(text); }

// Pins the textual form of an exact value in failure messages.
inline std::string str(const kpferm::Rational& r) { return kpferm::format_rational(r); }
