#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repdecomp {

/// Thrown when an operation would materialize more weight entries than the
/// configured cap allows. Converts runaway inputs into a diagnosable error.
class size_cap_error : public std::runtime_error {
public:
    explicit size_cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when data that must be a genuine character (Weyl-invariant,
/// nonnegative multiplicities) turns out not to be one, e.g. an inexact
/// division inside a symmetric-power formula or a negative multiplicity
/// during highest-weight stripping.
class not_a_character_error : public std::runtime_error {
public:
    explicit not_a_character_error(const std::string& what) : std::runtime_error(what) {}
};

/// Global cap on the number of weight entries a single character may hold.
/// Default 10^7; configurable from the CLI (flag or environment).
std::size_t character_size_cap();
void set_character_size_cap(std::size_t cap);

}  // namespace repdecomp
