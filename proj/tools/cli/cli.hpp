#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "garside/normal_form.hpp"

namespace garside::cli {

/// "n: i1 i2 ..." where each token is a nonzero index with |i| < n, "D^k"
/// (Δ^k; "D" alone is Δ), or the separator ".". Errors carry the character
/// offset of the offending token.
BraidWord parse_braid(std::string_view text);

/// Space-separated canonical word of one simple element.
std::string format_simple(const SimpleElement& s);
/// "D^p . w(x1) . ... . w(xl)"
std::string format_normal_form(const NormalForm& x);
/// "D^p w(x1) w(x2) ..." with the D^p omitted when p = 0; "" for the identity.
std::string format_compact(const NormalForm& x);

/// Runs the tool on argv; returns the exit status (0 ok, 1 bad input, 2 cap hit).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garside::cli
