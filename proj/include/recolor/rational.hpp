#pragma once

#include <boost/rational.hpp>
#include <string>

namespace recolor {

// Exact vertex weights. All arithmetic in the library is rational; there is
// no epsilon anywhere.
using Weight = boost::rational<long long>;

/// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Weight& w);

/// Parses "p" or "p/q". Throws ValidationError on malformed input or q = 0.
Weight parse_weight(const std::string& text);

}  // namespace recolor
