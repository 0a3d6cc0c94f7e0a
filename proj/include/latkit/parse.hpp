#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latkit/lorentzian.hpp"
#include "latkit/vector.hpp"

namespace latkit {

// Parses a vector in run-length superscript notation, e.g. "(1^4,-1^4,0^17)"
// or "(1/2^8,-3/4,0)".  An entry "a^k" repeats a k times; entries may be
// fractions p/q.  A "..." entry continues the arithmetic progression of the
// two preceding values until the value after the ellipsis is reached.
ScaledVector parse_vector(const std::string& text);

// Parses a Lorentz class "(a|b_1,...,b_n)", e.g. "(7|5,1^23)"; the b-side
// accepts the same run-length and ellipsis notation.
LorentzClass parse_lorentz_class(const std::string& text);

// Compact run-length rendering, inverse to parse_vector for exact values.
std::string format_vector(const ScaledVector& v);

// A plumbing description file:
//   nodes <n>            vertex count (vertices are 0..n-1, default weight 2)
//   dim <d>              ambient dimension of the basis vectors (optional)
//   weight <i> <w>       overrides the weight of vertex i
//   edge <i> <j>         tree edge
//   basis <vector>       one line per vertex, in vertex order (optional)
// '#' starts a comment.
struct PlumbingFile {
    PlumbingGraph graph;
    int ambient_dim = 0;                // 0 when no basis is given
    std::vector<ScaledVector> basis;    // empty or one vector per vertex
};

PlumbingFile parse_plumbing_file(const std::string& path);
PlumbingFile parse_plumbing(std::istream& in, const std::string& origin);

}  // namespace latkit
