#pragma once

#include "k3audit/poly.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace k3 {

// Polynomial file format, one term per line:
//   # comment
//   vars <k> [weights w1 .. wk]
//   <scalar-expr> ; e1 e2 ... ek
struct PolyFile {
    Poly poly{0};
    std::optional<WeightSystem> weights;
};

PolyFile parse_poly_file(std::istream& in, const std::string& origin = "");
PolyFile load_poly_file(const std::string& path);
std::string serialize_poly_file(const Poly& f,
                                const std::optional<WeightSystem>& w = {});

} // namespace k3
