#pragma once

#include "wkit/poly.hpp"

#include <string_view>

namespace wkit {

/// Which identifiers an expression may use. `x` is accepted as an alias of x1
/// when shuffle variables are allowed.
struct Grammar {
    bool coefficient_vars = true; ///< D t u t1 t2 (t3 rewritten as -t1-t2)
    bool z = false;
    bool q = false;
    bool shuffle_vars = false; ///< x, x1..x8

    static Grammar coefficients() { return {}; }
    static Grammar w_elements() { return {true, true, false, false}; }
    static Grammar shuffle() { return {true, false, false, true}; }
    static Grammar kac() { return {false, false, true, false}; }
};

/// Parses `3/2*D^2*t1 - t2`-style input: signed rationals `p/q`, operators
/// `+ - * ^`, parentheses, juxtaposition of factors, and division by a
/// rational constant. Throws ParseError.
Poly parse_poly(std::string_view text, Grammar grammar = Grammar::coefficients());

} // namespace wkit
