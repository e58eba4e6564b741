#pragma once

#include "wkit/character.hpp"
#include "wkit/shuffle.hpp"
#include "wkit/welement.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wkit::accept {

struct Options {
    /// Restrict the run to criteria of one module (walgebra, liegen, shuffle,
    /// yangian, quiverkac, charseries).
    std::optional<std::string> only;
    ShuffleKernel kernel = ShuffleKernel::standard();
    unsigned threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string module;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

const std::vector<std::string>& modules();

/// Runs the selected criteria in order. Exceptions raised inside a criterion
/// mark it failed with the message as detail.
std::vector<CriterionResult> run(const Options& options);

/// `[PASS] 7 yangian   quartic/serre in the deformed W model (1.23 s)  detail`
std::string format(const CriterionResult& r, bool with_time = true);

/// Random element sum c z^m D^a with 1 <= m <= 5, a <= 5, one to three terms,
/// coefficients p/q with |p| <= 10, 1 <= q <= 10.
WElement random_welement(std::mt19937_64& rng);

/// One basis vector of a graded vector space: weight and cohomological degree.
struct GradedBasisElement {
    int weight;
    int degree;
};

/// Character of the symmetric algebra on `basis` (all elements even) by
/// enumerating multisets of basis elements with total weight <= window.max_weight.
/// The basis must contain every element that can contribute in the window.
Character symmetric_algebra_bruteforce(const std::vector<GradedBasisElement>& basis, Convention convention,
                                       const Window& window);

/// Basis of g (x) Q[u] built directly from per-weight Kac polynomials:
/// dimension a_k at degree -2k, then one copy per power u^j shifted by 2j,
/// keeping degrees <= max_degree.
std::vector<GradedBasisElement> affinized_bps_basis(const std::vector<Integer>& kac, int max_weight, int max_degree);

} // namespace wkit::accept
