#pragma once

#include "wkit/shuffle.hpp"
#include "wkit/welement.hpp"

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wkit {

// Relations of the positive half of the affine Yangian of gl(1):
//
//   quartic: [e_{i+3},e_j] - 3[e_{i+2},e_{j+1}] + 3[e_{i+1},e_{j+2}] - [e_i,e_{j+3}]
//            + s2 ([e_{i+1},e_j] - [e_i,e_{j+1}]) = -s3 (e_i e_j + e_j e_i)
//   serre:   Sym_{S3} [e_{i1}, [e_{i2}, e_{i3+1}]] = 0
//
// with s2 = t1 t2 + t1 t3 + t2 t3, s3 = t1 t2 t3 and t1 + t2 + t3 = 0.
//
// Models:
//   w_deformed: e_i = z D^i with the deformed bracket. The bracket shifts D by
//               multiples of t^2, so t1 = t^2 and t2 = 0: s2 = -t^4, s3 = 0 and
//               the product side vanishes.
//   shuffle:    e_i = x1^i in the shuffle algebra with a given kernel; brackets
//               are shuffle commutators and the product side uses the shuffle product.

enum class Relation { quartic, serre };
enum class Model { w_deformed, shuffle };
/// Sign in front of the s2 term: plus is the relation as printed above.
enum class SignVariant { plus, minus };

const char* to_string(Relation r);
const char* to_string(Model m);
const char* to_string(SignVariant s);
Model parse_model(std::string_view name);

/// sigma_2 and sigma_3 of (t1, t2, -t1-t2).
Poly sigma2();
Poly sigma3();

struct RelationResidual {
    Relation relation = Relation::quartic;
    std::vector<int> indices; ///< (i, j) or (i1, i2, i3)
    Model model = Model::w_deformed;
    SignVariant sign_variant = SignVariant::plus;
    std::variant<WElement, ShuffleElement> residual;

    bool is_zero() const;
    std::string residual_string() const;
};

RelationResidual check_quartic(int i, int j, Model model, SignVariant sign,
                               const ShuffleKernel& kernel = ShuffleKernel::standard());

RelationResidual check_serre(int i1, int i2, int i3, Model model,
                             const ShuffleKernel& kernel = ShuffleKernel::standard());

/// Quartic residual in the W model with an explicit value substituted for s2.
WElement quartic_residual_w(int i, int j, const Poly& s2);

struct SweepCell {
    Relation relation;
    std::vector<int> indices;
    /// For quartic cells: vanishing of the residual under each sign variant.
    /// For serre cells only `passes` is meaningful.
    std::array<bool, 2> vanishes_by_sign{false, false};
    bool passes = false;
};

struct SweepReport {
    Model model = Model::w_deformed;
    int index_bound = 0;
    std::vector<SweepCell> cells;
    /// The sign variant under which every quartic cell vanishes, if exactly one does.
    std::optional<SignVariant> discovered_sign;
    bool all_pass = false;
};

/// Checks every index tuple with entries in [0, index_bound]. Cells are
/// evaluated in parallel over `threads` workers; the report is independent of it.
SweepReport sweep(const std::vector<Relation>& relations, int index_bound, Model model,
                  const ShuffleKernel& kernel = ShuffleKernel::standard(), unsigned threads = 1);

/// Independent bounds per relation, as used by the acceptance criteria.
SweepReport sweep(int quartic_bound, int serre_bound, Model model,
                  const ShuffleKernel& kernel = ShuffleKernel::standard(), unsigned threads = 1);

} // namespace wkit
