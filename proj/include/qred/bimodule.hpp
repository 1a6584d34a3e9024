#pragma once

#include <vector>

#include "qred/rep.hpp"

namespace qred {

/// An A-B-bimodule, stored as a left module over A (x) B^op.
struct Bimodule {
    AlgebraHandle left;
    AlgebraHandle right;
    Rep rep;

    std::size_t dim() const { return rep.dim(); }
};

/// Wraps a representation over tensor_with_opposite(left, right).
Bimodule make_bimodule(const AlgebraHandle &left, const AlgebraHandle &right, Rep rep);

/// A bimodule realized inside an ambient algebra C. `spaces[v][w]` lists the
/// basis indices of C spanning e_v M e_w; the arrows of `left` act by left
/// multiplication with `left_real[a]` and the arrows of `right` by right
/// multiplication with `right_real[b]` (coordinates over C's basis). The
/// spaces must be closed under these actions.
Bimodule bimodule_from_ambient(const AlgebraHandle &left, const AlgebraHandle &right, const Algebra &c,
                               const std::vector<std::vector<std::vector<std::size_t>>> &spaces,
                               const std::vector<Vec> &left_real, const std::vector<Vec> &right_real);

/// A as an A-A-bimodule.
Bimodule regular_bimodule(const AlgebraHandle &a);
/// A e as an A-eAe-bimodule for the corner described by `corner`.
Bimodule corner_left_bimodule(const Subquotient &corner);
/// e A as an eAe-A-bimodule.
Bimodule corner_right_bimodule(const Subquotient &corner);

/// The underlying left module over the left algebra.
Rep restrict_left(const Bimodule &m);
/// The underlying right module, as a left module over the right algebra's opposite.
Rep restrict_right(const Bimodule &m);

/// M (x)_B N for an A-B-bimodule M and a B-C-bimodule N.
Bimodule tensor_bimodules(const Bimodule &m, const Bimodule &n);

} // namespace qred
