#ifndef CATLAB_LABELLED_HPP
#define CATLAB_LABELLED_HPP

#include "catlab/multi_index.hpp"
#include "catlab/tree.hpp"

#include <vector>

namespace catlab {

/// A d-Catalan tree with a type function tau: vertices -> {0..n-1} (stored in
/// preorder). An (i,alpha) labelling of T is a LabelledTree with root type i
/// and exactly alpha_l leaves of type l.
struct LabelledTree {
    CatalanTree tree;
    std::vector<int> types;
    int n = 1;

    LabelledTree(CatalanTree t, std::vector<int> ty, int n_types);

    int root_type() const { return types[0]; }
    /// Children-type multi-index of an internal vertex; |mu(v)| = d.
    MultiIndex mu(int v) const;
    MultiIndex leaftype() const;

    bool operator==(const LabelledTree& o) const {
        return tree == o.tree && types == o.types;
    }
};

} // namespace catlab

#endif
