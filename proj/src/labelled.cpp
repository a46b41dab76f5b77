#include "catlab/labelled.hpp"

#include "catlab/errors.hpp"

namespace catlab {

LabelledTree::LabelledTree(CatalanTree t, std::vector<int> ty, int n_types)
    : tree(std::move(t)), types(std::move(ty)), n(n_types) {
    if (n < 1) throw InvalidParameterError("labelled tree needs n >= 1 types");
    if (types.size() != static_cast<std::size_t>(tree.size()))
        throw InvalidParameterError("type vector length must match vertex count");
    for (int ty_v : types)
        if (ty_v < 0 || ty_v >= n) throw InvalidParameterError("vertex type out of range");
}

MultiIndex LabelledTree::mu(int v) const {
    MultiIndex m(static_cast<std::size_t>(n));
    for (int c : tree.children(v)) ++m[types[c]];
    return m;
}

MultiIndex LabelledTree::leaftype() const {
    MultiIndex m(static_cast<std::size_t>(n));
    for (int v = 0; v < tree.size(); ++v)
        if (tree.is_leaf(v)) ++m[types[v]];
    return m;
}

} // namespace catlab
