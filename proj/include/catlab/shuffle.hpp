#ifndef CATLAB_SHUFFLE_HPP
#define CATLAB_SHUFFLE_HPP

#include "catlab/catalan.hpp"
#include "catlab/labelled.hpp"
#include "catlab/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace catlab {

/// The length-p ancestral path (v_0..v_p) ending at a given vertex, together
/// with the (d-1)p sibling positions ("slots") in generation-major order
/// (i = 1..p, siblings left to right within each generation).
struct AncestralPath {
    std::vector<int> path;  // positions of v_0..v_p
    std::vector<int> slots; // positions of w_{1,1}..w_{p,d-1}
};

/// Throws HeightTooSmallError when depth(v) < p.
AncestralPath ancestral_path(const CatalanTree& tree, int v, int p);

/// A length-p shuffle class: all trees obtained by rearranging the (d-1)p
/// subtrees hanging off an ancestral path, the rest of the tree fixed.
///
/// The canonical key is (fixed context with the slots blanked, code of v_p,
/// sorted multiset of slot subtree encodings); it is identical no matter
/// which member the class is built from.
struct ShuffleClass {
    int d = 0;
    long k = 0;
    int p = 0;
    std::string key;
    std::string blanked;
    std::vector<int> vp_code;
    std::vector<std::string> subtrees; // sorted multiset
    std::vector<std::string> members;  // sorted encodings

    bool is_singleton() const { return members.size() == 1; }
    /// ((d-1)p)! / prod(multiplicity!) over distinct subtree shapes.
    Int cardinality_formula() const;
};

ShuffleClass shuffle_class_at(const CatalanTree& tree, int v, int p);
/// Same, addressing v_p by code.
ShuffleClass shuffle_class(const CatalanTree& tree, const std::vector<int>& vp_code, int p);

/// All length-p shuffle classes of C_k^(d), deduplicated by canonical key;
/// every (tree, vertex of height >= p) pair lands in exactly one entry.
struct ShuffleClassSet {
    int d = 0;
    long k = 0;
    int p = 0;
    std::map<std::string, ShuffleClass> classes;
};

ShuffleClassSet enumerate_shuffle_classes(int degree, long k, int p, long cap = kDefaultTreeCap);

/// Labelled variant (Definition of labelled shuffles): members are n-type
/// trees; besides rearranging the labelled subtrees, the interior path
/// vertices v_1..v_{p-1} take arbitrary new types.
struct LabelledShuffleClass {
    int d = 0;
    long k = 0;
    int p = 0;
    int n = 1;
    std::vector<LabelledTree> members;
    /// n^{p-1} times the multinomial over distinct labelled subtrees.
    Int cardinality_formula;
};

LabelledShuffleClass labelled_shuffle_class(const LabelledTree& lt, const std::vector<int>& vp_code,
                                            int p, int n);

} // namespace catlab

#endif
