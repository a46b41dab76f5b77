#ifndef CATLAB_TREE_HPP
#define CATLAB_TREE_HPP

#include "catlab/errors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catlab {

/// Rooted planar d-ary tree (every vertex has 0 or d children), stored as the
/// immutable preorder sequence of vertex kinds, 1 = internal, 0 = leaf.
/// Vertices are addressed by preorder position; codes in {1..d}^j identify a
/// vertex by the child indices on the path from the root (root = empty code).
///
/// The 1/0 preorder string of length d*k+1 is a bijection with the tree and is
/// the wire format used everywhere (d supplied out of band).
class CatalanTree {
public:
    static CatalanTree leaf(int degree);

    /// Decodes a preorder 1/0 string. Throws MalformedEncodingError carrying
    /// the offending position for invalid characters, truncated strings and
    /// trailing symbols.
    static CatalanTree parse(int degree, std::string_view encoding);

    static CatalanTree from_kinds(int degree, std::vector<std::uint8_t> kinds);

    int degree() const { return degree_; }
    /// Total vertex count, d*k + 1.
    int size() const { return static_cast<int>(kinds_.size()); }
    /// k, the number of internal vertices; leaf count is (d-1)*k + 1.
    int internal_count() const { return internal_count_; }
    int height() const { return height_; }

    bool is_internal(int v) const { return kinds_[v] != 0; }
    bool is_leaf(int v) const { return kinds_[v] == 0; }
    int depth(int v) const { return depth_[v]; }
    int parent(int v) const { return parent_[v]; }
    /// One past the last preorder position of the subtree rooted at v.
    int subtree_end(int v) const { return subtree_end_[v]; }
    int subtree_internal_count(int v) const;

    /// Child j (0-based, j < d) of an internal vertex.
    int child(int v, int j) const;
    std::vector<int> children(int v) const;

    std::string encoding() const;
    std::string subtree_encoding(int v) const;

    /// Code of vertex v as 1-based child indices from the root.
    std::vector<int> code(int v) const;
    /// Preorder position for a code, or -1 when the code is absent.
    int vertex_at(const std::vector<int>& code) const;

    const std::vector<std::uint8_t>& kinds() const { return kinds_; }

    bool operator==(const CatalanTree& o) const {
        return degree_ == o.degree_ && kinds_ == o.kinds_;
    }

private:
    CatalanTree(int degree, std::vector<std::uint8_t> kinds);
    void build_layout();

    int degree_ = 2;
    std::vector<std::uint8_t> kinds_;
    std::vector<std::int32_t> subtree_end_;
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> depth_;
    int internal_count_ = 0;
    int height_ = 0;
};

/// Renders a vertex code as a dotted string ("" for the root, "2.1" etc).
std::string code_to_string(const std::vector<int>& code);

/// Generation counts N_j(T) for j = 0..height(T), with prefix/suffix sums.
struct GenerationProfile {
    std::vector<long> counts;
    std::vector<long> prefix;
    long total = 0;

    int height() const { return static_cast<int>(counts.size()) - 1; }
    long n_at(long j) const {
        return (j >= 0 && j < static_cast<long>(counts.size())) ? counts[j] : 0;
    }
    /// N_{<=q}; equals the vertex count once q >= height.
    long n_leq(long q) const {
        if (q < 0) return 0;
        if (q >= static_cast<long>(prefix.size())) return total;
        return prefix[q];
    }
    /// N_{>=q}.
    long n_geq(long q) const { return total - n_leq(q - 1); }
};

GenerationProfile generation_profile(const CatalanTree& tree);

} // namespace catlab

#endif
