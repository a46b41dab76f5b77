#include "catlab/tree.hpp"

#include <algorithm>

namespace catlab {

CatalanTree::CatalanTree(int degree, std::vector<std::uint8_t> kinds)
    : degree_(degree), kinds_(std::move(kinds)) {
    build_layout();
}

CatalanTree CatalanTree::leaf(int degree) {
    if (degree < 2) throw InvalidParameterError("tree degree must be >= 2");
    return CatalanTree(degree, {0});
}

CatalanTree CatalanTree::parse(int degree, std::string_view encoding) {
    if (degree < 2) throw InvalidParameterError("tree degree must be >= 2");
    std::vector<std::uint8_t> kinds;
    kinds.reserve(encoding.size());
    // `need` counts vertices still owed to already-opened internal vertices
    // (plus the root); it must stay positive strictly inside the string and
    // reach zero exactly at the end.
    long need = 1;
    for (std::size_t i = 0; i < encoding.size(); ++i) {
        char c = encoding[i];
        if (need == 0) throw MalformedEncodingError(i, "trailing symbols after a complete tree");
        if (c == '1') {
            kinds.push_back(1);
            need += degree - 1;
        } else if (c == '0') {
            kinds.push_back(0);
            need -= 1;
        } else {
            throw MalformedEncodingError(i, "invalid character, expected 0 or 1");
        }
    }
    if (need > 0)
        throw MalformedEncodingError(encoding.size(), "truncated encoding, tree incomplete");
    return CatalanTree(degree, std::move(kinds));
}

CatalanTree CatalanTree::from_kinds(int degree, std::vector<std::uint8_t> kinds) {
    if (degree < 2) throw InvalidParameterError("tree degree must be >= 2");
    long need = 1;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (need == 0) throw MalformedEncodingError(i, "trailing symbols after a complete tree");
        if (kinds[i] > 1) throw MalformedEncodingError(i, "invalid kind value");
        need += kinds[i] ? degree - 1 : -1;
    }
    if (need > 0) throw MalformedEncodingError(kinds.size(), "truncated encoding, tree incomplete");
    return CatalanTree(degree, std::move(kinds));
}

void CatalanTree::build_layout() {
    const int n = size();
    subtree_end_.resize(n);
    parent_.resize(n);
    depth_.resize(n);
    internal_count_ = 0;
    height_ = 0;

    // Preorder walk with an explicit stack of (vertex, children still open).
    std::vector<std::pair<int, int>> stack;
    for (int v = 0; v < n; ++v) {
        if (stack.empty()) {
            parent_[v] = -1;
            depth_[v] = 0;
        } else {
            parent_[v] = stack.back().first;
            depth_[v] = depth_[stack.back().first] + 1;
        }
        height_ = std::max(height_, static_cast<int>(depth_[v]));
        if (kinds_[v]) {
            ++internal_count_;
            stack.emplace_back(v, degree_);
        } else {
            subtree_end_[v] = v + 1;
            while (!stack.empty() && --stack.back().second == 0) {
                subtree_end_[stack.back().first] = v + 1;
                stack.pop_back();
            }
        }
    }
}

int CatalanTree::subtree_internal_count(int v) const {
    int c = 0;
    for (int u = v; u < subtree_end_[v]; ++u) c += kinds_[u];
    return c;
}

int CatalanTree::child(int v, int j) const {
    int c = v + 1;
    for (int t = 0; t < j; ++t) c = subtree_end_[c];
    return c;
}

std::vector<int> CatalanTree::children(int v) const {
    std::vector<int> out;
    if (is_leaf(v)) return out;
    out.reserve(degree_);
    int c = v + 1;
    for (int j = 0; j < degree_; ++j) {
        out.push_back(c);
        c = subtree_end_[c];
    }
    return out;
}

std::string CatalanTree::encoding() const {
    std::string s(kinds_.size(), '0');
    for (std::size_t i = 0; i < kinds_.size(); ++i)
        if (kinds_[i]) s[i] = '1';
    return s;
}

std::string CatalanTree::subtree_encoding(int v) const {
    std::string s;
    s.reserve(subtree_end_[v] - v);
    for (int u = v; u < subtree_end_[v]; ++u) s.push_back(kinds_[u] ? '1' : '0');
    return s;
}

std::vector<int> CatalanTree::code(int v) const {
    std::vector<int> out(depth_[v]);
    int u = v;
    for (int i = depth_[v] - 1; i >= 0; --i) {
        int par = parent_[u];
        int c = par + 1;
        int idx = 1;
        while (c != u) {
            c = subtree_end_[c];
            ++idx;
        }
        out[i] = idx;
        u = par;
    }
    return out;
}

int CatalanTree::vertex_at(const std::vector<int>& code) const {
    int v = 0;
    for (int step : code) {
        if (step < 1 || step > degree_ || is_leaf(v)) return -1;
        v = child(v, step - 1);
    }
    return v;
}

std::string code_to_string(const std::vector<int>& code) {
    std::string s;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(code[i]);
    }
    return s;
}

GenerationProfile generation_profile(const CatalanTree& tree) {
    GenerationProfile g;
    g.counts.assign(tree.height() + 1, 0);
    for (int v = 0; v < tree.size(); ++v) ++g.counts[tree.depth(v)];
    g.prefix.resize(g.counts.size());
    long acc = 0;
    for (std::size_t j = 0; j < g.counts.size(); ++j) {
        acc += g.counts[j];
        g.prefix[j] = acc;
    }
    g.total = acc;
    return g;
}

} // namespace catlab
