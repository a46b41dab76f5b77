#include "catlab/shuffle.hpp"

#include <algorithm>
#include <map>

namespace catlab {

AncestralPath ancestral_path(const CatalanTree& tree, int v, int p) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    if (tree.depth(v) < p)
        throw HeightTooSmallError("vertex at height " + std::to_string(tree.depth(v)) +
                                  " cannot end a length-" + std::to_string(p) + " path");
    AncestralPath out;
    out.path.assign(p + 1, 0);
    out.path[p] = v;
    for (int i = p; i > 0; --i) out.path[i - 1] = tree.parent(out.path[i]);
    out.slots.reserve(static_cast<std::size_t>(tree.degree() - 1) * p);
    for (int i = 1; i <= p; ++i) {
        for (int c : tree.children(out.path[i - 1]))
            if (c != out.path[i]) out.slots.push_back(c);
    }
    return out;
}

namespace {

/// Replaces the subtrees at `slots` by `contents` (parallel arrays); the
/// rest of the encoding is untouched. Slots are pairwise disjoint subtrees.
std::string splice(const CatalanTree& tree, const std::vector<int>& slots,
                   const std::vector<std::string>& contents) {
    std::vector<std::size_t> order(slots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return slots[a] < slots[b]; });
    std::string enc = tree.encoding();
    std::string out;
    out.reserve(enc.size());
    int cursor = 0;
    for (std::size_t idx : order) {
        int pos = slots[idx];
        out.append(enc, cursor, pos - cursor);
        out += contents[idx];
        cursor = tree.subtree_end(pos);
    }
    out.append(enc, cursor, enc.size() - cursor);
    return out;
}

} // namespace

Int ShuffleClass::cardinality_formula() const {
    std::map<std::string, unsigned> mult;
    for (const auto& s : subtrees) ++mult[s];
    Int r = factorial(subtrees.size());
    for (const auto& [s, m] : mult) r /= factorial(m);
    return r;
}

ShuffleClass shuffle_class_at(const CatalanTree& tree, int v, int p) {
    AncestralPath path = ancestral_path(tree, v, p);
    ShuffleClass out;
    out.d = tree.degree();
    out.k = tree.internal_count();
    out.p = p;
    out.vp_code = tree.code(v);

    std::vector<std::string> contents;
    contents.reserve(path.slots.size());
    for (int slot : path.slots) contents.push_back(tree.subtree_encoding(slot));

    std::vector<std::string> holes(path.slots.size(), "_");
    out.blanked = splice(tree, path.slots, holes);

    out.subtrees = contents;
    std::sort(out.subtrees.begin(), out.subtrees.end());

    out.key = out.blanked + "|" + code_to_string(out.vp_code) + "|";
    for (std::size_t i = 0; i < out.subtrees.size(); ++i) {
        if (i) out.key += ",";
        out.key += out.subtrees[i];
    }

    // Distinct multiset permutations; distinct arrangements give distinct
    // encodings because complete preorder encodings are prefix-free.
    std::vector<std::string> arrangement = out.subtrees;
    do {
        out.members.push_back(splice(tree, path.slots, arrangement));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

ShuffleClass shuffle_class(const CatalanTree& tree, const std::vector<int>& vp_code, int p) {
    int v = tree.vertex_at(vp_code);
    if (v < 0) throw InvalidParameterError("vertex code " + code_to_string(vp_code) + " not in tree");
    return shuffle_class_at(tree, v, p);
}

ShuffleClassSet enumerate_shuffle_classes(int degree, long k, int p, long cap) {
    if (p < 1) throw InvalidParameterError("p must be >= 1");
    ShuffleClassSet out;
    out.d = degree;
    out.k = k;
    out.p = p;
    for (const CatalanTree& tree : enumerate_trees(degree, k, cap)) {
        for (int v = 0; v < tree.size(); ++v) {
            if (tree.depth(v) < p) continue;
            ShuffleClass cls = shuffle_class_at(tree, v, p);
            out.classes.emplace(cls.key, std::move(cls));
        }
    }
    return out;
}

LabelledShuffleClass labelled_shuffle_class(const LabelledTree& lt, const std::vector<int>& vp_code,
                                            int p, int n) {
    if (n != lt.n) throw InvalidParameterError("type count mismatch");
    const CatalanTree& tree = lt.tree;
    int v = tree.vertex_at(vp_code);
    if (v < 0) throw InvalidParameterError("vertex code " + code_to_string(vp_code) + " not in tree");
    AncestralPath path = ancestral_path(tree, v, p);

    LabelledShuffleClass out;
    out.d = tree.degree();
    out.k = tree.internal_count();
    out.p = p;
    out.n = n;

    // Labelled subtree content: kinds substring plus types subrange; the token
    // makes multiset permutation generation possible over plain strings.
    struct Content {
        std::string enc;
        std::vector<int> types;
    };
    std::map<std::string, Content> by_token;
    std::vector<std::string> tokens;
    for (int slot : path.slots) {
        Content c;
        c.enc = tree.subtree_encoding(slot);
        for (int u = slot; u < tree.subtree_end(slot); ++u) c.types.push_back(lt.types[u]);
        std::string token = c.enc + "/";
        for (int t : c.types) token += static_cast<char>('a' + t);
        by_token.emplace(token, std::move(c));
        tokens.push_back(std::move(token));
    }
    std::sort(tokens.begin(), tokens.end());

    {
        std::map<std::string, unsigned> mult;
        for (const auto& t : tokens) ++mult[t];
        Int card = factorial(tokens.size());
        for (const auto& [t, m] : mult) card /= factorial(m);
        out.cardinality_formula = int_pow(Int(n), p - 1) * card;
    }

    std::vector<std::size_t> slot_order(path.slots.size());
    for (std::size_t i = 0; i < slot_order.size(); ++i) slot_order[i] = i;
    std::sort(slot_order.begin(), slot_order.end(),
              [&](std::size_t a, std::size_t b) { return path.slots[a] < path.slots[b]; });
    const std::string base_enc = tree.encoding();

    std::vector<std::string> arrangement = tokens;
    do {
        // Rebuild kinds and types with this slot filling.
        std::string enc;
        std::vector<int> types;
        enc.reserve(base_enc.size());
        types.reserve(base_enc.size());
        int cursor = 0;
        for (std::size_t idx : slot_order) {
            int pos = path.slots[idx];
            enc.append(base_enc, cursor, pos - cursor);
            for (int u = cursor; u < pos; ++u) types.push_back(lt.types[u]);
            const Content& c = by_token.at(arrangement[idx]);
            enc += c.enc;
            types.insert(types.end(), c.types.begin(), c.types.end());
            cursor = tree.subtree_end(pos);
        }
        enc.append(base_enc, cursor, base_enc.size() - cursor);
        for (int u = cursor; u < tree.size(); ++u) types.push_back(lt.types[u]);

        CatalanTree member = CatalanTree::parse(tree.degree(), enc);
        // Interior path vertices v_1..v_{p-1} take every type in [n]. Their
        // codes are invariant across the class, but their preorder positions
        // shift when slot contents change size, so relocate them by code.
        std::vector<int> interior;
        for (std::size_t len = vp_code.size() - p + 1; len + 1 <= vp_code.size(); ++len) {
            std::vector<int> prefix(vp_code.begin(), vp_code.begin() + len);
            interior.push_back(member.vertex_at(prefix));
        }
        auto relabel = [&](auto&& self, std::size_t t) -> void {
            if (t == interior.size()) {
                out.members.emplace_back(member, types, n);
                return;
            }
            for (int ty = 0; ty < n; ++ty) {
                types[interior[t]] = ty;
                self(self, t + 1);
            }
        };
        relabel(relabel, 0);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

} // namespace catlab
