#include "catlab/sampler.hpp"
#include "catlab/shuffle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace catlab;

TEST_CASE("ancestral path structure") {
    CatalanTree t = CatalanTree::parse(2, "1100100");
    int v = t.vertex_at({1, 1});
    AncestralPath path = ancestral_path(t, v, 2);
    CHECK(path.path.size() == 3);
    CHECK(path.slots.size() == 2);
    CHECK_THROWS_AS(ancestral_path(t, t.vertex_at({2}), 2), HeightTooSmallError);
}

TEST_CASE("addressing errors") {
    CatalanTree t = CatalanTree::parse(2, "1100100");
    CHECK_THROWS_AS(shuffle_class(t, {1, 1, 1}, 1), InvalidParameterError); // absent code
    LabelledTree lt(t, std::vector<int>(t.size(), 0), 1);
    CHECK_THROWS_AS(labelled_shuffle_class(lt, {2}, 2, 1), HeightTooSmallError);
}

TEST_CASE("hand-built class of size 2") {
    // T = root(A, cherry) with A = internal(leaf, leaf); v = A's left child.
    CatalanTree t = CatalanTree::parse(2, "1100100");
    ShuffleClass cls = shuffle_class(t, {1, 1}, 2);
    CHECK(cls.members == std::vector<std::string>{"1100100", "1101000"});
    CHECK(cls.cardinality_formula() == 2);
    CHECK(Int(cls.members.size()) == cls.cardinality_formula());
}

TEST_CASE("perfect paths give singleton classes") {
    CatalanTree cat = CatalanTree::parse(2, "11111000000");
    PerfectWitness w = p_perfect_witness(cat, 3);
    REQUIRE(w.perfect);
    ShuffleClass cls = shuffle_class(cat, w.witness_code, 3);
    CHECK(cls.is_singleton());
    CHECK(cls.members.front() == cat.encoding());
}

TEST_CASE("members share the path codes and the internal count") {
    for (const CatalanTree& t : enumerate_trees(3, 3)) {
        for (int v = 0; v < t.size(); ++v) {
            if (t.depth(v) < 2) continue;
            ShuffleClass cls = shuffle_class_at(t, v, 2);
            CHECK(Int(cls.members.size()) == cls.cardinality_formula());
            for (const std::string& enc : cls.members) {
                CatalanTree member = CatalanTree::parse(3, enc);
                CHECK(member.internal_count() == t.internal_count());
                CHECK(member.vertex_at(cls.vp_code) >= 0);
            }
        }
    }
}

TEST_CASE("representation independence of the canonical key") {
    for (const CatalanTree& t : enumerate_trees(2, 5)) {
        for (int v = 0; v < t.size(); ++v) {
            if (t.depth(v) < 2) continue;
            ShuffleClass cls = shuffle_class_at(t, v, 2);
            for (const std::string& enc : cls.members) {
                CatalanTree member = CatalanTree::parse(2, enc);
                ShuffleClass again = shuffle_class(member, cls.vp_code, 2);
                CHECK(again.key == cls.key);
                CHECK(again.members == cls.members);
            }
        }
    }
}

TEST_CASE("singleton iff all subtrees identical") {
    for (const CatalanTree& t : enumerate_trees(2, 4)) {
        for (int v = 0; v < t.size(); ++v) {
            if (t.depth(v) < 2) continue;
            ShuffleClass cls = shuffle_class_at(t, v, 2);
            std::set<std::string> distinct(cls.subtrees.begin(), cls.subtrees.end());
            CHECK(cls.is_singleton() == (distinct.size() == 1));
        }
    }
}

TEST_CASE("class enumeration covers every tree") {
    ShuffleClassSet set232 = enumerate_shuffle_classes(2, 3, 2);
    std::set<std::string> covered;
    for (const auto& [key, cls] : set232.classes)
        covered.insert(cls.members.begin(), cls.members.end());
    CHECK(covered.size() == 5); // all of C_3^(2)

    // p = 1, d = 2: a single subtree cannot be rearranged, and every
    // (tree, eligible vertex) pair keys its own class.
    ShuffleClassSet set41 = enumerate_shuffle_classes(2, 4, 1);
    for (const auto& [key, cls] : set41.classes) CHECK(cls.is_singleton());
    long eligible_pairs = 0;
    for (const CatalanTree& t : enumerate_trees(2, 4)) eligible_pairs += t.size() - 1;
    CHECK(Int(set41.classes.size()) == eligible_pairs);

    // (3, 2, 1): two slots per class, classes cover all 3 trees.
    ShuffleClassSet set321 = enumerate_shuffle_classes(3, 2, 1);
    std::set<std::string> covered321;
    for (const auto& [key, cls] : set321.classes) {
        CHECK(cls.subtrees.size() == 2);
        covered321.insert(cls.members.begin(), cls.members.end());
    }
    CHECK(Int(covered321.size()) == catalan_number(3, 2));
}

TEST_CASE("every (tree, eligible vertex) pair lands in an enumerated class") {
    ShuffleClassSet set = enumerate_shuffle_classes(2, 4, 2);
    for (const CatalanTree& t : enumerate_trees(2, 4)) {
        for (int v = 0; v < t.size(); ++v) {
            if (t.depth(v) < 2) continue;
            ShuffleClass cls = shuffle_class_at(t, v, 2);
            auto it = set.classes.find(cls.key);
            REQUIRE(it != set.classes.end());
            CHECK(it->second.members == cls.members);
        }
    }
}

TEST_CASE("multinomial cardinality matches the brute-force orbit on a grid") {
    // Independent orbit generation: assign the subtree multiset to the slots
    // in every possible way and deduplicate the resulting trees.
    for (int d = 2; d <= 3; ++d) {
      for (long k = 1; k <= 5; ++k) {
        for (int p = 1; p <= 3; ++p) {
        for (const CatalanTree& t : enumerate_trees(d, k)) {
            for (int v = 0; v < t.size(); ++v) {
                if (t.depth(v) < p) continue;
                ShuffleClass cls = shuffle_class_at(t, v, p);
                // Orbit by explicit index permutations with a dedup set.
                AncestralPath path = ancestral_path(t, v, p);
                std::vector<std::string> contents;
                for (int slot : path.slots) contents.push_back(t.subtree_encoding(slot));
                std::vector<std::size_t> perm(contents.size());
                for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
                std::set<std::string> orbit;
                std::sort(perm.begin(), perm.end());
                do {
                    // Rebuild by hand: cut the slots out, reinsert permuted.
                    std::vector<std::pair<int, std::string>> filled;
                    for (std::size_t i = 0; i < perm.size(); ++i)
                        filled.emplace_back(path.slots[i], contents[perm[i]]);
                    std::sort(filled.begin(), filled.end());
                    std::string enc = t.encoding();
                    std::string out;
                    int cursor = 0;
                    for (const auto& [pos, content] : filled) {
                        out.append(enc, cursor, pos - cursor);
                        out += content;
                        cursor = t.subtree_end(pos);
                    }
                    out.append(enc, cursor, enc.size() - cursor);
                    orbit.insert(out);
                } while (std::next_permutation(perm.begin(), perm.end()));
                CHECK(Int(orbit.size()) == cls.cardinality_formula());
                CHECK(orbit == std::set<std::string>(cls.members.begin(), cls.members.end()));
            }
        }
        }
      }
    }
}

TEST_CASE("labelled classes: no relabelling freedom cases") {
    // n = 1: cardinality equals the unlabelled orbit size.
    CatalanTree t = CatalanTree::parse(2, "1100100");
    LabelledTree lt(t, std::vector<int>(t.size(), 0), 1);
    LabelledShuffleClass cls = labelled_shuffle_class(lt, {1, 1}, 2, 1);
    CHECK(cls.cardinality_formula == 2);
    CHECK(Int(cls.members.size()) == cls.cardinality_formula);

    // p = 1: no interior vertices; multinomial of the d-1 subtrees only.
    LabelledShuffleClass p1 = labelled_shuffle_class(lt, {1}, 1, 1);
    CHECK(p1.cardinality_formula == 1);
}

TEST_CASE("labelled class with distinct subtrees and n = 2") {
    CatalanTree t = CatalanTree::parse(2, "1100100");
    // Distinct labelled subtrees off the path to (1,1): the cherry and a leaf.
    LabelledTree lt(t, std::vector<int>(t.size(), 1), 2);
    LabelledShuffleClass cls = labelled_shuffle_class(lt, {1, 1}, 2, 2);
    // n^{p-1} * 2! = 2 * 2 = 4.
    CHECK(cls.cardinality_formula == 4);
    CHECK(Int(cls.members.size()) == 4);
    std::set<std::string> unique;
    for (const LabelledTree& member : cls.members) {
        std::string token = member.tree.encoding() + "/";
        for (int ty : member.types) token += static_cast<char>('a' + ty);
        unique.insert(token);
    }
    CHECK(unique.size() == 4);
}
