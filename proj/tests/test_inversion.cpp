#include "catlab/inversion.hpp"
#include "catlab/json_io.hpp"
#include "catlab/rng.hpp"

#include <doctest.h>

using namespace catlab;

namespace {

CoefficientTable catalan_table_12() {
    CoefficientTable h(1, 2);
    h.set(0, MultiIndex{2}, Rat(2)); // F = X - X^2
    return h;
}

CoefficientTable random_table(Rng& rng, int n, int d) {
    CoefficientTable h(n, d);
    for (int i = 0; i < n; ++i)
        for_each_multi_index(static_cast<std::size_t>(n), static_cast<unsigned>(d),
                             [&](const MultiIndex& alpha) {
                                 long num = static_cast<long>(rng.next() % 9) - 4;
                                 long den = 1 + static_cast<long>(rng.next() % 3);
                                 Rat q(num, den);
                                 q.canonicalize();
                                 h.set(i, alpha, q);
                             });
    return h;
}

} // namespace

TEST_CASE("truncated inverse basics") {
    TruncatedSeriesMap identity = TruncatedSeriesMap::identity(2, 5);
    TruncatedSeriesMap inv = truncated_inverse(identity, 5);
    CHECK(inv.equals_identity());

    // F = X - X^2 inverts to the Catalan generating function.
    TruncatedSeriesMap f = TruncatedSeriesMap::from_table(catalan_table_12(), 5);
    TruncatedSeriesMap g = truncated_inverse(f, 5);
    CHECK(g.coeff(0, MultiIndex{1}) == 1);
    CHECK(g.coeff(0, MultiIndex{2}) == 1);
    CHECK(g.coeff(0, MultiIndex{3}) == 2);
    CHECK(g.coeff(0, MultiIndex{4}) == 5);
    CHECK(g.coeff(0, MultiIndex{5}) == 14);
}

TEST_CASE("nonzero linear terms invert") {
    // F = X - (1/2) X = (1/2) X has inverse 2X.
    TruncatedSeriesMap f(1, 4);
    f.components[0].add_term(MultiIndex{1}, Rat(1, 2));
    TruncatedSeriesMap g = truncated_inverse(f, 4);
    CHECK(g.coeff(0, MultiIndex{1}) == 2);
    CHECK(g.components[0].terms.size() == 1);
}

TEST_CASE("singular linear part is rejected") {
    TruncatedSeriesMap f(2, 3);
    f.components[0].add_term(MultiIndex{1, 0}, Rat(1));
    f.components[1].add_term(MultiIndex{1, 0}, Rat(1)); // rank-1 linear part
    CHECK_THROWS_AS(truncated_inverse(f, 3), SingularLinearPartError);
}

TEST_CASE("two-sided inverse and the group property") {
    Rng rng(88);
    for (int rep = 0; rep < 6; ++rep) {
        int n = 1 + static_cast<int>(rng.next() % 2);
        int d = 2 + static_cast<int>(rng.next() % 2);
        unsigned cap = 2 * d - 1;
        TruncatedSeriesMap f = TruncatedSeriesMap::from_table(random_table(rng, n, d), cap);
        TruncatedSeriesMap g = truncated_inverse(f, cap);
        CHECK(compose(f, g, cap).equals_identity());
        CHECK(compose(g, f, cap).equals_identity());
        // Inverting twice returns F through the cap.
        TruncatedSeriesMap ff = truncated_inverse(g, cap);
        for (int i = 0; i < n; ++i) {
            Polynomial diff = ff.components[i] - f.components[i].truncated(cap);
            CHECK(diff.is_zero());
        }
    }
}

TEST_CASE("tree-sum coefficients: Catalan case and zero table") {
    CoefficientTable h = catalan_table_12();
    for (long k = 0; k <= 6; ++k)
        CHECK(inverse_coefficient(h, 0, MultiIndex{static_cast<unsigned>(k + 1)}) ==
              Rat(catalan_number(2, k)));

    CoefficientTable zero(2, 2);
    CHECK(inverse_coefficient(zero, 0, MultiIndex{2, 1}) == 0);
    CHECK(inverse_coefficient(zero, 0, MultiIndex{1, 0}) == 1);
    CHECK(inverse_coefficient(zero, 1, MultiIndex{1, 0}) == 0);

    CHECK_THROWS_AS(inverse_coefficient(catalan_table_12(), 0, MultiIndex{0}),
                    InvalidDegreeError);
    CoefficientTable h3(1, 3);
    CHECK_THROWS_AS(inverse_coefficient(h3, 0, MultiIndex{4}), InvalidDegreeError);
}

TEST_CASE("nilpotent example has the polynomial inverse (X + Y^2, Y)") {
    CoefficientTable h(2, 2);
    h.set(0, MultiIndex{0, 2}, Rat(2));
    CHECK(inverse_coefficient(h, 0, MultiIndex{0, 2}) == 1);
    CHECK(inverse_coefficient(h, 1, MultiIndex{0, 2}) == 0);
    for (unsigned w = 3; w <= 5; ++w) {
        for_each_multi_index(2, w, [&](const MultiIndex& alpha) {
            CHECK(inverse_coefficient(h, 0, alpha) == 0);
            CHECK(inverse_coefficient(h, 1, alpha) == 0);
        });
    }
}

TEST_CASE("triangular tables have polynomial inverses detected by both routes") {
    // Component i depends only on later variables: strictly triangular.
    CoefficientTable h(3, 2);
    h.set(0, MultiIndex{0, 2, 0}, Rat(2));
    h.set(0, MultiIndex{0, 1, 1}, Rat(1));
    h.set(1, MultiIndex{0, 0, 2}, Rat(4));
    TruncatedSeriesMap f = TruncatedSeriesMap::from_table(h, 9);
    TruncatedSeriesMap g = truncated_inverse(f, 9);
    unsigned long inverse_degree = 0;
    for (int i = 0; i < 3; ++i) inverse_degree = std::max(inverse_degree, g.components[i].degree());
    CHECK(inverse_degree == 4); // substituting twice squares the degree
    // All tree-sum coefficients past the polynomial inverse vanish.
    for (unsigned w = static_cast<unsigned>(inverse_degree) + 1; w <= 6; ++w) {
        for_each_multi_index(3, w, [&](const MultiIndex& alpha) {
            for (int i = 0; i < 3; ++i) CHECK(inverse_coefficient(h, i, alpha) == 0);
        });
    }
}

TEST_CASE("oracle equivalence on random homogeneous tables") {
    Rng rng(99);
    for (int rep = 0; rep < 8; ++rep) {
        int n = 1 + static_cast<int>(rng.next() % 2);
        int d = 2 + static_cast<int>(rng.next() % 2);
        CoefficientTable h = random_table(rng, n, d);
        unsigned cap = 2 * d - 1;
        TruncatedSeriesMap g = truncated_inverse(TruncatedSeriesMap::from_table(h, cap), cap);
        for (unsigned w = 1; w <= cap; ++w) {
            for_each_multi_index(static_cast<std::size_t>(n), w, [&](const MultiIndex& alpha) {
                for (int i = 0; i < n; ++i) {
                    Rat expected = (w - 1) % (d - 1) == 0
                                       ? inverse_coefficient(h, i, alpha)
                                       : Rat(0);
                    CHECK(g.coeff(i, alpha) == expected);
                }
            });
        }
    }
}

TEST_CASE("coefficient bound report") {
    CoefficientTable all_l(2, 2);
    for (int i = 0; i < 2; ++i)
        for_each_multi_index(2, 2, [&](const MultiIndex& alpha) { all_l.set(i, alpha, Rat(3)); });
    BoundReport rep = coefficient_bound_report(all_l, 0, MultiIndex{2, 1});
    CHECK(rep.k == 2);
    CHECK(rep.l_value == 3);
    CHECK(rep.holds);
    CHECK(rep.g_abs == rep.bound); // sharpness of the bound at the all-L table

    CoefficientTable nil(2, 2);
    nil.set(0, MultiIndex{0, 2}, Rat(2));
    BoundReport refined =
        coefficient_bound_report(nil, 0, MultiIndex{1, 2}, std::make_optional(Rat(1, 7)));
    CHECK(refined.g == 0);
    CHECK(*refined.refined_holds);

    CoefficientTable zero(1, 2);
    BoundReport zrep = coefficient_bound_report(zero, 0, MultiIndex{3});
    CHECK(zrep.g == 0);
    CHECK(zrep.bound == 0);
    CHECK(zrep.holds);
}

TEST_CASE("tree sums respect the enumeration cap") {
    CoefficientTable h = catalan_table_12();
    CHECK_THROWS_AS(inverse_coefficient(h, 0, MultiIndex{31}, 100), CapExceededError);
}

TEST_CASE("certain-leaf offspring gives probability one") {
    std::vector<std::map<MultiIndex, Rat>> rows(1); // only the derived leaf mass
    OffspringDistribution offspring = OffspringDistribution::make(1, rows);
    GwLeafLawReport report = verify_gw_leaf_law(offspring, 0, MultiIndex{1}, 200, 1, 100);
    CHECK(report.exact == 1);
    CHECK(report.empirical == 1);
    CHECK(report.z_score == 0.0);
}

TEST_CASE("series JSON round trip") {
    TruncatedSeriesMap f = TruncatedSeriesMap::from_table(catalan_table_12(), 5);
    Json j = series_json(f);
    TruncatedSeriesMap back = series_from_json(j);
    CHECK(back.n == f.n);
    for (int i = 0; i < f.n; ++i) CHECK((back.components[i] - f.components[i]).is_zero());
}
