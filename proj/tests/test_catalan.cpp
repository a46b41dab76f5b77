#include "catlab/catalan.hpp"
#include "catlab/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>

using namespace catlab;

TEST_CASE("closed-form values") {
    CHECK(catalan_number(2, 4) == 14);
    CHECK(catalan_number(3, 2) == 3);
    CHECK(catalan_number(5, 0) == 1);
    CHECK(catalan_number(2, 0) == 1);
    CHECK(catalan_number(2, 7) == 429);
    CHECK_THROWS_AS(catalan_number(1, 3), InvalidParameterError);
    CHECK_THROWS_AS(catalan_number(2, -1), InvalidParameterError);
}

TEST_CASE("memoized table matches the closed form and the recursion") {
    for (int d = 2; d <= 4; ++d) {
        std::vector<Int> rec = catalan_by_convolution(d, 10);
        for (long k = 0; k <= 10; ++k) {
            CHECK(catalan_number(d, k) == catalan_closed_form(d, k));
            CHECK(rec[k] == catalan_closed_form(d, k));
        }
    }
}

TEST_CASE("enumeration counts and order") {
    std::vector<std::string> got;
    for_each_tree_encoding(2, 2, [&](const std::string& enc) { got.push_back(enc); });
    CHECK(got == std::vector<std::string>{"11000", "10100"});

    got.clear();
    for_each_tree_encoding(2, 3, [&](const std::string& enc) { got.push_back(enc); });
    CHECK(got == std::vector<std::string>{"1110000", "1101000", "1100100", "1011000", "1010100"});

    got.clear();
    for_each_tree_encoding(2, 0, [&](const std::string& enc) { got.push_back(enc); });
    CHECK(got == std::vector<std::string>{"0"});

    CHECK(enumerate_trees(3, 2).size() == 3);
}

TEST_CASE("enumeration is duplicate-free and matches the count") {
    for (int d = 2; d <= 4; ++d) {
        for (long k = 0; k <= (d == 2 ? 8 : 5); ++k) {
            std::set<std::string> seen;
            for_each_tree_encoding(d, k, [&](const std::string& enc) { seen.insert(enc); });
            CHECK(Int(seen.size()) == catalan_number(d, k));
        }
    }
}

TEST_CASE("streamed enumeration counts match for d <= 4, k <= 10") {
    // The full-range cardinality identity; the streaming generator makes even
    // C_10^(4) = 27.3M trees a subsecond count.
    for (int d = 2; d <= 4; ++d) {
        long kmax = d == 4 ? 10 : 8;
        for (long k = kmax - 1; k <= kmax; ++k) {
            std::uint64_t streamed = 0;
            for_each_tree_encoding(d, k, [&](const std::string&) { ++streamed; });
            CHECK(Int(streamed) == catalan_number(d, k));
        }
    }
}

TEST_CASE("cap-exceeded") {
    CHECK_THROWS_AS(enumerate_trees(2, 30, 1000), CapExceededError);
    CHECK_NOTHROW(enumerate_trees(2, 4, 14));
}

TEST_CASE("stirling constants") {
    StirlingConstants s2 = stirling_constants(2, 20);
    CHECK(s2.a_d_approx == doctest::Approx(2 * std::log(2.0)).epsilon(1e-12));
    CHECK(s2.c_d_approx == doctest::Approx(0.5641895835477563).epsilon(1e-12));
    CHECK(s2.a_d.substr(0, 8) == "1.386294");
    for (int d = 2; d <= 9; ++d) {
        StirlingConstants s = stirling_constants(d, 20);
        CHECK(s.a_d_approx > 0);
        CHECK(s.c_d_approx > 0);
    }
}

TEST_CASE("stirling ratio approaches 1") {
    // C_k ~ C_d k^{-3/2} e^{A_d k}: within 5% at d=2, k=2000 on a log scale.
    StirlingConstants s2 = stirling_constants(2, 30);
    long k = 2000;
    double lhs = log_mpz(catalan_number(2, k)) + 1.5 * std::log(static_cast<double>(k)) -
                 s2.a_d_approx * k - std::log(s2.c_d_approx);
    CHECK(std::abs(lhs) < std::log(1.05));
}

TEST_CASE("split weights glue into the next Catalan number") {
    auto& table = catalan_table(3);
    table.ensure_split(12);
    for (long k = 1; k <= 12; ++k) {
        // W(d, k-1) == C_k by the convolution recursion.
        CHECK(table.w(3, k - 1) == table.c(k));
        Int byparts = 0;
        for (long a = 0; a <= k - 1; ++a) byparts += table.c(a) * table.w(2, k - 1 - a);
        CHECK(byparts == table.c(k));
    }
}

TEST_CASE("catalan cache round trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "catlab-cache-test";
    fs::remove_all(dir);
    catalan_number(2, 40);
    save_catalan_cache(dir.string());
    CHECK(load_catalan_cache(dir.string()));
    CHECK(catalan_number(2, 40) == catalan_closed_form(2, 40));
    fs::remove_all(dir);
}
