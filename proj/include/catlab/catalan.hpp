#ifndef CATLAB_CATALAN_HPP
#define CATLAB_CATALAN_HPP

#include "catlab/errors.hpp"
#include "catlab/rational.hpp"
#include "catlab/tree.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

namespace catlab {

/// Default cap on full enumerations of C_k^(d); the counts grow like e^{A_d k}
/// so anything past this is a resource error, not a computation.
inline constexpr long kDefaultTreeCap = 10'000'000;

/// Process-wide memoized table of d-Catalan numbers, plus the partial
/// convolution tables W(j,s) = sum over compositions of s into j parts of
/// prod C_{k_i} used by the uniform sampler (W(d, k-1) == C_k).
///
/// Callers prewarm with ensure()/ensure_split(), after which c()/w() reads are
/// lock-free and safe from any thread.
class CatalanTable {
public:
    explicit CatalanTable(int degree);

    int degree() const { return degree_; }
    void ensure(long k);
    void ensure_split(long k);
    long computed_up_to() const;

    const Int& c(long k) const { return c_[k]; }
    /// W(j, s) for 1 <= j <= d; W(1, s) aliases C_s and W(d, s) = C_{s+1}.
    const Int& w(int j, long s) const {
        if (j == 1) return c_[s];
        if (j == degree_) return c_[s + 1];
        return w_[j][s];
    }

    /// Installs externally loaded values C_0..C_{values.size()-1} after
    /// consistency validation; returns false (and changes nothing) on a
    /// malformed sequence.
    bool install(const std::vector<Int>& values);

private:
    // Multiplier pair with C_k * den == C_{k-1} * num.
    void ratio_terms(long k, Int& num, Int& den) const;

    int degree_;
    std::deque<Int> c_;
    std::vector<std::deque<Int>> w_;
    mutable std::mutex mu_;
};

CatalanTable& catalan_table(int degree);

/// C_k^(d) = binom(dk, k) / ((d-1)k + 1). Rejects d < 2 or k < 0.
Int catalan_number(int degree, long k);

/// Closed form evaluated directly from the binomial (independent of the
/// memoized ratio recurrence).
Int catalan_closed_form(int degree, long k);

/// C_0..C_kmax built purely from the d-fold convolution recursion
/// C_k = sum_{k_1+...+k_d = k-1} prod C_{k_i}; independent of the closed form.
std::vector<Int> catalan_by_convolution(int degree, long kmax);

/// Stirling-regime constants: A_d = d log d - (d-1) log(d-1) and
/// C_d = sqrt(d) / ((d-1)^{3/2} sqrt(2 pi)), rendered to `digits` decimal
/// digits with MPFR.
struct StirlingConstants {
    std::string a_d;
    std::string c_d;
    double a_d_approx = 0.0;
    double c_d_approx = 0.0;
    int digits = 0;
};

StirlingConstants stirling_constants(int degree, int digits = 30);

/// Streams every tree of C_k^(d) exactly once as its preorder encoding, in
/// lexicographic order with '1' ordered before '0' (so the deep-left tree
/// comes first). No cap is applied here; callers that materialize must check.
void for_each_tree_encoding(int degree, long k, const std::function<void(const std::string&)>& fn);

/// Materializes the full enumeration, in the same order. Throws
/// CapExceededError when C_k^(d) > cap.
std::vector<CatalanTree> enumerate_trees(int degree, long k, long cap = kDefaultTreeCap);

/// Throws CapExceededError when C_k^(d) > cap; returns the count otherwise.
Int require_within_cap(int degree, long k, long cap);

/// Optional on-disk cache of the Catalan tables (one file per degree in
/// `dir`). Loading validates ratio consistency and ignores malformed files.
bool load_catalan_cache(const std::string& dir);
void save_catalan_cache(const std::string& dir);

} // namespace catlab

#endif
