#include "catlab/catalan.hpp"

#include <mpfr.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace catlab {

namespace {

void check_params(int degree, long k) {
    if (degree < 2) throw InvalidParameterError("degree d must be >= 2");
    if (k < 0) throw InvalidParameterError("k must be >= 0");
}

std::mutex g_registry_mu;
std::map<int, std::unique_ptr<CatalanTable>>& registry() {
    static std::map<int, std::unique_ptr<CatalanTable>> r;
    return r;
}

} // namespace

CatalanTable::CatalanTable(int degree) : degree_(degree) {
    c_.push_back(Int(1));
    w_.resize(degree_); // slots 2..d-1 used; 1 aliases c_
}

void CatalanTable::ratio_terms(long k, Int& num, Int& den) const {
    const long d = degree_;
    num = (d - 1) * (k - 1) + 1;
    for (long t = 0; t < d; ++t) num *= d * k - t;
    den = (d - 1) * k + 1;
    den *= k;
    for (long t = 0; t < d - 1; ++t) den *= (d - 1) * k - t;
}

void CatalanTable::ensure(long k) {
    std::lock_guard<std::mutex> lock(mu_);
    Int num, den;
    for (long i = static_cast<long>(c_.size()); i <= k; ++i) {
        ratio_terms(i, num, den);
        Int next = c_[i - 1] * num;
        mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), den.get_mpz_t());
        c_.push_back(std::move(next));
    }
}

void CatalanTable::ensure_split(long k) {
    ensure(k);
    std::lock_guard<std::mutex> lock(mu_);
    for (int j = 2; j < degree_; ++j) {
        auto& wj = w_[j];
        for (long s = static_cast<long>(wj.size()); s <= k; ++s) {
            Int acc = 0;
            for (long a = 0; a <= s; ++a)
                acc += c_[a] * (j == 2 ? c_[s - a] : w_[j - 1][s - a]);
            wj.push_back(std::move(acc));
        }
    }
}

long CatalanTable::computed_up_to() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<long>(c_.size()) - 1;
}

bool CatalanTable::install(const std::vector<Int>& values) {
    if (values.empty() || values[0] != 1) return false;
    Int num, den;
    for (std::size_t k = 1; k < values.size(); ++k) {
        ratio_terms(static_cast<long>(k), num, den);
        if (values[k] * den != values[k - 1] * num) return false;
    }
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t k = c_.size(); k < values.size(); ++k) c_.push_back(values[k]);
    return true;
}

CatalanTable& catalan_table(int degree) {
    if (degree < 2) throw InvalidParameterError("degree d must be >= 2");
    std::lock_guard<std::mutex> lock(g_registry_mu);
    auto& slot = registry()[degree];
    if (!slot) slot = std::make_unique<CatalanTable>(degree);
    return *slot;
}

Int catalan_number(int degree, long k) {
    check_params(degree, k);
    auto& table = catalan_table(degree);
    table.ensure(k);
    return table.c(k);
}

Int catalan_closed_form(int degree, long k) {
    check_params(degree, k);
    Int b = binomial(static_cast<unsigned long>(degree) * k, static_cast<unsigned long>(k));
    Int div = (degree - 1) * Int(k) + 1;
    Int out;
    mpz_divexact(out.get_mpz_t(), b.get_mpz_t(), div.get_mpz_t());
    return out;
}

std::vector<Int> catalan_by_convolution(int degree, long kmax) {
    check_params(degree, kmax);
    std::vector<Int> c(kmax + 1);
    c[0] = 1;
    for (long k = 1; k <= kmax; ++k) {
        // W(j, s) over compositions of s into j parts, all parts < k known.
        std::vector<Int> prev(c.begin(), c.begin() + k); // W(1, s) = C_s
        for (int j = 2; j <= degree; ++j) {
            const long smax = k - 1;
            std::vector<Int> cur(smax + 1);
            for (long s = 0; s <= smax; ++s) {
                Int acc = 0;
                for (long a = 0; a <= s; ++a) acc += c[a] * prev[s - a];
                cur[s] = std::move(acc);
            }
            prev = std::move(cur);
        }
        c[k] = prev[k - 1];
    }
    return c;
}

StirlingConstants stirling_constants(int degree, int digits) {
    if (degree < 2) throw InvalidParameterError("degree d must be >= 2");
    if (digits < 1 || digits > 10000) throw InvalidParameterError("digits out of range");
    StirlingConstants out;
    out.digits = digits;
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
    mpfr_t a, c, t, u;
    mpfr_inits2(prec, a, c, t, u, static_cast<mpfr_ptr>(nullptr));

    // A_d = d log d - (d-1) log(d-1)
    mpfr_set_ui(t, static_cast<unsigned long>(degree), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_mul_ui(t, t, static_cast<unsigned long>(degree), MPFR_RNDN);
    mpfr_set_ui(u, static_cast<unsigned long>(degree - 1), MPFR_RNDN);
    mpfr_log(u, u, MPFR_RNDN);
    mpfr_mul_ui(u, u, static_cast<unsigned long>(degree - 1), MPFR_RNDN);
    mpfr_sub(a, t, u, MPFR_RNDN);

    // C_d = sqrt(d) / ((d-1)^{3/2} sqrt(2 pi))
    mpfr_const_pi(t, MPFR_RNDN);
    mpfr_mul_ui(t, t, 2, MPFR_RNDN);
    mpfr_set_ui(u, static_cast<unsigned long>(degree - 1), MPFR_RNDN);
    mpfr_pow_ui(u, u, 3, MPFR_RNDN);
    mpfr_mul(t, t, u, MPFR_RNDN); // 2 pi (d-1)^3
    mpfr_set_ui(u, static_cast<unsigned long>(degree), MPFR_RNDN);
    mpfr_div(c, u, t, MPFR_RNDN);
    mpfr_sqrt(c, c, MPFR_RNDN);

    auto render = [&](mpfr_t x) {
        char fmt[32];
        std::snprintf(fmt, sizeof(fmt), "%%.%dRe", digits - 1);
        std::vector<char> buf(digits + 32);
        mpfr_snprintf(buf.data(), buf.size(), fmt, x);
        return std::string(buf.data());
    };
    out.a_d = render(a);
    out.c_d = render(c);
    out.a_d_approx = mpfr_get_d(a, MPFR_RNDN);
    out.c_d_approx = mpfr_get_d(c, MPFR_RNDN);
    mpfr_clears(a, c, t, u, static_cast<mpfr_ptr>(nullptr));
    return out;
}

void for_each_tree_encoding(int degree, long k, const std::function<void(const std::string&)>& fn) {
    check_params(degree, k);
    const long total = degree * k + 1;
    std::string buf(static_cast<std::size_t>(total), '0');

    // Backtracking over preorder positions. `need` is the open-vertex count;
    // any state with valid remaining symbol counts and need >= 1 completes, so
    // every branch taken below yields a tree and none dead-ends.
    auto rec = [&](auto&& self, long pos, long need, long ones_left) -> void {
        if (pos == total) {
            fn(buf);
            return;
        }
        if (ones_left > 0) {
            buf[pos] = '1';
            self(self, pos + 1, need + degree - 1, ones_left - 1);
        }
        if (total - pos - ones_left > 0 && (need > 1 || pos + 1 == total)) {
            buf[pos] = '0';
            self(self, pos + 1, need - 1, ones_left);
        }
    };
    rec(rec, 0, 1, k);
}

Int require_within_cap(int degree, long k, long cap) {
    Int count = catalan_number(degree, k);
    if (count > cap) {
        throw CapExceededError("C_" + std::to_string(k) + "^(" + std::to_string(degree) +
                               ") = " + count.get_str() + " exceeds the enumeration cap " +
                               std::to_string(cap));
    }
    return count;
}

std::vector<CatalanTree> enumerate_trees(int degree, long k, long cap) {
    Int count = require_within_cap(degree, k, cap);
    std::vector<CatalanTree> out;
    out.reserve(count.get_ui());
    for_each_tree_encoding(degree, k, [&](const std::string& enc) {
        std::vector<std::uint8_t> kinds(enc.size());
        for (std::size_t i = 0; i < enc.size(); ++i) kinds[i] = enc[i] == '1';
        out.push_back(CatalanTree::from_kinds(degree, std::move(kinds)));
    });
    return out;
}

bool load_catalan_cache(const std::string& dir) {
    namespace fs = std::filesystem;
    bool any = false;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("catalan-d", 0) != 0 || entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path());
        if (!in) continue;
        int d = 0;
        std::size_t count = 0;
        if (!(in >> d >> count) || d < 2 || count == 0 || count > 1'000'000) continue;
        std::vector<Int> values;
        values.reserve(count);
        std::string word;
        bool ok = true;
        for (std::size_t i = 0; i < count; ++i) {
            if (!(in >> word)) {
                ok = false;
                break;
            }
            values.emplace_back(word);
        }
        if (ok && catalan_table(d).install(values)) any = true;
    }
    return any;
}

void save_catalan_cache(const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::vector<int> degrees;
    {
        std::lock_guard<std::mutex> lock(g_registry_mu);
        for (const auto& [d, table] : registry())
            if (table) degrees.push_back(d);
    }
    for (int d : degrees) {
        auto& table = catalan_table(d);
        long upto = table.computed_up_to();
        std::ofstream out(fs::path(dir) / ("catalan-d" + std::to_string(d) + ".txt"));
        if (!out) continue;
        out << d << " " << (upto + 1) << "\n";
        for (long k = 0; k <= upto; ++k) out << table.c(k).get_str() << "\n";
    }
}

} // namespace catlab
