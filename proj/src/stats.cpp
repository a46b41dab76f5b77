#include "catlab/stats.hpp"

#include "catlab/errors.hpp"

#include <cmath>

namespace catlab {

double log_mpz(const Int& z) {
    if (z <= 0) throw InvalidParameterError("log of a non-positive integer");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::string rat_to_decimal(const Rat& q, int digits) {
    if (digits < 1) digits = 1;
    bool negative = q < 0;
    Rat a = negative ? Rat(-q) : q;
    Int scale = int_pow(Int(10), static_cast<unsigned long>(digits));
    Int scaled = Int(a.get_num()) * scale / a.get_den(); // truncates toward zero
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string fstr = frac.get_str();
    fstr.insert(fstr.begin(), digits - fstr.size(), '0');
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.get_str() + "." + fstr;
    return out;
}

double chi2_quantile(int df, double prob) {
    if (df < 1) throw InvalidParameterError("chi-square df must be >= 1");
    // Inverse normal via Acklam's rational approximation.
    auto inv_norm = [](double p) {
        static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
        static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
        static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
        static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
        const double plow = 0.02425;
        double qv, r;
        if (p < plow) {
            qv = std::sqrt(-2 * std::log(p));
            return (((((c[0] * qv + c[1]) * qv + c[2]) * qv + c[3]) * qv + c[4]) * qv + c[5]) /
                   ((((d[0] * qv + d[1]) * qv + d[2]) * qv + d[3]) * qv + 1);
        }
        if (p > 1 - plow) {
            qv = std::sqrt(-2 * std::log(1 - p));
            return -(((((c[0] * qv + c[1]) * qv + c[2]) * qv + c[3]) * qv + c[4]) * qv + c[5]) /
                   ((((d[0] * qv + d[1]) * qv + d[2]) * qv + d[3]) * qv + 1);
        }
        qv = p - 0.5;
        r = qv * qv;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * qv /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    };
    double z = inv_norm(prob);
    double f = 2.0 / (9.0 * df);
    double v = 1.0 - f + z * std::sqrt(f);
    return df * v * v * v;
}

double chi2_uniform_statistic(const std::vector<std::uint64_t>& observed, std::uint64_t trials) {
    if (observed.empty()) throw InvalidParameterError("no categories");
    double expected = static_cast<double>(trials) / static_cast<double>(observed.size());
    double stat = 0;
    for (std::uint64_t o : observed) {
        double diff = static_cast<double>(o) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

} // namespace catlab
