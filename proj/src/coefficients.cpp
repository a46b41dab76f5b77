#include "catlab/coefficients.hpp"

#include "catlab/errors.hpp"

namespace catlab {

CoefficientTable::CoefficientTable(int n_types, int degree) : n(n_types), d(degree) {
    if (n < 1) throw InvalidParameterError("coefficient table needs n >= 1");
    if (d < 2) throw InvalidParameterError("coefficient table needs degree d >= 2");
}

void CoefficientTable::set(int i, const MultiIndex& alpha, const Rat& value) {
    if (i < 0 || i >= n) throw InvalidParameterError("component index out of range");
    if (static_cast<int>(alpha.size()) != n)
        throw InvalidParameterError("multi-index length must equal n");
    if (alpha.weight() != static_cast<unsigned long>(d))
        throw DegreeMismatchError("coefficient multi-index must have |alpha| = d");
    if (value == 0)
        entries.erase({i, alpha});
    else
        entries[{i, alpha}] = value;
}

Rat CoefficientTable::get(int i, const MultiIndex& alpha) const {
    auto it = entries.find({i, alpha});
    return it == entries.end() ? Rat(0) : it->second;
}

Rat CoefficientTable::divided(int i, const MultiIndex& alpha) const {
    Rat v = get(i, alpha);
    if (v == 0) return v;
    Rat q = v / Rat(alpha.fact());
    q.canonicalize();
    return q;
}

Rat CoefficientTable::max_abs() const {
    Rat best = 0;
    for (const auto& [key, value] : entries) {
        Rat a = rat_abs(value);
        if (a > best) best = a;
    }
    return best;
}

bool CoefficientTable::is_zero() const {
    for (const auto& [key, value] : entries)
        if (value != 0) return false;
    return true;
}

} // namespace catlab
