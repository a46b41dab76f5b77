#ifndef CATLAB_ACCEPTANCE_HPP
#define CATLAB_ACCEPTANCE_HPP

#include <ostream>

namespace catlab {

/// Runs the full desk-scale verification battery, printing one PASS/FAIL line
/// per criterion; returns true iff everything passed. Every tolerance is
/// pinned here, in code.
bool run_acceptance(std::ostream& out);

} // namespace catlab

#endif
