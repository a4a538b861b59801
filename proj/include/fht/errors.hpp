#ifndef FHT_ERRORS_HPP
#define FHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fht {

// Invalid mathematical input (argument outside a function's domain,
// malformed symbol, index out of range).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A value of alpha for which the quantity is defined by a different,
// documented formula (alpha = 1/2, integer alpha in the bound corollary).
class excluded_case_error : public domain_error {
public:
    explicit excluded_case_error(const std::string& what) : domain_error(what) {}
};

// An iteration failed to reach its tolerance within the cap.  Carries the
// last iterate so callers can inspect how far it got.
class non_convergence_error : public std::runtime_error {
public:
    non_convergence_error(const std::string& what, double last_iterate)
        : std::runtime_error(what), last(last_iterate) {}
    double last;
};

// The Levinson recursion lost positive definiteness at a given step.
class recursion_abort_error : public std::runtime_error {
public:
    recursion_abort_error(const std::string& what, int step_index)
        : std::runtime_error(what), step(step_index) {}
    int step;
};

// Spectral factorization failed (symbol vanishes on the closed unit disk).
class factorization_error : public domain_error {
public:
    explicit factorization_error(const std::string& what) : domain_error(what) {}
};

// The recursion lift cannot be formed because P(1) = 0.
class singular_lift_error : public domain_error {
public:
    explicit singular_lift_error(const std::string& what) : domain_error(what) {}
};

} // namespace fht

#endif
