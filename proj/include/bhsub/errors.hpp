#pragma once

#include <stdexcept>
#include <string>

namespace bhsub {

/// Bad caller-supplied data: malformed files, unknown scheme ids,
/// out-of-range parameters. CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// Numeric failure in an otherwise well-posed request: resonance edge
/// lengths, antipodal point pairs, singular linear systems. Exit code 3.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// Rank-deficient exact linear system. Distinct from a size mismatch,
/// which is reported as invalid_input.
class singular_matrix : public numeric_error {
public:
    explicit singular_matrix(const std::string& what) : numeric_error(what) {}
};

/// A library invariant failed to hold. Exit code 4.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace bhsub
