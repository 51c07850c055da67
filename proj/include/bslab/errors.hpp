#pragma once

#include <stdexcept>
#include <string>

namespace bslab {

// Base class for all library errors. Specific subclasses exist so callers
// can distinguish bad input (rank, entries, shapes) from internal
// verification failures.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct invalid_rank_error : error {
    using error::error;
};

// A word letter outside 1..n-1.
struct invalid_word_error : error {
    using error::error;
};

// An operation that needs the canonical word was given something else.
struct unsupported_word_error : error {
    using error::error;
};

// Multiplicity/row-layout mismatches, non-interval column sets.
struct shape_error : error {
    using error::error;
};

// Tableau entries out of range, non-increasing rows, flag violations where
// a nonzero row is required.
struct invalid_entry_error : error {
    using error::error;
};

struct not_skew_error : error {
    using error::error;
};

struct block_mismatch_error : error {
    using error::error;
};

struct invalid_minor_error : error {
    using error::error;
};

// Polynomials from different variable contexts combined.
struct context_mismatch_error : error {
    using error::error;
};

// Evaluation point missing a variable.
struct evaluation_error : error {
    using error::error;
};

// lift input is not a contra-tableau of the expected block shape.
struct invalid_section_error : error {
    using error::error;
};

// Lattice point does not fit into the requested ambient size.
struct embedding_error : error {
    using error::error;
};

// A relation required to be a two-term +-1 binomial is not one.
struct not_binomial_error : error {
    using error::error;
};

// Graded dimensions failed to fit a polynomial.
struct non_polynomial_growth_error : error {
    using error::error;
};

// A section could not be expressed in the straight basis. This is never
// expected for valid inputs; it indicates a bug rather than bad data.
struct basis_failure_error : error {
    using error::error;
};

} // namespace bslab
