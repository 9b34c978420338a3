#ifndef MACLANE_ERRORS_HPP
#define MACLANE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maclane {

/* Every failure the engine can signal deliberately.  Callers that need to
 * branch on the failure kind catch the concrete type; the CLI maps them to
 * exit codes. */

struct engine_error : std::runtime_error {
    explicit engine_error(const std::string& what) : std::runtime_error(what) {}
};

struct zero_polynomial : engine_error {
    zero_polynomial() : engine_error("zero polynomial not allowed here") {}
};

struct inseparable_input : engine_error {
    explicit inseparable_input(const std::string& w = "polynomial is not separable")
        : engine_error(w) {}
};

struct not_key_polynomial : engine_error {
    explicit not_key_polynomial(const std::string& w) : engine_error(w) {}
};

struct lambda_too_small : engine_error {
    explicit lambda_too_small(const std::string& w) : engine_error(w) {}
};

// The residue field of the base is a prime field standing in for an
// algebraically closed one; inputs that would behave differently over the
// closure are rejected rather than answered wrongly.
struct residue_field_obstruction : engine_error {
    explicit residue_field_obstruction(const std::string& w) : engine_error(w) {}
};

struct reducible_input : engine_error {
    // Human-readable description of the partial splitting that was detected
    // (Newton-polygon slopes or residual factors).
    std::string diagnostic;
    explicit reducible_input(const std::string& w, std::string diag = {})
        : engine_error(w), diagnostic(std::move(diag)) {}
};

struct non_positive_roots : engine_error {
    explicit non_positive_roots(const std::string& w) : engine_error(w) {}
};

struct incompatible_value_groups : engine_error {
    explicit incompatible_value_groups(const std::string& w) : engine_error(w) {}
};

struct bad_endpoints : engine_error {
    explicit bad_endpoints(const std::string& w) : engine_error(w) {}
};

struct not_adjacent : engine_error {
    explicit not_adjacent(const std::string& w) : engine_error(w) {}
};

// A consecutive pair that admits no intermediate entry (see npath.hpp).
struct not_applicable : engine_error {
    explicit not_applicable(const std::string& w) : engine_error(w) {}
};

struct not_defined : engine_error {
    explicit not_defined(const std::string& w) : engine_error(w) {}
};

struct disjoint_union : engine_error {
    disjoint_union() : engine_error("model union requires a common valuation") {}
};

struct le_mult_mismatch : engine_error {
    explicit le_mult_mismatch(const std::string& w) : engine_error(w) {}
};

struct separation_divergence : engine_error {
    explicit separation_divergence(const std::string& w) : engine_error(w) {}
};

struct strategy_inapplicable : engine_error {
    explicit strategy_inapplicable(const std::string& w) : engine_error(w) {}
};

struct precision_exhausted : engine_error {
    explicit precision_exhausted(const std::string& w) : engine_error(w) {}
};

struct precondition_unverified : engine_error {
    explicit precondition_unverified(const std::string& w) : engine_error(w) {}
};

struct unsupported_blowup_site : engine_error {
    explicit unsupported_blowup_site(const std::string& w) : engine_error(w) {}
};

struct parse_error : engine_error {
    std::size_t position;
    parse_error(const std::string& w, std::size_t pos)
        : engine_error(w + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace maclane

#endif
