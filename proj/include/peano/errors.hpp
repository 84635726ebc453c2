#pragma once

#include <stdexcept>
#include <string>

namespace peano {

enum class errc {
    empty_input,
    disconnected,
    budget_exceeded,
    nesting_violation,
    not_a_connector,
    no_path,
    not_in_chain,
    refinement_failure,
    endpoint_outside_f,
    f_disconnected,
    out_of_domain,
    inverse_undefined,
    divergent_series,
    insufficient_levels,
    degenerate_space,
    bad_input,
};

/// Library error with a stable code usable for exit-status mapping.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "Empty";
        case errc::disconnected: return "Disconnected";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::nesting_violation: return "NestingViolation";
        case errc::not_a_connector: return "NotAConnector";
        case errc::no_path: return "NoPath";
        case errc::not_in_chain: return "NotInChain";
        case errc::refinement_failure: return "RefinementFailure";
        case errc::endpoint_outside_f: return "EndpointOutsideF";
        case errc::f_disconnected: return "FDisconnected";
        case errc::out_of_domain: return "OutOfDomain";
        case errc::inverse_undefined: return "InverseUndefined";
        case errc::divergent_series: return "DivergentSeries";
        case errc::insufficient_levels: return "InsufficientLevels";
        case errc::degenerate_space: return "DegenerateSpace";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

} // namespace peano
