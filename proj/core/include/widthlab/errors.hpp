#pragma once

#include <stdexcept>
#include <string>

namespace widthlab {

enum class Errc {
    resource_cap,
    bad_params,
    unknown_family,
    retry_exhausted,
    parse_error,
    precondition,
    precolor_over_capacity,
    not_a_tree,
    not_4_chromatic,
    no_witness,
    no_refutation,
    unreachable_position,
    invalid_input,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char *errc_name(Errc c) {
    switch (c) {
    case Errc::resource_cap: return "ResourceCap";
    case Errc::bad_params: return "BadParams";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::retry_exhausted: return "RetryExhausted";
    case Errc::parse_error: return "ParseError";
    case Errc::precondition: return "PreconditionViolated";
    case Errc::precolor_over_capacity: return "PrecolorOverCapacity";
    case Errc::not_a_tree: return "NotATree";
    case Errc::not_4_chromatic: return "Not4Chromatic";
    case Errc::no_witness: return "NoWitness";
    case Errc::no_refutation: return "NoRefutation";
    case Errc::unreachable_position: return "UnreachablePosition";
    case Errc::invalid_input: return "InvalidInput";
    }
    return "Error";
}

[[noreturn]] inline void raise(Errc code, const std::string &message) {
    throw Error(code, std::string(errc_name(code)) + ": " + message);
}

} // namespace widthlab
