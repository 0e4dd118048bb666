#pragma once

#include <stdexcept>
#include <string>

namespace routing {

enum class Errc {
    length_mismatch,
    malformed_prefix,
    invalid_argument,
    lemma_precondition,
    construction_failure,
    center_uncovered,
    probe_exhausted,
    illegal_action,
    illegal_model,
    hop_cap_exceeded,
    invalid_label,
    inconsistent_function,
    retry_exhausted,
    io_error,
    parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace routing
