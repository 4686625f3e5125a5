#pragma once

#include <stdexcept>
#include <string>

namespace lf {

// Error categories, mapped to CLI exit codes by the front end.
enum class Errc {
    invalid_argument,     // bad config values, precondition violations
    parse,                // malformed input files
    disconnected_input,   // algorithm requires a connected graph
    too_few_communities,  // Leiden produced fewer communities than k
    partition_coverage,   // partition file does not cover the graph exactly
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lf
