#pragma once

#include <stdexcept>
#include <string>

namespace relnet {

// Error categories; the CLI maps them to exit codes (usage=1, data=2, numeric=3).
enum class errc { usage = 1, data = 2, numeric = 3 };

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::usage: return "usage";
        case errc::data: return "data";
        case errc::numeric: return "numeric";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    errc category() const noexcept { return category_; }

private:
    errc category_;
};

// Malformed or inconsistent input: parse failures, unknown labels, empty
// graphs, structural preconditions (disconnected graph for MFPT, n < 3).
class data_error : public error {
public:
    explicit data_error(const std::string& what) : error(errc::data, what) {}
};

// Numerical failure: non-convergence, singular linear systems.
class numeric_error : public error {
public:
    explicit numeric_error(const std::string& what) : error(errc::numeric, what) {}
};

// Bad invocation: missing required inputs, invalid flag combinations.
class usage_error : public error {
public:
    explicit usage_error(const std::string& what) : error(errc::usage, what) {}
};

} // namespace relnet
