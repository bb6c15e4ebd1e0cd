#pragma once

#include <stdexcept>
#include <string>

namespace envsplit {

/// Malformed or unreadable input data (parse failures, bad file contents).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant (corrupt back-pointers, impossible state).
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace envsplit
