#pragma once

#include <stdexcept>
#include <string>

namespace domgame {

// Malformed or out-of-range input: bad vertex index, bad file, bad spec string.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A valid value used with the wrong kind of API, e.g. a mover passed for an
// uncolored graph.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IllegalMoveError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The instance exceeds the configured search bound.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A postcondition the library itself is responsible for did not hold.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace domgame
