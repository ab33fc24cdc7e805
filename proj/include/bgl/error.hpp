#pragma once

#include <stdexcept>
#include <string>

namespace bgl {

// Malformed input or violated precondition; the CLI maps it to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive search budget exceeded; exit code 3.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bgl
