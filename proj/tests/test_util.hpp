#pragma once

#include <string>

#include "knotfib/errors.hpp"

namespace testutil {

// Runs f and returns the code of the Error it throws ("" if none is thrown).
template <typename F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const knotfib::Error& e) {
        return e.code();
    }
    return "";
}

} // namespace testutil
