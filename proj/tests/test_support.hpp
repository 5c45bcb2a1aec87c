#pragma once

#include <string>
#include <utility>

#include "oneplane/drawing.hpp"

// Runs f, expecting it to throw drawing_error; returns the error code,
// or "" when nothing was thrown.
template <class F>
std::string error_code_of(F&& f) {
    try {
        std::forward<F>(f)();
    } catch (const oneplane::drawing_error& e) {
        return e.code();
    }
    return "";
}
