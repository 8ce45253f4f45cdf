#pragma once

#include <functional>

#include "isodual/error.hpp"

namespace isodual_test {

// True when fn throws isodual::Error with exactly the wanted code.
inline bool throws_errc(isodual::Errc want, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const isodual::Error& e) {
        return e.code() == want;
    }
    return false;
}

} // namespace isodual_test
