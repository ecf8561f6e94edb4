#pragma once

#include <stdexcept>
#include <string>

namespace eis {

// Internal invariant failures (a computation contradicting a structural
// guarantee) are reported through this type so callers can distinguish
// them from bad input.
class FalsificationError : public std::logic_error {
public:
    explicit FalsificationError(const std::string& what) : std::logic_error(what) {}
};

} // namespace eis
