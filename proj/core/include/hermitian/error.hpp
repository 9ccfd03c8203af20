#pragma once

#include <stdexcept>
#include <string>

namespace hermitian {

/* Raised for malformed or out-of-range input; never for a false statement. */
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string &what)
{
    if (!ok)
        throw ValidationError(what);
}

/* The three families of irreducible Hermitian symmetric pairs. */
enum class PairType { I, II, III };

std::string to_string(PairType t);

} // namespace hermitian
