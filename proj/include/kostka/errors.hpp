#pragma once

#include <stdexcept>
#include <string>

namespace kostka {

/* Raised when a computed certificate does not hold: a division that should
 * be exact left a remainder, a multiplicity came out negative or
 * fractional, two independent routes disagree, and so on.  Bad user input
 * is reported with std::invalid_argument instead.
 */
class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kostka
