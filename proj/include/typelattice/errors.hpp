#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace typelattice {

// An input text failed to parse; position is a 0-based byte offset into
// the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace typelattice
