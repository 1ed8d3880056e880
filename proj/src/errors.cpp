#include "nilint/errors.hpp"

namespace nilint {

ParseError::ParseError(std::string message, std::size_t offset,
                       std::vector<std::string> expected)
    : UsageError(message + " at offset " + std::to_string(offset)),
      message_(std::move(message)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace nilint
