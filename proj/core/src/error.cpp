#include "tiltwall/error.hpp"

namespace tiltwall {

Error::Error(std::string name, const std::string& message)
    : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

MalformedFixture::MalformedFixture(const std::string& file, const std::string& field,
                                   const std::string& message)
    : Error("MalformedFixture", file + " [" + field + "]: " + message) {}

}  // namespace tiltwall
