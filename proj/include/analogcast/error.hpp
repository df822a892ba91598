#pragma once

#include <stdexcept>
#include <string>

namespace analogcast {

// Every library failure surfaces as this type. The pipeline prefixes the
// stage name when re-throwing so the CLI can report where a run failed.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition) throw Error(message);
}

} // namespace analogcast
