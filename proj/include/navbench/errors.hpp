#pragma once

#include <stdexcept>

namespace navbench {

/// A required file could not be opened.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace navbench
