#pragma once

#include <stdexcept>
#include <string>

namespace eigencones {

struct NotNestedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroRelationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BlockMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotConvergedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedConeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedEmbeddingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace eigencones
