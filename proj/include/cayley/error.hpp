#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Malformed or out-of-range input (bad labels, non-trees, guard violations).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input that does not satisfy an operation's precondition.
class precondition_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cayley
