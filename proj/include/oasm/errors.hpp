// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace oasm {

struct AutomataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a binary operation receives automata over different alphabets.
struct AlphabetMismatch : AutomataError {
    using AutomataError::AutomataError;
};

// Thrown when a determinization subset does not have the selector/core/subcore
// shape; the message names the violated clause.
struct SubsetFormError : AutomataError {
    using AutomataError::AutomataError;
};

// Thrown by the text-format reader; carries a 1-based source position.
struct ParseError : AutomataError {
    ParseError(std::string msg, int line_no, int column_no)
        : AutomataError(std::move(msg)), line(line_no), column(column_no) {}
    int line;
    int column;
};

}  // namespace oasm
