#pragma once

#include <stdexcept>
#include <string>

namespace bimahonian {

// Base of every error raised by the library. The C API maps each subclass
// onto one bm_status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ConductorMismatch : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Raised when a computation that must be exact or integral turns out not to
// be. Seeing one of these means there is a bug somewhere upstream.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

// Size limits shared by every enumerating operation. Exceeding one raises
// BudgetExceeded rather than silently truncating.
struct Budget {
    unsigned long long max_group_order = 1000000;
    int max_cells = 12;
    int max_character_n = 8;  // symmetric-group character tables
};

}  // namespace bimahonian
