#pragma once

#include <stdexcept>
#include <string>

namespace sclean {

// Every failure raised by the library derives from Error so callers can
// catch the whole family in one place (the CLI maps it to exit status 2).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed ring, endomorphism or matrix spec.
class SpecError : public Error {
public:
    using Error::Error;
};

// A table that does not satisfy a ring law; the message names the law and
// the offending elements.
class AxiomError : public Error {
public:
    using Error::Error;
};

// An image table that is not a unital ring endomorphism.
class EndomorphismError : public Error {
public:
    using Error::Error;
};

class NotLocalError : public Error {
public:
    using Error::Error;
};

class NotUnitError : public Error {
public:
    using Error::Error;
};

class NotNilpotentError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(unsigned long long required, unsigned long long budget)
        : Error("enumeration needs " + std::to_string(required) + " matrices, budget is " +
                std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    unsigned long long required() const { return required_; }
    unsigned long long budget() const { return budget_; }

private:
    unsigned long long required_;
    unsigned long long budget_;
};

// A constructed decomposition that failed its own post-check. Raised only
// when the construction itself is wrong, never for a ring property.
class VerificationError : public Error {
public:
    using Error::Error;
};

// Shape or ring mismatch between matrices.
class ShapeError : public Error {
public:
    using Error::Error;
};

}  // namespace sclean
