#pragma once

#include <stdexcept>
#include <string>

namespace ringgenus {

// Base of all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Structure constants are inconsistent with the generator orders, so the
// bilinear extension would not be well defined.
class NotWellDefined : public Error {
public:
    using Error::Error;
};

class NotAssociative : public Error {
public:
    using Error::Error;
};

class NotDistributive : public Error {
public:
    using Error::Error;
};

class NotAbelianGroup : public Error {
public:
    using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

// Enumeration or embedding-search space is larger than the caller's budget.
// `count` is the size of the space that was rejected.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, long long count_)
        : Error(what), count(count_) {}
    long long count;
};

class InvalidElement : public Error {
public:
    using Error::Error;
};

// Commuting graph requested for a commutative ring (empty vertex set).
class CommutativeRing : public Error {
public:
    using Error::Error;
};

class NotCliqueUnion : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

// A linear constraint on positive integers has no solutions; the
// parameterized case is vacuous.
class NoSolutions : public Error {
public:
    using Error::Error;
};

class ConstructionFailed : public Error {
public:
    using Error::Error;
};

// A catalog entry built a ring whose order or center contradicts the
// hypothesis it claims to witness.
class HypothesisMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace ringgenus
