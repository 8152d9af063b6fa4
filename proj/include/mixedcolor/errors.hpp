#ifndef MIXEDCOLOR_ERRORS_HPP
#define MIXEDCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixedcolor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Parallel relation: repeated edge/arc or an edge and an arc on the same pair.
class DuplicateRelation : public Error {
public:
    using Error::Error;
};

class LoopError : public Error {
public:
    using Error::Error;
};

class DirectedCycleError : public Error {
public:
    using Error::Error;
};

/// A search exceeded its node budget. Never reported as a "no" answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Input larger than an oracle's size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class IncompleteColoring : public Error {
public:
    using Error::Error;
};

class InvalidCover : public Error {
public:
    using Error::Error;
};

class InvalidDecomposition : public Error {
public:
    using Error::Error;
};

/// Expression operation would create a parallel or opposite relation.
class ConflictingRelation : public Error {
public:
    using Error::Error;
};

class WidthCapExceeded : public Error {
public:
    using Error::Error;
};

/// An edge operation of the input expression joins vertex pairs of which some,
/// but not all, end up as transitive arcs; composite labels cannot separate them.
class ClosureConflict : public Error {
public:
    using Error::Error;
};

} // namespace mixedcolor

#endif
