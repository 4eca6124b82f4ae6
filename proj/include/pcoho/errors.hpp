#ifndef PCOHO_ERRORS_HPP
#define PCOHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcoho
{

// Shape or dimension mismatch in the inputs. Distinct from an axiom failure.
class StructuralError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Desk-scale limits (dimension cap, ambient cochain size, degree cap).
class CapacityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An operation was called on data that does not satisfy its documented
// precondition (not a cocycle, not a deformation map, pair outside the
// compatible group, ...). Carries a short machine-friendly reason.
class PreconditionError : public std::runtime_error
{
public:
    PreconditionError(std::string reason, const std::string &what)
        : std::runtime_error(what), reason_(std::move(reason))
    {
    }
    explicit PreconditionError(const std::string &what) : PreconditionError(what, what) {}

    const std::string &reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace pcoho

#endif
