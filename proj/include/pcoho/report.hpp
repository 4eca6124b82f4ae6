#ifndef PCOHO_REPORT_HPP
#define PCOHO_REPORT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pcoho
{

struct Violation
{
    std::string axiom;
    std::vector<std::size_t> index;
    Vec residual;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    void add(std::string axiom, std::vector<std::size_t> index, Vec residual)
    {
        violations.push_back({std::move(axiom), std::move(index), std::move(residual)});
    }

    // Records a violation only when the residual is nonzero.
    void check(const char *axiom, std::vector<std::size_t> index, Vec residual)
    {
        if (!is_zero(residual))
            add(axiom, std::move(index), std::move(residual));
    }
    void check(const std::string &axiom, std::vector<std::size_t> index, Vec residual)
    {
        check(axiom.c_str(), std::move(index), std::move(residual));
    }

    void merge(const ValidationReport &other)
    {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    bool has(const std::string &axiom) const
    {
        for (const auto &v : violations)
            if (v.axiom == axiom)
                return true;
        return false;
    }

    const Violation *first(const std::string &axiom) const
    {
        for (const auto &v : violations)
            if (v.axiom == axiom)
                return &v;
        return nullptr;
    }

    friend bool operator==(const ValidationReport &, const ValidationReport &) = default;
};

// Thrown when an operation requires valid input and gets something that
// fails an axiom; the report says which instance.
class AxiomError : public std::runtime_error
{
public:
    AxiomError(const std::string &what, ValidationReport report)
        : std::runtime_error(what), report_(std::move(report))
    {
    }
    const ValidationReport &report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

} // namespace pcoho

#endif
