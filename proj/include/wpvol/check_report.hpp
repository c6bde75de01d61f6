#pragma once

#include <string>
#include <vector>

namespace wpvol {

/// Outcome of one verification identity. Inconclusive marks checks whose
/// inputs fall outside the computed budget; it is neither success nor failure.
struct CheckResult {
    enum class Status { pass, fail, inconclusive };

    Status status = Status::pass;
    std::string name;
    std::string detail;

    bool passed() const { return status == Status::pass; }
    bool failed() const { return status == Status::fail; }

    static CheckResult pass(std::string name, std::string detail = "") {
        return {Status::pass, std::move(name), std::move(detail)};
    }
    static CheckResult fail(std::string name, std::string detail) {
        return {Status::fail, std::move(name), std::move(detail)};
    }
    static CheckResult inconclusive(std::string name, std::string detail) {
        return {Status::inconclusive, std::move(name), std::move(detail)};
    }
};

using CheckList = std::vector<CheckResult>;

}  // namespace wpvol
