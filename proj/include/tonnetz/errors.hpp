#pragma once

#include <stdexcept>
#include <string>

namespace tonnetz {

/// Base class for all domain errors. The `kind()` string is stable and
/// machine-readable; CLI error reports carry it verbatim.
class TonnetzError : public std::runtime_error {
public:
    TonnetzError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct SumMismatch : TonnetzError {
    explicit SumMismatch(const std::string& w) : TonnetzError("sum mismatch", w) {}
};
struct NotGeneric : TonnetzError {
    explicit NotGeneric(const std::string& w) : TonnetzError("not generic", w) {}
};
struct NotReduced : TonnetzError {
    explicit NotReduced(const std::string& w) : TonnetzError("not reduced", w) {}
};
struct FaceNotInComplex : TonnetzError {
    explicit FaceNotInComplex(const std::string& w) : TonnetzError("face not in complex", w) {}
};
struct NoType : TonnetzError {
    explicit NoType(const std::string& w) : TonnetzError("no L-type", w) {}
};
struct NotClosed : TonnetzError {
    explicit NotClosed(const std::string& w) : TonnetzError("word not closed", w) {}
};
struct LabelCollision : TonnetzError {
    explicit LabelCollision(const std::string& w) : TonnetzError("label collision", w) {}
};
struct UnsupportedK : TonnetzError {
    explicit UnsupportedK(const std::string& w) : TonnetzError("unsupported k", w) {}
};

}  // namespace tonnetz
