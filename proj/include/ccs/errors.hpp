#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

struct Error : std::runtime_error {
    Error(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
    std::string kind;
};

struct PointNotOnBoundary : Error {
    explicit PointNotOnBoundary(const std::string& m) : Error("PointNotOnBoundary", m) {}
};
struct SingularGradient : Error {
    explicit SingularGradient(const std::string& m) : Error("SingularGradient", m) {}
};
struct BetaTooLarge : Error {
    explicit BetaTooLarge(const std::string& m) : Error("BetaTooLarge", m) {}
};
struct DegenerateBoundary : Error {
    explicit DegenerateBoundary(const std::string& m) : Error("DegenerateBoundary", m) {}
};
struct InvalidPolygon : Error {
    explicit InvalidPolygon(const std::string& m) : Error("InvalidPolygon", m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};
struct SchemaVersionMismatch : Error {
    explicit SchemaVersionMismatch(const std::string& m) : Error("SchemaVersionMismatch", m) {}
};
struct InfiniteEnergy : Error {
    explicit InfiniteEnergy(const std::string& m) : Error("InfiniteEnergy", m) {}
};
struct AuditFailure : Error {
    explicit AuditFailure(const std::string& m) : Error("AuditFailure", m) {}
};
struct DegenerateElement : Error {
    explicit DegenerateElement(const std::string& m) : Error("DegenerateElement", m) {}
};
struct CertificateFailure : Error {
    explicit CertificateFailure(const std::string& m) : Error("CertificateFailure", m) {}
};
struct LineSearchFailure : Error {
    explicit LineSearchFailure(const std::string& m) : Error("LineSearchFailure", m) {}
};
struct NonDescent : Error {
    explicit NonDescent(const std::string& m) : Error("NonDescent", m) {}
};
struct ValidationFailure : Error {
    explicit ValidationFailure(const std::string& m) : Error("ValidationFailure", m) {}
};
struct BoundViolation : Error {
    explicit BoundViolation(const std::string& m) : Error("BoundViolation", m) {}
};
struct StepFailure : Error {
    explicit StepFailure(const std::string& m) : Error("StepFailure", m) {}
};

}  // namespace ccs
