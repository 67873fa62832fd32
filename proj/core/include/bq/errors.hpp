#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define BQ_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                        \
    public:                                                            \
        using Error::Error;                                            \
        const char* kind() const noexcept override { return #Name; }   \
    };

BQ_DEFINE_ERROR(BoundExceeded)
BQ_DEFINE_ERROR(InvalidSeries)
BQ_DEFINE_ERROR(InvalidParameters)
BQ_DEFINE_ERROR(QuotientCollapse)
BQ_DEFINE_ERROR(NotSymmetric)
BQ_DEFINE_ERROR(ZeroModule)
BQ_DEFINE_ERROR(NotGeneratorCogenerator)
BQ_DEFINE_ERROR(NotApplicable)
BQ_DEFINE_ERROR(NotGorensteinCertified)
BQ_DEFINE_ERROR(DominantDimensionZero)
BQ_DEFINE_ERROR(NotAuslanderGorenstein)
BQ_DEFINE_ERROR(TooManyVertices)
BQ_DEFINE_ERROR(NotStratified)
BQ_DEFINE_ERROR(CertificateFailure)
BQ_DEFINE_ERROR(NotTilting)
BQ_DEFINE_ERROR(PreconditionFailed)
BQ_DEFINE_ERROR(NotInSubcategory)
BQ_DEFINE_ERROR(ExtProjective)
BQ_DEFINE_ERROR(ProjectiveInput)
BQ_DEFINE_ERROR(UniquenessViolation)
BQ_DEFINE_ERROR(UnknownExampleId)
BQ_DEFINE_ERROR(DecompositionInconclusive)
BQ_DEFINE_ERROR(InternalInconsistency)

#undef BQ_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string expected)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": expected " + expected),
          line_(line), column_(column), expected_(std::move(expected))
    {
    }
    const char* kind() const noexcept override { return "ParseError"; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

}  // namespace bq
