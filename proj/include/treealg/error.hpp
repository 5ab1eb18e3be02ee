#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treealg {

enum class ErrorCode {
    EmptyTree,
    EmptyArgument,
    BadPosition,
    NotReduced,
    NotBinary,
    LabelCountMismatch,
    Parse,
    UnitTerm,
    UnitUnit,
    DimensionMismatch,
    InternalInconsistency,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : Error(ErrorCode::Parse,
                "parse error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(expected) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

}  // namespace treealg
