#pragma once

#include <stdexcept>
#include <string>

namespace parteq {

/// Failure categories. The CLI maps each one to a fixed exit code.
enum class ErrorKind {
    structure,    // malformed object: zero part, wrong order, bad text
    usage,        // unknown tag, mismatched series orders, bad flag
    limit,        // enumeration size above the configured cap
    range,        // coefficient index outside the truncation order
    domain,       // input is not a member of the map's domain family
    integrity,    // a map produced something outside its claimed codomain
    bijectivity,  // an inverse found more than one preimage
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct StructureError : Error {
    explicit StructureError(const std::string& w) : Error(ErrorKind::structure, w) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& w) : Error(ErrorKind::usage, w) {}
};
struct LimitError : Error {
    explicit LimitError(const std::string& w) : Error(ErrorKind::limit, w) {}
};
struct RangeError : Error {
    explicit RangeError(const std::string& w) : Error(ErrorKind::range, w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct IntegrityError : Error {
    explicit IntegrityError(const std::string& w) : Error(ErrorKind::integrity, w) {}
};
struct BijectivityError : Error {
    explicit BijectivityError(const std::string& w) : Error(ErrorKind::bijectivity, w) {}
};

} // namespace parteq
