#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mcsim {

/// Error codes shared across the library. Each maps to one failure mode a
/// caller can act on; the message carries the specifics.
enum class Errc {
    DanglingReference,
    InvariantViolation,
    MissingCore,
    BapRequired,
    NotADonor,
    NotAttached,
    PartitionedTopology,
    UnknownOption,
    MissingTableEntry,
    Orphan,
    PrerequisiteMissing,
    LinkDownOnPath,
    UnknownUe,
    SyntaxError,
    UnknownField,
    UnresolvedReference,
    RangeError,
};

std::string_view errc_name(Errc c);

struct Error {
    Errc code;
    std::string message;
};

/// Minimal ok-or-error carrier. value() on an error (or error() on a value)
/// throws, so misuse fails loudly in tests.
template <typename T>
class Result {
  public:
    Result(T value) : value_(std::move(value)) {}  // NOLINT: implicit by design
    Result(Error error) : error_(std::move(error)) {}

    bool ok() const { return value_.has_value(); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        if (!value_) throw std::logic_error("Result::value() on error: " + error_->message);
        return *value_;
    }
    T&& value() && {
        if (!value_) throw std::logic_error("Result::value() on error: " + error_->message);
        return std::move(*value_);
    }
    const Error& error() const {
        if (!error_) throw std::logic_error("Result::error() on ok result");
        return *error_;
    }
    Errc code() const { return error().code; }

  private:
    std::optional<T> value_;
    std::optional<Error> error_;
};

/// Result with no payload.
class Status {
  public:
    Status() = default;
    Status(Error error) : error_(std::move(error)) {}  // NOLINT: implicit by design

    static Status ok() { return Status{}; }

    bool is_ok() const { return !error_.has_value(); }
    explicit operator bool() const { return is_ok(); }

    const Error& error() const {
        if (!error_) throw std::logic_error("Status::error() on ok status");
        return *error_;
    }
    Errc code() const { return error().code; }

  private:
    std::optional<Error> error_;
};

}  // namespace mcsim
