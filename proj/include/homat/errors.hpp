#pragma once

#include <stdexcept>
#include <string>

namespace homat {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input documents: unparseable rationals, missing fields,
// keys that do not resolve. Distinct from mathematical failures so the
// CLI can map the two classes to different exit codes.
struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// Mathematically invalid request on well-formed data.
struct MathError : Error {
  explicit MathError(const std::string& msg) : Error(msg) {}
};

struct AmbientMismatch : MathError {
  explicit AmbientMismatch(const std::string& msg) : MathError(msg) {}
};

struct UnknownObject : MathError {
  explicit UnknownObject(const std::string& msg) : MathError(msg) {}
};

struct CompositionMismatch : MathError {
  explicit CompositionMismatch(const std::string& msg) : MathError(msg) {}
};

// Concatenated path length exceeded the category's truncation bound.
// Raised as a hard error; truncated composites are never silently zero.
struct TruncationOverflow : MathError {
  explicit TruncationOverflow(const std::string& msg) : MathError(msg) {}
};

struct IndexMismatch : MathError {
  explicit IndexMismatch(const std::string& msg) : MathError(msg) {}
};

struct ModuleUndefined : MathError {
  explicit ModuleUndefined(const std::string& msg) : MathError(msg) {}
};

struct ComplexInvalid : MathError {
  explicit ComplexInvalid(const std::string& msg) : MathError(msg) {}
};

struct ConfigInvalid : MathError {
  explicit ConfigInvalid(const std::string& msg) : MathError(msg) {}
};

struct NotHomogeneous : MathError {
  explicit NotHomogeneous(const std::string& msg) : MathError(msg) {}
};

struct ArityMismatch : MathError {
  explicit ArityMismatch(const std::string& msg) : MathError(msg) {}
};

// Symmetric-power arity above the configured factorial cap.
struct ArityCapExceeded : MathError {
  explicit ArityCapExceeded(const std::string& msg) : MathError(msg) {}
};

struct ParityViolation : MathError {
  explicit ParityViolation(const std::string& msg) : MathError(msg) {}
};

}  // namespace homat
