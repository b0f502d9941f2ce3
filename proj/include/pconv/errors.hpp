#pragma once

#include <stdexcept>
#include <string>

namespace pconv {

/// Base class for all pconv errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor/layer dimensions do not compose.
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

/// A shape is valid per se but not supported by the operation
/// (e.g. pattern pruning on non-3x3 kernels).
class UnsupportedShapeError : public ShapeError {
public:
  explicit UnsupportedShapeError(const std::string& msg) : ShapeError(msg) {}
};

/// Non-finite or otherwise corrupt numeric payload.
class DataError : public Error {
public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

/// Mathematically invalid argument (e.g. sigma <= 0).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// On-disk format violation; messages carry byte offsets where applicable.
class FormatError : public Error {
public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// Invalid CLI/config input.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Training loop diverged (NaN loss etc.).
class TrainingError : public Error {
public:
  explicit TrainingError(const std::string& msg) : Error(msg) {}
};

/// Execution plan does not match the layer/input it is being run against.
class PlanMismatchError : public Error {
public:
  explicit PlanMismatchError(const std::string& msg) : Error(msg) {}
};

} // namespace pconv
