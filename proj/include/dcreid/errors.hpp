#pragma once

#include <stdexcept>
#include <string>

namespace dcreid {

// Malformed or truncated image payloads.
class DecodeError : public std::runtime_error {
public:
  explicit DecodeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Out-of-range or inconsistent arguments.
class ArgumentError : public std::invalid_argument {
public:
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Two signatures were extracted with different parameters and must not be compared.
class IncompatibleSignatureError : public std::runtime_error {
public:
  explicit IncompatibleSignatureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dataset ingestion / persistence failures.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ranking/CMC protocol violations (missing truth entries etc).
class EvaluationError : public std::runtime_error {
public:
  explicit EvaluationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dcreid
