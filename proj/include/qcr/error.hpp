#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcr {

// Every failure carries a stable kebab-case name (e.g. "torsion-detected")
// and the module that raised it; the CLI forwards both verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, std::string module, const std::string& message,
        std::vector<std::string> details = {})
      : std::runtime_error(message),
        name_(std::move(name)),
        module_(std::move(module)),
        details_(std::move(details)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& module() const noexcept { return module_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  std::string name_;
  std::string module_;
  std::vector<std::string> details_;
};

// Malformed input text (bad JSON, bad rational literal, wrong schema).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error("parse-error", "io", message) {}
};

}  // namespace qcr
