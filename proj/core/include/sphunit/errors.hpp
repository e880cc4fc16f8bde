// errors.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace sphunit {

// Input or state outside an operation's domain. `code` is machine-readable
// ("bad_token", "pole", "not_hermitian", ...).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace sphunit
