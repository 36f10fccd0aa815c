#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace annarc {

/// Base of every domain error raised by the library. `kind()` is the
/// taxonomy name the command-line front end prints.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ANNARC_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

ANNARC_DEFINE_ERROR(SyntaxError)
ANNARC_DEFINE_ERROR(ArityError)
ANNARC_DEFINE_ERROR(IndexError)
ANNARC_DEFINE_ERROR(NotApplicable)
ANNARC_DEFINE_ERROR(CrossingsIrreducible)
ANNARC_DEFINE_ERROR(FlatnessError)
ANNARC_DEFINE_ERROR(UnbalancedSequence)
ANNARC_DEFINE_ERROR(InvalidSite)
ANNARC_DEFINE_ERROR(LabelClassMismatch)
ANNARC_DEFINE_ERROR(MiddleMismatch)

#undef ANNARC_DEFINE_ERROR

}  // namespace annarc
