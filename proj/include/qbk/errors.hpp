#pragma once

#include <stdexcept>
#include <string>

namespace qbk {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QBK_DEFINE_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

QBK_DEFINE_ERROR(DivisionByZero);
QBK_DEFINE_ERROR(BothZero);
QBK_DEFINE_ERROR(PoleAtPoint);
QBK_DEFINE_ERROR(OddExponent);
QBK_DEFINE_ERROR(PoleAtOne);
QBK_DEFINE_ERROR(OddOrder);
QBK_DEFINE_ERROR(SingularRegularization);
QBK_DEFINE_ERROR(UnsupportedM);
QBK_DEFINE_ERROR(DivergentParameters);
QBK_DEFINE_ERROR(IrrationalTerm);
QBK_DEFINE_ERROR(ParseError);
QBK_DEFINE_ERROR(IoError);

#undef QBK_DEFINE_ERROR

}  // namespace qbk
