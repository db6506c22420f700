#pragma once

#include <stdexcept>
#include <string>

namespace dynres {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DYNRES_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

DYNRES_DEFINE_ERROR(SelfLoopRejected);
DYNRES_DEFINE_ERROR(UnknownVertex);
DYNRES_DEFINE_ERROR(UnknownEdge);
DYNRES_DEFINE_ERROR(IsolatedVertex);
DYNRES_DEFINE_ERROR(NonPositiveWeight);
DYNRES_DEFINE_ERROR(TooLarge);
DYNRES_DEFINE_ERROR(Disconnected);
DYNRES_DEFINE_ERROR(RankOutOfRange);
DYNRES_DEFINE_ERROR(VertexNotOnWalk);
DYNRES_DEFINE_ERROR(InvalidPosition);
DYNRES_DEFINE_ERROR(WrongMode);
DYNRES_DEFINE_ERROR(PairNotRegistered);
DYNRES_DEFINE_ERROR(StreamInvalid);
DYNRES_DEFINE_ERROR(InfeasibleParams);

#undef DYNRES_DEFINE_ERROR

// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dynres
