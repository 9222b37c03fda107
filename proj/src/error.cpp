#include "symtab/error.hpp"

namespace symtab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAddable: return "NotAddable";
    case ErrorKind::NotRemovable: return "NotRemovable";
    case ErrorKind::HasSlidableHole: return "HasSlidableHole";
    case ErrorKind::HasReverselySlidableHole: return "HasReverselySlidableHole";
    case ErrorKind::NotSemistandard: return "NotSemistandard";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotAHole: return "NotAHole";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorKind::NotWeaklyIncreasing: return "NotWeaklyIncreasing";
    case ErrorKind::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
    case ErrorKind::NoPreimage: return "NoPreimage";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace symtab
