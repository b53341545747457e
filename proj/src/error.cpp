#include "bwy/error.hpp"

namespace bwy {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::MissingLetter: return "MissingLetter";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ZeroV: return "ZeroV";
    case ErrorKind::SingularU: return "SingularU";
    case ErrorKind::SingularFactor: return "SingularFactor";
    case ErrorKind::DegenerateWeight: return "DegenerateWeight";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::NonPeriodic: return "NonPeriodic";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BranchCut: return "BranchCut";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::OutOfRegion: return "OutOfRegion";
    case ErrorKind::DegenerateShape: return "DegenerateShape";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace bwy
