#pragma once

#include <stdexcept>
#include <string>

namespace osx {

// exit 1
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exit 2
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAnAutomorphism : DomainError {
  NotAnAutomorphism() : DomainError("endomorphism is not an automorphism") {}
};
struct NotAForest : DomainError {
  NotAForest() : DomainError("edge set contains a cycle") {}
};
struct IdentityWord : DomainError {
  IdentityWord() : DomainError("word is trivial in the free group") {}
};
struct InvalidFace : DomainError {
  using DomainError::DomainError;
};
struct NotACandidateImage : DomainError {
  NotACandidateImage()
      : DomainError("subgraph is not the image of a candidate loop") {}
};
struct ScheduleNotDecreasing : DomainError {
  ScheduleNotDecreasing()
      : DomainError("schedule must be strictly decreasing and positive") {}
};
struct WindowExhausted : DomainError {
  WindowExhausted() : DomainError("certificate indices ran past the window") {}
};

// exit 3, always a bug
struct InternalInvariant : std::logic_error {
  using std::logic_error::logic_error;
};

inline void invariant(bool cond, const char* what) {
  if (!cond) throw InternalInvariant(what);
}

}  // namespace osx
