#pragma once

#include <stdexcept>

namespace treespan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text: graph/tree/registry files, DIMACS.
struct ParseError : Error {
  using Error::Error;
};

// An operation was called outside its stated contract.
struct PreconditionError : Error {
  using Error::Error;
};

// A spanner provider returned something that is not a spanning tree.
struct ProviderFault : Error {
  using Error::Error;
};

// An enumeration passed its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace treespan
