// Error hierarchy shared across the library.

#ifndef CBX_ERRORS_HPP_
#define CBX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cbx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad CoNLL-U line, bad TSV record, bad JSON item.
// Messages carry the line number where it is known.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input that parses but violates a structural requirement: a head index
// out of range, a cyclic taxonomy, more than one sentence root.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// API misuse by the caller: empty input set, unknown id, zero totals.
class UsageError : public Error {
 public:
  using Error::Error;
};

// I/O and serialization failures: unreadable files, bad magic, truncation.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cbx

#endif  // CBX_ERRORS_HPP_
