#ifndef PHILAB_ERRORS_HPP_
#define PHILAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace philab {

// Numerical failure of an extraction or solver (distinct from a caller
// precondition violation, which is std::domain_error).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Count distribution could not be enumerated to the coverage target before
// hitting the hard support cap (infinite-mean counts do this).
class heavy_tail_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace philab

#endif  // PHILAB_ERRORS_HPP_
