#pragma once

#include <stdexcept>

namespace permfix {

// A closed form was asked for outside the range where it holds.
class GuardViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two independent evaluation routes disagreed.
class CrossCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace permfix
