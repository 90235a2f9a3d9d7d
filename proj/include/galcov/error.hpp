#ifndef GALCOV_ERROR_HPP_
#define GALCOV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace galcov {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Parameter outside the admissible range (grid sizes, ids, ...).
  class RangeError : public Error {
   public:
    using Error::Error;
  };

  // A configured work or size budget was exhausted.
  class BudgetError : public Error {
   public:
    BudgetError(std::string budget, std::string const& what)
        : Error(what), _budget(std::move(budget)) {}

    std::string const& budget() const noexcept {
      return _budget;
    }

   private:
    std::string _budget;
  };

  // Malformed input: unknown format tags, bad JSON, alphabet mismatches.
  class InputError : public Error {
   public:
    using Error::Error;
  };

}  // namespace galcov

#endif  // GALCOV_ERROR_HPP_
