#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invsg {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A value violates the invariants of its type (bad pairs, ragged
  //! tables, a table that is not an inverse semigroup, ...).
  class StructuralError : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called outside its precondition.
  class ContractError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed input text or file.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! A computed structure failed an internal consistency check.
  class InvariantError : public Error {
   public:
    using Error::Error;
  };

  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what_budget, std::size_t budget)
        : Error(what_budget + " budget of " + std::to_string(budget)
                + " exceeded"),
          _name(what_budget),
          _budget(budget) {}

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t budget() const noexcept {
      return _budget;
    }

   private:
    std::string _name;
    std::size_t _budget;
  };

}  // namespace invsg
