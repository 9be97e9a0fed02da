#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace comod {

/// Dense element id. Every poset in the library is on {0, ..., n-1}.
using Id = std::uint32_t;

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleDetected : public Error {
 public:
  CycleDetected() : Error("cover relations contain a directed cycle") {}
};

class BadId : public Error {
 public:
  explicit BadId(std::size_t id) : Error("element id out of range: " + std::to_string(id)), id(id) {}
  std::size_t id;
};

class NotAPartialOrder : public Error {
 public:
  using Error::Error;
};

class NotALattice : public Error {
 public:
  NotALattice(Id x, Id y, std::string reason)
      : Error("not a lattice: elements " + std::to_string(x) + ", " + std::to_string(y) + ": " + reason),
        x(x), y(y), reason(std::move(reason)) {}
  Id x, y;
  std::string reason;
};

class NotComparable : public Error {
 public:
  NotComparable(Id x, Id y)
      : Error("elements " + std::to_string(x) + " and " + std::to_string(y) + " are not ordered x <= y"), x(x), y(y) {}
  Id x, y;
};

class NotBounded : public Error {
 public:
  NotBounded() : Error("poset has no unique bottom and top") {}
};

class DegenerateBoundedPair : public Error {
 public:
  DegenerateBoundedPair() : Error("bottom equals top; the order complex is void") {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class NotACoatom : public Error {
 public:
  explicit NotACoatom(Id m) : Error("element " + std::to_string(m) + " is not a coatom"), element(m) {}
  Id element;
};

class NotComodernistic : public Error {
 public:
  NotComodernistic(Id lo, Id hi)
      : Error("interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "] has no left-modular coatom"),
        lo(lo), hi(hi) {}
  Id lo, hi;
};

class NotAnMChain : public Error {
 public:
  using Error::Error;
};

class NotCompatible : public Error {
 public:
  NotCompatible(Id x, Id y)
      : Error("elements " + std::to_string(x) + " and " + std::to_string(y) + " are not compatible"), x(x), y(y) {}
  Id x, y;
};

class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::string witness)
      : Error("not a group: " + axiom + " fails at " + witness), axiom(std::move(axiom)), witness(std::move(witness)) {}
  std::string axiom, witness;
};

class NotASubgroup : public Error {
 public:
  NotASubgroup() : Error("element set is not a subgroup") {}
};

class NotSolvable : public Error {
 public:
  NotSolvable() : Error("group is not solvable") {}
};

class BadPermutation : public Error {
 public:
  using Error::Error;
};

}  // namespace comod
