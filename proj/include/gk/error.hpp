#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gk {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidGenerator : public InvalidArgument {
 public:
  InvalidGenerator(int index, int generator_count)
      : InvalidArgument("generator index " + std::to_string(index) +
                        " outside N_k = {1.." +
                        std::to_string(generator_count) + "}"),
        index_(index) {}

  int index() const noexcept { return index_; }

 private:
  int index_;
};

class ContextMismatch : public Error {
 public:
  ContextMismatch(int k1, int k2)
      : Error("context mismatch: k=" + std::to_string(k1) +
              " vs k=" + std::to_string(k2)) {}
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Coset enumeration could not close the transition table within the radius.
class NonClosure : public BoundExceeded {
 public:
  NonClosure(std::size_t radius, std::size_t frontier, std::size_t cosets)
      : BoundExceeded("coset table not closed within radius " +
                      std::to_string(radius) + " (open frontier " +
                      std::to_string(frontier) + ", cosets so far " +
                      std::to_string(cosets) + ")"),
        radius_(radius),
        frontier_(frontier),
        cosets_(cosets) {}

  std::size_t radius() const noexcept { return radius_; }
  std::size_t frontier_size() const noexcept { return frontier_; }
  std::size_t cosets_found() const noexcept { return cosets_; }

 private:
  std::size_t radius_;
  std::size_t frontier_;
  std::size_t cosets_;
};

// An intersection of parity subgroups has a redundant member.
class ContractibleIntersection : public InvalidArgument {
 public:
  explicit ContractibleIntersection(std::size_t removable)
      : InvalidArgument("intersection is contractible: member " +
                        std::to_string(removable) + " is removable"),
        removable_(removable) {}

  // 1-based position of a member implied by the others.
  std::size_t removable() const noexcept { return removable_; }

 private:
  std::size_t removable_;
};

class UnsupportedIndex : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class QuotientUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace gk
