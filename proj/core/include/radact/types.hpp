#ifndef RADACT_TYPES_HPP
#define RADACT_TYPES_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace radact {

// Carrier elements and monoid elements are small indices.
using Elem = std::uint8_t;

// Subsets of a carrier as bitmasks; carriers are capped at kMaxCarrier.
using ElemSet = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

inline constexpr ElemSet singleton(std::size_t a) { return ElemSet{1} << a; }

inline constexpr ElemSet full_set(std::size_t n) {
  return n >= 64 ? ~ElemSet{0} : (ElemSet{1} << n) - 1;
}

inline constexpr bool contains(ElemSet s, std::size_t a) { return (s >> a) & 1U; }

inline constexpr std::size_t cardinality(ElemSet s) {
  return static_cast<std::size_t>(std::popcount(s));
}

inline std::vector<Elem> elements_of(ElemSet s) {
  std::vector<Elem> out;
  out.reserve(cardinality(s));
  while (s != 0) {
    out.push_back(static_cast<Elem>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

enum class ErrorKind {
  NotAssociative,
  BadIdentity,
  IdentityAxiom,
  AssocAxiom,
  BadTable,
  NotDisjoint,
  ActMismatch,
  MonoidMismatch,
  NotEquivariant,
  SizeBound,
  NotInUniverse,
  NotRMono,
  ModeUnavailable,
  BoundExceeded,
  NotKuroshAmitsur,
  UnknownTheorem,
  Registration,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this exception type. The message
// names a witness (offending element, triple, line) where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace radact

#endif  // RADACT_TYPES_HPP
