#pragma once

#include "lamtree/element.hpp"

namespace lamtree {

/// An element of the 2-divisible extension (1/2)Lambda, stored as
/// numerator/denominator with denominator 1 or 2. Canonical: the
/// denominator is 2 only when the numerator is not 2-divisible.
class HalfElement {
 public:
  static HalfElement of(OagElement v) { return HalfElement(std::move(v), 1); }

  /// v/2, canonicalized.
  static HalfElement half_of(OagElement v) {
    if (v.is_two_divisible()) return HalfElement(v.half(), 1);
    return HalfElement(std::move(v), 2);
  }

  static HalfElement zero(const OagDescriptor& d) {
    return of(OagElement::zero(d));
  }

  const OagDescriptor& descriptor() const { return num_.descriptor(); }
  const OagElement& numerator() const { return num_; }
  int denominator() const { return den_; }

  bool in_lambda() const { return den_ == 1; }

  /// The value as a Lambda element; throws when the denominator is 2.
  const OagElement& as_element() const {
    if (den_ != 1)
      throw std::invalid_argument("HalfElement: " + to_string() +
                                  " is not an element of Lambda");
    return num_;
  }

  /// Twice the value, always a Lambda element.
  OagElement doubled() const {
    return den_ == 1 ? scale_int(num_, 2) : num_;
  }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  friend HalfElement operator+(const HalfElement& a, const HalfElement& b) {
    return half_of(a.doubled() + b.doubled());
  }
  friend HalfElement operator-(const HalfElement& a) {
    return HalfElement(-a.num_, a.den_);
  }
  friend HalfElement operator-(const HalfElement& a, const HalfElement& b) {
    return half_of(a.doubled() - b.doubled());
  }

  friend int cmp(const HalfElement& a, const HalfElement& b) {
    return cmp(a.doubled(), b.doubled());
  }
  friend bool operator==(const HalfElement& a, const HalfElement& b) {
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const HalfElement& a, const HalfElement& b) {
    return cmp(a, b) != 0;
  }
  friend bool operator<(const HalfElement& a, const HalfElement& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator<=(const HalfElement& a, const HalfElement& b) {
    return cmp(a, b) <= 0;
  }
  friend bool operator>(const HalfElement& a, const HalfElement& b) {
    return cmp(a, b) > 0;
  }
  friend bool operator>=(const HalfElement& a, const HalfElement& b) {
    return cmp(a, b) >= 0;
  }

  std::string to_string() const {
    if (den_ == 1) return num_.to_string();
    return num_.to_string() + "/2";
  }

 private:
  HalfElement(OagElement n, int d) : num_(std::move(n)), den_(d) {}
  OagElement num_;
  int den_;
};

inline std::ostream& operator<<(std::ostream& os, const HalfElement& h) {
  return os << h.to_string();
}

}  // namespace lamtree
