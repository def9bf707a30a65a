#pragma once

#include "lamtree/descriptor.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <variant>
#include <vector>

namespace lamtree {

/// An element of a concrete ordered abelian group, held in canonical form:
/// fractions reduced with base-smooth denominator, Laurent coefficient maps
/// free of zero entries, vectors sized to the rank.
class OagElement {
 public:
  using IntVec = std::vector<Int>;
  using Coeffs = std::map<long, Int>;  // degree -> nonzero coefficient
  using PairPtr = std::shared_ptr<const std::pair<OagElement, OagElement>>;

  static OagElement zero(const OagDescriptor& d) {
    switch (d.kind()) {
      case OagKind::IntLex:
        return OagElement(d, IntVec(static_cast<size_t>(d.rank()), Int(0)));
      case OagKind::Localized: return OagElement(d, Rat(0));
      case OagKind::Laurent: return OagElement(d, Coeffs{});
      case OagKind::LexPair:
        return pair(d, zero(d.left()), zero(d.right()));
    }
    throw std::logic_error("unreachable");
  }

  static OagElement from_ints(const OagDescriptor& d, IntVec v) {
    if (d.kind() != OagKind::IntLex)
      throw std::invalid_argument("from_ints: descriptor is not int_lex");
    if (v.size() != static_cast<size_t>(d.rank()))
      throw std::invalid_argument("from_ints: wrong vector length");
    return OagElement(d, std::move(v));
  }

  static OagElement from_rational(const OagDescriptor& d, Rat r) {
    if (d.kind() != OagKind::Localized)
      throw std::invalid_argument("from_rational: descriptor is not localized");
    if (!is_smooth_over(boost::multiprecision::denominator(r), d.base()))
      throw std::invalid_argument("from_rational: " + r.str() +
                                  " is not an element of " + d.to_string());
    return OagElement(d, std::move(r));
  }

  static OagElement from_coeffs(const OagDescriptor& d, Coeffs c) {
    if (d.kind() != OagKind::Laurent)
      throw std::invalid_argument("from_coeffs: descriptor is not laurent");
    for (auto it = c.begin(); it != c.end();)
      it = (it->second == 0) ? c.erase(it) : std::next(it);
    return OagElement(d, std::move(c));
  }

  static OagElement laurent_term(const Int& coeff, long degree) {
    Coeffs c;
    if (coeff != 0) c[degree] = coeff;
    return OagElement(OagDescriptor::laurent(), std::move(c));
  }

  static OagElement pair(const OagDescriptor& d, OagElement left,
                         OagElement right) {
    if (d.kind() != OagKind::LexPair)
      throw std::invalid_argument("pair: descriptor is not lex_pair");
    require_same_descriptor(d.left(), left.descriptor(), "pair/left");
    require_same_descriptor(d.right(), right.descriptor(), "pair/right");
    return OagElement(d, std::make_shared<std::pair<OagElement, OagElement>>(
                             std::move(left), std::move(right)));
  }

  const OagDescriptor& descriptor() const { return desc_; }
  const IntVec& vec() const { return std::get<IntVec>(payload_); }
  const Rat& rat() const { return std::get<Rat>(payload_); }
  const Coeffs& coeffs() const { return std::get<Coeffs>(payload_); }
  const OagElement& first() const { return std::get<PairPtr>(payload_)->first; }
  const OagElement& second() const {
    return std::get<PairPtr>(payload_)->second;
  }

  bool is_zero() const {
    switch (desc_.kind()) {
      case OagKind::IntLex:
        for (const auto& x : vec())
          if (x != 0) return false;
        return true;
      case OagKind::Localized: return rat() == 0;
      case OagKind::Laurent: return coeffs().empty();
      case OagKind::LexPair: return first().is_zero() && second().is_zero();
    }
    return false;
  }

  friend OagElement operator+(const OagElement& a, const OagElement& b) {
    require_same_descriptor(a.desc_, b.desc_, "add");
    switch (a.desc_.kind()) {
      case OagKind::IntLex: {
        IntVec v = a.vec();
        const IntVec& w = b.vec();
        for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        return OagElement(a.desc_, std::move(v));
      }
      case OagKind::Localized:
        return OagElement(a.desc_, Rat(a.rat() + b.rat()));
      case OagKind::Laurent: {
        Coeffs c = a.coeffs();
        for (const auto& [deg, coef] : b.coeffs()) {
          auto [it, inserted] = c.emplace(deg, coef);
          if (!inserted) {
            it->second += coef;
            if (it->second == 0) c.erase(it);
          }
        }
        return OagElement(a.desc_, std::move(c));
      }
      case OagKind::LexPair:
        return pair(a.desc_, a.first() + b.first(), a.second() + b.second());
    }
    throw std::logic_error("unreachable");
  }

  friend OagElement operator-(const OagElement& a) {
    switch (a.desc_.kind()) {
      case OagKind::IntLex: {
        IntVec v = a.vec();
        for (auto& x : v) x = -x;
        return OagElement(a.desc_, std::move(v));
      }
      case OagKind::Localized: return OagElement(a.desc_, Rat(-a.rat()));
      case OagKind::Laurent: {
        Coeffs c = a.coeffs();
        for (auto& [deg, coef] : c) coef = -coef;
        return OagElement(a.desc_, std::move(c));
      }
      case OagKind::LexPair:
        return pair(a.desc_, -a.first(), -a.second());
    }
    throw std::logic_error("unreachable");
  }

  friend OagElement operator-(const OagElement& a, const OagElement& b) {
    return a + (-b);
  }

  /// Integer scalar multiple k*x (the Z-module action).
  friend OagElement scale_int(const OagElement& a, const Int& k) {
    switch (a.desc_.kind()) {
      case OagKind::IntLex: {
        IntVec v = a.vec();
        for (auto& x : v) x *= k;
        return OagElement(a.desc_, std::move(v));
      }
      case OagKind::Localized: return OagElement(a.desc_, Rat(a.rat() * k));
      case OagKind::Laurent: {
        if (k == 0) return zero(a.desc_);
        Coeffs c = a.coeffs();
        for (auto& [deg, coef] : c) coef *= k;
        return OagElement(a.desc_, std::move(c));
      }
      case OagKind::LexPair:
        return pair(a.desc_, scale_int(a.first(), k),
                    scale_int(a.second(), k));
    }
    throw std::logic_error("unreachable");
  }

  /// Three-way comparison in the group order: -1, 0, +1.
  friend int cmp(const OagElement& a, const OagElement& b) {
    require_same_descriptor(a.desc_, b.desc_, "cmp");
    switch (a.desc_.kind()) {
      case OagKind::IntLex: {
        const IntVec& v = a.vec();
        const IntVec& w = b.vec();
        for (size_t i = 0; i < v.size(); ++i) {
          if (v[i] < w[i]) return -1;
          if (v[i] > w[i]) return 1;
        }
        return 0;
      }
      case OagKind::Localized:
        return a.rat() < b.rat() ? -1 : (a.rat() == b.rat() ? 0 : 1);
      case OagKind::Laurent: {
        // sign of a-b is the sign of the leading coefficient
        auto ita = a.coeffs().rbegin(), enda = a.coeffs().rend();
        auto itb = b.coeffs().rbegin(), endb = b.coeffs().rend();
        while (ita != enda || itb != endb) {
          long da = (ita != enda) ? ita->first
                                  : std::numeric_limits<long>::min();
          long db = (itb != endb) ? itb->first
                                  : std::numeric_limits<long>::min();
          if (da > db) return ita->second > 0 ? 1 : -1;
          if (db > da) return itb->second > 0 ? -1 : 1;
          if (ita->second != itb->second)
            return ita->second > itb->second ? 1 : -1;
          ++ita;
          ++itb;
        }
        return 0;
      }
      case OagKind::LexPair: {
        int c = cmp(a.first(), b.first());
        if (c != 0) return c;
        return cmp(a.second(), b.second());
      }
    }
    throw std::logic_error("unreachable");
  }

  friend bool operator==(const OagElement& a, const OagElement& b) {
    return a.desc_ == b.desc_ && cmp(a, b) == 0;
  }
  friend bool operator!=(const OagElement& a, const OagElement& b) {
    return !(a == b);
  }
  friend bool operator<(const OagElement& a, const OagElement& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator<=(const OagElement& a, const OagElement& b) {
    return cmp(a, b) <= 0;
  }
  friend bool operator>(const OagElement& a, const OagElement& b) {
    return cmp(a, b) > 0;
  }
  friend bool operator>=(const OagElement& a, const OagElement& b) {
    return cmp(a, b) >= 0;
  }

  int sign() const {
    OagElement z = zero(desc_);
    return cmp(*this, z);
  }

  friend OagElement abs(const OagElement& a) {
    return a.sign() < 0 ? -a : a;
  }

  bool is_two_divisible() const {
    switch (desc_.kind()) {
      case OagKind::IntLex:
        for (const auto& x : vec())
          if (x % 2 != 0) return false;
        return true;
      case OagKind::Localized:
        if (desc_.base() % 2 == 0) return true;
        return boost::multiprecision::numerator(rat()) % 2 == 0;
      case OagKind::Laurent:
        for (const auto& [deg, coef] : coeffs())
          if (coef % 2 != 0) return false;
        return true;
      case OagKind::LexPair:
        return first().is_two_divisible() && second().is_two_divisible();
    }
    return false;
  }

  /// Exact x/2; throws unless is_two_divisible().
  OagElement half() const {
    switch (desc_.kind()) {
      case OagKind::IntLex: {
        IntVec v = vec();
        for (auto& x : v) {
          if (x % 2 != 0) throw std::invalid_argument("half: not 2-divisible");
          x /= 2;
        }
        return OagElement(desc_, std::move(v));
      }
      case OagKind::Localized: {
        Rat r = rat() / 2;
        if (!is_smooth_over(boost::multiprecision::denominator(r),
                            desc_.base()))
          throw std::invalid_argument("half: not 2-divisible");
        return OagElement(desc_, std::move(r));
      }
      case OagKind::Laurent: {
        Coeffs c = coeffs();
        for (auto& [deg, coef] : c) {
          if (coef % 2 != 0) throw std::invalid_argument("half: not 2-divisible");
          coef /= 2;
        }
        return OagElement(desc_, std::move(c));
      }
      case OagKind::LexPair:
        return pair(desc_, first().half(), second().half());
    }
    throw std::logic_error("unreachable");
  }

  std::string to_string() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

  void print(std::ostream& os) const {
    switch (desc_.kind()) {
      case OagKind::IntLex: {
        os << "(";
        const IntVec& v = vec();
        for (size_t i = 0; i < v.size(); ++i) {
          if (i) os << ",";
          os << v[i];
        }
        os << ")";
        return;
      }
      case OagKind::Localized: os << rat(); return;
      case OagKind::Laurent: {
        if (coeffs().empty()) {
          os << "0";
          return;
        }
        bool leading = true;
        for (auto it = coeffs().rbegin(); it != coeffs().rend(); ++it) {
          const Int& c = it->second;
          if (leading) {
            if (c < 0) os << "-";
          } else {
            os << (c < 0 ? " - " : " + ");
          }
          Int a = boost::multiprecision::abs(c);
          if (a != 1 || it->first == 0) os << a;
          if (it->first != 0) {
            if (a != 1) os << "*";
            os << "t";
            if (it->first != 1) os << "^" << it->first;
          }
          leading = false;
        }
        return;
      }
      case OagKind::LexPair:
        os << "(";
        first().print(os);
        os << "; ";
        second().print(os);
        os << ")";
        return;
    }
  }

 private:
  using Payload = std::variant<IntVec, Rat, Coeffs, PairPtr>;

  OagElement(OagDescriptor d, IntVec v)
      : desc_(std::move(d)), payload_(std::move(v)) {}
  OagElement(OagDescriptor d, Rat r)
      : desc_(std::move(d)), payload_(std::move(r)) {}
  OagElement(OagDescriptor d, Coeffs c)
      : desc_(std::move(d)), payload_(std::move(c)) {}
  OagElement(OagDescriptor d, PairPtr p)
      : desc_(std::move(d)), payload_(std::move(p)) {}

  OagDescriptor desc_;
  Payload payload_;
};

inline std::ostream& operator<<(std::ostream& os, const OagElement& e) {
  e.print(os);
  return os;
}

}  // namespace lamtree
