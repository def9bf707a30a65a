#pragma once

#include "lamtree/half.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace lamtree {

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix identity_matrix(int n) {
  IntMatrix m(static_cast<size_t>(n),
              std::vector<Int>(static_cast<size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  IntMatrix r(n, std::vector<Int>(m, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

/// An order-preserving group automorphism of a concrete ordered abelian
/// group, in normal form:
///   UnipotentInt   -- unit upper-triangular integer matrix on Z^n;
///                     elements are row vectors acting as x -> x*M, so the
///                     strictly-upper entries feed dominant coordinates into
///                     subordinate ones
///   PositiveScale  -- multiplication by a positive unit of Z[1/a]
///   MonomialShift  -- multiplication by t^k on Laurent polynomials
///   Triangular     -- (l, r) -> (alpha_left(l), alpha_right(r) + hom(l)) on
///                     a lexicographic pair; hom is an integer-linear rule
///                     given by the images of the left factor's basis
class OagAutomorphism {
 public:
  struct TriangularData {
    std::shared_ptr<const OagAutomorphism> left;
    std::shared_ptr<const OagAutomorphism> right;
    std::vector<OagElement> hom;  // empty means the zero homomorphism
  };
  using TriPtr = std::shared_ptr<const TriangularData>;

  static OagAutomorphism identity(const OagDescriptor& d) {
    switch (d.kind()) {
      case OagKind::IntLex: return unipotent(d, identity_matrix(d.rank()));
      case OagKind::Localized: return scale(d, Rat(1));
      case OagKind::Laurent: return monomial_shift(0);
      case OagKind::LexPair:
        return triangular(d, identity(d.left()), identity(d.right()), {});
    }
    throw std::logic_error("unreachable");
  }

  static OagAutomorphism unipotent(const OagDescriptor& d, IntMatrix m) {
    if (d.kind() != OagKind::IntLex)
      throw std::invalid_argument("unipotent: descriptor is not int_lex");
    size_t n = static_cast<size_t>(d.rank());
    if (m.size() != n)
      throw std::invalid_argument("unipotent: wrong matrix size");
    for (size_t i = 0; i < n; ++i) {
      if (m[i].size() != n)
        throw std::invalid_argument("unipotent: matrix is not square");
      if (m[i][i] != 1)
        throw std::invalid_argument("unipotent: diagonal entries must be 1");
      for (size_t j = 0; j < i; ++j)
        if (m[i][j] != 0)
          throw std::invalid_argument(
              "unipotent: entries below the diagonal must be 0");
    }
    return OagAutomorphism(d, std::move(m));
  }

  static OagAutomorphism scale(const OagDescriptor& d, Rat factor) {
    if (d.kind() != OagKind::Localized)
      throw std::invalid_argument("scale: descriptor is not localized");
    if (factor <= 0)
      throw std::invalid_argument("scale: factor must be positive");
    if (!is_smooth_over(boost::multiprecision::numerator(factor), d.base()) ||
        !is_smooth_over(boost::multiprecision::denominator(factor), d.base()))
      throw std::invalid_argument("scale: factor " + factor.str() +
                                  " is not a unit of " + d.to_string());
    return OagAutomorphism(d, std::move(factor));
  }

  static OagAutomorphism monomial_shift(long k) {
    return OagAutomorphism(OagDescriptor::laurent(), k);
  }

  static OagAutomorphism triangular(const OagDescriptor& d,
                                    OagAutomorphism left,
                                    OagAutomorphism right,
                                    std::vector<OagElement> hom) {
    if (d.kind() != OagKind::LexPair)
      throw std::invalid_argument("triangular: descriptor is not lex_pair");
    require_same_descriptor(d.left(), left.descriptor(), "triangular/left");
    require_same_descriptor(d.right(), right.descriptor(), "triangular/right");
    bool all_zero = true;
    for (const auto& img : hom) {
      require_same_descriptor(d.right(), img.descriptor(), "triangular/hom");
      if (!img.is_zero()) all_zero = false;
    }
    if (all_zero) hom.clear();
    if (!hom.empty()) {
      if (d.left().kind() != OagKind::IntLex)
        throw std::invalid_argument(
            "triangular: nonzero hom requires an int_lex left factor");
      if (hom.size() != static_cast<size_t>(d.left().rank()))
        throw std::invalid_argument(
            "triangular: hom must list one image per left basis vector");
    }
    return OagAutomorphism(
        d, std::make_shared<TriangularData>(TriangularData{
               std::make_shared<const OagAutomorphism>(std::move(left)),
               std::make_shared<const OagAutomorphism>(std::move(right)),
               std::move(hom)}));
  }

  const OagDescriptor& descriptor() const { return desc_; }

  const IntMatrix& matrix() const { return std::get<IntMatrix>(payload_); }
  const Rat& factor() const { return std::get<Rat>(payload_); }
  long shift() const { return std::get<long>(payload_); }
  const TriangularData& tri() const { return *std::get<TriPtr>(payload_); }
  const OagAutomorphism& tri_left() const { return *tri().left; }
  const OagAutomorphism& tri_right() const { return *tri().right; }

  OagElement apply(const OagElement& x) const {
    require_same_descriptor(desc_, x.descriptor(), "apply_aut");
    switch (desc_.kind()) {
      case OagKind::IntLex: {
        const auto& m = matrix();
        size_t n = m.size();
        OagElement::IntVec out(n, Int(0));
        const auto& v = x.vec();
        for (size_t i = 0; i < n; ++i) {
          if (v[i] == 0) continue;
          for (size_t j = i; j < n; ++j) out[j] += v[i] * m[i][j];
        }
        return OagElement::from_ints(desc_, std::move(out));
      }
      case OagKind::Localized:
        return OagElement::from_rational(desc_, Rat(x.rat() * factor()));
      case OagKind::Laurent: {
        OagElement::Coeffs c;
        for (const auto& [deg, coef] : x.coeffs()) c[deg + shift()] = coef;
        return OagElement::from_coeffs(desc_, std::move(c));
      }
      case OagKind::LexPair: {
        const auto& t = tri();
        OagElement l = t.left->apply(x.first());
        OagElement r = t.right->apply(x.second());
        if (!t.hom.empty()) {
          const auto& lv = x.first().vec();
          for (size_t i = 0; i < t.hom.size(); ++i)
            if (lv[i] != 0) r = r + scale_int(t.hom[i], lv[i]);
        }
        return OagElement::pair(desc_, std::move(l), std::move(r));
      }
    }
    throw std::logic_error("unreachable");
  }

  HalfElement apply(const HalfElement& h) const {
    OagElement img = apply(h.numerator());
    return h.denominator() == 1 ? HalfElement::of(std::move(img))
                                : HalfElement::half_of(std::move(img));
  }

  /// compose(a, b) applies b first: (a o b)(x) = a(b(x)).
  friend OagAutomorphism compose(const OagAutomorphism& a,
                                 const OagAutomorphism& b) {
    require_same_descriptor(a.desc_, b.desc_, "compose_aut");
    switch (a.desc_.kind()) {
      case OagKind::IntLex:
        // row-vector action: x*(Mb*Ma)
        return OagAutomorphism(a.desc_, mat_mul(b.matrix(), a.matrix()));
      case OagKind::Localized:
        return OagAutomorphism(a.desc_, Rat(a.factor() * b.factor()));
      case OagKind::Laurent:
        return OagAutomorphism(a.desc_, a.shift() + b.shift());
      case OagKind::LexPair: {
        const auto& ta = a.tri();
        const auto& tb = b.tri();
        std::vector<OagElement> hom;
        if (!ta.hom.empty() || !tb.hom.empty()) {
          int n = a.desc_.left().rank();
          hom.reserve(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i) {
            OagElement img = OagElement::zero(a.desc_.right());
            if (!tb.hom.empty()) img = img + ta.right->apply(tb.hom[static_cast<size_t>(i)]);
            if (!ta.hom.empty()) {
              // a.hom applied to b.left(e_i) = row i of b's left matrix
              const auto& row = tb.left->matrix()[static_cast<size_t>(i)];
              for (size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) img = img + scale_int(ta.hom[j], row[j]);
            }
            hom.push_back(std::move(img));
          }
        }
        return triangular(a.desc_, compose(*ta.left, *tb.left),
                          compose(*ta.right, *tb.right), std::move(hom));
      }
    }
    throw std::logic_error("unreachable");
  }

  OagAutomorphism inverse() const {
    switch (desc_.kind()) {
      case OagKind::IntLex: {
        // (I+N)^-1 = sum (-N)^k, N strictly upper triangular
        size_t n = matrix().size();
        IntMatrix neg_n(n, std::vector<Int>(n, Int(0)));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = i + 1; j < n; ++j) neg_n[i][j] = -matrix()[i][j];
        IntMatrix acc = identity_matrix(static_cast<int>(n));
        IntMatrix pw = identity_matrix(static_cast<int>(n));
        for (size_t k = 1; k < n; ++k) {
          pw = mat_mul(pw, neg_n);
          for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) acc[i][j] += pw[i][j];
        }
        return OagAutomorphism(desc_, std::move(acc));
      }
      case OagKind::Localized:
        return OagAutomorphism(desc_, Rat(1 / factor()));
      case OagKind::Laurent: return OagAutomorphism(desc_, -shift());
      case OagKind::LexPair: {
        const auto& t = tri();
        OagAutomorphism li = t.left->inverse();
        OagAutomorphism ri = t.right->inverse();
        std::vector<OagElement> hom;
        if (!t.hom.empty()) {
          int n = desc_.left().rank();
          hom.reserve(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i) {
            const auto& row = li.matrix()[static_cast<size_t>(i)];
            OagElement img = OagElement::zero(desc_.right());
            for (size_t j = 0; j < row.size(); ++j)
              if (row[j] != 0) img = img + scale_int(t.hom[j], row[j]);
            hom.push_back(-ri.apply(img));
          }
        }
        return triangular(desc_, std::move(li), std::move(ri), std::move(hom));
      }
    }
    throw std::logic_error("unreachable");
  }

  bool is_identity() const {
    switch (desc_.kind()) {
      case OagKind::IntLex: {
        const auto& m = matrix();
        for (size_t i = 0; i < m.size(); ++i)
          for (size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != 0) return false;
        return true;
      }
      case OagKind::Localized: return factor() == 1;
      case OagKind::Laurent: return shift() == 0;
      case OagKind::LexPair: {
        const auto& t = tri();
        return t.hom.empty() && t.left->is_identity() && t.right->is_identity();
      }
    }
    return false;
  }

  friend bool operator==(const OagAutomorphism& a, const OagAutomorphism& b) {
    if (a.desc_ != b.desc_) return false;
    switch (a.desc_.kind()) {
      case OagKind::IntLex: return a.matrix() == b.matrix();
      case OagKind::Localized: return a.factor() == b.factor();
      case OagKind::Laurent: return a.shift() == b.shift();
      case OagKind::LexPair: {
        const auto& ta = a.tri();
        const auto& tb = b.tri();
        if (!(*ta.left == *tb.left) || !(*ta.right == *tb.right)) return false;
        size_t n = std::max(ta.hom.size(), tb.hom.size());
        for (size_t i = 0; i < n; ++i) {
          OagElement xa = i < ta.hom.size()
                              ? ta.hom[i]
                              : OagElement::zero(a.desc_.right());
          OagElement xb = i < tb.hom.size()
                              ? tb.hom[i]
                              : OagElement::zero(a.desc_.right());
          if (xa != xb) return false;
        }
        return true;
      }
    }
    return false;
  }
  friend bool operator!=(const OagAutomorphism& a, const OagAutomorphism& b) {
    return !(a == b);
  }

  std::string to_string() const {
    switch (desc_.kind()) {
      case OagKind::IntLex: {
        std::string s = "[";
        for (size_t i = 0; i < matrix().size(); ++i) {
          if (i) s += "; ";
          for (size_t j = 0; j < matrix().size(); ++j) {
            if (j) s += " ";
            s += matrix()[i][j].str();
          }
        }
        return s + "]";
      }
      case OagKind::Localized: return "*" + factor().str();
      case OagKind::Laurent: return "*t^" + std::to_string(shift());
      case OagKind::LexPair: {
        const auto& t = tri();
        std::string s =
            "(" + t.left->to_string() + ", " + t.right->to_string();
        if (!t.hom.empty()) {
          s += ", hom=[";
          for (size_t i = 0; i < t.hom.size(); ++i) {
            if (i) s += ", ";
            s += t.hom[i].to_string();
          }
          s += "]";
        }
        return s + ")";
      }
    }
    return "?";
  }

 private:
  using Payload = std::variant<IntMatrix, Rat, long, TriPtr>;
  OagAutomorphism(OagDescriptor d, IntMatrix m)
      : desc_(std::move(d)), payload_(std::move(m)) {}
  OagAutomorphism(OagDescriptor d, Rat f)
      : desc_(std::move(d)), payload_(std::move(f)) {}
  OagAutomorphism(OagDescriptor d, long k)
      : desc_(std::move(d)), payload_(k) {}
  OagAutomorphism(OagDescriptor d, TriPtr t)
      : desc_(std::move(d)), payload_(std::move(t)) {}

  OagDescriptor desc_;
  Payload payload_;
};

}  // namespace lamtree
