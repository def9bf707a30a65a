#pragma once

#include "lamtree/common.hpp"

#include <memory>
#include <string>
#include <utility>

namespace lamtree {

enum class OagKind { IntLex, Localized, Laurent, LexPair };

/// Describes one of the four concrete ordered abelian groups:
///   IntLex(n)    -- Z^n with the lexicographic order, first entry dominant
///   Localized(a) -- Z[1/a] inside Q, natural order, a >= 2
///   Laurent      -- finite-support integer Laurent polynomials in t,
///                   ordered by the sign of the highest-degree coefficient
///                   ("t infinitely large")
///   LexPair(L,R) -- L x R with the lexicographic composite order
class OagDescriptor {
 public:
  static OagDescriptor int_lex(int rank) {
    if (rank < 1) throw std::invalid_argument("int_lex rank must be >= 1");
    OagDescriptor d;
    d.kind_ = OagKind::IntLex;
    d.rank_ = rank;
    return d;
  }

  static OagDescriptor localized(const Int& base) {
    if (base < 2) throw std::invalid_argument("localized base must be >= 2");
    OagDescriptor d;
    d.kind_ = OagKind::Localized;
    d.base_ = base;
    return d;
  }

  static OagDescriptor laurent() {
    OagDescriptor d;
    d.kind_ = OagKind::Laurent;
    return d;
  }

  static OagDescriptor lex_pair(OagDescriptor left, OagDescriptor right) {
    OagDescriptor d;
    d.kind_ = OagKind::LexPair;
    d.pair_ = std::make_shared<std::pair<OagDescriptor, OagDescriptor>>(
        std::move(left), std::move(right));
    return d;
  }

  OagKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const Int& base() const { return base_; }
  const OagDescriptor& left() const { return pair_->first; }
  const OagDescriptor& right() const { return pair_->second; }

  friend bool operator==(const OagDescriptor& a, const OagDescriptor& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case OagKind::IntLex: return a.rank_ == b.rank_;
      case OagKind::Localized: return a.base_ == b.base_;
      case OagKind::Laurent: return true;
      case OagKind::LexPair:
        return a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }
  friend bool operator!=(const OagDescriptor& a, const OagDescriptor& b) {
    return !(a == b);
  }

  std::string to_string() const {
    switch (kind_) {
      case OagKind::IntLex: return "Z^" + std::to_string(rank_);
      case OagKind::Localized: return "Z[1/" + base_.str() + "]";
      case OagKind::Laurent: return "Z[t,t^-1]";
      case OagKind::LexPair:
        return "(" + left().to_string() + " x " + right().to_string() + ")";
    }
    return "?";
  }

 private:
  OagDescriptor() = default;
  OagKind kind_ = OagKind::IntLex;
  int rank_ = 1;
  Int base_ = 0;
  std::shared_ptr<const std::pair<OagDescriptor, OagDescriptor>> pair_;
};

inline void require_same_descriptor(const OagDescriptor& a,
                                    const OagDescriptor& b,
                                    const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": descriptor mismatch (" +
                                a.to_string() + " vs " + b.to_string() + ")");
}

}  // namespace lamtree
