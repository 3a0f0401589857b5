#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bracerep/errors.hpp"
#include "bracerep/options.hpp"

namespace bracerep {

/// Element of a product of residue rings; at most four coordinates.
/// Unused trailing coordinates stay zero, so comparisons are well defined
/// across elements of the same group.
struct GroupElement {
  std::array<int, 4> c{0, 0, 0, 0};
  int arity = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

GroupElement elem(std::initializer_list<int> coords);
GroupElement pair_elem(int n, int m);
/// Concatenate coordinates, e.g. ((n,m),(s,t)) as a 4-tuple.
GroupElement concat(const GroupElement& a, const GroupElement& b);
/// First k coordinates.
GroupElement head(const GroupElement& x, int k);
/// Coordinates from position k on.
GroupElement tail(const GroupElement& x, int k);
std::string to_string(const GroupElement& x);

/// x mod m normalized into [0, m).
inline int mod_norm(long x, int m) {
  int r = static_cast<int>(x % m);
  return r < 0 ? r + m : r;
}

/// Finite group on the full product of residue rings given by `moduli`,
/// with closed-form multiplication and inverse. No multiplication table is
/// materialized; elements are ranked lexicographically (mixed radix).
///
/// Construction validates group laws: identity/inverse on every element,
/// closure on all pairs up to the element cap, associativity exhaustively
/// up to order 100 and on seeded random triples above.
class FiniteGroup {
 public:
  using MulFn = std::function<GroupElement(const GroupElement&, const GroupElement&)>;
  using InvFn = std::function<GroupElement(const GroupElement&)>;

  FiniteGroup(std::string name, std::vector<int> moduli, MulFn mul, InvFn inv,
              GroupElement identity, const Options& opt = {});

  const std::string& name() const { return name_; }
  const std::vector<int>& moduli() const { return moduli_; }
  long order() const { return order_; }
  const GroupElement& identity() const { return identity_; }

  GroupElement mul(const GroupElement& a, const GroupElement& b) const { return mul_(a, b); }
  GroupElement inv(const GroupElement& a) const { return inv_(a); }
  /// a x a^{-1}
  GroupElement conj(const GroupElement& a, const GroupElement& x) const {
    return mul_(mul_(a, x), inv_(a));
  }

  bool contains(const GroupElement& x) const;
  /// Lexicographic rank of x; throws InvalidElementError if out of range.
  long index_of(const GroupElement& x) const;
  GroupElement element_at(long idx) const;
  /// All elements in lexicographic order.
  const std::vector<GroupElement>& elements() const { return elements_; }

  /// Canonical generating set: greedily extends by the smallest element not
  /// yet generated. Small (<= log2 of the order) and deterministic.
  const std::vector<GroupElement>& generators() const { return generators_; }

  int element_order(const GroupElement& x) const;
  bool is_abelian() const;

 private:
  std::string name_;
  std::vector<int> moduli_;
  std::vector<long> strides_;
  long order_ = 0;
  MulFn mul_;
  InvFn inv_;
  GroupElement identity_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;

  void validate(const Options& opt) const;
  void compute_generators();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::string name, std::vector<int> moduli, FiniteGroup::MulFn mul,
                    FiniteGroup::InvFn inv, GroupElement identity, const Options& opt = {});

/// Cyclic group Z_n on one coordinate.
GroupPtr cyclic_group(int n, const Options& opt = {});
/// Direct product Z_m x Z_n on two coordinates.
GroupPtr direct_product_group(int m, int n, const Options& opt = {});

/// Smallest subset of G closed under multiplication containing `gens` and
/// the identity (finite, so closure under products suffices).
std::set<GroupElement> subgroup_generated(const FiniteGroup& G, const std::set<GroupElement>& gens);

/// Subgroup generated by all commutators a b a^-1 b^-1.
std::set<GroupElement> commutator_subgroup(const FiniteGroup& G);

/// Partition of G into conjugation orbits. Each class is computed as an
/// orbit under conjugation by the canonical generating set; classes are
/// sorted and listed by their smallest element.
std::vector<std::vector<GroupElement>> conjugacy_classes(const FiniteGroup& G);

long center_size(const FiniteGroup& G);

/// Map between two groups, stored as a dense index table.
class GroupMap {
 public:
  GroupMap(GroupPtr source, GroupPtr target, std::vector<long> image_by_index);
  static GroupMap from_function(GroupPtr source, GroupPtr target,
                                const std::function<GroupElement(const GroupElement&)>& f);

  const FiniteGroup& source() const { return *source_; }
  const FiniteGroup& target() const { return *target_; }
  GroupPtr source_ptr() const { return source_; }
  GroupPtr target_ptr() const { return target_; }
  const std::vector<long>& image_table() const { return image_; }

  GroupElement apply(const GroupElement& x) const;
  bool is_bijective() const;
  /// Inverse map; throws InternalError unless bijective.
  GroupMap inverse() const;
  /// Composition: first this, then `next`.
  GroupMap then(const GroupMap& next) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<long> image_;
};

/// True iff f respects multiplication. Exhaustive over all pairs when
/// |source| <= opt.element_cap, otherwise all generator pairs plus seeded
/// random pairs.
bool is_homomorphism(const GroupMap& f, const Options& opt = {});
bool is_isomorphism(const GroupMap& f, const Options& opt = {});

/// Action of G on H: (g, h) -> image of h under the automorphism for g.
using ActionFn = std::function<GroupElement(const GroupElement&, const GroupElement&)>;

/// H x|_action G with multiplication (h1,g1)(h2,g2) = (h1 act_{g1}(h2), g1 g2).
/// Validates that action(g) is an automorphism of H for every generator g and
/// that the action is a homomorphism into Aut(H) (exhaustive while the loop
/// stays under ~10^8 basic steps, generator-based above).
GroupPtr semidirect_product(GroupPtr H, GroupPtr G, const ActionFn& action, std::string name,
                            const Options& opt = {});

/// Cheap isomorphism invariants used to reject non-isomorphic pairs.
struct GroupFingerprint {
  long order = 0;
  std::vector<std::pair<int, long>> order_histogram;  // (element order, count)
  long commutator_order = 0;
  long class_count = 0;
  long center = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const FiniteGroup& G);

/// Verified isomorphism G1 -> G2, or nullopt if none exists. Prefiltered by
/// fingerprint; otherwise backtracking over images of a minimal generating
/// set, restricted to order- and class-size-compatible candidates.
/// Throws CapacityError when |G1| exceeds opt.iso_cap.
std::optional<GroupMap> brute_force_isomorphic(GroupPtr G1, GroupPtr G2, const Options& opt = {});

}  // namespace bracerep
