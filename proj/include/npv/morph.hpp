#ifndef NPV_MORPH_HPP
#define NPV_MORPH_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "npv/liealg.hpp"
#include "npv/rfunc.hpp"

namespace npv {

/// Point on the projective line: a field element or infinity.
using ExtPoint = std::optional<FieldElement>;  // nullopt = infinity

/// t -> (p t + q) / (r t + s), normalized so the first nonzero of (p, q, r, s)
/// equals 1, making equality testing projective-scale free.
class MobiusMap {
public:
    MobiusMap(FieldElement p, FieldElement q, FieldElement r, FieldElement s);

    static MobiusMap identity(const FieldSpecPtr& spec);
    // The unique map sending the ordered triple (z1, z2, z3) to (w1, w2, w3);
    // points may be infinity, but each triple must consist of distinct points.
    static MobiusMap through_triples(const std::array<ExtPoint, 3>& src,
                                     const std::array<ExtPoint, 3>& dst,
                                     const FieldSpecPtr& spec);

    ExtPoint apply(const ExtPoint& z) const;
    MobiusMap inverse() const;
    friend MobiusMap compose(const MobiusMap& f, const MobiusMap& g);  // f after g

    const FieldElement& p() const { return p_; }
    const FieldElement& q() const { return q_; }
    const FieldElement& r() const { return r_; }
    const FieldElement& s() const { return s_; }
    bool is_affine() const { return r_.is_zero(); }

    friend bool operator==(const MobiusMap& a, const MobiusMap& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_;
    }
    friend bool operator!=(const MobiusMap& a, const MobiusMap& b) { return !(a == b); }

private:
    void normalize();
    FieldElement p_, q_, r_, s_;
};

enum class MorphKind { First, Second };

/// A ring/Lie isomorphism realized by a Moebius map. `map` carries the marked
/// set of the source onto the marked set of the target; the induced ring map
/// sends f to f composed with the inverse of `map`.
struct Morphism {
    PointConfigPtr source;
    PointConfigPtr target;
    MobiusMap map;
    MorphKind kind;
    std::vector<int> perm;  // 0-based: source pole i pairs with target pole perm[i]
    FieldElement c;         // the constant of the classification theorems
    int anchor = -1;        // second kind: source index i0 sent to infinity
};

struct GroupLabel {
    enum class Type { Cyclic, Dihedral, A4, S4, A5 } type;
    int param = 0;  // N for C_N / D_N
    std::string str() const;
};

/// A finite automorphism group with its composition table.
struct GroupTable {
    std::vector<Morphism> elements;
    std::vector<std::vector<int>> mul;  // mul[i][j] = index of elements[i] o elements[j]
    int identity = 0;
    GroupLabel label;

    int order() const { return static_cast<int>(elements.size()); }
    int element_order(int i) const;
    int inverse_of(int i) const;
};

ExtPoint mobius_apply(const MobiusMap& m, const ExtPoint& p);

// All ring isomorphisms R_b -> R_a (equivalently Lie isomorphisms), as
// morphisms with source b and target a. Empty iff the algebras are not
// isomorphic. Throws InfiniteGroup for n = 1.
std::vector<Morphism> find_isomorphisms(const PointConfigPtr& a, const PointConfigPtr& b);

// Image of f (over the morphism's source) under the induced ring map.
RatFunc apply_to_rfunc(const Morphism& m, const RatFunc& f);
// Image of a derivation under the induced Lie map.
Derivation apply_to_deriv(const Morphism& m, const Derivation& x);

GroupTable automorphism_group(const PointConfigPtr& a);

// Identifies a group from its order and element-order multiset.
GroupLabel classify_group(const std::vector<Morphism>& elements,
                          const std::vector<std::vector<int>>& mul, int identity);

// The subgroup of first-kind automorphisms (always cyclic).
GroupTable first_kind_subgroup(const PointConfigPtr& a);

struct SecondKindTriple {
    int i;   // 0-based
    int ip;  // 0-based
    FieldElement c;
};

// The set S_a of Theorem 3.4(b), by direct set comparison over candidate c.
std::vector<SecondKindTriple> second_kind_set(const PointConfigPtr& a);

struct IsoClassReport {
    bool first_kind = false;
    bool second_kind = false;
};

IsoClassReport iso_class_membership(const PointConfigPtr& a, const PointConfigPtr& b);

}  // namespace npv

#endif
