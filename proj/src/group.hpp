#pragma once

#include "intutil.hpp"
#include <array>
#include <string>
#include <vector>

namespace modrep {

enum class Variant { SL2, PSL2 };

struct MError : std::runtime_error {
    std::string kind;
    MError(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

// 2x2 matrix over F_p with determinant 1, entries reduced to 0..p-1.
// Projective elements are normalized so the first nonzero entry (scanning
// a,b,c,d) lies in 1..(p-1)/2.
struct GroupElement {
    i64 p;
    std::array<i64, 4> m;  // a b c d
    bool projective;

    static GroupElement make(i64 p, i64 a, i64 b, i64 c, i64 d, bool projective);
    GroupElement mul(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement pow(i64 k) const;
    i64 trace() const { return mod_pos(m[0] + m[3], p); }
    bool is_identity() const;
    i64 key() const;  // injective encoding for hashing/sorting

    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.key() == y.key() && x.projective == y.projective;
    }
};

struct GroupDescriptor {
    i64 p = 0;
    Variant variant = Variant::SL2;
    i64 order = 0;
};

struct ConjugacyClass {
    GroupElement rep;
    i64 size = 0;
    i64 element_order = 0;
    std::string name;
    int inverse_class = -1;
    // power_to_class[j] = index of the class of rep^j, for 0 <= j < element_order
    std::vector<int> power_to_class;
};

GroupDescriptor build_group(i64 p, Variant variant);

// Closed-form conjugacy classes (centre, unipotent split by residue type,
// split / non-split semisimple indexed by torus exponent).  PSL classes are
// obtained by fusing SL classes under negation.
std::vector<ConjugacyClass> conjugacy_classes(const GroupDescriptor& g);

// Brute-force oracle: enumerate all elements and partition by conjugation.
// Feasible for p <= 31; used by tests to guard the closed form.
std::vector<ConjugacyClass> conjugacy_classes_bruteforce(const GroupDescriptor& g);

// class of rep^j for arbitrary integer j
int power_class(const std::vector<ConjugacyClass>& classes, int c, i64 j);

// index of the class containing a given element (closed-form classifier)
int classify_element(const GroupDescriptor& g,
                     const std::vector<ConjugacyClass>& classes,
                     const GroupElement& x);

} // namespace modrep
