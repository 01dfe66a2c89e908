#pragma once

#include "cyclotomic.hpp"
#include "group.hpp"

namespace modrep {

struct IrrepLabel {
    std::string name;
    i64 dim = 0;
    std::string series;  // trivial / steinberg / principal / discrete / half-principal / half-discrete
    bool factors_through_psl = false;
    int dual_index = -1;  // index of the dual irrep (self for self-dual)
    int pair_index = -1;  // partner within a same-dimension pair (dual or Galois), -1 if none
};

struct CharacterTable {
    GroupDescriptor group;
    std::vector<ConjugacyClass> classes;
    std::vector<IrrepLabel> irreps;
    std::vector<std::vector<Cyc>> values;  // irreps x classes
    i64 field_modulus = 1;                 // values live in Q(zeta_m)
    std::string naming_note;

    int irrep_by_name(const std::string& n) const;
    int class_by_name(const std::string& n) const;
    const Cyc& at(int irrep, int cls) const { return values[irrep][cls]; }
    i64 order() const { return group.order; }
};

CharacterTable character_table(const GroupDescriptor& g);

struct OrthViolation {
    std::string kind;  // "row" or "column"
    int i, j;
    std::string value;
};

struct OrthReport {
    bool ok = true;
    i64 checked_pairs = 0;
    std::vector<OrthViolation> violations;  // empty iff ok
};

// exact row and column orthogonality; any nonzero deviation is a violation
OrthReport verify_orthogonality(const CharacterTable& t);

// order of the Schur multiplier of PSL(2,p), p >= 5 (a known constant)
i64 schur_constant(i64 p);

} // namespace modrep
