#pragma once

#include <string>
#include <vector>

#include "autz/criteria.hpp"
#include "autz/io.hpp"

namespace autz {

/// The built-in verification corpus: p in {2, 3, 5}, orders up to 2187,
/// coclass 1..5 and class 2..6. Expected decisions were fixed from the
/// brute-force count of central automorphisms.
inline Manifest default_corpus() {
  constexpr auto M = Decision::Minimal;
  constexpr auto N = Decision::NotMinimal;
  constexpr auto U = Decision::Undecided;
  Manifest m;
  auto add = [&](std::string name, std::string spec, Decision expected) {
    m.entries.push_back({std::move(name), "builtin:" + std::move(spec), expected});
  };

  // 2-groups of maximal class.
  add("D8", "dihedral:8", M);
  add("Q8", "quaternion:8", M);
  for (int order : {16, 32, 64, 128}) {
    add("D" + std::to_string(order), "dihedral:" + std::to_string(order), N);
    add("Q" + std::to_string(order), "quaternion:" + std::to_string(order), N);
    add("SD" + std::to_string(order), "semidihedral:" + std::to_string(order), N);
  }

  // Modular and extraspecial groups (class 2).
  add("M16", "modular:2:16", N);
  add("M32", "modular:2:32", N);
  add("M27", "modular:3:27", M);
  add("M81", "modular:3:81", N);
  add("M125", "modular:5:125", M);
  add("ES32+", "extraspecial:2:32:plus", M);
  add("ES32-", "extraspecial:2:32:minus", M);
  add("ES27+", "extraspecial:3:27:plus", M);
  add("ES27-", "extraspecial:3:27:minus", M);
  add("ES125+", "extraspecial:5:125:plus", M);
  add("ES125-", "extraspecial:5:125:minus", M);
  add("ES243+", "extraspecial:3:243:plus", M);
  add("ES243-", "extraspecial:3:243:minus", M);

  // Unitriangular groups and wreath products.
  add("Heis(2,1)", "heisenberg:2:1", M);
  add("Heis(2,2)", "heisenberg:2:2", M);
  add("Heis(3,1)", "heisenberg:3:1", M);
  add("Heis(3,2)", "heisenberg:3:2", M);
  add("UT4(2)", "unitriangular4:2", N);
  add("UT4(3)", "unitriangular4:3", N);
  add("C2wrC2", "wreath:2", M);
  add("C3wrC3", "wreath:3", N);

  // Direct products.
  add("D8xC2", "dihedral:8*cyclic:2", N);
  add("D16xC2", "dihedral:16*cyclic:2", N);
  add("D16xC4", "dihedral:16*cyclic:4", N);
  add("D16xC2xC2", "dihedral:16*elementary:2:2", N);
  add("D32xC2", "dihedral:32*cyclic:2", N);
  add("D32xC4", "dihedral:32*cyclic:4", N);
  add("Q16xC2", "quaternion:16*cyclic:2", N);
  add("D8xD8", "dihedral:8*dihedral:8", N);
  add("Heis(2,2)xC2", "heisenberg:2:2*cyclic:2", N);
  add("UT4(2)xC2", "unitriangular4:2*cyclic:2", N);
  add("C2^2xUT4(2)", "elementary:2:2*unitriangular4:2", U);
  add("C3wrC3xC3", "wreath:3*cyclic:3", N);

  // Split metacyclic and abelian-by-cyclic extensions.
  add("C16:C4", "metacyclic:16:4:3", M);
  add("C27:C9", "metacyclic:27:9:4", M);
  add("C9:C9", "metacyclic:9:9:4", N);
  add("AbC(729,a)", "abelian_by_cyclic:3:2,2:2:1,3,1,7", M);
  add("AbC(2187)", "abelian_by_cyclic:3:3,2:2:16,4,24,4", M);

  // Permutation groups inside Sylow subgroups of S_16 and S_27, chosen so
  // that Minimal instances of class >= 3 are present.
  add("P32", "perm:16:(0 8)(1 9)(2 10)(3 11)(4 12)(5 13)(6 14)(7 15):"
             "(0 10 6 14)(1 11 7 15)(2 8 4 12)(3 9 5 13)",
      M);
  add("P256", "perm:16:(0 14 2 12)(1 15 3 13)(4 8)(5 9)(6 10)(7 11):"
              "(0 13 5 8 2 14 6 10)(1 12 4 9 3 15 7 11)",
      M);
  add("P1024", "perm:16:(0 10 2 8)(1 11 3 9)(4 14 6 12)(5 15 7 13):"
               "(0 12 1 13)(2 14)(3 15)(4 8 6 10)(5 9 7 11)",
      M);
  add("P729", "perm:27:(0 9 20)(1 10 18)(2 11 19)(3 12 21)(4 13 22)(5 14 23)(6 15 24)(7 16 25)(8 17 26):"
              "(0 21 15)(1 22 16)(2 23 17)(3 24 9 4 25 10 5 26 11)(6 18 14 8 20 13 7 19 12)",
      M);
  return m;
}

}  // namespace autz
