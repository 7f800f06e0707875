#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "powaut/group.hpp"

namespace powaut {

/// Parse failure in a group spec string; position is the 0-based offset of
/// the offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Grammar:
///   Z:<n>                  cyclic of order n
///   D:<n>                  dihedral of order 2n (n >= 3)
///   Q:<n>                  generalized quaternion of order 4n (n >= 2)
///   E:<p>^<k>              elementary abelian p^k
///   prod(<spec>,<spec>)    direct product
///   perm:<degree>:<cycles> closure of permutation generators; generators
///                          separated by ';', each in cycle notation like
///                          "(0 1 2)(3 4)"
///   table:<path>           multiplication table file (first line n, then n*n
///                          0-based indices)
FiniteGroup parse_group_spec(const std::string& spec);

}  // namespace powaut
