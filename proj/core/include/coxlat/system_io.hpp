#pragma once

#include <string>

#include "coxlat/rootsys.hpp"

namespace coxlat {

/*
  Text description of a system, one directive per line:

    rank N
    m i j = v        1 <= i < j <= N, v in {2,3,4,5,6,inf}
    bond i j = p/q   value of the pairing on an inf edge, at most -1

  Unlisted pairs default to 2; blank lines are skipped.
*/
SystemPtr parse_system_text(const std::string& text);

// Same format read from a file; throws input_error when unreadable.
SystemPtr parse_system_file(const std::string& path);

// Built-in shorthands: A<n>, B<n>, G2, H2, I<m> (dihedral), Ainf
// (infinite dihedral with the affine pairing).
SystemPtr named_system(const std::string& name);

// A file path if one exists, otherwise a built-in shorthand.
SystemPtr load_system(const std::string& where);

// Word literal over 1-based generators, "1.2.1"; "e" is the identity.
GroupElement parse_element(SystemPtr sys, const std::string& text);

// Root literal "#k" or "-#k", 1-based table position, signed index out.
int parse_root(const RootTable& t, const std::string& text);

// Set literal "{#1,-#2}"; spaces around entries are tolerated.
RootSet parse_root_set(const RootTable& t, const std::string& text);

}  // namespace coxlat
