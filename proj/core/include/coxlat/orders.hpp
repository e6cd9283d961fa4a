#pragma once

#include <vector>

#include "coxlat/rootsys.hpp"

namespace coxlat {

// All reduced words of w, as 0-based generator sequences in lexicographic
// order.  The identity contributes one empty word.
std::vector<std::vector<int>> reduced_words(const GroupElement& w);

// The positive-root sequence carried by each reduced word of w: the word
// (a_1, ..., a_n) yields beta_i = s_{a_1} ... s_{a_{i-1}} (alpha_{a_i}),
// reported as positive table indices.  Each sequence lists the inversion
// set of w, and every prefix of it is itself an inversion set.  Sequences
// appear in the order of reduced_words(w).
std::vector<std::vector<int>> admissible_orders_of(const RootTable& t,
                                                   const GroupElement& w);

// All total orders of the full positive system in which every initial
// section is biclosed, each as a sequence of positive table indices.
// Needs a complete table; throws truncation_error otherwise.
std::vector<std::vector<int>> enumerate_reflection_orders(const RootTable& t);

// Elements reachable from the identity by repeated right multiplication
// with reflections s_r for r in gamma, where each step must strictly
// increase length.  With max_length >= 0 the result keeps only elements of
// length at most max_length; a negative bound means unbounded search and
// requires a complete table.  Output is sorted (ShortLex) and duplicate
// free.  gamma must consist of positive roots.
std::vector<GroupElement> tau_bruhat(const RootTable& t, const RootSet& gamma,
                                     int max_length = -1);

}  // namespace coxlat
