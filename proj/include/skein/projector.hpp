#pragma once

#include <vector>

#include "skein/tl_element.hpp"

namespace skein {

/// Word in the braid group B_n.  A letter +i is sigma_i, -i its inverse.
struct BraidWord {
  int n = 0;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
};

/// Permutation of {1..n} in one-line notation: pi[j-1] is the image of j.
/// Strand j of a braid ends at position pi(j).
using Permutation = std::vector<int>;

int inversion_count(const Permutation& pi);
/// Permutation traced out by a braid word (signs ignored).
Permutation underlying_permutation(const BraidWord& w);

/// Positive reduced word for pi, built by insertion sort.
BraidWord permutation_braid(const Permutation& pi);
/// Another positive reduced word for pi, built by moving each target value
/// into place from the top (selection order).  Used to check that the
/// resolution does not depend on the reduced word chosen.
BraidWord permutation_braid_selection(const Permutation& pi);

/// One elementary piece of a tangle read left to right.  Positions are
/// 1-based from the top of the current width.
struct Slice {
  enum class Kind { Cap, Cup, Crossing, Projector };
  Kind kind;
  int position;
  /// Crossing: +1 or -1.  Projector: the number of strands k.
  int param = 0;
};

/// A tangle in a rectangle written as a sequence of elementary slices.
class SliceWord {
 public:
  explicit SliceWord(int width_in) : width_in_(width_in), width_(width_in) {}

  /// Join strands p and p+1 (width w -> w-2).
  SliceWord& cap(int p);
  /// Create a new arc at positions p and p+1 (width w -> w+2).
  SliceWord& cup(int p);
  /// sigma_p (sign +1) or its inverse (sign -1) between strands p and p+1.
  SliceWord& cross(int p, int sign);
  /// f_k on strands p..p+k-1.
  SliceWord& projector(int p, int k);

  int width_in() const { return width_in_; }
  int width_out() const { return width_; }
  const std::vector<Slice>& slices() const { return slices_; }

 private:
  int width_in_;
  int width_;
  std::vector<Slice> slices_;
};

/// Kauffman bracket state sum: sigma_i -> A*1 + A^-1*e_i, its inverse with
/// A and A^-1 swapped, closed loops -> d.  Inserted projectors are expanded
/// when their slice is reached.
TLElement resolve(const SliceWord& word);
TLElement resolve(const BraidWord& word);

/// Jones-Wenzl projector via Wenzl's recursion.  Cached; thread safe.
const TLElement& jones_wenzl(int n);
/// Jones-Wenzl projector as the normalised braid symmetrizer
/// (1/[n]!) sum_pi (A^3)^{|pi|} b_pi.  Cost grows like n!.
TLElement jones_wenzl_constructive(int n);

/// Close the bottom strand (boundary points n and n+1) of an element of TL_n.
TLElement partial_trace_top(const TLElement& x);

/// Encircle the b strands of x by a loop made of a parallel strands carrying
/// f_a.  For x = f_b the result is varsigma(a, b) f_b.
TLElement encircle(int a, const TLElement& x);

}  // namespace skein
