#pragma once

#include "resfold/matrix.hpp"

namespace resfold {

/// Identifies B_2 with H + H^*. Column k of `embed` is e_{k+1} for k < n and
/// e'_{k-n+1} otherwise, written in the coordinates of B_2; `form` is the
/// Gram matrix of B_2 in those coordinates.
struct HyperbolicFrame {
  int n = 0;
  PolyMatrix embed;
  PolyMatrix form;

  PolyMatrix H() const { return embed.columns(0, n); }
  PolyMatrix Hstar() const { return embed.columns(n, n); }
  /// embed^T form embed is the standard hyperbolic matrix and embed is invertible.
  bool valid() const;
  /// Coordinates of B_2 vectors (as columns) in the frame basis.
  PolyMatrix to_frame(const PolyMatrix& v) const;
};

}  // namespace resfold
